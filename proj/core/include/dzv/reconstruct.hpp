#ifndef DZV_RECONSTRUCT_HPP
#define DZV_RECONSTRUCT_HPP

#include <optional>

#include "dzv/bigreal.hpp"
#include "dzv/rational.hpp"

namespace dzv {

// Recovers p/q with q <= max_denominator from a ball, by continued fractions
// on the exact (dyadic) midpoint.  Succeeds only if some convergent lies
// within 2x the error bound of the midpoint AND that convergent is provably
// the unique such fraction with denominator <= max_denominator; otherwise
// returns nullopt ("insufficient precision"), never a guess.
std::optional<Rational> rational_reconstruct(const BigReal& x, const Integer& max_denominator);

}  // namespace dzv

#endif
