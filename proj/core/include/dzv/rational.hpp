#ifndef DZV_RATIONAL_HPP
#define DZV_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace dzv {

// Exact arithmetic is carried by GMP throughout: mpq_class is always stored
// canonicalized (lowest terms, positive denominator), which is exactly the
// invariant the rest of the library relies on.
using Integer = mpz_class;
using Rational = mpq_class;

Integer binomial(long n, long k);
Integer factorial(long n);

// (x)_m = x (x+1) ... (x+m-1), the ascending factorial.
Integer rising_factorial(long x, long m);

// B_n with the convention B_1 = -1/2.  Values are cached; thread safe.
Rational bernoulli(long n);

Rational pow_rational(const Rational& x, long e);

// "p/q" (or "p" when q == 1); the inverse of parse_rational.
std::string to_fraction_string(const Rational& x);
Rational parse_rational(const std::string& s);

// Scales v so that its entries are coprime integers and the first nonzero
// entry is positive.  Returns the factor v was multiplied by; zero vectors
// are left alone (factor 1).
Rational normalize_coprime(std::vector<Rational>& v);

}  // namespace dzv

#endif
