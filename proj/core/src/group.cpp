#include "dzv/group.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace dzv {

GroupElement::GroupElement(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d)
    : a_(a), b_(b), c_(c), d_(d) {
  std::int64_t det = a_ * d_ - b_ * c_;
  if (det != 1 && det != -1) throw std::invalid_argument("GroupElement: |det| != 1");
  std::int64_t lead = a_ != 0 ? a_ : b_ != 0 ? b_ : c_ != 0 ? c_ : d_;
  if (lead < 0) {
    a_ = -a_;
    b_ = -b_;
    c_ = -c_;
    d_ = -d_;
  }
}

GroupElement GroupElement::operator*(const GroupElement& o) const {
  return {a_ * o.a_ + b_ * o.c_, a_ * o.b_ + b_ * o.d_,
          c_ * o.a_ + d_ * o.c_, c_ * o.b_ + d_ * o.d_};
}

GroupElement GroupElement::inverse() const {
  // adjugate; determinant sign is absorbed by the PGL_2 quotient
  return {d_, -b_, -c_, a_};
}

GroupElement GroupElement::pow(long e) const {
  GroupElement base = e < 0 ? inverse() : *this;
  long n = std::abs(e);
  GroupElement r = identity();
  while (n > 0) {
    if (n & 1) r = r * base;
    base = base * base;
    n >>= 1;
  }
  return r;
}

GroupRingElement::GroupRingElement(std::initializer_list<std::pair<long, GroupElement>> init) {
  for (const auto& [c, g] : init) add(Integer(c), g);
}

GroupRingElement& GroupRingElement::add(const Integer& coeff, const GroupElement& g) {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), g,
                             [](const auto& t, const GroupElement& e) { return t.second < e; });
  if (it != terms_.end() && it->second == g) {
    it->first += coeff;
    if (it->first == 0) terms_.erase(it);
  } else if (coeff != 0) {
    terms_.insert(it, {coeff, g});
  }
  return *this;
}

GroupRingElement GroupRingElement::one_plus_S() {
  return GroupRingElement{{1, GroupElement::identity()}, {1, GroupElement::S()}};
}

GroupRingElement GroupRingElement::one_plus_U_U2() {
  return GroupRingElement{{1, GroupElement::identity()},
                          {1, GroupElement::U()},
                          {1, GroupElement::U() * GroupElement::U()}};
}

}  // namespace dzv
