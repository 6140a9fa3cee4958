#ifndef DZV_GROUP_HPP
#define DZV_GROUP_HPP

#include <compare>
#include <cstdint>
#include <vector>

#include "dzv/rational.hpp"

namespace dzv {

// Element of PGL_2(Z): an integer 2x2 matrix with determinant +-1, stored up
// to overall sign.  The canonical representative has its first nonzero entry
// (in order a, b, c, d) positive, so equality is plain memberwise equality.
class GroupElement {
 public:
  GroupElement() : a_(1), b_(0), c_(0), d_(1) {}
  GroupElement(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d);

  static GroupElement identity() { return {}; }
  static GroupElement S() { return {0, -1, 1, 0}; }
  static GroupElement T() { return {1, 1, 0, 1}; }
  static GroupElement U() { return {1, -1, 1, 0}; }  // U = TS
  static GroupElement eps() { return {0, 1, 1, 0}; }
  static GroupElement delta() { return {-1, 0, 0, 1}; }

  std::int64_t a() const { return a_; }
  std::int64_t b() const { return b_; }
  std::int64_t c() const { return c_; }
  std::int64_t d() const { return d_; }
  std::int64_t det() const { return a_ * d_ - b_ * c_; }

  GroupElement operator*(const GroupElement& o) const;
  GroupElement inverse() const;
  GroupElement pow(long e) const;

  friend bool operator==(const GroupElement&, const GroupElement&) = default;
  friend auto operator<=>(const GroupElement&, const GroupElement&) = default;

 private:
  std::int64_t a_, b_, c_, d_;
};

// Formal Z-linear combination of group elements; zero coefficients are pruned
// and terms are kept sorted so the representation is canonical.
class GroupRingElement {
 public:
  GroupRingElement() = default;
  GroupRingElement(std::initializer_list<std::pair<long, GroupElement>> init);

  GroupRingElement& add(const Integer& coeff, const GroupElement& g);
  const std::vector<std::pair<Integer, GroupElement>>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }

  // 1 + S and 1 + U + U^2, the two defining elements for period polynomials.
  static GroupRingElement one_plus_S();
  static GroupRingElement one_plus_U_U2();

 private:
  std::vector<std::pair<Integer, GroupElement>> terms_;
};

}  // namespace dzv

#endif
