#include <doctest.h>

#include <random>

#include "dzv/matrix.hpp"

using namespace dzv;

namespace {

// Plain textbook Gauss elimination over Q, independent of the library path.
int rank_oracle(RationalMatrix m) {
  int r = 0;
  for (int col = 0; col < m.cols() && r < m.rows(); ++col) {
    int pr = -1;
    for (int i = r; i < m.rows(); ++i)
      if (m.at(i, col) != 0) {
        pr = i;
        break;
      }
    if (pr < 0) continue;
    for (int j = 0; j < m.cols(); ++j) std::swap(m.at(r, j), m.at(pr, j));
    for (int i = 0; i < m.rows(); ++i) {
      if (i == r || m.at(i, col) == 0) continue;
      Rational f = m.at(i, col) / m.at(r, col);
      for (int j = 0; j < m.cols(); ++j) m.at(i, j) -= f * m.at(r, j);
    }
    ++r;
  }
  return r;
}

}  // namespace

TEST_CASE("kernel basics") {
  CHECK(RationalMatrix::identity(3).kernel().empty());

  RationalMatrix m(1, 2);
  m.at(0, 0) = 1;
  m.at(0, 1) = -1;
  auto k = m.kernel();
  REQUIRE(k.size() == 1);
  CHECK(k[0][0] == 1);
  CHECK(k[0][1] == 1);
}

TEST_CASE("kernel vectors annihilate and rank-nullity holds") {
  std::mt19937 rng(4242);
  std::uniform_int_distribution<int> dist(-5, 5);
  for (int trial = 0; trial < 25; ++trial) {
    int R = 2 + trial % 5, C = 2 + (trial * 7) % 6;
    RationalMatrix m(R, C);
    for (int i = 0; i < R; ++i)
      for (int j = 0; j < C; ++j) {
        Rational q(dist(rng), 1 + (trial % 3));
        q.canonicalize();
        m.at(i, j) = q;
      }
    auto ker = m.kernel();
    CHECK(m.rank() + static_cast<int>(ker.size()) == C);
    CHECK(m.rank() == rank_oracle(m));
    for (const auto& v : ker) {
      for (int i = 0; i < R; ++i) {
        Rational acc = 0;
        for (int j = 0; j < C; ++j) acc += m.at(i, j) * v[j];
        CHECK(acc == 0);
      }
    }
  }
}

TEST_CASE("solve") {
  RationalMatrix m = RationalMatrix::from_rows({
      {Rational(2), Rational(1)},
      {Rational(1), Rational(-1)},
  });
  auto x = m.solve({Rational(5), Rational(1)});
  REQUIRE(x.has_value());
  CHECK((*x)[0] == 2);
  CHECK((*x)[1] == 1);

  RationalMatrix bad = RationalMatrix::from_rows({
      {Rational(1), Rational(1)},
      {Rational(2), Rational(2)},
  });
  CHECK(!bad.solve({Rational(0), Rational(1)}).has_value());
  CHECK(bad.solve({Rational(1), Rational(2)}).has_value());
}

TEST_CASE("row space membership and determinism") {
  RationalMatrix m = RationalMatrix::from_rows({
      {Rational(1), Rational(2), Rational(3)},
      {Rational(0), Rational(1), Rational(1)},
  });
  CHECK(m.row_space_contains({Rational(1), Rational(3), Rational(4)}));
  CHECK(!m.row_space_contains({Rational(0), Rational(0), Rational(1)}));
  CHECK(m.kernel() == m.kernel());
}

TEST_CASE("left kernel via transpose") {
  // C_4 = [C_4' : C_4''] from the weight-4 coproduct matrices
  RationalMatrix c4 = RationalMatrix::from_rows({
      {Rational(-1), Rational(0)},
      {Rational(2), Rational(1)},
      {Rational(0), Rational(-1)},
  });
  auto lk = c4.left_kernel();
  REQUIRE(lk.size() == 1);
  // the annihilator direction is (2, 1, 1)
  std::vector<Rational> v = lk[0];
  Rational scale = v[0] / 2;
  CHECK(v[1] == scale);
  CHECK(v[2] == scale);
}
