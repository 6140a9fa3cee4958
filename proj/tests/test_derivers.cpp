#include <doctest.h>

#include "dzv/derivers.hpp"
#include "dzv/mzv.hpp"
#include "dzv/reconstruct.hpp"

using namespace dzv;

namespace {

HomogeneousPoly poly_from(std::initializer_list<std::pair<int, Rational>> terms, int w) {
  HomogeneousPoly p(w);
  for (auto& [xp, c] : terms) p.set_coeff(xp, c);
  return p;
}

HomogeneousPoly xw_minus_yw(int w) {
  return poly_from({{w, 1}, {0, -1}}, w);
}

// X^2 Y^2 (X^2 - Y^2)^3
HomogeneousPoly w10_plus0() { return poly_from({{8, 1}, {6, -3}, {4, 3}, {2, -1}}, 10); }

// XY (X^2-Y^2)^2 (4X^4 - 17 X^2Y^2 + 4Y^4)
HomogeneousPoly w10_minus() {
  return poly_from({{9, 4}, {7, -25}, {5, 42}, {3, -25}, {1, 4}}, 10);
}

Rational coeff_of(const RelationVector& v, const DzSymbol& s) {
  auto it = v.terms.find(s);
  return it == v.terms.end() ? Rational(0) : it->second;
}

Evaluator& ev() {
  static Evaluator e(50);
  return e;
}

}  // namespace

TEST_CASE("gkz on X^(k-2) - Y^(k-2) gives the 3:1 sum relation") {
  RelationVector rel = gkz(xw_minus_yw(10));
  CHECK(*rel.single_zeta == 0);
  for (int r = 1; r <= 10; ++r) {
    Rational expect = (r % 2 == 1) ? 3 : -1;
    CHECK(coeff_of(rel, sym_rs(r, 12 - r)) == expect);
  }
  CHECK(gkz(HomogeneousPoly(10)).terms_zero());
}

TEST_CASE("gkz reproduces the weight-12 period relation exactly") {
  HomogeneousPoly P = (xw_minus_yw(10) * Rational(-36, 691) + w10_plus0()) * Rational(145110);
  RelationVector rel = gkz(P);
  // presented with the first coefficient positive; no rescaling
  rel.orient();
  CHECK(coeff_of(rel, sym_rs(1, 11)) == 22680);
  CHECK(coeff_of(rel, sym_rs(3, 9)) == 13006);
  CHECK(coeff_of(rel, sym_rs(5, 7)) == -29145);
  CHECK(coeff_of(rel, sym_rs(7, 5)) == -35364);
  CHECK(coeff_of(rel, sym_rs(9, 3)) == 22680);
  CHECK(coeff_of(rel, sym_rs(2, 10)) == -7560);
  CHECK(coeff_of(rel, sym_rs(4, 8)) == 2114);
  CHECK(coeff_of(rel, sym_rs(6, 6)) == Rational(42965, 3));
  CHECK(coeff_of(rel, sym_rs(8, 4)) == 2114);
  CHECK(coeff_of(rel, sym_rs(10, 2)) == -7560);
  CHECK(*rel.single_zeta == 1382);
  CHECK(is_consequence(rel, false));
}

TEST_CASE("gkz structural assertions hold on every basis element") {
  for (int w = 2; w <= 22; w += 2) {
    for (const auto& b : basis_W(w, +1).basis) {
      RelationVector rel = gkz(b);  // internal symmetry asserts must not fire
      CHECK(is_consequence(rel, false));
    }
  }
  CHECK_THROWS(gkz(w10_minus()));
}

TEST_CASE("ma_odd reproduces the weight-13 relation") {
  RelationVector rel = ma_odd(w10_minus());
  rel.normalize();
  CHECK(rel.weight == 13);
  CHECK(coeff_of(rel, sym_rs(3, 10)) == 12);
  CHECK(coeff_of(rel, sym_rs(5, 8)) == 14);
  CHECK(coeff_of(rel, sym_rs(7, 6)) == -5);
  CHECK(coeff_of(rel, sym_rs(9, 4)) == -18);
  CHECK(rel.terms.size() == 4);
  CHECK(*rel.single_zeta == Rational(3, 2));
  CHECK(is_consequence(rel, false));
  CHECK_THROWS(ma_odd(w10_plus0()));
}

TEST_CASE("ma_even reproduces the weight-11 relation") {
  RelationVector rel = ma_even(w10_plus0());
  rel.normalize();
  CHECK(rel.weight == 11);
  CHECK(coeff_of(rel, sym_rs(3, 8)) == 14);
  CHECK(coeff_of(rel, sym_rs(5, 6)) == 10);
  CHECK(coeff_of(rel, sym_rs(7, 4)) == -21);
  CHECK(rel.terms.size() == 3);
  CHECK(*rel.single_zeta == Rational(3, 2));
  CHECK(is_consequence(rel, false));
  // the Eisenstein direction produces the zero relation
  CHECK(ma_even(xw_minus_yw(10)).terms_zero());
}

TEST_CASE("ma relations are formal consequences across weights") {
  for (int w = 10; w <= 18; w += 2) {
    for (const auto& b : basis_W(w, -1).basis) CHECK(is_consequence(ma_odd(b), false));
    for (const auto& b : basis_W(w, +1).basis) CHECK(is_consequence(ma_even(b), false));
  }
}

TEST_CASE("relation counts per family match the cusp form dimensions") {
  // at odd target weight kappa: ma_odd contributes dim S_{kappa-1} relations
  // and ma_even contributes dim S_{kappa+1}; together they are independent
  for (int kappa = 11; kappa <= 19; kappa += 2) {
    RationalMatrix modd(0, kappa + 1), meven(0, kappa + 1), both(0, kappa + 1);
    auto coords = [&](const RelationVector& rel) {
      std::vector<Rational> x(static_cast<size_t>(rel.weight) + 1, Rational(0));
      for (const auto& [s, c] : rel.terms) x[s.i1] = c;
      x[0] = *rel.single_zeta;
      return x;
    };
    for (const auto& b : basis_W(kappa - 3, -1).basis) {
      auto row = coords(ma_odd(b));
      modd.append_row(row);
      both.append_row(row);
    }
    for (const auto& b : basis_W(kappa - 1, +1).basis) {
      RelationVector r = ma_even(b);
      if (!r.terms_zero()) {
        auto row = coords(r);
        meven.append_row(row);
        both.append_row(row);
      }
    }
    CHECK(modd.rank() == dim_cuspforms(kappa - 1));
    CHECK(meven.rank() == dim_cuspforms(kappa + 1));
    CHECK(both.rank() == dim_cuspforms(kappa - 1) + dim_cuspforms(kappa + 1));
  }
}

TEST_CASE("cuspidal half relations") {
  auto C10 = cuspidal_subspace(10);
  RelationVector a12 = cuspidal_half(C10.basis[0], 'a');
  a12.normalize();
  CHECK(coeff_of(a12, sym_rs(1, 11)) == 22680);
  CHECK(coeff_of(a12, sym_rs(3, 9)) == 13006);
  CHECK(coeff_of(a12, sym_rs(5, 7)) == -29145);
  CHECK(coeff_of(a12, sym_rs(7, 5)) == -35364);
  CHECK(coeff_of(a12, sym_rs(9, 3)) == 22680);
  CHECK(*a12.single_zeta == 0);

  auto C14 = cuspidal_subspace(14);
  RelationVector a16 = cuspidal_half(C14.basis[0], 'a');
  a16.normalize();
  const long expect[][3] = {{1, 15, 1081080},  {3, 13, 842358},  {5, 11, -275295},
                            {7, 9, -1400182},  {9, 7, -1360395}, {11, 5, -351252},
                            {13, 3, 1081080}};
  for (auto& [r, s, c] : expect)
    CHECK(coeff_of(a16, sym_rs(static_cast<int>(r), static_cast<int>(s))) == Rational(c));

  // the second weight-16 identity lives at weight 15 (the P^+-derivative recipe)
  RelationVector c15 = cuspidal_half(C14.basis[0], 'c');
  c15.normalize();
  CHECK(coeff_of(c15, sym_rs(3, 12)) == 22);
  CHECK(coeff_of(c15, sym_rs(5, 10)) == 30);
  CHECK(coeff_of(c15, sym_rs(7, 8)) == 7);
  CHECK(coeff_of(c15, sym_rs(9, 6)) == -20);
  CHECK(coeff_of(c15, sym_rs(11, 4)) == -33);

  // and the third at weight 17 (the W^- recipe)
  RelationVector b17 = cuspidal_half(basis_W(14, -1).basis[0], 'b');
  b17.normalize();
  CHECK(coeff_of(b17, sym_rs(3, 14)) == 156);
  CHECK(coeff_of(b17, sym_rs(5, 12)) == 242);
  CHECK(coeff_of(b17, sym_rs(7, 10)) == 153);
  CHECK(coeff_of(b17, sym_rs(9, 8)) == -56);
  CHECK(coeff_of(b17, sym_rs(11, 6)) == -215);
  CHECK(coeff_of(b17, sym_rs(13, 4)) == -234);

  RelationVector c11 = cuspidal_half(w10_plus0(), 'c');
  c11.normalize();
  CHECK(coeff_of(c11, sym_rs(3, 8)) == 14);
  CHECK(coeff_of(c11, sym_rs(5, 6)) == 10);
  CHECK(coeff_of(c11, sym_rs(7, 4)) == -21);

  CHECK_THROWS(cuspidal_half(xw_minus_yw(10), 'a'));  // not cuspidal
}

TEST_CASE("hirose variant i examples") {
  RelationVector r4 = hirose(poly_from({{3, 1}, {1, -1}}, 4), 1);
  r4.normalize();
  CHECK(coeff_of(r4, sym_j(1, 3, 0)) == 1);
  CHECK(coeff_of(r4, sym_j(3, 1, 0)) == -1);
  CHECK(!r4.single_zeta.has_value());
  auto rec = ev().reconstruct_single(r4, Integer(1000000));
  REQUIRE(rec.has_value());
  CHECK(*rec == Rational(11, 6));

  RelationVector r8 = hirose(poly_from({{7, 1}, {5, -2}, {3, 2}, {1, -1}}, 8), 1);
  r8.normalize();
  CHECK(coeff_of(r8, sym_j(1, 7, 0)) == 7);
  CHECK(coeff_of(r8, sym_j(3, 5, 0)) == -2);
  CHECK(coeff_of(r8, sym_j(5, 3, 0)) == 2);
  CHECK(coeff_of(r8, sym_j(7, 1, 0)) == -7);
  auto rec8 = ev().reconstruct_single(r8, Integer(1000000));
  REQUIRE(rec8.has_value());
  CHECK(*rec8 == Rational(29, 2));
}

TEST_CASE("hirose variants iii and iv examples") {
  RelationVector r3 = hirose(w10_plus0(), 3);
  r3.normalize();
  CHECK(coeff_of(r3, sym_j(2, 0, 8)) == 14);
  CHECK(coeff_of(r3, sym_j(4, 0, 6)) == 75);
  CHECK(coeff_of(r3, sym_j(6, 0, 4)) == 84);
  CHECK(r3.terms.size() == 3);
  auto rec3 = ev().reconstruct_single(r3, Integer(1000000));
  REQUIRE(rec3.has_value());
  CHECK(*rec3 == Rational(59246, 691));

  RelationVector r4 = hirose(w10_minus(), 4);
  r4.normalize();
  CHECK(coeff_of(r4, sym_j(1, 1, 9)) == 48);
  CHECK(coeff_of(r4, sym_j(3, 1, 7)) == 119);
  CHECK(coeff_of(r4, sym_j(5, 1, 5)) == 10);
  CHECK(coeff_of(r4, sym_j(7, 1, 3)) == -144);
  auto rec4 = ev().reconstruct_single(r4, Integer(1000000));
  REQUIRE(rec4.has_value());
  CHECK(*rec4 == 640);
}

TEST_CASE("hirose variant ii recast agrees with the gkz coefficients") {
  // expanding the J-relation into double zetas must reproduce a_{r,s}
  RelationVector rel = expand_to_double_zetas(hirose(w10_plus0(), 2));
  rel.normalize();
  const long expect[][3] = {{3, 9, 14}, {4, 8, 42}, {5, 7, 75},
                            {6, 6, 95}, {7, 5, 84}, {8, 4, 42}};
  for (auto& [r, s, c] : expect)
    CHECK(coeff_of(rel, sym_rs(static_cast<int>(r), static_cast<int>(s))) == Rational(c));
  CHECK(rel.terms.size() == 6);
  auto rec = ev().reconstruct_single(rel, Integer(1000000));
  REQUIRE(rec.has_value());
  CHECK(*rec == Rational(6248, 691));
}

TEST_CASE("bachmann coefficient vectors") {
  RelationVector r10 = bachmann(w10_plus0());
  r10.normalize();
  const long expect[][3] = {{3, 9, 14}, {4, 8, 42}, {5, 7, 75},
                            {6, 6, 95}, {7, 5, 84}, {8, 4, 42}};
  for (auto& [r, s, c] : expect)
    CHECK(coeff_of(r10, sym_rs(static_cast<int>(r), static_cast<int>(s))) == Rational(c));
  CHECK(r10.terms.size() == 6);

  // sum formula source X^(k-2) - Y^(k-2) at k = 8: every coefficient 1 over s >= 2
  RelationVector rsum = bachmann(xw_minus_yw(6));
  rsum.normalize();
  for (int r = 1; r <= 6; ++r) CHECK(coeff_of(rsum, sym_rs(r, 8 - r)) == 1);

  // weight 16: X^2Y^2(X^2-Y^2)^3 (2X^4 - X^2Y^2 + 2Y^4)
  HomogeneousPoly p14 =
      poly_from({{12, 2}, {10, -7}, {8, 9}, {6, -8}, {4, 9}, {2, -7}, {0, 0}}, 14);
  // build it honestly by multiplication: (X^2Y^2)(X^2-Y^2)^3 = w10_plus0
  {
    HomogeneousPoly base = w10_plus0();
    HomogeneousPoly q(14);
    for (int i = 0; i <= 10; ++i) {
      if (base.coeff(i) == 0) continue;
      q.set_coeff(i + 4, q.coeff(i + 4) + 2 * base.coeff(i));  // 2X^4
      q.set_coeff(i + 2, q.coeff(i + 2) - base.coeff(i));      // -X^2Y^2
      q.set_coeff(i, q.coeff(i) + 2 * base.coeff(i));          // +2Y^4
    }
    p14 = q;
  }
  RelationVector r14 = bachmann(p14);
  r14.normalize();
  const long e14[][3] = {{3, 13, 66},  {4, 12, 198}, {5, 11, 375}, {6, 10, 555}, {7, 9, 686},
                         {8, 8, 728},  {9, 7, 675},  {10, 6, 555}, {11, 5, 396}, {12, 4, 198}};
  for (auto& [r, s, c] : e14)
    CHECK(coeff_of(r14, sym_rs(static_cast<int>(r), static_cast<int>(s))) == Rational(c));
}

TEST_CASE("kaneko-tsumura pipeline on the worked example") {
  HomogeneousPoly S41 =
      poly_from({{4, Rational(-1, 2)}, {2, Rational(1, 2)}, {0, Rational(-1, 32)}}, 4);
  KtOutput out = kaneko_tsumura(S41);
  CHECK(out.qplus == poly_from({{4, 1}, {2, -10}, {0, 1}}, 4));
  RelationVector rel = out.relation;
  rel.normalize();
  CHECK(coeff_of(rel, sym_rs(1, 5)) == 24);
  CHECK(coeff_of(rel, sym_rs(2, 4)) == 12);
  CHECK(coeff_of(rel, sym_rs(3, 3)) == 2);
  CHECK(coeff_of(rel, sym_rs(4, 2)) == -3);
  CHECK(coeff_of(rel, sym_rs(5, 1)) == -3);
  CHECK(rel.status == RelStatus::conjectural);
  // numeric residual, reported as a check here
  auto rep = ev().verify(rel, 1e-20);
  CHECK(rep.pass);
  // a polynomial outside the span is rejected
  CHECK_THROWS(kaneko_tsumura(xw_minus_yw(4)));
}

TEST_CASE("kt q-plus span dimension matches [(k-2)/4]") {
  CHECK(kt_qplus_rank(4) == 1);
  CHECK(kt_qplus_rank(6) == 1);
  CHECK(kt_qplus_rank(8) == 2);
  CHECK(kt_qplus_rank(10) == 2);
}

TEST_CASE("kt relation vectors annihilate the coproduct matrices") {
  for (int w : {4, 6, 8}) {
    const int k = w + 2;
    CkMatrices ck = ck_matrices(k);
    for (int j = 1; j <= w / 2; ++j) {
      auto d = kaneko_tsumura(stilde(w, j)).relation;
      std::vector<Rational> x(k - 1, Rational(0));
      for (const auto& [s, c] : d.terms) x[s.i1 - 1] = c;
      for (int col = 0; col < ck.cprime.cols(); ++col) {
        Rational acc = 0;
        for (int r = 0; r < k - 1; ++r) acc += x[r] * ck.cprime.at(r, col);
        CHECK(acc == 0);
      }
      for (int col = 0; col < ck.cdoubleprime.cols(); ++col) {
        Rational acc = 0;
        for (int r = 0; r < k - 1; ++r) acc += x[r] * ck.cdoubleprime.at(r, col);
        CHECK(acc == 0);
      }
    }
  }
}

TEST_CASE("coproduct matrices match the displayed values") {
  CkMatrices c4 = ck_matrices(4);
  CHECK(c4.cprime == RationalMatrix::from_rows({{-1}, {2}, {0}}));
  CHECK(c4.cdoubleprime == RationalMatrix::from_rows({{0}, {1}, {-1}}));
  CHECK(c4.left_kernel.size() == 1);

  CkMatrices c6 = ck_matrices(6);
  CHECK(c6.cprime == RationalMatrix::from_rows({{-1, -1, -1}, {2, 2, 3}, {0, 0, -3}, {0, 0, 2}, {0, 0, 0}}));
  CHECK(c6.cdoubleprime ==
        RationalMatrix::from_rows({{0, 0}, {0, 1}, {0, -3}, {1, 3}, {-1, -1}}));
  CHECK(c6.left_kernel.size() == 2);

  CkMatrices c8 = ck_matrices(8);
  CHECK(c8.cprime == RationalMatrix::from_rows({{-1, -1, -1, -1, -1},
                                                {2, 2, 3, 4, 5},
                                                {0, 0, -3, -6, -10},
                                                {0, 0, 2, 4, 10},
                                                {0, 0, 0, 0, -5},
                                                {0, 0, 0, 0, 2},
                                                {0, 0, 0, 0, 0}}));
  CHECK(c8.cdoubleprime == RationalMatrix::from_rows(
                               {{0, 0, 0}, {0, 0, 1}, {0, 0, -5}, {0, 1, 10}, {0, -3, -10},
                                {1, 3, 5}, {-1, -1, -1}}));
  CHECK(c8.left_kernel.size() == 2);

  CHECK(ck_matrices(12).left_kernel.size() == 3);
  CHECK(ck_matrices(16).left_kernel.size() == 4);
}

TEST_CASE("weighted sum vector lies in the left kernel of C_k") {
  for (int k : {4, 6, 8}) {
    RelationVector ws = ttilde_weighted_sum(k);
    CkMatrices ck = ck_matrices(k);
    std::vector<Rational> x(k - 1, Rational(0));
    for (const auto& [s, c] : ws.terms) x[s.i1 - 1] = c;
    for (int col = 0; col < ck.cprime.cols(); ++col) {
      Rational acc = 0;
      for (int r = 0; r < k - 1; ++r) acc += x[r] * ck.cprime.at(r, col);
      CHECK(acc == 0);
    }
    for (int col = 0; col < ck.cdoubleprime.cols(); ++col) {
      Rational acc = 0;
      for (int r = 0; r < k - 1; ++r) acc += x[r] * ck.cdoubleprime.at(r, col);
      CHECK(acc == 0);
    }
  }
}

TEST_CASE("weighted sum formula instantiation at k = 4") {
  RelationVector ws = ttilde_weighted_sum(4);
  CHECK(coeff_of(ws, sym_rs(1, 3)) == 4);
  CHECK(coeff_of(ws, sym_rs(2, 2)) == 2);
  CHECK(coeff_of(ws, sym_rs(3, 1)) == 2);  // 2^0 from j = k-2 plus the extra term
  CHECK(*ws.single_zeta == -3);
  CHECK(ws.kind == ValueKind::t_tilde);
  // coefficient of T~(1, k-1) is 2^(k-2)
  CHECK(coeff_of(ttilde_weighted_sum(10), sym_rs(1, 9)) == 256);
}

TEST_CASE("colored deriver on the level-2 examples") {
  CosetFunction F1;
  F1.level = 2;
  F1.values = {poly_from({{6, 1}}, 6), poly_from({{0, -1}}, 6), poly_from({{6, 1}, {0, -1}}, 6)};
  ColoredOutput out = colored_deriver(F1);
  CHECK(colored_equivalent(out.lhs, out.rhs));
  CHECK(in_pev_subspace(out.lhs));
  // numeric image under Z -> zeta is (3/2) zeta(8)
  BigReal acc(ev().prec());
  for (const auto& [s, c] : out.lhs.terms) acc += ev().value_of(s, ValueKind::colored).mul(c);
  auto rec = rational_reconstruct(acc / ev().zeta(8), Integer(1000000));
  REQUIRE(rec.has_value());
  CHECK(*rec == Rational(3, 2));

  CosetFunction F2;
  F2.level = 2;
  F2.values = {poly_from({{6, 15}, {4, -30}, {2, 15}}, 6),
               poly_from({{4, -15}, {2, 30}, {0, -15}}, 6),
               poly_from({{4, 45}, {2, -45}}, 6)};
  ColoredOutput out2 = colored_deriver(F2);
  CHECK(colored_equivalent(out2.lhs, out2.rhs));
  CHECK(in_pev_subspace(out2.lhs));
  BigReal acc2(ev().prec());
  for (const auto& [s, c] : out2.lhs.terms) acc2 += ev().value_of(s, ValueKind::colored).mul(c);
  auto rec2 = rational_reconstruct(acc2 / ev().zeta(8), Integer(1000000));
  REQUIRE(rec2.has_value());
  // magnitude 1395/256; the sign of the displayed combination is negative,
  // confirmed by direct summation of the defining series
  CHECK(*rec2 == Rational(-1395, 256));
}

TEST_CASE("colored deriver at level 1 recovers gkz") {
  HomogeneousPoly P = (xw_minus_yw(10) * Rational(-36, 691) + w10_plus0()) * Rational(145110);
  CosetFunction F;
  F.level = 1;
  F.values = {P};
  ColoredOutput out = colored_deriver(F);
  RelationVector g = gkz(P);
  // lhs - rhs of the colored statement equals the one-sided gkz vector
  RelationVector diff = out.lhs;
  for (const auto& [s, c] : out.rhs.terms) diff.add(s, -c);
  for (const auto& [s, c] : g.terms) CHECK(coeff_of(diff, sym_colored(s.i1, s.i2, 0, 0)) == c);
  CHECK(coeff_of(diff, sym_colored_single(12, 0)) == *g.single_zeta);
}

TEST_CASE("restricted sum family") {
  auto rels = restricted_sum(12);
  REQUIRE(rels.size() == 2);
  CHECK(is_consequence(rels[0], false));
  CHECK(is_consequence(rels[1], false));
}

TEST_CASE("family metadata") {
  CHECK(family_status(RelationFamily::kaneko_tsumura) == RelStatus::conjectural);
  CHECK(family_status(RelationFamily::ck_kernel) == RelStatus::conjectural);
  CHECK(family_status(RelationFamily::gkz) == RelStatus::proven);
  CHECK(parse_family("ma-even") == RelationFamily::ma_even);
  CHECK(family_name(RelationFamily::bachmann) == "bachmann");
  CHECK_THROWS(parse_family("nope"));
}
