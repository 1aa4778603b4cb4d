#include <gtest/gtest.h>

#include <map>

#include "gen.hpp"
#include "trigva/errors.hpp"
#include "trigva/fock/fock.hpp"

using namespace trigva;
using namespace trigva::fock;

namespace {

const Scalar u = Scalar::unit(1);

// Bi-graded terms z^k x^e.
using Bi = std::map<std::pair<int, XExp>, Scalar>;

void bi_add(Bi& b, int z, const XExp& e, const Scalar& c) {
  if (c.is_zero()) return;
  Scalar& slot = b[{z, e}];
  slot += c;
  if (slot.is_zero()) b.erase({z, e});
}

// Vertex operator on x^mu by expanding both exponentials term by term.
FockPoly oracle_vertex(int alpha, int n, const XExp& mu, int D) {
  Bi total, term;
  bi_add(total, 0, mu, 1);
  term = total;
  for (int k = 1; k <= weight(mu); ++k) {
    Bi next;
    for (const auto& [key, c] : term) {
      const auto& [z, e] = key;
      for (int m = 1; m <= kMaxX; ++m) {
        if (e[m - 1] == 0) continue;
        XExp f = e;
        --f[m - 1];
        bi_add(next, z - m, f, c * Scalar(e[m - 1]) * qring::sin_bracket(m * alpha) / Scalar(m * k));
      }
    }
    term = next;
    for (const auto& [key, c] : term) bi_add(total, key.first, key.second, c);
  }
  Bi out = total;
  term = total;
  for (int k = 1; k <= D; ++k) {
    Bi next;
    for (const auto& [key, c] : term) {
      const auto& [z, e] = key;
      for (int m = 1; m <= D; ++m) {
        XExp f = e;
        ++f[m - 1];
        if (weight(f) > D) continue;
        bi_add(next, z + m, f, c * qring::sin_bracket(m * alpha) / Scalar(k));
      }
    }
    term = next;
    for (const auto& [key, c] : term) bi_add(out, key.first, key.second, c);
  }
  FockPoly p = FockPoly::one({D, D, 1}, u);
  p.terms = {};
  for (const auto& [key, c] : out)
    if (key.first == -n) p.terms.add(key.second, c * vertex_weight(alpha, u));
  return p;
}

XExp random_mono(testgen::Gen& g, int max_deg) {
  XExp e{};
  int left = g.range(0, max_deg);
  while (left > 0) {
    int p = g.range(1, left);
    ++e[p - 1];
    left -= p;
  }
  return e;
}

}  // namespace

TEST(Fock, ModeExamples) {
  Trunc t{8, 8, 4};
  EXPECT_EQ(fock_mode_action(0, 1, FockPoly::monomial(t, x_var(1))).terms, LinComb<XExp>(XExp{}));
  EXPECT_EQ(fock_mode_action(0, -2, FockPoly::one(t)).terms, LinComb<XExp>(x_var(2), Scalar(2)));
  EXPECT_TRUE(fock_mode_action(0, 0, FockPoly::monomial(t, x_var(3))).terms.is_zero());
  for (int a : {-2, 1, 3}) {
    Scalar want = Scalar::q(a) / qring::sin_bracket(a);
    for (int i = 0; i < std::abs(a); ++i) want *= a > 0 ? u : u.inverse();
    EXPECT_EQ(fock_mode_action(a, 0, FockPoly::one(t)).terms, LinComb<XExp>(XExp{}, want));
  }
  FockPoly top = FockPoly::monomial(t, x_var(4, 2));
  EXPECT_TRUE(fock_mode_action(1, -1, top).clipped);
  EXPECT_FALSE(fock_mode_action(1, 1, top).clipped);
  EXPECT_THROW(FockPoly::monomial(t, x_var(3, 3)), UsageError);
  EXPECT_THROW((Trunc{4, 6, 2}.validate()), UsageError);
  EXPECT_THROW((Trunc{6, 6, 0}.validate()), UsageError);
}

TEST(FockProperty, KernelMatchesSeriesExpansion) {
  testgen::Gen g(51);
  const int D = 7;
  for (int i = 0; i < 40; ++i) {
    int alpha = g.range(1, 2) * (g.coin() ? 1 : -1), n = g.range(-3, 3);
    XExp mu = random_mono(g, 5);
    if (weight(mu) - n > D) continue;
    FockPoly got = fock_mode_action(alpha, n, FockPoly::monomial({D, D, 1}, mu, u));
    ASSERT_FALSE(got.clipped);
    ASSERT_EQ(got.terms, oracle_vertex(alpha, n, mu, D).terms)
        << alpha << " " << n << " " << monomial_string(mu);
  }
}

TEST(FockProperty, ModesShiftDegree) {
  testgen::Gen g(52);
  Trunc t{8, 8, 4};
  for (int i = 0; i < 40; ++i) {
    int alpha = g.range(-2, 2), n = g.range(-2, 2);
    XExp mu = random_mono(g, 6);
    FockPoly r = fock_mode_action(alpha, n, FockPoly::monomial(t, mu));
    if (r.clipped) continue;
    for (const auto& [e, c] : r.terms.terms()) ASSERT_EQ(weight(e), weight(mu) - n);
  }
}

TEST(FockRelations, SmallWindow) {
  Trunc t{6, 6, 2};
  CheckResult r = relation_check(1, 1, t);
  EXPECT_TRUE(r.pass) << r.witness;
  EXPECT_TRUE(relation_check_single(0, 1, 0, -1, t).pass);
  EXPECT_TRUE(relation_check_single(2, -1, -2, 1, t).pass);
  EXPECT_EQ(probe_mode_shift(t), 0);
  EXPECT_FALSE(relation_check(1, 1, t, {.shift = 1}).pass);
  CheckResult f = relation_check(1, 1, t, {.shift = 0, .scale_fault = 1});
  EXPECT_FALSE(f.pass);
  EXPECT_NE(f.witness.find("A("), std::string::npos);
}

TEST(Contraction, Examples) {
  ContractionSeries c = contraction_factor(1, 1, 3);
  EXPECT_TRUE(c.agree);
  EXPECT_EQ(c.exponential[1], Scalar::parse("q^2 - 2 + q^-2"));
  c = contraction_factor(1, -1, 3);
  EXPECT_EQ(c.rational[1], Scalar::parse("2 - q^2 - q^-2"));
  c = contraction_factor(1, 2, 0);
  ASSERT_EQ(c.exponential.size(), 1u);
  EXPECT_EQ(c.exponential[0], Scalar(1));
  EXPECT_TRUE(c.agree);
  EXPECT_THROW(contraction_factor(0, 1, 2), UsageError);
}

TEST(ContractionProperty, ExpansionsAgree) {
  for (int a = -3; a <= 3; ++a)
    for (int b = -3; b <= 3; ++b)
      if (a != 0 && b != 0) EXPECT_TRUE(contraction_factor(a, b, 6).agree) << a << " " << b;
}

TEST(Ope, ExamplesAndFault) {
  Trunc t{6, 6, 4};
  CheckResult r = ope_check(1, 1, XExp{}, t);
  EXPECT_TRUE(r.pass) << r.witness;
  r = ope_check(1, -1, x_var(1), t);
  EXPECT_TRUE(r.pass) << r.witness;
  r = ope_check(2, -1, x_var(2), t);
  EXPECT_TRUE(r.pass) << r.witness;
  r = ope_check(1, 1, XExp{}, t, {.fault = true});
  EXPECT_FALSE(r.pass);
  EXPECT_NE(r.witness.find("mismatch"), std::string::npos);
}

TEST(Locality, PolynomialAndCheck) {
  auto p = build_locality_poly(1);
  EXPECT_EQ(evaluate_poly(p, Scalar(1)), Scalar(1));
  EXPECT_TRUE(evaluate_poly(p, Scalar::q(2)).is_zero());
  EXPECT_TRUE(evaluate_poly(p, Scalar::q(-2)).is_zero());
  Trunc t{6, 6, 2};
  CheckResult r = locality_check(1, 1, XExp{}, t);
  EXPECT_TRUE(r.pass) << r.witness;
  r = locality_check(1, -1, x_var(1), t);
  EXPECT_TRUE(r.pass) << r.witness;
  r = locality_check(0, 2, x_var(1), t);
  EXPECT_TRUE(r.pass) << r.witness;
  EXPECT_FALSE(locality_check(1, 1, XExp{}, t, {.drop_factor = true}).pass);
}

TEST(Vanish, LevelOne) {
  Trunc t{8, 8, 4};
  for (int a : {1, 2}) {
    CheckResult r = coincidence_vanish_check(a, 1, t);
    EXPECT_TRUE(r.pass) << r.witness;
    r = coincidence_vanish_check(a, 1, t, {.direct = true});
    EXPECT_TRUE(r.pass) << r.witness;
  }
  CheckResult f = coincidence_vanish_check(1, 1, t, {.drop_factor = true});
  EXPECT_FALSE(f.pass);
  EXPECT_FALSE(coincidence_vanish_check(1, 1, t, {.drop_factor = true, .direct = true}).pass);
  EXPECT_THROW(coincidence_vanish_check(0, 1, t), UsageError);
}

TEST(Vanish, LevelTwo) {
  Trunc t{8, 8, 4};
  CheckResult r = coincidence_vanish_check(1, 2, t, {.max_out_degree = 1});
  EXPECT_TRUE(r.pass) << r.witness;
  EXPECT_FALSE(coincidence_vanish_check(1, 2, t, {.drop_factor = true, .max_out_degree = 0}).pass);
  EXPECT_THROW(coincidence_vanish_check(1, 2, Trunc{4, 4, 4}), UsageError);
}

TEST(Tensor, ActionAndWeights) {
  Trunc t{4, 4, 2};
  Scalar u1 = Scalar::unit(1), u2 = Scalar::unit(2);
  TensorFockVec vac = TensorFockVec::vacuum(t, {{1, u1}, {1, u2}});
  EXPECT_EQ(vac.level(), 2);
  TensorFockVec z = tensor_action(1, 0, vac);
  EXPECT_EQ(z.terms.coeff(std::vector<XExp>(2)), vertex_weight(1, u1) + vertex_weight(1, u2));
  EXPECT_EQ(z.terms.size(), 1u);
  EXPECT_TRUE(tensor_action(0, 2, vac).terms.is_zero());
  EXPECT_EQ(unitary_weight(1, {{1, u1}}), u1 * Scalar::q() / qring::sin_bracket(1));
  EXPECT_EQ(unitary_weight(2, {{2, u1}}), Scalar(2) * u1 * u1 * Scalar::q(2) / qring::sin_bracket(2));
  EXPECT_THROW(unitary_weight(0, {{1, u1}}), UsageError);
  EXPECT_EQ(unitary_weight(1, {{1, u1}, {1, u2}}), z.terms.coeff(std::vector<XExp>(2)));
  TensorFockVec y = tensor_action(-1, -1, vac);
  for (const auto& [k, c] : y.terms.terms()) {
    int w = 0;
    for (const auto& e : k) w += weight(e);
    EXPECT_EQ(w, 1);
  }
}

TEST(Tensor, WeightCheck) {
  Scalar u1 = Scalar::unit(1), u2 = Scalar::unit(2), u3 = Scalar::unit(3);
  for (int n : {-3, -1, 2}) {
    EXPECT_TRUE(weight_check(n, {{2, u1}, {1, u2}}).pass);
    EXPECT_TRUE(weight_check(n, {{1, u1}, {1, u2}, {1, u3}}).pass);
  }
  EXPECT_FALSE(weight_check(1, {{1, u1}}, {.fault = 1}).pass);
}

TEST(QuasiCommutator, Examples) {
  Trunc t{8, 8, 4};
  CheckResult r = quasi_commutator_check(1, -1, 2, t);
  EXPECT_TRUE(r.pass) << r.witness;
  std::vector<int> support;
  r = quasi_commutator_check(1, 1, 1, t, {}, &support);
  EXPECT_TRUE(r.pass) << r.witness;
  EXPECT_EQ(support, (std::vector<int>{-2, 2}));
  r = quasi_commutator_check(0, 0, 1, t, {}, &support);
  EXPECT_TRUE(r.pass) << r.witness;
  EXPECT_EQ(support, (std::vector<int>{0}));
  r = quasi_commutator_check(2, -1, 1, t);
  EXPECT_TRUE(r.pass) << r.witness;
  EXPECT_FALSE(quasi_commutator_check(1, -1, 1, t, {.shift = 0, .fault_r = 1}).pass);
}

TEST(Kernel, IntegralCoefficients) {
  std::vector<QPoly> c = integral_coefficients({Scalar(mpq_class(1, 2)), Scalar::q() / qring::sin_bracket(1)});
  // (1/2, q/(q - q^-1)) scaled to (q^2 - 1, 2 q^2)
  EXPECT_EQ(c[0].to_mpoly(), qring::parse_mpoly("q^2 - 1"));
  EXPECT_EQ(c[1].to_mpoly(), qring::parse_mpoly("2*q^2"));
  EXPECT_THROW(integral_coefficients({Scalar(1), Scalar::unit(1)}), UsageError);
  EXPECT_THROW((void)checked_mul(static_cast<i128>(1) << 100, static_cast<i128>(1) << 40), EvaluationError);
}
