#include <gtest/gtest.h>

#include "gen.hpp"
#include "trigva/errors.hpp"
#include "trigva/vacuum/vacuum.hpp"

using namespace trigva;
using namespace trigva::vacuum;
using liealg::E;
using liealg::G;
using liealg::g_index;
using qring::Scalar;

namespace {

const Interval I03{0, 3};

PBWVector mono(std::vector<Mode> m) { return PBWVector(Monomial(std::move(m))); }

// Coefficient of t^d in prod_{n>=1} (1 - t^n)^{-dim}, by a direct DP.
long pbw_count(int dim, int d) {
  std::vector<long> c(d + 1, 0);
  c[0] = 1;
  for (int n = 1; n <= d; ++n)
    for (int copy = 0; copy < dim; ++copy)
      for (int k = n; k <= d; ++k) c[k] += c[k - n];
  return c[d];
}

PBWVector random_vector(testgen::Gen& g, const VacuumModule& mod, int max_deg) {
  PBWVector v;
  int terms = g.range(1, 2);
  for (int t = 0; t < terms; ++t) {
    int d = g.range(0, max_deg);
    std::vector<Mode> word;
    int left = d;
    while (left > 0) {
      int n = g.range(1, left);
      const auto& b = mod.basis();
      word.push_back({-n, b[g.range(0, static_cast<int>(b.size()) - 1)]});
      left -= n;
    }
    PBWVector w = mod.apply_word(word, vacuum_vector());
    w *= Scalar(g.range(1, 3));
    v += w;
  }
  return v;
}

Mode random_mode(testgen::Gen& g, const VacuumModule& mod, int lo, int hi) {
  const auto& b = mod.basis();
  return {g.range(lo, hi), b[g.range(0, static_cast<int>(b.size()) - 1)]};
}

bool homogeneous(const PBWVector& v, int d) {
  for (const auto& [m, c] : v.terms())
    if (degree(m) != d) return false;
  return true;
}

}  // namespace

TEST(Vacuum, ActionExamples) {
  Scalar level = Scalar::unit(5);  // symbolic level
  VacuumModule mod(Interval{-1, 2}, level);
  ELabel g10 = g_index(1, 0), gm10 = g_index(-1, 0), g01 = g_index(0, 1);
  PBWVector v = mod.act(Mode{1, g10}, mono({{-1, gm10}}));
  EXPECT_EQ(v, level * vacuum_vector());
  EXPECT_TRUE(mod.act(Mode{0, g01}, vacuum_vector()).is_zero());
  EXPECT_EQ(mod.act(Mode{-1, g10}, vacuum_vector()), mono({{-1, g10}}));
  EXPECT_THROW(mod.act(Mode{-1, {0, 1}}, vacuum_vector()), UsageError);
  EXPECT_EQ(to_string(mono({{-2, {0, 0}}, {-1, {1, 1}}})), "E[0,0](-2)E[1,1](-1)1");
}

TEST(Vacuum, VaProducts) {
  Scalar level = Scalar::unit(5);
  VacuumModule mod(Interval{-1, 2}, level);
  EXPECT_EQ(mod.va_product(G(1, 0), G(-1, 0), 1), level * vacuum_vector());
  EXPECT_TRUE(mod.va_product(G(1, 0), G(-1, 0), 3).is_zero());
  EXPECT_EQ(mod.va_product(G(1, 0), G(-1, 0), 0),
            mod.act(G(0, 1) - G(0, -1), -1, vacuum_vector()));
  // against the module action a(j) b(-1) 1
  testgen::Gen g(31);
  for (int i = 0; i < 40; ++i) {
    ELabel a = mod.basis()[g.range(0, 7)], b = mod.basis()[g.range(0, 7)];
    PBWVector bv = mod.act(Mode{-1, b}, vacuum_vector());
    for (int j = -1; j <= 3; ++j)
      ASSERT_EQ(mod.va_product(E(a.first, a.second), E(b.first, b.second), j),
                mod.act(Mode{j, a}, bv));
  }
}

TEST(Vacuum, DOperator) {
  VacuumModule mod(I03, Scalar(1));
  EXPECT_TRUE(mod.d_operator(vacuum_vector()).is_zero());
  EXPECT_EQ(mod.d_operator(mono({{-1, {0, 2}}})), mono({{-2, {0, 2}}}));
}

TEST(VacuumProperty, DCommutatorAndGrading) {
  VacuumModule mod(I03, Scalar::unit(5));
  testgen::Gen g(32);
  for (int i = 0; i < 60; ++i) {
    int d = g.range(0, 3);
    PBWVector v;
    for (const auto& m : mod.monomials(d))
      if (g.coin()) v.add(m, Scalar(g.range(1, 3)));
    ASSERT_TRUE(homogeneous(mod.d_operator(v), d + 1));
    Mode x = random_mode(g, mod, -2, 3);
    PBWVector lhs = mod.d_operator(mod.act(x, v)) - mod.act(x, mod.d_operator(v));
    PBWVector rhs = mod.act(Mode{x.n - 1, x.a}, v);
    rhs *= Scalar(-x.n);
    ASSERT_EQ(lhs, rhs);
  }
}

TEST(VacuumProperty, RepresentationOfAffineAlgebra) {
  Scalar level = Scalar::unit(5);
  VacuumModule mod(I03, level);
  testgen::Gen g(33);
  for (int i = 0; i < 150; ++i) {
    PBWVector v = random_vector(g, mod, 3);
    Mode x = random_mode(g, mod, -2, 3), y = random_mode(g, mod, -2, 3);
    PBWVector lhs = mod.act(x, mod.act(y, v)) - mod.act(y, mod.act(x, v));
    GlElem ex = E(x.a.first, x.a.second), ey = E(y.a.first, y.a.second);
    PBWVector rhs = mod.act(liealg::gl_bracket(ex, ey), x.n + y.n, v);
    if (x.n + y.n == 0) {
      PBWVector c = v;
      c *= Scalar(x.n) * liealg::gl_form(ex, ey) * level;
      rhs += c;
    }
    ASSERT_EQ(lhs, rhs) << to_string(v);
    for (const auto& [m, c] : v.terms()) {
      PBWVector one(m);
      ASSERT_TRUE(homogeneous(mod.act(x, one), degree(m) - x.n));
    }
  }
}

TEST(VacuumProperty, MonomialCountsMatchPbw) {
  for (Interval I : {Interval{0, 1}, Interval{0, 2}, I03}) {
    VacuumModule mod(I, Scalar(1));
    int dim = static_cast<int>(mod.basis().size());
    for (int d = 0; d <= 4; ++d) {
      EXPECT_EQ(static_cast<long>(mod.monomials(d).size()), pbw_count(dim, d));
      EXPECT_EQ(static_cast<long>(graded_dim(Scalar(3), I, d, Quotient::V)), pbw_count(dim, d));
    }
  }
  EXPECT_EQ(graded_dim(Scalar(1), I03, 1, Quotient::V), 8u);
  std::vector<std::size_t> want = {1, 2, 5, 10, 20};
  for (int d = 0; d <= 4; ++d) EXPECT_EQ(graded_dim(Scalar(2), Interval{0, 1}, d, Quotient::V), want[d]);
}

TEST(Vacuum, ApplyR) {
  VacuumModule mod(Interval{-2, 2}, Scalar(1));
  EXPECT_EQ(mod.apply_R(1, vacuum_vector()), vacuum_vector());
  for (int alpha : {-1, 0, 1}) {
    PBWVector v = mod.act(G(alpha, 0), -1, vacuum_vector());
    PBWVector w = mod.act(G(alpha, 1), -1, vacuum_vector());
    w *= Scalar::q(-1);
    EXPECT_EQ(mod.apply_R(1, v), w);
  }
  EXPECT_THROW(mod.apply_R(1, mono({{-1, {2, 2}}})), WideningRequired);
}

TEST(VacuumProperty, RModeAxiom) {
  VacuumModule mod(Interval{0, 7}, Scalar(2));
  VacuumModule inner(Interval{2, 5}, Scalar(2));
  testgen::Gen g(34);
  for (int i = 0; i < 60; ++i) {
    PBWVector v = random_vector(g, inner, 3);
    Mode x = random_mode(g, inner, -2, 2);
    int r = g.range(-2, 2), s = g.range(-2, 2);
    Mode sx{x.n, {x.a.first + r, x.a.second + r}};
    PBWVector lhs = mod.apply_R(r, mod.act(x, v));
    PBWVector rhs = mod.act(sx, mod.apply_R(r, v));
    rhs *= Scalar::q(r * x.n);
    ASSERT_EQ(lhs, rhs);
    if (std::abs(r + s) <= 2 && std::abs(s) <= 2)
      ASSERT_EQ(mod.apply_R(r, mod.apply_R(s, v)), mod.apply_R(r + s, v));
  }
}

TEST(Vacuum, Echelon) {
  Echelon e;
  EXPECT_TRUE(e.insert({{0, 1}, {1, 2}}));
  EXPECT_TRUE(e.insert({{1, 1}, {2, 1}}));
  EXPECT_FALSE(e.insert({{0, 2}, {1, 5}, {2, 1}}));
  EXPECT_TRUE(e.contains({{0, 1}, {1, 3}, {2, 1}}));
  EXPECT_FALSE(e.contains({{2, 1}}));
  EXPECT_EQ(e.rank(), 2u);
}

TEST(Singular, AllLegalPairs) {
  for (int level : {1, 2})
    for (int m = 0; m <= 3; ++m)
      for (int n = 0; n <= 3; ++n) {
        if (m == n || (m + n) % 2) continue;
        CheckResult r = singular_check(level, m, n, I03, level + 2);
        EXPECT_TRUE(r.pass) << level << " " << m << " " << n << ": " << r.witness;
      }
}

TEST(Singular, PowerLevelFails) {
  CheckResult r = singular_check(1, 0, 2, I03, 3, {.power = 1});
  EXPECT_FALSE(r.pass);
  EXPECT_NE(r.witness.find("E[2,0](1)"), std::string::npos);
  EXPECT_THROW(singular_check(1, 1, 1, I03, 2), UsageError);
  EXPECT_THROW(singular_check(1, 0, 1, I03, 2), UsageError);
}

TEST(GradedDim, SimpleQuotient) {
  // the interval algebra for [0,3] is gl2 + gl2 and each level-1 sl2 ideal is 5-dimensional in degree 2
  EXPECT_EQ(graded_dim(Scalar(1), I03, 2, Quotient::L), 34u);
  EXPECT_EQ(graded_dim(Scalar(1), I03, 1, Quotient::L), 8u);
  EXPECT_EQ(graded_dim(Scalar(1), I03, 0, Quotient::L), 1u);
  EXPECT_THROW(graded_dim(Scalar(1), I03, 2, Quotient::L, {mpq_class(7, 5)}), UsageError);
  EXPECT_THROW(graded_dim(Scalar(mpq_class(1, 2)), I03, 2, Quotient::L), UsageError);
}

TEST(Nilpotency, LevelOne) {
  CheckResult r = nilpotency_check_L(1, -1, 2, I03, 2);
  EXPECT_TRUE(r.pass) << r.witness;
}

TEST(Nilpotency, Controls) {
  CheckResult r = nilpotency_check_L(2, -1, 2, I03, 2, {.power = 2});
  EXPECT_FALSE(r.pass);
  EXPECT_FALSE(nilpotency_check_L(1, -1, 2, I03, 2, {.power = 2, .quotient = false}).pass);
  EXPECT_FALSE(nilpotency_check_L(1, 1, 2, I03, 1, {.power = 1}).pass);
  EXPECT_TRUE(nilpotency_check_L(1, -1, 1, I03, 1).pass);
  EXPECT_THROW(nilpotency_check_L(1, 0, 1, I03, 2), UsageError);
}
