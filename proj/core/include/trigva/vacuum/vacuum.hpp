#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "trigva/liealg/gl.hpp"

namespace trigva::vacuum {

using liealg::ELabel;
using liealg::GlElem;

// a(n) with a = E_{m,n} a basis element of the interval algebra.
struct Mode {
  int n;
  ELabel a;
  // PBW key (-n, a); a normal-ordered monomial has non-increasing keys.
  std::pair<int, ELabel> key() const { return {-n, a}; }
  friend bool operator==(const Mode&, const Mode&) = default;
  friend bool operator<(const Mode& x, const Mode& y) { return x.key() < y.key(); }
};

using Monomial = std::vector<Mode>;  // applied to the vacuum, leftmost first
using PBWVector = LinComb<Monomial>;

int degree(const Monomial& m);
PBWVector vacuum_vector();
std::string to_string(const PBWVector& v);

struct Interval {
  int lo, hi;
  bool contains(int i) const { return lo <= i && i <= hi; }
  friend bool operator==(const Interval&, const Interval&) = default;
};

// Truncated vacuum module V(level, 0) over span{E_{m,n} : m, n in I, m + n even}.
class VacuumModule {
 public:
  VacuumModule(Interval I, Scalar level);

  const Interval& interval() const { return I_; }
  const Scalar& level() const { return level_; }
  const std::vector<ELabel>& basis() const { return basis_; }
  bool in_basis(const ELabel& a) const;

  PBWVector act(const Mode& x, const PBWVector& v) const;
  PBWVector act(const GlElem& a, int n, const PBWVector& v) const;
  // Straightened product m_1 m_2 ... m_k 1 for modes in any order.
  PBWVector apply_word(const std::vector<Mode>& word, const PBWVector& v) const;

  // a_j b for j >= -1.
  PBWVector va_product(const GlElem& a, const GlElem& b, int j) const;
  PBWVector d_operator(const PBWVector& v) const;
  // q^{-r L(0)} sigma_r; throws WideningRequired if an index leaves I.
  PBWVector apply_R(int r, const PBWVector& v) const;

  // Normal-ordered monomials of degree d, sorted.
  std::vector<Monomial> monomials(int d) const;

 private:
  PBWVector act_monomial(const Mode& x, const Monomial& m) const;
  void check_label(const ELabel& a) const;

  Interval I_;
  Scalar level_;
  std::vector<ELabel> basis_;
  mutable std::map<std::pair<Mode, Monomial>, PBWVector> memo_;
  mutable std::map<int, std::vector<Monomial>> mono_cache_;
};

// Row echelon form over Q for rank and membership tests.
class Echelon {
 public:
  using Row = std::map<int, mpq_class>;
  // Returns true if the row was independent of the stored ones.
  bool insert(Row r);
  bool contains(Row r) const;
  std::size_t rank() const { return rows_.size(); }

 private:
  void reduce(Row& r) const;
  std::map<int, Row> rows_;  // pivot -> row with leading entry 1
};

struct CheckResult {
  bool pass = true;
  std::string witness;
};

struct SingularOptions {
  // Number of factors in the candidate vector; 0 means level + 1.
  int power = 0;
};

CheckResult singular_check(int level, int m, int n, Interval I, int probe_degree,
                           SingularOptions opt = {});

enum class Quotient { V, L };

// Graded piece of J' (the submodule generated by E_{m,n}(-1)^{level+1} 1, m != n)
// specialized at a rational q.
class IdealData {
 public:
  IdealData(const VacuumModule& mod, int level, int max_degree, const mpq_class& q0);
  const Echelon& at(int d) const { return ideal_.at(d); }
  std::size_t dim_V(int d) const;
  // Specialized coordinates of v in the monomial basis of its degree.
  Echelon::Row coords(const PBWVector& v, int d) const;

 private:
  const VacuumModule& mod_;
  mpq_class q0_;
  std::map<int, Echelon> ideal_;
  mutable std::map<int, std::map<Monomial, int>> index_;
};

std::size_t graded_dim(const Scalar& level, Interval I, int d, Quotient quotient,
                       const std::vector<mpq_class>& q_specs = {mpq_class(7, 5), mpq_class(11, 7)});

struct NilpotencyOptions {
  int power = 0;  // 0 means level + 1
  bool quotient = true;  // false tests on V(level,0) instead of L(level,0)
  std::vector<mpq_class> q_specs = {mpq_class(7, 5), mpq_class(11, 7)};
};

// Coefficients of a(x)^{power} with mode sum in [-window, window] vanish on L(level,0)
// up to degree window; a = G_{alpha,m} with alpha != 0.
CheckResult nilpotency_check_L(int level, int alpha, int m, Interval I, int window,
                               NilpotencyOptions opt = {});

}  // namespace trigva::vacuum
