#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <tuple>
#include <vector>

#include "trigva/fock/qpoly.hpp"
#include "trigva/qring/scalar.hpp"

namespace trigva::fock {

using qring::Scalar;

inline constexpr int kMaxX = 16;
// Exponent of x_m at position m - 1.
using XExp = std::array<std::uint8_t, kMaxX>;

int weight(const XExp& e);
std::string monomial_string(const XExp& e);

// All monomials of weighted degree <= D, ordered by degree then exponent.
class FockBasis {
 public:
  explicit FockBasis(int D);
  int max_degree() const { return D_; }
  int size() const { return static_cast<int>(monos_.size()); }
  const XExp& mono(int i) const { return monos_[i]; }
  int degree(int i) const { return degree_[i]; }
  int index(const XExp& e) const;  // -1 if absent
  const std::vector<int>& of_degree(int d) const { return by_degree_.at(d); }

 private:
  int D_;
  std::vector<XExp> monos_;
  std::vector<int> degree_;
  std::map<XExp, int> index_;
  std::map<int, std::vector<int>> by_degree_;
};

// Integer matrix (entries in Z[q, q^-1]) divided by `scale`; columns whose image
// would leave the truncation are marked instead of filled.
struct OpTable {
  struct Column {
    bool overflow = false;
    std::vector<std::pair<int, QPoly>> entries;
  };
  i128 scale = 1;
  std::vector<Column> cols;
};

// Vector in the truncated space: coordinates c[i] / den.
struct KVec {
  std::vector<QPoly> c;
  i128 den = 1;
  bool clipped = false;
  bool is_zero() const;
};

KVec kvec_zero(int size);
KVec kvec_unit(int size, int index);
// a * x + b * y
KVec kvec_combine(const QPoly& a, const KVec& x, const QPoly& b, const KVec& y);

// Operator tables for the level-1 realization on C[x_1, ..., x_D]:
//   vertex(alpha, n): coefficient of z^{-n} in X_alpha(z) / a_alpha,
//   heis(n): A_{0,n},
//   cre(alpha, j), ann(alpha, k): z^j and z^{-k} parts of the two exponentials.
class FockKernel {
 public:
  explicit FockKernel(int D);
  const FockBasis& basis() const { return basis_; }
  int size() const { return basis_.size(); }

  const OpTable& vertex(int alpha, int n) const;
  const OpTable& heis(int n) const;
  const OpTable& cre(int alpha, int j) const;
  const OpTable& ann(int alpha, int k) const;

  KVec apply(const OpTable& t, const KVec& v) const;

  // Shared kernel for a truncation degree.
  static const FockKernel& get(int D);

 private:
  enum class Kind { Vertex, Heis, Cre, Ann };
  const OpTable& table(Kind kind, int alpha, int n) const;
  OpTable build(Kind kind, int alpha, int n) const;

  FockBasis basis_;
  mutable std::mutex mu_;
  mutable std::map<std::tuple<Kind, int, int>, std::unique_ptr<OpTable>> tables_;
};

// Integer coefficients c_i with sum c_i X_i = 0 iff sum k_i X_i = 0, for scalars
// k_i sharing a common unit monomial. Throws UsageError otherwise.
std::vector<QPoly> integral_coefficients(const std::vector<Scalar>& k);

// Renders c / den as a scalar expression.
std::string render_coeff(const QPoly& c, i128 den);
Scalar to_scalar(const QPoly& c, i128 den);

}  // namespace trigva::fock
