#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "trigva/qring/mpoly.hpp"

namespace trigva::fock {

using i128 = __int128;

// Throws EvaluationError on overflow; callers never see a wrapped value.
i128 checked_add(i128 a, i128 b);
i128 checked_mul(i128 a, i128 b);
mpz_class to_mpz(i128 x);
i128 from_mpz(const mpz_class& z);

// Laurent polynomial in q with 128-bit integer coefficients, stored densely.
class QPoly {
 public:
  QPoly() = default;
  QPoly(i128 c) { if (c != 0) c_.push_back(c); }  // NOLINT(google-explicit-constructor)
  static QPoly monomial(int e, i128 c);
  // Requires an integral Laurent polynomial in q alone.
  static QPoly from_mpoly(const qring::MPoly& p);

  bool is_zero() const { return c_.empty(); }
  int lo() const { return lo_; }
  int hi() const { return lo_ + static_cast<int>(c_.size()) - 1; }
  i128 coeff(int e) const;

  QPoly& operator+=(const QPoly& o);
  QPoly& operator-=(const QPoly& o);
  QPoly& operator*=(i128 k);
  friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
  friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
  friend QPoly operator*(const QPoly& a, const QPoly& b);
  friend bool operator==(const QPoly& a, const QPoly& b) { return a.lo_ == b.lo_ && a.c_ == b.c_; }
  void add_product(const QPoly& a, const QPoly& b);

  qring::MPoly to_mpoly() const;

 private:
  void trim();
  int lo_ = 0;
  std::vector<i128> c_;
};

}  // namespace trigva::fock
