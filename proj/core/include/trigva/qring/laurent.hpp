#pragma once

#include <map>
#include <string>

#include "trigva/qring/scalar.hpp"

namespace trigva::qring {

// Laurent polynomial in q alone, exponent -> coefficient in ascending order.
class LaurentQ {
 public:
  LaurentQ() = default;
  LaurentQ(long c);  // NOLINT(google-explicit-constructor)
  static LaurentQ monomial(int e, const mpq_class& c = 1);
  static LaurentQ from_mpoly(const MPoly& p);  // throws UsageError if p involves a unit

  const std::map<int, mpq_class>& terms() const { return terms_; }
  mpq_class coeff(int e) const;
  bool is_zero() const { return terms_.empty(); }

  LaurentQ& operator+=(const LaurentQ& o);
  LaurentQ& operator-=(const LaurentQ& o);
  friend LaurentQ operator+(LaurentQ a, const LaurentQ& b) { return a += b; }
  friend LaurentQ operator-(LaurentQ a, const LaurentQ& b) { return a -= b; }
  friend LaurentQ operator*(const LaurentQ& a, const LaurentQ& b);
  friend bool operator==(const LaurentQ& a, const LaurentQ& b) = default;

  MPoly to_mpoly() const;
  Scalar to_scalar() const { return Scalar(to_mpoly()); }
  std::string to_string() const { return to_mpoly().to_string(); }

 private:
  std::map<int, mpq_class> terms_;
};

}  // namespace trigva::qring
