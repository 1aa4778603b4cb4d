#pragma once

#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "trigva/qring/mpoly.hpp"

namespace trigva::qring {

// Element of Q(q)[u1^{+-1},...]. Canonical form: den is a polynomial with no
// monomial factor and lexicographic leading coefficient 1, and
// gcd(num, den) = 1. Equality is therefore structural.
class Scalar {
 public:
  Scalar() : den_(1) {}
  Scalar(long c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
  Scalar(const mpq_class& c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
  Scalar(MPoly p) : num_(std::move(p)), den_(1) {}  // NOLINT(google-explicit-constructor)
  Scalar(const MPoly& num, const MPoly& den);

  static Scalar q(int power = 1) { return Scalar(MPoly::q(power)); }
  static Scalar unit(int j, int power = 1) { return Scalar(MPoly::var(j, power)); }

  const MPoly& num() const { return num_; }
  const MPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_laurent() const { return den_.is_one(); }

  Scalar operator-() const;
  Scalar inverse() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o) { return *this *= o.inverse(); }
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator<(const Scalar& a, const Scalar& b) {
    if (!(a.den_ == b.den_)) return a.den_ < b.den_;
    return a.num_ < b.num_;
  }

  std::string to_string() const;
  static Scalar parse(std::string_view text);

 private:
  struct Raw {};
  Scalar(Raw, MPoly num, MPoly den) : num_(std::move(num)), den_(std::move(den)) {}
  MPoly num_, den_;
};

inline std::ostream& operator<<(std::ostream& os, const Scalar& s) {
  return os << s.to_string();
}

// q^s - q^{-s}
Scalar sin_bracket(long s);

// Exact value at q = q0, u_j = units[j-1].
mpq_class specialize(const Scalar& a, const mpq_class& q0,
                     const std::vector<mpq_class>& units = {});

}  // namespace trigva::qring
