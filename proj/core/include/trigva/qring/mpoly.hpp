#pragma once

#include <array>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace trigva::qring {

// Variable 0 is q, variable j >= 1 is the unit u_j.
inline constexpr int kMaxVars = 8;
using Exponents = std::array<std::int16_t, kMaxVars>;

struct Term {
  Exponents exp{};
  mpq_class coeff;
};

// Sparse Laurent polynomial over Q in q, u1..u7. Terms are kept sorted by
// ascending lexicographic exponent with no zero coefficients, so equality is
// structural.
class MPoly {
 public:
  MPoly() = default;
  MPoly(long c);  // NOLINT(google-explicit-constructor)
  MPoly(const mpq_class& c);  // NOLINT(google-explicit-constructor)

  static MPoly monomial(const Exponents& e, const mpq_class& c = 1);
  static MPoly var(int v, int power = 1);
  static MPoly q(int power = 1) { return var(0, power); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_one() const;
  bool is_monomial() const { return terms_.size() == 1; }
  bool is_polynomial() const;
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  const Term& leading() const { return terms_.back(); }
  mpq_class constant_term() const;
  Exponents min_exponents() const;
  unsigned var_mask() const;
  int degree_in(int v) const;
  int max_var() const;  // highest variable index used, -1 for constants

  MPoly operator-() const;
  MPoly& operator+=(const MPoly& o);
  MPoly& operator-=(const MPoly& o);
  MPoly& operator*=(const MPoly& o) { return *this = *this * o; }
  MPoly& operator*=(const mpq_class& c);
  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  friend MPoly operator*(MPoly a, const mpq_class& c) { return a *= c; }
  friend bool operator==(const MPoly& a, const MPoly& b);
  friend bool operator<(const MPoly& a, const MPoly& b);

  // Multiply by the monomial x^delta.
  MPoly shifted(const Exponents& delta) const;
  // Adds c*x^e without re-sorting the whole polynomial.
  void add_term(const Exponents& e, const mpq_class& c);

  // Substitute values for the variables in `mask`, leaving the rest symbolic.
  MPoly substitute(unsigned mask, const std::vector<mpq_class>& values) const;
  mpq_class evaluate(const std::vector<mpq_class>& values) const;

  std::string to_string() const;

 private:
  static MPoly from_unsorted(std::vector<Term> terms);
  std::vector<Term> terms_;
};

inline std::ostream& operator<<(std::ostream& os, const MPoly& p) { return os << p.to_string(); }

MPoly parse_mpoly(std::string_view text);
std::string var_name(int v);

// Exact multivariate gcd of two polynomials (no negative exponents), made
// monic in the lexicographic leading term. gcd(0, 0) = 0.
MPoly gcd(const MPoly& a, const MPoly& b);
// Exact quotient; throws DomainError if b does not divide a.
MPoly divide_exact(const MPoly& a, const MPoly& b);
MPoly monic(const MPoly& p);

}  // namespace trigva::qring
