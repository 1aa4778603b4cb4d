#pragma once

#include <string>
#include <tuple>

#include "trigva/liealg/gl.hpp"

namespace trigva::liealg {

// E_{m,n} (x) t^p
using AffLabel = std::tuple<int, int, int>;

struct AffElem {
  LinComb<AffLabel> terms;
  Scalar central;  // coefficient of k

  AffElem& operator+=(const AffElem& o);
  AffElem& operator-=(const AffElem& o);
  friend AffElem operator+(AffElem a, const AffElem& b) { return a += b; }
  friend AffElem operator-(AffElem a, const AffElem& b) { return a -= b; }
  friend bool operator==(const AffElem&, const AffElem&) = default;
  bool is_zero() const { return terms.is_zero() && central.is_zero(); }
};

AffElem tensor(const GlElem& a, int p);
AffElem affine_k(const Scalar& c = 1);
// Coefficient of t^p as an element of gl.
GlElem t_component(const AffElem& x, int p);

AffElem affine_bracket(const AffElem& x, const AffElem& y);
std::string to_string(const AffElem& x);

enum class BaseAlgebra { A, Atau };
enum class Group { Z, Z2xZ };
enum class Character { chi_q, chi_B, chi_D };

struct CovSetup {
  BaseAlgebra algebra = BaseAlgebra::A;
  Group group = Group::Z;
  Character character = Character::chi_q;
  // phi(sigma_r) = q^{scale * r}; anything other than 1 is a deliberate fault.
  int scale = 1;

  static CovSetup chi_q() { return {}; }
  static CovSetup chi_B() { return {BaseAlgebra::A, Group::Z2xZ, Character::chi_B, 1}; }
  static CovSetup chi_D() { return {BaseAlgebra::A, Group::Z2xZ, Character::chi_D, 1}; }
  static CovSetup tau() { return {BaseAlgebra::Atau, Group::Z, Character::chi_q, 1}; }
  void validate() const;
  std::string name() const;
  friend bool operator==(const CovSetup&, const CovSetup&) = default;
};

// Orbit representative Gbar_{alpha,0} (x) t^p (Gbar^tau for the Atau algebra).
using CovLabel = std::pair<int, int>;

struct CovElem {
  CovSetup setup;
  LinComb<CovLabel> terms;
  Scalar central;

  CovElem& operator+=(const CovElem& o);
  CovElem& operator-=(const CovElem& o);
  CovElem& operator*=(const Scalar& s);
  friend CovElem operator+(CovElem a, const CovElem& b) { return a += b; }
  friend CovElem operator-(CovElem a, const CovElem& b) { return a -= b; }
  friend CovElem operator*(const Scalar& s, CovElem a) { return a *= s; }
  friend bool operator==(const CovElem&, const CovElem&) = default;
  bool is_zero() const { return terms.is_zero() && central.is_zero(); }
};

// Class of an affine element in the quotient by the orbit relations.
CovElem canonicalize_cov(const CovSetup& setup, const AffElem& raw);
// Class of G_{alpha,0} (x) t^p (resp. G^tau_{alpha,0}), reduced.
CovElem cov_gen(const CovSetup& setup, int alpha, int p);
CovElem cov_central(const CovSetup& setup, const Scalar& c = 1);
// Canonical affine lift of a class.
AffElem lift(const CovElem& x);

CovElem covariant_bracket(const CovElem& x, const CovElem& y);
// Shifts r that can contribute to sum_r [sigma_r a, b] for E-supports of a, b.
std::pair<int, int> support_window(const GlElem& a, const GlElem& b);

std::string to_string(const CovElem& x);

}  // namespace trigva::liealg
