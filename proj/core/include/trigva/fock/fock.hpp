#pragma once

#include <string>
#include <utility>
#include <vector>

#include "trigva/fock/kernel.hpp"
#include "trigva/liealg/lincomb.hpp"
#include "trigva/vacuum/vacuum.hpp"

namespace trigva::fock {

using vacuum::CheckResult;

struct Trunc {
  int K = 8;
  int D = 8;
  int N = 4;
  void validate() const;  // K >= D >= 1, N >= 1, D <= 16
};

// a_alpha(u) = u^alpha q^alpha / (q^alpha - q^-alpha); 1 for alpha = 0.
Scalar vertex_weight(int alpha, const Scalar& unit);

// Element of the level-1 module with parameter `unit`.
struct FockPoly {
  Trunc trunc;
  Scalar unit = Scalar::unit(1);
  LinComb<XExp> terms;
  bool clipped = false;

  static FockPoly one(const Trunc& t, const Scalar& unit = Scalar::unit(1));
  static FockPoly monomial(const Trunc& t, const XExp& e, const Scalar& unit = Scalar::unit(1));
  std::string to_string() const;
};

XExp x_var(int m, int power = 1);

// Mode A_{alpha,n}: for alpha != 0 the coefficient of z^{-n-shift} in the vertex
// operator, for alpha = 0 the Heisenberg action. Images past degree D set `clipped`.
FockPoly fock_mode_action(int alpha, int n, const FockPoly& p, int shift = 0);

struct Part {
  int mult;
  Scalar unit;
};

// Tensor product of level-1 modules; slot i carries the unit of its part.
struct TensorFockVec {
  Trunc trunc;
  std::vector<Part> parts;
  LinComb<std::vector<XExp>> terms;
  bool clipped = false;

  static TensorFockVec vacuum(const Trunc& t, const std::vector<Part>& parts);
  int level() const;
  std::vector<Scalar> slot_units() const;
};

TensorFockVec tensor_action(int alpha, int n, const TensorFockVec& v, int shift = 0);

Scalar unitary_weight(int n, const std::vector<Part>& parts);

// Both expansions of the two-point contraction to order N (coefficients of t^0..t^N).
struct ContractionSeries {
  std::vector<Scalar> exponential;
  std::vector<Scalar> rational;
  bool agree = false;
};
ContractionSeries contraction_factor(int alpha, int beta, int N);

// Coefficients (c0, c1, c2) of the normalized locality polynomial in z.
std::vector<Scalar> build_locality_poly(int alpha);
Scalar evaluate_poly(const std::vector<Scalar>& c, const Scalar& z);

// ---- checks on the level-1 module ----

struct RelationOptions {
  int shift = 0;
  int scale_fault = 0;  // added to the structure-constant argument
};

// [A_{a,m}, A_{b,n}] against the algebra relations on every basis vector of
// degree <= D - window, for |alpha|,|beta| <= amax and |m|,|n| <= window.
CheckResult relation_check(int amax, int window, const Trunc& t, const RelationOptions& opt = {});
CheckResult relation_check_single(int alpha, int m, int beta, int n, const Trunc& t,
                                  const RelationOptions& opt = {});

// Shift s in {0, 1} for which the relations hold on a small window; throws
// DomainError unless exactly one value works.
int probe_mode_shift(const Trunc& t);

// Series are compared in raw exponents of z and w, so no mode shift enters.
struct OpeOptions {
  bool fault = false;  // q^{alpha+beta} -> q^{alpha+beta+1} in the contraction
};
CheckResult ope_check(int alpha, int beta, const XExp& v, const Trunc& t, const OpeOptions& opt = {});

struct LocalityOptions {
  bool drop_factor = false;
};
CheckResult locality_check(int alpha, int beta, const XExp& v, const Trunc& t,
                           const LocalityOptions& opt = {});

struct VanishOptions {
  bool drop_factor = false;  // remove one factor of the first pair in the prefactor
  bool direct = false;       // force the windowed expansion for level 1
  int max_out_degree = -1;   // default: largest degree the truncation supports
};
// level = number of tensor slots, each a level-1 vacuum with its own unit.
CheckResult coincidence_vanish_check(int alpha, int level, const Trunc& t, const VanishOptions& opt = {});

struct QuasiOptions {
  int shift = 0;
  int fault_r = 0;  // extra shift added to every r in the reconstruction
};
// Sub-check (i) relations and (ii) reconstruction from vacuum products.
// `support` receives the shifts r whose products do not vanish.
CheckResult quasi_commutator_check(int alpha, int beta, int window, const Trunc& t,
                                   const QuasiOptions& opt = {}, std::vector<int>* support = nullptr);

struct WeightOptions {
  int fault = 0;  // added to the exponent of the units in unitary_weight
};
CheckResult weight_check(int n, const std::vector<Part>& parts, const WeightOptions& opt = {});

}  // namespace trigva::fock
