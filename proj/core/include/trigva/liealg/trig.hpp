#pragma once

#include <string>

#include "trigva/liealg/lincomb.hpp"

namespace trigva::liealg {

enum class Kind { A, B, C, D };
char kind_letter(Kind k);

using TLabel = std::pair<int, int>;  // (alpha, m)

struct TrigElem {
  Kind kind = Kind::A;
  LinComb<TLabel> terms;
  Scalar central;

  TrigElem& operator+=(const TrigElem& o);
  TrigElem& operator-=(const TrigElem& o);
  TrigElem& operator*=(const Scalar& s);
  friend TrigElem operator+(TrigElem a, const TrigElem& b) { return a += b; }
  friend TrigElem operator-(TrigElem a, const TrigElem& b) { return a -= b; }
  friend TrigElem operator*(const Scalar& s, TrigElem a) { return a *= s; }
  friend bool operator==(const TrigElem& a, const TrigElem& b) {
    return a.kind == b.kind && a.terms == b.terms && a.central == b.central;
  }
  bool is_zero() const { return terms.is_zero() && central.is_zero(); }
};

// Reduces raw (alpha, m) indices to the canonical region of the kind.
TrigElem canonicalize_trig(Kind kind, const LinComb<TLabel>& raw, const Scalar& central = {});
// The generator X_{alpha,m} of the given kind, already canonical.
TrigElem trig_gen(Kind kind, int alpha, int m);
TrigElem trig_central(Kind kind, const Scalar& c = 1);

TrigElem trig_bracket(const TrigElem& x, const TrigElem& y);

std::string to_string(const TrigElem& x);

// D_q presentation: T_{m,n} plus central C.
struct DqElem {
  LinComb<std::pair<int, int>> terms;
  Scalar central;
  friend bool operator==(const DqElem&, const DqElem&) = default;
};
DqElem dq_gen(int m, int n);
DqElem dq_bracket(const DqElem& x, const DqElem& y);
TrigElem dq_translate(const DqElem& x);

}  // namespace trigva::liealg
