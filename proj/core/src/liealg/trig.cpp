#include "trigva/liealg/trig.hpp"

#include "trigva/errors.hpp"

namespace trigva::liealg {

namespace {

int sign_pow(int m) { return (m % 2 == 0) ? 1 : -1; }
Scalar qp(int e) { return Scalar::q(e); }

}  // namespace

char kind_letter(Kind k) { return "ABCD"[static_cast<int>(k)]; }

TrigElem& TrigElem::operator+=(const TrigElem& o) {
  if (kind != o.kind) throw UsageError("adding trigonometric elements of different kinds");
  terms += o.terms;
  central += o.central;
  return *this;
}

TrigElem& TrigElem::operator-=(const TrigElem& o) {
  if (kind != o.kind) throw UsageError("subtracting trigonometric elements of different kinds");
  terms -= o.terms;
  central -= o.central;
  return *this;
}

TrigElem& TrigElem::operator*=(const Scalar& s) {
  terms *= s;
  central *= s;
  return *this;
}

TrigElem canonicalize_trig(Kind kind, const LinComb<TLabel>& raw, const Scalar& central) {
  TrigElem out{kind, {}, central};
  for (const auto& [lab, c] : raw.terms()) {
    auto [alpha, m] = lab;
    switch (kind) {
      case Kind::A:
        out.terms.add(lab, c);
        break;
      case Kind::B:
        if (alpha > 0 || (alpha == 0 && m % 2 != 0)) out.terms.add(lab, c);
        else if (alpha < 0) out.terms.add({-alpha, m}, -Scalar(sign_pow(m)) * c);
        break;
      case Kind::C:
        if (alpha > 0 || (alpha == 0 && m % 2 != 0)) out.terms.add(lab, c);
        else if (alpha < 0) out.terms.add({-alpha, m}, -Scalar(sign_pow(m)) * qp(2 * alpha) * c);
        break;
      case Kind::D:
        if (alpha > 0) out.terms.add(lab, c);
        else if (alpha < 0) out.terms.add({-alpha, m}, -qp(2 * alpha) * c);
        break;
    }
  }
  return out;
}

TrigElem trig_gen(Kind kind, int alpha, int m) {
  return canonicalize_trig(kind, LinComb<TLabel>({alpha, m}));
}

TrigElem trig_central(Kind kind, const Scalar& c) { return TrigElem{kind, {}, c}; }

namespace {

// Bracket of two generators as raw terms plus a central coefficient.
void generator_bracket(Kind kind, int a, int m, int b, int n, LinComb<TLabel>& raw,
                       Scalar& central) {
  Scalar s1 = qring::sin_bracket(static_cast<long>(m) * b - static_cast<long>(n) * a);
  Scalar s2 = qring::sin_bracket(static_cast<long>(m) * b + static_cast<long>(n) * a);
  bool mn0 = m + n == 0;
  int dp = a + b == 0, dm = a - b == 0;
  raw.add({a + b, m + n}, s1);
  switch (kind) {
    case Kind::A:
      if (mn0 && dp) central += Scalar(m);
      break;
    case Kind::B:
      raw.add({a - b, m + n}, Scalar(sign_pow(n)) * s2);
      if (mn0) central += Scalar(2 * m * (dp - sign_pow(m) * dm));
      break;
    case Kind::C:
      raw.add({a - b, m + n}, Scalar(sign_pow(n)) * qp(2 * b) * s2);
      if (mn0) central += Scalar(2 * m) * (Scalar(dp) - Scalar(sign_pow(m) * dm) * qp(2 * a));
      break;
    case Kind::D:
      raw.add({a - b, m + n}, qp(2 * b) * s2);
      if (mn0) central += Scalar(2 * m) * (Scalar(dp) - Scalar(dm) * qp(2 * a));
      break;
  }
}

}  // namespace

TrigElem trig_bracket(const TrigElem& x, const TrigElem& y) {
  if (x.kind != y.kind) throw UsageError("trig_bracket on different kinds");
  LinComb<TLabel> raw;
  Scalar central;
  for (const auto& [p, c] : x.terms.terms())
    for (const auto& [r, d] : y.terms.terms()) {
      LinComb<TLabel> part;
      Scalar cpart;
      generator_bracket(x.kind, p.first, p.second, r.first, r.second, part, cpart);
      Scalar cd = c * d;
      part *= cd;
      raw += part;
      central += cd * cpart;
    }
  return canonicalize_trig(x.kind, raw, central);
}

std::string to_string(const TrigElem& x) {
  char letter = kind_letter(x.kind);
  return render<TLabel>(
      x.terms,
      [letter](const TLabel& k) {
        return std::string(1, letter) + "[" + std::to_string(k.first) + "," +
               std::to_string(k.second) + "]";
      },
      x.central, "c");
}

DqElem dq_gen(int m, int n) { return DqElem{LinComb<std::pair<int, int>>({m, n}), {}}; }

DqElem dq_bracket(const DqElem& x, const DqElem& y) {
  DqElem out;
  for (const auto& [p, c] : x.terms.terms())
    for (const auto& [r, d] : y.terms.terms()) {
      auto [m, n] = p;
      auto [m2, n2] = r;
      // 2 sinh(h s) with e^h = q
      Scalar cd = c * d;
      out.terms.add({m + m2, n + n2}, cd * qring::sin_bracket(static_cast<long>(m2) * n -
                                                              static_cast<long>(m) * n2));
      if (m + m2 == 0 && n + n2 == 0) out.central += cd * Scalar(m);
    }
  return out;
}

TrigElem dq_translate(const DqElem& x) {
  TrigElem out{Kind::A, {}, x.central};
  for (const auto& [p, c] : x.terms.terms()) out.terms.add({p.second, p.first}, -c);
  return out;
}

}  // namespace trigva::liealg
