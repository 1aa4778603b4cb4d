#include "trigva/liealg/affine.hpp"

#include <map>
#include <set>

#include "trigva/errors.hpp"

namespace trigva::liealg {

AffElem& AffElem::operator+=(const AffElem& o) {
  terms += o.terms;
  central += o.central;
  return *this;
}

AffElem& AffElem::operator-=(const AffElem& o) {
  terms -= o.terms;
  central -= o.central;
  return *this;
}

AffElem tensor(const GlElem& a, int p) {
  AffElem out;
  for (const auto& [e, c] : a.terms()) out.terms.add({e.first, e.second, p}, c);
  return out;
}

AffElem affine_k(const Scalar& c) { return AffElem{{}, c}; }

GlElem t_component(const AffElem& x, int p) {
  GlElem out;
  for (const auto& [lab, c] : x.terms.terms())
    if (std::get<2>(lab) == p) out.add({std::get<0>(lab), std::get<1>(lab)}, c);
  return out;
}

AffElem affine_bracket(const AffElem& x, const AffElem& y) {
  AffElem out;
  for (const auto& [a, c] : x.terms.terms())
    for (const auto& [b, d] : y.terms.terms()) {
      auto [m, n, p] = a;
      auto [r, s, p2] = b;
      Scalar cd = c * d;
      if (n == r) out.terms.add({m, s, p + p2}, cd);
      if (s == m) out.terms.add({r, n, p + p2}, -cd);
      if (p + p2 == 0 && m == s && n == r) out.central += Scalar(p) * cd;
    }
  return out;
}

std::string to_string(const AffElem& x) {
  return render<AffLabel>(
      x.terms,
      [](const AffLabel& k) {
        return "E[" + std::to_string(std::get<0>(k)) + "," + std::to_string(std::get<1>(k)) +
               ";t^" + std::to_string(std::get<2>(k)) + "]";
      },
      x.central, "k");
}

void CovSetup::validate() const {
  bool ok = (algebra == BaseAlgebra::A && group == Group::Z && character == Character::chi_q) ||
            (algebra == BaseAlgebra::A && group == Group::Z2xZ &&
             character != Character::chi_q) ||
            (algebra == BaseAlgebra::Atau && group == Group::Z && character == Character::chi_q);
  if (!ok) throw UsageError("unsupported covariant setup " + name());
}

std::string CovSetup::name() const {
  std::string s = algebra == BaseAlgebra::A ? "A" : "Atau";
  s += group == Group::Z ? "/Z" : "/Z2xZ";
  s += character == Character::chi_q ? "/chi_q" : character == Character::chi_B ? "/chi_B" : "/chi_D";
  if (scale != 1) s += "/scale" + std::to_string(scale);
  return s;
}

CovElem& CovElem::operator+=(const CovElem& o) {
  if (!(setup == o.setup)) throw UsageError("covariant setup mismatch");
  terms += o.terms;
  central += o.central;
  return *this;
}

CovElem& CovElem::operator-=(const CovElem& o) {
  if (!(setup == o.setup)) throw UsageError("covariant setup mismatch");
  terms -= o.terms;
  central -= o.central;
  return *this;
}

CovElem& CovElem::operator*=(const Scalar& s) {
  terms *= s;
  central *= s;
  return *this;
}

namespace {

int tau_sign(const CovSetup& s) { return s.character == Character::chi_B ? -1 : 1; }

int pow_sign(int chi, int p) { return (chi == -1 && p % 2 != 0) ? -1 : 1; }

}  // namespace

CovElem canonicalize_cov(const CovSetup& setup, const AffElem& raw) {
  setup.validate();
  CovElem out{setup, {}, raw.central};
  // G-coordinates (alpha, r, p)
  std::map<std::tuple<int, int, int>, Scalar> coords;
  for (const auto& [lab, c] : raw.terms.terms()) {
    auto [m, n, p] = lab;
    auto g = e_to_g(m, n);
    if (!g) throw UsageError("E[" + std::to_string(m) + "," + std::to_string(n) + "] is not in A");
    coords.emplace(std::tuple{g->first, g->second, p}, c);
  }
  for (const auto& [key, c] : coords) {
    auto [alpha, r, p] = key;
    Scalar c0 = c * Scalar::q(-setup.scale * r * p);
    if (setup.algebra == BaseAlgebra::Atau) {
      auto mirror = coords.find({-alpha, r, p});
      Scalar partner = mirror == coords.end() ? Scalar() : mirror->second;
      if (alpha == 0 || !(partner == -c))
        throw UsageError("element is not tau-invariant at G[" + std::to_string(alpha) + "," +
                         std::to_string(r) + "]");
      if (alpha > 0) out.terms.add({alpha, p}, c0);
      continue;
    }
    if (setup.group == Group::Z || alpha > 0) {
      out.terms.add({alpha, p}, c0);
      continue;
    }
    int chi_p = pow_sign(tau_sign(setup), p);
    if (alpha < 0) {
      out.terms.add({-alpha, p}, Scalar(-chi_p) * c0);
    } else if (chi_p == -1) {
      out.terms.add({0, p}, c0);
    }
  }
  return out;
}

CovElem cov_gen(const CovSetup& setup, int alpha, int p) {
  if (setup.algebra == BaseAlgebra::Atau) return canonicalize_cov(setup, tensor(Gtau(alpha, 0), p));
  return canonicalize_cov(setup, tensor(G(alpha, 0), p));
}

CovElem cov_central(const CovSetup& setup, const Scalar& c) {
  setup.validate();
  return CovElem{setup, {}, c};
}

AffElem lift(const CovElem& x) {
  AffElem out = affine_k(x.central);
  for (const auto& [lab, c] : x.terms.terms()) {
    GlElem base = x.setup.algebra == BaseAlgebra::Atau ? Gtau(lab.first, 0) : G(lab.first, 0);
    AffElem t = tensor(base, lab.second);
    t.terms *= c;
    out += t;
  }
  return out;
}

std::pair<int, int> support_window(const GlElem& a, const GlElem& b) {
  auto [p1, p2] = index_span(a);
  auto [r1, r2] = index_span(b);
  return {r1 - p2, r2 - p1};
}

CovElem covariant_bracket(const CovElem& x, const CovElem& y) {
  if (!(x.setup == y.setup)) throw UsageError("covariant_bracket on different setups");
  const CovSetup& s = x.setup;
  AffElem lx = lift(x), ly = lift(y);
  std::set<int> px, py;
  for (const auto& [lab, c] : lx.terms.terms()) px.insert(std::get<2>(lab));
  for (const auto& [lab, c] : ly.terms.terms()) py.insert(std::get<2>(lab));
  AffElem raw;
  int chi = tau_sign(s);
  for (int p : px) {
    GlElem a = t_component(lx, p);
    for (int p2 : py) {
      GlElem b = t_component(ly, p2);
      auto [lo, hi] = support_window(a, b);
      for (int r = lo; r <= hi; ++r) {
        GlElem ga = apply_sigma(r, a);
        Scalar phi = Scalar::q(s.scale * r * p);
        auto accumulate = [&](const GlElem& g, const Scalar& f) {
          AffElem t = tensor(gl_bracket(g, b), p + p2);
          t.terms *= f;
          raw += t;
          if (p + p2 == 0) raw.central += f * Scalar(p) * gl_form(g, b);
        };
        accumulate(ga, phi);
        if (s.group == Group::Z2xZ) accumulate(apply_tau(ga), Scalar(pow_sign(chi, p)) * phi);
      }
    }
  }
  return canonicalize_cov(s, raw);
}

std::string to_string(const CovElem& x) {
  std::string stem = x.setup.algebra == BaseAlgebra::Atau ? "Gbar_tau[" : "Gbar[";
  return render<CovLabel>(
      x.terms,
      [&stem](const CovLabel& k) {
        return stem + std::to_string(k.first) + ";t^" + std::to_string(k.second) + "]";
      },
      x.central, "k");
}

}  // namespace trigva::liealg
