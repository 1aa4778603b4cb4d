#include "trigva/liealg/gl.hpp"

#include <algorithm>

#include "trigva/errors.hpp"

namespace trigva::liealg {

GlElem E(int m, int n) { return GlElem({m, n}); }

ELabel g_index(int alpha, int m) { return {alpha + m, m - alpha}; }

GlElem G(int alpha, int m) { return GlElem(g_index(alpha, m)); }

GlElem Gtau(int alpha, int m) { return G(alpha, m) - G(-alpha, m); }

std::optional<GLabel> e_to_g(int r, int s) {
  if ((r + s) % 2 != 0) return std::nullopt;
  return GLabel{(r - s) / 2, (r + s) / 2};
}

bool in_A(const GlElem& a) {
  for (const auto& [k, c] : a.terms())
    if ((k.first + k.second) % 2 != 0) return false;
  return true;
}

GlElem gl_bracket(const GlElem& a, const GlElem& b) {
  GlElem r;
  for (const auto& [x, c] : a.terms())
    for (const auto& [y, d] : b.terms()) {
      auto [m, n] = x;
      auto [p, q] = y;
      if (n == p) r.add({m, q}, c * d);
      if (q == m) r.add({p, n}, -(c * d));
    }
  return r;
}

Scalar gl_form(const GlElem& a, const GlElem& b) {
  Scalar s;
  for (const auto& [x, c] : a.terms()) s += c * b.coeff({x.second, x.first});
  return s;
}

GlElem apply_sigma(int r, const GlElem& a) {
  GlElem out;
  for (const auto& [x, c] : a.terms()) out.add({x.first + r, x.second + r}, c);
  return out;
}

GlElem apply_tau(const GlElem& a) {
  GlElem out;
  for (const auto& [x, c] : a.terms()) out.add({x.second, x.first}, -c);
  return out;
}

std::pair<int, int> index_span(const GlElem& a) {
  if (a.is_zero()) throw UsageError("index span of zero element");
  int lo = a.terms().begin()->first.first, hi = lo;
  for (const auto& [x, c] : a.terms()) {
    lo = std::min({lo, x.first, x.second});
    hi = std::max({hi, x.first, x.second});
  }
  return {lo, hi};
}

std::string to_string(const GlElem& a) {
  return render<ELabel>(a, [](const ELabel& k) {
    return "E[" + std::to_string(k.first) + "," + std::to_string(k.second) + "]";
  });
}

}  // namespace trigva::liealg
