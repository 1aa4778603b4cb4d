#include "trigva/fock/fock.hpp"

#include "trigva/errors.hpp"
#include "trigva/qring/laurent.hpp"

namespace trigva::fock {

using qring::LaurentQ;

void Trunc::validate() const {
  if (D < 1 || K < D) throw UsageError("truncation needs K >= D >= 1");
  if (N < 1) throw UsageError("series order N must be positive");
  if (D > kMaxX) throw UsageError("truncation degree above 16 is not supported");
}

Scalar vertex_weight(int alpha, const Scalar& unit) {
  if (alpha == 0) return Scalar(1);
  Scalar u = alpha > 0 ? unit : unit.inverse();
  Scalar up(1);
  for (int i = 0; i < std::abs(alpha); ++i) up *= u;
  return up * Scalar::q(alpha) / qring::sin_bracket(alpha);
}

XExp x_var(int m, int power) {
  if (m < 1 || m > kMaxX) throw UsageError("variable index out of range");
  XExp e{};
  e[m - 1] = static_cast<std::uint8_t>(power);
  return e;
}

FockPoly FockPoly::one(const Trunc& t, const Scalar& unit) { return monomial(t, XExp{}, unit); }

FockPoly FockPoly::monomial(const Trunc& t, const XExp& e, const Scalar& unit) {
  t.validate();
  if (weight(e) > t.D) throw UsageError("monomial degree exceeds the truncation");
  FockPoly p;
  p.trunc = t;
  p.unit = unit;
  p.terms.add(e, Scalar(1));
  return p;
}

std::string FockPoly::to_string() const {
  return render<XExp>(terms, [](const XExp& e) { return monomial_string(e); });
}

namespace {

const OpTable& mode_table(const FockKernel& k, int alpha, int n, int shift) {
  return alpha == 0 ? k.heis(n) : k.vertex(alpha, n + shift);
}

// Action on one slot: returns image terms with scalar coefficients.
LinComb<XExp> slot_action(const FockKernel& k, int alpha, int n, int shift, const XExp& e,
                          const Scalar& unit, bool& clipped) {
  int col = k.basis().index(e);
  if (col < 0) throw UsageError("monomial outside the truncated basis");
  const OpTable& t = mode_table(k, alpha, n, shift);
  LinComb<XExp> out;
  if (t.cols[col].overflow) clipped = true;
  Scalar w = vertex_weight(alpha, unit);
  for (const auto& [row, c] : t.cols[col].entries) out.add(k.basis().mono(row), w * to_scalar(c, t.scale));
  return out;
}

}  // namespace

FockPoly fock_mode_action(int alpha, int n, const FockPoly& p, int shift) {
  p.trunc.validate();
  const FockKernel& k = FockKernel::get(p.trunc.D);
  FockPoly out;
  out.trunc = p.trunc;
  out.unit = p.unit;
  out.clipped = p.clipped;
  for (const auto& [e, c] : p.terms.terms()) {
    LinComb<XExp> img = slot_action(k, alpha, n, shift, e, p.unit, out.clipped);
    out.terms += c * img;
  }
  return out;
}

TensorFockVec TensorFockVec::vacuum(const Trunc& t, const std::vector<Part>& parts) {
  t.validate();
  TensorFockVec v;
  v.trunc = t;
  v.parts = parts;
  for (const auto& p : parts)
    if (p.mult < 1) throw UsageError("part multiplicities must be positive");
  v.terms.add(std::vector<XExp>(v.level(), XExp{}), Scalar(1));
  return v;
}

int TensorFockVec::level() const {
  int l = 0;
  for (const auto& p : parts) l += p.mult;
  return l;
}

std::vector<Scalar> TensorFockVec::slot_units() const {
  std::vector<Scalar> u;
  for (const auto& p : parts)
    for (int i = 0; i < p.mult; ++i) u.push_back(p.unit);
  return u;
}

TensorFockVec tensor_action(int alpha, int n, const TensorFockVec& v, int shift) {
  v.trunc.validate();
  const FockKernel& k = FockKernel::get(v.trunc.D);
  std::vector<Scalar> units = v.slot_units();
  TensorFockVec out = v;
  out.terms = {};
  for (const auto& [key, c] : v.terms.terms()) {
    for (std::size_t slot = 0; slot < key.size(); ++slot) {
      LinComb<XExp> img = slot_action(k, alpha, n, shift, key[slot], units[slot], out.clipped);
      for (const auto& [e, ce] : img.terms()) {
        std::vector<XExp> nk = key;
        nk[slot] = e;
        out.terms.add(nk, c * ce);
      }
    }
  }
  return out;
}

Scalar unitary_weight(int n, const std::vector<Part>& parts) {
  if (n == 0) throw UsageError("unitary_weight needs n != 0; the zero weight is 0");
  Scalar sum;
  for (const auto& p : parts) {
    Scalar un = n > 0 ? p.unit : p.unit.inverse(), pw(1);
    for (int i = 0; i < std::abs(n); ++i) pw *= un;
    sum += Scalar(p.mult) * pw;
  }
  return Scalar::q(n) / qring::sin_bracket(n) * sum;
}

namespace {

LaurentQ sl(int k) { return LaurentQ::monomial(k) - LaurentQ::monomial(-k); }

// 1 / (1 - q^e t) to order N, times an existing series.
std::vector<LaurentQ> times_geometric(const std::vector<LaurentQ>& s, int e) {
  std::vector<LaurentQ> r(s.size());
  for (std::size_t k = 0; k < s.size(); ++k)
    for (std::size_t j = 0; j <= k; ++j) r[k] += s[j] * LaurentQ::monomial(e * static_cast<int>(k - j));
  return r;
}

std::vector<LaurentQ> times_linear(const std::vector<LaurentQ>& s, int e) {
  std::vector<LaurentQ> r = s;
  for (std::size_t k = 1; k < s.size(); ++k) r[k] -= s[k - 1] * LaurentQ::monomial(e);
  return r;
}

}  // namespace

ContractionSeries contraction_factor(int alpha, int beta, int N) {
  if (alpha == 0 || beta == 0) throw UsageError("contraction needs nonzero alpha and beta");
  if (N < 0) throw UsageError("order must be nonnegative");
  std::vector<LaurentQ> s(N + 1), ex(N + 1);
  for (int m = 1; m <= N; ++m) s[m] = sl(m * alpha) * sl(m * beta) * LaurentQ::monomial(0, mpq_class(1, m));
  // E' = S' E
  ex[0] = LaurentQ(1);
  for (int k = 1; k <= N; ++k) {
    LaurentQ acc;
    for (int j = 1; j <= k; ++j) acc += LaurentQ(j) * s[j] * ex[k - j];
    ex[k] = acc * LaurentQ::monomial(0, mpq_class(1, k));
  }
  std::vector<LaurentQ> rat(N + 1);
  rat[0] = LaurentQ(1);
  rat = times_linear(times_linear(rat, alpha - beta), beta - alpha);
  rat = times_geometric(times_geometric(rat, alpha + beta), -alpha - beta);
  ContractionSeries out;
  out.agree = ex == rat;
  for (int k = 0; k <= N; ++k) {
    out.exponential.push_back(ex[k].to_scalar());
    out.rational.push_back(rat[k].to_scalar());
  }
  return out;
}

std::vector<Scalar> build_locality_poly(int alpha) {
  if (alpha == 0) throw UsageError("locality polynomial needs alpha != 0");
  Scalar a = Scalar::q(2 * alpha), b = Scalar::q(-2 * alpha);
  Scalar norm = (Scalar(1) - a) * (Scalar(1) - b);
  return {a * b / norm, -(a + b) / norm, Scalar(1) / norm};
}

Scalar evaluate_poly(const std::vector<Scalar>& c, const Scalar& z) {
  Scalar r;
  for (auto it = c.rbegin(); it != c.rend(); ++it) r = r * z + *it;
  return r;
}

}  // namespace trigva::fock
