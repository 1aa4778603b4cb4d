#include <functional>
#include <map>
#include <sstream>

#include "trigva/errors.hpp"
#include "trigva/fock/fock.hpp"
#include "trigva/liealg/gl.hpp"

namespace trigva::fock {

namespace {

const Scalar kUnit = Scalar::unit(1);

int mode_delta(int alpha, int n, int shift) { return -(n + (alpha != 0 ? shift : 0)); }

const OpTable& mode_table(const FockKernel& k, int alpha, int n, int shift) {
  return alpha == 0 ? k.heis(n) : k.vertex(alpha, n + shift);
}

KVec combine(const std::vector<QPoly>& c, const std::vector<KVec>& x, int size) {
  KVec r = kvec_zero(size);
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!c[i].is_zero()) r = kvec_combine(QPoly(1), r, c[i], x[i]);
  return r;
}

std::string first_nonzero(const FockKernel& k, const KVec& v) {
  for (std::size_t i = 0; i < v.c.size(); ++i)
    if (!v.c[i].is_zero())
      return "coefficient of " + monomial_string(k.basis().mono(static_cast<int>(i))) + " is " +
             render_coeff(v.c[i], v.den);
  return "zero";
}

std::string label(int a, int m) { return "A(" + std::to_string(a) + "," + std::to_string(m) + ")"; }

// 1/(1-q^e t) expansions with integer coefficients.
std::vector<QPoly> series_linear(std::vector<QPoly> s, int e) {
  for (std::size_t k = s.size() - 1; k >= 1; --k) s[k] -= s[k - 1] * QPoly::monomial(e, 1);
  return s;
}

std::vector<QPoly> series_geometric(const std::vector<QPoly>& s, int e) {
  std::vector<QPoly> r(s.size());
  for (std::size_t k = 0; k < s.size(); ++k)
    for (std::size_t j = 0; j <= k; ++j) r[k] += s[j] * QPoly::monomial(e * static_cast<int>(k - j), 1);
  return r;
}

std::vector<QPoly> contraction_series(int alpha, int beta, int N, bool fault) {
  std::vector<QPoly> s(N + 1);
  s[0] = QPoly(1);
  s = series_linear(series_linear(s, alpha - beta), beta - alpha);
  return series_geometric(series_geometric(s, alpha + beta + (fault ? 1 : 0)), -alpha - beta);
}

}  // namespace

// ---- relations ----

namespace {

struct RelationCase {
  int alpha, m, beta, n;
  std::vector<QPoly> coeffs;  // for A_a A_b v, A_b A_a v, A_{a+b} v, v
};

RelationCase relation_case(int alpha, int m, int beta, int n, const RelationOptions& opt) {
  Scalar ka = vertex_weight(alpha, kUnit), kb = vertex_weight(beta, kUnit),
         kab = vertex_weight(alpha + beta, kUnit);
  long arg = static_cast<long>(m) * beta - static_cast<long>(n) * alpha;
  Scalar sc = arg == 0 ? Scalar() : qring::sin_bracket(arg + opt.scale_fault);
  if (arg == 0 && opt.scale_fault != 0) sc = qring::sin_bracket(opt.scale_fault);
  Scalar central = (alpha + beta == 0 && m + n == 0) ? Scalar(m) : Scalar();
  RelationCase rc{alpha, m, beta, n, {}};
  rc.coeffs = integral_coefficients({ka * kb, -(ka * kb), -(sc * kab), -central});
  return rc;
}

// Returns false and fills the witness on the first failing vector.
bool run_relation(const FockKernel& k, const RelationCase& rc, int shift, int max_v_degree,
                  std::string& witness, long& checked) {
  const int D = k.basis().max_degree(), size = k.size();
  const OpTable& ta = mode_table(k, rc.alpha, rc.m, shift);
  const OpTable& tb = mode_table(k, rc.beta, rc.n, shift);
  const OpTable& tab = mode_table(k, rc.alpha + rc.beta, rc.m + rc.n, shift);
  int da = mode_delta(rc.alpha, rc.m, shift), db = mode_delta(rc.beta, rc.n, shift);
  for (int i = 0; i < size; ++i) {
    int d = k.basis().degree(i);
    if (d > max_v_degree || d + da > D || d + db > D || d + da + db > D) continue;
    KVec v = kvec_unit(size, i);
    KVec ab = k.apply(ta, k.apply(tb, v)), ba = k.apply(tb, k.apply(ta, v)), c = k.apply(tab, v);
    KVec r = combine(rc.coeffs, {ab, ba, c, v}, size);
    ++checked;
    if (r.clipped || !r.is_zero()) {
      std::ostringstream os;
      os << "[" << label(rc.alpha, rc.m) << "," << label(rc.beta, rc.n) << "] on "
         << monomial_string(k.basis().mono(i)) << ": "
         << (r.clipped ? "image left the truncation" : "residual " + first_nonzero(k, r));
      witness = os.str();
      return false;
    }
  }
  return true;
}

}  // namespace

CheckResult relation_check_single(int alpha, int m, int beta, int n, const Trunc& t,
                                  const RelationOptions& opt) {
  t.validate();
  const FockKernel& k = FockKernel::get(t.D);
  CheckResult res;
  long checked = 0;
  res.pass = run_relation(k, relation_case(alpha, m, beta, n, opt), opt.shift, t.D, res.witness, checked);
  return res;
}

CheckResult relation_check(int amax, int window, const Trunc& t, const RelationOptions& opt) {
  t.validate();
  if (amax < 0 || window < 0) throw UsageError("relation box must be nonnegative");
  const FockKernel& k = FockKernel::get(t.D);
  CheckResult res;
  long checked = 0;
  for (int a = -amax; a <= amax; ++a)
    for (int b = -amax; b <= amax; ++b)
      for (int m = -window; m <= window; ++m)
        for (int n = -window; n <= window; ++n)
          if (!run_relation(k, relation_case(a, m, b, n, opt), opt.shift, t.D - window, res.witness,
                            checked)) {
            res.pass = false;
            return res;
          }
  if (checked == 0) throw UsageError("relation window leaves no vector to check");
  return res;
}

int probe_mode_shift(const Trunc& t) {
  Trunc small = t;
  small.D = std::min(t.D, 6);
  small.K = std::max(small.K, small.D);
  std::vector<int> ok;
  for (int s : {0, 1}) {
    RelationOptions opt;
    opt.shift = s;
    if (relation_check(1, 1, small, opt).pass) ok.push_back(s);
  }
  if (ok.size() != 1) throw DomainError("mode-convention probe did not select a unique shift");
  return ok[0];
}

// ---- OPE ----

CheckResult ope_check(int alpha, int beta, const XExp& v0, const Trunc& t, const OpeOptions& opt) {
  t.validate();
  if (alpha == 0 || beta == 0) throw UsageError("ope_check needs nonzero alpha and beta");
  const FockKernel& k = FockKernel::get(t.D);
  const int D = t.D, size = k.size();
  int idx = k.basis().index(v0);
  if (idx < 0) throw UsageError("vector outside the truncation");
  const int d = weight(v0);
  std::vector<QPoly> f = contraction_series(alpha, beta, t.N, opt.fault);
  KVec v = kvec_unit(size, idx);
  std::map<int, KVec> ann_b;
  for (int kb = 0; kb <= d; ++kb) ann_b[kb] = k.apply(k.ann(beta, kb), v);
  // normal-ordered coefficient of z^{-A} w^{-B}
  auto normal = [&](int A, int B) {
    KVec acc = kvec_zero(size);
    for (int kb = 0; kb <= d; ++kb) {
      int jb = kb - B;
      if (jb < 0) continue;
      for (int ka = 0; ka <= d - kb; ++ka) {
        int ja = ka - A;
        if (ja < 0 || d - ka - kb + ja + jb > D) continue;
        KVec x = k.apply(k.cre(alpha, ja), k.apply(k.cre(beta, jb), k.apply(k.ann(alpha, ka), ann_b[kb])));
        acc = kvec_combine(QPoly(1), acc, QPoly(1), x);
      }
    }
    return acc;
  };
  CheckResult res;
  long checked = 0;
  for (int B = d - std::min(t.N, D); B <= d; ++B)
    for (int A = d - B - D; A <= d - B; ++A) {
      KVec lhs = k.apply(k.vertex(alpha, A), k.apply(k.vertex(beta, B), v));
      KVec rhs = kvec_zero(size);
      for (int i = std::max(0, A - d); i <= d - B; ++i)
        if (!f[i].is_zero()) rhs = kvec_combine(QPoly(1), rhs, f[i], normal(A - i, B + i));
      KVec diff = kvec_combine(QPoly(1), lhs, QPoly(-1), rhs);
      ++checked;
      if (lhs.clipped || rhs.clipped || !diff.is_zero()) {
        std::ostringstream os;
        os << "X(" << alpha << ")X(" << beta << ") at z^" << -A << " w^" << -B << " on "
           << monomial_string(v0) << ": "
           << (diff.clipped ? "image left the truncation" : "mismatch, " + first_nonzero(k, diff));
        res.pass = false;
        res.witness = os.str();
        return res;
      }
    }
  return res;
}

// ---- locality ----

CheckResult locality_check(int alpha, int beta, const XExp& v0, const Trunc& t, const LocalityOptions& opt) {
  t.validate();
  const FockKernel& k = FockKernel::get(t.D);
  const int D = t.D, size = k.size();
  int idx = k.basis().index(v0);
  if (idx < 0) throw UsageError("vector outside the truncation");
  const int d = weight(v0);
  KVec v = kvec_unit(size, idx);
  // commutator of raw coefficients; nullopt-like flag when a product is inexact
  auto comm = [&](int M, int Nn, bool& ok) {
    int da = mode_delta(alpha, M, 0), db = mode_delta(beta, Nn, 0);
    if (d + da > D || d + db > D || d + da + db > D) {
      ok = false;
      return kvec_zero(size);
    }
    const OpTable& ta = mode_table(k, alpha, M, 0);
    const OpTable& tb = mode_table(k, beta, Nn, 0);
    return kvec_combine(QPoly(1), k.apply(ta, k.apply(tb, v)), QPoly(-1), k.apply(tb, k.apply(ta, v)));
  };
  QPoly b = QPoly::monomial(alpha + beta, 1), binv = QPoly::monomial(-alpha - beta, 1);
  CheckResult res;
  long checked = 0;
  const int w = t.N;
  for (int M = -w; M <= w; ++M)
    for (int Nn = -w; Nn <= w; ++Nn) {
      bool ok = true;
      KVec r;
      if (opt.drop_factor) {
        KVec c1 = comm(M + 1, Nn, ok), c2 = comm(M, Nn + 1, ok);
        if (!ok) continue;
        r = kvec_combine(QPoly(1), c1, QPoly(0) - b, c2);
      } else {
        KVec c1 = comm(M + 2, Nn, ok), c2 = comm(M + 1, Nn + 1, ok), c3 = comm(M, Nn + 2, ok);
        if (!ok) continue;
        r = kvec_combine(QPoly(1), kvec_combine(QPoly(1), c1, QPoly(0) - (b + binv), c2), QPoly(1), c3);
      }
      ++checked;
      if (r.clipped || !r.is_zero()) {
        std::ostringstream os;
        os << "locality polynomial times [X(" << alpha << ")(x),X(" << beta << ")(z)] at x^" << -M
           << " z^" << -Nn << " on " << monomial_string(v0) << ": " << first_nonzero(k, r);
        res.pass = false;
        res.witness = os.str();
        return res;
      }
    }
  if (checked == 0) throw UsageError("locality window leaves nothing to check");
  return res;
}

// ---- coincidence vanishing ----

namespace {

// Sum of c * val / den over flattened tensor indices, with a shared denominator.
struct SparseAcc {
  std::map<long, QPoly> c;
  i128 den = 1;

  void add(long idx, const QPoly& coef, const QPoly& val, i128 d) {
    if (den % d != 0) {
      i128 a = den, b = d;
      while (b != 0) {
        i128 tmp = a % b;
        a = b;
        b = tmp;
      }
      i128 nden = checked_mul(den / a, d), up = nden / den;
      for (auto& [i, p] : c) p *= up;
      den = nden;
    }
    QPoly cf = coef;
    cf *= den / d;
    c[idx].add_product(cf, val);
  }
  bool is_zero() const {
    for (const auto& [i, p] : c)
      if (!p.is_zero()) return false;
    return true;
  }
};

CheckResult vanish_closed_form(int alpha, const Trunc& t, const VanishOptions& opt, int tmax) {
  const FockKernel& k = FockKernel::get(t.D);
  const int size = k.size();
  const int order = std::max(t.N, 3);
  std::vector<QPoly> g = contraction_series(alpha, alpha, order, false);
  if (!opt.drop_factor) g = series_linear(g, 2 * alpha);
  g = series_linear(g, -2 * alpha);
  CheckResult res;
  for (int j = 3; j <= order; ++j)
    if (!g[j].is_zero()) {
      res.pass = false;
      res.witness = "prefactor times contraction is not a polynomial: t^" + std::to_string(j) +
                    " coefficient " + render_coeff(g[j], 1);
      return res;
    }
  QPoly g1;
  for (const auto& c : g) g1 += c;
  for (int tt = 0; tt <= tmax; ++tt) {
    // diagonal of the normal-ordered product on the vacuum, output degree tt
    KVec diag = kvec_zero(size);
    KVec vac = kvec_unit(size, 0);
    for (int j1 = 0; j1 <= tt; ++j1)
      diag = kvec_combine(QPoly(1), diag, QPoly(1), k.apply(k.cre(alpha, j1), k.apply(k.cre(alpha, tt - j1), vac)));
    KVec s = kvec_combine(QPoly(0), diag, g1, diag);
    if (s.clipped || !s.is_zero()) {
      res.pass = false;
      res.witness = "degree " + std::to_string(tt) + " component at coincidence: " + first_nonzero(k, s);
      return res;
    }
  }
  return res;
}

CheckResult vanish_direct(int alpha, int level, const Trunc& t, const VanishOptions& opt, int tmax) {
  const FockKernel& k = FockKernel::get(t.D);
  const int size = k.size(), r = level + 1;
  // prefactor prod_{i<j} P(z_j/z_i), P(t) = 1 - (q^{2a} + q^{-2a}) t + t^2
  std::vector<std::vector<QPoly>> pair_coeffs;
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < r; ++i)
    for (int j = i + 1; j < r; ++j) {
      std::vector<QPoly> p(3);
      p[0] = QPoly(1);
      p = series_linear(p, -2 * alpha);
      if (!(opt.drop_factor && pairs.empty())) p = series_linear(p, 2 * alpha);
      pairs.emplace_back(i, j);
      pair_coeffs.push_back(p);
    }
  // expanded prefactor: shift vector on the b indices -> coefficient
  std::map<std::vector<int>, QPoly> pref;
  std::function<void(std::size_t, std::vector<int>&, QPoly)> expand = [&](std::size_t p, std::vector<int>& sh, QPoly c) {
    if (p == pairs.size()) {
      pref[sh] += c;
      return;
    }
    auto [i, j] = pairs[p];
    for (int e = 0; e < 3; ++e) {
      if (pair_coeffs[p][e].is_zero()) continue;
      sh[i] += e;
      sh[j] -= e;
      expand(p + 1, sh, c * pair_coeffs[p][e]);
      sh[i] -= e;
      sh[j] += e;
    }
  };
  std::vector<int> zero(r, 0);
  expand(0, zero, QPoly(1));

  std::map<std::vector<int>, KVec> memo;
  auto slot_product = [&](const std::vector<int>& seq) -> const KVec& {
    auto it = memo.find(seq);
    if (it != memo.end()) return it->second;
    KVec x = kvec_unit(size, 0);
    for (auto a = seq.rbegin(); a != seq.rend(); ++a) {
      x = k.apply(k.vertex(alpha, *a), x);
      if (x.is_zero()) break;
    }
    return memo.emplace(seq, std::move(x)).first->second;
  };

  long stride = size;
  // Adds the coefficient of z^{-b} in prefactor * product for one slot assignment;
  // false if some raw product leaves the truncation.
  auto accumulate = [&](const std::vector<int>& sigma, const std::vector<int>& b, SparseAcc& acc) {
    for (const auto& [sh, c] : pref) {
      std::vector<std::vector<int>> seqs(level);
      for (int m = 0; m < r; ++m) seqs[sigma[m]].push_back(b[m] - sh[m]);
      std::vector<const KVec*> parts;
      bool zero_part = false;
      for (int s = 0; s < level; ++s) {
        const KVec& x = slot_product(seqs[s]);
        if (x.clipped) return false;
        if (x.is_zero()) zero_part = true;
        parts.push_back(&x);
      }
      if (zero_part) continue;
      std::function<void(int, long, QPoly, i128)> outer = [&](int s, long id, QPoly val, i128 den) {
        if (s == level) {
          acc.add(id, c, val, den);
          return;
        }
        const KVec& x = *parts[s];
        for (int j = 0; j < size; ++j)
          if (!x.c[j].is_zero()) outer(s + 1, id * stride + j, val * x.c[j], checked_mul(den, x.den));
      };
      outer(0, 0, QPoly(1), 1);
    }
    return true;
  };
  // b with lo <= b <= hi componentwise and sum T
  auto for_each_b = [&](const std::vector<int>& lo, const std::vector<int>& hi, int T,
                        const std::function<void(const std::vector<int>&)>& f) {
    std::vector<int> b(r);
    std::function<void(int, int)> rec = [&](int i, int sum) {
      if (i == r - 1) {
        b[i] = T - sum;
        if (b[i] >= lo[i] && b[i] <= hi[i]) f(b);
        return;
      }
      for (b[i] = lo[i]; b[i] <= hi[i]; ++b[i]) rec(i + 1, sum + b[i]);
    };
    rec(0, 0);
  };
  std::vector<std::vector<int>> sigmas;
  {
    std::vector<int> sigma(r, 0);
    std::function<void(int)> rec = [&](int m) {
      if (m == r) {
        sigmas.push_back(sigma);
        return;
      }
      for (int s = 0; s < level; ++s) {
        sigma[m] = s;
        rec(m + 1);
      }
    };
    rec(0);
  }
  auto counts_of = [&](const std::vector<int>& sigma) {
    std::vector<int> counts(level, 0);
    for (int s : sigma) ++counts[s];
    return counts;
  };

  CheckResult res;
  for (int tt = 0; tt <= tmax; ++tt) {
    const int T = -tt;
    std::vector<int> hi(r), lo(r);
    int hisum = 0;
    for (int i = 0; i < r; ++i) hisum += hi[i] = 2 * (r - 1 - i);
    for (int i = 0; i < r; ++i) lo[i] = T - (hisum - hi[i]);
    // coefficients just past the predicted support must vanish
    for (int i = 0; i < r; ++i) {
      std::vector<int> blo = lo, bhi = hi;
      for (int j = 0; j < r; ++j) blo[j] -= 1;
      blo[i] = bhi[i] = hi[i] + 1;
      for (const auto& sigma : sigmas)
        for_each_b(blo, bhi, T, [&](const std::vector<int>& b) {
          if (!res.pass) return;
          SparseAcc acc;
          if (!accumulate(sigma, b, acc) || acc.is_zero()) return;
          std::ostringstream os;
          os << "prefactor times product is not polynomial: nonzero coefficient at z^(";
          for (int j = 0; j < r; ++j) os << (j ? "," : "") << -b[j];
          os << ") for slots (";
          for (int j = 0; j < r; ++j) os << (j ? "," : "") << sigma[j] + 1;
          os << ")";
          res.pass = false;
          res.witness = os.str();
        });
      if (!res.pass) return res;
    }
    // slot assignment classes keyed by counts per slot
    std::map<std::vector<int>, SparseAcc> classes;
    for (const auto& sigma : sigmas) {
      SparseAcc& acc = classes[counts_of(sigma)];
      for_each_b(lo, hi, T, [&](const std::vector<int>& b) {
        if (!accumulate(sigma, b, acc)) throw UsageError("coincidence window exceeds the truncation degree");
      });
    }
    for (const auto& [counts, acc] : classes) {
      if (acc.is_zero()) continue;
      std::ostringstream os;
      os << "degree " << tt << " component for slot counts (";
      for (std::size_t s = 0; s < counts.size(); ++s) os << (s ? "," : "") << counts[s];
      os << ") does not vanish at coincidence";
      for (const auto& [id, p] : acc.c)
        if (!p.is_zero()) {
          std::string mono;
          long rest = id;
          std::vector<std::string> names(level);
          for (int s = level - 1; s >= 0; --s) {
            names[s] = monomial_string(k.basis().mono(static_cast<int>(rest % stride)));
            rest /= stride;
          }
          for (int s = 0; s < level; ++s) mono += (s ? " (x) " : "") + names[s];
          os << ": coefficient of " << mono << " is " << render_coeff(p, acc.den);
          break;
        }
      res.pass = false;
      res.witness = os.str();
      return res;
    }
  }
  return res;
}

}  // namespace

CheckResult coincidence_vanish_check(int alpha, int level, const Trunc& t, const VanishOptions& opt) {
  t.validate();
  if (alpha == 0) throw UsageError("coincidence vanishing needs alpha != 0");
  if (level < 1) throw UsageError("level must be positive");
  const int r = level + 1;
  bool direct = level >= 2 || opt.direct;
  int tmax = direct ? t.D - r * (r - 1) : t.D;
  if (opt.max_out_degree >= 0) {
    if (opt.max_out_degree > tmax) throw UsageError("requested output degree exceeds the truncation");
    tmax = opt.max_out_degree;
  }
  if (tmax < 0)
    throw UsageError("truncation degree " + std::to_string(t.D) + " too small for level " +
                     std::to_string(level) + "; need at least " + std::to_string(r * (r - 1)));
  return direct ? vanish_direct(alpha, level, t, opt, tmax) : vanish_closed_form(alpha, t, opt, tmax);
}

// ---- quasi-commutator ----

CheckResult quasi_commutator_check(int alpha, int beta, int window, const Trunc& t, const QuasiOptions& opt,
                                   std::vector<int>* support) {
  t.validate();
  if (std::abs(alpha) > 2 || std::abs(beta) > 2) throw UsageError("quasi_commutator_check supports |alpha|,|beta| <= 2");
  if (window < 0) throw UsageError("window must be nonnegative");
  const FockKernel& k = FockKernel::get(t.D);
  const int size = k.size();
  CheckResult res;

  // (i) relations
  long checked = 0;
  RelationOptions ropt;
  ropt.shift = opt.shift;
  for (int m = -window; m <= window; ++m)
    for (int n = -window; n <= window; ++n)
      if (!run_relation(k, relation_case(alpha, m, beta, n, ropt), opt.shift, t.D - window, res.witness, checked)) {
        res.pass = false;
        res.witness = "relations: " + res.witness;
        return res;
      }

  // (ii) reconstruction from products in the level-1 vacuum module
  vacuum::VacuumModule mod(vacuum::Interval{-6 - std::abs(opt.fault_r), 6 + std::abs(opt.fault_r)}, Scalar(1));
  liealg::GlElem u = liealg::G(alpha, 0), w = liealg::G(beta, 0);
  struct Shift {
    int r;
    vacuum::PBWVector p0, p1;
  };
  std::vector<Shift> shifts;
  std::vector<int> found;
  for (int r = -4; r <= 4; ++r) {
    liealg::GlElem su = liealg::apply_sigma(r + opt.fault_r, u);
    Shift s{r, mod.va_product(su, w, 0), mod.va_product(su, w, 1)};
    for (int j = 2; j <= 3; ++j)
      if (!mod.va_product(su, w, j).is_zero()) throw DomainError("vacuum product beyond order 1 is nonzero");
    if (s.p0.is_zero() && s.p1.is_zero()) continue;
    found.push_back(r);
    shifts.push_back(std::move(s));
  }
  if (support) *support = found;
  for (int r : found)
    if (r != 0 && r != alpha + beta && r != -alpha - beta) {
      res.pass = false;
      res.witness = "product support contains r = " + std::to_string(r);
      return res;
    }

  for (int m = -window; m <= window; ++m)
    for (int n = -window; n <= window; ++n) {
      // terms: A_a A_b v, A_b A_a v, then one per reconstructed mode, then v
      std::vector<Scalar> kap;
      std::vector<std::pair<int, int>> modes;  // (gamma, p) per reconstructed term
      Scalar ka = vertex_weight(alpha, kUnit), kb = vertex_weight(beta, kUnit);
      kap.push_back(ka * kb);
      kap.push_back(-(ka * kb));
      Scalar central;
      for (const auto& s : shifts) {
        Scalar qr = Scalar::q(s.r * m);
        for (const auto& [mono, c] : s.p0.terms()) {
          if (mono.size() != 1 || mono[0].n != -1) throw DomainError("unexpected product shape");
          auto [i, j] = mono[0].a;
          int gamma = (i - j) / 2, mE = (i + j) / 2;
          modes.emplace_back(gamma, m + n);
          kap.push_back(-(qr * c * Scalar::q(-mE * (m + n)) * vertex_weight(gamma, kUnit)));
        }
        if (m + n == 0)
          for (const auto& [mono, c] : s.p1.terms()) {
            if (!mono.empty()) throw DomainError("unexpected product shape");
            central += qr * Scalar(m) * c;
          }
      }
      kap.push_back(-central);
      std::vector<QPoly> coeffs = integral_coefficients(kap);
      const OpTable& ta = mode_table(k, alpha, m, opt.shift);
      const OpTable& tb = mode_table(k, beta, n, opt.shift);
      int da = mode_delta(alpha, m, opt.shift), db = mode_delta(beta, n, opt.shift);
      for (int i = 0; i < size; ++i) {
        int d = k.basis().degree(i);
        if (d > t.D - window || d + da > t.D || d + db > t.D || d + da + db > t.D) continue;
        bool fits = true;
        for (auto [g, p] : modes)
          if (d + mode_delta(g, p, opt.shift) > t.D) fits = false;
        if (!fits) continue;
        KVec v = kvec_unit(size, i);
        std::vector<KVec> xs{k.apply(ta, k.apply(tb, v)), k.apply(tb, k.apply(ta, v))};
        for (auto [g, p] : modes) xs.push_back(k.apply(mode_table(k, g, p, opt.shift), v));
        xs.push_back(v);
        KVec r = combine(coeffs, xs, size);
        if (r.clipped || !r.is_zero()) {
          std::ostringstream os;
          os << "reconstruction of [" << label(alpha, m) << "," << label(beta, n) << "] on "
             << monomial_string(k.basis().mono(i)) << ": " << first_nonzero(k, r);
          res.pass = false;
          res.witness = os.str();
          return res;
        }
      }
    }
  return res;
}

// ---- weights ----

CheckResult weight_check(int n, const std::vector<Part>& parts, const WeightOptions& opt) {
  Trunc t{2, 2, 1};
  TensorFockVec vac = TensorFockVec::vacuum(t, parts);
  TensorFockVec img = tensor_action(n, 0, vac);
  std::vector<Part> shifted = parts;
  if (opt.fault != 0)
    for (auto& p : shifted) p.unit *= Scalar::unit(7, opt.fault);
  Scalar want = unitary_weight(n, shifted);
  CheckResult res;
  auto key = vac.terms.terms().begin()->first;
  Scalar got = img.terms.coeff(key);
  if (img.terms.size() > (got.is_zero() ? 0u : 1u)) {
    res.pass = false;
    res.witness = "zero mode moves the tensor vacuum";
  } else if (!(got == want)) {
    res.pass = false;
    res.witness = "eigenvalue " + got.to_string() + " but unitary weight " + want.to_string();
  }
  return res;
}

}  // namespace trigva::fock
