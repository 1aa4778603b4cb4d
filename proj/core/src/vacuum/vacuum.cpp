#include "trigva/vacuum/vacuum.hpp"

#include <algorithm>
#include <functional>

#include "trigva/errors.hpp"

namespace trigva::vacuum {

using liealg::E;
using liealg::gl_bracket;
using liealg::gl_form;

int degree(const Monomial& m) {
  int d = 0;
  for (const auto& x : m) d -= x.n;
  return d;
}

PBWVector vacuum_vector() { return PBWVector(Monomial{}); }

std::string to_string(const PBWVector& v) {
  return render<Monomial>(v, [](const Monomial& m) {
    std::string s;
    for (const auto& x : m)
      s += "E[" + std::to_string(x.a.first) + "," + std::to_string(x.a.second) + "](" +
           std::to_string(x.n) + ")";
    return s + "1";
  });
}

VacuumModule::VacuumModule(Interval I, Scalar level) : I_(I), level_(std::move(level)) {
  if (I.hi - I.lo < 1) throw UsageError("interval must contain at least two indices");
  for (int m = I.lo; m <= I.hi; ++m)
    for (int n = I.lo; n <= I.hi; ++n)
      if ((m + n) % 2 == 0) basis_.emplace_back(m, n);
}

bool VacuumModule::in_basis(const ELabel& a) const {
  return I_.contains(a.first) && I_.contains(a.second) && (a.first + a.second) % 2 == 0;
}

void VacuumModule::check_label(const ELabel& a) const {
  if (!in_basis(a))
    throw UsageError("E[" + std::to_string(a.first) + "," + std::to_string(a.second) +
                     "] is not in the interval algebra");
}

PBWVector VacuumModule::act_monomial(const Mode& x, const Monomial& m) const {
  if (m.empty()) return x.n >= 0 ? PBWVector() : PBWVector(Monomial{x});
  const Mode& g = m.front();
  if (x.n <= -1 && !(x < g)) {
    Monomial out;
    out.reserve(m.size() + 1);
    out.push_back(x);
    out.insert(out.end(), m.begin(), m.end());
    return PBWVector(out);
  }
  auto key = std::make_pair(x, m);
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;

  Monomial rest(m.begin() + 1, m.end());
  PBWVector out;
  // g x(n) rest
  PBWVector inner = act_monomial(x, rest);
  for (const auto& [mono, c] : inner.terms()) {
    PBWVector t = act_monomial(g, mono);
    t *= c;
    out += t;
  }
  // [x(n), g(k)] rest
  int n = x.n + g.n;
  GlElem br = gl_bracket(E(x.a.first, x.a.second), E(g.a.first, g.a.second));
  for (const auto& [lab, c] : br.terms()) {
    PBWVector t = act_monomial({n, lab}, rest);
    t *= c;
    out += t;
  }
  if (n == 0) {
    Scalar f = gl_form(E(x.a.first, x.a.second), E(g.a.first, g.a.second));
    if (!f.is_zero()) out.add(rest, Scalar(x.n) * f * level_);
  }
  memo_.emplace(std::move(key), out);
  return out;
}

PBWVector VacuumModule::act(const Mode& x, const PBWVector& v) const {
  check_label(x.a);
  PBWVector out;
  for (const auto& [mono, c] : v.terms()) {
    PBWVector t = act_monomial(x, mono);
    t *= c;
    out += t;
  }
  return out;
}

PBWVector VacuumModule::act(const GlElem& a, int n, const PBWVector& v) const {
  PBWVector out;
  for (const auto& [lab, c] : a.terms()) {
    PBWVector t = act(Mode{n, lab}, v);
    t *= c;
    out += t;
  }
  return out;
}

PBWVector VacuumModule::apply_word(const std::vector<Mode>& word, const PBWVector& v) const {
  PBWVector out = v;
  for (auto it = word.rbegin(); it != word.rend(); ++it) out = act(*it, out);
  return out;
}

PBWVector VacuumModule::va_product(const GlElem& a, const GlElem& b, int j) const {
  if (j < -1) throw UsageError("va_product expects j >= -1");
  if (j >= 2) return {};
  if (j == 1) {
    PBWVector out;
    out.add(Monomial{}, level_ * gl_form(a, b));
    return out;
  }
  if (j == 0) return act(gl_bracket(a, b), -1, vacuum_vector());
  return act(a, -1, act(b, -1, vacuum_vector()));
}

PBWVector VacuumModule::d_operator(const PBWVector& v) const {
  PBWVector out;
  for (const auto& [mono, c] : v.terms()) {
    for (std::size_t i = 0; i < mono.size(); ++i) {
      Monomial word = mono;
      word[i].n -= 1;
      PBWVector t = apply_word(word, vacuum_vector());
      t *= c * Scalar(-mono[i].n);
      out += t;
    }
  }
  return out;
}

PBWVector VacuumModule::apply_R(int r, const PBWVector& v) const {
  PBWVector out;
  for (const auto& [mono, c] : v.terms()) {
    Monomial word = mono;
    for (auto& x : word) {
      x.a.first += r;
      x.a.second += r;
      if (!in_basis(x.a))
        throw WideningRequired("R_" + std::to_string(r) + " moves E[" +
                               std::to_string(x.a.first - r) + "," + std::to_string(x.a.second - r) +
                               "] outside [" + std::to_string(I_.lo) + "," + std::to_string(I_.hi) +
                               "]; widen the interval");
    }
    PBWVector t = apply_word(word, vacuum_vector());
    t *= c * Scalar::q(-r * degree(mono));
    out += t;
  }
  return out;
}

std::vector<Monomial> VacuumModule::monomials(int d) const {
  if (d < 0) return {};
  if (auto it = mono_cache_.find(d); it != mono_cache_.end()) return it->second;
  std::vector<Mode> modes;
  for (int n = -1; n >= -d; --n)
    for (const auto& a : basis_) modes.push_back({n, a});
  std::sort(modes.rbegin(), modes.rend());  // non-increasing keys
  std::vector<Monomial> out;
  Monomial cur;
  std::function<void(std::size_t, int)> rec = [&](std::size_t from, int left) {
    if (left == 0) {
      out.push_back(cur);
      return;
    }
    for (std::size_t i = from; i < modes.size(); ++i) {
      if (-modes[i].n > left) continue;
      cur.push_back(modes[i]);
      rec(i, left + modes[i].n);
      cur.pop_back();
    }
  };
  rec(0, d);
  std::sort(out.begin(), out.end());
  mono_cache_[d] = out;
  return out;
}

void Echelon::reduce(Row& r) const {
  auto it = r.begin();
  while (it != r.end()) {
    auto piv = rows_.find(it->first);
    if (piv == rows_.end()) {
      ++it;
      continue;
    }
    int key = it->first;
    mpq_class f = it->second;
    for (const auto& [k, c] : piv->second) {
      mpq_class& slot = r[k];
      slot -= f * c;
    }
    for (auto e = r.begin(); e != r.end();) e = (e->second == 0) ? r.erase(e) : std::next(e);
    it = r.upper_bound(key);
  }
}

bool Echelon::insert(Row r) {
  reduce(r);
  if (r.empty()) return false;
  mpq_class lead = r.begin()->second;
  for (auto& [k, c] : r) c /= lead;
  int p = r.begin()->first;
  rows_.emplace(p, std::move(r));
  return true;
}

bool Echelon::contains(Row r) const {
  reduce(r);
  return r.empty();
}

namespace {

Monomial power_of(const ELabel& a, int n, int power) { return Monomial(power, Mode{n, a}); }

std::string elabel(const ELabel& a) {
  return "E[" + std::to_string(a.first) + "," + std::to_string(a.second) + "]";
}

}  // namespace

CheckResult singular_check(int level, int m, int n, Interval I, int probe_degree,
                           SingularOptions opt) {
  VacuumModule mod(I, Scalar(level));
  ELabel target{m, n};
  if (!mod.in_basis(target) || m == n)
    throw UsageError("singular_check needs m != n in I with m + n even");
  int power = opt.power > 0 ? opt.power : level + 1;
  Monomial vm = power_of(target, -1, power);
  PBWVector v(vm);
  for (int j = 1; j <= probe_degree; ++j)
    for (const auto& a : mod.basis()) {
      PBWVector r = mod.act(Mode{j, a}, v);
      if (!r.is_zero())
        return {false, elabel(a) + "(" + std::to_string(j) + ") " + to_string(v) + " = " +
                           to_string(r)};
    }
  for (int p = I.lo; p <= I.hi; ++p) {
    PBWVector r = mod.act(Mode{0, {p, p}}, v);
    PBWVector rest = r;
    rest.add(vm, -r.coeff(vm));
    if (!rest.is_zero())
      return {false, elabel({p, p}) + "(0) " + to_string(v) + " = " + to_string(r) +
                         " is not proportional"};
  }
  return {};
}

IdealData::IdealData(const VacuumModule& mod, int level, int max_degree, const mpq_class& q0)
    : mod_(mod), q0_(q0) {
  int base = level + 1;
  std::vector<PBWVector> w;
  Echelon wspan;
  std::vector<PBWVector> queue;
  for (const auto& a : mod.basis())
    if (a.first != a.second) queue.emplace_back(power_of(a, -1, base));
  while (!queue.empty()) {
    PBWVector x = std::move(queue.back());
    queue.pop_back();
    if (!wspan.insert(coords(x, base))) continue;
    w.push_back(x);
    for (const auto& a : mod.basis()) queue.push_back(mod.act(Mode{0, a}, x));
  }
  for (int d = 0; d <= max_degree; ++d) {
    Echelon& e = ideal_[d];
    if (d < base) continue;
    for (const auto& word : mod.monomials(d - base))
      for (const auto& x : w) e.insert(coords(mod.apply_word(word, x), d));
  }
}

std::size_t IdealData::dim_V(int d) const { return mod_.monomials(d).size(); }

Echelon::Row IdealData::coords(const PBWVector& v, int d) const {
  auto& idx = index_[d];
  if (idx.empty()) {
    int i = 0;
    for (const auto& m : mod_.monomials(d)) idx.emplace(m, i++);
  }
  Echelon::Row r;
  for (const auto& [m, c] : v.terms()) {
    auto it = idx.find(m);
    if (it == idx.end()) throw UsageError("vector is not homogeneous of degree " + std::to_string(d));
    mpq_class x = qring::specialize(c, q0_);
    if (x != 0) r.emplace(it->second, x);
  }
  return r;
}

namespace {

int positive_level(const Scalar& level) {
  const auto& p = level.num();
  if (!level.is_laurent() || !p.is_constant()) throw UsageError("L(level,0) needs an integer level");
  mpq_class c = p.constant_term();
  if (c.get_den() != 1 || c <= 0) throw UsageError("L(level,0) needs a positive integer level");
  return static_cast<int>(c.get_num().get_si());
}

void require_two_specs(const std::vector<mpq_class>& specs) {
  if (specs.size() < 2) throw UsageError("rank computations need at least two q specializations");
  for (const auto& s : specs)
    if (s == 0 || s == 1 || s == -1) throw UsageError("q specialization must avoid 0 and +-1");
}

}  // namespace

std::size_t graded_dim(const Scalar& level, Interval I, int d, Quotient quotient,
                       const std::vector<mpq_class>& q_specs) {
  if (d < 0) throw UsageError("degree must be nonnegative");
  VacuumModule mod(I, level);
  std::size_t dv = mod.monomials(d).size();
  if (quotient == Quotient::V) return dv;
  int l = positive_level(level);
  require_two_specs(q_specs);
  std::vector<std::size_t> dims;
  for (const auto& q0 : q_specs) dims.push_back(dv - IdealData(mod, l, d, q0).at(d).rank());
  for (std::size_t i = 1; i < dims.size(); ++i)
    if (dims[i] != dims[0])
      throw DomainError("rank differs between q = " + q_specs[0].get_str() + " and q = " +
                        q_specs[i].get_str() + "; supply a third specialization");
  return dims[0];
}

CheckResult nilpotency_check_L(int level, int alpha, int m, Interval I, int window,
                               NilpotencyOptions opt) {
  if (alpha == 0) throw UsageError("nilpotency needs a root direction (alpha != 0)");
  if (level <= 0 || window < 0) throw UsageError("nilpotency needs level > 0 and window >= 0");
  require_two_specs(opt.q_specs);
  VacuumModule mod(I, Scalar(level));
  ELabel a = liealg::g_index(alpha, m);
  if (!mod.in_basis(a)) throw UsageError(elabel(a) + " is not in the interval algebra");
  int power = opt.power > 0 ? opt.power : level + 1;

  std::vector<IdealData> ideals;
  for (const auto& q0 : opt.q_specs) ideals.emplace_back(mod, level, 2 * window, q0);

  // multiplicity-weighted sum over non-increasing mode tuples with a fixed sum
  auto coefficient_op = [&](const PBWVector& v, int d, int N) {
    PBWVector out;
    std::vector<int> modes;
    std::function<void(int, int, int)> rec = [&](int left, int sum, int cap) {
      if (left == 0) {
        if (sum != N) return;
        // number of orderings of the multiset
        mpz_class count = 1;
        for (int i = 2; i <= power; ++i) count *= i;
        for (std::size_t i = 0; i < modes.size();) {
          std::size_t j = i;
          while (j < modes.size() && modes[j] == modes[i]) ++j;
          for (std::size_t k = 2; k <= j - i; ++k) count /= static_cast<unsigned long>(k);
          i = j;
        }
        std::vector<Mode> word;
        for (auto it = modes.rbegin(); it != modes.rend(); ++it) word.push_back({*it, a});
        PBWVector t = mod.apply_word(word, v);
        t *= Scalar(mpq_class(count));
        out += t;
        return;
      }
      int lo = N - sum - (left - 1) * cap;
      for (int n = cap; n >= lo; --n) {
        modes.push_back(n);
        rec(left - 1, sum + n, n);
        modes.pop_back();
      }
    };
    rec(power, 0, d);
    return out;
  };

  for (int d = 0; d <= window; ++d)
    for (const auto& mono : mod.monomials(d)) {
      PBWVector v(mono);
      for (int N = -window; N <= window; ++N) {
        int out_deg = d - N;
        if (out_deg < 0) continue;
        PBWVector r = coefficient_op(v, d, N);
        std::vector<bool> in_ideal;
        for (const auto& id : ideals)
          in_ideal.push_back(opt.quotient ? id.at(out_deg).contains(id.coords(r, out_deg))
                                          : r.is_zero());
        if (std::adjacent_find(in_ideal.begin(), in_ideal.end(), std::not_equal_to<>()) !=
            in_ideal.end())
          throw DomainError("ideal membership differs between q specializations; supply a third");
        if (!in_ideal[0])
          return {false, "coefficient of mode sum " + std::to_string(N) + " of " + elabel(a) +
                             "(x)^" + std::to_string(power) + " on " + to_string(v) + " = " +
                             to_string(r) + " is nonzero in L"};
      }
    }
  return {};
}

}  // namespace trigva::vacuum
