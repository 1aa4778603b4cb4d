#include "trigva/cli/suite.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <random>
#include <set>
#include <sstream>

#include "trigva/errors.hpp"
#include "trigva/liealg/checks.hpp"

namespace trigva::cli {

using liealg::CovElem;
using liealg::CovSetup;
using liealg::Kind;
using liealg::TrigElem;
using vacuum::CheckResult;

std::string status_name(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Error: return "error";
  }
  return "error";
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"jacobi", "iso", "singular", "dims", "fock-relations",
                                                 "ope", "vanish", "quasi-comm", "weights", "all"};
  return names;
}

const std::vector<std::pair<std::string, std::string>>& fault_names() {
  static const std::vector<std::pair<std::string, std::string>> faults = {
      {"jacobi-twist", "jacobi"},          {"iso-character", "iso"},
      {"singular-power", "singular"},      {"dims-level-shift", "dims"},
      {"fock-structure", "fock-relations"}, {"ope-contraction", "ope"},
      {"locality-drop", "ope"},            {"vanish-drop-factor", "vanish"},
      {"nilpotency-no-quotient", "vanish"}, {"quasi-shift", "quasi-comm"},
      {"r-axiom-twist", "quasi-comm"},     {"weight-unit", "weights"},
  };
  return faults;
}

void SuiteConfig::validate() const {
  if (box < 1 || jacobi_box < 1 || samples < 1) throw UsageError("boxes and sample counts must be positive");
  if (interval.lo > interval.hi) throw UsageError("interval must satisfy LO <= HI");
  if (levels.empty()) throw UsageError("at least one level is required");
  for (int l : levels)
    if (l < 1) throw UsageError("levels must be positive");
  trunc.validate();
  if (relation_window < 0 || relation_alpha < 0) throw UsageError("relation window must be nonnegative");
  if (q_specs.size() < 2) throw UsageError("at least two q specializations are required");
  std::set<mpq_class> distinct(q_specs.begin(), q_specs.end());
  if (distinct.size() != q_specs.size()) throw UsageError("q specializations must be distinct");
  for (const auto& q : q_specs)
    if (q == 0 || q == 1 || q == -1) throw UsageError("q specializations must avoid 0 and +-1");
  for (const auto& f : perturb) {
    bool known = false;
    for (const auto& [name, suite] : fault_names()) known = known || name == f;
    if (!known) throw UsageError("unknown fault: " + f);
  }
}

bool SuiteConfig::has_fault(const std::string& name) const {
  return std::find(perturb.begin(), perturb.end(), name) != perturb.end();
}

namespace {

struct Outcome {
  bool pass = true;
  std::string witness;
  Params extra;
};

class Runner {
 public:
  explicit Runner(const SuiteConfig& c) : cfg(c) {}

  void run(const std::string& id, const std::string& anchor, Params params,
           const std::function<Outcome()>& body) {
    Record r;
    r.check_id = id;
    r.paper_anchor = anchor;
    auto t0 = std::chrono::steady_clock::now();
    try {
      Outcome o = body();
      r.status = o.pass ? Status::Pass : Status::Fail;
      if (!o.pass) r.witness = o.witness.empty() ? "failed" : o.witness;
      for (auto& p : o.extra) params.push_back(std::move(p));
    } catch (const std::exception& e) {
      r.status = Status::Error;
      r.witness = e.what();
    }
    auto t1 = std::chrono::steady_clock::now();
    r.params = std::move(params);
    if (cfg.timing) r.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
    report.push_back(std::move(r));
  }

  const SuiteConfig& cfg;
  Report report;
};

std::mt19937_64 rng_for(const SuiteConfig& c, std::uint64_t salt) {
  std::seed_seq seq{static_cast<std::uint32_t>(c.seed), static_cast<std::uint32_t>(c.seed >> 32),
                    static_cast<std::uint32_t>(salt)};
  return std::mt19937_64(seq);
}

int uniform(std::mt19937_64& g, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(g); }

Outcome from(const CheckResult& r) { return {r.pass, r.witness, {}}; }

// Grading twist q^m on each output term; breaks the Jacobi identity.
TrigElem twist(TrigElem x) {
  TrigElem out = x;
  out.terms = {};
  for (const auto& [l, c] : x.terms.terms()) out.terms.add(l, c * Scalar::q(l.second));
  return out;
}

CovElem twist(CovElem x) {
  CovElem out = x;
  out.terms = {};
  for (const auto& [l, c] : x.terms.terms()) out.terms.add(l, c * Scalar::q(l.second));
  return out;
}

// ---- suites ----

void suite_jacobi(Runner& R) {
  const SuiteConfig& c = R.cfg;
  bool fault = c.has_fault("jacobi-twist");
  for (Kind k : {Kind::A, Kind::B, Kind::C, Kind::D}) {
    std::string letter(1, liealg::kind_letter(k));
    R.run("jacobi." + letter, "Jacobi identity of the sine algebra, type " + letter,
          {{"kind", letter}, {"box", long(c.jacobi_box)}, {"samples", long(c.samples)}, {"seed", long(c.seed)}},
          [&]() -> Outcome {
            auto g = rng_for(c, 100 + static_cast<int>(k));
            auto br = [&](const TrigElem& x, const TrigElem& y) {
              return fault ? twist(liealg::trig_bracket(x, y)) : liealg::trig_bracket(x, y);
            };
            for (int i = 0; i < c.samples; ++i) {
              TrigElem v[3];
              int lab[6];
              for (int j = 0; j < 3; ++j) {
                lab[2 * j] = uniform(g, -c.jacobi_box, c.jacobi_box);
                lab[2 * j + 1] = uniform(g, -c.jacobi_box, c.jacobi_box);
                v[j] = liealg::trig_gen(k, lab[2 * j], lab[2 * j + 1]);
              }
              TrigElem res = liealg::jacobi_residual(br, v[0], v[1], v[2]);
              if (!res.is_zero()) {
                std::ostringstream os;
                os << "triple (" << lab[0] << "," << lab[1] << "),(" << lab[2] << "," << lab[3] << "),("
                   << lab[4] << "," << lab[5] << "): residual " << liealg::to_string(res);
                return {false, os.str(), {}};
              }
            }
            return {};
          });
  }
  for (CovSetup s : {CovSetup::chi_q(), CovSetup::chi_B(), CovSetup::chi_D(), CovSetup::tau()}) {
    R.run("jacobi.covariant." + s.name(), "skew-symmetry and Jacobi identity of the covariant bracket",
          {{"setup", s.name()}, {"box", long(c.box)}, {"samples", long(c.samples)}, {"seed", long(c.seed)}},
          [&]() -> Outcome {
            auto g = rng_for(c, 200 + static_cast<int>(s.character) + 10 * static_cast<int>(s.algebra));
            auto br = [&](const CovElem& x, const CovElem& y) {
              return fault ? twist(liealg::covariant_bracket(x, y)) : liealg::covariant_bracket(x, y);
            };
            auto random = [&]() {
              CovElem x = liealg::cov_central(s, Scalar(uniform(g, -1, 1)));
              int n = uniform(g, 1, 2);
              for (int i = 0; i < n; ++i)
                x += Scalar(uniform(g, -2, 2)) * Scalar::q(uniform(g, -1, 1)) *
                     liealg::cov_gen(s, uniform(g, -c.box, c.box), uniform(g, -c.box, c.box));
              return x;
            };
            for (int i = 0; i < c.samples; ++i) {
              CovElem x = random(), y = random(), z = random();
              if (!(br(x, y) + br(y, x)).is_zero())
                return {false, "skew-symmetry fails for " + liealg::to_string(x) + " , " + liealg::to_string(y), {}};
              CovElem res = liealg::jacobi_residual(br, x, y, z);
              if (!res.is_zero())
                return {false, "Jacobi residual " + liealg::to_string(res) + " for " + liealg::to_string(x) + " , " +
                                   liealg::to_string(y) + " , " + liealg::to_string(z),
                        {}};
            }
            return {};
          });
  }
}

void suite_iso(Runner& R) {
  const SuiteConfig& c = R.cfg;
  int scale = c.has_fault("iso-character") ? 2 : 1;
  const std::pair<liealg::IsoKind, const char*> kinds[] = {
      {liealg::IsoKind::A, "sine algebra of type A to the covariant algebra over gl, c -> k"},
      {liealg::IsoKind::B, "type B to the covariant algebra with the B character, c -> k/2"},
      {liealg::IsoKind::CtoB, "type C to type B composed with the B dictionary"},
      {liealg::IsoKind::D, "type D to the covariant algebra with the D character, c -> k/2"},
      {liealg::IsoKind::Dtau, "type D to the tau-twisted covariant algebra, c -> k"}};
  for (const auto& [k, anchor] : kinds) {
    R.run("iso." + liealg::iso_name(k), anchor, {{"box", long(c.box)}, {"character_scale", long(scale)}},
          [&, k = k]() -> Outcome {
            auto o = liealg::iso_check(k, c.box, scale);
            return {o.pass, o.witness, {{"checked", o.checked}}};
          });
  }
}

void suite_singular(Runner& R) {
  const SuiteConfig& c = R.cfg;
  for (int l : c.levels)
    for (int m = c.interval.lo; m <= c.interval.hi; ++m)
      for (int n = c.interval.lo; n <= c.interval.hi; ++n) {
        if (m == n || (m + n) % 2 != 0) continue;
        std::ostringstream id;
        id << "singular.l" << l << ".E" << m << "_" << n;
        vacuum::SingularOptions opt;
        if (c.has_fault("singular-power")) opt.power = l;
        R.run(id.str(), "E_{m,n}(-1)^{level+1} 1 is singular in V(level,0)",
              {{"level", long(l)}, {"m", long(m)}, {"n", long(n)}, {"probe_degree", long(l + 2)}},
              [&, l, m, n, opt]() { return from(vacuum::singular_check(l, m, n, c.interval, l + 2, opt)); });
      }
}

long pbw_count(int dim, int d) {
  std::vector<long> a(d + 1, 0);
  a[0] = 1;
  for (int n = 1; n <= d; ++n)
    for (int copy = 0; copy < dim; ++copy)
      for (int k = n; k <= d; ++k) a[k] += a[k - n];
  return a[d];
}

std::string join(const std::vector<long>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

void suite_dims(Runner& R) {
  const SuiteConfig& c = R.cfg;
  vacuum::Interval small{0, 1};
  R.run("dims.V", "graded dimensions of the vacuum module equal the PBW count",
        {{"interval", "0..1"}, {"max_degree", 4L}}, [&]() -> Outcome {
          vacuum::VacuumModule mod(small, Scalar(1));
          int dim = static_cast<int>(mod.basis().size());
          std::vector<long> got, want;
          for (int d = 0; d <= 4; ++d) {
            got.push_back(static_cast<long>(vacuum::graded_dim(Scalar(1), small, d, vacuum::Quotient::V, c.q_specs)));
            want.push_back(pbw_count(dim, d));
          }
          Outcome o;
          o.extra = {{"dims", join(got)}};
          if (got != want) o = {false, "dimensions " + join(got) + " but PBW count " + join(want), o.extra};
          return o;
        });
  for (int l : c.levels) {
    if (l != 1) continue;
    int ql = c.has_fault("dims-level-shift") ? l + 1 : l;
    std::ostringstream iv;
    iv << c.interval.lo << ".." << c.interval.hi;
    R.run("dims.L.l" + std::to_string(l), "the simple quotient is strictly smaller in degree 2",
          {{"level", long(l)}, {"quotient_level", long(ql)}, {"interval", iv.str()}, {"degree", 2L}},
          [&, ql]() -> Outcome {
            long v = static_cast<long>(vacuum::graded_dim(Scalar(ql), c.interval, 2, vacuum::Quotient::V, c.q_specs));
            long L = static_cast<long>(vacuum::graded_dim(Scalar(ql), c.interval, 2, vacuum::Quotient::L, c.q_specs));
            Outcome o;
            o.extra = {{"dim_L", L}, {"dim_V", v}};
            if (!(L < v)) o = {false, "dim L = " + std::to_string(L) + " is not below dim V = " + std::to_string(v), o.extra};
            return o;
          });
  }
}

void suite_fock_relations(Runner& R) {
  const SuiteConfig& c = R.cfg;
  int shift = 0;
  R.run("fock-relations.probe", "mode convention: unique shift s with A_{alpha,n} = coefficient of z^{-n-s}",
        {{"D", long(c.trunc.D)}}, [&]() -> Outcome {
          shift = fock::probe_mode_shift(c.trunc);
          return {true, "", {{"shift", long(shift)}}};
        });
  fock::RelationOptions opt;
  opt.shift = shift;
  opt.scale_fault = c.has_fault("fock-structure") ? 1 : 0;
  Params p = {{"K", long(c.trunc.K)}, {"D", long(c.trunc.D)}, {"alpha_box", long(c.relation_alpha)},
              {"window", long(c.relation_window)}, {"shift", long(shift)}};
  R.run("fock-relations.modes", "realized modes satisfy the sine-algebra relations at level 1", p,
        [&]() { return from(fock::relation_check(c.relation_alpha, c.relation_window, c.trunc, opt)); });
  R.run("fock-relations.heisenberg", "Heisenberg modes: [A_{0,m}, A_{0,n}] = m delta_{m+n,0}",
        {{"D", long(c.trunc.D)}, {"window", 3L}},
        [&]() { return from(fock::relation_check(0, std::min(3, c.trunc.D), c.trunc, opt)); });
}

void suite_ope(Runner& R) {
  const SuiteConfig& c = R.cfg;
  const int amax = 3;
  R.run("ope.contraction", "contraction factor: exponential and rational expansions agree",
        {{"alpha_box", long(amax)}, {"N", long(c.trunc.N)}}, [&]() -> Outcome {
          for (int a = -amax; a <= amax; ++a)
            for (int b = -amax; b <= amax; ++b)
              if (a != 0 && b != 0 && !fock::contraction_factor(a, b, c.trunc.N).agree)
                return {false, "expansions differ for alpha=" + std::to_string(a) + " beta=" + std::to_string(b), {}};
          return {};
        });
  fock::OpeOptions oo;
  oo.fault = c.has_fault("ope-contraction");
  const std::pair<const char*, fock::XExp> vs[] = {{"1", fock::XExp{}}, {"x1", fock::x_var(1)}, {"x2", fock::x_var(2)}};
  for (const auto& [name, v] : vs) {
    R.run(std::string("ope.product.v=") + name, "vertex operator product equals contraction times normal order",
          {{"v", name}, {"alpha_box", long(amax)}, {"K", long(c.trunc.K)}, {"D", long(c.trunc.D)}, {"N", long(c.trunc.N)}},
          [&, v = v]() -> Outcome {
            for (int a = -amax; a <= amax; ++a)
              for (int b = -amax; b <= amax; ++b) {
                if (a == 0 || b == 0) continue;
                CheckResult r = fock::ope_check(a, b, v, c.trunc, oo);
                if (!r.pass) return from(r);
              }
            return {};
          });
  }
  fock::LocalityOptions lo;
  lo.drop_factor = c.has_fault("locality-drop");
  fock::Trunc lt = c.trunc;
  lt.N = std::min(lt.N, 4);
  R.run("ope.locality", "two-factor locality polynomial annihilates the commutator",
        {{"alpha_box", 2L}, {"D", long(lt.D)}, {"window", long(lt.N)}}, [&]() -> Outcome {
          for (const auto& v : {fock::XExp{}, fock::x_var(1)})
            for (int a = -2; a <= 2; ++a)
              for (int b = -2; b <= 2; ++b) {
                CheckResult r = fock::locality_check(a, b, v, lt, lo);
                if (!r.pass) return from(r);
              }
          return {};
        });
}

void suite_vanish(Runner& R) {
  const SuiteConfig& c = R.cfg;
  fock::VanishOptions vo;
  vo.drop_factor = c.has_fault("vanish-drop-factor");
  for (int a : {1, 2})
    R.run("vanish.l1.a" + std::to_string(a), "prefactor times X(z)X(w) vanishes at z = w, level 1",
          {{"alpha", long(a)}, {"level", 1L}, {"D", long(c.trunc.D)}, {"N", long(c.trunc.N)}},
          [&, a]() { return from(fock::coincidence_vanish_check(a, 1, c.trunc, vo)); });
  R.run("vanish.l2.a1", "threefold product with full prefactor vanishes on the twofold tensor, level 2",
        {{"alpha", 1L}, {"level", 2L}, {"D", long(c.trunc.D)}},
        [&]() { return from(fock::coincidence_vanish_check(1, 2, c.trunc, vo)); });
  vacuum::NilpotencyOptions no;
  no.quotient = !c.has_fault("nilpotency-no-quotient");
  no.q_specs = c.q_specs;
  for (int l : c.levels) {
    if (l != 1) continue;
    for (int i = c.interval.lo; i <= c.interval.hi; ++i)
      for (int j = c.interval.lo; j <= c.interval.hi; ++j) {
        if (i == j || (i + j) % 2 != 0) continue;
        int alpha = (i - j) / 2, m = (i + j) / 2;
        std::ostringstream id;
        id << "vanish.nilpotency.l" << l << ".E" << i << "_" << j;
        R.run(id.str(), "G_{alpha,m}(x)^{level+1} = 0 on L(level,0)",
              {{"level", long(l)}, {"alpha", long(alpha)}, {"m", long(m)}, {"window", 2L}},
              [&, l, alpha, m]() { return from(vacuum::nilpotency_check_L(l, alpha, m, c.interval, 2, no)); });
      }
  }
}

void suite_quasi(Runner& R) {
  const SuiteConfig& c = R.cfg;
  fock::QuasiOptions qo;
  qo.fault_r = c.has_fault("quasi-shift") ? 1 : 0;
  const int window = c.relation_window;
  for (int a = -2; a <= 2; ++a)
    for (int b = -2; b <= 2; ++b) {
      std::ostringstream id;
      id << "quasi-comm.a" << a << ".b" << b;
      R.run(id.str(), "commutator formula of the quasi module as a finite sum over shifts",
            {{"alpha", long(a)}, {"beta", long(b)}, {"window", long(window)}, {"D", long(c.trunc.D)}},
            [&, a, b]() -> Outcome {
              std::vector<int> support;
              CheckResult r = fock::quasi_commutator_check(a, b, window, c.trunc, qo, &support);
              std::string s;
              for (std::size_t i = 0; i < support.size(); ++i) s += (i ? "," : "") + std::to_string(support[i]);
              return {r.pass, r.witness, {{"support", "{" + s + "}"}}};
            });
    }
  bool twist_fault = c.has_fault("r-axiom-twist");
  for (int l : c.levels) {
    R.run("quasi-comm.r-axiom.l" + std::to_string(l), "R_r a(n) = q^{rn} (sigma_r a)(n) R_r on V(level,0)",
          {{"level", long(l)}, {"max_degree", 3L}, {"samples", long(c.samples)}, {"seed", long(c.seed)}},
          [&, l]() -> Outcome {
            auto g = rng_for(c, 300 + l);
            vacuum::VacuumModule mod(vacuum::Interval{0, 7}, Scalar(l));
            vacuum::VacuumModule inner(vacuum::Interval{2, 5}, Scalar(l));
            const auto& basis = inner.basis();
            auto label = [&]() { return basis[uniform(g, 0, static_cast<int>(basis.size()) - 1)]; };
            for (int i = 0; i < c.samples; ++i) {
              std::vector<vacuum::Mode> word;
              for (int left = uniform(g, 0, 3); left > 0;) {
                int n = uniform(g, 1, left);
                word.push_back({-n, label()});
                left -= n;
              }
              vacuum::PBWVector v = inner.apply_word(word, vacuum::vacuum_vector());
              vacuum::Mode x{uniform(g, -2, 2), label()};
              int r = uniform(g, -2, 2);
              vacuum::Mode sx{x.n, {x.a.first + r, x.a.second + r}};
              vacuum::PBWVector lhs = mod.apply_R(r, mod.act(x, v));
              vacuum::PBWVector rhs = mod.act(sx, mod.apply_R(r, v));
              rhs *= Scalar::q(r * x.n + (twist_fault ? 1 : 0));
              if (!(lhs == rhs)) {
                std::ostringstream os;
                os << "r=" << r << " mode E[" << x.a.first << "," << x.a.second << "](" << x.n << ") on "
                   << vacuum::to_string(v);
                return {false, os.str(), {}};
              }
            }
            return {};
          });
  }
}

void suite_weights(Runner& R) {
  const SuiteConfig& c = R.cfg;
  fock::WeightOptions wo;
  wo.fault = c.has_fault("weight-unit") ? 1 : 0;
  const std::vector<std::vector<int>> shapes = {{1}, {2}, {1, 1}, {3}, {2, 1}, {1, 2}, {1, 1, 1}};
  for (const auto& shape : shapes) {
    std::vector<fock::Part> parts;
    std::string name;
    for (std::size_t j = 0; j < shape.size(); ++j) {
      parts.push_back({shape[j], Scalar::unit(static_cast<int>(j) + 1)});
      name += (j ? "+" : "") + std::to_string(shape[j]);
    }
    R.run("weights.parts=" + name, "zero-mode eigenvalues on the tensor vacuum equal the unitary weight",
          {{"parts", name}, {"n_range", "1..3 and -3..-1"}}, [&, parts]() -> Outcome {
            for (int n : {-3, -2, -1, 1, 2, 3}) {
              CheckResult r = fock::weight_check(n, parts, wo);
              if (!r.pass) return {false, "n=" + std::to_string(n) + ": " + r.witness, {}};
            }
            return {};
          });
  }
}

}  // namespace

Report run_suite(const SuiteConfig& config, const std::string& which) {
  config.validate();
  if (std::find(suite_names().begin(), suite_names().end(), which) == suite_names().end())
    throw UsageError("unknown suite: " + which);
  Runner R(config);
  auto want = [&](const char* s) { return which == "all" || which == s; };
  if (want("jacobi")) suite_jacobi(R);
  if (want("iso")) suite_iso(R);
  if (want("singular")) suite_singular(R);
  if (want("dims")) suite_dims(R);
  if (want("fock-relations")) suite_fock_relations(R);
  if (want("ope")) suite_ope(R);
  if (want("vanish")) suite_vanish(R);
  if (want("quasi-comm")) suite_quasi(R);
  if (want("weights")) suite_weights(R);
  std::stable_sort(R.report.begin(), R.report.end(),
                   [](const Record& a, const Record& b) { return a.check_id < b.check_id; });
  return R.report;
}

}  // namespace trigva::cli
