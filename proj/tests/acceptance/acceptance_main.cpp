// One PASS/FAIL line per acceptance criterion. Exit status is nonzero if any line fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "trigva/cli/suite.hpp"

using namespace trigva;
using namespace trigva::cli;

namespace {

struct Verdict {
  bool ok = true;
  std::string note;
};

bool has_prefix(const std::string& s, const std::string& p) { return s.rfind(p, 0) == 0; }

std::string param(const Record& r, const std::string& key) {
  for (const auto& [k, v] : r.params)
    if (k == key) return std::holds_alternative<long>(v) ? std::to_string(std::get<long>(v)) : std::get<std::string>(v);
  return "";
}

// Every record whose id starts with one of the prefixes must pass; at least `min_count` must exist.
Verdict all_pass(const Report& rep, const std::vector<std::string>& prefixes, std::size_t min_count) {
  Verdict v;
  std::size_t seen = 0;
  for (const auto& r : rep) {
    bool match = false;
    for (const auto& p : prefixes) match = match || has_prefix(r.check_id, p);
    if (!match) continue;
    ++seen;
    if (r.status != Status::Pass && v.ok) {
      v.ok = false;
      v.note = r.check_id + " " + status_name(r.status) + ": " + r.witness.value_or("");
    }
  }
  if (seen < min_count) {
    v.ok = false;
    v.note = "only " + std::to_string(seen) + " records, expected " + std::to_string(min_count);
  }
  if (v.ok) v.note = std::to_string(seen) + " records pass";
  return v;
}

const Record* find(const Report& rep, const std::string& id) {
  for (const auto& r : rep)
    if (r.check_id == id) return &r;
  return nullptr;
}

// Coefficients of prod_{n>=1} (1 - t^n)^{-2}.
std::vector<long> two_colour_partitions(int d) {
  std::vector<long> p(d + 1, 0);
  p[0] = 1;
  for (int n = 1; n <= d; ++n)
    for (int k = n; k <= d; ++k) p[k] += p[k - n];
  std::vector<long> out(d + 1, 0);
  for (int a = 0; a <= d; ++a)
    for (int b = 0; a + b <= d; ++b) out[a + b] += p[a] * p[b];
  return out;
}

SuiteConfig base() {
  SuiteConfig c;
  c.timing = false;
  return c;
}

Verdict c1() {
  auto c = base();
  c.jacobi_box = 4;
  c.samples = 200;
  return all_pass(run_suite(c, "jacobi"), {"jacobi.A", "jacobi.B", "jacobi.C", "jacobi.D"}, 4);
}

Verdict c2() {
  auto c = base();
  c.samples = 200;
  return all_pass(run_suite(c, "jacobi"), {"jacobi.covariant."}, 4);
}

Verdict c3() {
  auto c = base();
  c.box = 3;
  Verdict v = all_pass(run_suite(c, "iso"), {"iso."}, 5);
  if (!v.ok) return v;
  c.perturb = {"iso-character"};
  Report bad = run_suite(c, "iso");
  for (const auto& r : bad)
    if (r.status != Status::Fail) return {false, r.check_id + " did not fail under the character fault"};
  if (bad.size() < 5) return {false, "fault run produced too few records"};
  return {true, v.note + "; all " + std::to_string(bad.size()) + " fail under the character fault"};
}

Verdict c4() {
  auto c = base();
  c.levels = {1, 2};
  c.interval = {0, 3};
  return all_pass(run_suite(c, "singular"), {"singular.l1.", "singular.l2."}, 8);
}

Verdict c5() {
  auto c = base();
  c.levels = {1};
  c.interval = {0, 3};
  Report rep = run_suite(c, "dims");
  Verdict v = all_pass(rep, {"dims.V", "dims.L.l1"}, 2);
  if (!v.ok) return v;
  auto want = two_colour_partitions(4);
  std::string ws;
  for (std::size_t i = 0; i < want.size(); ++i) ws += (i ? "," : "") + std::to_string(want[i]);
  std::string got = param(*find(rep, "dims.V"), "dims");
  if (got != ws) return {false, "dims.V gave " + got + ", generating function gives " + ws};
  const Record* L = find(rep, "dims.L.l1");
  return {true, "V dims " + got + "; L " + param(*L, "dim_L") + " < V " + param(*L, "dim_V")};
}

Verdict c6() {
  auto c = base();
  c.trunc = {8, 8, 6};
  c.relation_alpha = 2;
  c.relation_window = 2;
  Report rep = run_suite(c, "fock-relations");
  Verdict v = all_pass(rep, {"fock-relations."}, 3);
  if (!v.ok) return v;
  const Record* probe = find(rep, "fock-relations.probe");
  std::string s = probe ? param(*probe, "shift") : "";
  if (s.empty()) return {false, "probe did not record a shift"};
  return {true, v.note + "; probe shift s = " + s};
}

Verdict c7() {
  auto c = base();
  c.trunc = {8, 8, 6};
  return all_pass(run_suite(c, "ope"),
                  {"ope.contraction", "ope.product.v=1", "ope.product.v=x1", "ope.product.v=x2"}, 4);
}

Verdict c8() {
  auto c = base();
  c.levels = {1, 2};
  c.interval = {0, 3};
  return all_pass(run_suite(c, "vanish"), {"vanish.l1.a1", "vanish.l1.a2", "vanish.l2.a1", "vanish.nilpotency.l1."},
                  7);
}

Verdict c9() {
  auto c = base();
  c.levels = {1, 2};
  return all_pass(run_suite(c, "quasi-comm"), {"quasi-comm."}, 27);
}

Verdict c10() {
  auto c = base();
  return all_pass(run_suite(c, "weights"), {"weights."}, 7);
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double limit_s;
    std::function<Verdict()> run;
  };
  const std::vector<Criterion> crits = {
      {1, "Jacobi identity for A/B/C/D on 200 triples, box 4", 30, c1},
      {2, "covariant algebras: skew-symmetry and Jacobi, 4 setups", 60, c2},
      {3, "isomorphisms on box 3, character fault detected", 60, c3},
      {4, "singular vectors for levels 1 and 2", 120, c4},
      {5, "graded dimensions of V and L", 120, c5},
      {6, "Fock relations at K = D = 8 and unique mode shift", 180, c6},
      {7, "contraction factor to order 6 and OPE on 1, x1, x2", 60, c7},
      {8, "coincidence vanishing and nilpotency on L(1,0)", 300, c8},
      {9, "quasi commutator with support and R mode axiom", 120, c9},
      {10, "zero-mode weights on tensor vacua", 30, c10},
  };
  int failed = 0;
  for (const auto& c : crits) {
    auto t0 = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = c.run();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (v.ok && secs > c.limit_s) v = {false, v.note + "; over the time limit"};
    if (!v.ok) ++failed;
    std::printf("%s criterion %d: %s [%.1fs / %.0fs] %s\n", v.ok ? "PASS" : "FAIL", c.id, c.name, secs, c.limit_s,
                v.note.c_str());
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
