#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <gmpxx.h>

#include "trigva/fock/fock.hpp"
#include "trigva/vacuum/vacuum.hpp"

namespace trigva::cli {

enum class Status { Pass, Fail, Error };
std::string status_name(Status s);

using ParamValue = std::variant<long, std::string>;
using Params = std::vector<std::pair<std::string, ParamValue>>;

struct Record {
  std::string check_id;
  std::string paper_anchor;
  Params params;
  Status status = Status::Pass;
  std::optional<std::string> witness;  // present iff status != Pass
  long elapsed_ms = 0;
  friend bool operator==(const Record&, const Record&) = default;
};

using Report = std::vector<Record>;

enum class Format { Json, Markdown };

struct SuiteConfig {
  std::uint64_t seed = 1;
  int box = 3;              // iso box
  int jacobi_box = 4;
  int samples = 200;        // random triples per kind / setup
  vacuum::Interval interval{0, 3};
  std::vector<int> levels{1, 2};
  fock::Trunc trunc{8, 8, 6};
  int relation_window = 2;
  int relation_alpha = 2;
  std::vector<mpq_class> q_specs{mpq_class(7, 5), mpq_class(11, 7)};
  Format format = Format::Json;
  std::vector<std::string> perturb;
  bool timing = true;

  // Throws UsageError on inconsistent settings or unknown fault names.
  void validate() const;
  bool has_fault(const std::string& name) const;
};

const std::vector<std::string>& suite_names();
// Fault flags, each with the suite it targets.
const std::vector<std::pair<std::string, std::string>>& fault_names();

Report run_suite(const SuiteConfig& config, const std::string& which);

std::string emit_report(const Report& r, Format f);
Report parse_report_json(const std::string& text);

}  // namespace trigva::cli
