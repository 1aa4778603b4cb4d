#include <map>
#include <sstream>

#include <json.hpp>

#include "trigva/cli/suite.hpp"
#include "trigva/errors.hpp"

namespace trigva::cli {

using json = nlohmann::ordered_json;

namespace {

std::string param_text(const ParamValue& v) {
  return std::holds_alternative<long>(v) ? std::to_string(std::get<long>(v)) : std::get<std::string>(v);
}

std::string suite_of(const std::string& id) { return id.substr(0, id.find('.')); }

std::string md_cell(std::string s) {
  std::string out;
  for (char ch : s) {
    if (ch == '|') out += "\\|";
    else if (ch == '\n') out += ' ';
    else out += ch;
  }
  return out;
}

}  // namespace

std::string emit_report(const Report& r, Format f) {
  if (f == Format::Json) {
    json arr = json::array();
    for (const auto& rec : r) {
      json params = json::object();
      for (const auto& [k, v] : rec.params) {
        if (std::holds_alternative<long>(v)) params[k] = std::get<long>(v);
        else params[k] = std::get<std::string>(v);
      }
      json o;
      o["check_id"] = rec.check_id;
      o["paper_anchor"] = rec.paper_anchor;
      o["params"] = params;
      o["status"] = status_name(rec.status);
      o["witness"] = rec.witness ? json(*rec.witness) : json(nullptr);
      o["elapsed_ms"] = rec.elapsed_ms;
      arr.push_back(o);
    }
    return r.empty() ? "[]" : arr.dump(2);
  }
  std::ostringstream os;
  os << "# Verification report\n";
  std::map<std::string, int> pass, total;
  for (const auto& rec : r) {
    ++total[suite_of(rec.check_id)];
    if (rec.status == Status::Pass) ++pass[suite_of(rec.check_id)];
  }
  std::string current;
  for (const auto& rec : r) {
    std::string s = suite_of(rec.check_id);
    if (s != current) {
      current = s;
      os << "\n## " << s << " (" << pass[s] << "/" << total[s] << " pass)\n\n"
         << "| check | status | params | witness | ms |\n|---|---|---|---|---|\n";
    }
    std::string params;
    for (const auto& [k, v] : rec.params) params += (params.empty() ? "" : ", ") + k + "=" + param_text(v);
    os << "| " << md_cell(rec.check_id) << " | " << status_name(rec.status) << " | " << md_cell(params) << " | "
       << md_cell(rec.witness.value_or("")) << " | " << rec.elapsed_ms << " |\n";
  }
  return os.str();
}

Report parse_report_json(const std::string& text) {
  json arr = json::parse(text);
  if (!arr.is_array()) throw UsageError("report must be a JSON array");
  Report r;
  for (const auto& o : arr) {
    Record rec;
    rec.check_id = o.at("check_id").get<std::string>();
    rec.paper_anchor = o.at("paper_anchor").get<std::string>();
    for (const auto& [k, v] : o.at("params").items()) {
      if (v.is_number_integer()) rec.params.emplace_back(k, v.get<long>());
      else rec.params.emplace_back(k, v.get<std::string>());
    }
    std::string st = o.at("status").get<std::string>();
    if (st == "pass") rec.status = Status::Pass;
    else if (st == "fail") rec.status = Status::Fail;
    else if (st == "error") rec.status = Status::Error;
    else throw UsageError("unknown status: " + st);
    if (!o.at("witness").is_null()) rec.witness = o.at("witness").get<std::string>();
    rec.elapsed_ms = o.at("elapsed_ms").get<long>();
    r.push_back(std::move(rec));
  }
  return r;
}

}  // namespace trigva::cli
