#include "meandist/report.hpp"

#include <json.hpp>

#include <charconv>
#include <sstream>

namespace meandist {

using nlohmann::ordered_json;

std::string format_double(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

namespace {

ordered_json inputs_json(const std::vector<std::pair<std::string, std::string>>& inputs) {
  ordered_json out = ordered_json::object();
  for (const auto& [k, v] : inputs) out[k] = v;
  return out;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char ch : s) {
    if (ch == '"') quoted += '"';
    quoted += ch;
  }
  return quoted + "\"";
}

}  // namespace

std::string to_json(const Report& report) {
  ordered_json doc;
  doc["command"] = report.command;
  doc["inputs"] = inputs_json(report.inputs);
  doc["results"] = ordered_json::array();
  for (const auto& e : report.results) {
    ordered_json item;
    item["quantity"] = e.quantity;
    item["value"] = e.value;
    item["provenance"] = e.provenance;
    if (e.theorem) item["theorem"] = *e.theorem;
    if (e.verdict) item["verdict"] = *e.verdict;
    if (e.constant) item["constant"] = *e.constant;
    doc["results"].push_back(std::move(item));
  }
  doc["version"] = kVersion;
  return doc.dump(2) + "\n";
}

std::string to_csv(const Report& report) {
  std::ostringstream os;
  os << "quantity,value,provenance,theorem,verdict,constant\n";
  for (const auto& e : report.results) {
    os << csv_field(e.quantity) << ',' << format_double(e.value) << ',' << e.provenance << ','
       << e.theorem.value_or("") << ',' << e.verdict.value_or("") << ','
       << (e.constant ? format_double(*e.constant) : "") << '\n';
  }
  return os.str();
}

std::string sweep_csv(const std::vector<SweepRecord>& rows) {
  std::ostringstream os;
  os << "L,C,ratio_p,ratio_q,source\n";
  for (const auto& r : rows) {
    os << format_double(r.length) << ',' << format_double(r.neck_circumference) << ','
       << format_double(r.ratio_p) << ',' << format_double(r.ratio_q) << ','
       << to_string(r.source) << '\n';
  }
  return os.str();
}

std::string sweep_json(const std::vector<SweepRecord>& rows,
                       const std::vector<std::pair<std::string, std::string>>& inputs) {
  Report report;
  report.command = "dumbbell-sweep";
  report.inputs = inputs;
  for (const auto& r : rows) {
    const std::string tag = "[L=" + format_double(r.length) + "]";
    const std::string prov = to_string(r.source);
    report.add("C" + tag, r.neck_circumference, "exact");
    report.add("ratio_p" + tag, r.ratio_p, prov);
    report.add("ratio_q" + tag, r.ratio_q, prov);
    if (r.fell_back) report.add("fell_back" + tag, 1.0, prov);
    if (r.diameter_lower_bound) report.add("diameter_lower_bound_only" + tag, 1.0, prov);
  }
  return to_json(report);
}

}  // namespace meandist
