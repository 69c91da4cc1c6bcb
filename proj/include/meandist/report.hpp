#pragma once

// Machine-readable reports:
//   {command, inputs, results: [{quantity, value, provenance, theorem?, verdict?}], version}

#include "meandist/counterexample.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace meandist {

inline constexpr const char* kVersion = "0.1.0";

struct ReportEntry {
  std::string quantity;
  double value;
  std::string provenance;  // exact | quadrature | asymptotic | graph | fmm | oracle | derived
  std::optional<std::string> theorem;
  std::optional<std::string> verdict;
  std::optional<double> constant;  // c(n) used for the verdict
};

struct Report {
  std::string command;
  std::vector<std::pair<std::string, std::string>> inputs;  // in insertion order
  std::vector<ReportEntry> results;

  void input(std::string key, std::string value) {
    inputs.emplace_back(std::move(key), std::move(value));
  }
  ReportEntry& add(std::string quantity, double value, std::string provenance) {
    results.push_back({std::move(quantity), value, std::move(provenance), {}, {}, {}});
    return results.back();
  }
};

std::string to_json(const Report& report);

// Columns: quantity,value,provenance,theorem,verdict,constant
std::string to_csv(const Report& report);

// Columns: L,C,ratio_p,ratio_q,source
std::string sweep_csv(const std::vector<SweepRecord>& rows);
std::string sweep_json(const std::vector<SweepRecord>& rows,
                       const std::vector<std::pair<std::string, std::string>>& inputs);

// Shortest decimal text that reads back to the same double.
std::string format_double(double x);

}  // namespace meandist
