#pragma once

// The operations behind the command-line tool, returning reports instead of
// printing them.

#include "meandist/report.hpp"
#include "meandist/verify.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace meandist {

// circle:l | sphere:n,k | torus:a,b | ball:n,R | hball:n,R | dumbbell:L,C
ModelSpace parse_space(const std::string& spec);

struct GeneratedManifold {
  DiscreteManifold manifold;
  bool nonnegative_ricci;
  bool closed;
  std::map<std::string, VertexId> named;  // named source vertices
};

// icosphere:levels | cycle:N,l | torus:N,a,b | patch:N,side | dumbbell:L,C
GeneratedManifold parse_generator(const std::string& spec);

// Vertex id | name | all | sample:k | sample:k,seed
std::vector<VertexId> parse_sources(const std::string& spec, const DiscreteManifold& m,
                                    const std::map<std::string, VertexId>& named,
                                    std::uint64_t seed);

// Comma-separated list of doubles.
std::vector<double> parse_list(const std::string& text);

struct ModelEvalConfig {
  std::string space;
  std::string point;  // p | q for dumbbells, s for circles, x,y for tori; empty = canonical
  double tolerance = kExactEqualityTolerance;
};

struct MeshEvalConfig {
  std::string mesh_path;
  std::string generator;
  std::string source = "0";
  std::string distances = "graph";  // graph | fmm | oracle
  int dim = 0;                      // overrides dim_hint when > 0
  std::uint64_t seed = 0;
  std::string write_off;            // write the input mesh here when set
};

struct SweepConfig {
  std::vector<double> lengths{5, 10, 20, 40, 80};
  std::string rule = "cube";  // cube | fixed:C
  std::string mode = "asymptotic";
};

Report model_eval(const ModelEvalConfig& config);
Report mesh_eval(const MeshEvalConfig& config);
Report verify_report(Suite suite, const VerifyOptions& options = {});
std::vector<SweepRecord> dumbbell_sweep(const SweepConfig& config);
std::vector<std::pair<std::string, std::string>> sweep_inputs(const SweepConfig& config);

// False when any result carries the verdict "violated" or "fail".
bool report_passed(const Report& report);

}  // namespace meandist
