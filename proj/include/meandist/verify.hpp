#pragma once

// Verification suites over a built-in corpus of small manifolds and the model
// spaces. Each suite returns one CheckResult per checked inequality.

#include "meandist/bounds.hpp"

#include <string>
#include <vector>

namespace meandist {

enum class Suite { All, T1_1, P2_5, T4_1, T4_2, Lemma3_1, Section2, BishopGromov };

std::string to_string(Suite suite);
Suite parse_suite(const std::string& name);  // all | t1_1 | ... | bishop_gromov

struct CorpusEntry {
  std::string name;
  DiscreteManifold manifold;
  bool nonnegative_ricci;  // declared by construction
  bool closed;             // compact without boundary
};

// Every entry has at most kAllPairsBudget vertices.
std::vector<CorpusEntry> builtin_corpus();

struct VerifyOptions {
  double slack = 1e-9;
  double monotone_tolerance = kMonotoneTolerance;
};

struct CheckResult {
  std::string suite;
  std::string name;
  std::string theorem;  // empty for plain properties
  bool passed;
  double value;
  double threshold;
  std::string detail;
};

std::vector<CheckResult> run_suite(Suite suite, const VerifyOptions& options = {});

// Lower edge of the profile window: profiles from a mesh are not resolved
// below a few edge lengths.
double mean_edge_length(const DiscreteManifold& m);

// V_p(r)/r^2 monitor for an icosphere: piecewise-linear sublevel areas of the
// oracle field from the pole, on radii from 3 mean edge lengths to pi.
VolumeComparisonResult icosphere_comparison(int levels, double tolerance = kMonotoneTolerance);

}  // namespace meandist
