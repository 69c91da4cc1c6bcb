#include "meandist/verify.hpp"

#include "meandist/counterexample.hpp"
#include "meandist/errors.hpp"
#include "meandist/generators.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace meandist {

using std::numbers::pi;

std::string to_string(Suite suite) {
  switch (suite) {
    case Suite::All:
      return "all";
    case Suite::T1_1:
      return "t1_1";
    case Suite::P2_5:
      return "p2_5";
    case Suite::T4_1:
      return "t4_1";
    case Suite::T4_2:
      return "t4_2";
    case Suite::Lemma3_1:
      return "lemma3_1";
    case Suite::Section2:
      return "section2";
    case Suite::BishopGromov:
      return "bishop_gromov";
  }
  return "all";
}

Suite parse_suite(const std::string& name) {
  for (Suite s : {Suite::All, Suite::T1_1, Suite::P2_5, Suite::T4_1, Suite::T4_2,
                  Suite::Lemma3_1, Suite::Section2, Suite::BishopGromov}) {
    if (to_string(s) == name) return s;
  }
  throw InputError("unknown suite '" + name + "'");
}

std::vector<CorpusEntry> builtin_corpus() {
  std::vector<CorpusEntry> corpus;
  corpus.push_back({"cycle(64)", cycle(64, 1.0), true, true});
  corpus.push_back({"icosphere(2)", icosphere(2), true, true});
  corpus.push_back({"icosphere(3)", icosphere(3), true, true});
  corpus.push_back({"torus_grid(24)", torus_grid(24, 1.0, 1.0), true, true});
  corpus.push_back({"grid_patch(16)", grid_patch(16, 1.0), true, false});
  DumbbellParams params(2.0, 0.05, DumbbellResolution{8, 8, 4, 12});
  corpus.push_back({"dumbbell(L=2,C=0.05)", build_dumbbell_mesh(params).manifold, false, true});
  return corpus;
}

double mean_edge_length(const DiscreteManifold& m) {
  if (m.edges().empty()) return 0.0;
  double total = 0.0;
  for (const Edge& e : m.edges()) total += e.length;
  return total / static_cast<double>(m.edges().size());
}

VolumeComparisonResult icosphere_comparison(int levels, double tolerance) {
  const DiscreteManifold m = icosphere(levels);
  const DistanceField field = distance_oracle_field(m, 0);
  const double r0 = 3.0 * mean_edge_length(m);
  constexpr int kSamples = 200;
  std::vector<double> radii;
  for (int k = 0; k < kSamples; ++k) radii.push_back(r0 + (pi - r0) * k / (kSamples - 1));
  const auto profile = sublevel_area_profile(m, field, radii);
  return volume_comparison_check(profile, 2, ComparisonDirection::Lower, pi, tolerance);
}

namespace {

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(6);
  os << x;
  return os.str();
}

// f, distances and exact diameter of a corpus manifold, from one all-pairs pass.
struct PairData {
  DistanceMatrix dist;
  std::vector<double> f;
  double diameter;
};

PairData pair_data(const DiscreteManifold& m) {
  DistanceMatrix dist = all_pairs(m);
  const auto w = m.weights();
  std::vector<double> f(dist.size(), 0.0);
  double diam = 0.0;
  for (VertexId p = 0; p < dist.size(); ++p) {
    const auto row = dist.row(p);
    for (std::size_t x = 0; x < row.size(); ++x) {
      f[p] += row[x] * w[x];
      diam = std::max(diam, row[x]);
    }
  }
  return {std::move(dist), std::move(f), diam};
}

class Collector {
 public:
  explicit Collector(std::string suite) : suite_(std::move(suite)) {}

  void add(std::string name, std::string theorem, bool passed, double value, double threshold,
           std::string detail = {}) {
    out_.push_back({suite_, std::move(name), std::move(theorem), passed, value, threshold,
                    std::move(detail)});
  }
  void add_report(const std::string& name, const BoundReport& r) {
    add(name, theorem_id(r.spec.theorem), r.verdict == Verdict::Satisfied, r.ratio, r.threshold,
        "verdict=" + to_string(r.verdict) + (r.strict ? " strict" : " equality"));
  }
  std::vector<CheckResult> take() { return std::move(out_); }

 private:
  std::string suite_;
  std::vector<CheckResult> out_;
};

void suite_t1_1(const std::vector<CorpusEntry>& corpus, std::vector<CheckResult>& out) {
  Collector c("t1_1");
  const std::string id = theorem_id(Theorem::CompactRicci);
  c.add("c_compact(1) = 1/16", id, std::abs(c_compact(1) - 1.0 / 16) <= 1e-12, c_compact(1),
        1.0 / 16);
  c.add("c_compact(2) = 1/54", id, std::abs(c_compact(2) - 1.0 / 54) <= 1e-12, c_compact(2),
        1.0 / 54);

  const std::vector<std::pair<ModelSpace, PointRef>> models = {
      {Circle(1.0), ArcPoint{0.0}},
      {Sphere(2, 1.0), sphere_north_pole(Sphere(2, 1.0))},
      {Sphere(2, 4.0), sphere_north_pole(Sphere(2, 4.0))},
      {Sphere(3, 1.0), sphere_north_pole(Sphere(3, 1.0))},
      {FlatTorus(1.0, 1.0), TorusPoint{0.0, 0.0}},
      {FlatTorus(1.0, 2.0), TorusPoint{0.0, 0.0}},
  };
  for (const auto& [space, point] : models) {
    const Quantity f = mean_distance_exact(space, point);
    const auto report = check_lower_bound(BoundSpec::make(Theorem::CompactRicci, dimension(space)),
                                          f.value, diameter(space).value, volume(space).value,
                                          {f.asymptotic(), true});
    c.add_report(describe(space), report);
  }

  for (const auto& entry : corpus) {
    if (!entry.nonnegative_ricci || !entry.closed) continue;
    const auto data = pair_data(entry.manifold);
    const double f_min = *std::min_element(data.f.begin(), data.f.end());
    const auto report = check_lower_bound(BoundSpec::make(Theorem::CompactRicci,
                                                          entry.manifold.dim_hint()),
                                          f_min, data.diameter, entry.manifold.total_volume());
    c.add_report(entry.name + " min over sources", report);
  }

  // Outside the hypothesis the bound fails for long thin necks.
  const auto db = dumbbell_asymptotics(Dumbbell::from_neck(1.0 / std::pow(160.0, 3), 160.0));
  const auto report = check_lower_bound(BoundSpec::make(Theorem::CompactRicci, 2), db.f_p, db.dV,
                                        1.0, {true, false});
  c.add("dumbbell L=160 falls below c(2) (out of hypothesis)", theorem_id(Theorem::CompactRicci),
        !report.satisfied && !report.within_hypothesis, report.ratio, report.threshold,
        "verdict=" + to_string(report.verdict) + " out of hypothesis");
  for (auto& r : c.take()) out.push_back(std::move(r));
}

void suite_p2_5(std::vector<CheckResult>& out) {
  Collector c("p2_5");
  for (const auto& [n, k] : std::vector<std::pair<int, double>>{{1, 1.0}, {2, 1.0}, {2, 4.0}, {3, 1.0}}) {
    const Sphere s(n, k);
    const double f = mean_distance_exact(s, sphere_north_pole(s)).value;
    const auto r = check_upper_bound_sphere(n, k, f);
    c.add("equality on " + describe(s), theorem_id(Theorem::SphereUpper), r.satisfied && r.equality,
          r.ratio, 0.5);
  }

  const DiscreteManifold ico = icosphere(4);
  const double f_mesh = f_of(ico, distance_oracle_field(ico, 0));
  const auto r = check_upper_bound_sphere(2, 1.0, f_mesh, kMeshEqualityTolerance);
  c.add("icosphere(4) oracle within 1% of equality", theorem_id(Theorem::SphereUpper), r.equality,
        r.ratio, 0.5);

  const DiscreteManifold ico3 = icosphere(3);
  double worst = 0.0;
  for (VertexId p = 0; p < ico3.vertex_count(); ++p) {
    worst = std::max(worst, f_of(ico3, distance_oracle_field(ico3, p)) / (2.0 * pi * pi));
  }
  c.add("icosphere(3) oracle f <= 1/2 d V (all sources)", theorem_id(Theorem::SphereUpper),
        worst <= 1.0 + kMeshEqualityTolerance, worst, 1.0 + kMeshEqualityTolerance);
  for (auto& x : c.take()) out.push_back(std::move(x));
}

void suite_balls(Theorem theorem, std::vector<CheckResult>& out) {
  const bool hadamard = theorem == Theorem::CartanHadamard;
  Collector c(hadamard ? "t4_1" : "t4_2");
  const std::string id = theorem_id(theorem);
  if (!hadamard) {
    // Independent forms: 7 - 4 sqrt 3 for n = 1, a high-precision literal for n = 2.
    c.add("c_noncompact(1) = 7 - 4 sqrt 3", id,
          std::abs(c_noncompact(1) - (7.0 - 4.0 * std::sqrt(3.0))) <= 1e-9, c_noncompact(1),
          7.0 - 4.0 * std::sqrt(3.0));
    c.add("c_noncompact(2) = 0.0135061183", id,
          std::abs(c_noncompact(2) - 0.013506118301422756) <= 1e-9, c_noncompact(2),
          0.013506118301422756);
  }
  for (int n = 1; n <= 6; ++n) {
    for (double radius : {1.0, 2.5}) {
      const EuclideanBall ball(n, radius);
      const double f = ball_mean_distance(ball).value;
      const auto r = check_lower_bound(BoundSpec::make(theorem, n), f, radius,
                                       ball_volume(ball, radius));
      c.add_report(describe(ball), r);
      if (hadamard) {
        const double expected = static_cast<double>(n) / (n + 1);
        c.add(describe(ball) + " ratio = n/(n+1)", id,
              std::abs(r.ratio - expected) <= 1e-12 * expected, r.ratio, expected);
      }
    }
  }
  if (hadamard) {
    for (int n = 1; n <= 3; ++n) {
      for (double radius : {0.5, 1.0, 2.0}) {
        const HyperbolicBall ball(n, radius);
        const Quantity f = ball_mean_distance(ball);
        const auto r = check_lower_bound(BoundSpec::make(theorem, n), f.value, radius,
                                         ball_volume(ball, radius));
        c.add_report(describe(ball), r);
      }
    }
  }
  for (auto& x : c.take()) out.push_back(std::move(x));
}

void suite_lemma3_1(const std::vector<CorpusEntry>& corpus, const VerifyOptions& options,
                    std::vector<CheckResult>& out) {
  Collector c("lemma3_1");
  for (const auto& entry : corpus) {
    const auto data = pair_data(entry.manifold);
    double worst = std::numeric_limits<double>::infinity();
    for (VertexId p = 0; p < data.dist.size(); ++p) {
      const auto row = data.dist.row(p);
      const double ecc = *std::max_element(row.begin(), row.end());
      worst = std::min(worst, ecc - 0.5 * data.diameter);
    }
    c.add(entry.name + " eccentricity >= d/2", "", worst >= -options.slack, worst, -options.slack,
          "d=" + fmt(data.diameter));
  }
  for (auto& x : c.take()) out.push_back(std::move(x));
}

void suite_section2(const std::vector<CorpusEntry>& corpus, const VerifyOptions& options,
                    std::vector<CheckResult>& out) {
  Collector c("section2");
  for (const auto& entry : corpus) {
    const auto& m = entry.manifold;
    const auto data = pair_data(m);
    const double vol = m.total_volume();
    double sum_gap = std::numeric_limits<double>::infinity();
    double lipschitz_gap = -std::numeric_limits<double>::infinity();
    for (VertexId p = 0; p < data.dist.size(); ++p) {
      for (VertexId q = p + 1; q < data.dist.size(); ++q) {
        const double dv = data.dist(p, q) * vol;
        sum_gap = std::min(sum_gap, data.f[p] + data.f[q] - dv);
        lipschitz_gap = std::max(lipschitz_gap, std::abs(data.f[p] - data.f[q]) - dv);
      }
    }
    c.add(entry.name + " f(p)+f(q) >= d(p,q)V", "", sum_gap >= -options.slack, sum_gap,
          -options.slack);
    c.add(entry.name + " |f(p)-f(q)| <= d(p,q)V", "", lipschitz_gap <= options.slack,
          lipschitz_gap, options.slack);
    const double f_max = *std::max_element(data.f.begin(), data.f.end());
    const double half = 0.5 * data.diameter * vol;
    c.add(entry.name + " max f >= d V / 2", "", f_max >= half - options.slack, f_max / half, 1.0);

    double edge_gap = -std::numeric_limits<double>::infinity();
    for (VertexId p = 0; p < data.dist.size(); ++p) {
      for (const Edge& e : m.edges()) {
        edge_gap = std::max(edge_gap, std::abs(data.dist(p, e.u) - data.dist(p, e.v)) - e.length);
      }
    }
    c.add(entry.name + " distance fields edge-Lipschitz", "", edge_gap <= options.slack, edge_gap,
          options.slack);

    const auto profile = ball_volume_profile(m, 0);
    const double identity_gap = std::abs(profile.radial_integral() - data.f[0]);
    c.add(entry.name + " radial integral = f", "", identity_gap <= 1e-9 * data.f[0], identity_gap,
          1e-9 * data.f[0]);
  }
  for (auto& x : c.take()) out.push_back(std::move(x));
}

void suite_bishop_gromov(const VerifyOptions& options, std::vector<CheckResult>& out) {
  Collector c("bishop_gromov");
  std::vector<double> radii;
  for (int k = 1; k <= 40; ++k) radii.push_back(0.05 * k);

  for (int n = 1; n <= 3; ++n) {
    const EuclideanBall ball(n, 2.0);
    const auto profile = model_ball_profile(ball, radii);
    const auto lower = volume_comparison_check(profile, n, ComparisonDirection::Lower, 2.0, 0.0);
    const auto upper = volume_comparison_check(profile, n, ComparisonDirection::Upper, 2.0, 0.0);
    const double drift = std::max(std::abs(lower.worst_violation), std::abs(upper.worst_violation));
    c.add(describe(ball) + " V/r^n constant", "", drift <= 1e-12, drift, 1e-12);
  }
  for (int n = 2; n <= 3; ++n) {
    const HyperbolicBall ball(n, 2.0);
    const auto result = volume_comparison_check(model_ball_profile(ball, radii), n,
                                                ComparisonDirection::Upper, 2.0,
                                                options.monotone_tolerance);
    c.add(describe(ball) + " V/r^n nondecreasing", "", result.passed, result.worst_violation,
          options.monotone_tolerance);
  }
  for (int levels : {3, 4}) {
    const auto result = icosphere_comparison(levels, options.monotone_tolerance);
    c.add("icosphere(" + std::to_string(levels) + ") V/r^2 nonincreasing", "", result.passed,
          result.worst_violation, options.monotone_tolerance,
          "worst pair r=" + fmt(result.worst_pair.first) + "," + fmt(result.worst_pair.second));
  }
  for (auto& x : c.take()) out.push_back(std::move(x));
}

}  // namespace

std::vector<CheckResult> run_suite(Suite suite, const VerifyOptions& options) {
  std::vector<CheckResult> out;
  const bool all = suite == Suite::All;
  const bool needs_corpus =
      all || suite == Suite::T1_1 || suite == Suite::Lemma3_1 || suite == Suite::Section2;
  const std::vector<CorpusEntry> corpus = needs_corpus ? builtin_corpus() : std::vector<CorpusEntry>{};
  if (all || suite == Suite::T1_1) suite_t1_1(corpus, out);
  if (all || suite == Suite::P2_5) suite_p2_5(out);
  if (all || suite == Suite::T4_1) suite_balls(Theorem::CartanHadamard, out);
  if (all || suite == Suite::T4_2) suite_balls(Theorem::NoncompactRicci, out);
  if (all || suite == Suite::Lemma3_1) suite_lemma3_1(corpus, options, out);
  if (all || suite == Suite::Section2) suite_section2(corpus, options, out);
  if (all || suite == Suite::BishopGromov) suite_bishop_gromov(options, out);
  return out;
}

}  // namespace meandist
