#include "meandist/bounds.hpp"

#include "meandist/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace meandist {

namespace {

void require_dim(int n) {
  if (n < 1) throw InputError("dimension must be >= 1");
}

void require_range(double x, double lo, double hi, const char* what) {
  if (!(x >= lo && x <= hi)) {
    throw InputError(std::string(what) + " outside [" + std::to_string(lo) + ", " +
                     std::to_string(hi) + "]");
  }
}

void require_positive(double d) {
  if (!(d > 0.0)) throw InputError("scale d must be positive");
}

}  // namespace

double c_compact(int n) {
  require_dim(n);
  const double m = n + 1.0;
  return std::pow(1.0 - 1.0 / m, n) / (std::pow(2.0, n + 1) * m);
}

double c_hadamard(int n) {
  require_dim(n);
  const double m = n + 1.0;
  return n / m * std::pow(m, -1.0 / n);
}

double c_noncompact(int n) {
  require_dim(n);
  const double s = std::sqrt(static_cast<double>(n) * n + n + 1.0);
  return 3.0 / (2.0 * s + 2.0 * n + 1.0) * std::pow(n / (n + 2.0 + 2.0 * s), n);
}

double g_compact(double r, double d, int n) {
  require_dim(n);
  require_positive(d);
  require_range(r, 0.0, d / 2.0, "r");
  return (d / 2.0 - r) * std::pow(r / d, n);
}

double argmax_g_compact(double d, int n) {
  require_dim(n);
  require_positive(d);
  return n * d / (2.0 * (n + 1.0));
}

double g_hadamard(double r, double d, int n) {
  require_dim(n);
  require_positive(d);
  require_range(r, 0.0, d, "r");
  return r * (1.0 - std::pow(r / d, n));
}

double argmax_g_hadamard(double d, int n) {
  require_dim(n);
  require_positive(d);
  return d / std::pow(n + 1.0, 1.0 / n);
}

double g_noncompact(double t, double d, int n) {
  require_dim(n);
  require_positive(d);
  require_range(t, 0.0, d / 2.0, "t");
  return (d - 2.0 * t) * std::pow(t / (2.0 * d - t), n);
}

double argmax_g_noncompact(double d, int n) {
  require_dim(n);
  require_positive(d);
  const double s = std::sqrt(static_cast<double>(n) * n + n + 1.0);
  // n + 1 - s = n / (n + 1 + s), which avoids cancellation for large n.
  return n / (n + 1.0 + s) * d;
}

double noncompact_quadratic(double t, double d, int n) {
  return t * t - 2.0 * d * (n + 1.0) * t + n * d * d;
}

std::string theorem_id(Theorem t) {
  switch (t) {
    case Theorem::CompactRicci:
      return "T1_1";
    case Theorem::SphereUpper:
      return "P2_5";
    case Theorem::CartanHadamard:
      return "T4_1";
    case Theorem::NoncompactRicci:
      return "T4_2";
  }
  return "?";
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Satisfied:
      return "satisfied";
    case Verdict::Violated:
      return "violated";
    case Verdict::Inconclusive:
      return "inconclusive";
  }
  return "?";
}

BoundSpec BoundSpec::make(Theorem theorem, int n) {
  require_dim(n);
  BoundSpec spec{theorem, n, 0.0, {}};
  switch (theorem) {
    case Theorem::CompactRicci:
      spec.constant = c_compact(n);
      spec.hypothesis_note = "compact, Ric >= 0";
      break;
    case Theorem::SphereUpper:
      spec.constant = 0.5;
      spec.hypothesis_note = "Ric >= (n-1)k > 0";
      break;
    case Theorem::CartanHadamard:
      spec.constant = c_hadamard(n);
      spec.hypothesis_note = "complete, simply connected, sectional curvature <= 0";
      break;
    case Theorem::NoncompactRicci:
      spec.constant = c_noncompact(n);
      spec.hypothesis_note = "complete noncompact, Ric >= 0";
      break;
  }
  if (!(spec.constant > 0.0)) throw InputError("bound constant must be positive");
  if (theorem == Theorem::CompactRicci && !(spec.constant < 0.5)) {
    throw InputError("compact constant must lie below 1/2");
  }
  if (theorem == Theorem::CartanHadamard && !(spec.constant < 1.0)) {
    throw InputError("Cartan-Hadamard constant must lie below 1");
  }
  return spec;
}

BoundReport check_lower_bound(const BoundSpec& spec, double f_value, double diameter,
                              double volume, BoundInputs inputs) {
  if (spec.theorem == Theorem::SphereUpper) {
    throw InputError("use check_upper_bound_sphere for the sphere upper bound");
  }
  if (!(f_value > 0.0 && diameter > 0.0 && volume > 0.0)) {
    throw InputError("bound checks need positive f, diameter and volume");
  }
  BoundReport r{};
  r.spec = spec;
  r.f_value = f_value;
  r.diameter = diameter;
  r.volume = volume;
  r.ratio = f_value / (diameter * volume);
  r.threshold = spec.constant;
  r.strict = r.ratio > r.threshold;
  // The noncompact Ricci form is proved only as a non-strict inequality.
  r.satisfied = spec.theorem == Theorem::NoncompactRicci ? r.ratio >= r.threshold : r.strict;
  r.equality = r.ratio == r.threshold;
  r.asymptotic_inputs = inputs.asymptotic;
  r.within_hypothesis = inputs.within_hypothesis;
  if (r.satisfied) {
    r.verdict = Verdict::Satisfied;
  } else if (inputs.asymptotic && r.ratio >= 0.95 * r.threshold) {
    r.verdict = Verdict::Inconclusive;
  } else {
    r.verdict = Verdict::Violated;
  }
  return r;
}

BoundReport check_upper_bound_sphere(int n, double k, double f_value, double tolerance) {
  require_dim(n);
  if (!(k > 0.0)) throw InputError("sphere curvature must be positive");
  if (!(f_value > 0.0)) throw InputError("f must be positive");
  const ModelSpace sphere = Sphere(n, k);
  const double d = meandist::diameter(sphere).value;
  const double v = meandist::volume(sphere).value;
  const double bound = 0.5 * d * v;

  BoundReport r{};
  r.spec = BoundSpec::make(Theorem::SphereUpper, n);
  r.f_value = f_value;
  r.diameter = d;
  r.volume = v;
  r.ratio = f_value / (d * v);
  r.threshold = 0.5;
  r.equality = std::abs(f_value - bound) <= tolerance * bound;
  r.satisfied = f_value <= bound * (1.0 + tolerance);
  r.strict = f_value < bound * (1.0 - tolerance);
  r.asymptotic_inputs = false;
  r.within_hypothesis = true;
  r.verdict = r.satisfied ? Verdict::Satisfied : Verdict::Violated;
  return r;
}

VolumeComparisonResult volume_comparison_check(const BallVolumeProfile& profile, int n,
                                               ComparisonDirection direction,
                                               double reference_radius, double tolerance,
                                               double min_radius) {
  require_dim(n);
  if (profile.radii.empty() || profile.radii.size() != profile.volumes.size()) {
    throw InputError("empty or malformed volume profile");
  }
  std::vector<std::pair<double, double>> samples;  // (r, V_p(r) / r^n)
  for (std::size_t i = 0; i < profile.radii.size(); ++i) {
    const double r = profile.radii[i];
    if (r <= 0.0 || r < min_radius || r > reference_radius) continue;
    samples.emplace_back(r, profile.volumes[i] / std::pow(r, n));
  }
  if (samples.size() < 2) {
    throw InputError("volume profile has fewer than two radii in the checked window");
  }

  VolumeComparisonResult out{true, samples.size(), {samples[0].first, samples[1].first}, 0.0};
  double worst = -std::numeric_limits<double>::infinity();
  // Running extreme of earlier ratios: the minimum for a nonincreasing check,
  // the maximum for a nondecreasing one.
  std::size_t extreme = 0;
  for (std::size_t j = 1; j < samples.size(); ++j) {
    const double earlier = samples[extreme].second;
    const double current = samples[j].second;
    const double violation = direction == ComparisonDirection::Lower ? current / earlier - 1.0
                                                                     : 1.0 - current / earlier;
    if (violation > worst) {
      worst = violation;
      out.worst_pair = {samples[extreme].first, samples[j].first};
    }
    const bool replace = direction == ComparisonDirection::Lower ? current < earlier
                                                                 : current > earlier;
    if (replace) extreme = j;
  }
  out.worst_violation = worst;
  out.passed = worst <= tolerance;
  return out;
}

BallVolumeProfile model_ball_profile(const ModelSpace& space, const std::vector<double>& radii) {
  BallVolumeProfile profile;
  for (std::size_t i = 0; i < radii.size(); ++i) {
    if (!(radii[i] > 0.0) || (i > 0 && !(radii[i] > radii[i - 1]))) {
      throw InputError("profile radii must be positive and strictly increasing");
    }
    profile.radii.push_back(radii[i]);
    profile.volumes.push_back(ball_volume(space, radii[i]));
  }
  return profile;
}

GrowthResult growth_check(const std::vector<double>& radii, const std::vector<double>& f_values,
                          double target) {
  if (radii.size() != f_values.size()) throw InputError("one f value per radius required");
  if (radii.size() < 3) throw InputError("growth check needs at least three radii");
  GrowthResult out{};
  for (std::size_t i = 0; i < radii.size(); ++i) {
    if (!(radii[i] > 0.0) || (i > 0 && !(radii[i] > radii[i - 1]))) {
      throw InputError("growth radii must be positive and strictly increasing");
    }
    out.values.push_back(f_values[i] / radii[i]);
  }
  out.strictly_increasing = true;
  for (std::size_t i = 1; i < out.values.size(); ++i) {
    out.factors.push_back(out.values[i] / out.values[i - 1]);
    if (!(out.values[i] > out.values[i - 1])) out.strictly_increasing = false;
  }
  out.exceeded_target = out.values.back() > target;
  out.passed = out.strictly_increasing && out.exceeded_target;
  return out;
}

}  // namespace meandist
