#pragma once

// Explicit constants of the diameter-volume lower bounds, the auxiliary
// functions whose maxima produce them, and checks of each inequality against
// measured quantities.
//
//   compact, Ric >= 0:          f(p)   >  c_compact(n)    d(M) V(M)
//   Cartan-Hadamard:            f(p,d) >  c_hadamard(n)   d V_p(d)
//   complete, Ric >= 0:         f(p,d) >= c_noncompact(n) d V_p(d)
//   Ric >= (n-1)k > 0:          f(p)   <= 1/2 d(S^n_k) V(S^n_k)

#include "meandist/discrete_manifold.hpp"

#include <string>
#include <utility>
#include <vector>

namespace meandist {

// (1 - 1/(n+1))^n / (2^{n+1} (n+1))
double c_compact(int n);
// n/(n+1) * (n+1)^{-1/n}
double c_hadamard(int n);
// 3/(2 sqrt(n^2+n+1) + 2n + 1) * (n/(n + 2 + 2 sqrt(n^2+n+1)))^n
double c_noncompact(int n);

// (d/2 - r) r^n / d^n on [0, d/2]; maximized at r = n d / (2(n+1)).
double g_compact(double r, double d, int n);
double argmax_g_compact(double d, int n);

// r (1 - r^n / d^n) on [0, d]; maximized at r = d / (n+1)^{1/n}.
double g_hadamard(double r, double d, int n);
double argmax_g_hadamard(double d, int n);

// (d - 2t) t^n / (2d - t)^n on [0, d/2]; maximized at t = (n+1 - sqrt(n^2+n+1)) d,
// the root in [0, d/2] of t^2 - 2d(n+1)t + n d^2 = 0.
double g_noncompact(double t, double d, int n);
double argmax_g_noncompact(double d, int n);
double noncompact_quadratic(double t, double d, int n);

enum class Theorem { CompactRicci, SphereUpper, CartanHadamard, NoncompactRicci };

// Short ids used in reports: T1_1, P2_5, T4_1, T4_2.
std::string theorem_id(Theorem t);

struct BoundSpec {
  Theorem theorem;
  int n;
  double constant;
  std::string hypothesis_note;

  // The constant for `theorem` in dimension n.
  static BoundSpec make(Theorem theorem, int n);
};

enum class Verdict { Satisfied, Violated, Inconclusive };
std::string to_string(Verdict v);

struct BoundInputs {
  bool asymptotic = false;        // any input asymptotic or a lower-bound-only diameter
  bool within_hypothesis = true;  // the space meets the theorem's curvature hypothesis
};

struct BoundReport {
  BoundSpec spec;
  double f_value;
  double diameter;  // d(M), or the ball radius d for the noncompact forms
  double volume;    // V(M), or V_p(d)
  double ratio;     // f / (diameter * volume)
  double threshold;
  bool satisfied;
  bool strict;      // ratio > threshold (as opposed to equality)
  bool equality;    // upper-bound checks: ratio equals the threshold within tolerance
  bool asymptotic_inputs;
  bool within_hypothesis;
  Verdict verdict;
};

BoundReport check_lower_bound(const BoundSpec& spec, double f_value, double diameter,
                              double volume, BoundInputs inputs = {});

// Default relative equality band for exact model-space inputs.
inline constexpr double kExactEqualityTolerance = 1e-9;
// Relative equality band for mesh-derived inputs.
inline constexpr double kMeshEqualityTolerance = 1e-2;

BoundReport check_upper_bound_sphere(int n, double k, double f_value,
                                     double tolerance = kExactEqualityTolerance);

enum class ComparisonDirection {
  Lower,  // V_p(r)/r^n nonincreasing (Ric >= 0)
  Upper,  // V_p(r)/r^n nondecreasing (nonpositive curvature)
};

inline constexpr double kMonotoneTolerance = 0.02;

struct VolumeComparisonResult {
  bool passed;
  std::size_t radii_checked;
  // Pair r_i < r_j with the largest relative move against the expected direction.
  std::pair<double, double> worst_pair;
  double worst_violation;  // relative; <= tolerance when passed
};

// Checks monotonicity of V_p(r)/r^n over profile radii in [min_radius,
// reference_radius]. min_radius discards the resolution-scale part of a
// discrete profile; reference_radius plays the role of R in the comparison
// V_p(r)/V_o(r) vs V_p(R)/V_o(R).
VolumeComparisonResult volume_comparison_check(const BallVolumeProfile& profile, int n,
                                               ComparisonDirection direction,
                                               double reference_radius,
                                               double tolerance = kMonotoneTolerance,
                                               double min_radius = 0.0);

// Profile of concentric ball volumes of a Euclidean or hyperbolic ball.
BallVolumeProfile model_ball_profile(const ModelSpace& space, const std::vector<double>& radii);

struct GrowthResult {
  bool passed;
  bool strictly_increasing;
  bool exceeded_target;
  std::vector<double> values;   // f(p, r) / r
  std::vector<double> factors;  // successive quotients values[i+1] / values[i]
};

// Checks that f(p, r)/r increases strictly along increasing radii and ends above
// `target`. Needs at least three radii.
GrowthResult growth_check(const std::vector<double>& radii, const std::vector<double>& f_values,
                          double target);

}  // namespace meandist
