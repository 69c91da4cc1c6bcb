#include "meandist/bounds.hpp"
#include "meandist/errors.hpp"
#include "meandist/generators.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace meandist;
using std::numbers::pi;

namespace {

// Grid search refined once around the coarse winner.
oracle::GridMax refined_max(const std::function<double(double)>& g, double lo, double hi) {
  const auto coarse = oracle::grid_search(g, lo, hi);
  const double h = (hi - lo) / 99999.0;
  return oracle::grid_search(g, std::max(lo, coarse.argmax - 2 * h),
                             std::min(hi, coarse.argmax + 2 * h), 20001);
}

}  // namespace

TEST_CASE("compact constant") {
  CHECK(c_compact(1) == doctest::Approx(1.0 / 16).epsilon(1e-12));
  CHECK(c_compact(2) == doctest::Approx(1.0 / 54).epsilon(1e-12));
  for (int n = 1; n <= 10; ++n) CHECK(c_compact(n) < 0.5);
  CHECK_THROWS_AS(c_compact(0), InputError);
}

TEST_CASE("Cartan-Hadamard constant") {
  CHECK(c_hadamard(1) == doctest::Approx(0.25));
  CHECK(c_hadamard(2) == doctest::Approx(2.0 / 3 / std::sqrt(3.0)));
  CHECK(std::abs(c_hadamard(1000000) - 1.0) < 1e-4);
  for (int n = 1; n < 50; ++n) CHECK(c_hadamard(n + 1) > c_hadamard(n));
}

TEST_CASE("noncompact constant") {
  CHECK(c_noncompact(1) == doctest::Approx(3 / (2 * std::sqrt(3.0) + 3) / (3 + 2 * std::sqrt(3.0))));
  CHECK(c_noncompact(1) == doctest::Approx(7 - 4 * std::sqrt(3.0)).epsilon(1e-12));
  CHECK(c_noncompact(2) == doctest::Approx(0.013507).epsilon(1e-4));
  for (int n = 1; n <= 10; ++n) CHECK(c_noncompact(n) < c_hadamard(n));
}

TEST_CASE("g functions: boundary zeros, ranges and the named maxima") {
  CHECK(argmax_g_compact(1.0, 2) == doctest::Approx(1.0 / 3));
  CHECK(g_compact(1.0 / 3, 1.0, 2) == doctest::Approx(1.0 / 54));
  CHECK(g_compact(0.0, 1.0, 3) == 0.0);
  CHECK(g_compact(0.5, 1.0, 3) == 0.0);
  CHECK(argmax_g_hadamard(1.0, 1) == doctest::Approx(0.5));
  CHECK(g_hadamard(0.5, 1.0, 1) == doctest::Approx(0.25));
  CHECK(g_hadamard(0.0, 2.0, 4) == 0.0);
  CHECK(g_hadamard(2.0, 2.0, 4) == 0.0);
  CHECK(argmax_g_noncompact(1.0, 1) == doctest::Approx(2 - std::sqrt(3.0)));
  CHECK(g_noncompact(0.0, 1.0, 2) == 0.0);
  CHECK(g_noncompact(0.5, 1.0, 2) == 0.0);
  CHECK_THROWS_AS(g_compact(0.6, 1.0, 2), InputError);
  CHECK_THROWS_AS(g_hadamard(-0.1, 1.0, 2), InputError);
  CHECK_THROWS_AS(g_noncompact(0.51, 1.0, 2), InputError);
  CHECK_THROWS_AS(g_compact(0.1, 0.0, 2), InputError);
}

TEST_CASE("g maxima against brute-force grid search for n <= 10") {
  for (double d : {1.0, 2.5}) {
    for (int n = 1; n <= 10; ++n) {
      CAPTURE(n);
      CAPTURE(d);
      const auto gc = refined_max([&](double r) { return g_compact(r, d, n); }, 0, d / 2);
      CHECK(std::abs(gc.argmax - argmax_g_compact(d, n)) <= 1e-5 * d);
      CHECK(gc.max == doctest::Approx(c_compact(n) * d).epsilon(1e-6));

      const auto gh = refined_max([&](double r) { return g_hadamard(r, d, n); }, 0, d);
      CHECK(std::abs(gh.argmax - argmax_g_hadamard(d, n)) <= 1e-5 * d);
      CHECK(gh.max == doctest::Approx(c_hadamard(n) * d).epsilon(1e-6));

      const auto gn = refined_max([&](double t) { return g_noncompact(t, d, n); }, 0, d / 2);
      const double tstar = argmax_g_noncompact(d, n);
      CHECK(std::abs(gn.argmax - tstar) <= 1e-5 * d);
      CHECK(gn.max == doctest::Approx(c_noncompact(n) * d).epsilon(1e-6));
      CHECK(std::abs(noncompact_quadratic(tstar, d, n)) < 1e-9 * d * d);
      CHECK(tstar == doctest::Approx((n + 1 - std::sqrt(double(n) * n + n + 1)) * d).epsilon(1e-12));
    }
  }
}

TEST_CASE("lower-bound checks on model-space values") {
  const auto sphere = check_lower_bound(BoundSpec::make(Theorem::CompactRicci, 2), 2 * pi * pi, pi,
                                        4 * pi);
  CHECK(sphere.ratio == doctest::Approx(0.5));
  CHECK(sphere.verdict == Verdict::Satisfied);
  CHECK(sphere.strict);

  const double torus_f = (std::sqrt(2.0) + std::log(1 + std::sqrt(2.0))) / 6;
  const auto torus =
      check_lower_bound(BoundSpec::make(Theorem::CompactRicci, 2), torus_f, std::sqrt(0.5), 1.0);
  CHECK(torus.ratio == doctest::Approx(0.5411).epsilon(1e-4));
  CHECK(torus.satisfied);

  for (double lambda : {0.5, 3.0}) {
    const auto scaled = check_lower_bound(BoundSpec::make(Theorem::CompactRicci, 2),
                                          torus_f * std::pow(lambda, 3), std::sqrt(0.5) * lambda,
                                          lambda * lambda);
    CHECK(scaled.ratio == doctest::Approx(torus.ratio).epsilon(1e-12));
  }
  CHECK_THROWS_AS(check_lower_bound(BoundSpec::make(Theorem::SphereUpper, 2), 1, 1, 1), InputError);
  CHECK_THROWS_AS(check_lower_bound(BoundSpec::make(Theorem::CompactRicci, 2), 0, 1, 1), InputError);
}

TEST_CASE("lower-bound verdicts: violated, inconclusive and out of hypothesis") {
  const auto spec = BoundSpec::make(Theorem::CompactRicci, 2);
  const double c = spec.constant;
  CHECK(check_lower_bound(spec, 0.5 * c, 1, 1).verdict == Verdict::Violated);
  const auto near = check_lower_bound(spec, 0.97 * c, 1, 1, {true, true});
  CHECK(near.verdict == Verdict::Inconclusive);
  const auto far = check_lower_bound(spec, 0.5 * c, 1, 1, {true, false});
  CHECK(far.verdict == Verdict::Violated);
  CHECK_FALSE(far.within_hypothesis);
  CHECK(far.asymptotic_inputs);
}

TEST_CASE("noncompact bound is non-strict; Cartan-Hadamard is strict") {
  const auto t42 = BoundSpec::make(Theorem::NoncompactRicci, 1);
  const auto eq = check_lower_bound(t42, t42.constant, 1, 1);
  CHECK(eq.satisfied);
  CHECK(eq.equality);
  CHECK_FALSE(eq.strict);
  const auto t41 = BoundSpec::make(Theorem::CartanHadamard, 1);
  CHECK_FALSE(check_lower_bound(t41, t41.constant, 1, 1).satisfied);
  for (int n = 1; n <= 6; ++n) {
    const auto r = check_lower_bound(BoundSpec::make(Theorem::CartanHadamard, n), n, 1, n + 1);
    CHECK(r.satisfied);
    CHECK(r.ratio == doctest::Approx(double(n) / (n + 1)));
  }
}

TEST_CASE("sphere upper bound") {
  const auto eq = check_upper_bound_sphere(2, 1.0, 2 * pi * pi);
  CHECK(eq.equality);
  CHECK(eq.satisfied);
  CHECK(eq.ratio == doctest::Approx(0.5));
  const auto above = check_upper_bound_sphere(2, 1.0, 2 * pi * pi + 1);
  CHECK_FALSE(above.satisfied);
  CHECK(above.verdict == Verdict::Violated);
  const auto below = check_upper_bound_sphere(2, 1.0, 19.0);
  CHECK(below.satisfied);
  CHECK(below.strict);
  CHECK_FALSE(below.equality);
  CHECK(check_upper_bound_sphere(2, 1.0, 2 * pi * pi * 1.005, kMeshEqualityTolerance).equality);
  CHECK(check_upper_bound_sphere(3, 4.0, oracle::sphere_f(3, 4.0)).equality);
  CHECK_THROWS_AS(check_upper_bound_sphere(2, -1.0, 1.0), InputError);
}

TEST_CASE("volume comparison: Euclidean constant, hyperbolic increasing") {
  const std::vector<double> radii{0.25, 0.5, 1.0, 1.5, 2.0, 3.0};
  for (int n = 1; n <= 3; ++n) {
    const auto profile = model_ball_profile(EuclideanBall(n, 3.0), radii);
    const auto lower = volume_comparison_check(profile, n, ComparisonDirection::Lower, 3.0, 1e-12);
    const auto upper = volume_comparison_check(profile, n, ComparisonDirection::Upper, 3.0, 1e-12);
    CHECK(lower.passed);
    CHECK(upper.passed);
    CHECK(std::abs(lower.worst_violation) < 1e-12);
    CHECK(lower.radii_checked == radii.size());
  }
  const auto hyper = model_ball_profile(HyperbolicBall(2, 3.0), radii);
  CHECK(volume_comparison_check(hyper, 2, ComparisonDirection::Upper, 3.0).passed);
  const auto wrong = volume_comparison_check(hyper, 2, ComparisonDirection::Lower, 3.0);
  CHECK_FALSE(wrong.passed);
  CHECK(wrong.worst_pair.first < wrong.worst_pair.second);
  CHECK_THROWS_AS(volume_comparison_check(hyper, 2, ComparisonDirection::Upper, 0.3), InputError);
}

TEST_CASE("volume comparison on an exact spherical-cap profile is nonincreasing") {
  BallVolumeProfile caps;
  for (int i = 1; i <= 50; ++i) {
    const double r = pi * i / 50;
    caps.radii.push_back(r);
    caps.volumes.push_back(2 * pi * (1 - std::cos(r)));
  }
  const auto r = volume_comparison_check(caps, 2, ComparisonDirection::Lower, pi, 0.0);
  CHECK(r.passed);
  CHECK(r.worst_violation < 0.0);
  CHECK_FALSE(volume_comparison_check(caps, 2, ComparisonDirection::Upper, pi).passed);
}

TEST_CASE("growth of f(p, r)/r") {
  const std::vector<double> radii{1, 2, 4, 8};
  std::vector<double> f;
  for (double r : radii) f.push_back(2 * pi / 3 * r * r * r);
  const auto g = growth_check(radii, f, 100.0);
  CHECK(g.passed);
  for (double factor : g.factors) CHECK(factor == doctest::Approx(4.0).epsilon(1e-12));
  CHECK(g.values.back() == doctest::Approx(2 * pi / 3 * 64));

  CHECK_THROWS_AS(growth_check({1, 2}, {1, 4}, 0.0), InputError);
  const auto flat = growth_check({1, 2, 3}, {1, 2, 3}, 0.0);
  CHECK_FALSE(flat.passed);
  CHECK_FALSE(flat.strictly_increasing);
  CHECK_FALSE(growth_check(radii, f, 1e6).passed);
  CHECK_THROWS_AS(growth_check({1, 1, 2}, {1, 1, 4}, 0.0), InputError);
}
