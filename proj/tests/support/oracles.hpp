#pragma once

// Independent reference computations for the tests. Nothing here calls the
// library's quadrature or closed forms.

#include <cmath>
#include <cstdint>
#include <functional>
#include <numbers>
#include <random>
#include <utility>

namespace oracle {

using std::numbers::pi;

// Composite Simpson rule with an even number of panels.
inline double simpson(const std::function<double(double)>& f, double a, double b, int panels = 20000) {
  if (panels % 2) ++panels;
  const double h = (b - a) / panels;
  double sum = f(a) + f(b);
  for (int i = 1; i < panels; ++i) sum += f(a + i * h) * (i % 2 ? 4.0 : 2.0);
  return sum * h / 3.0;
}

// Integral of sqrt(x^2 + y^2) over [0, A] x [0, B].
inline double corner_integral(double A, double B) {
  const double D = std::hypot(A, B);
  return (2.0 * A * B * D + A * A * A * std::log((B + D) / A) + B * B * B * std::log((A + D) / B)) /
         6.0;
}

// f on the flat torus a x b: four copies of the quarter rectangle around p.
inline double torus_rectangle(double a, double b) { return 4.0 * corner_integral(a / 2, b / 2); }

// Area of S^{n-1} in R^n, by the recurrence |S^{n-1}| = 2 pi |S^{n-3}| / (n - 2).
inline double sphere_area(int n) {
  if (n == 1) return 2.0;
  if (n == 2) return 2.0 * pi;
  return 2.0 * pi * sphere_area(n - 2) / (n - 2);
}

// f on S^n_k from the polar-coordinate integral.
inline double sphere_f(int n, double k) {
  const double R = 1.0 / std::sqrt(k);
  return sphere_area(n) *
         simpson([&](double r) { return r * std::pow(R * std::sin(r / R), n - 1); }, 0.0, pi * R);
}

// f(p, d) and V_p(d) for a ball of radius d in curvature -1.
inline double hyperbolic_f(int n, double d) {
  return sphere_area(n) * simpson([&](double r) { return r * std::pow(std::sinh(r), n - 1); }, 0, d);
}
inline double hyperbolic_volume(int n, double d) {
  return sphere_area(n) * simpson([&](double r) { return std::pow(std::sinh(r), n - 1); }, 0, d);
}

// Hyperbolic distance in the hyperboloid model between polar points in the plane.
inline double hyperbolic_distance_2d(double r1, double a1, double r2, double a2) {
  const double c = std::cosh(r1) * std::cosh(r2) - std::sinh(r1) * std::sinh(r2) * std::cos(a1 - a2);
  return std::acosh(std::max(1.0, c));
}

// Monte Carlo estimate of the integral of |x| over the Euclidean ball B^n(R).
inline std::pair<double, double> monte_carlo_ball_f(int n, double R, std::size_t samples,
                                                    std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> uni;
  double sum = 0.0;
  double sum2 = 0.0;
  for (std::size_t i = 0; i < samples; ++i) {
    // A uniform point of the ball has radius R U^{1/n}.
    const double r = R * std::pow(uni(rng), 1.0 / n);
    sum += r;
    sum2 += r * r;
  }
  const double volume = std::pow(pi, n / 2.0) / std::tgamma(n / 2.0 + 1.0) * std::pow(R, n);
  const double mean = sum / samples;
  const double sd = std::sqrt(std::max(0.0, sum2 / samples - mean * mean) / samples);
  return {mean * volume, sd * volume};
}

struct GridMax {
  double argmax;
  double max;
};

// Brute-force maximum over `points` equally spaced samples of [lo, hi].
inline GridMax grid_search(const std::function<double(double)>& g, double lo, double hi,
                           int points = 100000) {
  GridMax best{lo, g(lo)};
  for (int i = 1; i < points; ++i) {
    const double x = lo + (hi - lo) * i / (points - 1);
    const double v = g(x);
    if (v > best.max) best = {x, v};
  }
  return best;
}

// f(q) at the disk center of a thin-neck dumbbell by midpoint sums: the disk,
// the cylinder (length L, circumference C), and the truncated unit sphere
// reached through the neck.
inline double dumbbell_f_q(double eps, double L, int cells = 200000) {
  const double a = std::sqrt(2 * eps - eps * eps);
  const double C = 2 * pi * a;
  const double cut = std::acos(-1 + eps);
  double f = 0.0;
  for (int i = 0; i < cells; ++i) {
    const double rho = a * (i + 0.5) / cells;
    f += rho * 2 * pi * rho * a / cells;
  }
  for (int i = 0; i < cells; ++i) {
    const double t = L * (i + 0.5) / cells;
    f += (a + t) * C * L / cells;
  }
  for (int i = 0; i < cells; ++i) {
    const double theta = cut * (i + 0.5) / cells;
    f += (a + L + cut - theta) * 2 * pi * std::sin(theta) * cut / cells;
  }
  return f;
}

}  // namespace oracle
