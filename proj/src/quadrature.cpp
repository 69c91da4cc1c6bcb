#include "meandist/quadrature.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <cmath>

namespace meandist {

namespace {
constexpr unsigned kMaxDepth = 20;
}

QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           double rel_tol) {
  if (a == b) return {0.0, 0.0};
  // Boost compares an unscaled error estimate against a scaled tolerance, which
  // never terminates on very short intervals; integrate over [0, 1] instead.
  const double width = b - a;
  double error = 0.0;
  const double value = boost::math::quadrature::gauss_kronrod<double, 15>::integrate(
      [&](double u) { return f(a + width * u); }, 0.0, 1.0, kMaxDepth, rel_tol, &error);
  return {value * width, error * std::abs(width)};
}

QuadratureResult integrate_2d(const std::function<double(double, double)>& f, double x0,
                              double x1, double y0, double y1, double rel_tol) {
  double inner_error = 0.0;
  // Inner integrals are solved a little tighter so their noise does not stall
  // the outer refinement.
  auto outer = integrate(
      [&](double x) {
        auto inner = integrate([&](double y) { return f(x, y); }, y0, y1, rel_tol * 0.1);
        inner_error = std::max(inner_error, inner.error_estimate);
        return inner.value;
      },
      x0, x1, rel_tol);
  return {outer.value, outer.error_estimate + inner_error * std::abs(x1 - x0)};
}

}  // namespace meandist
