#pragma once

#include <functional>

namespace meandist {

struct QuadratureResult {
  double value;
  double error_estimate;
};

// Adaptive Gauss-Kronrod (7/15) on [a, b].
QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           double rel_tol);

// Iterated adaptive quadrature over [x0, x1] x [y0, y1]. The integrand should be
// smooth inside the rectangle; split the domain along kinks before calling.
QuadratureResult integrate_2d(const std::function<double(double, double)>& f, double x0,
                              double x1, double y0, double y1, double rel_tol);

}  // namespace meandist
