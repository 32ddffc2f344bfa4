#pragma once

#include <functional>

namespace hyplab {

// Adaptive Gauss-Kronrod (7/15) quadrature with interval bisection.
// Subdivides until the local error estimate drops below the share of
// max(rel_tol*|I|, abs_floor) assigned to the subinterval.
double integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                          double rel_tol = 1e-10, double abs_floor = 1e-300);

}  // namespace hyplab
