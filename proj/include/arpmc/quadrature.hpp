#pragma once

#include <functional>
#include <vector>

namespace arpmc {

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
  long evaluations = 0;
  bool converged = true;

  QuadratureResult& operator+=(const QuadratureResult& o) {
    value += o.value;
    error_estimate += o.error_estimate;
    evaluations += o.evaluations;
    converged = converged && o.converged;
    return *this;
  }
};

// Adaptive Gauss-Kronrod 7-15: a segment is accepted when |K15 - G7| falls
// under its proportional share of tol, otherwise bisected, down to
// max_depth levels. On depth exhaustion the best estimate is still
// returned with converged = false; quad_or_throw turns that into an error.
QuadratureResult quad_1d(const std::function<double(double)>& g, double a,
                         double b, double tol, int max_depth = 48);

// Same rule with the domain pre-split at interior breakpoints (kinks,
// jumps). Breakpoints outside (a, b) are ignored.
QuadratureResult quad_1d_split(const std::function<double(double)>& g, double a,
                               double b, const std::vector<double>& breakpoints,
                               double tol, int max_depth = 48);

double quad_or_throw(const QuadratureResult& q, const char* what);

}  // namespace arpmc
