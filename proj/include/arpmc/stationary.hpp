#pragma once

#include <functional>
#include <string>
#include <vector>

#include "arpmc/quadrature.hpp"

namespace arpmc {

// Radial truncation for stationary integrals. The weight r e^{-(r+1/r)}
// leaves mass < 1e-18 beyond 50 and vanishes faster than any polynomial
// below 1e-6, so [kRadialMin, kRadialMax] carries everything at the
// tolerances used here.
inline constexpr double kRadialMin = 1e-6;
inline constexpr double kRadialMax = 50.0;

inline constexpr double kTolBound = 1e-10;       // certificate verification
inline constexpr double kTolExpectation = 1e-8;  // stationary expectations

// A functional of the planar state in separable form g(r) * A(r), where A
// is the angular average over the circle of radius r (1 when absent).
// Breakpoints mark kinks or jumps so the quadrature can split there.
struct RadialFunctional {
  std::string name;
  std::function<double(double)> radial;
  std::function<double(double)> angular;  // empty means constant 1
  std::vector<double> breakpoints;
  double lo = 0.0;  // declared range [lo, hi], used by TV normalization
  double hi = 1.0;
};

// Unnormalized stationary radial weight r e^{-(r+1/r)}.
double stationary_weight(double r);

struct PlanarExpectation {
  double value = 0.0;
  double numerator = 0.0;    // 2 pi * integral of g A w
  double denominator = 0.0;  // 2 pi * integral of w
  long evaluations = 0;
};

// E_pi[fun] = (2 pi Int g A w dr) / (2 pi Int w dr) over the truncated range.
PlanarExpectation stationary_expectation_planar(const RadialFunctional& fun,
                                                double tol = kTolExpectation);

// pi({lo <= r < hi}) by quadrature of the indicator.
double planar_set_mass(double lo, double hi, double tol = kTolExpectation);

// The other preimage of f(r) across the minimum of f; returns r at the
// minimum itself. f(conjugate_radius(r)) == f(r) to root-finding accuracy.
double conjugate_radius(double r);

// One-dimensional reduction of the kernel applied to V:
//   PV(r_x) = (1/(2 r_x)) Int_{|r_x-1|}^{r_x+1} [a V(r) + (1-a) V(r_x)] r dr
// with a = accept probability from r_x to r. Split at the two radii where
// a kinks (r_x and its conjugate). The accepted term is evaluated as
// exp(log a + H/2), so rejection regions with extreme V cannot produce NaN.
double pv_quadrature(double r_x, double tol = kTolBound);

}  // namespace arpmc
