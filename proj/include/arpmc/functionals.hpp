#pragma once

#include <functional>
#include <string>
#include <vector>

#include "arpmc/model.hpp"
#include "arpmc/stationary.hpp"

namespace arpmc {

// Scalar summaries of a chain state. `lo`/`hi` declare the exact range of
// the functional; TV estimates divide by (hi - lo), so these must be tight.
struct SquareFunctional {
  std::string name;
  double lo = 0.0;
  double hi = 1.0;
  std::function<double(const SquareState&)> eval;
};

struct PlanarFunctional {
  std::string name;
  double lo = 0.0;
  double hi = 1.0;
  std::function<double(const PlanarPoint&)> eval;
};

// Bounded functionals used for TV upper-bound curves.
std::vector<SquareFunctional> tv_functionals_square();
std::vector<PlanarFunctional> tv_functionals_planar();

// Unbounded-range summaries used for convergence diagnostics.
std::vector<SquareFunctional> diagnostic_functionals_square();
std::vector<PlanarFunctional> diagnostic_functionals_planar();

SquareFunctional square_functional(const std::string& name);
PlanarFunctional planar_functional(const std::string& name);

// Radial form of a planar TV functional, for quadrature references.
// Throws for names without a separable form.
RadialFunctional planar_radial_form(const std::string& name);

}  // namespace arpmc
