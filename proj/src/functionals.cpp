#include "arpmc/functionals.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "arpmc/quadrature.hpp"

namespace arpmc {

namespace {

const double kSqrt2 = std::sqrt(2.0);

double sum_radii(const SquareState& s) {
  double t = 0.0;
  for (const Point2& p : s) t += p.radius();
  return t;
}

// Angular average of min(1, |x1|) on the circle of radius r.
double angular_min_abs_x1(double r) {
  auto g = [r](double theta) { return std::min(1.0, r * std::cos(theta)); };
  std::vector<double> breaks;
  if (r > 1.0) breaks.push_back(std::acos(1.0 / r));
  QuadratureResult q = quad_1d_split(g, 0.0, 0.5 * kPi, breaks, 1e-12);
  quad_or_throw(q, "angular average");
  return q.value / (0.5 * kPi);
}

}  // namespace

std::vector<SquareFunctional> tv_functionals_square() {
  return {
      {"f", 0.0, 3.0 * kSqrt2, sum_radii},
      {"g", 0.0, 1.0, [](const SquareState& s) { return s.at(0).x; }},
      {"h", 0.0, kSqrt2,
       [](const SquareState& s) {
         return std::hypot(s.at(0).x - s.at(1).x, s.at(0).y - s.at(1).y);
       }},
      {"p", 1.0, std::exp(kSqrt2),
       [](const SquareState& s) { return std::exp(s.at(2).radius()); }},
      {"l", 0.0, kSqrt2,
       [](const SquareState& s) {
         double m = 0.0;
         for (const Point2& p : s) m = std::max(m, p.radius());
         return m;
       }},
  };
}

std::vector<PlanarFunctional> tv_functionals_planar() {
  return {
      {"f", 0.0, 1.0,
       [](const PlanarPoint& p) { return std::exp(-p.radius()); }},
      {"g", 0.0, 1.0,
       [](const PlanarPoint& p) {
         const double r2 = p.x * p.x + p.y * p.y;
         return p.x * p.x / r2;
       }},
      {"h", 0.0, 1.0,
       [](const PlanarPoint& p) { return std::min(1.0, 1.0 / p.radius()); }},
      {"p", 0.0, 1.0,
       [](const PlanarPoint& p) { return std::min(1.0, std::abs(p.x)); }},
      {"l", -1.0, 1.0,
       [](const PlanarPoint& p) { return std::sin(p.radius()); }},
  };
}

std::vector<SquareFunctional> diagnostic_functionals_square() {
  return {
      {"psi", 0.0, 3.0 * kSqrt2, sum_radii},
      {"phi1", 0.0, 6.0,
       [](const SquareState& s) {
         double t = 0.0;
         for (const Point2& p : s) t += p.x + p.y;
         return t;
       }},
      {"phi2", 0.0, 3.0,
       [](const SquareState& s) {
         double t = 0.0;
         for (const Point2& p : s) t += p.x * p.y;
         return t;
       }},
  };
}

std::vector<PlanarFunctional> diagnostic_functionals_planar() {
  const double inf = std::numeric_limits<double>::infinity();
  return {
      {"psi", 0.0, inf, [](const PlanarPoint& p) { return p.radius(); }},
      {"phi1", 0.0, inf,
       [](const PlanarPoint& p) { return std::abs(p.x) + std::abs(p.y); }},
      {"phi2", 0.0, 1.0,
       [](const PlanarPoint& p) {
         const double r = p.radius();
         return (r >= 0.5 && r < 1.5) ? 1.0 : 0.0;
       }},
  };
}

SquareFunctional square_functional(const std::string& name) {
  for (auto& f : tv_functionals_square())
    if (f.name == name) return f;
  for (auto& f : diagnostic_functionals_square())
    if (f.name == name) return f;
  throw std::invalid_argument("unknown square functional: " + name);
}

PlanarFunctional planar_functional(const std::string& name) {
  for (auto& f : tv_functionals_planar())
    if (f.name == name) return f;
  for (auto& f : diagnostic_functionals_planar())
    if (f.name == name) return f;
  throw std::invalid_argument("unknown planar functional: " + name);
}

RadialFunctional planar_radial_form(const std::string& name) {
  if (name == "f") {
    return {"f", [](double r) { return std::exp(-r); }, {}, {}, 0.0, 1.0};
  }
  if (name == "g") {
    // Angular mean of x1^2 / r^2 is exactly 1/2 at every radius.
    return {"g", [](double) { return 1.0; }, [](double) { return 0.5; },
            {},  0.0,
            1.0};
  }
  if (name == "h") {
    return {"h",   [](double r) { return std::min(1.0, 1.0 / r); },
            {},    {1.0},
            0.0,   1.0};
  }
  if (name == "p") {
    return {"p",   [](double) { return 1.0; }, angular_min_abs_x1,
            {1.0}, 0.0,
            1.0};
  }
  if (name == "l") {
    return {"l", [](double r) { return std::sin(r); }, {}, {}, -1.0, 1.0};
  }
  if (name == "phi2") {
    return {"phi2", [](double r) { return (r >= 0.5 && r < 1.5) ? 1.0 : 0.0; },
            {},     {0.5, 1.5},
            0.0,    1.0};
  }
  throw std::invalid_argument("no radial form for functional: " + name);
}

}  // namespace arpmc
