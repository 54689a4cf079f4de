#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace arpmc {

inline constexpr double kPi = 3.14159265358979323846;

struct Point2 {
  double x = 0.0;
  double y = 0.0;

  double radius() const { return std::hypot(x, y); }
};

// A planar chain state is a single point; its radius must stay positive.
// Radius 0 is representable as a value but rejected by annulus_of and the
// radial functions below, and the samplers never produce it.
using PlanarPoint = Point2;

using SquareState = std::vector<Point2>;

struct ModelParams {
  double c1 = 0.1;  // attraction toward the origin
  double c2 = 0.1;  // pairwise repulsion strength
};

// log pi(x) = -(c1 * sum_i |x_i| + c2 * sum_{i<j} 1/|x_i - x_j|).
// Coincident particles give -inf, so a proposal onto a coincidence is
// rejected with probability 1 rather than raising an error.
double log_density_square(const SquareState& state, const ModelParams& par);

// Energy change when particle `index` moves to `proposal`, i.e.
// -(log pi(new) - log pi(old)) restricted to the terms that involve it.
// +inf when the proposal coincides with another particle.
double move_energy_delta(const SquareState& state, std::size_t index,
                         const Point2& proposal, const ModelParams& par);

// H(r) = r + 1/r, the planar radial potential. Minimum 2 at r = 1.
double h_radial(double r);

// Lyapunov function V = e^{H/2} >= e.
double v_lyapunov(double r);

// f(r) = r e^{H(r)}; the planar acceptance ratio is f(r_x)/f(r_y).
// Unimodal with minimum at (sqrt(5)-1)/2.
double f_radial(double r);

// log f(r) = log r + H(r). All acceptance work happens on this scale.
double log_f_radial(double r);

// Radius where f attains its minimum.
inline double f_radial_argmin() { return (std::sqrt(5.0) - 1.0) / 2.0; }

// Proposal support for the planar kernel: the origin-centred open annulus
// {z : |r-1| < |z| < r+1}. Its area is exactly pi(outer^2 - inner^2) = 4 pi r.
struct Annulus {
  double inner = 0.0;
  double outer = 0.0;

  double area() const { return kPi * (outer * outer - inner * inner); }
  bool contains(const PlanarPoint& p) const {
    const double r = p.radius();
    return inner < r && r < outer;
  }
};

Annulus annulus_of(const PlanarPoint& x);

inline bool annulus_contains(const Annulus& a, const PlanarPoint& p) {
  return a.contains(p);
}

// log pi for the planar model, -H(radius); radius 0 maps to -inf.
double log_density_planar(const PlanarPoint& x);

}  // namespace arpmc
