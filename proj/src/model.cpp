#include "arpmc/model.hpp"

#include <limits>

namespace arpmc {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();

double pair_distance(const Point2& a, const Point2& b) {
  return std::hypot(a.x - b.x, a.y - b.y);
}
}  // namespace

double log_density_square(const SquareState& state, const ModelParams& par) {
  double attract = 0.0;
  for (const auto& p : state) attract += p.radius();

  double repel = 0.0;
  for (std::size_t i = 0; i < state.size(); ++i) {
    for (std::size_t j = i + 1; j < state.size(); ++j) {
      const double d = pair_distance(state[i], state[j]);
      if (d == 0.0) return -kInf;
      repel += 1.0 / d;
    }
  }
  return -(par.c1 * attract + par.c2 * repel);
}

double move_energy_delta(const SquareState& state, std::size_t index,
                         const Point2& proposal, const ModelParams& par) {
  double delta = par.c1 * (proposal.radius() - state[index].radius());
  for (std::size_t j = 0; j < state.size(); ++j) {
    if (j == index) continue;
    const double dnew = pair_distance(proposal, state[j]);
    if (dnew == 0.0) return kInf;
    delta += par.c2 * (1.0 / dnew - 1.0 / pair_distance(state[index], state[j]));
  }
  return delta;
}

double h_radial(double r) {
  if (!(r > 0.0)) throw std::domain_error("h_radial: radius must be positive");
  return r + 1.0 / r;
}

double v_lyapunov(double r) { return std::exp(0.5 * h_radial(r)); }

double f_radial(double r) { return r * std::exp(h_radial(r)); }

double log_f_radial(double r) { return std::log(r) + h_radial(r); }

Annulus annulus_of(const PlanarPoint& x) {
  const double r = x.radius();
  if (!(r > 0.0)) throw std::domain_error("annulus_of: degenerate annulus at the origin");
  return Annulus{std::fabs(r - 1.0), r + 1.0};
}

double log_density_planar(const PlanarPoint& x) {
  const double r = x.radius();
  if (r == 0.0) return -kInf;
  return -(r + 1.0 / r);
}

}  // namespace arpmc
