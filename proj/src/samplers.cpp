#include "arpmc/samplers.hpp"

#include <cmath>
#include <stdexcept>
#include <thread>

namespace arpmc {

std::vector<std::uint8_t> metropolis_sweep_square(SquareState& state,
                                                  const ModelParams& par,
                                                  RngStream& rng) {
  std::vector<std::uint8_t> accepted(state.size(), 0);
  for (std::size_t i = 0; i < state.size(); ++i) {
    const Point2 proposal{rng.next_double(), rng.next_double()};
    const double delta = move_energy_delta(state, i, proposal, par);
    const double u = rng.next_double();
    // delta <= 0 means alpha = 1; u < 1 always holds for u in [0,1).
    if (delta <= 0.0 || u < std::exp(-delta)) {
      state[i] = proposal;
      accepted[i] = 1;
    }
  }
  return accepted;
}

PlanarPoint propose_planar(const PlanarPoint& x, RngStream& rng) {
  const Annulus b = annulus_of(x);  // rejects radius 0
  const double u = rng.next_double();
  const double r = std::sqrt(b.inner * b.inner +
                             u * (b.outer * b.outer - b.inner * b.inner));
  const double theta = 2.0 * kPi * rng.next_double();
  return {r * std::cos(theta), r * std::sin(theta)};
}

double accept_prob_planar(double r_x, double r_y) {
  if (!(r_x > 0.0) || !(r_y > 0.0))
    throw std::domain_error("accept_prob_planar: radii must be positive");
  const double d = log_f_radial(r_x) - log_f_radial(r_y);
  return d >= 0.0 ? 1.0 : std::exp(d);
}

PlanarStep step_planar(const PlanarPoint& x, RngStream& rng) {
  const PlanarPoint y = propose_planar(x, rng);
  const double alpha = accept_prob_planar(x.radius(), y.radius());
  const double u = rng.next_double();
  if (u < alpha) return {y, true, alpha};
  return {x, false, alpha};
}

SquareState center_square_state(int particles) {
  return SquareState(static_cast<std::size_t>(particles), Point2{0.5, 0.5});
}

SquareState draw_square_init(const SquareInit& init, int particles, RngStream& rng) {
  if (!init.random) return init.state;
  SquareState s(static_cast<std::size_t>(particles));
  for (auto& p : s) {
    p.x = rng.next_double();
    p.y = rng.next_double();
  }
  return s;
}

PlanarPoint draw_planar_init(const PlanarInit& init, RngStream& rng) {
  if (!init.random) return init.point;
  const double hw = init.half_width;
  return {rng.uniform(-hw, hw), rng.uniform(-hw, hw)};
}

void run_chain_square(SquareState state, const ModelParams& par, long iterations,
                      RngStream& rng, const SquareObserver& observe) {
  observe(0, state);
  for (long t = 1; t <= iterations; ++t) {
    metropolis_sweep_square(state, par, rng);
    observe(t, state);
  }
}

void run_chain_planar(PlanarPoint state, long iterations, RngStream& rng,
                      const PlanarObserver& observe) {
  observe(0, state);
  for (long t = 1; t <= iterations; ++t) {
    state = step_planar(state, rng).state;
    observe(t, state);
  }
}

SquareChainTrace trace_chain_square(const SquareState& init, const ModelParams& par,
                                    long iterations, RngStream& rng) {
  SquareChainTrace trace;
  trace.states.reserve(static_cast<std::size_t>(iterations) + 1);
  trace.accepts.reserve(static_cast<std::size_t>(iterations));
  trace.accept_counts.assign(init.size(), 0);
  SquareState state = init;
  trace.states.push_back(state);
  for (long t = 1; t <= iterations; ++t) {
    auto acc = metropolis_sweep_square(state, par, rng);
    for (std::size_t i = 0; i < acc.size(); ++i) trace.accept_counts[i] += acc[i];
    trace.states.push_back(state);
    trace.accepts.push_back(std::move(acc));
  }
  return trace;
}

PlanarChainTrace trace_chain_planar(const PlanarPoint& init, long iterations,
                                    RngStream& rng) {
  PlanarChainTrace trace;
  trace.states.reserve(static_cast<std::size_t>(iterations) + 1);
  trace.accepts.reserve(static_cast<std::size_t>(iterations));
  PlanarPoint state = init;
  trace.states.push_back(state);
  for (long t = 1; t <= iterations; ++t) {
    const PlanarStep s = step_planar(state, rng);
    state = s.state;
    trace.states.push_back(state);
    trace.accepts.push_back(s.accepted ? 1 : 0);
    trace.accept_count += s.accepted;
  }
  return trace;
}

void parallel_chains(int chains, int threads, const std::function<void(int)>& body) {
  if (threads < 1) threads = 1;
  if (threads == 1 || chains <= 1) {
    for (int j = 0; j < chains; ++j) body(j);
    return;
  }
  if (threads > chains) threads = chains;
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(threads));
  for (int w = 0; w < threads; ++w) {
    pool.emplace_back([=, &body] {
      for (int j = w; j < chains; j += threads) body(j);
    });
  }
  for (auto& t : pool) t.join();
}

void run_ensemble_square(const EnsembleSpec& spec, const ModelParams& par,
                         const SquareInit& init, int particles,
                         const std::function<void(int, long, const SquareState&)>& observe) {
  parallel_chains(spec.chains, spec.threads, [&](int j) {
    RngStream rng(spec.seed, static_cast<std::uint64_t>(j));
    SquareState s0 = draw_square_init(init, particles, rng);
    run_chain_square(std::move(s0), par, spec.iterations, rng,
                     [&](long t, const SquareState& s) { observe(j, t, s); });
  });
}

void run_ensemble_planar(const EnsembleSpec& spec, const PlanarInit& init,
                         const std::function<void(int, long, const PlanarPoint&)>& observe) {
  parallel_chains(spec.chains, spec.threads, [&](int j) {
    RngStream rng(spec.seed, static_cast<std::uint64_t>(j));
    const PlanarPoint x0 = draw_planar_init(init, rng);
    run_chain_planar(x0, spec.iterations, rng,
                     [&](long t, const PlanarPoint& p) { observe(j, t, p); });
  });
}

}  // namespace arpmc
