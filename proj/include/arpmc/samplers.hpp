#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "arpmc/model.hpp"
#include "arpmc/rng.hpp"

namespace arpmc {

// Draw-count contract: every proposal consumes exactly three uniforms
// (two for the candidate, one for the accept test), whatever branch is
// taken. Chains therefore stay aligned with their streams and a trace is
// a pure function of (seed, stream_id, init, iterations).

// One systematic sweep: particles proposed in index order, each redrawn
// uniformly on [0,1]^2, accepted with min{1, pi(y)/pi(x)} under strict
// u < alpha. Returns the per-particle accept flags and mutates `state`.
std::vector<std::uint8_t> metropolis_sweep_square(SquareState& state,
                                                  const ModelParams& par,
                                                  RngStream& rng);

// Candidate uniform on the annulus of x: radius by inverse CDF
// r = sqrt(inner^2 + u (outer^2 - inner^2)), angle uniform on [0, 2 pi).
PlanarPoint propose_planar(const PlanarPoint& x, RngStream& rng);

// min{1, f(r_x)/f(r_y)} evaluated through log f, so extreme radii cannot
// overflow. Both radii must be positive.
double accept_prob_planar(double r_x, double r_y);

struct PlanarStep {
  PlanarPoint state;
  bool accepted = false;
  double alpha = 0.0;
};

PlanarStep step_planar(const PlanarPoint& x, RngStream& rng);

// Initial-state policies: a fixed state, or the uniform box the
// overdispersed-start experiments use ([0,1]^2 per particle for the square
// model, [-half_width, half_width]^2 for the planar one). Random inits are
// drawn from the chain's own stream before any sweep draws.
struct SquareInit {
  bool random = false;
  SquareState state;  // used when !random
  static SquareInit fixed(SquareState s) { return {false, std::move(s)}; }
  static SquareInit uniform() { return {true, {}}; }
};

struct PlanarInit {
  bool random = false;
  PlanarPoint point{1.0, 0.0};  // used when !random
  double half_width = 10.0;     // used when random
  static PlanarInit fixed(PlanarPoint p) { return {false, p, 10.0}; }
  static PlanarInit uniform(double hw = 10.0) { return {true, {}, hw}; }
};

SquareState center_square_state(int particles);  // every particle at (0.5, 0.5)

SquareState draw_square_init(const SquareInit& init, int particles, RngStream& rng);
PlanarPoint draw_planar_init(const PlanarInit& init, RngStream& rng);

// Observers receive (iteration, state) with iteration 0 = initial state,
// then 1..n after each full sweep / step.
using SquareObserver = std::function<void(long, const SquareState&)>;
using PlanarObserver = std::function<void(long, const PlanarPoint&)>;

struct SquareChainTrace {
  std::vector<SquareState> states;                 // length iterations + 1
  std::vector<std::vector<std::uint8_t>> accepts;  // length iterations
  std::vector<long> accept_counts;                 // per particle
};

struct PlanarChainTrace {
  std::vector<PlanarPoint> states;   // length iterations + 1
  std::vector<std::uint8_t> accepts; // length iterations
  long accept_count = 0;
};

void run_chain_square(SquareState state, const ModelParams& par, long iterations,
                      RngStream& rng, const SquareObserver& observe);
void run_chain_planar(PlanarPoint state, long iterations, RngStream& rng,
                      const PlanarObserver& observe);

SquareChainTrace trace_chain_square(const SquareState& init, const ModelParams& par,
                                    long iterations, RngStream& rng);
PlanarChainTrace trace_chain_planar(const PlanarPoint& init, long iterations,
                                    RngStream& rng);

struct EnsembleSpec {
  int chains = 1;
  long iterations = 0;
  std::uint64_t seed = 0;
  int threads = 1;
};

// Runs body(chain_index) for every chain on a small worker pool. The body
// must confine writes to chain-indexed slots; results are then independent
// of the thread count by construction.
void parallel_chains(int chains, int threads, const std::function<void(int)>& body);

// Streams every chain of an ensemble through an observer. Chain j uses
// RngStream(spec.seed, j); random inits consume that stream first.
void run_ensemble_square(const EnsembleSpec& spec, const ModelParams& par,
                         const SquareInit& init, int particles,
                         const std::function<void(int, long, const SquareState&)>& observe);
void run_ensemble_planar(const EnsembleSpec& spec, const PlanarInit& init,
                         const std::function<void(int, long, const PlanarPoint&)>& observe);

}  // namespace arpmc
