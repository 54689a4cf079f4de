#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "arpmc/functionals.hpp"
#include "arpmc/samplers.hpp"

namespace arpmc {

// Checkpoints 1..50, then every 10th iteration up to n.
std::vector<long long> default_checkpoints(long long n);

struct Reference {
  double value = 0.0;
  double se = 0.0;  // zero for quadrature references
  std::string method;
  std::uint64_t seed = 0;
  int chains = 0;
  long long iteration = 0;
};

struct ReferenceSpec {
  int chains = 5000;
  long long iteration = 500;
  std::uint64_t seed = 0;
};

// Long-run ensemble mean of the functional, started from the center state.
// The seed must be independent of any seed used for the curve itself.
Reference reference_square(const SquareFunctional& fun, const ModelParams& par,
                           const ReferenceSpec& spec, int threads = 1);

// Stationary expectation by quadrature; exact up to integration tolerance.
Reference reference_planar(const std::string& name,
                           double tol = kTolExpectation);

// One TV upper-bound curve: at each checkpoint, |reference - ensemble mean|
// scaled by the functional's range. `se` combines the ensemble spread with
// the reference uncertainty in quadrature.
struct TvCurve {
  std::string functional;
  std::vector<long long> checkpoints;
  std::vector<double> estimates;
  std::vector<double> se;
  Reference reference;
  std::uint64_t seed = 0;
  int chains = 0;
};

// Memory stays O(chains * checkpoints): states are folded into the stored
// functional values as the ensemble runs.
TvCurve tv_curve_square(const SquareFunctional& fun, const ModelParams& par,
                        const SquareInit& init, const EnsembleSpec& spec,
                        const std::vector<long long>& checkpoints,
                        const Reference& ref);

TvCurve tv_curve_planar(const PlanarFunctional& fun, const PlanarInit& init,
                        const EnsembleSpec& spec,
                        const std::vector<long long>& checkpoints,
                        const Reference& ref);

// Occupation-measure convergence for an indicator set. f_bar averages the
// per-chain occupation fractions; tv_mean averages the per-iteration
// cross-chain TV estimates, which dominates |f_bar - target| exactly.
struct OccupationCurve {
  std::vector<long long> checkpoints;
  std::vector<double> f_bar;
  std::vector<double> estimates;  // |f_bar - target|
  std::vector<double> se;         // spread of occupation fractions / sqrt(m)
  std::vector<double> tv_mean;
  double target = 0.0;
};

OccupationCurve occupation_from_series(
    const std::vector<std::vector<std::uint8_t>>& indicators, double target,
    const std::vector<long long>& checkpoints);

// Radial shell {set_lo <= r < set_hi} under the planar chain; the target
// mass comes from stationary quadrature.
OccupationCurve occupation_planar(const EnsembleSpec& spec,
                                  const PlanarInit& init, double set_lo,
                                  double set_hi,
                                  const std::vector<long long>& checkpoints);

}  // namespace arpmc
