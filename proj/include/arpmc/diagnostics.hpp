#pragma once

#include <stdexcept>
#include <vector>

namespace arpmc {

// Thrown when chains have no within-chain spread, which leaves the
// variance-ratio diagnostic undefined.
struct DegenerateChainsError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct BetweenWithin {
  double b = 0.0;   // between-chain variance (scaled by post-burn-in length)
  double w = 0.0;   // mean of within-chain sample variances
  int m = 0;        // chains
  long long n_used = 0;  // post-burn-in length
};

// series[j] is chain j's scalar summary; all chains must have equal length.
// The first `burn_in` entries of every chain are discarded.
BetweenWithin between_within(const std::vector<std::vector<double>>& series,
                             long long burn_in);

enum class DfMode {
  unit_factor,       // no degrees-of-freedom correction
  moment_estimated,  // correction from moment-matched t degrees of freedom
};

struct PsrfReport {
  double b = 0.0;
  double w = 0.0;
  double sigma2 = 0.0;  // pooled variance estimate
  double v_hat = 0.0;   // sigma2 plus sampling variability of the mean
  double factor = 1.0;  // df correction applied to the ratio
  double df = 0.0;      // estimated degrees of freedom (NaN in unit mode)
  double r = 0.0;       // factor * v_hat / w
  int m = 0;
  long long n_used = 0;
};

// Potential scale reduction factor, reported as the variance ratio
// (no square root). Needs at least two chains and two post-burn-in
// iterations per chain; throws DegenerateChainsError when w == 0.
PsrfReport psrf(const std::vector<std::vector<double>>& series,
                long long burn_in, DfMode mode = DfMode::unit_factor);

}  // namespace arpmc
