#include "arpmc/diagnostics.hpp"

#include <cmath>
#include <limits>

namespace arpmc {

namespace {

struct ChainMoments {
  std::vector<double> mean;  // per-chain post-burn-in mean
  std::vector<double> var;   // per-chain unbiased sample variance
  double grand = 0.0;
  int m = 0;
  long long n = 0;
};

ChainMoments chain_moments(const std::vector<std::vector<double>>& series,
                           long long burn_in) {
  const int m = static_cast<int>(series.size());
  if (m < 2) throw std::invalid_argument("need at least 2 chains");
  if (burn_in < 0) throw std::invalid_argument("burn_in must be >= 0");
  const long long len = static_cast<long long>(series[0].size());
  for (const auto& s : series)
    if (static_cast<long long>(s.size()) != len)
      throw std::invalid_argument("chains must have equal length");
  const long long n = len - burn_in;
  if (n < 2)
    throw std::invalid_argument("need at least 2 iterations after burn-in");

  ChainMoments cm;
  cm.m = m;
  cm.n = n;
  cm.mean.resize(m);
  cm.var.resize(m);
  for (int j = 0; j < m; ++j) {
    double s = 0.0;
    for (long long t = burn_in; t < len; ++t) s += series[j][t];
    cm.mean[j] = s / static_cast<double>(n);
    double ss = 0.0;
    for (long long t = burn_in; t < len; ++t) {
      const double d = series[j][t] - cm.mean[j];
      ss += d * d;
    }
    cm.var[j] = ss / static_cast<double>(n - 1);
    cm.grand += cm.mean[j];
  }
  cm.grand /= m;
  return cm;
}

// Unbiased sample covariance across chains.
double cov_across(const std::vector<double>& a, const std::vector<double>& b) {
  const int m = static_cast<int>(a.size());
  double ma = 0.0, mb = 0.0;
  for (int j = 0; j < m; ++j) {
    ma += a[j];
    mb += b[j];
  }
  ma /= m;
  mb /= m;
  double s = 0.0;
  for (int j = 0; j < m; ++j) s += (a[j] - ma) * (b[j] - mb);
  return s / (m - 1);
}

}  // namespace

BetweenWithin between_within(const std::vector<std::vector<double>>& series,
                             long long burn_in) {
  const ChainMoments cm = chain_moments(series, burn_in);
  BetweenWithin out;
  out.m = cm.m;
  out.n_used = cm.n;
  double sb = 0.0;
  for (int j = 0; j < cm.m; ++j) {
    const double d = cm.mean[j] - cm.grand;
    sb += d * d;
  }
  out.b = static_cast<double>(cm.n) * sb / (cm.m - 1);
  double sw = 0.0;
  for (int j = 0; j < cm.m; ++j) sw += cm.var[j];
  out.w = sw / cm.m;
  return out;
}

PsrfReport psrf(const std::vector<std::vector<double>>& series,
                long long burn_in, DfMode mode) {
  const ChainMoments cm = chain_moments(series, burn_in);
  PsrfReport rep;
  rep.m = cm.m;
  rep.n_used = cm.n;

  double sb = 0.0;
  for (int j = 0; j < cm.m; ++j) {
    const double d = cm.mean[j] - cm.grand;
    sb += d * d;
  }
  rep.b = static_cast<double>(cm.n) * sb / (cm.m - 1);
  double sw = 0.0;
  for (int j = 0; j < cm.m; ++j) sw += cm.var[j];
  rep.w = sw / cm.m;
  if (rep.w == 0.0)
    throw DegenerateChainsError("within-chain variance is zero");

  const double n = static_cast<double>(cm.n);
  const double m = static_cast<double>(cm.m);
  rep.sigma2 = (n - 1.0) / n * rep.w + rep.b / n;
  rep.v_hat = rep.sigma2 + rep.b / (m * n);

  if (mode == DfMode::unit_factor) {
    rep.factor = 1.0;
    rep.df = std::numeric_limits<double>::quiet_NaN();
  } else {
    // Moment-matched degrees of freedom for v_hat, from the spread of the
    // per-chain means and variances across chains.
    std::vector<double> mean_sq(cm.m);
    for (int j = 0; j < cm.m; ++j) mean_sq[j] = cm.mean[j] * cm.mean[j];
    const double var_w = cov_across(cm.var, cm.var) / m;
    const double var_b = 2.0 * rep.b * rep.b / (m - 1.0);
    const double cov_wb =
        n / m *
        (cov_across(cm.var, mean_sq) -
         2.0 * cm.grand * cov_across(cm.var, cm.mean));
    const double var_v =
        ((n - 1.0) * (n - 1.0) * var_w + (1.0 + 1.0 / m) * (1.0 + 1.0 / m) * var_b +
         2.0 * (n - 1.0) * (1.0 + 1.0 / m) * cov_wb) /
        (n * n);
    rep.df = var_v > 0.0 ? 2.0 * rep.v_hat * rep.v_hat / var_v
                         : std::numeric_limits<double>::infinity();
    rep.factor = std::isinf(rep.df) ? 1.0 : (rep.df + 3.0) / (rep.df + 1.0);
  }
  rep.r = rep.factor * rep.v_hat / rep.w;
  return rep;
}

}  // namespace arpmc
