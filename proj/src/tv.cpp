#include "arpmc/tv.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "arpmc/stationary.hpp"

namespace arpmc {

namespace {

std::vector<long long> normalize_checkpoints(std::vector<long long> cps) {
  std::sort(cps.begin(), cps.end());
  cps.erase(std::unique(cps.begin(), cps.end()), cps.end());
  // Checkpoint 0 is allowed and reads the initial state.
  if (cps.empty() || cps.front() < 0)
    throw std::invalid_argument("checkpoints must be nonnegative");
  return cps;
}

struct CheckpointStats {
  std::vector<double> mean;
  std::vector<double> sd;  // across chains, unbiased
};

CheckpointStats column_stats(const std::vector<std::vector<double>>& vals) {
  const int m = static_cast<int>(vals.size());
  const std::size_t k = vals[0].size();
  CheckpointStats st;
  st.mean.assign(k, 0.0);
  st.sd.assign(k, 0.0);
  for (std::size_t c = 0; c < k; ++c) {
    double s = 0.0;
    for (int j = 0; j < m; ++j) s += vals[j][c];
    st.mean[c] = s / m;
    double ss = 0.0;
    for (int j = 0; j < m; ++j) {
      const double d = vals[j][c] - st.mean[c];
      ss += d * d;
    }
    st.sd[c] = m > 1 ? std::sqrt(ss / (m - 1)) : 0.0;
  }
  return st;
}

TvCurve assemble_curve(const std::string& name, double lo, double hi,
                       const std::vector<long long>& cps,
                       const std::vector<std::vector<double>>& vals,
                       const EnsembleSpec& spec, const Reference& ref) {
  const double range = hi - lo;
  if (!(range > 0.0)) throw std::invalid_argument("functional range is empty");
  const CheckpointStats st = column_stats(vals);
  TvCurve curve;
  curve.functional = name;
  curve.checkpoints = cps;
  curve.reference = ref;
  curve.seed = spec.seed;
  curve.chains = spec.chains;
  const double root_m = std::sqrt(static_cast<double>(spec.chains));
  const double ref_se = ref.se / range;
  for (std::size_t c = 0; c < cps.size(); ++c) {
    curve.estimates.push_back(std::abs(ref.value - st.mean[c]) / range);
    const double se_mean = st.sd[c] / root_m / range;
    curve.se.push_back(std::hypot(se_mean, ref_se));
  }
  return curve;
}

}  // namespace

std::vector<long long> default_checkpoints(long long n) {
  if (n < 1) throw std::invalid_argument("need at least one iteration");
  std::vector<long long> cps;
  for (long long k = 1; k <= std::min<long long>(50, n); ++k)
    cps.push_back(k);
  for (long long k = 60; k <= n; k += 10) cps.push_back(k);
  return cps;
}

Reference reference_square(const SquareFunctional& fun, const ModelParams& par,
                           const ReferenceSpec& spec, int threads) {
  if (spec.chains < 2) throw std::invalid_argument("need at least 2 chains");
  if (spec.iteration < 1)
    throw std::invalid_argument("reference iteration must be >= 1");
  std::vector<double> vals(spec.chains, 0.0);
  EnsembleSpec es;
  es.chains = spec.chains;
  es.iterations = static_cast<long>(spec.iteration);
  es.seed = spec.seed;
  es.threads = threads;
  const SquareInit init = SquareInit::fixed(center_square_state(3));
  run_ensemble_square(es, par, init, 3,
                      [&](int chain, long long t, const SquareState& s) {
                        if (t == spec.iteration) vals[chain] = fun.eval(s);
                      });
  double mean = 0.0;
  for (double v : vals) mean += v;
  mean /= spec.chains;
  double ss = 0.0;
  for (double v : vals) ss += (v - mean) * (v - mean);
  Reference ref;
  ref.value = mean;
  ref.se = std::sqrt(ss / (spec.chains - 1)) /
           std::sqrt(static_cast<double>(spec.chains));
  ref.method = "ensemble";
  ref.seed = spec.seed;
  ref.chains = spec.chains;
  ref.iteration = spec.iteration;
  return ref;
}

Reference reference_planar(const std::string& name, double tol) {
  const RadialFunctional fun = planar_radial_form(name);
  const PlanarExpectation e = stationary_expectation_planar(fun, tol);
  Reference ref;
  ref.value = e.value;
  ref.se = 0.0;
  ref.method = "quadrature";
  return ref;
}

TvCurve tv_curve_square(const SquareFunctional& fun, const ModelParams& par,
                        const SquareInit& init, const EnsembleSpec& spec,
                        const std::vector<long long>& checkpoints,
                        const Reference& ref) {
  const std::vector<long long> cps = normalize_checkpoints(checkpoints);
  if (spec.chains < 2) throw std::invalid_argument("need at least 2 chains");
  std::vector<std::vector<double>> vals(
      spec.chains, std::vector<double>(cps.size(), 0.0));
  std::vector<std::size_t> cursor(spec.chains, 0);
  EnsembleSpec es = spec;
  es.iterations = static_cast<long>(cps.back());
  run_ensemble_square(es, par, init, 3,
                      [&](int chain, long long t, const SquareState& s) {
                        std::size_t& c = cursor[chain];
                        if (c < cps.size() && t == cps[c]) {
                          vals[chain][c] = fun.eval(s);
                          ++c;
                        }
                      });
  return assemble_curve(fun.name, fun.lo, fun.hi, cps, vals, es, ref);
}

TvCurve tv_curve_planar(const PlanarFunctional& fun, const PlanarInit& init,
                        const EnsembleSpec& spec,
                        const std::vector<long long>& checkpoints,
                        const Reference& ref) {
  const std::vector<long long> cps = normalize_checkpoints(checkpoints);
  if (spec.chains < 2) throw std::invalid_argument("need at least 2 chains");
  std::vector<std::vector<double>> vals(
      spec.chains, std::vector<double>(cps.size(), 0.0));
  std::vector<std::size_t> cursor(spec.chains, 0);
  EnsembleSpec es = spec;
  es.iterations = static_cast<long>(cps.back());
  run_ensemble_planar(es, init,
                      [&](int chain, long long t, const PlanarPoint& p) {
                        std::size_t& c = cursor[chain];
                        if (c < cps.size() && t == cps[c]) {
                          vals[chain][c] = fun.eval(p);
                          ++c;
                        }
                      });
  return assemble_curve(fun.name, fun.lo, fun.hi, cps, vals, es, ref);
}

OccupationCurve occupation_from_series(
    const std::vector<std::vector<std::uint8_t>>& indicators, double target,
    const std::vector<long long>& checkpoints) {
  const std::vector<long long> cps = normalize_checkpoints(checkpoints);
  if (cps.front() < 1)
    throw std::invalid_argument("occupation checkpoints must be >= 1");
  const int m = static_cast<int>(indicators.size());
  if (m < 2) throw std::invalid_argument("need at least 2 chains");
  const long long n = static_cast<long long>(indicators[0].size());
  for (const auto& row : indicators)
    if (static_cast<long long>(row.size()) != n)
      throw std::invalid_argument("indicator series must have equal length");
  if (cps.back() > n)
    throw std::invalid_argument("checkpoint beyond recorded iterations");

  OccupationCurve out;
  out.checkpoints = cps;
  out.target = target;
  std::vector<long long> hits(m, 0);
  double tv_sum = 0.0;
  std::size_t next = 0;
  for (long long k = 1; k <= n && next < cps.size(); ++k) {
    long long total = 0;
    for (int j = 0; j < m; ++j) {
      hits[j] += indicators[j][k - 1];
      total += indicators[j][k - 1];
    }
    tv_sum += std::abs(static_cast<double>(total) / m - target);
    if (k == cps[next]) {
      const double nc = static_cast<double>(k);
      double mean = 0.0;
      for (int j = 0; j < m; ++j) mean += static_cast<double>(hits[j]) / nc;
      mean /= m;
      double ss = 0.0;
      for (int j = 0; j < m; ++j) {
        const double d = static_cast<double>(hits[j]) / nc - mean;
        ss += d * d;
      }
      out.f_bar.push_back(mean);
      out.estimates.push_back(std::abs(mean - target));
      out.se.push_back(std::sqrt(ss / (m - 1) / m));
      out.tv_mean.push_back(tv_sum / nc);
      ++next;
    }
  }
  return out;
}

OccupationCurve occupation_planar(const EnsembleSpec& spec,
                                  const PlanarInit& init, double set_lo,
                                  double set_hi,
                                  const std::vector<long long>& checkpoints) {
  const std::vector<long long> cps = normalize_checkpoints(checkpoints);
  if (!(set_lo < set_hi))
    throw std::invalid_argument("occupation set is empty");
  std::vector<std::vector<std::uint8_t>> ind(
      spec.chains, std::vector<std::uint8_t>(cps.back(), 0));
  EnsembleSpec es = spec;
  es.iterations = static_cast<long>(cps.back());
  run_ensemble_planar(es, init,
                      [&](int chain, long long t, const PlanarPoint& p) {
                        if (t >= 1) {
                          const double r = p.radius();
                          ind[chain][t - 1] = (r >= set_lo && r < set_hi);
                        }
                      });
  const double target = planar_set_mass(set_lo, set_hi);
  return occupation_from_series(ind, target, cps);
}

}  // namespace arpmc
