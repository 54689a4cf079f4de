#include "arpmc/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "arpmc/model.hpp"
#include "arpmc/quadrature.hpp"
#include "arpmc/stationary.hpp"

namespace arpmc {

namespace {

// Overlap density floor coefficients behind the planar minorization.
constexpr double kInnerCoef = 0.13;
constexpr double kOuterCoef = 0.1;
constexpr double kBandLo = 2.0;
constexpr double kBandHi = 2.25;

// Tail constants for the off-set drift ratio above the audit range. The
// three terms collect the radial moments of the accepted and rejected
// parts of one annulus move; the resulting bound decreases in r because
// the 1/r coefficients sum to a negative drift.
const double kTailM1 = 1.0 + std::exp(-1.0) - 2.0 * std::exp(-0.5);
const double kTailM2 = 24.0 * (1.0 - std::exp(-11.0 / 24.0)) / 11.0;
const double kTailM3 = (840.0 * std::exp(-11.0 / 24.0) - 576.0) / 121.0;

void require_finite(double x, const char* what) {
  if (!std::isfinite(x)) throw std::domain_error(what);
}

}  // namespace

double square_uniform_epsilon(double c1, double c2, int particles) {
  if (particles != 3)
    throw std::domain_error("uniform minorization constant needs 3 particles");
  require_finite(c1, "c1 must be finite");
  require_finite(c2, "c2 must be finite");
  if (c1 < 0.0 || c2 < 0.0)
    throw std::domain_error("interaction constants must be nonnegative");
  return 0.48 * std::exp(-8.49 * c1 - 19.76 * c2);
}

double tv_bound_uniform(double eps, long long n0, long long n) {
  if (!(eps > 0.0) || eps > 1.0)
    throw std::domain_error("eps must lie in (0, 1]");
  if (n0 < 1) throw std::domain_error("n0 must be >= 1");
  if (n < 0) throw std::domain_error("n must be >= 0");
  const long long k = n / n0;
  return std::exp(static_cast<double>(k) * std::log1p(-eps));
}

long long iterations_for_tolerance(double eps, long long n0, double delta) {
  if (!(delta > 0.0) || delta >= 1.0)
    throw std::domain_error("delta must lie in (0, 1)");
  if (!(eps > 0.0) || eps > 1.0)
    throw std::domain_error("eps must lie in (0, 1]");
  if (n0 < 1) throw std::domain_error("n0 must be >= 1");
  if (eps == 1.0) return n0;
  const double k_est = std::log(delta) / std::log1p(-eps);
  if (k_est > 9.0e15) throw std::overflow_error("iteration count overflows");
  long long k = std::max(1LL, static_cast<long long>(k_est) - 2);
  while (tv_bound_uniform(eps, 1, k) > delta) ++k;
  while (k > 1 && tv_bound_uniform(eps, 1, k - 1) <= delta) --k;
  return k * n0;
}

double floor_two_significant(double x) {
  if (!(x > 0.0) || !std::isfinite(x))
    throw std::domain_error("need a positive finite value to quote");
  const double e = std::floor(std::log10(x));
  const double scale = std::pow(10.0, e - 1.0);
  // The nudge keeps exact two-figure values (0.028, 0.48, ...) stable
  // against the division rounding down.
  return std::floor(x / scale + 1e-9) * scale;
}

PlanarCertificate planar_certificate() {
  PlanarCertificate c;
  c.minorization.eps = 3.5e-5;
  c.minorization.n0 = 2;
  c.minorization.small_set_lo = 0.25;
  c.minorization.small_set_hi = 4.0;
  c.drift.lambda = 0.995;
  c.drift.a_bound = std::exp(2.7);
  c.drift.b = std::exp(2.7) - c.drift.lambda;
  c.drift.d = std::exp(17.0 / 8.0);
  c.v_at_unit_start = std::exp(1.0);
  return c;
}

OverlapConstants planar_overlap_constants() {
  OverlapConstants m;
  const double fmin = f_radial(f_radial_argmin());
  m.m1 = fmin / f_radial(1.25);
  m.m2 = f_radial(2.0) / f_radial(3.25);
  m.m1_prime = f_radial(1.0) / f_radial(2.25);
  m.m2_prime = std::min(f_radial(3.0) / f_radial(2.25), 1.0);
  m.inner_coef = m.m1 * m.m1_prime;
  m.outer_coef = 0.5 * m.m2 * m.m2_prime;
  m.ok = m.inner_coef >= kInnerCoef && m.outer_coef >= kOuterCoef;
  return m;
}

MinorizationAudit verify_minorization_planar(double tol) {
  MinorizationAudit a;
  a.certified_eps = planar_certificate().minorization.eps;
  a.crossover = 0.4925 / 0.23;

  // Overlap density on the transfer band, as a function of radius; the
  // plane integral picks up 2 pi r, and the density itself carries the
  // annulus-area factor 1/(16 pi).
  auto band_min = [](double r) {
    return std::min(kInnerCoef * (kBandHi - r), kOuterCoef * (r - kBandLo));
  };
  auto integrand = [&band_min](double r) { return band_min(r) * r / 8.0; };
  QuadratureResult q =
      quad_1d_split(integrand, kBandLo, kBandHi, {a.crossover}, tol);
  quad_or_throw(q, "minorization mass");
  a.mass = q.value;
  a.evaluations = q.evaluations;

  // Same integral from antiderivatives of the two linear pieces.
  auto outer_part = [](double r) {
    return kOuterCoef * (r * r * r / 3.0 - r * r);
  };
  auto inner_part = [](double r) {
    return kInnerCoef * (kBandHi * r * r / 2.0 - r * r * r / 3.0);
  };
  a.closed_form = (outer_part(a.crossover) - outer_part(kBandLo) +
                   inner_part(kBandHi) - inner_part(a.crossover)) /
                  8.0;

  a.ok = std::abs(a.mass - a.closed_form) <= 1e-12 &&
         a.mass >= a.certified_eps && a.closed_form >= a.certified_eps;
  return a;
}

double drift_tail_ratio_bound(double r) {
  if (!(r > 4.0))
    throw std::domain_error("tail ratio bound only holds above the small set");
  return 0.5 * (1.0 + 0.5 / r + kTailM1 + kTailM2 + kTailM3 / r);
}

DriftAudit verify_drift_planar(const DriftGridSpec& spec) {
  if (spec.low_points < 2 || spec.high_points < 2 || spec.on_points < 2)
    throw std::domain_error("drift grids need at least 2 points each");
  const PlanarCertificate cert = planar_certificate();
  const double set_lo = cert.minorization.small_set_lo;
  const double set_hi = cert.minorization.small_set_hi;
  if (!(spec.low_min > 0.0) || !(spec.low_min < set_lo) ||
      !(spec.high_max > set_hi))
    throw std::domain_error("drift grid range does not bracket the small set");

  DriftAudit a;
  a.low_points = spec.low_points;
  a.high_points = spec.high_points;
  a.on_points = spec.on_points;
  a.lambda = cert.drift.lambda;
  a.pv_cap = cert.drift.a_bound;
  a.low_cap = std::exp(-13.0 / 12.0);
  a.tail_bound = drift_tail_ratio_bound(spec.high_max);

  auto scan_ratio = [&spec](double lo, double hi, int n, double& max_ratio,
                            double& modulus) {
    max_ratio = 0.0;
    modulus = 0.0;
    double prev = 0.0;
    for (int i = 0; i < n; ++i) {
      // interior points of the open interval (lo, hi)
      const double r = lo + (hi - lo) * (i + 1) / static_cast<double>(n + 1);
      const double ratio = pv_quadrature(r, spec.tol) / v_lyapunov(r);
      max_ratio = std::max(max_ratio, ratio);
      if (i > 0) modulus = std::max(modulus, std::abs(ratio - prev));
      prev = ratio;
    }
  };
  scan_ratio(spec.low_min, set_lo, spec.low_points, a.max_ratio_low,
             a.modulus_low);
  scan_ratio(set_hi, spec.high_max, spec.high_points, a.max_ratio_high,
             a.modulus_high);

  double prev = 0.0;
  for (int i = 0; i < spec.on_points; ++i) {
    const double r =
        set_lo + (set_hi - set_lo) * i / static_cast<double>(spec.on_points - 1);
    const double pv = pv_quadrature(r, spec.tol);
    a.max_pv_on = std::max(a.max_pv_on, pv);
    if (i > 0) a.modulus_on = std::max(a.modulus_on, std::abs(pv - prev));
    prev = pv;
  }

  a.ok_low = a.max_ratio_low <= a.lambda;
  a.ok_high = a.max_ratio_high <= a.lambda;
  a.ok_on = a.max_pv_on <= a.pv_cap;
  // The closed-form tail bound decreases in r (its 1/r coefficients sum
  // below zero), so checking it at high_max covers every larger radius.
  a.ok_tail = a.tail_bound <= a.lambda;
  return a;
}

double stationary_v_bound(double lambda, double b) {
  if (!(lambda > 0.0) || !(lambda < 1.0))
    throw std::domain_error("lambda must lie in (0, 1)");
  if (!(b > 0.0)) throw std::domain_error("b must be positive");
  return b / (1.0 - lambda);
}

ShiftCouplingInputs planar_shift_inputs() {
  const PlanarCertificate cert = planar_certificate();
  ShiftCouplingInputs in;
  in.eps = cert.minorization.eps;
  in.n0 = cert.minorization.n0;
  in.lambda = cert.drift.lambda;
  in.b = cert.drift.b;
  in.a_bound = cert.drift.a_bound;
  in.e_nu_v = cert.v_at_unit_start;
  return in;
}

namespace {

void validate_inputs(const ShiftCouplingInputs& in) {
  if (!(in.eps > 0.0) || in.eps > 1.0)
    throw std::domain_error("eps must lie in (0, 1]");
  if (in.n0 < 1) throw std::domain_error("n0 must be >= 1");
  if (!(in.lambda > 0.0) || !(in.lambda < 1.0))
    throw std::domain_error("lambda must lie in (0, 1)");
  if (!(in.b > 0.0)) throw std::domain_error("b must be positive");
  if (!(in.a_bound >= 1.0)) throw std::domain_error("A must be >= 1");
  if (!(in.e_nu_v >= 1.0)) throw std::domain_error("E_nu V must be >= 1");
}

}  // namespace

ShiftCouplingResult shift_coupling_bound(const ShiftCouplingInputs& in,
                                         double r) {
  validate_inputs(in);
  if (!(r > 0.0)) throw std::domain_error("r must be positive");

  ShiftCouplingResult out;
  out.r = r;
  const double log_q = r * std::log1p(-in.eps);  // log (1-eps)^r
  out.term_minorization = 2.0 * std::exp(log_q) / (-std::expm1(log_q));

  const double log_lambda = std::log(in.lambda);
  const double log_a = std::log(in.a_bound);
  const double n0 = static_cast<double>(in.n0);
  const double log_adm = (1.0 - n0 * r) * log_lambda + r * log_a;
  out.admissibility = std::exp(log_adm);
  if (!(out.admissibility < 1.0))
    throw std::domain_error("inadmissible r: lambda^(1-n0 r) A^r >= 1");

  out.v_start_term = in.e_nu_v + stationary_v_bound(in.lambda, in.b);
  const double log_num = (1.0 - n0 - n0 * r) * log_lambda + r * log_a;
  out.term_drift =
      std::exp(log_num) / (-std::expm1(log_adm)) * out.v_start_term;
  out.coefficient = out.term_minorization + out.term_drift;
  return out;
}

double admissible_r_sup(const ShiftCouplingInputs& in) {
  validate_inputs(in);
  const double log_lambda = std::log(in.lambda);
  const double log_a = std::log(in.a_bound);
  return -log_lambda / (log_a - static_cast<double>(in.n0) * log_lambda);
}

OptimizedR optimize_r(const ShiftCouplingInputs& in) {
  const double r_sup = admissible_r_sup(in);
  const double lo = 1e-5;
  const double hi = std::min(0.5, r_sup * (1.0 - 1e-9));
  if (!(hi > lo))
    throw std::domain_error("admissible range too small to optimize");

  auto coef = [&in](double r) { return shift_coupling_bound(in, r).coefficient; };

  const int grid_n = 200;
  const double log_lo = std::log(lo);
  const double step = (std::log(hi) - log_lo) / (grid_n - 1);
  int best = 0;
  double best_val = coef(lo);
  std::vector<double> grid(grid_n);
  grid[0] = lo;
  for (int i = 1; i < grid_n; ++i) {
    grid[i] = std::exp(log_lo + step * i);
    const double v = coef(grid[i]);
    if (v < best_val) {
      best_val = v;
      best = i;
    }
  }

  double a = grid[std::max(0, best - 1)];
  double b = grid[std::min(grid_n - 1, best + 1)];
  const double inv_phi = 0.5 * (std::sqrt(5.0) - 1.0);
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = coef(c);
  double fd = coef(d);
  for (int i = 0; i < 120 && b - a > 1e-16 * b; ++i) {
    if (fc <= fd) {  // ties move toward smaller r
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = coef(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = coef(d);
    }
  }

  OptimizedR out;
  out.r = fc <= fd ? c : d;
  out.coefficient = std::min(fc, fd);
  if (best_val < out.coefficient) {
    out.r = grid[best];
    out.coefficient = best_val;
  }
  return out;
}

}  // namespace arpmc
