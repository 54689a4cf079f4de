#include "arpmc/stationary.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "arpmc/model.hpp"

namespace arpmc {

double stationary_weight(double r) {
  if (r <= 0.0) return 0.0;
  return r * std::exp(-h_radial(r));
}

PlanarExpectation stationary_expectation_planar(const RadialFunctional& fun,
                                                double tol) {
  if (!fun.radial) throw std::invalid_argument("functional has no radial part");
  const double two_pi = 2.0 * kPi;

  auto weighted = [&fun](double r) {
    const double w = stationary_weight(r);
    // The density underflows near the radial floor long before any
    // integrable moment can blow up; skip the functional there so a
    // diverging integrand (e.g. the drift function) cannot turn the
    // underflowed weight into 0 * inf.
    if (w == 0.0) return 0.0;
    double v = w * fun.radial(r);
    if (fun.angular) v *= fun.angular(r);
    return v;
  };
  QuadratureResult num = quad_1d_split(weighted, kRadialMin, kRadialMax,
                                       fun.breakpoints, tol);
  quad_or_throw(num, "stationary numerator");

  QuadratureResult den =
      quad_1d(stationary_weight, kRadialMin, kRadialMax, tol);
  quad_or_throw(den, "stationary denominator");

  PlanarExpectation out;
  out.numerator = two_pi * num.value;
  out.denominator = two_pi * den.value;
  out.value = out.numerator / out.denominator;
  out.evaluations = num.evaluations + den.evaluations;
  return out;
}

double planar_set_mass(double lo, double hi, double tol) {
  const double a = std::max(lo, kRadialMin);
  const double b = std::min(hi, kRadialMax);
  if (!(a < b)) return 0.0;
  QuadratureResult num = quad_1d(stationary_weight, a, b, tol);
  quad_or_throw(num, "set mass numerator");
  QuadratureResult den =
      quad_1d(stationary_weight, kRadialMin, kRadialMax, tol);
  quad_or_throw(den, "set mass denominator");
  return num.value / den.value;
}

double conjugate_radius(double r) {
  if (!(r > 0.0)) throw std::domain_error("conjugate_radius needs r > 0");
  const double m = f_radial_argmin();
  if (r == m) return m;
  const double target = log_f_radial(r);
  double lo, hi;
  if (r > m) {
    // Root lies in (0, m). log f -> +inf as r -> 0+, so halving reaches a
    // bracket in finitely many steps.
    hi = m;
    lo = m;
    do {
      lo *= 0.5;
    } while (log_f_radial(lo) < target);
  } else {
    lo = m;
    hi = m;
    do {
      hi *= 2.0;
    } while (log_f_radial(hi) < target);
  }
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (mid == lo || mid == hi) break;
    const double v = log_f_radial(mid);
    // log f decreases toward the minimum from the left branch and
    // increases on the right; orient the bracket by which side of m we are.
    const bool keep_low = (r > m) ? (v >= target) : (v <= target);
    if (keep_low) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

double pv_quadrature(double r_x, double tol) {
  if (!(r_x > 0.0)) throw std::domain_error("pv_quadrature needs r_x > 0");
  const double inner = std::abs(r_x - 1.0);
  const double outer = r_x + 1.0;
  const double lfx = log_f_radial(r_x);
  const double half_hx = 0.5 * h_radial(r_x);

  // Integrated in units of V(r_x): the integrand is then O(r) at every
  // radius, so an absolute budget gives uniform relative accuracy, where
  // the raw integrand would dwarf any fixed budget once V gets large.
  auto integrand = [lfx, half_hx](double r) {
    if (r <= 0.0) return 0.0;
    const double la = std::min(0.0, lfx - log_f_radial(r));
    const double alpha = std::exp(la);
    // alpha * V(r) / V(r_x) fused in log space: either factor alone can
    // overflow or underflow, the product cannot.
    const double accepted = std::exp(la + 0.5 * h_radial(r) - half_hx);
    return (accepted + (1.0 - alpha)) * r;
  };

  std::vector<double> breaks;
  breaks.push_back(r_x);
  const double conj = conjugate_radius(r_x);
  breaks.push_back(conj);

  QuadratureResult q = quad_1d_split(integrand, inner, outer, breaks, tol);
  quad_or_throw(q, "pv integral");
  const double ratio = q.value / (2.0 * r_x);
  return ratio * v_lyapunov(r_x);
}

}  // namespace arpmc
