#pragma once

#include <cstdint>
#include <vector>

namespace arpmc {

// --- square model, uniform ergodicity -------------------------------------

// Minorization constant for the three-particle square sampler with one
// full systematic sweep as the step. Only particles == 3 is supported;
// the constant's derivation is specific to that case.
double square_uniform_epsilon(double c1, double c2, int particles = 3);

// (1 - eps)^floor(n / n0). Valid for eps in (0, 1], n0 >= 1, n >= 0.
double tv_bound_uniform(double eps, long long n0, long long n);

// Smallest n that is a multiple of n0 with tv_bound_uniform(n) <= delta.
long long iterations_for_tolerance(double eps, long long n0, double delta);

// Largest two-significant-figure decimal not exceeding x (x > 0). Headline
// iteration counts quote the minorization constant at this precision.
double floor_two_significant(double x);

// --- planar model, certificates -------------------------------------------

struct MinorizationCertificate {
  double eps = 0.0;
  long long n0 = 1;
  double small_set_lo = 0.0;
  double small_set_hi = 0.0;
};

struct DriftCertificate {
  double lambda = 0.0;  // contraction factor off the small set
  double b = 0.0;       // additive constant on the small set
  double d = 0.0;       // sup of V on the small set
  double a_bound = 0.0; // sup of PV on the small set (lambda * d + b >= this)
};

struct PlanarCertificate {
  MinorizationCertificate minorization;
  DriftCertificate drift;
  double v_at_unit_start = 0.0;  // V at radius 1, the deterministic start
};

PlanarCertificate planar_certificate();

// Two-step overlap constants behind the planar minorization: lower bounds
// on the accept probability into and out of the transfer band, split by
// which side of the small set the start lies on.
struct OverlapConstants {
  double m1 = 0.0;        // first hop, start in [1/4, 5/4]
  double m2 = 0.0;        // first hop, start in [5/4, 4]
  double m1_prime = 0.0;  // second hop into [2, 9/4] from below
  double m2_prime = 0.0;  // second hop into [2, 9/4] from above
  double inner_coef = 0.0;  // m1 * m1_prime, floor 0.13
  double outer_coef = 0.0;  // m2 * m2_prime / 2, floor 0.1
  bool ok = false;
};

OverlapConstants planar_overlap_constants();

// Quadrature audit of the two-step minorization mass: integrates the
// certified overlap density over the plane and checks it against the
// closed-form antiderivative and the certified eps.
struct MinorizationAudit {
  double mass = 0.0;         // 2-D integral of the overlap density
  double closed_form = 0.0;  // piecewise antiderivative, same integral
  double crossover = 0.0;    // radius where the two density pieces meet
  double certified_eps = 0.0;
  long evaluations = 0;
  bool ok = false;  // mass >= certified_eps and quadrature matches closed form
};

MinorizationAudit verify_minorization_planar(double tol = 1e-10);

// Closed-form upper bound on PV(r)/V(r) for r > the audit range, decreasing
// in r; certifies the drift condition beyond the grid.
double drift_tail_ratio_bound(double r);

struct DriftGridSpec {
  int low_points = 1000;   // grid over (low_min, small_set_lo)
  int high_points = 1000;  // grid over (small_set_hi, high_max)
  int on_points = 2000;    // grid over [small_set_lo, small_set_hi]
  double low_min = 0.001;
  double high_max = 50.0;
  double tol = 1e-10;
};

struct DriftAudit {
  int low_points = 0;
  int high_points = 0;
  int on_points = 0;
  double max_ratio_low = 0.0;   // max PV/V over the low off-set grid
  double max_ratio_high = 0.0;  // max PV/V over the high off-set grid
  double max_pv_on = 0.0;       // max PV over the small set
  double modulus_low = 0.0;     // largest jump between adjacent grid ratios
  double modulus_high = 0.0;
  double modulus_on = 0.0;      // largest jump between adjacent PV values
  double lambda = 0.0;          // certified contraction factor
  double pv_cap = 0.0;          // certified sup of PV on the small set
  double low_cap = 0.0;         // sharper ratio cap below the small set
  double tail_bound = 0.0;      // drift_tail_ratio_bound at high_max
  bool ok_low = false;
  bool ok_high = false;
  bool ok_on = false;
  bool ok_tail = false;
  bool ok() const { return ok_low && ok_high && ok_on && ok_tail; }
};

DriftAudit verify_drift_planar(const DriftGridSpec& spec = {});

// b / (1 - lambda): drift-implied bound on the stationary mean of V.
double stationary_v_bound(double lambda, double b);

// --- planar model, shift-coupling bound -----------------------------------

struct ShiftCouplingInputs {
  double eps = 0.0;
  long long n0 = 1;
  double lambda = 0.0;
  double b = 0.0;
  double a_bound = 0.0;  // sup of PV on the small set
  double e_nu_v = 0.0;   // E_nu V at the start
};

// Certificate values packaged for the bound.
ShiftCouplingInputs planar_shift_inputs();

struct ShiftCouplingResult {
  double r = 0.0;
  double coefficient = 0.0;  // bound is coefficient / n
  double term_minorization = 0.0;
  double term_drift = 0.0;
  double admissibility = 0.0;  // lambda^(1 - n0 r) A^r, must be < 1
  double v_start_term = 0.0;   // E_nu V + b / (1 - lambda)
  double bound_at(long long n) const {
    return n > 0 ? coefficient / static_cast<double>(n) : 1.0;
  }
};

// Throws std::domain_error when inputs are out of range or the pair
// (inputs, r) is inadmissible (admissibility >= 1).
ShiftCouplingResult shift_coupling_bound(const ShiftCouplingInputs& in,
                                         double r);

// Supremum of admissible r for the given inputs.
double admissible_r_sup(const ShiftCouplingInputs& in);

struct OptimizedR {
  double r = 0.0;
  double coefficient = 0.0;
};

// Coarse log grid over the admissible range followed by a golden-section
// refinement; ties resolve toward smaller r.
OptimizedR optimize_r(const ShiftCouplingInputs& in);

}  // namespace arpmc
