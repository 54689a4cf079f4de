#include "arpmc/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace arpmc {

namespace {

// Kronrod abscissae on [-1,1]; odd indices are the embedded Gauss-7 nodes.
constexpr double kNodes[8] = {
    0.0,
    0.2077849550078984676006894,
    0.4058451513773971669066064,
    0.5860872354676911302941448,
    0.7415311855993944398638648,
    0.8648644233597690727897128,
    0.9491079123427585245261897,
    0.9914553711208126392068547,
};

constexpr double kWeightK[8] = {
    0.2094821410847278280129992,
    0.2044329400752988924141620,
    0.1903505780647854099132564,
    0.1690047266392679028265834,
    0.1406532597155259187451896,
    0.1047900103222501838398763,
    0.0630920926299785532907007,
    0.0229353220105292249637320,
};

constexpr double kWeightG[4] = {
    0.4179591836734693877551020,  // node 0
    0.3818300505051189449503698,  // nodes +-2
    0.2797053914892766679014678,  // nodes +-4
    0.1294849661688696932706114,  // nodes +-6
};

struct Segment {
  double gauss = 0.0;
  double kronrod = 0.0;
};

Segment gk15(const std::function<double(double)>& g, double a, double b) {
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double f0 = g(mid);
  double kron = kWeightK[0] * f0;
  double gauss = kWeightG[0] * f0;
  for (int i = 1; i < 8; ++i) {
    const double dx = half * kNodes[i];
    const double sum = g(mid - dx) + g(mid + dx);
    kron += kWeightK[i] * sum;
    if (i % 2 == 0) gauss += kWeightG[i / 2] * sum;
  }
  return {gauss * half, kron * half};
}

void refine(const std::function<double(double)>& g, double a, double b,
            double budget_per_len, int depth, int max_depth,
            QuadratureResult& out) {
  const Segment s = gk15(g, a, b);
  out.evaluations += 15;
  const double err = std::fabs(s.kronrod - s.gauss);
  if (err <= budget_per_len * (b - a) || depth >= max_depth) {
    out.value += s.kronrod;
    out.error_estimate += err;
    if (depth >= max_depth && err > budget_per_len * (b - a)) out.converged = false;
    return;
  }
  const double mid = 0.5 * (a + b);
  refine(g, a, mid, budget_per_len, depth + 1, max_depth, out);
  refine(g, mid, b, budget_per_len, depth + 1, max_depth, out);
}

}  // namespace

QuadratureResult quad_1d(const std::function<double(double)>& g, double a,
                         double b, double tol, int max_depth) {
  if (!(a < b)) throw std::invalid_argument("quad_1d: need a < b");
  QuadratureResult out;
  refine(g, a, b, tol / (b - a), 0, max_depth, out);
  return out;
}

QuadratureResult quad_1d_split(const std::function<double(double)>& g, double a,
                               double b, const std::vector<double>& breakpoints,
                               double tol, int max_depth) {
  if (!(a < b)) throw std::invalid_argument("quad_1d_split: need a < b");
  std::vector<double> pts{a};
  for (double p : breakpoints)
    if (a < p && p < b) pts.push_back(p);
  pts.push_back(b);
  std::sort(pts.begin(), pts.end());

  QuadratureResult out;
  const double budget = tol / (b - a);
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    if (pts[i] == pts[i + 1]) continue;
    QuadratureResult piece;
    refine(g, pts[i], pts[i + 1], budget, 0, max_depth, piece);
    out += piece;
  }
  return out;
}

double quad_or_throw(const QuadratureResult& q, const char* what) {
  if (!q.converged)
    throw std::runtime_error(std::string("quadrature did not converge: ") + what);
  return q.value;
}

}  // namespace arpmc
