#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "arpmc/bounds.hpp"
#include "arpmc/diagnostics.hpp"
#include "arpmc/functionals.hpp"
#include "arpmc/model.hpp"
#include "arpmc/rng.hpp"
#include "arpmc/samplers.hpp"
#include "arpmc/stationary.hpp"
#include "arpmc/tv.hpp"

namespace py = pybind11;
using namespace arpmc;

namespace {

SquareState state_from_pairs(const std::vector<std::pair<double, double>>& v) {
  SquareState s;
  s.reserve(v.size());
  for (const auto& p : v) s.push_back({p.first, p.second});
  return s;
}

py::dict audit_dict(const DriftAudit& a) {
  py::dict d;
  d["max_ratio_low"] = a.max_ratio_low;
  d["max_ratio_high"] = a.max_ratio_high;
  d["max_pv_on"] = a.max_pv_on;
  d["lambda"] = a.lambda;
  d["pv_cap"] = a.pv_cap;
  d["low_cap"] = a.low_cap;
  d["tail_bound"] = a.tail_bound;
  d["ok"] = a.ok();
  return d;
}

}  // namespace

PYBIND11_MODULE(_arpmc, m) {
  m.doc() = "attractive-repulsive particle MCMC: samplers, bounds, audits";

  m.def("log_density_square",
        [](const std::vector<std::pair<double, double>>& state, double c1,
           double c2) {
          return log_density_square(state_from_pairs(state), {c1, c2});
        },
        py::arg("state"), py::arg("c1") = 0.1, py::arg("c2") = 0.1);
  m.def("h_radial", &h_radial, py::arg("r"));
  m.def("f_radial", &f_radial, py::arg("r"));
  m.def("v_lyapunov", &v_lyapunov, py::arg("r"));
  m.def("f_radial_argmin", &f_radial_argmin);
  m.def("accept_prob_planar", &accept_prob_planar, py::arg("r_x"),
        py::arg("r_y"));

  m.def("square_uniform_epsilon", &square_uniform_epsilon, py::arg("c1"),
        py::arg("c2"), py::arg("particles") = 3);
  m.def("tv_bound_uniform", &tv_bound_uniform, py::arg("eps"), py::arg("n0"),
        py::arg("n"));
  m.def("iterations_for_tolerance", &iterations_for_tolerance, py::arg("eps"),
        py::arg("n0"), py::arg("delta"));
  m.def("floor_two_significant", &floor_two_significant, py::arg("x"));

  m.def("pv_quadrature", &pv_quadrature, py::arg("r_x"),
        py::arg("tol") = kTolBound);
  m.def("planar_set_mass", &planar_set_mass, py::arg("lo"), py::arg("hi"),
        py::arg("tol") = kTolExpectation);
  m.def("stationary_expectation",
        [](const std::string& name, double tol) {
          return stationary_expectation_planar(planar_radial_form(name), tol)
              .value;
        },
        py::arg("name"), py::arg("tol") = kTolExpectation);

  m.def("verify_minorization", []() {
    const MinorizationAudit a = verify_minorization_planar();
    py::dict d;
    d["mass"] = a.mass;
    d["closed_form"] = a.closed_form;
    d["crossover"] = a.crossover;
    d["certified_eps"] = a.certified_eps;
    d["ok"] = a.ok;
    return d;
  });
  m.def("proof_constants", []() {
    const OverlapConstants c = planar_overlap_constants();
    py::dict d;
    d["m1"] = c.m1;
    d["m2"] = c.m2;
    d["m1_prime"] = c.m1_prime;
    d["m2_prime"] = c.m2_prime;
    d["inner_coef"] = c.inner_coef;
    d["outer_coef"] = c.outer_coef;
    d["ok"] = c.ok;
    return d;
  });
  m.def("verify_drift",
        [](int low_points, int high_points, int on_points) {
          DriftGridSpec spec;
          spec.low_points = low_points;
          spec.high_points = high_points;
          spec.on_points = on_points;
          return audit_dict(verify_drift_planar(spec));
        },
        py::arg("low_points") = 200, py::arg("high_points") = 200,
        py::arg("on_points") = 200);

  m.def("shift_coupling",
        [](double r) {
          const ShiftCouplingResult res =
              shift_coupling_bound(planar_shift_inputs(), r);
          py::dict d;
          d["r"] = res.r;
          d["coefficient"] = res.coefficient;
          d["admissibility"] = res.admissibility;
          d["term_minorization"] = res.term_minorization;
          d["term_drift"] = res.term_drift;
          return d;
        },
        py::arg("r"));
  m.def("optimize_r", []() {
    const OptimizedR o = optimize_r(planar_shift_inputs());
    return py::make_tuple(o.r, o.coefficient);
  });
  m.def("admissible_r_sup",
        []() { return admissible_r_sup(planar_shift_inputs()); });

  m.def("simulate_planar",
        [](long iterations, std::uint64_t seed, std::uint64_t stream, double x,
           double y) {
          RngStream rng(seed, stream);
          const PlanarChainTrace t =
              trace_chain_planar({x, y}, iterations, rng);
          std::vector<std::tuple<double, double, int>> rows;
          rows.reserve(t.states.size());
          for (std::size_t i = 0; i < t.states.size(); ++i) {
            const int acc = i == 0 ? 0 : t.accepts[i - 1];
            rows.emplace_back(t.states[i].x, t.states[i].y, acc);
          }
          return rows;
        },
        py::arg("iterations"), py::arg("seed") = 0, py::arg("stream") = 0,
        py::arg("x") = 1.0, py::arg("y") = 0.0);
  m.def("simulate_square",
        [](long iterations, std::uint64_t seed, std::uint64_t stream,
           double c1, double c2) {
          RngStream rng(seed, stream);
          const SquareChainTrace t = trace_chain_square(
              center_square_state(3), {c1, c2}, iterations, rng);
          std::vector<std::vector<double>> rows;
          rows.reserve(t.states.size());
          for (const SquareState& s : t.states) {
            std::vector<double> flat;
            for (const Point2& p : s) {
              flat.push_back(p.x);
              flat.push_back(p.y);
            }
            rows.push_back(std::move(flat));
          }
          return rows;
        },
        py::arg("iterations"), py::arg("seed") = 0, py::arg("stream") = 0,
        py::arg("c1") = 0.1, py::arg("c2") = 0.1);

  m.def("psrf",
        [](const std::vector<std::vector<double>>& series, long long burn_in,
           const std::string& mode) {
          DfMode m_ = DfMode::unit_factor;
          if (mode == "moment") {
            m_ = DfMode::moment_estimated;
          } else if (mode != "unit") {
            throw std::invalid_argument("mode must be 'unit' or 'moment'");
          }
          const PsrfReport rep = psrf(series, burn_in, m_);
          py::dict d;
          d["B"] = rep.b;
          d["W"] = rep.w;
          d["sigma2"] = rep.sigma2;
          d["vhat"] = rep.v_hat;
          d["factor"] = rep.factor;
          d["df"] = rep.df;
          d["R"] = rep.r;
          d["m"] = rep.m;
          d["n_used"] = rep.n_used;
          return d;
        },
        py::arg("series"), py::arg("burn_in") = 0, py::arg("mode") = "unit");

  m.attr("rng_algorithm") = kRngAlgorithm;
}
