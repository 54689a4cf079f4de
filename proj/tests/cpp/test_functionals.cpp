#include <cmath>
#include <stdexcept>

#include "arpmc/functionals.hpp"
#include "arpmc/rng.hpp"
#include "arpmc/samplers.hpp"
#include "arpmc/stationary.hpp"
#include "doctest.h"

using namespace arpmc;

namespace {

double closed_angular_clip(double r) {
  if (r <= 1.0) return 2.0 / kPi * r;
  const double t = std::acos(1.0 / r);
  return 2.0 / kPi * (t + r * (1.0 - std::sin(t)));
}

}  // namespace

TEST_SUITE("functionals") {

TEST_CASE("square values at hand states") {
  const SquareState center = center_square_state(3);
  const SquareState corners = {{1.0, 0.0}, {0.0, 1.0}, {1.0, 1.0}};
  const double s2 = std::sqrt(2.0);

  CHECK(square_functional("f").eval(center) ==
        doctest::Approx(2.1213203435596426).epsilon(1e-15));
  CHECK(square_functional("g").eval(center) == 0.5);
  CHECK(square_functional("h").eval(center) == 0.0);
  CHECK(square_functional("p").eval(center) ==
        doctest::Approx(std::exp(std::sqrt(0.5))).epsilon(1e-15));
  CHECK(square_functional("l").eval(center) ==
        doctest::Approx(std::sqrt(0.5)).epsilon(1e-15));

  CHECK(square_functional("f").eval(corners) ==
        doctest::Approx(2.0 + s2).epsilon(1e-15));
  CHECK(square_functional("g").eval(corners) == 1.0);
  CHECK(square_functional("h").eval(corners) ==
        doctest::Approx(s2).epsilon(1e-15));
  CHECK(square_functional("p").eval(corners) ==
        doctest::Approx(std::exp(s2)).epsilon(1e-15));
  CHECK(square_functional("l").eval(corners) ==
        doctest::Approx(s2).epsilon(1e-15));

  CHECK(square_functional("psi").eval(center) ==
        doctest::Approx(2.1213203435596426).epsilon(1e-15));
  CHECK(square_functional("phi1").eval(center) == 3.0);
  CHECK(square_functional("phi2").eval(center) == 0.75);
}

TEST_CASE("planar values at hand states") {
  const PlanarPoint unit{0.6, 0.8};
  const PlanarPoint far{3.0, 4.0};

  CHECK(planar_functional("f").eval(unit) ==
        doctest::Approx(std::exp(-1.0)).epsilon(1e-14));
  CHECK(planar_functional("g").eval(unit) ==
        doctest::Approx(0.36).epsilon(1e-14));
  CHECK(planar_functional("h").eval(unit) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(planar_functional("p").eval(unit) == 0.6);
  CHECK(planar_functional("l").eval(unit) ==
        doctest::Approx(std::sin(1.0)).epsilon(1e-14));
  CHECK(planar_functional("psi").eval(unit) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(planar_functional("phi1").eval(unit) ==
        doctest::Approx(1.4).epsilon(1e-14));
  CHECK(planar_functional("phi2").eval(unit) == 1.0);

  CHECK(planar_functional("f").eval(far) ==
        doctest::Approx(std::exp(-5.0)).epsilon(1e-14));
  CHECK(planar_functional("g").eval(far) == doctest::Approx(0.36).epsilon(1e-14));
  CHECK(planar_functional("h").eval(far) == doctest::Approx(0.2).epsilon(1e-14));
  CHECK(planar_functional("p").eval(far) == 1.0);
  CHECK(planar_functional("phi2").eval(far) == 0.0);
}

TEST_CASE("declared ranges hold on random states") {
  RngStream rng(20240811u, 0);
  for (int trial = 0; trial < 200; ++trial) {
    const SquareState s = draw_square_init(SquareInit::uniform(), 3, rng);
    for (const auto& f : tv_functionals_square()) {
      const double v = f.eval(s);
      CHECK(v >= f.lo);
      CHECK(v <= f.hi);
    }
    const PlanarPoint p{rng.uniform(-10.0, 10.0), rng.uniform(-10.0, 10.0)};
    for (const auto& f : tv_functionals_planar()) {
      const double v = f.eval(p);
      CHECK(v >= f.lo);
      CHECK(v <= f.hi);
    }
  }
}

TEST_CASE("lookup covers both families and rejects unknowns") {
  CHECK(square_functional("psi").hi ==
        doctest::Approx(3.0 * std::sqrt(2.0)).epsilon(1e-15));
  CHECK(square_functional("p").lo == 1.0);
  CHECK(square_functional("p").hi ==
        doctest::Approx(std::exp(std::sqrt(2.0))).epsilon(1e-15));
  CHECK(planar_functional("l").lo == -1.0);
  CHECK(std::isinf(planar_functional("psi").hi));
  CHECK_THROWS_AS(square_functional("zzz"), std::invalid_argument);
  CHECK_THROWS_AS(planar_functional("zzz"), std::invalid_argument);
  CHECK_THROWS_AS(planar_radial_form("zzz"), std::invalid_argument);
}

TEST_CASE("radial forms agree with direct targets") {
  const PlanarExpectation ef =
      stationary_expectation_planar(planar_radial_form("f"), 1e-12);
  CHECK(ef.value == doctest::Approx(0.15232644481869695).epsilon(1e-10));

  const PlanarExpectation eg =
      stationary_expectation_planar(planar_radial_form("g"), 1e-12);
  CHECK(eg.value == doctest::Approx(0.5).epsilon(1e-11));

  const PlanarExpectation eh =
      stationary_expectation_planar(planar_radial_form("h"), 1e-12);
  CHECK(eh.value == doctest::Approx(0.50892694467579646).epsilon(1e-10));

  const PlanarExpectation el =
      stationary_expectation_planar(planar_radial_form("l"), 1e-12);
  CHECK(el.value == doctest::Approx(0.40425898529521872).epsilon(1e-10));

  const PlanarExpectation em =
      stationary_expectation_planar(planar_radial_form("phi2"), 1e-12);
  CHECK(em.value == doctest::Approx(0.24630550773378226).epsilon(1e-10));
  CHECK(em.value ==
        doctest::Approx(planar_set_mass(0.5, 1.5, 1e-12)).epsilon(1e-11));
}

TEST_CASE("clipped-coordinate angular average matches its closed form") {
  const RadialFunctional p = planar_radial_form("p");
  REQUIRE(static_cast<bool>(p.angular));
  for (double r : {0.2, 0.7, 1.0, 1.3, 2.5, 7.0}) {
    CHECK(p.angular(r) == doctest::Approx(closed_angular_clip(r)).epsilon(1e-10));
  }
  const PlanarExpectation ep = stationary_expectation_planar(p, 1e-10);
  CHECK(ep.value == doctest::Approx(0.81325147304949675).epsilon(1e-8));
}

}  // TEST_SUITE
