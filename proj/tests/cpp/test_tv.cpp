#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "arpmc/stationary.hpp"
#include "arpmc/tv.hpp"
#include "doctest.h"

using namespace arpmc;

TEST_SUITE("tv") {

TEST_CASE("default checkpoint ladder") {
  const auto five = default_checkpoints(5);
  CHECK(five == std::vector<long long>{1, 2, 3, 4, 5});
  const auto fifty = default_checkpoints(50);
  CHECK(fifty.size() == 50);
  CHECK(fifty.back() == 50);
  const auto mid = default_checkpoints(75);
  CHECK(mid.size() == 52);
  CHECK(mid[50] == 60);
  CHECK(mid.back() == 70);
  const auto long_run = default_checkpoints(500);
  CHECK(long_run.size() == 95);
  CHECK(long_run.front() == 1);
  CHECK(long_run.back() == 500);
  CHECK_THROWS_AS(default_checkpoints(0), std::invalid_argument);
}

TEST_CASE("quadrature references") {
  const Reference f = reference_planar("f");
  CHECK(f.value == doctest::Approx(0.15232644481869695).epsilon(1e-7));
  CHECK(f.se == 0.0);
  CHECK(f.method == "quadrature");
  const Reference occ = reference_planar("phi2");
  CHECK(occ.value ==
        doctest::Approx(planar_set_mass(0.5, 1.5)).epsilon(1e-9));
}

TEST_CASE("ensemble reference for the square model") {
  ReferenceSpec spec;
  spec.chains = 200;
  spec.iteration = 50;
  spec.seed = 9u;
  const Reference ref =
      reference_square(square_functional("g"), ModelParams{}, spec, 2);
  CHECK(ref.method == "ensemble");
  CHECK(ref.chains == 200);
  CHECK(ref.iteration == 50);
  CHECK(ref.seed == 9u);
  CHECK(ref.value > 0.3);
  CHECK(ref.value < 0.7);
  CHECK(ref.se > 0.0);
  CHECK(ref.se < 0.05);
  CHECK_THROWS_AS(reference_square(square_functional("g"), ModelParams{},
                                   ReferenceSpec{1, 50, 0u}, 1),
                  std::invalid_argument);
}

TEST_CASE("checkpoint zero reads the initial state exactly") {
  Reference ref;
  ref.value = 0.7;
  ref.se = 0.0;
  EnsembleSpec spec;
  spec.chains = 3;
  spec.seed = 4u;
  const TvCurve curve =
      tv_curve_square(square_functional("g"), ModelParams{},
                      SquareInit::fixed(center_square_state(3)), spec, {0}, ref);
  REQUIRE(curve.checkpoints == std::vector<long long>{0});
  // All chains still sit at the deterministic start, so the estimate is the
  // plain distance |0.7 - 0.5| with no sampling spread at all.
  CHECK(curve.estimates[0] == doctest::Approx(0.2).epsilon(1e-15));
  CHECK(curve.se[0] == 0.0);
}

TEST_CASE("checkpoint lists are sorted and deduplicated") {
  Reference ref;
  ref.value = 0.5;
  EnsembleSpec spec;
  spec.chains = 4;
  spec.seed = 11u;
  const TvCurve curve =
      tv_curve_square(square_functional("g"), ModelParams{},
                      SquareInit::uniform(), spec, {10, 1, 10, 5}, ref);
  CHECK(curve.checkpoints == std::vector<long long>{1, 5, 10});
  CHECK(curve.estimates.size() == 3);
  CHECK(curve.se.size() == 3);
  CHECK_THROWS_AS(tv_curve_square(square_functional("g"), ModelParams{},
                                  SquareInit::uniform(), spec, {}, ref),
                  std::invalid_argument);
  CHECK_THROWS_AS(tv_curve_square(square_functional("g"), ModelParams{},
                                  SquareInit::uniform(), spec, {-1, 3}, ref),
                  std::invalid_argument);
}

TEST_CASE("square curve from the center start shrinks") {
  ReferenceSpec rs;
  rs.chains = 400;
  rs.iteration = 100;
  rs.seed = 1001u;
  const SquareFunctional fun = square_functional("f");
  const Reference ref = reference_square(fun, ModelParams{}, rs, 2);

  EnsembleSpec spec;
  spec.chains = 400;
  spec.seed = 17u;  // independent of the reference seed
  spec.threads = 2;
  const TvCurve curve =
      tv_curve_square(fun, ModelParams{},
                      SquareInit::fixed(center_square_state(3)), spec,
                      {1, 30}, ref);
  REQUIRE(curve.estimates.size() == 2);
  CHECK(curve.estimates[1] <= 0.05);
  CHECK(curve.se[0] > 0.0);
  CHECK(curve.chains == 400);
  CHECK(curve.seed == 17u);
  CHECK(curve.functional == "f");
}

TEST_CASE("planar curve against the quadrature reference") {
  const Reference ref = reference_planar("f");
  EnsembleSpec spec;
  spec.chains = 200;
  spec.seed = 23u;
  const TvCurve curve = tv_curve_planar(planar_functional("f"),
                                        PlanarInit::fixed({1.0, 0.0}), spec,
                                        {1, 50, 100}, ref);
  REQUIRE(curve.estimates.size() == 3);
  CHECK(curve.estimates[2] < 0.1);
  for (double s : curve.se) CHECK(s > 0.0);
}

TEST_CASE("curves are reproducible and thread-invariant") {
  const Reference ref = reference_planar("f");
  EnsembleSpec one;
  one.chains = 60;
  one.seed = 31u;
  one.threads = 1;
  EnsembleSpec four = one;
  four.threads = 4;
  const std::vector<long long> cps = {1, 10, 40};
  const TvCurve a = tv_curve_planar(planar_functional("f"),
                                    PlanarInit::fixed({1.0, 0.0}), one, cps, ref);
  const TvCurve b = tv_curve_planar(planar_functional("f"),
                                    PlanarInit::fixed({1.0, 0.0}), four, cps, ref);
  const TvCurve c = tv_curve_planar(planar_functional("f"),
                                    PlanarInit::fixed({1.0, 0.0}), one, cps, ref);
  for (std::size_t i = 0; i < cps.size(); ++i) {
    CHECK(a.estimates[i] == b.estimates[i]);
    CHECK(a.estimates[i] == c.estimates[i]);
    CHECK(a.se[i] == b.se[i]);
  }
}

TEST_CASE("occupation curve on hand indicators") {
  const std::vector<std::vector<std::uint8_t>> ind = {{1, 0, 1, 1},
                                                      {0, 0, 1, 0}};
  const OccupationCurve occ = occupation_from_series(ind, 0.4, {1, 2, 4});
  REQUIRE(occ.f_bar.size() == 3);
  CHECK(occ.f_bar[0] == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(occ.f_bar[1] == doctest::Approx(0.25).epsilon(1e-15));
  CHECK(occ.f_bar[2] == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(occ.estimates[0] == doctest::Approx(0.1).epsilon(1e-14));
  CHECK(occ.estimates[1] == doctest::Approx(0.15).epsilon(1e-14));
  CHECK(occ.estimates[2] == doctest::Approx(0.1).epsilon(1e-14));
  CHECK(occ.tv_mean[0] == doctest::Approx(0.1).epsilon(1e-14));
  CHECK(occ.tv_mean[1] == doctest::Approx(0.25).epsilon(1e-14));
  CHECK(occ.tv_mean[2] == doctest::Approx(0.3).epsilon(1e-14));
  CHECK(occ.se[0] == doctest::Approx(0.5).epsilon(1e-15));
  // The per-iteration cross-chain average dominates the final distance.
  for (std::size_t i = 0; i < occ.estimates.size(); ++i)
    CHECK(occ.estimates[i] <= occ.tv_mean[i] + 1e-12);

  CHECK_THROWS_AS(occupation_from_series(ind, 0.4, {0, 2}),
                  std::invalid_argument);
  CHECK_THROWS_AS(occupation_from_series(ind, 0.4, {1, 9}),
                  std::invalid_argument);
  CHECK_THROWS_AS(occupation_from_series({{1, 0}}, 0.4, {1}),
                  std::invalid_argument);
  CHECK_THROWS_AS(occupation_from_series({{1, 0}, {1}}, 0.4, {1}),
                  std::invalid_argument);
}

TEST_CASE("planar shell occupation") {
  EnsembleSpec spec;
  spec.chains = 64;
  spec.seed = 41u;
  spec.threads = 2;
  const OccupationCurve occ =
      occupation_planar(spec, PlanarInit::fixed({1.0, 0.0}), 0.5, 1.5,
                        {50, 200});
  CHECK(occ.target == doctest::Approx(0.24630550773378226).epsilon(1e-7));
  REQUIRE(occ.f_bar.size() == 2);
  for (double f : occ.f_bar) {
    CHECK(f >= 0.0);
    CHECK(f <= 1.0);
  }
  for (std::size_t i = 0; i < occ.estimates.size(); ++i)
    CHECK(occ.estimates[i] <= occ.tv_mean[i] + 1e-12);
  CHECK(occ.estimates[1] < 0.2);

  EnsembleSpec serial = spec;
  serial.threads = 1;
  const OccupationCurve again =
      occupation_planar(serial, PlanarInit::fixed({1.0, 0.0}), 0.5, 1.5,
                        {50, 200});
  CHECK(again.f_bar[0] == occ.f_bar[0]);
  CHECK(again.f_bar[1] == occ.f_bar[1]);

  CHECK_THROWS_AS(occupation_planar(spec, PlanarInit::fixed({1.0, 0.0}), 1.5,
                                    0.5, {10}),
                  std::invalid_argument);
}

}  // TEST_SUITE
