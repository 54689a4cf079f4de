#include <cmath>
#include <stdexcept>
#include <vector>

#include "arpmc/diagnostics.hpp"
#include "arpmc/rng.hpp"
#include "doctest.h"

using namespace arpmc;

namespace {

using Series = std::vector<std::vector<double>>;

Series transformed(const Series& s, double scale, double shift) {
  Series out = s;
  for (auto& chain : out)
    for (double& x : chain) x = scale * x + shift;
  return out;
}

}  // namespace

TEST_SUITE("diagnostics") {

TEST_CASE("hand-computed two-chain example") {
  const Series s = {{0.0, 2.0}, {1.0, 3.0}};

  const BetweenWithin bw = between_within(s, 0);
  CHECK(bw.b == 1.0);
  CHECK(bw.w == 2.0);
  CHECK(bw.m == 2);
  CHECK(bw.n_used == 2);

  const PsrfReport unit = psrf(s, 0, DfMode::unit_factor);
  CHECK(unit.b == 1.0);
  CHECK(unit.w == 2.0);
  CHECK(unit.sigma2 == 1.5);
  CHECK(unit.v_hat == 1.75);
  CHECK(unit.factor == 1.0);
  CHECK(std::isnan(unit.df));
  CHECK(unit.r == 0.875);

  const PsrfReport mom = psrf(s, 0, DfMode::moment_estimated);
  CHECK(mom.v_hat == 1.75);
  CHECK(mom.df == doctest::Approx(49.0 / 9.0).epsilon(1e-15));
  CHECK(mom.factor == doctest::Approx(38.0 / 29.0).epsilon(1e-15));
  CHECK(mom.r == doctest::Approx(38.0 / 29.0 * 0.875).epsilon(1e-15));
}

TEST_CASE("burn-in discards the head of every chain") {
  const Series clean = {{0.0, 2.0}, {1.0, 3.0}};
  const Series padded = {{99.0, 0.0, 2.0}, {-7.0, 1.0, 3.0}};
  const PsrfReport a = psrf(clean, 0, DfMode::moment_estimated);
  const PsrfReport b = psrf(padded, 1, DfMode::moment_estimated);
  CHECK(a.b == b.b);
  CHECK(a.w == b.w);
  CHECK(a.r == b.r);
  CHECK(a.n_used == b.n_used);
}

TEST_CASE("exact invariance on binary-exact data") {
  // Powers of two and integers transform without rounding, so the ratio
  // must come out bit-identical, not merely close.
  const Series s = {{0.0, 2.0, 4.0, 1.0}, {1.0, 3.0, 0.0, 2.0},
                    {2.0, 2.0, 1.0, 5.0}};
  for (DfMode mode : {DfMode::unit_factor, DfMode::moment_estimated}) {
    const PsrfReport base = psrf(s, 0, mode);
    const PsrfReport shifted = psrf(transformed(s, 1.0, 7.0), 0, mode);
    const PsrfReport scaled = psrf(transformed(s, 8.0, 0.0), 0, mode);
    const PsrfReport flipped = psrf(transformed(s, -2.0, 16.0), 0, mode);
    CHECK(base.r == shifted.r);
    CHECK(base.r == scaled.r);
    CHECK(base.r == flipped.r);
    CHECK(scaled.b == 64.0 * base.b);
    CHECK(scaled.w == 64.0 * base.w);
  }
}

TEST_CASE("approximate invariance on random data") {
  RngStream rng(77u, 0);
  Series s(4, std::vector<double>(50));
  for (auto& chain : s)
    for (double& x : chain) x = rng.uniform(-1.0, 2.0);
  for (DfMode mode : {DfMode::unit_factor, DfMode::moment_estimated}) {
    const PsrfReport base = psrf(s, 5, mode);
    const PsrfReport moved = psrf(transformed(s, 3.7, -2.2), 5, mode);
    CHECK(moved.r == doctest::Approx(base.r).epsilon(1e-12));
    if (mode == DfMode::moment_estimated) {
      CHECK(moved.df == doctest::Approx(base.df).epsilon(1e-9));
    }
  }
}

TEST_CASE("mixed chains approach 1 and split chains exceed it") {
  RngStream rng(3091u, 0);
  Series mixed(5, std::vector<double>(4000));
  for (auto& chain : mixed)
    for (double& x : chain) x = rng.uniform(0.0, 1.0);
  const PsrfReport good = psrf(mixed, 0, DfMode::moment_estimated);
  CHECK(good.r < 1.05);
  CHECK(good.r > 0.9);

  Series split = mixed;
  for (double& x : split[0]) x += 5.0;  // one chain stuck elsewhere
  const PsrfReport bad = psrf(split, 0, DfMode::unit_factor);
  CHECK(bad.r > 2.0);
}

TEST_CASE("degenerate chains are rejected") {
  const Series flat = {{1.0, 1.0, 1.0}, {2.0, 2.0, 2.0}};
  const BetweenWithin bw = between_within(flat, 0);
  CHECK(bw.w == 0.0);
  CHECK(bw.b > 0.0);
  CHECK_THROWS_AS(psrf(flat, 0), DegenerateChainsError);
}

TEST_CASE("shape errors") {
  CHECK_THROWS_AS(psrf({{1.0, 2.0}}, 0), std::invalid_argument);
  CHECK_THROWS_AS(psrf({{1.0, 2.0}, {1.0}}, 0), std::invalid_argument);
  CHECK_THROWS_AS(psrf({{1.0, 2.0}, {3.0, 4.0}}, 1), std::invalid_argument);
  CHECK_THROWS_AS(psrf({{1.0, 2.0}, {3.0, 4.0}}, -1), std::invalid_argument);
  CHECK_THROWS_AS(between_within({}, 0), std::invalid_argument);
}

}  // TEST_SUITE
