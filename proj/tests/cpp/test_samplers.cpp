#include <cmath>
#include <vector>

#include "arpmc/model.hpp"
#include "arpmc/rng.hpp"
#include "arpmc/samplers.hpp"
#include "doctest.h"

using namespace arpmc;

TEST_SUITE("samplers") {

TEST_CASE("sweep replays exactly from the public pieces") {
  const ModelParams par{0.1, 0.1};
  RngStream rng(5, 0);
  SquareState state = center_square_state(3);
  // Warm up so the replay starts mid-stream.
  for (int t = 0; t < 7; ++t) metropolis_sweep_square(state, par, rng);

  RngStream replay_rng(5, 0);
  for (int t = 0; t < 7 * 9; ++t) replay_rng.next_double();
  SquareState replay = state;
  for (std::size_t i = 0; i < 3; ++i) {
    const double u1 = replay_rng.next_double();
    const double u2 = replay_rng.next_double();
    const double u3 = replay_rng.next_double();
    const Point2 y{u1, u2};
    const double delta = move_energy_delta(replay, i, y, par);
    if (delta <= 0.0 || u3 < std::exp(-delta)) replay[i] = y;
  }
  metropolis_sweep_square(state, par, rng);
  for (int i = 0; i < 3; ++i) {
    CHECK(state[i].x == replay[i].x);
    CHECK(state[i].y == replay[i].y);
  }
}

TEST_CASE("sweep consumes exactly nine uniforms") {
  const ModelParams par{0.1, 0.1};
  RngStream a(99, 2);
  RngStream b(99, 2);
  SquareState s = center_square_state(3);
  metropolis_sweep_square(s, par, a);
  for (int i = 0; i < 9; ++i) b.next_double();
  CHECK(a.next_u64() == b.next_u64());
}

TEST_CASE("planar step replays exactly from the public pieces") {
  RngStream rng(17, 1);
  PlanarPoint x{1.0, 0.0};
  for (int t = 0; t < 11; ++t) x = step_planar(x, rng).state;

  RngStream replay_rng(17, 1);
  PlanarPoint rx{1.0, 0.0};
  for (int t = 0; t < 11; ++t) {
    const Annulus a = annulus_of(rx);
    const double u1 = replay_rng.next_double();
    const double u2 = replay_rng.next_double();
    const double u3 = replay_rng.next_double();
    const double r =
        std::sqrt(a.inner * a.inner + u1 * (a.outer * a.outer - a.inner * a.inner));
    const double theta = 2.0 * kPi * u2;
    const PlanarPoint y{r * std::cos(theta), r * std::sin(theta)};
    if (u3 < accept_prob_planar(rx.radius(), y.radius())) rx = y;
  }
  CHECK(x.x == rx.x);
  CHECK(x.y == rx.y);
}

TEST_CASE("planar step consumes exactly three uniforms") {
  RngStream a(4, 9);
  RngStream b(4, 9);
  step_planar({0.4, 0.3}, a);
  for (int i = 0; i < 3; ++i) b.next_double();
  CHECK(a.next_u64() == b.next_u64());
}

TEST_CASE("proposals always land in the annulus") {
  RngStream rng(31, 0);
  int checked = 0;
  for (int i = 0; i < 100000; ++i) {
    const double r = 0.05 + 6.0 * rng.next_double();
    const double t = 2.0 * kPi * rng.next_double();
    const PlanarPoint x{r * std::cos(t), r * std::sin(t)};
    const PlanarPoint y = propose_planar(x, rng);
    const Annulus a = annulus_of(x);
    const double ry = y.radius();
    ++checked;
    REQUIRE(ry > a.inner);
    REQUIRE(ry < a.outer);
  }
  CHECK(checked == 100000);
}

TEST_CASE("annulus membership is symmetric") {
  // y in B_x iff x in B_y: both say |r_x - r_y| < 1 < r_x + r_y is not
  // even needed; the annulus depends only on radii.
  RngStream rng(32, 0);
  int failures = 0;
  for (int i = 0; i < 100000; ++i) {
    const double rx = 0.05 + 6.0 * rng.next_double();
    const double tx = 2.0 * kPi * rng.next_double();
    const PlanarPoint x{rx * std::cos(tx), rx * std::sin(tx)};
    const double ry = 0.05 + 6.0 * rng.next_double();
    const double ty = 2.0 * kPi * rng.next_double();
    const PlanarPoint y{ry * std::cos(ty), ry * std::sin(ty)};
    if (annulus_of(x).contains(y) != annulus_of(y).contains(x)) ++failures;
  }
  CHECK(failures == 0);
}

TEST_CASE("acceptance identity against the radial weight") {
  // alpha(x, y) f(r_y) = min{f(r_x), f(r_y)}, the detailed-balance form.
  RngStream rng(33, 0);
  double worst = 0.0;
  for (int i = 0; i < 100000; ++i) {
    const double rx = 0.15 + 4.35 * rng.next_double();
    const double ry = 0.15 + 4.35 * rng.next_double();
    const double lhs = accept_prob_planar(rx, ry) * f_radial(ry);
    const double rhs = std::min(f_radial(rx), f_radial(ry));
    worst = std::max(worst, std::abs(lhs - rhs));
  }
  CHECK(worst < 1e-12);
}

TEST_CASE("acceptance probability hand value") {
  // From radius 5/4 to radius 1/4 the weight ratio is 5 e^{-2.2}.
  CHECK(accept_prob_planar(1.25, 0.25) ==
        doctest::Approx(0.55401579181166942).epsilon(1e-13));
  CHECK(accept_prob_planar(0.25, 1.25) == 1.0);
  CHECK_THROWS_AS(accept_prob_planar(0.0, 1.0), std::domain_error);
}

TEST_CASE("a step from a collapsed radius is always uphill and accepted") {
  // From r = 0.01 the proposal annulus is (0.99, 1.01), where the radial
  // weight is astronomically smaller, so alpha is exactly one.
  for (uint64_t s = 0; s < 500; ++s) {
    RngStream rng(34, s);
    const PlanarStep st = step_planar({0.01, 0.0}, rng);
    CHECK(st.accepted);
    CHECK(st.alpha == 1.0);
    CHECK(st.state.radius() > 0.98);
    CHECK(st.state.radius() < 1.02);
  }
}

TEST_CASE("trace shapes and accept bookkeeping") {
  RngStream rng(8, 0);
  const SquareChainTrace t =
      trace_chain_square(center_square_state(3), {0.1, 0.1}, 25, rng);
  CHECK(t.states.size() == 26);
  CHECK(t.accepts.size() == 25);
  long total = 0;
  for (const auto& row : t.accepts)
    for (int i = 0; i < 3; ++i) total += row[i];
  long counted = 0;
  for (long c : t.accept_counts) counted += c;
  CHECK(total == counted);

  RngStream rng2(8, 1);
  const PlanarChainTrace p = trace_chain_planar({1.0, 0.0}, 40, rng2);
  CHECK(p.states.size() == 41);
  CHECK(p.accepts.size() == 40);
  long pa = 0;
  for (auto a : p.accepts) pa += a;
  CHECK(pa == p.accept_count);
}

TEST_CASE("ensemble chain j runs on stream j") {
  EnsembleSpec spec;
  spec.chains = 4;
  spec.iterations = 15;
  spec.seed = 77;
  spec.threads = 2;
  std::vector<PlanarPoint> finals(spec.chains);
  run_ensemble_planar(spec, PlanarInit::fixed({1.0, 0.0}),
                      [&](int chain, long t, const PlanarPoint& p) {
                        if (t == spec.iterations) finals[chain] = p;
                      });
  for (int j = 0; j < spec.chains; ++j) {
    RngStream rng(spec.seed, static_cast<std::uint64_t>(j));
    const PlanarChainTrace t = trace_chain_planar({1.0, 0.0}, 15, rng);
    CHECK(finals[j].x == t.states.back().x);
    CHECK(finals[j].y == t.states.back().y);
  }
}

TEST_CASE("thread count never changes results") {
  auto run_with = [](int threads) {
    EnsembleSpec spec;
    spec.chains = 9;
    spec.iterations = 30;
    spec.seed = 123;
    spec.threads = threads;
    std::vector<double> sums(spec.chains, 0.0);
    run_ensemble_square(spec, {0.1, 0.1}, SquareInit::uniform(), 3,
                        [&](int chain, long, const SquareState& s) {
                          for (const Point2& p : s)
                            sums[chain] += p.x + p.y;
                        });
    return sums;
  };
  const std::vector<double> one = run_with(1);
  const std::vector<double> three = run_with(3);
  const std::vector<double> eight = run_with(8);
  for (int j = 0; j < 9; ++j) {
    CHECK(one[j] == three[j]);
    CHECK(one[j] == eight[j]);
  }
}

TEST_CASE("random inits come from the head of the chain stream") {
  RngStream rng(55, 6);
  const SquareState s = draw_square_init(SquareInit::uniform(), 3, rng);
  RngStream manual(55, 6);
  for (int i = 0; i < 3; ++i) {
    const double x = manual.next_double();
    const double y = manual.next_double();
    CHECK(s[i].x == x);
    CHECK(s[i].y == y);
  }

  RngStream prng(55, 7);
  const PlanarPoint p = draw_planar_init(PlanarInit::uniform(2.5), prng);
  RngStream pmanual(55, 7);
  CHECK(p.x == pmanual.uniform(-2.5, 2.5));
  CHECK(p.y == pmanual.uniform(-2.5, 2.5));
}

TEST_CASE("fixed inits ignore the stream") {
  RngStream rng(1, 0);
  const SquareState s =
      draw_square_init(SquareInit::fixed(center_square_state(3)), 3, rng);
  for (const Point2& p : s) {
    CHECK(p.x == 0.5);
    CHECK(p.y == 0.5);
  }
  RngStream probe(1, 0);
  CHECK(rng.next_u64() == probe.next_u64());
}

}  // TEST_SUITE
