#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "curvop/cones.hpp"
#include "curvop/errors.hpp"
#include "curvop/flow.hpp"
#include "curvop/rng.hpp"
#include "curvop/verify.hpp"

using namespace curvop;

TEST_CASE("ode right-hand side") {
  const auto sphere = hamilton_ode_rhs({0, 1, 1, 1});
  CHECK(sphere == std::array<double, 3>{2, 2, 2});
  CHECK(hamilton_ode_rhs({0, 0, 0, 1}) == std::array<double, 3>{0, 0, 1});
  CHECK(hamilton_ode_rhs({0, -1, 0, 1}) == std::array<double, 3>{1, -1, 1});
}

TEST_CASE("round sphere follows a(t) = 1/(1-2t)") {
  FlowConfig cfg;
  cfg.step = 1e-4;
  cfg.t_max = 0.45;
  const FlowTrace trace = integrate({0, 1, 1, 1}, cfg);
  CHECK(trace.halt_reason == HaltReason::TMax);
  double worst = 0.0;
  for (const auto& s : trace.samples)
    worst = std::max(worst, std::abs(s.state.a - 1.0 / (1.0 - 2.0 * s.state.t)));
  CHECK(worst < 1e-6);
}

TEST_CASE("origin is a fixed point") {
  FlowConfig cfg;
  cfg.step = 1e-3;
  cfg.t_max = 0.1;
  const FlowTrace trace = integrate({0, 0, 0, 0}, cfg);
  CHECK(trace.halt_reason == HaltReason::TMax);
  for (const auto& s : trace.samples) {
    CHECK(s.state.a == 0.0);
    CHECK(s.state.b == 0.0);
    CHECK(s.state.c == 0.0);
    CHECK_FALSE(s.monotone.has_value());
  }
}

TEST_CASE("normalized quantities at reference states") {
  {
    const auto q = monotone_quantities({0, 1, 1, 1});
    CHECK(q.a_over_S == doctest::Approx(1.0 / 6.0).epsilon(1e-15));
    CHECK(q.lm_over_S == doctest::Approx(1.0 / 6.0).epsilon(1e-15));
    CHECK(q.ric2 == 12.0);
  }
  {
    const auto q = monotone_quantities({0, 0, 0, 1});
    CHECK(q.a_over_S == 0.0);
    CHECK(q.lm_over_S == doctest::Approx(-1.0 / 6.0).epsilon(1e-14));
    CHECK(q.neg_lp_over_S == doctest::Approx(-0.5).epsilon(1e-14));
  }
  {
    const auto q = monotone_quantities({0, -1, 1, 1});
    CHECK(q.lm_over_S == doctest::Approx(-0.5).epsilon(1e-14));
  }
  CHECK_THROWS_AS(monotone_quantities({0, -1, -1, -1}), UndefinedQuantity);
  CHECK_THROWS_AS(monotone_quantities({0, -1, 0, 1}), UndefinedQuantity);
}

TEST_CASE("normalized extreme ratios match the direct eigenvalues") {
  Rng rng(19);
  for (int rep = 0; rep < 500; ++rep) {
    const auto t = rng.sorted_triple(-1.0, 1.0);
    if (!(t[0] + t[1] + t[2] > 0.0)) continue;
    const FlowState st{0, t[0], t[1], t[2]};
    const auto q = monotone_quantities(st);
    const auto [lm, lp] = extreme_eigenvalues_3d(state_eigs(st));
    CHECK(q.lm_over_S == doctest::Approx(lm / q.S).epsilon(1e-12));
    CHECK(-q.neg_lp_over_S == doctest::Approx(lp / q.S).epsilon(1e-12));
  }
}

TEST_CASE("six quantities are nondecreasing along random trajectories") {
  FlowConfig cfg;
  cfg.step = 1e-3;
  cfg.t_max = 50.0;
  const auto res = check_flow_monotone(100, 7, cfg);
  CHECK(res.pass);
  CHECK(res.worst >= -1e-8);
}

TEST_CASE("a_over_S is nondecreasing from the cylinder state") {
  FlowConfig cfg;
  cfg.step = 1e-4;
  cfg.t_max = 2.0;
  const FlowTrace trace = integrate({0, 0, 0, 1}, cfg);
  CHECK(trace.min_step_delta[0] >= -1e-8);
}

TEST_CASE("dS/dt matches |Ric|^2 at second order") {
  const auto res = check_ds_dt_order(1e-3, 1.9);
  CHECK(res.pass);
  // genuinely second order, not first
  CHECK(res.worst > 1.9);
  CHECK(res.worst < 2.5);
}

TEST_CASE("d/dt (a/S) matches its closed form at second order") {
  const auto res = check_a_over_s_derivative(1e-3, 1.9);
  CHECK(res.pass);
}

TEST_CASE("ordering is preserved along random trajectories") {
  Rng rng(13);
  FlowConfig cfg;
  cfg.step = 1e-3;
  cfg.t_max = 20.0;
  cfg.sample_every = 1 << 30;
  for (int rep = 0; rep < 50; ++rep) {
    const auto t = rng.sorted_triple(-1.0, 1.0);
    const FlowTrace trace = integrate({0, t[0], t[1], t[2]}, cfg);
    CHECK(trace.worst_ordering_violation <= 1e-10);
  }
}

TEST_CASE("blowup halts and keeps only capped states") {
  FlowConfig cfg;
  cfg.step = 1e-3;
  cfg.t_max = 10.0;
  cfg.blowup_cap = 1e4;
  const FlowTrace trace = integrate({0, 1, 1, 1}, cfg);
  CHECK(trace.halt_reason == HaltReason::Blowup);
  for (const auto& s : trace.samples) {
    CHECK(std::abs(s.state.a) <= 1e4);
    CHECK(std::abs(s.state.c) <= 1e4);
  }
}

TEST_CASE("preservation experiments") {
  FlowConfig cfg;
  cfg.step = 1e-3;
  cfg.t_max = 10.0;

  const auto five = preservation_experiment(5.0, 50, cfg, 1);
  CHECK(five.pass);
  CHECK(five.samples_accepted == 50);
  CHECK(std::abs(five.worst_drop) < 1e-12);  // f_5/S is constant

  const auto ten_thirds = preservation_experiment(10.0 / 3.0, 200, cfg, 42);
  CHECK(ten_thirds.pass);

  const auto h_first = first_kind_preservation_experiment(2.0, 50, cfg, 3);
  CHECK(h_first.pass);
}

TEST_CASE("flow input validation") {
  FlowConfig bad;
  bad.step = 0.0;
  CHECK_THROWS_AS(integrate({0, 0, 0, 1}, bad), InvalidInput);
  FlowConfig cfg;
  CHECK_THROWS_AS(integrate({0, 1, 0, 0}, cfg), InvalidInput);
  CHECK_THROWS_AS(preservation_experiment(0.5, 10, cfg, 0), InvalidInput);
  CHECK_THROWS_AS(preservation_experiment(2.0, 0, cfg, 0), InvalidInput);
  CHECK_THROWS_AS(first_kind_preservation_experiment(4.0, 10, cfg, 0), InvalidInput);
}
