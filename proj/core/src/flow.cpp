#include "curvop/flow.hpp"

#include <algorithm>
#include <cmath>

#include "curvop/cones.hpp"
#include "curvop/errors.hpp"
#include "curvop/rng.hpp"

namespace curvop {

namespace {

void check_config(const FlowConfig& cfg) {
  if (!(cfg.step > 0.0)) throw InvalidInput("FlowConfig: step must be positive");
  if (!(cfg.t_max >= 0.0)) throw InvalidInput("FlowConfig: t_max must be nonnegative");
  if (!(cfg.blowup_cap > 0.0)) throw InvalidInput("FlowConfig: blowup_cap must be positive");
  if (cfg.sample_every < 1) throw InvalidInput("FlowConfig: sample_every must be >= 1");
}

std::array<double, 3> rhs(double a, double b, double c) {
  return {a * a + b * c, b * b + a * c, c * c + a * b};
}

}  // namespace

std::array<double, 3> hamilton_ode_rhs(const FlowState& s) { return rhs(s.a, s.b, s.c); }

FirstKindEigs3 state_eigs(const FlowState& s) {
  std::array<double, 3> v{s.a, s.b, s.c};
  std::sort(v.begin(), v.end());
  return FirstKindEigs3(v[0], v[1], v[2]);
}

MonotoneQuantities monotone_quantities(const FlowState& s) {
  const double S = 2.0 * (s.a + s.b + s.c);
  if (!(S > 0.0)) throw UndefinedQuantity("monotone_quantities: requires S > 0");
  const double ric2 = 2.0 * (s.a * s.a + s.b * s.b + s.c * s.c + s.a * s.b +
                             s.a * s.c + s.b * s.c);
  // 3 ric2/S^2 - 1 equals ((a-b)^2 + (b-c)^2 + (a-c)^2)/S^2; the difference
  // form is exact on the diagonal where the naive one amplifies rounding
  // noise through the square root.
  const double diff2 = (s.a - s.b) * (s.a - s.b) + (s.b - s.c) * (s.b - s.c) +
                       (s.a - s.c) * (s.a - s.c);
  const double w = std::sqrt(2.0 * diff2) / (3.0 * S);
  MonotoneQuantities q{};
  q.a_over_S = s.a / S;
  q.ab_over_S = (s.a + s.b) / S;
  q.neg_c_over_S = -s.c / S;
  q.lm_over_S = 1.0 / 6.0 - w;
  q.neg_lp_over_S = -(1.0 / 6.0 + w);
  q.neg_ric2_over_S2 = -ric2 / (S * S);
  q.S = S;
  q.ric2 = ric2;
  return q;
}

HaltReason integrate_with_observer(
    const FlowState& s0, const FlowConfig& cfg,
    const std::function<void(const FlowState&)>& observer) {
  check_config(cfg);
  if (!(s0.a <= s0.b && s0.b <= s0.c))
    throw InvalidInput("integrate: initial eigenvalues must be sorted");

  const double h = cfg.step;
  FlowState st = s0;
  observer(st);

  const auto n_steps = static_cast<long long>(std::floor(cfg.t_max / h + 1e-9));
  for (long long i = 0; i < n_steps; ++i) {
    const auto k1 = rhs(st.a, st.b, st.c);
    const auto k2 = rhs(st.a + 0.5 * h * k1[0], st.b + 0.5 * h * k1[1], st.c + 0.5 * h * k1[2]);
    const auto k3 = rhs(st.a + 0.5 * h * k2[0], st.b + 0.5 * h * k2[1], st.c + 0.5 * h * k2[2]);
    const auto k4 = rhs(st.a + h * k3[0], st.b + h * k3[1], st.c + h * k3[2]);
    FlowState next;
    next.a = st.a + h / 6.0 * (k1[0] + 2.0 * k2[0] + 2.0 * k3[0] + k4[0]);
    next.b = st.b + h / 6.0 * (k1[1] + 2.0 * k2[1] + 2.0 * k3[1] + k4[1]);
    next.c = st.c + h / 6.0 * (k1[2] + 2.0 * k2[2] + 2.0 * k3[2] + k4[2]);
    next.t = s0.t + double(i + 1) * h;

    if (!std::isfinite(next.a) || !std::isfinite(next.b) || !std::isfinite(next.c) ||
        std::max({std::abs(next.a), std::abs(next.b), std::abs(next.c)}) > cfg.blowup_cap)
      return HaltReason::Blowup;

    const double violation = std::max({next.a - next.b, next.b - next.c, 0.0});
    if (violation > 1e-6)
      throw IntegrationUnstable("integrate: eigenvalue ordering broke; reduce the step");

    st = next;
    observer(st);
  }
  return HaltReason::TMax;
}

FlowTrace integrate(const FlowState& s0, const FlowConfig& cfg) {
  FlowTrace trace;
  trace.min_step_delta.fill(std::numeric_limits<double>::infinity());

  std::optional<MonotoneQuantities> prev;
  long long step_index = -1;
  FlowSample last{};
  bool have_last = false;

  trace.halt_reason = integrate_with_observer(s0, cfg, [&](const FlowState& st) {
    ++step_index;
    trace.worst_ordering_violation = std::max(
        trace.worst_ordering_violation, std::max({st.a - st.b, st.b - st.c, 0.0}));

    std::optional<MonotoneQuantities> cur;
    if (2.0 * (st.a + st.b + st.c) > 0.0) cur = monotone_quantities(st);
    if (prev && cur) {
      const auto p = prev->monotone();
      const auto q = cur->monotone();
      for (std::size_t j = 0; j < 6; ++j)
        trace.min_step_delta[j] = std::min(trace.min_step_delta[j], q[j] - p[j]);
    }
    prev = cur;

    last = FlowSample{st, cur};
    have_last = true;
    if (step_index % cfg.sample_every == 0) {
      trace.samples.push_back(last);
      have_last = false;
    }
  });
  if (have_last) trace.samples.push_back(last);
  return trace;
}

namespace {

PreservationReport run_preservation(
    double alpha, int n_samples, const FlowConfig& cfg, std::uint64_t seed, double tol,
    const std::function<double(const FirstKindEigs3&, double)>& margin) {
  if (n_samples <= 0) throw InvalidInput("preservation_experiment: need n_samples > 0");
  check_config(cfg);

  PreservationReport rep;
  rep.alpha = alpha;
  rep.samples_requested = n_samples;
  rep.tol = tol;

  for (int i = 0; i < n_samples; ++i) {
    Rng rng(derive_seed(seed, std::uint64_t(i)));
    std::optional<FirstKindEigs3> start;
    for (int attempt = 0; attempt < 200000; ++attempt) {
      const auto t = rng.sorted_triple(-1.0, 1.0);
      if (!(t[0] + t[1] + t[2] > 0.0)) continue;
      FirstKindEigs3 e(t[0], t[1], t[2]);
      if (margin(e, alpha) < 0.0) continue;
      start = e;
      break;
    }
    if (!start) continue;
    ++rep.samples_accepted;

    double q0 = 0.0;
    bool first = true;
    double min_delta = 0.0;
    integrate_with_observer(
        FlowState{0.0, start->a, start->b, start->c}, cfg, [&](const FlowState& st) {
          const double S = 2.0 * (st.a + st.b + st.c);
          if (!(S > 0.0)) return;
          const double q = margin(state_eigs(st), alpha) / S;
          if (first) {
            q0 = q;
            first = false;
            return;
          }
          min_delta = std::min(min_delta, q - q0);
        });
    rep.worst_drop = std::min(rep.worst_drop, min_delta);
  }
  if (rep.samples_accepted == 0)
    throw EmptySample("preservation_experiment: rejection sampling accepted nothing");
  rep.pass = rep.worst_drop >= -tol;
  return rep;
}

}  // namespace

PreservationReport preservation_experiment(double alpha, int n_samples,
                                           const FlowConfig& cfg, std::uint64_t seed,
                                           double tol) {
  if (!(alpha >= 1.0 && alpha <= 5.0))
    throw InvalidInput("preservation_experiment: alpha outside [1, 5]");
  return run_preservation(alpha, n_samples, cfg, seed, tol,
                          [](const FirstKindEigs3& e, double al) { return f_alpha(e, al); });
}

PreservationReport first_kind_preservation_experiment(double alpha, int n_samples,
                                                      const FlowConfig& cfg,
                                                      std::uint64_t seed, double tol) {
  if (!(alpha >= 1.0 && alpha <= 3.0))
    throw InvalidInput("first_kind_preservation_experiment: alpha outside [1, 3]");
  return run_preservation(alpha, n_samples, cfg, seed, tol,
                          [](const FirstKindEigs3& e, double al) { return h_alpha(e, al); });
}

}  // namespace curvop
