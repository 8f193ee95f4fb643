#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <vector>

#include "curvop/spectra.hpp"

namespace curvop {

/// Point on a Hamilton-ODE trajectory: first-kind eigenvalues at time t.
struct FlowState {
  double t = 0.0;
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
};

struct FlowConfig {
  double step = 1e-3;
  double t_max = 10.0;
  /// Integration halts once max(|a|,|b|,|c|) would exceed this.
  double blowup_cap = 1e6;
  /// Every k-th step lands in the sample list (step 0 and the final step
  /// are always included).
  int sample_every = 1;
};

/// Scale-normalized quantities that are nondecreasing along the flow while
/// S > 0. ric2 is |Ric|^2 = 2(a^2+b^2+c^2+ab+ac+bc).
struct MonotoneQuantities {
  double a_over_S;
  double ab_over_S;
  double neg_c_over_S;
  double lm_over_S;
  double neg_lp_over_S;
  double neg_ric2_over_S2;
  double S;
  double ric2;

  std::array<double, 6> monotone() const {
    return {a_over_S, ab_over_S, neg_c_over_S, lm_over_S, neg_lp_over_S,
            neg_ric2_over_S2};
  }
};

enum class HaltReason { TMax, Blowup };

struct FlowSample {
  FlowState state;
  std::optional<MonotoneQuantities> monotone;  // present when S > 0
};

struct FlowTrace {
  std::vector<FlowSample> samples;
  HaltReason halt_reason = HaltReason::TMax;
  /// Per-quantity minimum of the one-step increment, over all integration
  /// steps whose endpoints both have S > 0. +inf when no such step exists.
  std::array<double, 6> min_step_delta{};
  /// Largest observed max(a-b, b-c, 0) over the whole trace.
  double worst_ordering_violation = 0.0;

  bool monotone_ok(double per_step_tol) const {
    for (double d : min_step_delta)
      if (d < -per_step_tol) return false;
    return true;
  }
};

/// Right-hand side of Hamilton's ODE on first-kind eigenvalues:
/// (a^2 + bc, b^2 + ac, c^2 + ab).
std::array<double, 3> hamilton_ode_rhs(const FlowState& s);

/// The six normalized quantities plus S and |Ric|^2. The extreme-eigenvalue
/// ratios use the identity lambda/S = 1/6 +- sqrt(2(3 ric2/S^2 - 1))/3.
/// Throws UndefinedQuantity unless S > 0.
MonotoneQuantities monotone_quantities(const FlowState& s);

/// Classical fixed-step RK4. The observer sees the initial state and every
/// accepted step. A proposed state beyond blowup_cap (or non-finite) is
/// discarded and integration halts with HaltReason::Blowup. Throws
/// IntegrationUnstable if the eigenvalue ordering breaks by more than 1e-6.
HaltReason integrate_with_observer(
    const FlowState& s0, const FlowConfig& cfg,
    const std::function<void(const FlowState&)>& observer);

/// Runs the integrator, collecting samples and per-step monotonicity data.
FlowTrace integrate(const FlowState& s0, const FlowConfig& cfg);

struct PreservationReport {
  double alpha = 0.0;
  int samples_requested = 0;
  int samples_accepted = 0;
  /// min over samples and time of q(t) - q(0), q the normalized margin.
  double worst_drop = std::numeric_limits<double>::infinity();
  double tol = 0.0;
  bool pass = false;
};

/// Samples sorted triples uniformly from [-1,1]^3, keeping those with
/// f_alpha >= 0 and S > 0, integrates each and reports the worst drop of
/// f_alpha/S below its initial value; PASS iff that minimum >= -tol.
/// Deterministic for a fixed seed (per-sample derived streams).
PreservationReport preservation_experiment(double alpha, int n_samples,
                                           const FlowConfig& cfg,
                                           std::uint64_t seed,
                                           double tol = 1e-7);

/// Same experiment for the first-kind margin h_alpha, alpha in [1, 3].
PreservationReport first_kind_preservation_experiment(double alpha, int n_samples,
                                                      const FlowConfig& cfg,
                                                      std::uint64_t seed,
                                                      double tol = 1e-7);

/// Flow states carry rounding noise; sort before forming eigenvalues.
FirstKindEigs3 state_eigs(const FlowState& s);

}  // namespace curvop
