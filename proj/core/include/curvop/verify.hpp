#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "curvop/flow.hpp"
#include "curvop/rng.hpp"
#include "curvop/spectra.hpp"

namespace curvop {

/// Outcome of one property sweep. `worst` is the largest observed gap (or a
/// violation count where no gap applies); `note` says which.
struct CheckResult {
  std::string name;
  bool pass = false;
  double worst = 0.0;
  long long samples = 0;
  std::string note;
};

/// Random Schouten spectrum over a random composition of n. variant 0:
/// plain; 1: one eigenvalue exactly zero; 2: try to force sum n_i/mu_i = 0.
SchoutenSpectrum random_schouten(Rng& rng, std::size_t n, int variant = 0);

/// spectrum_3d vs the dense oracle over sorted triples in [-range, range]^3;
/// a deterministic slice of the samples is degenerate (a=b, b=c, a=b=c).
CheckResult check_spectrum3d_oracle(long long samples, std::uint64_t seed,
                                    double tol = 1e-8, double range = 10.0);

/// lambda_- <= a and lambda_+ >= c with 1e-12 slack.
CheckResult check_extreme_bounds(long long samples, std::uint64_t seed,
                                 double range = 10.0);

/// spectrum_general vs the dense oracle for n in [n_min, n_max], including
/// zero-eigenvalue and zero-sum secular branches; also certifies the total
/// multiplicity (n-1)(n+2)/2 and the [2 mu_1, 2 mu_k] range bound.
CheckResult check_spectrum_general_oracle(long long samples_per_n, std::uint64_t seed,
                                          double tol = 1e-8, std::size_t n_min = 2,
                                          std::size_t n_max = 7);

/// The two named secular branches: sum n_i/mu_i = 0 (mu = {(-1,2),(1,2)},
/// n = 4) and a zero Schouten eigenvalue; both against the oracle.
CheckResult check_secular_special_branches(double tol = 1e-8);

/// For strictly sorted triples the two secular roots of the 3D Schouten
/// spectrum equal the extreme eigenvalues, within tol.
CheckResult check_secular_vs_extremes(long long samples, std::uint64_t seed,
                                      double tol = 1e-9);

/// The five-implication chain between alpha-conditions and curvature signs.
CheckResult check_cone_chain(long long samples, std::uint64_t seed);

/// Polynomial equivalents of the 10/3- and 4-nonnegativity conditions agree
/// with the eigenvalue sums.
CheckResult check_cone_closed_forms(long long samples, std::uint64_t seed);

/// f_alpha equals the weighted partial eigenvalue sum, within tol, on a
/// fixed grid of alphas covering all branches.
CheckResult check_f_alpha_partial_sum(long long samples, std::uint64_t seed,
                                      double tol = 1e-10);

/// The four boundary examples at eps in {0.01, 0.001}: extreme eigenvalues
/// match their closed forms to 1e-12, the stated condition sits on its
/// boundary, and the converse fails.
CheckResult check_sharpness_examples();

/// f_{3+delta} >= 0 and S > 0 imply
///   min Ric >= bound_factor * pinching_bound(delta) * S - 1e-10
/// for delta in {0, 0.1, 0.2, 1/3}. The nominal constant (factor 1) is not
/// attainable: the family a = b, c = 10a/(1-3 delta) sits on the hypothesis
/// boundary with min Ric exactly half the nominal bound, so the sharp
/// invariant uses factor 1/2 (the default).
CheckResult check_pinching(long long samples, std::uint64_t seed,
                           double bound_factor = 0.5);

/// Nonneg verdict on e equals the nonpos verdict on the negated operator.
CheckResult check_sign_symmetry(long long samples, std::uint64_t seed);

/// All six normalized quantities are nondecreasing along random trajectories
/// with S > 0, within step_tol per step; ordering stays sorted.
CheckResult check_flow_monotone(long long samples, std::uint64_t seed,
                                const FlowConfig& cfg, double step_tol = 1e-8);

/// Round-sphere trajectory matches a(t) = 1/(1 - 2t) up to t_end.
CheckResult check_round_sphere(double h = 1e-4, double t_end = 0.45,
                               double tol = 1e-6);

/// Centered finite differences of S converge to |Ric|^2 at second order
/// between h and h/2; `worst` reports the measured order.
CheckResult check_ds_dt_order(double h = 1e-3, double min_order = 1.95);

/// d/dt(a/S) matches its closed form 2(b^2(c-a)+c^2(b-a))/S^2 at second
/// order in the step.
CheckResult check_a_over_s_derivative(double h = 1e-3, double min_order = 1.95);

/// preservation_experiment over one alpha grid for f_alpha and one for
/// h_alpha.
std::vector<CheckResult> check_preservation_sweep(
    const std::vector<double>& f_alphas, const std::vector<double>& h_alphas,
    int samples, std::uint64_t seed, const FlowConfig& cfg, double tol = 1e-7);

/// Suite bundles used by the command-line `verify` subcommand.
std::vector<CheckResult> run_spectra_suite(long long samples, std::uint64_t seed);
std::vector<CheckResult> run_cones_suite(long long samples, std::uint64_t seed);
std::vector<CheckResult> run_flow_suite(long long samples, std::uint64_t seed);

}  // namespace curvop
