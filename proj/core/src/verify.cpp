#include "curvop/verify.hpp"

#include <algorithm>
#include <cmath>

#include "curvop/cones.hpp"
#include "curvop/errors.hpp"
#include "curvop/numerics.hpp"
#include "curvop/oracle.hpp"
#include "curvop/tensor.hpp"

namespace curvop {

namespace {

FirstKindEigs3 triple_to_eigs(const std::array<double, 3>& t) {
  return FirstKindEigs3(t[0], t[1], t[2]);
}

double closed_form_example3(double eps) {
  return 2.0 / 3.0 * (std::sqrt(1.0 + 3.0 * eps * eps + 3.0 * eps) - (1.0 - eps)) /
         (1.0 + eps);
}

}  // namespace

SchoutenSpectrum random_schouten(Rng& rng, std::size_t n, int variant) {
  std::vector<int> mults;
  int remaining = int(n);
  while (remaining > 0) {
    const int m = rng.uniform_int(1, remaining);
    mults.push_back(m);
    remaining -= m;
  }
  const std::size_t k = mults.size();
  std::vector<double> mus(k);
  double v = rng.uniform(-3.0, -1.0);
  for (std::size_t i = 0; i < k; ++i) {
    mus[i] = v;
    v += rng.uniform(0.15, 1.2);
  }
  if (variant == 1 && k >= 2) {
    const std::size_t p = std::size_t(rng.uniform_int(0, int(k) - 1));
    const double shift = mus[p];
    for (double& m : mus) m -= shift;  // mus[p] lands exactly on zero
  } else if (variant == 2 && k >= 2) {
    double partial = 0.0;
    for (std::size_t i = 0; i + 1 < k; ++i) partial += double(mults[i]) / mus[i];
    if (partial < 0.0) {
      const double forced = -double(mults[k - 1]) / partial;
      if (forced > mus[k - 2] + 0.05) mus[k - 1] = forced;
    }
  }
  std::vector<SchoutenSpectrum::Entry> entries(k);
  for (std::size_t i = 0; i < k; ++i) entries[i] = {mus[i], mults[i]};
  return SchoutenSpectrum(n, std::move(entries));
}

CheckResult check_spectrum3d_oracle(long long samples, std::uint64_t seed, double tol,
                                    double range) {
  CheckResult res{"spectrum3d-oracle-equivalence", true, 0.0, samples,
                  "max |analytic - numeric| elementwise"};
  Rng rng(seed);
  for (long long i = 0; i < samples; ++i) {
    auto t = rng.sorted_triple(-range, range);
    if (i % 10 == 3) t[1] = t[0];
    if (i % 10 == 7) t[1] = t[2];
    if (i % 100 == 50) t[1] = t[2] = t[0];
    const FirstKindEigs3 e = triple_to_eigs(t);
    const auto cmp = compare_spectra(spectrum_3d(e), numeric_spectrum_3d(e), tol);
    res.worst = std::max(res.worst, cmp.max_abs_gap);
    if (!cmp.pass) res.pass = false;
  }
  return res;
}

CheckResult check_extreme_bounds(long long samples, std::uint64_t seed, double range) {
  CheckResult res{"extreme-eigenvalue-bounds", true, 0.0, samples,
                  "max of (lambda_- - a) and (c - lambda_+), slack 1e-12"};
  Rng rng(seed);
  double worst = -std::numeric_limits<double>::infinity();
  for (long long i = 0; i < samples; ++i) {
    const FirstKindEigs3 e = triple_to_eigs(rng.sorted_triple(-range, range));
    const auto [lm, lp] = extreme_eigenvalues_3d(e);
    worst = std::max({worst, lm - e.a, e.c - lp});
  }
  res.worst = worst;
  res.pass = worst <= 1e-12;
  return res;
}

CheckResult check_spectrum_general_oracle(long long samples_per_n, std::uint64_t seed,
                                          double tol, std::size_t n_min,
                                          std::size_t n_max) {
  CheckResult res{"spectrum-general-oracle-equivalence", true, 0.0,
                  samples_per_n * (long long)(n_max - n_min + 1),
                  "max gap; multiplicity and range certified each sample"};
  for (std::size_t n = n_min; n <= n_max; ++n) {
    Rng rng(derive_seed(seed, n));
    for (long long i = 0; i < samples_per_n; ++i) {
      int variant = 0;
      if (i % 13 == 5) variant = 1;
      if (i % 17 == 9) variant = 2;
      const SchoutenSpectrum s = random_schouten(rng, n, variant);
      const SecondKindSpectrum analytic = spectrum_general(s);
      if (analytic.total_multiplicity() != int((n - 1) * (n + 2) / 2)) {
        res.pass = false;
        res.note = "multiplicity total mismatch";
        continue;
      }
      const double lo = 2.0 * s.entries().front().mu - 1e-9;
      const double hi = 2.0 * s.entries().back().mu + 1e-9;
      for (const auto& entry : analytic.entries())
        if (entry.value < lo || entry.value > hi) {
          res.pass = false;
          res.note = "value outside [2 mu_1, 2 mu_k]";
        }
      try {
        const auto cmp = compare_spectra(analytic, numeric_spectrum_general(s.expanded()), tol);
        res.worst = std::max(res.worst, cmp.max_abs_gap);
        if (!cmp.pass) res.pass = false;
      } catch (const ShapeMismatch&) {
        res.pass = false;
        res.note = "shape mismatch against oracle";
      }
    }
  }
  return res;
}

CheckResult check_secular_special_branches(double tol) {
  CheckResult res{"secular-special-branches", true, 0.0, 2, "max gap over both branches"};

  // sum n_i/mu_i = 0: spectrum {-2 x2, 0 x5, 2 x2} in dimension 4.
  const SchoutenSpectrum zero_sum(4, {{-1.0, 2}, {1.0, 2}});
  const auto roots = secular_roots(zero_sum);
  if (roots.size() != 1 || roots[0].first != 0.0) res.pass = false;
  const auto cmp1 =
      compare_spectra(spectrum_general(zero_sum), numeric_spectrum_general(zero_sum.expanded()), tol);
  res.worst = std::max(res.worst, cmp1.max_abs_gap);
  if (!cmp1.pass) res.pass = false;

  // zero Schouten eigenvalue: f(0) finite, one root per breakpoint interval.
  const SchoutenSpectrum with_zero(3, {{0.0, 2}, {1.0, 1}});
  const auto roots2 = secular_roots(with_zero);
  if (roots2.size() != 1) res.pass = false;
  if (!roots2.empty()) res.worst = std::max(res.worst, std::abs(roots2[0].first - 4.0 / 3.0));
  const auto cmp2 =
      compare_spectra(spectrum_general(with_zero), numeric_spectrum_general(with_zero.expanded()), tol);
  res.worst = std::max(res.worst, cmp2.max_abs_gap);
  if (!cmp2.pass) res.pass = false;

  res.pass = res.pass && res.worst < tol;
  return res;
}

CheckResult check_secular_vs_extremes(long long samples, std::uint64_t seed, double tol) {
  CheckResult res{"secular-roots-match-extremes", true, 0.0, samples,
                  "max |root - extreme eigenvalue| for distinct Schouten data"};
  Rng rng(seed);
  for (long long i = 0; i < samples; ++i) {
    auto t = rng.sorted_triple(-5.0, 5.0);
    if (t[1] - t[0] < 1e-3 || t[2] - t[1] < 1e-3) continue;  // keep Schouten data distinct
    const FirstKindEigs3 e = triple_to_eigs(t);
    const auto mus = schouten_eigenvalues_3d(e);
    const auto s = SchoutenSpectrum(3, {{mus[0], 1}, {mus[1], 1}, {mus[2], 1}});
    const auto roots = secular_roots(s);
    if (roots.size() != 2) {
      res.pass = false;
      continue;
    }
    const auto [lm, lp] = extreme_eigenvalues_3d(e);
    res.worst = std::max({res.worst, std::abs(roots[0].first - lm),
                          std::abs(roots[1].first - lp)});
  }
  res.pass = res.pass && res.worst < tol;
  return res;
}

CheckResult check_cone_chain(long long samples, std::uint64_t seed) {
  CheckResult res{"cone-implication-chain", true, 0.0, samples, "violation count"};
  Rng rng(seed);
  long long violations = 0;
  for (long long i = 0; i < samples; ++i) {
    const FirstKindEigs3 e = triple_to_eigs(rng.sorted_triple(-1.0, 1.0));
    const bool two_nn = alpha_partial_sum(spectrum_3d(e), 2.0) >= 0.0;
    const bool sec = e.a >= 0.0;
    const bool ten_thirds = f_alpha(e, 10.0 / 3.0) >= 0.0;
    const bool ric = e.a + e.b >= 0.0;
    const bool four = f_alpha(e, 4.0) >= 0.0;
    const bool five = f_alpha(e, 5.0) >= 0.0;
    const bool scal = e.a + e.b + e.c >= 0.0;
    if (two_nn && !sec) ++violations;
    if (sec && !ten_thirds) ++violations;
    if (ten_thirds && !ric) ++violations;
    if (ric && !four) ++violations;
    if (five != scal) ++violations;
  }
  res.worst = double(violations);
  res.pass = violations == 0;
  return res;
}

CheckResult check_cone_closed_forms(long long samples, std::uint64_t seed) {
  CheckResult res{"cone-closed-form-equivalence", true, 0.0, samples, "disagreement count"};
  Rng rng(seed);
  long long bad = 0;
  for (long long i = 0; i < samples; ++i) {
    const FirstKindEigs3 e = triple_to_eigs(rng.sorted_triple(-1.0, 1.0));
    const ConeReport rep = condition_report(e, 10.0 / 3.0);
    if (rep.ten_thirds_nonneg != rep.ten_thirds_closed_form) ++bad;
    if (rep.four_nonneg != rep.four_closed_form) ++bad;
  }
  res.worst = double(bad);
  res.pass = bad == 0;
  return res;
}

CheckResult check_f_alpha_partial_sum(long long samples, std::uint64_t seed, double tol) {
  CheckResult res{"f-alpha-equals-partial-sum", true, 0.0, samples,
                  "max |f_alpha - partial sum| over the alpha grid"};
  const double alphas[] = {1.0, 1.5, 2.0, 2.5, 3.0, 10.0 / 3.0, 3.5, 4.0, 4.5, 5.0};
  Rng rng(seed);
  for (long long i = 0; i < samples; ++i) {
    const FirstKindEigs3 e = triple_to_eigs(rng.sorted_triple(-1.0, 1.0));
    const SecondKindSpectrum spec = spectrum_3d(e);
    for (const double alpha : alphas)
      res.worst = std::max(res.worst,
                           std::abs(f_alpha(e, alpha) - alpha_partial_sum(spec, alpha)));
  }
  res.pass = res.worst < tol;
  return res;
}

CheckResult check_sharpness_examples() {
  CheckResult res{"sharpness-examples", true, 0.0, 8,
                  "max closed-form gap; converse violations required"};
  for (const double eps : {0.01, 0.001}) {
    {
      // (2+2eps)-nonnegative without nonnegative sectional curvature.
      const FirstKindEigs3 e(-eps, 1.0, 1.0);
      const auto [lm, lp] = extreme_eigenvalues_3d(e);
      res.worst = std::max({res.worst, std::abs(lm + eps), std::abs(lp - (4.0 + eps) / 3.0)});
      res.worst = std::max(res.worst, std::abs(f_alpha(e, 2.0 + 2.0 * eps)));
      if (e.a >= 0.0) res.pass = false;
    }
    {
      // Nonnegative sectional curvature, boundary of 10/3-nonnegativity.
      const FirstKindEigs3 e(0.0, 0.0, 1.0);
      const auto [lm, lp] = extreme_eigenvalues_3d(e);
      res.worst = std::max({res.worst, std::abs(lm + 1.0 / 3.0), std::abs(lp - 1.0)});
      res.worst = std::max(res.worst, std::abs(f_alpha(e, 10.0 / 3.0)));
      if (!(e.a >= 0.0)) res.pass = false;
      if (!(f_alpha(e, 10.0 / 3.0 - 0.05) < 0.0)) res.pass = false;
    }
    {
      // (10/3 + delta(eps))-nonnegative without nonnegative Ricci.
      const FirstKindEigs3 e(-eps, 0.0, 1.0 + eps);
      const auto [lm, lp] = extreme_eigenvalues_3d(e);
      const double root = 2.0 / 3.0 * std::sqrt(1.0 + 3.0 * eps * eps + 3.0 * eps);
      res.worst = std::max({res.worst, std::abs(lm - (1.0 / 3.0 - root)),
                            std::abs(lp - (1.0 / 3.0 + root))});
      res.worst = std::max(res.worst,
                           std::abs(f_alpha(e, 10.0 / 3.0 + closed_form_example3(eps))));
      if (e.a + e.b >= 0.0) res.pass = false;
    }
    {
      // Nonnegative Ricci, boundary of 4-nonnegativity.
      const FirstKindEigs3 e(-1.0, 1.0, 1.0);
      const auto [lm, lp] = extreme_eigenvalues_3d(e);
      res.worst = std::max({res.worst, std::abs(lm + 1.0), std::abs(lp - 5.0 / 3.0)});
      res.worst = std::max(res.worst, std::abs(f_alpha(e, 4.0)));
      if (!(e.a + e.b >= 0.0)) res.pass = false;
      if (!(f_alpha(e, 4.0 - 0.05) < 0.0)) res.pass = false;
    }
  }
  res.pass = res.pass && res.worst <= 1e-12;
  return res;
}

CheckResult check_pinching(long long samples, std::uint64_t seed, double bound_factor) {
  CheckResult res{"ricci-pinching", true, 0.0, samples,
                  "violation count over delta in {0, 0.1, 0.2, 1/3}, slack 1e-10"};
  const double deltas[] = {0.0, 0.1, 0.2, 1.0 / 3.0};
  Rng rng(seed);
  long long violations = 0;
  for (long long i = 0; i < samples; ++i) {
    const FirstKindEigs3 e = triple_to_eigs(rng.sorted_triple(-1.0, 1.0));
    const double s = 2.0 * (e.a + e.b + e.c);
    for (const double delta : deltas) {
      if (!(s > 0.0)) continue;
      if (f_alpha(e, 3.0 + delta) < 0.0) continue;
      if (e.a + e.b < bound_factor * pinching_bound(delta) * s - 1e-10) ++violations;
    }
  }
  res.worst = double(violations);
  res.pass = violations == 0;
  return res;
}

CheckResult check_sign_symmetry(long long samples, std::uint64_t seed) {
  CheckResult res{"sign-symmetry", true, 0.0, samples, "disagreement count"};
  const double alphas[] = {1.0, 2.0, 10.0 / 3.0, 4.0, 5.0};
  Rng rng(seed);
  long long bad = 0;
  for (long long i = 0; i < samples; ++i) {
    const FirstKindEigs3 e = triple_to_eigs(rng.sorted_triple(-1.0, 1.0));
    const FirstKindEigs3 neg(-e.c, -e.b, -e.a);
    for (const double alpha : alphas) {
      const bool nonneg = alpha_condition_holds(e, {alpha, ConeMode::Nonneg});
      const bool nonpos_of_neg = alpha_condition_holds(neg, {alpha, ConeMode::Nonpos});
      if (nonneg != nonpos_of_neg) ++bad;
    }
  }
  res.worst = double(bad);
  res.pass = bad == 0;
  return res;
}

CheckResult check_flow_monotone(long long samples, std::uint64_t seed,
                                const FlowConfig& cfg, double step_tol) {
  CheckResult res{"flow-monotone-quantities", true, 0.0, samples,
                  "worst per-step decrement (negative = decrease)"};
  Rng rng(seed);
  double worst = 0.0;
  double worst_order = 0.0;
  for (long long i = 0; i < samples; ++i) {
    std::array<double, 3> t{};
    do {
      t = rng.sorted_triple(-1.0, 1.0);
    } while (!(t[0] + t[1] + t[2] > 0.0));
    FlowConfig c = cfg;
    c.sample_every = 1 << 30;  // per-step data only
    const FlowTrace trace = integrate(FlowState{0.0, t[0], t[1], t[2]}, c);
    for (const double d : trace.min_step_delta)
      if (std::isfinite(d)) worst = std::min(worst, d);
    worst_order = std::max(worst_order, trace.worst_ordering_violation);
  }
  res.worst = worst;
  res.pass = worst >= -step_tol && worst_order <= 1e-10;
  return res;
}

CheckResult check_round_sphere(double h, double t_end, double tol) {
  CheckResult res{"round-sphere-closed-form", true, 0.0, 1,
                  "max |a(t) - 1/(1-2t)|"};
  FlowConfig cfg;
  cfg.step = h;
  cfg.t_max = t_end;
  cfg.blowup_cap = 1e9;
  const FlowTrace trace = integrate(FlowState{0.0, 1.0, 1.0, 1.0}, cfg);
  for (const auto& s : trace.samples)
    res.worst = std::max(res.worst, std::abs(s.state.a - 1.0 / (1.0 - 2.0 * s.state.t)));
  res.pass = res.worst < tol && trace.halt_reason == HaltReason::TMax;
  return res;
}

namespace {

// Largest |centered difference of S - ric2| along a fixed trajectory.
double ds_dt_fd_error(double h) {
  FlowConfig cfg;
  cfg.step = h;
  cfg.t_max = 1.0;
  const FlowTrace trace = integrate(FlowState{0.0, 0.1, 0.2, 0.3}, cfg);
  double worst = 0.0;
  const auto& s = trace.samples;
  for (std::size_t i = 1; i + 1 < s.size(); ++i) {
    const auto S = [&](std::size_t j) {
      return 2.0 * (s[j].state.a + s[j].state.b + s[j].state.c);
    };
    const double fd = (S(i + 1) - S(i - 1)) / (2.0 * h);
    const double ric2 = 2.0 * (s[i].state.a * s[i].state.a + s[i].state.b * s[i].state.b +
                               s[i].state.c * s[i].state.c + s[i].state.a * s[i].state.b +
                               s[i].state.a * s[i].state.c + s[i].state.b * s[i].state.c);
    worst = std::max(worst, std::abs(fd - ric2));
  }
  return worst;
}

double a_over_s_fd_error(double h) {
  FlowConfig cfg;
  cfg.step = h;
  cfg.t_max = 1.0;
  const FlowTrace trace = integrate(FlowState{0.0, 0.1, 0.2, 0.3}, cfg);
  double worst = 0.0;
  const auto& s = trace.samples;
  for (std::size_t i = 1; i + 1 < s.size(); ++i) {
    const auto ratio = [&](std::size_t j) {
      return s[j].state.a / (2.0 * (s[j].state.a + s[j].state.b + s[j].state.c));
    };
    const double fd = (ratio(i + 1) - ratio(i - 1)) / (2.0 * h);
    const double S = 2.0 * (s[i].state.a + s[i].state.b + s[i].state.c);
    const double closed = 2.0 / (S * S) *
                          (s[i].state.b * s[i].state.b * (s[i].state.c - s[i].state.a) +
                           s[i].state.c * s[i].state.c * (s[i].state.b - s[i].state.a));
    worst = std::max(worst, std::abs(fd - closed));
  }
  return worst;
}

}  // namespace

CheckResult check_ds_dt_order(double h, double min_order) {
  CheckResult res{"ds-dt-identity-order", true, 0.0, 2,
                  "observed convergence order of the FD error"};
  const double e1 = ds_dt_fd_error(h);
  const double e2 = ds_dt_fd_error(0.5 * h);
  res.worst = std::log2(e1 / e2);
  res.pass = res.worst >= min_order;
  return res;
}

CheckResult check_a_over_s_derivative(double h, double min_order) {
  CheckResult res{"a-over-s-derivative-order", true, 0.0, 2,
                  "observed convergence order of the FD error"};
  const double e1 = a_over_s_fd_error(h);
  const double e2 = a_over_s_fd_error(0.5 * h);
  res.worst = std::log2(e1 / e2);
  res.pass = res.worst >= min_order;
  return res;
}

std::vector<CheckResult> check_preservation_sweep(const std::vector<double>& f_alphas,
                                                  const std::vector<double>& h_alphas,
                                                  int samples, std::uint64_t seed,
                                                  const FlowConfig& cfg, double tol) {
  std::vector<CheckResult> out;
  for (const double alpha : f_alphas) {
    const auto rep = preservation_experiment(alpha, samples, cfg, seed, tol);
    out.push_back({"preservation-f-alpha-" + std::to_string(alpha), rep.pass,
                   rep.worst_drop, rep.samples_accepted,
                   "worst drop of f_alpha/S below its start"});
  }
  for (const double alpha : h_alphas) {
    const auto rep = first_kind_preservation_experiment(alpha, samples, cfg, seed, tol);
    out.push_back({"preservation-h-alpha-" + std::to_string(alpha), rep.pass,
                   rep.worst_drop, rep.samples_accepted,
                   "worst drop of h_alpha/S below its start"});
  }
  return out;
}

std::vector<CheckResult> run_spectra_suite(long long samples, std::uint64_t seed) {
  std::vector<CheckResult> out;
  out.push_back(check_spectrum3d_oracle(samples, seed));
  out.push_back(check_extreme_bounds(samples, derive_seed(seed, 1)));
  out.push_back(check_spectrum_general_oracle(std::max(1LL, samples / 20), derive_seed(seed, 2)));
  out.push_back(check_secular_special_branches());
  out.push_back(check_secular_vs_extremes(std::max(1LL, samples / 10), derive_seed(seed, 3)));
  return out;
}

std::vector<CheckResult> run_cones_suite(long long samples, std::uint64_t seed) {
  std::vector<CheckResult> out;
  out.push_back(check_cone_chain(samples, seed));
  out.push_back(check_cone_closed_forms(samples, derive_seed(seed, 1)));
  out.push_back(check_f_alpha_partial_sum(samples, derive_seed(seed, 2)));
  out.push_back(check_sharpness_examples());
  out.push_back(check_pinching(samples, derive_seed(seed, 3)));
  out.push_back(check_sign_symmetry(samples, derive_seed(seed, 4)));
  return out;
}

std::vector<CheckResult> run_flow_suite(long long samples, std::uint64_t seed) {
  std::vector<CheckResult> out;
  FlowConfig cfg;
  cfg.step = 1e-3;
  cfg.t_max = 100.0;
  out.push_back(check_flow_monotone(samples, seed, cfg));
  out.push_back(check_round_sphere());
  out.push_back(check_ds_dt_order());
  out.push_back(check_a_over_s_derivative());
  FlowConfig pres = cfg;
  pres.t_max = 10.0;
  const auto sweep = check_preservation_sweep({1.0, 2.0, 10.0 / 3.0, 4.0, 5.0},
                                              {1.0, 1.5, 2.0, 2.5, 3.0},
                                              int(std::min<long long>(samples, 1000)),
                                              derive_seed(seed, 5), pres);
  out.insert(out.end(), sweep.begin(), sweep.end());
  return out;
}

}  // namespace curvop
