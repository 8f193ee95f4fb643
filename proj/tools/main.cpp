// curvop: spectra of the curvature operator of the second kind, alpha-cone
// conditions, and Hamilton-ODE experiments, with a dense-matrix oracle.

#include <algorithm>
#include <array>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "curvop/cones.hpp"
#include "curvop/errors.hpp"
#include "curvop/flow.hpp"
#include "curvop/oracle.hpp"
#include "curvop/spectra.hpp"
#include "curvop/verify.hpp"
#include "json_config.hpp"
#include "text_format.hpp"

namespace {

using namespace curvop;
using curvop_cli::bool_str;
using curvop_cli::fmt17;
using curvop_cli::join17;

constexpr int kExitPass = 0;
constexpr int kExitConditionFalse = 1;
constexpr int kExitMismatch = 2;
constexpr int kExitUsage = 64;
constexpr int kExitInternal = 70;

struct SpectrumOpts {
  std::vector<double> abc;
  std::string schouten;
  std::size_t dim = 0;
  double tol = 1e-8;
};

struct ConeOpts {
  std::vector<double> abc;
  double alpha = 0.0;
  std::string mode = "nonneg";
  double tol = 1e-8;
};

struct FlowOpts {
  std::vector<double> abc;
  double step = 1e-3;
  double t_max = 1.0;
  std::string out;
  std::optional<double> alpha;
  double blowup_cap = 1e6;
  int sample_every = 1;
  double tol = 1e-8;
};

struct VerifyOpts {
  std::string suite = "all";
  long long samples = 10000;
  std::uint64_t seed = 0;
};

FirstKindEigs3 eigs_from(const std::vector<double>& abc) {
  return FirstKindEigs3(abc[0], abc[1], abc[2]);
}

SchoutenSpectrum parse_schouten(const std::string& text, std::size_t dim) {
  std::vector<SchoutenSpectrum::Entry> entries;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    const auto colon = part.find(':');
    if (colon == std::string::npos)
      throw InvalidInput("--schouten entries must look like mu:mult");
    entries.push_back({std::stod(part.substr(0, colon)),
                       std::stoi(part.substr(colon + 1))});
  }
  std::sort(entries.begin(), entries.end(),
            [](const auto& x, const auto& y) { return x.mu < y.mu; });
  return SchoutenSpectrum(dim, std::move(entries));
}

int run_spectrum(const SpectrumOpts& o) {
  SecondKindSpectrum analytic({{0.0, 1, Provenance::CrossPair}});
  std::vector<double> numeric;
  if (!o.abc.empty()) {
    if (!o.schouten.empty())
      throw InvalidInput("give either --abc or --schouten, not both");
    const FirstKindEigs3 e = eigs_from(o.abc);
    analytic = spectrum_3d(e);
    numeric = numeric_spectrum_3d(e);
  } else if (!o.schouten.empty()) {
    if (o.dim == 0) throw InvalidInput("--schouten requires --dim");
    const SchoutenSpectrum s = parse_schouten(o.schouten, o.dim);
    analytic = spectrum_general(s);
    numeric = numeric_spectrum_general(s.expanded());
  } else {
    throw InvalidInput("spectrum needs --abc A B C or --schouten plus --dim");
  }
  const SpectrumComparison cmp = compare_spectra(analytic, numeric, o.tol);
  std::cout << "analytic: " << join17(cmp.analytic) << "\n";
  std::cout << "numeric: " << join17(cmp.numeric) << "\n";
  std::cout << "max_gap: " << fmt17(cmp.max_abs_gap) << "\n";
  std::cout << "match: " << bool_str(cmp.pass) << "\n";
  return cmp.pass ? kExitPass : kExitMismatch;
}

int run_cone(const ConeOpts& o) {
  const FirstKindEigs3 e = eigs_from(o.abc);
  const ConeReport rep = condition_report(e, o.alpha);

  const FirstKindEigs3 mirrored(-e.c, -e.b, -e.a);
  double margin = rep.f_alpha;
  bool holds = false;
  if (o.mode == "nonneg") {
    holds = margin >= -o.tol;
  } else if (o.mode == "positive") {
    holds = margin > o.tol;
  } else if (o.mode == "nonpos") {
    margin = f_alpha(mirrored, o.alpha);
    holds = margin >= -o.tol;
  } else if (o.mode == "negative") {
    margin = f_alpha(mirrored, o.alpha);
    holds = margin > o.tol;
  } else {
    throw InvalidInput("--mode must be nonneg, positive, nonpos or negative");
  }

  std::cout << "abc: " << join17({e.a, e.b, e.c}) << "\n";
  std::cout << "alpha: " << fmt17(o.alpha) << "\n";
  std::cout << "mode: " << o.mode << "\n";
  std::cout << "f_alpha: " << fmt17(rep.f_alpha) << "\n";
  std::cout << "alpha_value: " << fmt17(rep.alpha_value) << "\n";
  std::cout << "tested_margin: " << fmt17(margin) << "\n";
  std::cout << "sec_nonneg: " << bool_str(rep.sec_nonneg) << "\n";
  std::cout << "ric_nonneg: " << bool_str(rep.ric_nonneg) << "\n";
  std::cout << "scal_nonneg: " << bool_str(rep.scal_nonneg) << "\n";
  std::cout << "pinching_ratio: "
            << (rep.pinching_ratio ? fmt17(*rep.pinching_ratio) : "undefined") << "\n";
  std::cout << "ten_thirds_nonneg: " << bool_str(rep.ten_thirds_nonneg) << "\n";
  std::cout << "ten_thirds_closed_form: " << bool_str(rep.ten_thirds_closed_form) << "\n";
  std::cout << "four_nonneg: " << bool_str(rep.four_nonneg) << "\n";
  std::cout << "four_closed_form: " << bool_str(rep.four_closed_form) << "\n";
  std::cout << "holds: " << bool_str(holds) << "\n";
  return holds ? kExitPass : kExitConditionFalse;
}

int run_flow(const FlowOpts& o) {
  const FirstKindEigs3 e0 = eigs_from(o.abc);
  std::ofstream csv(o.out, std::ios::binary);
  if (!csv) throw InvalidInput("cannot open --out file: " + o.out);

  csv << "t,a,b,c,S,a_over_S,ab_over_S,neg_c_over_S,lm_over_S,neg_lp_over_S,"
         "neg_ric2_over_S2";
  if (o.alpha) csv << ",f_alpha_over_S";
  csv << "\n";

  const double nan = std::numeric_limits<double>::quiet_NaN();
  const std::size_t n_cols = o.alpha ? 7 : 6;
  std::vector<double> prev(n_cols, nan);
  double worst_delta = 0.0;
  long long rows = 0;
  long long step_index = -1;
  std::string pending;

  FlowConfig cfg;
  cfg.step = o.step;
  cfg.t_max = o.t_max;
  cfg.blowup_cap = o.blowup_cap;
  cfg.sample_every = o.sample_every;

  const HaltReason halt = integrate_with_observer(
      FlowState{0.0, e0.a, e0.b, e0.c}, cfg, [&](const FlowState& st) {
        ++step_index;
        const double S = 2.0 * (st.a + st.b + st.c);
        std::vector<double> cols(n_cols, nan);
        if (S > 0.0) {
          const MonotoneQuantities q = monotone_quantities(st);
          cols[0] = q.a_over_S;
          cols[1] = q.ab_over_S;
          cols[2] = q.neg_c_over_S;
          cols[3] = q.lm_over_S;
          cols[4] = q.neg_lp_over_S;
          cols[5] = q.neg_ric2_over_S2;
          if (o.alpha) cols[6] = f_alpha(state_eigs(st), *o.alpha) / S;
        }
        for (std::size_t j = 0; j < n_cols; ++j)
          if (!std::isnan(prev[j]) && !std::isnan(cols[j]))
            worst_delta = std::min(worst_delta, cols[j] - prev[j]);
        prev = cols;

        std::string row = fmt17(st.t) + "," + fmt17(st.a) + "," + fmt17(st.b) + "," +
                          fmt17(st.c) + "," + fmt17(S);
        for (std::size_t j = 0; j < n_cols; ++j) row += "," + fmt17(cols[j]);
        row += "\n";
        if (step_index % cfg.sample_every == 0) {
          csv << row;
          ++rows;
          pending.clear();
        } else {
          pending = std::move(row);
        }
      });
  if (!pending.empty()) {
    csv << pending;
    ++rows;
  }
  csv.close();

  const bool monotone_ok = worst_delta >= -o.tol;
  std::cout << "halt_reason: " << (halt == HaltReason::TMax ? "t_max" : "blowup") << "\n";
  std::cout << "rows: " << rows << "\n";
  std::cout << "worst_step_delta: " << fmt17(worst_delta) << "\n";
  std::cout << "monotone: " << (monotone_ok ? "pass" : "fail") << "\n";
  return monotone_ok ? kExitPass : kExitMismatch;
}

int run_verify(const VerifyOpts& o) {
  std::vector<CheckResult> results;
  auto append = [&](std::vector<CheckResult> v) {
    results.insert(results.end(), v.begin(), v.end());
  };
  if (o.suite == "spectra" || o.suite == "all") append(run_spectra_suite(o.samples, o.seed));
  if (o.suite == "cones" || o.suite == "all") append(run_cones_suite(o.samples, o.seed));
  if (o.suite == "flow" || o.suite == "all")
    append(run_flow_suite(std::min<long long>(o.samples, 1000), o.seed));

  bool all_pass = true;
  for (const auto& r : results) {
    all_pass = all_pass && r.pass;
    std::cout << "check: " << r.name << " pass: " << bool_str(r.pass)
              << " worst: " << fmt17(r.worst) << " samples: " << r.samples << " ("
              << r.note << ")\n";
  }
  std::cout << "suite: " << o.suite << " pass: " << bool_str(all_pass) << "\n";
  return all_pass ? kExitPass : kExitMismatch;
}

int run_examples() {
  struct Row {
    int id;
    double eps;
    FirstKindEigs3 e;
    double lm_ref, lp_ref;
    std::string stated;
    double stated_value;
    std::string converse;
    double converse_value;
  };
  std::vector<Row> rows;
  for (const double eps : {0.01, 0.001}) {
    {
      const FirstKindEigs3 e(-eps, 1.0, 1.0);
      rows.push_back({1, eps, e, -eps, (4.0 + eps) / 3.0,
                      "f_alpha(2+2eps)", f_alpha(e, 2.0 + 2.0 * eps),
                      "min_sectional", e.a});
    }
    {
      const FirstKindEigs3 e(0.0, 0.0, 1.0);
      rows.push_back({2, eps, e, -1.0 / 3.0, 1.0,
                      "min_sectional", e.a,
                      "f_alpha(10/3-0.05)", f_alpha(e, 10.0 / 3.0 - 0.05)});
    }
    {
      const FirstKindEigs3 e(-eps, 0.0, 1.0 + eps);
      const double root = 2.0 / 3.0 * std::sqrt(1.0 + 3.0 * eps * eps + 3.0 * eps);
      const double delta =
          2.0 / 3.0 * (std::sqrt(1.0 + 3.0 * eps * eps + 3.0 * eps) - (1.0 - eps)) /
          (1.0 + eps);
      rows.push_back({3, eps, e, 1.0 / 3.0 - root, 1.0 / 3.0 + root,
                      "f_alpha(10/3+delta)", f_alpha(e, 10.0 / 3.0 + delta),
                      "min_ricci", e.a + e.b});
    }
    {
      const FirstKindEigs3 e(-1.0, 1.0, 1.0);
      rows.push_back({4, eps, e, -1.0, 5.0 / 3.0,
                      "min_ricci", e.a + e.b,
                      "f_alpha(4-0.05)", f_alpha(e, 4.0 - 0.05)});
    }
  }

  double worst = 0.0;
  for (const auto& r : rows) {
    const auto [lm, lp] = extreme_eigenvalues_3d(r.e);
    worst = std::max({worst, std::abs(lm - r.lm_ref), std::abs(lp - r.lp_ref)});
    std::cout << "example=" << r.id << " eps=" << fmt17(r.eps) << " a=" << fmt17(r.e.a)
              << " b=" << fmt17(r.e.b) << " c=" << fmt17(r.e.c) << " lm=" << fmt17(lm)
              << " lp=" << fmt17(lp) << " lm_ref=" << fmt17(r.lm_ref)
              << " lp_ref=" << fmt17(r.lp_ref) << " stated=" << r.stated
              << " stated_value=" << fmt17(r.stated_value) << " converse=" << r.converse
              << " converse_value=" << fmt17(r.converse_value) << "\n";
  }
  const bool pass = worst <= 1e-12;
  std::cout << "closed_form_max_gap: " << fmt17(worst) << "\n";
  std::cout << "examples: " << (pass ? "pass" : "fail") << "\n";
  return pass ? kExitPass : kExitMismatch;
}

// Later occurrences win, so config-injected tokens yield to typed flags.
CLI::Option* opt(CLI::Option* o) {
  return o->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
}

void describe_config(CLI::App* cmd) {
  cmd->add_option("--config",
                  "flat JSON file mirroring the flags; typed flags override")
      ->type_name("FILE");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spectra and Ricci-flow behavior of the curvature operator of the "
               "second kind"};
  app.require_subcommand(1);

  SpectrumOpts so;
  auto* spectrum = app.add_subcommand(
      "spectrum", "Analytic spectrum against the dense-matrix oracle");
  opt(spectrum->add_option("--abc", so.abc, "sorted first-kind eigenvalues a b c")
          ->expected(3));
  opt(spectrum->add_option("--schouten", so.schouten,
                           "distinct Schouten eigenvalues as mu:mult,..."));
  opt(spectrum->add_option("--dim", so.dim, "ambient dimension for --schouten"));
  opt(spectrum->add_option("--tol", so.tol, "match tolerance")
          ->check(CLI::PositiveNumber));
  describe_config(spectrum);

  ConeOpts co;
  auto* cone = app.add_subcommand("cone", "Evaluate an alpha-cone condition");
  opt(cone->add_option("--abc", co.abc, "sorted first-kind eigenvalues a b c")
          ->expected(3)
          ->required());
  opt(cone->add_option("--alpha", co.alpha, "alpha in [1, 5]")
          ->required()
          ->check(CLI::Range(1.0, 5.0)));
  opt(cone->add_option("--mode", co.mode, "nonneg | positive | nonpos | negative")
          ->check(CLI::IsMember({"nonneg", "positive", "nonpos", "negative"})));
  opt(cone->add_option("--tol", co.tol, "verdict slack")
          ->check(CLI::NonNegativeNumber));
  describe_config(cone);

  FlowOpts fo;
  auto* flow = app.add_subcommand("flow", "Integrate the eigenvalue ODE to CSV");
  flow->set_help_flag("--help", "print this help message and exit");  // frees --h
  opt(flow->add_option("--abc", fo.abc, "sorted initial eigenvalues a b c")
          ->expected(3)
          ->required());
  opt(flow->add_option("--h", fo.step, "RK4 step size")->check(CLI::PositiveNumber));
  opt(flow->add_option("--tmax", fo.t_max, "integration horizon")
          ->check(CLI::NonNegativeNumber));
  opt(flow->add_option("--out", fo.out, "CSV output path")->required());
  opt(flow->add_option("--alpha", fo.alpha, "also track f_alpha/S")
          ->check(CLI::Range(1.0, 5.0)));
  opt(flow->add_option("--blowup-cap", fo.blowup_cap,
                       "halt when max |eigenvalue| exceeds")
          ->check(CLI::PositiveNumber));
  opt(flow->add_option("--sample-every", fo.sample_every, "CSV row stride in steps")
          ->check(CLI::PositiveNumber));
  opt(flow->add_option("--tol", fo.tol, "per-step monotonicity slack")
          ->check(CLI::NonNegativeNumber));
  describe_config(flow);

  VerifyOpts vo;
  auto* verify = app.add_subcommand("verify", "Run the property-check suites");
  opt(verify->add_option("--suite", vo.suite, "spectra | cones | flow | all")
          ->check(CLI::IsMember({"spectra", "cones", "flow", "all"})));
  opt(verify->add_option("--samples", vo.samples, "sample count per sweep")
          ->check(CLI::PositiveNumber));
  opt(verify->add_option("--seed", vo.seed, "RNG seed"));
  describe_config(verify);

  auto* examples = app.add_subcommand(
      "examples", "Reproduce the four boundary examples at eps = 0.01, 0.001");
  describe_config(examples);

  try {
    std::vector<std::string> tokens =
        curvop_cli::merge_config_tokens({argv + 1, argv + argc});
    std::reverse(tokens.begin(), tokens.end());  // CLI11 takes reversed args
    app.parse(std::move(tokens));
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  } catch (const InvalidInput& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (spectrum->parsed()) return run_spectrum(so);
    if (cone->parsed()) return run_cone(co);
    if (flow->parsed()) return run_flow(fo);
    if (verify->parsed()) return run_verify(vo);
    if (examples->parsed()) return run_examples();
  } catch (const InvalidInput& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitUsage;
}
