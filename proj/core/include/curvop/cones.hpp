#pragma once

#include <optional>

#include "curvop/spectra.hpp"

namespace curvop {

enum class ConeMode { Nonneg, Positive, Nonpos, Negative };

struct AlphaCondition {
  double alpha;
  ConeMode mode = ConeMode::Nonneg;
};

/// Evaluated alpha-condition data for one 3D curvature operator.
struct ConeReport {
  double alpha = 0.0;
  /// Weighted partial eigenvalue sum of spectrum_3d at alpha.
  double alpha_value = 0.0;
  /// Piecewise closed form f_alpha; agrees with alpha_value.
  double f_alpha = 0.0;
  bool sec_nonneg = false;    // a >= 0
  bool ric_nonneg = false;    // a + b >= 0
  bool scal_nonneg = false;   // a + b + c >= 0
  /// min Ricci eigenvalue over S, when S > 0.
  std::optional<double> pinching_ratio;
  /// The 10/3- and 4-nonnegativity verdicts, via the eigenvalue sum and via
  /// the polynomial equivalents; the pairs always agree.
  bool ten_thirds_nonneg = false;
  bool ten_thirds_closed_form = false;
  bool four_nonneg = false;
  bool four_closed_form = false;
};

/// lambda_1 + ... + lambda_floor(alpha) + (alpha - floor(alpha)) *
/// lambda_{floor(alpha)+1} over the expanded spectrum; the fractional term is
/// absent when alpha equals the total multiplicity N. Requires 1 <= alpha <= N.
double alpha_partial_sum(const SecondKindSpectrum& spec, double alpha);

/// Margin of alpha-nonnegativity of the second-kind operator in 3D,
/// alpha in [1, 5]:
///   [1,2): lambda_- + (alpha-1) a         [2,3): lambda_- + a + (alpha-2) b
///   [3,4): lambda_- + a + b + (alpha-3) c [4,5]: lambda_- + a+b+c + (alpha-4) lambda_+
/// Equal to alpha_partial_sum(spectrum_3d(e), alpha).
double f_alpha(const FirstKindEigs3& e, double alpha);

/// Margin of alpha-nonnegativity of the first-kind operator, alpha in [1, 3]:
/// a + (alpha-1) b on [1,2), a + b + (alpha-2) c on [2,3].
double h_alpha(const FirstKindEigs3& e, double alpha);

/// Does the alpha-condition hold? Nonneg/Positive test f_alpha(e) >= 0 / > 0;
/// Nonpos/Negative test the mirrored operator (-c, -b, -a). No tolerance.
bool alpha_condition_holds(const FirstKindEigs3& e, const AlphaCondition& cond);

ConeReport condition_report(const FirstKindEigs3& e, double alpha);

/// Lower bound (1 - 3 delta) / (3 (2 - delta)) on min Ric / S granted by
/// (3 + delta)-nonnegativity of the second-kind operator, delta in [0, 1/3].
double pinching_bound(double delta);

}  // namespace curvop
