#include "curvop/cones.hpp"

#include <cmath>
#include <stdexcept>

#include "curvop/errors.hpp"

namespace curvop {

double alpha_partial_sum(const SecondKindSpectrum& spec, double alpha) {
  const std::vector<double>& v = spec.expanded();
  const double n = double(v.size());
  if (!(alpha >= 1.0 && alpha <= n))
    throw InvalidInput("alpha_partial_sum: alpha outside [1, N]");
  const int k = int(std::floor(alpha));
  double s = 0.0;
  for (int i = 0; i < k; ++i) s += v[std::size_t(i)];
  const double frac = alpha - double(k);
  if (frac > 0.0) s += frac * v[std::size_t(k)];
  return s;
}

double f_alpha(const FirstKindEigs3& e, double alpha) {
  if (!(alpha >= 1.0 && alpha <= 5.0))
    throw InvalidInput("f_alpha: alpha outside [1, 5]");
  const auto [lm, lp] = extreme_eigenvalues_3d(e);
  if (alpha < 2.0) return lm + (alpha - 1.0) * e.a;
  if (alpha < 3.0) return lm + e.a + (alpha - 2.0) * e.b;
  if (alpha < 4.0) return lm + e.a + e.b + (alpha - 3.0) * e.c;
  return lm + e.a + e.b + e.c + (alpha - 4.0) * lp;
}

double h_alpha(const FirstKindEigs3& e, double alpha) {
  if (!(alpha >= 1.0 && alpha <= 3.0))
    throw InvalidInput("h_alpha: alpha outside [1, 3]");
  if (alpha < 2.0) return e.a + (alpha - 1.0) * e.b;
  return e.a + e.b + (alpha - 2.0) * e.c;
}

bool alpha_condition_holds(const FirstKindEigs3& e, const AlphaCondition& cond) {
  switch (cond.mode) {
    case ConeMode::Nonneg:
      return f_alpha(e, cond.alpha) >= 0.0;
    case ConeMode::Positive:
      return f_alpha(e, cond.alpha) > 0.0;
    case ConeMode::Nonpos:
      return f_alpha(FirstKindEigs3(-e.c, -e.b, -e.a), cond.alpha) >= 0.0;
    case ConeMode::Negative:
      return f_alpha(FirstKindEigs3(-e.c, -e.b, -e.a), cond.alpha) > 0.0;
  }
  throw InvalidInput("alpha_condition_holds: unknown mode");
}

ConeReport condition_report(const FirstKindEigs3& e, double alpha) {
  ConeReport r;
  r.alpha = alpha;
  r.alpha_value = alpha_partial_sum(spectrum_3d(e), alpha);
  r.f_alpha = f_alpha(e, alpha);
  r.sec_nonneg = e.a >= 0.0;
  r.ric_nonneg = e.a + e.b >= 0.0;
  r.scal_nonneg = e.a + e.b + e.c >= 0.0;
  const double s = 2.0 * (e.a + e.b + e.c);
  if (s > 0.0) r.pinching_ratio = (e.a + e.b) / s;

  const double f103 = f_alpha(e, 10.0 / 3.0);
  const double f4 = f_alpha(e, 4.0);
  r.ten_thirds_nonneg = f103 >= 0.0;
  r.four_nonneg = f4 >= 0.0;
  r.ten_thirds_closed_form =
      2.0 * e.a + 2.0 * e.b + e.c >= 0.0 &&
      12.0 * e.a * e.a + 12.0 * e.b * e.b + 36.0 * e.a * e.b +
              20.0 * e.a * e.c + 20.0 * e.b * e.c >=
          0.0;
  r.four_closed_form =
      e.a + e.b + e.c >= 0.0 &&
      (e.a + e.b) * (e.a + e.b) + (e.c * e.c + e.a * e.b) +
              3.0 * (e.a + e.b) * e.c >=
          0.0;

  // The polynomial forms are algebraically equivalent to the eigenvalue
  // sums; a disagreement away from the cone boundary is a defect.
  const double scale = 1.0 + std::abs(e.a) + std::abs(e.b) + std::abs(e.c);
  if ((r.ten_thirds_nonneg != r.ten_thirds_closed_form && std::abs(f103) > 1e-9 * scale) ||
      (r.four_nonneg != r.four_closed_form && std::abs(f4) > 1e-9 * scale))
    throw std::logic_error("condition_report: closed forms disagree with spectrum");
  return r;
}

double pinching_bound(double delta) {
  if (!(delta >= 0.0 && delta <= 1.0 / 3.0))
    throw InvalidInput("pinching_bound: delta outside [0, 1/3]");
  return (1.0 - 3.0 * delta) / (3.0 * (2.0 - delta));
}

}  // namespace curvop
