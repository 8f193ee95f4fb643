#include "curvop/oracle.hpp"

#include <algorithm>
#include <cmath>

#include "curvop/errors.hpp"
#include "curvop/numerics.hpp"

namespace curvop {

std::vector<double> numeric_spectrum_3d(const FirstKindEigs3& e) {
  return sym_eigenvalues(second_kind_matrix(curvature_from_first_kind_eigs(e.a, e.b, e.c)));
}

std::vector<double> numeric_spectrum_general(const std::vector<double>& a_diag) {
  const std::size_t n = a_diag.size();
  if (n < 2 || n > 8)
    throw InvalidInput("numeric_spectrum_general: dimension outside [2, 8]");
  const CurvTensor r =
      kulkarni_nomizu(SymTensor2::diagonal(a_diag), SymTensor2::identity(n));
  return sym_eigenvalues(second_kind_matrix(r));
}

SpectrumComparison compare_spectra(const SecondKindSpectrum& analytic,
                                   const std::vector<double>& numeric, double tol) {
  SpectrumComparison cmp;
  cmp.analytic = analytic.expanded();
  cmp.numeric = numeric;
  std::sort(cmp.numeric.begin(), cmp.numeric.end());
  if (cmp.analytic.size() != cmp.numeric.size())
    throw ShapeMismatch("compare_spectra: multiplicity totals differ");
  for (std::size_t i = 0; i < cmp.analytic.size(); ++i)
    cmp.max_abs_gap = std::max(cmp.max_abs_gap, std::abs(cmp.analytic[i] - cmp.numeric[i]));
  cmp.pass = cmp.max_abs_gap < tol;
  return cmp;
}

}  // namespace curvop
