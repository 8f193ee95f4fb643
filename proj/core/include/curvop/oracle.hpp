#pragma once

#include <vector>

#include "curvop/spectra.hpp"
#include "curvop/tensor.hpp"

namespace curvop {

struct SpectrumComparison {
  std::vector<double> analytic;
  std::vector<double> numeric;
  double max_abs_gap = 0.0;
  bool pass = false;
};

/// Brute-force 3D spectrum: build the curvature tensor for (a, b, c),
/// materialize the 5x5 second-kind matrix, diagonalize it. Never touches the
/// closed forms it is used to check.
std::vector<double> numeric_spectrum_3d(const FirstKindEigs3& e);

/// Brute-force spectrum of A owedge id for A = diag(a_diag); the dimension
/// is the length of a_diag, 2 <= n <= 8.
std::vector<double> numeric_spectrum_general(const std::vector<double>& a_diag);

/// Pairs the expanded analytic spectrum with the numeric one in sorted order
/// and reports the largest gap. Throws ShapeMismatch when the counts differ.
SpectrumComparison compare_spectra(const SecondKindSpectrum& analytic,
                                   const std::vector<double>& numeric, double tol);

}  // namespace curvop
