#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <utility>
#include <vector>

namespace curvop {

/// Sorted eigenvalues of the first-kind curvature operator in 3D.
struct FirstKindEigs3 {
  double a;
  double b;
  double c;

  FirstKindEigs3(double a_, double b_, double c_);
};

/// Distinct eigenvalues of a symmetric tensor A with multiplicities,
/// strictly increasing; multiplicities sum to the ambient dimension.
class SchoutenSpectrum {
 public:
  struct Entry {
    double mu;
    int mult;
  };

  SchoutenSpectrum(std::size_t dim, std::vector<Entry> entries);

  /// Clusters a full list of eigenvalues (any order) into distinct values;
  /// values closer than coalesce_tol land in one block, represented by the
  /// block mean.
  static SchoutenSpectrum from_values(std::span<const double> values,
                                      double coalesce_tol = 1e-9);

  std::size_t dim() const { return dim_; }
  const std::vector<Entry>& entries() const { return entries_; }
  /// Diagonal of A: each mu repeated by its multiplicity, ascending.
  std::vector<double> expanded() const;

 private:
  std::size_t dim_;
  std::vector<Entry> entries_;
};

/// Which eigenvalue family of the second-kind operator a value belongs to.
enum class Provenance {
  CrossPair,      // mu_i + mu_j between distinct blocks
  BlockPair,      // 2 mu_i from off-diagonal pairs inside one block
  BlockDiagonal,  // 2 mu_i from traceless diagonals inside one block
  Secular,        // nonzero secular-equation root
  ZeroSecular,    // zero eigenvalue from the sum(n_i/mu_i) = 0 branch
};

struct SpectrumEntry {
  double value;
  int multiplicity;
  Provenance provenance;
};

/// Eigenvalue multiset of the second-kind operator. entries() is the
/// coalesced view: sorted ascending, values closer than the coalescing
/// tolerance merged into one entry (multiplicity-weighted mean, first
/// provenance kept). expanded() keeps the raw sorted values so that partial
/// sums are not perturbed by the merge.
class SecondKindSpectrum {
 public:
  explicit SecondKindSpectrum(std::vector<SpectrumEntry> entries,
                              double coalesce_tol = 1e-9);

  const std::vector<SpectrumEntry>& entries() const { return entries_; }
  int total_multiplicity() const;
  /// All values repeated by multiplicity, ascending (pre-merge values).
  const std::vector<double>& expanded() const { return values_; }

 private:
  std::vector<SpectrumEntry> entries_;
  std::vector<double> values_;
};

/// The two extreme eigenvalues (smallest, largest) of the second-kind
/// operator in 3D:
///   (a+b+c)/3 -+ sqrt(2 * (3(a^2+b^2+c^2) - (a+b+c)^2)) / 3.
/// The radicand is clamped at zero against rounding. The first component is
/// <= a and the second is >= c.
std::pair<double, double> extreme_eigenvalues_3d(const FirstKindEigs3& e);

/// Full 3D spectrum {lambda_-, a, b, c, lambda_+} with coalesced
/// multiplicities; valid for all degenerate orderings a=b, b=c, a=b=c.
SecondKindSpectrum spectrum_3d(const FirstKindEigs3& e);

/// Schouten eigenvalues ((a+b-c)/2, (a+c-b)/2, (b+c-a)/2) of the 3D
/// curvature tensor with first-kind eigenvalues (a, b, c).
std::array<double, 3> schouten_eigenvalues_3d(const FirstKindEigs3& e);

/// Roots of the secular equation sum_i n_i mu_i / (2 mu_i - lambda) = n/2
/// that are eigenvalues of the second-kind operator of A owedge id:
///  - all mu_i nonzero, sum n_i/mu_i != 0: the k-1 nonzero roots, one per
///    open interval between consecutive poles 2 mu_i;
///  - all mu_i nonzero, sum n_i/mu_i == 0: the k-2 nonzero roots plus 0;
///  - some mu_p == 0: k-1 roots, one per interval between consecutive
///    breakpoints 2 mu_i (0 is a breakpoint but not a pole).
/// The zero-sum test uses threshold 1e-12 * sum |n_i/mu_i|.
std::vector<std::pair<double, int>> secular_roots(const SchoutenSpectrum& s);

/// Spectrum of the second-kind operator of A owedge id in any dimension:
/// cross-block pairs mu_i + mu_j (multiplicity n_i n_j), block values 2 mu_i
/// (total multiplicity (n_i - 1)(n_i + 2)/2), and the secular roots. The
/// total multiplicity is (n-1)(n+2)/2.
SecondKindSpectrum spectrum_general(const SchoutenSpectrum& s);

}  // namespace curvop
