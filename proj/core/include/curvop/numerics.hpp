#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace curvop {

/// Dense symmetric matrix, row-major storage. Construction symmetrizes, so
/// entries(i,j) == entries(j,i) holds exactly afterwards.
class SymMatrix {
 public:
  explicit SymMatrix(std::size_t dim);
  SymMatrix(std::size_t dim, const std::vector<double>& row_major);

  static SymMatrix diagonal(const std::vector<double>& diag);

  std::size_t dim() const { return dim_; }
  double operator()(std::size_t i, std::size_t j) const { return a_[i * dim_ + j]; }

  /// Sets (i,j) and (j,i).
  void set(std::size_t i, std::size_t j, double v);

  double trace() const;
  double frobenius_norm() const;
  const std::vector<double>& data() const { return a_; }

 private:
  std::size_t dim_;
  std::vector<double> a_;
};

struct Bracket {
  double lo;
  double hi;
};

/// All eigenvalues of `m`, ascending. Cyclic Jacobi rotations with a fixed
/// budget of 64 sweeps; converged when the off-diagonal Frobenius norm falls
/// below tol * ||m||_F.
///
/// Throws InvalidInput for non-finite entries or tol <= 0, NoConvergence if
/// the sweep budget runs out.
std::vector<double> sym_eigenvalues(const SymMatrix& m, double tol = 1e-12);

/// Bisection on a sign-changing bracket. The result is strictly inside
/// (b.lo, b.hi); iteration stops once the bracket width drops below
/// tol * max(1, |b.lo|, |b.hi|) or after 200 halvings.
///
/// Throws InvalidInput for tol <= 0 or a degenerate bracket, BadBracket if f
/// does not change sign across it.
double bracketed_root(const std::function<double(double)>& f, Bracket b,
                      double tol = 1e-12);

}  // namespace curvop
