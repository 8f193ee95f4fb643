#include "curvop/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "curvop/errors.hpp"

namespace curvop {

SymMatrix::SymMatrix(std::size_t dim) : dim_(dim), a_(dim * dim, 0.0) {}

SymMatrix::SymMatrix(std::size_t dim, const std::vector<double>& row_major)
    : dim_(dim), a_(dim * dim) {
  if (row_major.size() != dim * dim)
    throw InvalidInput("SymMatrix: entry count does not match dimension");
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j)
      a_[i * dim + j] = 0.5 * (row_major[i * dim + j] + row_major[j * dim + i]);
}

SymMatrix SymMatrix::diagonal(const std::vector<double>& diag) {
  SymMatrix m(diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m.a_[i * m.dim_ + i] = diag[i];
  return m;
}

void SymMatrix::set(std::size_t i, std::size_t j, double v) {
  a_[i * dim_ + j] = v;
  a_[j * dim_ + i] = v;
}

double SymMatrix::trace() const {
  double t = 0.0;
  for (std::size_t i = 0; i < dim_; ++i) t += a_[i * dim_ + i];
  return t;
}

double SymMatrix::frobenius_norm() const {
  double s = 0.0;
  for (double v : a_) s += v * v;
  return std::sqrt(s);
}

namespace {

double off_diagonal_norm(const std::vector<double>& a, std::size_t n) {
  double s = 0.0;
  for (std::size_t p = 0; p + 1 < n; ++p)
    for (std::size_t q = p + 1; q < n; ++q) s += 2.0 * a[p * n + q] * a[p * n + q];
  return std::sqrt(s);
}

}  // namespace

std::vector<double> sym_eigenvalues(const SymMatrix& m, double tol) {
  if (!(tol > 0.0)) throw InvalidInput("sym_eigenvalues: tol must be positive");
  for (double v : m.data())
    if (!std::isfinite(v)) throw InvalidInput("sym_eigenvalues: non-finite entry");

  const std::size_t n = m.dim();
  if (n == 0) return {};

  std::vector<double> a = m.data();
  const double norm = m.frobenius_norm();
  if (norm == 0.0) return std::vector<double>(n, 0.0);

  constexpr int kSweepBudget = 64;
  bool converged = false;
  for (int sweep = 0; sweep < kSweepBudget && !converged; ++sweep) {
    if (off_diagonal_norm(a, n) < tol * norm) {
      converged = true;
      break;
    }
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a[p * n + q];
        if (apq == 0.0) continue;
        const double app = a[p * n + p];
        const double aqq = a[q * n + q];
        const double tau = (aqq - app) / (2.0 * apq);
        double t;
        if (std::isfinite(tau)) {
          const double denom = std::abs(tau) + std::sqrt(1.0 + tau * tau);
          t = (tau >= 0.0 ? 1.0 : -1.0) / denom;
        } else {
          t = 0.0;  // rotation angle underflows; diagonal dominates
        }
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;

        a[p * n + p] = app - t * apq;
        a[q * n + q] = aqq + t * apq;
        a[p * n + q] = 0.0;
        a[q * n + p] = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
          if (k == p || k == q) continue;
          const double akp = a[k * n + p];
          const double akq = a[k * n + q];
          a[k * n + p] = c * akp - s * akq;
          a[p * n + k] = a[k * n + p];
          a[k * n + q] = s * akp + c * akq;
          a[q * n + k] = a[k * n + q];
        }
      }
    }
  }
  if (!converged && off_diagonal_norm(a, n) >= tol * norm)
    throw NoConvergence("sym_eigenvalues: sweep budget exhausted");

  std::vector<double> eig(n);
  for (std::size_t i = 0; i < n; ++i) eig[i] = a[i * n + i];
  std::sort(eig.begin(), eig.end());
  return eig;
}

double bracketed_root(const std::function<double(double)>& f, Bracket b, double tol) {
  if (!(tol > 0.0)) throw InvalidInput("bracketed_root: tol must be positive");
  if (!(b.lo < b.hi)) throw InvalidInput("bracketed_root: lo must be below hi");

  double flo = f(b.lo);
  double fhi = f(b.hi);
  if (!std::isfinite(flo) || !std::isfinite(fhi))
    throw InvalidInput("bracketed_root: non-finite endpoint value");
  if (flo == 0.0 || fhi == 0.0 || (flo < 0.0) == (fhi < 0.0))
    throw BadBracket("bracketed_root: no sign change across bracket");

  double lo = b.lo;
  double hi = b.hi;
  const double width_tol =
      tol * std::max({1.0, std::abs(b.lo), std::abs(b.hi)});
  const bool lo_negative = flo < 0.0;

  for (int it = 0; it < 200 && (hi - lo) > width_tol; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;  // hit double resolution
    const double fm = f(mid);
    if (fm == 0.0) return mid;
    if ((fm < 0.0) == lo_negative)
      lo = mid;
    else
      hi = mid;
  }

  double r = 0.5 * (lo + hi);
  if (r <= b.lo) r = std::nextafter(b.lo, b.hi);
  if (r >= b.hi) r = std::nextafter(b.hi, b.lo);
  return r;
}

}  // namespace curvop
