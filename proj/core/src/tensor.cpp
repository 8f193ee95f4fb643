#include "curvop/tensor.hpp"

#include <algorithm>
#include <cmath>

#include "curvop/errors.hpp"

namespace curvop {

namespace {

constexpr std::size_t kMinDim = 2;
constexpr std::size_t kMaxDim = 8;

void check_dim(std::size_t n, const char* who) {
  if (n < kMinDim || n > kMaxDim)
    throw InvalidInput(std::string(who) + ": dimension must be in [2, 8]");
}

}  // namespace

SymTensor2::SymTensor2(std::size_t n) : n_(n), a_(n * n, 0.0) { check_dim(n, "SymTensor2"); }

SymTensor2::SymTensor2(std::size_t n, const std::vector<double>& row_major) : SymTensor2(n) {
  if (row_major.size() != n * n)
    throw InvalidInput("SymTensor2: entry count does not match dimension");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      a_[i * n + j] = 0.5 * (row_major[i * n + j] + row_major[j * n + i]);
}

SymTensor2 SymTensor2::identity(std::size_t n) {
  SymTensor2 t(n);
  for (std::size_t i = 0; i < n; ++i) t.a_[i * n + i] = 1.0;
  return t;
}

SymTensor2 SymTensor2::diagonal(const std::vector<double>& diag) {
  SymTensor2 t(diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) t.a_[i * t.n_ + i] = diag[i];
  return t;
}

void SymTensor2::set(std::size_t i, std::size_t j, double v) {
  a_[i * n_ + j] = v;
  a_[j * n_ + i] = v;
}

double SymTensor2::trace() const {
  double t = 0.0;
  for (std::size_t i = 0; i < n_; ++i) t += a_[i * n_ + i];
  return t;
}

SymTensor2& SymTensor2::operator+=(const SymTensor2& other) {
  if (other.n_ != n_) throw InvalidInput("SymTensor2: dimension mismatch");
  for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += other.a_[i];
  return *this;
}

SymTensor2& SymTensor2::operator*=(double s) {
  for (double& v : a_) v *= s;
  return *this;
}

double inner(const SymTensor2& a, const SymTensor2& b) {
  if (a.dim() != b.dim()) throw InvalidInput("inner: dimension mismatch");
  double s = 0.0;
  for (std::size_t i = 0; i < a.data().size(); ++i) s += a.data()[i] * b.data()[i];
  return s;
}

CurvTensor::CurvTensor(std::size_t n, std::vector<double> entries)
    : n_(n), e_(std::move(entries)) {}

CurvTensor CurvTensor::zero(std::size_t n) {
  check_dim(n, "CurvTensor");
  return CurvTensor(n, std::vector<double>(n * n * n * n, 0.0));
}

CurvTensor CurvTensor::from_entries(std::size_t n, std::vector<double> entries) {
  check_dim(n, "CurvTensor");
  if (entries.size() != n * n * n * n)
    throw InvalidInput("CurvTensor: entry count does not match dimension");
  CurvTensor r(n, std::move(entries));
  if (r.max_invariant_violation() > 1e-12)
    throw InvalidInput("CurvTensor: symmetry or first Bianchi violation");
  return r;
}

double CurvTensor::max_invariant_violation() const {
  const std::size_t n = n_;
  const CurvTensor& r = *this;
  double worst = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) {
          const double v = r(i, j, k, l);
          worst = std::max(worst, std::abs(v + r(j, i, k, l)));
          worst = std::max(worst, std::abs(v + r(i, j, l, k)));
          worst = std::max(worst, std::abs(v - r(k, l, i, j)));
          worst = std::max(worst, std::abs(v + r(j, k, i, l) + r(k, i, j, l)));
        }
  return worst;
}

TwoFormBasis TwoFormBasis::standard(std::size_t n) {
  check_dim(n, "TwoFormBasis");
  TwoFormBasis b;
  b.n_ = n;
  for (std::size_t i = 0; i + 1 < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) b.pairs_.emplace_back(i, j);
  return b;
}

std::vector<double> TwoFormBasis::element(std::size_t a) const {
  std::vector<double> m(n_ * n_, 0.0);
  const auto [i, j] = pairs_[a];
  m[i * n_ + j] = 1.0;
  m[j * n_ + i] = -1.0;
  return m;
}

TracelessBasis TracelessBasis::standard(std::size_t n) {
  check_dim(n, "TracelessBasis");
  TracelessBasis b;
  b.n_ = n;
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  for (std::size_t i = 0; i + 1 < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      SymTensor2 t(n);
      t.set(i, j, inv_sqrt2);
      b.elems_.push_back(t);
    }
  for (std::size_t m = 1; m < n; ++m) {
    SymTensor2 t(n);
    const double norm = 2.0 * std::sqrt(double(m) * double(m + 1));
    for (std::size_t p = 0; p < m; ++p) t.set(p, p, 2.0 / norm);
    t.set(m, m, -2.0 * double(m) / norm);
    b.elems_.push_back(t);
  }
  return b;
}

CurvTensor kulkarni_nomizu(const SymTensor2& a, const SymTensor2& b) {
  if (a.dim() != b.dim()) throw InvalidInput("kulkarni_nomizu: dimension mismatch");
  const std::size_t n = a.dim();
  std::vector<double> e(n * n * n * n);
  std::size_t idx = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l)
          e[idx++] = a(i, k) * b(j, l) + a(j, l) * b(i, k) -
                     a(j, k) * b(i, l) - a(i, l) * b(j, k);
  return CurvTensor(n, std::move(e));
}

CurvTensor curvature_from_first_kind_eigs(double a, double b, double c) {
  if (!(a <= b && b <= c))
    throw InvalidInput("curvature_from_first_kind_eigs: eigenvalues must be sorted");
  const SymTensor2 schouten = SymTensor2::diagonal(
      {0.5 * (a + b - c), 0.5 * (a + c - b), 0.5 * (b + c - a)});
  return kulkarni_nomizu(schouten, SymTensor2::identity(3));
}

SymMatrix first_kind_matrix(const CurvTensor& r) {
  const auto basis = TwoFormBasis::standard(r.dim());
  const std::size_t m = basis.size();
  SymMatrix out(m);
  for (std::size_t a = 0; a < m; ++a) {
    const auto [i, j] = basis.pairs()[a];
    for (std::size_t b = a; b < m; ++b) {
      const auto [k, l] = basis.pairs()[b];
      out.set(a, b, 0.5 * (r(i, j, k, l) + r(k, l, i, j)));
    }
  }
  return out;
}

SymTensor2 apply_second_kind(const CurvTensor& r, const SymTensor2& phi) {
  if (r.dim() != phi.dim()) throw InvalidInput("apply_second_kind: dimension mismatch");
  const std::size_t n = r.dim();
  SymTensor2 out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      double s = 0.0;
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) s += r(i, k, l, j) * phi(k, l);
      out.set(i, j, s);
    }
  return out;
}

SymMatrix second_kind_matrix(const CurvTensor& r) {
  const auto basis = TracelessBasis::standard(r.dim());
  const std::size_t m = basis.size();
  std::vector<double> entries(m * m);
  for (std::size_t b = 0; b < m; ++b) {
    const SymTensor2 rphi = apply_second_kind(r, basis.element(b));
    for (std::size_t a = 0; a < m; ++a)
      entries[a * m + b] = inner(basis.element(a), rphi);
  }
  return SymMatrix(m, entries);  // symmetrized on construction
}

CurvatureInvariants curvature_invariants(const CurvTensor& r) {
  const std::size_t n = r.dim();
  CurvatureInvariants inv{SymTensor2(n), 0.0, {}, {}};
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t l = j; l < n; ++l) {
      double s = 0.0;
      for (std::size_t i = 0; i < n; ++i) s += r(i, j, i, l);
      inv.ricci.set(j, l, s);
    }
  inv.scalar = inv.ricci.trace();
  const auto basis = TwoFormBasis::standard(n);
  inv.planes = basis.pairs();
  for (const auto& [i, j] : basis.pairs()) inv.sectional.push_back(r(i, j, i, j));
  return inv;
}

}  // namespace curvop
