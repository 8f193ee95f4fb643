#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "curvop/numerics.hpp"

namespace curvop {

/// Symmetric bilinear form on R^n (n >= 2). Construction symmetrizes.
class SymTensor2 {
 public:
  explicit SymTensor2(std::size_t n);
  SymTensor2(std::size_t n, const std::vector<double>& row_major);

  static SymTensor2 identity(std::size_t n);
  static SymTensor2 diagonal(const std::vector<double>& diag);

  std::size_t dim() const { return n_; }
  double operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }
  void set(std::size_t i, std::size_t j, double v);

  double trace() const;
  const std::vector<double>& data() const { return a_; }

  SymTensor2& operator+=(const SymTensor2& other);
  SymTensor2& operator*=(double s);

 private:
  std::size_t n_;
  std::vector<double> a_;
};

/// <A, B> = tr(A^T B), the inner product on symmetric two-tensors.
double inner(const SymTensor2& a, const SymTensor2& b);

/// Dense rank-4 algebraic curvature tensor on R^n, 2 <= n <= 8. Entries
/// satisfy R_ijkl = -R_jikl = -R_ijlk = R_klij and the first Bianchi
/// identity, all within 1e-12 (checked by from_entries).
class CurvTensor {
 public:
  static CurvTensor zero(std::size_t n);
  static CurvTensor from_entries(std::size_t n, std::vector<double> entries);

  std::size_t dim() const { return n_; }
  double operator()(std::size_t i, std::size_t j, std::size_t k, std::size_t l) const {
    return e_[((i * n_ + j) * n_ + k) * n_ + l];
  }
  const std::vector<double>& data() const { return e_; }

  /// Largest deviation from the symmetry and first-Bianchi constraints.
  double max_invariant_violation() const;

 private:
  CurvTensor(std::size_t n, std::vector<double> entries);
  friend CurvTensor kulkarni_nomizu(const SymTensor2&, const SymTensor2&);

  std::size_t n_;
  std::vector<double> e_;
};

/// Orthonormal basis e_i ^ e_j (i < j, lexicographic) of two-forms under
/// <A, B> = tr(A^T B) / 2.
class TwoFormBasis {
 public:
  static TwoFormBasis standard(std::size_t n);

  std::size_t dim() const { return n_; }
  std::size_t size() const { return pairs_.size(); }
  const std::vector<std::pair<std::size_t, std::size_t>>& pairs() const { return pairs_; }
  /// Element a as an antisymmetric n x n matrix, row-major.
  std::vector<double> element(std::size_t a) const;

 private:
  std::size_t n_ = 0;
  std::vector<std::pair<std::size_t, std::size_t>> pairs_;
};

/// Orthonormal basis of traceless symmetric two-tensors: the (n choose 2)
/// off-diagonal elements (e_i . e_j)/sqrt(2) in lexicographic order followed
/// by the n-1 normalized diagonal elements
///   sum_{p<=m} e_p . e_p - m e_{m+1} . e_{m+1},  m = 1..n-1.
/// For n = 3 this is the five-element basis used throughout the 3D formulas.
class TracelessBasis {
 public:
  static TracelessBasis standard(std::size_t n);

  std::size_t dim() const { return n_; }
  std::size_t size() const { return elems_.size(); }
  const SymTensor2& element(std::size_t a) const { return elems_[a]; }

 private:
  std::size_t n_ = 0;
  std::vector<SymTensor2> elems_;
};

struct CurvatureInvariants {
  SymTensor2 ricci;
  double scalar = 0.0;
  /// Sectional curvatures of the coordinate planes, in TwoFormBasis order.
  std::vector<double> sectional;
  std::vector<std::pair<std::size_t, std::size_t>> planes;
};

/// (A owedge B)_ijkl = A_ik B_jl + A_jl B_ik - A_jk B_il - A_il B_jk.
CurvTensor kulkarni_nomizu(const SymTensor2& a, const SymTensor2& b);

/// The unique vanishing-Weyl 3D curvature tensor whose first-kind eigenvalues
/// are a <= b <= c: the Kulkarni-Nomizu product of its Schouten tensor with g.
CurvTensor curvature_from_first_kind_eigs(double a, double b, double c);

/// Matrix of w -> (1/2) sum R_ijkl w_kl in the two-form basis.
SymMatrix first_kind_matrix(const CurvTensor& r);

/// R_bar(phi)_ij = sum_{k,l} R_iklj phi_kl (not projected).
SymTensor2 apply_second_kind(const CurvTensor& r, const SymTensor2& phi);

/// Matrix of the second-kind operator in the traceless basis. The projection
/// onto traceless tensors is implicit because every basis element is
/// orthogonal to g.
SymMatrix second_kind_matrix(const CurvTensor& r);

/// Ricci tensor Ric_jl = sum_i R_ijil, scalar curvature, sectional values.
CurvatureInvariants curvature_invariants(const CurvTensor& r);

}  // namespace curvop
