#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <vector>

#include "curvop/errors.hpp"
#include "curvop/numerics.hpp"
#include "curvop/rng.hpp"
#include "curvop/spectra.hpp"
#include "curvop/tensor.hpp"

using namespace curvop;

namespace {

SymMatrix random_symmetric(Rng& rng, std::size_t n) {
  std::vector<double> e(n * n);
  for (double& v : e) v = rng.uniform(-2.0, 2.0);
  return SymMatrix(n, e);
}

// Gram-Schmidt on random columns.
std::vector<double> random_orthogonal(Rng& rng, std::size_t n) {
  std::vector<double> q(n * n);
  for (std::size_t col = 0; col < n; ++col) {
    std::vector<double> v(n);
    for (double& x : v) x = rng.uniform(-1.0, 1.0);
    for (std::size_t prev = 0; prev < col; ++prev) {
      double dot = 0.0;
      for (std::size_t i = 0; i < n; ++i) dot += v[i] * q[i * n + prev];
      for (std::size_t i = 0; i < n; ++i) v[i] -= dot * q[i * n + prev];
    }
    double norm = 0.0;
    for (double x : v) norm += x * x;
    norm = std::sqrt(norm);
    for (std::size_t i = 0; i < n; ++i) q[i * n + col] = v[i] / norm;
  }
  return q;
}

SymMatrix conjugate(const SymMatrix& m, const std::vector<double>& q) {
  const std::size_t n = m.dim();
  std::vector<double> tmp(n * n, 0.0), out(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) tmp[i * n + j] += q[k * n + i] * m(k, j);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) out[i * n + j] += tmp[i * n + k] * q[k * n + j];
  return SymMatrix(n, out);
}

}  // namespace

TEST_CASE("identity and diagonal eigenvalues are exact") {
  const auto ones = sym_eigenvalues(SymMatrix::diagonal({1, 1, 1, 1, 1}), 1e-12);
  for (double v : ones) CHECK(v == 1.0);

  const auto diag = sym_eigenvalues(SymMatrix::diagonal({-1.0, 0.0, 2.0}));
  CHECK(diag == std::vector<double>{-1.0, 0.0, 2.0});

  CHECK(sym_eigenvalues(SymMatrix(4)) == std::vector<double>(4, 0.0));
}

TEST_CASE("second-kind matrix of the product metric diagonalizes as expected") {
  const auto m = second_kind_matrix(curvature_from_first_kind_eigs(0.0, 0.0, 1.0));
  const auto eig = sym_eigenvalues(m);
  REQUIRE(eig.size() == 5);
  CHECK(eig[0] == doctest::Approx(-1.0 / 3.0).epsilon(1e-12));
  CHECK(std::abs(eig[1]) < 1e-12);
  CHECK(std::abs(eig[2]) < 1e-12);
  CHECK(eig[3] == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(eig[4] == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("eigenvalue sum matches the trace") {
  Rng rng(11);
  for (int rep = 0; rep < 100; ++rep) {
    const std::size_t n = std::size_t(rng.uniform_int(2, 8));
    const SymMatrix m = random_symmetric(rng, n);
    const auto eig = sym_eigenvalues(m);
    double sum = 0.0;
    for (double v : eig) sum += v;
    CHECK(std::abs(sum - m.trace()) < 1e-10 * std::max(1.0, m.frobenius_norm()));
  }
}

TEST_CASE("spectrum is invariant under orthogonal conjugation") {
  Rng rng(23);
  for (int rep = 0; rep < 30; ++rep) {
    const std::size_t n = std::size_t(rng.uniform_int(3, 8));
    const SymMatrix m = random_symmetric(rng, n);
    const SymMatrix rotated = conjugate(m, random_orthogonal(rng, n));
    const auto e1 = sym_eigenvalues(m);
    const auto e2 = sym_eigenvalues(rotated);
    for (std::size_t i = 0; i < n; ++i) CHECK(std::abs(e1[i] - e2[i]) < 1e-10);
  }
}

TEST_CASE("eigensolver input validation") {
  SymMatrix bad(2);
  bad.set(0, 1, std::nan(""));
  CHECK_THROWS_AS(sym_eigenvalues(bad), InvalidInput);
  CHECK_THROWS_AS(sym_eigenvalues(SymMatrix(3), 0.0), InvalidInput);
  CHECK_THROWS_AS(sym_eigenvalues(SymMatrix(3), -1e-9), InvalidInput);

  // the cyclic sweeps drive small matrices to an exactly diagonal state, so
  // even a denormal tolerance converges within the budget
  Rng rng(5);
  const SymMatrix m = random_symmetric(rng, 6);
  CHECK_NOTHROW(sym_eigenvalues(m, 1e-300));
}

TEST_CASE("bisection finds the trivial root") {
  const double r = bracketed_root([](double x) { return x; }, {-1.0, 1.0});
  CHECK(r == 0.0);
}

TEST_CASE("bisection solves the secular quadratic") {
  // One distinct eigenvalue -1/2 and a double eigenvalue 1/2 in dimension 3;
  // clearing denominators gives lambda(1 + 3 lambda) = 0 with the nonzero
  // root -1/3 inside (-1, 0).
  auto f = [](double lam) {
    return -0.5 / (-1.0 - lam) + 1.0 / (1.0 - lam) - 1.5;
  };
  const double r = bracketed_root(f, {-0.999, -1e-6}, 1e-14);
  CHECK(r == doctest::Approx(-1.0 / 3.0).epsilon(1e-12));
}

TEST_CASE("bisection on the secular function reproduces the 3D extremes") {
  // Schouten values of (1, 2, 3) are (0, 1, 2); breakpoints 0, 2, 4, and
  // the zero eigenvalue contributes no pole.
  auto f = [](double lam) {
    return 1.0 / (2.0 - lam) + 2.0 / (4.0 - lam) - 1.5;
  };
  const double lm = bracketed_root(f, {1e-9, 2.0 - 1e-9}, 1e-15);
  const double lp = bracketed_root(f, {2.0 + 1e-9, 4.0 - 1e-9}, 1e-15);
  const auto [lm_ref, lp_ref] = extreme_eigenvalues_3d(FirstKindEigs3(1, 2, 3));
  CHECK(lm == doctest::Approx(lm_ref).epsilon(1e-13));
  CHECK(lp == doctest::Approx(lp_ref).epsilon(1e-13));
  CHECK(lm_ref == doctest::Approx(2.0 - 2.0 * std::sqrt(3.0) / 3.0).epsilon(1e-14));
  CHECK(lp_ref == doctest::Approx(2.0 + 2.0 * std::sqrt(3.0) / 3.0).epsilon(1e-14));
}

TEST_CASE("bisection rejects bad input") {
  auto f = [](double x) { return x * x + 1.0; };
  CHECK_THROWS_AS(bracketed_root(f, {-1.0, 1.0}), BadBracket);
  CHECK_THROWS_AS(bracketed_root([](double x) { return x; }, {-1.0, 1.0}, 0.0),
                  InvalidInput);
  CHECK_THROWS_AS(bracketed_root([](double x) { return x; }, {1.0, -1.0}),
                  InvalidInput);
}

TEST_CASE("bisection is self-consistent in tol and keeps the root interior") {
  auto f = [](double x) { return std::cos(x) - x; };
  Bracket b{0.0, 1.5};
  for (double tol : {1e-6, 1e-9, 1e-12}) {
    const double r = bracketed_root(f, b, tol);
    const double r_ref = bracketed_root(f, b, tol / 10.0);
    CHECK(std::abs(r - r_ref) < tol * 1.5);
    CHECK(r > b.lo);
    CHECK(r < b.hi);
    // endpoints keep their original signs
    CHECK(f(b.lo) > 0.0);
    CHECK(f(b.hi) < 0.0);
  }
}
