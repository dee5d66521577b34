#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>

#include "gss/linalg.hpp"
#include "oracles.hpp"

using gss::cplx;
using gss::Matrix;

namespace {

Matrix random_hermitian(std::size_t n, gss::Rng& rng) {
  Matrix g(n, n);
  for (auto& x : g.data()) x = rng.gaussian_cplx();
  Matrix h = g + g.adjoint();
  h *= cplx{0.5, 0.0};
  return h;
}

// Flip (swap) operator on d x d systems.
Matrix flip_operator(std::size_t d) {
  Matrix f(d * d, d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) f(i * d + j, j * d + i) = 1.0;
  return f;
}

}  // namespace

TEST_CASE("pauli-z eigenvalues") {
  Matrix z(2, 2);
  z(0, 0) = 1.0;
  z(1, 1) = -1.0;
  auto ev = gss::hermitian_eigenvalues(z);
  CHECK(ev[0] == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(ev[1] == doctest::Approx(-1.0).epsilon(1e-12));
}

TEST_CASE("identity eigenvalues") {
  auto ev = gss::hermitian_eigenvalues(Matrix::identity(4));
  for (double v : ev) CHECK(v == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("flip operator spectrum matches jacobi oracle") {
  const Matrix f = flip_operator(2);
  auto ev = gss::hermitian_eigenvalues(f);
  auto oracle = gss::testing::jacobi_eigenvalues(f);
  CHECK(gss::testing::max_abs_diff(ev, oracle) < 1e-10);
  // d=2 flip: symmetric subspace dim 3 (eigenvalue 1), antisymmetric dim 1 (-1).
  CHECK(ev[0] == doctest::Approx(1.0));
  CHECK(ev[1] == doctest::Approx(1.0));
  CHECK(ev[2] == doctest::Approx(1.0));
  CHECK(ev[3] == doctest::Approx(-1.0));
}

TEST_CASE("random hermitian spectra match jacobi oracle") {
  gss::Rng rng(20260810);
  for (std::size_t n : {2, 3, 5, 8, 13, 21}) {
    Matrix h = random_hermitian(n, rng);
    auto ev = gss::hermitian_eigenvalues(h);
    auto oracle = gss::testing::jacobi_eigenvalues(h);
    CHECK(gss::testing::max_abs_diff(ev, oracle) < 1e-9 * (1.0 + h.frobenius_norm()));
  }
}

TEST_CASE("eigendecomposition reconstructs and is orthonormal") {
  gss::Rng rng(42);
  for (std::size_t n : {2, 4, 7, 16, 33}) {
    Matrix h = random_hermitian(n, rng);
    auto es = gss::hermitian_eigen(h);
    Matrix lam(n, n);
    for (std::size_t i = 0; i < n; ++i) lam(i, i) = es.values[i];
    Matrix rec = es.vectors * lam * es.vectors.adjoint();
    CHECK((rec - h).frobenius_norm() <= 1e-8 * h.frobenius_norm());
    CHECK((es.vectors.adjoint() * es.vectors - Matrix::identity(n)).max_abs() < 1e-8);
    for (std::size_t i = 0; i + 1 < n; ++i) CHECK(es.values[i] >= es.values[i + 1]);
  }
}

TEST_CASE("degenerate and zero matrices") {
  Matrix z(3, 3);
  auto ev = gss::hermitian_eigenvalues(z);
  for (double v : ev) CHECK(v == doctest::Approx(0.0));
  auto es = gss::hermitian_eigen(Matrix::identity(5));
  CHECK((es.vectors.adjoint() * es.vectors - Matrix::identity(5)).max_abs() < 1e-10);
}

TEST_CASE("non-hermitian input rejected with asymmetry magnitude") {
  Matrix m(2, 2);
  m(0, 1) = cplx{1.0, 0.0};
  m(1, 0) = cplx{2.0, 0.0};
  CHECK_THROWS_WITH_AS(gss::hermitian_eigen(m), doctest::Contains("max asymmetry"), gss::Error);
}

TEST_CASE("trace norm basics") {
  Matrix d(2, 2);
  d(0, 0) = 1.0;
  d(1, 1) = -2.0;
  CHECK(gss::trace_norm(d) == doctest::Approx(3.0).epsilon(1e-12));

  gss::Rng rng(7);
  for (std::size_t n : {2, 5, 9}) {
    Matrix u = gss::random_unitary(n, rng);
    CHECK(gss::trace_norm(u) == doctest::Approx(static_cast<double>(n)).epsilon(1e-9));
  }
}

TEST_CASE("trace norm of bell partial transpose") {
  // Partial transpose of |Phi+><Phi+| built by hand: eigenvalues 1/2 (x3), -1/2.
  Matrix pt(4, 4);
  pt(0, 0) = pt(3, 3) = 0.5;
  pt(1, 2) = pt(2, 1) = 0.5;
  auto ev = gss::hermitian_eigenvalues(pt);
  CHECK(ev[0] == doctest::Approx(0.5));
  CHECK(ev[1] == doctest::Approx(0.5));
  CHECK(ev[2] == doctest::Approx(0.5));
  CHECK(ev[3] == doctest::Approx(-0.5));
  CHECK(gss::trace_norm(pt) == doctest::Approx(2.0).epsilon(1e-10));
  auto oracle = gss::testing::jacobi_eigenvalues(pt);
  CHECK(gss::testing::max_abs_diff(ev, oracle) < 1e-10);
}

TEST_CASE("trace norm of general matrix via singular values") {
  // [[0, 3], [0, 0]] has the single singular value 3.
  Matrix m(2, 2);
  m(0, 1) = 3.0;
  CHECK(gss::trace_norm(m) == doctest::Approx(3.0).epsilon(1e-9));
}

TEST_CASE("random unitary is unitary and deterministic per seed") {
  gss::Rng a(123), b(123), c(124);
  Matrix ua = gss::random_unitary(6, a);
  Matrix ub = gss::random_unitary(6, b);
  Matrix uc = gss::random_unitary(6, c);
  CHECK(ua.unitarity_defect() < 1e-12);
  CHECK((ua - ub).max_abs() == 0.0);
  CHECK((ua - uc).max_abs() > 1e-3);
}

TEST_CASE("random density is a state") {
  gss::Rng rng(5);
  Matrix rho = gss::random_density(8, rng);
  CHECK(rho.hermiticity_defect() < 1e-12);
  CHECK(rho.trace().real() == doctest::Approx(1.0).epsilon(1e-12));
  auto ev = gss::hermitian_eigenvalues(rho);
  CHECK(ev.back() > -1e-12);
}

TEST_CASE("kron respects big-endian composite indexing") {
  Matrix a(2, 2), b(2, 2);
  a(0, 0) = 1.0;
  a(1, 1) = 2.0;
  b(0, 1) = 1.0;
  Matrix k = gss::kron(a, b);
  CHECK(k(0, 1) == cplx{1.0, 0.0});   // (a index 0, b row 0 col 1)
  CHECK(k(2, 3) == cplx{2.0, 0.0});   // (a index 1, b row 0 col 1)
  CHECK(k.max_abs() == 2.0);
}
