#ifndef GSS_LINALG_HPP
#define GSS_LINALG_HPP

#include <complex>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace gss {

using cplx = std::complex<double>;

class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Dense complex matrix, row-major.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, cplx{0.0, 0.0}) {}

  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return data_.empty(); }

  cplx& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const cplx& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::vector<cplx>& data() { return data_; }
  const std::vector<cplx>& data() const { return data_; }

  Matrix adjoint() const;
  Matrix transpose() const;
  Matrix operator*(const Matrix& rhs) const;
  Matrix operator+(const Matrix& rhs) const;
  Matrix operator-(const Matrix& rhs) const;
  Matrix& operator+=(const Matrix& rhs);
  Matrix& operator-=(const Matrix& rhs);
  Matrix& operator*=(cplx scalar);
  friend Matrix operator*(cplx scalar, Matrix m) { return m *= scalar; }

  cplx trace() const;
  double frobenius_norm() const;
  double max_abs() const;

  // max |A(i,j) - conj(A(j,i))| over all entries; 0 for exactly Hermitian.
  double hermiticity_defect() const;
  // max |(A A^dag - I)(i,j)|; 0 for exactly unitary.
  double unitarity_defect() const;

  std::vector<cplx> apply(const std::vector<cplx>& v) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<cplx> data_;
};

Matrix kron(const Matrix& a, const Matrix& b);
std::vector<cplx> kron(const std::vector<cplx>& a, const std::vector<cplx>& b);
Matrix outer(const std::vector<cplx>& v);  // |v><v|

// Eigenvalues descending, eigenvector k in column k of `vectors`.
struct Eigensystem {
  std::vector<double> values;
  Matrix vectors;
};

// Householder tridiagonalization + implicit-shift QL, dense complex Hermitian.
// Throws Error (naming the max asymmetry) if H fails the Hermiticity check.
Eigensystem hermitian_eigen(const Matrix& h, double herm_tol = 1e-10);
std::vector<double> hermitian_eigenvalues(const Matrix& h, double herm_tol = 1e-10);

// Sum of singular values. Hermitian inputs take the direct eigenvalue route;
// general squares go through the Gram matrix.
double trace_norm(const Matrix& m);

// Deterministic random source: mt19937_64 bits (the engine is fully specified
// by the standard) with hand-rolled uniform and Box-Muller transforms, so
// streams are identical across standard-library implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  double uniform();  // [0, 1)
  double gaussian();
  cplx gaussian_cplx();
  std::size_t pick(std::size_t n);  // uniform in [0, n)
  std::uint64_t bits() { return engine_(); }

 private:
  std::mt19937_64 engine_;
  bool have_cached_ = false;
  double cached_ = 0.0;
};

Matrix random_unitary(std::size_t n, Rng& rng);
Matrix random_density(std::size_t n, Rng& rng, std::size_t rank = 0);
std::vector<cplx> random_pure(std::size_t n, Rng& rng);

}  // namespace gss

#endif
