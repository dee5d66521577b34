// Dense complex linear algebra: Hermitian eigensolver (Householder
// tridiagonalization + implicit-shift QL), trace norm, Kronecker products,
// seeded random matrices.

#include "gss/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace gss {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

Matrix Matrix::adjoint() const {
  Matrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = std::conj((*this)(i, j));
  return out;
}

Matrix Matrix::transpose() const {
  Matrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  return out;
}

Matrix Matrix::operator*(const Matrix& rhs) const {
  if (cols_ != rhs.rows_) throw Error("matrix product: inner dimensions disagree");
  Matrix out(rows_, rhs.cols_);
  // ikj order keeps both inner accesses contiguous.
  for (std::size_t i = 0; i < rows_; ++i) {
    const cplx* arow = &data_[i * cols_];
    cplx* orow = &out.data_[i * rhs.cols_];
    for (std::size_t k = 0; k < cols_; ++k) {
      const cplx aik = arow[k];
      if (aik == cplx{0.0, 0.0}) continue;
      const cplx* brow = &rhs.data_[k * rhs.cols_];
      for (std::size_t j = 0; j < rhs.cols_; ++j) orow[j] += aik * brow[j];
    }
  }
  return out;
}

Matrix Matrix::operator+(const Matrix& rhs) const {
  Matrix out = *this;
  out += rhs;
  return out;
}

Matrix Matrix::operator-(const Matrix& rhs) const {
  Matrix out = *this;
  out -= rhs;
  return out;
}

Matrix& Matrix::operator+=(const Matrix& rhs) {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw Error("matrix sum: shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += rhs.data_[i];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& rhs) {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw Error("matrix difference: shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= rhs.data_[i];
  return *this;
}

Matrix& Matrix::operator*=(cplx scalar) {
  for (auto& x : data_) x *= scalar;
  return *this;
}

cplx Matrix::trace() const {
  cplx t{0.0, 0.0};
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
  return t;
}

double Matrix::frobenius_norm() const {
  double s = 0.0;
  for (const auto& x : data_) s += std::norm(x);
  return std::sqrt(s);
}

double Matrix::max_abs() const {
  double m = 0.0;
  for (const auto& x : data_) m = std::max(m, std::abs(x));
  return m;
}

double Matrix::hermiticity_defect() const {
  if (rows_ != cols_) return std::numeric_limits<double>::infinity();
  double m = 0.0;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i; j < cols_; ++j)
      m = std::max(m, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
  return m;
}

double Matrix::unitarity_defect() const {
  if (rows_ != cols_) return std::numeric_limits<double>::infinity();
  const Matrix g = (*this) * adjoint();
  double m = 0.0;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      m = std::max(m, std::abs(g(i, j) - (i == j ? cplx{1.0, 0.0} : cplx{0.0, 0.0})));
  return m;
}

std::vector<cplx> Matrix::apply(const std::vector<cplx>& v) const {
  if (v.size() != cols_) throw Error("matrix apply: vector length mismatch");
  std::vector<cplx> out(rows_, cplx{0.0, 0.0});
  for (std::size_t i = 0; i < rows_; ++i) {
    const cplx* row = &data_[i * cols_];
    cplx acc{0.0, 0.0};
    for (std::size_t j = 0; j < cols_; ++j) acc += row[j] * v[j];
    out[i] = acc;
  }
  return out;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t ia = 0; ia < a.rows(); ++ia)
    for (std::size_t ja = 0; ja < a.cols(); ++ja) {
      const cplx f = a(ia, ja);
      if (f == cplx{0.0, 0.0}) continue;
      for (std::size_t ib = 0; ib < b.rows(); ++ib)
        for (std::size_t jb = 0; jb < b.cols(); ++jb)
          out(ia * b.rows() + ib, ja * b.cols() + jb) = f * b(ib, jb);
    }
  return out;
}

std::vector<cplx> kron(const std::vector<cplx>& a, const std::vector<cplx>& b) {
  std::vector<cplx> out(a.size() * b.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i * b.size() + j] = a[i] * b[j];
  return out;
}

Matrix outer(const std::vector<cplx>& v) {
  Matrix out(v.size(), v.size());
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) out(i, j) = v[i] * std::conj(v[j]);
  return out;
}

namespace {

// Workspace for the reduction to real symmetric tridiagonal form. The matrix
// is kept as separate real/imaginary planes so the hot loops stay plain
// double arithmetic.
struct TridiagWork {
  std::size_t n = 0;
  std::vector<double> ar, ai;        // full Hermitian matrix, row-major planes
  std::vector<double> diag, off;     // tridiagonal: diag[i], off[i] = |T(i+1,i)|
  std::vector<cplx> phase;           // diagonal similarity making the offdiag real
  std::vector<double> vr, vi;        // packed Householder vectors
  std::vector<std::size_t> voffset;  // start of step-k vector inside vr/vi
  std::vector<std::size_t> vlen;     // its length (0 when the step was skipped)
};

// Reduce A (Hermitian, given in planes) to tridiagonal form by Householder
// reflections P_k = I - 2 v v^dag applied to the trailing block.
void householder_tridiagonalize(TridiagWork& w, bool keep_vectors) {
  const std::size_t n = w.n;
  std::vector<double>& ar = w.ar;
  std::vector<double>& ai = w.ai;
  w.diag.assign(n, 0.0);
  w.off.assign(n > 0 ? n - 1 : 0, 0.0);
  std::vector<cplx> sub(n > 0 ? n - 1 : 0, cplx{0.0, 0.0});
  if (keep_vectors) {
    w.voffset.assign(n, 0);
    w.vlen.assign(n, 0);
  }

  std::vector<double> pr(n), pi(n), qr(n), qi(n), hvr(n), hvi(n);

  for (std::size_t k = 0; k + 2 < n; ++k) {
    const std::size_t m = n - k - 1;
    double sigma2 = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
      const double re = ar[(k + 1 + i) * n + k];
      const double im = ai[(k + 1 + i) * n + k];
      hvr[i] = re;
      hvi[i] = im;
      sigma2 += re * re + im * im;
    }
    const double sigma = std::sqrt(sigma2);
    const double a0 = std::hypot(hvr[0], hvi[0]);
    double tail2 = sigma2 - (hvr[0] * hvr[0] + hvi[0] * hvi[0]);
    if (sigma == 0.0 || tail2 <= 0.0) {
      // Column already tridiagonal at this step.
      sub[k] = cplx{hvr[0], hvi[0]};
      continue;
    }
    double phr = 1.0, phi = 0.0;
    if (a0 > 0.0) {
      phr = hvr[0] / a0;
      phi = hvi[0] / a0;
    }
    // Subdiagonal becomes -phase*sigma; v = x + phase*sigma*e1, normalized.
    sub[k] = cplx{-phr * sigma, -phi * sigma};
    hvr[0] += phr * sigma;
    hvi[0] += phi * sigma;
    double vn2 = 0.0;
    for (std::size_t i = 0; i < m; ++i) vn2 += hvr[i] * hvr[i] + hvi[i] * hvi[i];
    const double inv = 1.0 / std::sqrt(vn2);
    for (std::size_t i = 0; i < m; ++i) {
      hvr[i] *= inv;
      hvi[i] *= inv;
    }

    // p = B v over the trailing block B = A[k+1.., k+1..].
    for (std::size_t i = 0; i < m; ++i) {
      const double* rowr = &ar[(k + 1 + i) * n + (k + 1)];
      const double* rowi = &ai[(k + 1 + i) * n + (k + 1)];
      double accr = 0.0, acci = 0.0;
      for (std::size_t j = 0; j < m; ++j) {
        accr += rowr[j] * hvr[j] - rowi[j] * hvi[j];
        acci += rowr[j] * hvi[j] + rowi[j] * hvr[j];
      }
      pr[i] = accr;
      pi[i] = acci;
    }
    // K = v^dag p (real for Hermitian B); q = p - K v.
    double kK = 0.0;
    for (std::size_t i = 0; i < m; ++i) kK += hvr[i] * pr[i] + hvi[i] * pi[i];
    for (std::size_t i = 0; i < m; ++i) {
      qr[i] = pr[i] - kK * hvr[i];
      qi[i] = pi[i] - kK * hvi[i];
    }
    // B <- B - 2 (v q^dag + q v^dag), row by row.
    for (std::size_t i = 0; i < m; ++i) {
      double* rowr = &ar[(k + 1 + i) * n + (k + 1)];
      double* rowi = &ai[(k + 1 + i) * n + (k + 1)];
      const double vir = hvr[i], vii = hvi[i];
      const double qir = qr[i], qii = qi[i];
      for (std::size_t j = 0; j < m; ++j) {
        // v_i conj(q_j) + q_i conj(v_j)
        const double tr = vir * qr[j] + vii * qi[j] + qir * hvr[j] + qii * hvi[j];
        const double ti = vii * qr[j] - vir * qi[j] + qii * hvr[j] - qir * hvi[j];
        rowr[j] -= 2.0 * tr;
        rowi[j] -= 2.0 * ti;
      }
    }

    if (keep_vectors) {
      w.voffset[k] = w.vr.size();
      w.vlen[k] = m;
      w.vr.insert(w.vr.end(), hvr.begin(), hvr.begin() + m);
      w.vi.insert(w.vi.end(), hvi.begin(), hvi.begin() + m);
    }
  }
  if (n >= 2) {
    const std::size_t k = n - 2;
    sub[k] = cplx{ar[(n - 1) * n + k], ai[(n - 1) * n + k]};
  }
  for (std::size_t i = 0; i < n; ++i) w.diag[i] = ar[i * n + i];

  // Absorb subdiagonal phases: T' = D^dag T D with D diagonal unimodular.
  w.phase.assign(n, cplx{1.0, 0.0});
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const double a = std::abs(sub[i]);
    w.off[i] = a;
    w.phase[i + 1] = (a > 0.0) ? sub[i] * w.phase[i] / a : w.phase[i];
  }
}

// Implicit-shift QL on the real symmetric tridiagonal (diag, off). When z is
// non-null it accumulates the tridiagonal eigenvectors (z starts as identity).
void ql_implicit(std::vector<double>& d, std::vector<double>& e, std::vector<double>* z,
                 std::size_t n) {
  if (n == 0) return;
  e.resize(n, 0.0);  // e[n-1] used as scratch
  const int max_iter = 50;
  // Off-diagonals below machine precision relative to the matrix scale are
  // deflated outright; the purely local test stalls on noise-level blocks.
  double scale = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    scale = std::max(scale, std::abs(d[i]) + (i + 1 < n ? std::abs(e[i]) : 0.0));
  const double floor_tol = std::numeric_limits<double>::epsilon() * scale;
  for (std::size_t l = 0; l < n; ++l) {
    int iter = 0;
    std::size_t m;
    do {
      for (m = l; m + 1 < n; ++m) {
        const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
        if (std::abs(e[m]) <= std::numeric_limits<double>::epsilon() * dd + floor_tol) break;
      }
      if (m != l) {
        if (iter++ == max_iter) throw Error("hermitian_eigen: QL failed to converge");
        double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
        double r = std::hypot(g, 1.0);
        g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
        double s = 1.0, c = 1.0, p = 0.0;
        bool underflow = false;
        for (std::size_t i = m; i-- > l;) {
          double f = s * e[i];
          const double b = c * e[i];
          r = std::hypot(f, g);
          e[i + 1] = r;
          if (r == 0.0) {
            d[i + 1] -= p;
            e[m] = 0.0;
            underflow = true;
            break;
          }
          s = f / r;
          c = g / r;
          g = d[i + 1] - p;
          r = (d[i] - g) * s + 2.0 * c * b;
          p = s * r;
          d[i + 1] = g + p;
          g = c * r - b;
          if (z) {
            double* zc = z->data();
            for (std::size_t k = 0; k < n; ++k) {
              f = zc[k * n + i + 1];
              zc[k * n + i + 1] = s * zc[k * n + i] + c * f;
              zc[k * n + i] = c * zc[k * n + i] - s * f;
            }
          }
        }
        if (underflow) continue;
        d[l] -= p;
        e[l] = g;
        e[m] = 0.0;
      }
    } while (m != l);
  }
}

void check_hermitian(const Matrix& h, double herm_tol) {
  if (h.rows() != h.cols()) throw Error("hermitian_eigen: matrix not square");
  const double defect = h.hermiticity_defect();
  if (defect > herm_tol) {
    std::ostringstream msg;
    msg << "hermitian_eigen: input not Hermitian, max asymmetry " << defect;
    throw Error(msg.str());
  }
}

TridiagWork load_planes(const Matrix& h) {
  TridiagWork w;
  const std::size_t n = h.rows();
  w.n = n;
  w.ar.resize(n * n);
  w.ai.resize(n * n);
  const cplx* src = h.data().data();
  for (std::size_t i = 0; i < n * n; ++i) {
    w.ar[i] = src[i].real();
    w.ai[i] = src[i].imag();
  }
  // Work on the Hermitian average so tiny asymmetries do not leak in.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      const double re = 0.5 * (w.ar[i * n + j] + w.ar[j * n + i]);
      const double im = 0.5 * (w.ai[i * n + j] - w.ai[j * n + i]);
      w.ar[i * n + j] = re;
      w.ar[j * n + i] = re;
      w.ai[i * n + j] = im;
      w.ai[j * n + i] = -im;
    }
  return w;
}

}  // namespace

std::vector<double> hermitian_eigenvalues(const Matrix& h, double herm_tol) {
  check_hermitian(h, herm_tol);
  TridiagWork w = load_planes(h);
  householder_tridiagonalize(w, /*keep_vectors=*/false);
  std::vector<double> d = w.diag;
  std::vector<double> e = w.off;
  ql_implicit(d, e, nullptr, w.n);
  std::sort(d.begin(), d.end(), std::greater<double>());
  return d;
}

Eigensystem hermitian_eigen(const Matrix& h, double herm_tol) {
  check_hermitian(h, herm_tol);
  const std::size_t n = h.rows();
  TridiagWork w = load_planes(h);
  householder_tridiagonalize(w, /*keep_vectors=*/true);
  std::vector<double> d = w.diag;
  std::vector<double> e = w.off;
  std::vector<double> z(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) z[i * n + i] = 1.0;
  ql_implicit(d, e, &z, n);

  // Eigenvectors of H = Q D Z: scale rows of Z by the absorbed phases D, then
  // apply the Householder reflections right-to-left (k = n-3 down to 0).
  std::vector<double> wr(n * n), wi(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    const double pr = w.phase[i].real(), pi_ = w.phase[i].imag();
    for (std::size_t j = 0; j < n; ++j) {
      wr[i * n + j] = pr * z[i * n + j];
      wi[i * n + j] = pi_ * z[i * n + j];
    }
  }
  std::vector<double> gr(n), gi(n);
  for (std::size_t k = n >= 3 ? n - 2 : 0; k-- > 0;) {
    const std::size_t m = w.vlen[k];
    if (m == 0) continue;
    const double* vr = &w.vr[w.voffset[k]];
    const double* vi = &w.vi[w.voffset[k]];
    // g = v^dag W    (W rows k+1..n-1)
    std::fill(gr.begin(), gr.end(), 0.0);
    std::fill(gi.begin(), gi.end(), 0.0);
    for (std::size_t i = 0; i < m; ++i) {
      const double* rowr = &wr[(k + 1 + i) * n];
      const double* rowi = &wi[(k + 1 + i) * n];
      const double cr = vr[i], ci = -vi[i];
      for (std::size_t j = 0; j < n; ++j) {
        gr[j] += cr * rowr[j] - ci * rowi[j];
        gi[j] += cr * rowi[j] + ci * rowr[j];
      }
    }
    // W -= 2 v g
    for (std::size_t i = 0; i < m; ++i) {
      double* rowr = &wr[(k + 1 + i) * n];
      double* rowi = &wi[(k + 1 + i) * n];
      const double cr = vr[i], ci = vi[i];
      for (std::size_t j = 0; j < n; ++j) {
        rowr[j] -= 2.0 * (cr * gr[j] - ci * gi[j]);
        rowi[j] -= 2.0 * (cr * gi[j] + ci * gr[j]);
      }
    }
  }

  // Sort descending, carrying columns along.
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return d[a] > d[b]; });
  Eigensystem out;
  out.values.resize(n);
  out.vectors = Matrix(n, n);
  for (std::size_t c = 0; c < n; ++c) {
    out.values[c] = d[order[c]];
    for (std::size_t r = 0; r < n; ++r)
      out.vectors(r, c) = cplx{wr[r * n + order[c]], wi[r * n + order[c]]};
  }
  return out;
}

double trace_norm(const Matrix& m) {
  if (m.rows() != m.cols()) throw Error("trace_norm: matrix not square");
  if (m.empty()) return 0.0;
  if (m.hermiticity_defect() <= 1e-10) {
    const auto ev = hermitian_eigenvalues(m);
    double s = 0.0;
    for (double v : ev) s += std::abs(v);
    return s;
  }
  // General square: singular values from the Gram matrix.
  const Matrix g = m.adjoint() * m;
  const auto ev = hermitian_eigenvalues(g, 1e-8);
  double s = 0.0;
  for (double v : ev) s += std::sqrt(std::max(0.0, v));
  return s;
}

double Rng::uniform() {
  // 53 random bits into [0, 1).
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double Rng::gaussian() {
  if (have_cached_) {
    have_cached_ = false;
    return cached_;
  }
  double u1 = uniform();
  while (u1 <= 0.0) u1 = uniform();
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double a = 2.0 * M_PI * u2;
  cached_ = r * std::sin(a);
  have_cached_ = true;
  return r * std::cos(a);
}

cplx Rng::gaussian_cplx() { return cplx{gaussian(), gaussian()}; }

std::size_t Rng::pick(std::size_t n) {
  if (n == 0) throw Error("Rng::pick: empty range");
  return static_cast<std::size_t>(uniform() * static_cast<double>(n)) % n;
}

Matrix random_unitary(std::size_t n, Rng& rng) {
  // Orthonormalize a complex Gaussian matrix (modified Gram-Schmidt, columns).
  Matrix g(n, n);
  for (auto& x : g.data()) x = rng.gaussian_cplx();
  for (std::size_t c = 0; c < n; ++c) {
    for (std::size_t prev = 0; prev < c; ++prev) {
      cplx ip{0.0, 0.0};
      for (std::size_t r = 0; r < n; ++r) ip += std::conj(g(r, prev)) * g(r, c);
      for (std::size_t r = 0; r < n; ++r) g(r, c) -= ip * g(r, prev);
    }
    double nrm = 0.0;
    for (std::size_t r = 0; r < n; ++r) nrm += std::norm(g(r, c));
    nrm = std::sqrt(nrm);
    if (nrm < 1e-12) throw Error("random_unitary: degenerate Gaussian draw");
    for (std::size_t r = 0; r < n; ++r) g(r, c) /= nrm;
  }
  return g;
}

Matrix random_density(std::size_t n, Rng& rng, std::size_t rank) {
  if (rank == 0 || rank > n) rank = n;
  Matrix g(n, rank);
  for (auto& x : g.data()) x = rng.gaussian_cplx();
  Matrix rho = g * g.adjoint();
  const double tr = rho.trace().real();
  rho *= cplx{1.0 / tr, 0.0};
  return rho;
}

std::vector<cplx> random_pure(std::size_t n, Rng& rng) {
  std::vector<cplx> v(n);
  double nrm = 0.0;
  for (auto& x : v) {
    x = rng.gaussian_cplx();
    nrm += std::norm(x);
  }
  nrm = std::sqrt(nrm);
  for (auto& x : v) x /= nrm;
  return v;
}

}  // namespace gss
