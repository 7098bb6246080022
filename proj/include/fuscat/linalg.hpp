// Dense complex linear algebra at working precision: LU solve, least squares,
// and eigenpair refinement (double-precision seeds from Eigen, polished by
// Rayleigh-quotient inverse iteration in MPFR).
#pragma once

#include "fuscat/scalar.hpp"

#include <Eigen/Dense>

#include <complex>
#include <stdexcept>
#include <vector>

namespace fuscat {

struct CMatrix {
  int rows = 0, cols = 0;
  std::vector<Complex> a;

  CMatrix() = default;
  CMatrix(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}

  Complex& operator()(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
  const Complex& operator()(int i, int j) const {
    return a[static_cast<size_t>(i) * cols + j];
  }

  static CMatrix identity(int n) {
    CMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = Complex{Real(1)};
    return m;
  }
};

using CVector = std::vector<Complex>;

inline CMatrix matmul(const CMatrix& A, const CMatrix& B) {
  CMatrix C(A.rows, B.cols);
  for (int i = 0; i < A.rows; ++i) {
    for (int k = 0; k < A.cols; ++k) {
      const Complex& aik = A(i, k);
      if (aik.re == 0 && aik.im == 0) continue;
      for (int j = 0; j < B.cols; ++j) C(i, j) += aik * B(k, j);
    }
  }
  return C;
}

inline CVector matvec(const CMatrix& A, const CVector& x) {
  CVector y(A.rows);
  for (int i = 0; i < A.rows; ++i) {
    Complex acc{};
    for (int j = 0; j < A.cols; ++j) acc += A(i, j) * x[j];
    y[i] = acc;
  }
  return y;
}

// In-place LU with partial pivoting; solves A x = b for square A.
inline CVector lu_solve(CMatrix A, CVector b) {
  const int n = A.rows;
  if (A.cols != n || static_cast<int>(b.size()) != n) {
    throw std::invalid_argument("lu_solve: dimension mismatch");
  }
  for (int k = 0; k < n; ++k) {
    int piv = k;
    Real best = abs(A(k, k));
    for (int i = k + 1; i < n; ++i) {
      Real v = abs(A(i, k));
      if (v > best) {
        best = v;
        piv = i;
      }
    }
    if (best == 0) throw std::runtime_error("lu_solve: singular matrix");
    if (piv != k) {
      for (int j = 0; j < n; ++j) std::swap(A(k, j), A(piv, j));
      std::swap(b[k], b[piv]);
    }
    for (int i = k + 1; i < n; ++i) {
      Complex f = A(i, k) / A(k, k);
      A(i, k) = f;
      for (int j = k + 1; j < n; ++j) A(i, j) -= f * A(k, j);
      b[i] -= f * b[k];
    }
  }
  CVector x(n);
  for (int i = n - 1; i >= 0; --i) {
    Complex acc = b[i];
    for (int j = i + 1; j < n; ++j) acc -= A(i, j) * x[j];
    x[i] = acc / A(i, i);
  }
  return x;
}

// Least-squares solve of A x = b via the normal equations (adequate for the
// well-conditioned small systems in this project).
inline CVector least_squares(const CMatrix& A, const CVector& b) {
  const int n = A.cols;
  CMatrix N(n, n);
  CVector rhs(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      Complex acc{};
      for (int k = 0; k < A.rows; ++k) acc += conj(A(k, i)) * A(k, j);
      N(i, j) = acc;
    }
    Complex acc{};
    for (int k = 0; k < A.rows; ++k) acc += conj(A(k, i)) * b[k];
    rhs[i] = acc;
  }
  return lu_solve(std::move(N), std::move(rhs));
}

// Double-precision eigenpairs of a general complex matrix (seeds only).
inline void eigen_seed(const CMatrix& A,
                       std::vector<std::complex<double>>& values,
                       std::vector<std::vector<std::complex<double>>>& vectors) {
  const int n = A.rows;
  Eigen::MatrixXcd M(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      M(i, j) = std::complex<double>(to_double(A(i, j).re), to_double(A(i, j).im));
    }
  }
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(M);
  if (es.info() != Eigen::Success) {
    throw std::runtime_error("eigen_seed: eigensolver failed");
  }
  values.resize(n);
  vectors.assign(n, std::vector<std::complex<double>>(n));
  for (int k = 0; k < n; ++k) {
    values[k] = es.eigenvalues()(k);
    for (int i = 0; i < n; ++i) vectors[k][i] = es.eigenvectors()(i, k);
  }
}

// Refine one eigenpair of A by inverse iteration with Rayleigh-quotient
// updates; converges quadratically for simple eigenvalues.
inline void refine_eigenpair(const CMatrix& A, Complex& lambda, CVector& v,
                             int iterations = 12) {
  const int n = A.rows;
  for (int it = 0; it < iterations; ++it) {
    CMatrix M = A;
    // Tiny diagonal nudge guards against exactly singular shifts.
    for (int i = 0; i < n; ++i) M(i, i) -= lambda;
    CVector w;
    try {
      w = lu_solve(std::move(M), v);
    } catch (const std::runtime_error&) {
      Complex nudged = lambda + Complex{Real("1e-40")};
      CMatrix M2 = A;
      for (int i = 0; i < n; ++i) M2(i, i) -= nudged;
      w = lu_solve(std::move(M2), v);
    }
    // Normalise.
    Real norm = 0;
    for (const auto& c : w) norm += norm2(c);
    norm = sqrt(norm);
    for (auto& c : w) c /= Complex{norm};
    v = std::move(w);
    // Rayleigh quotient.
    CVector Av = matvec(A, v);
    Complex num{}, den{};
    for (int i = 0; i < n; ++i) {
      num += conj(v[i]) * Av[i];
      den += conj(v[i]) * v[i];
    }
    lambda = num / den;
  }
}

}  // namespace fuscat
