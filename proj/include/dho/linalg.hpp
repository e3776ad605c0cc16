#ifndef DHO_LINALG_HPP
#define DHO_LINALG_HPP

#include "dho/types.hpp"

#include <limits>

namespace dho {

/// Eigenvalues of a dense matrix together with the validation metrics used to
/// accept a solve.  Eigenvalues are sorted ascending by (real, imag).
struct Spectrum {
  ComplexVector eigenvalues;
  double trace_defect = 0.0;   // |sum eig - tr(A)|  / (1 + |tr(A)|)
  double trace2_defect = 0.0;  // |sum eig^2 - tr(A^2)| / (1 + |tr(A^2)|)
  bool converged = false;
};

struct InverseIterationResult {
  double residual = std::numeric_limits<double>::infinity();
  bool ok = false;  // false when the shifted solve stayed singular after the fallback
};

/// Checked matrix product.  Throws Error("DimensionMismatch").
ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b);

template <typename Derived>
auto adjoint(const Eigen::MatrixBase<Derived>& a) {
  return a.adjoint().eval();
}

template <typename Derived>
double frobenius_norm(const Eigen::MatrixBase<Derived>& a) {
  return a.norm();
}

/// Unitary similarity reduction to upper Hessenberg form by Householder
/// reflections.  Entries below the first subdiagonal are exact zeros.
/// Throws Error("NonFiniteInput").
ComplexMatrix hessenberg_reduce(const ComplexMatrix& a);

/// All eigenvalues of a general complex matrix: Hessenberg reduction followed
/// by single-shift QR with Wilkinson shifts and scale-invariant deflation,
///   |h(i,i-1)| <= tol * (|h(i-1,i-1)| + |h(i,i)|).
/// max_sweeps < 0 selects the default budget of 30*n QR steps; on budget
/// exhaustion the best available estimates are returned with converged=false.
Spectrum eig_general(const ComplexMatrix& a, double tol = 1e-12, int max_sweeps = -1);

/// Eigenvalues of a Hermitian matrix (defect checked against 1e-10, else
/// Error("NotHermitian")): Householder tridiagonalization, phase rotation to a
/// real symmetric tridiagonal, then implicit-shift QL.  Results are exactly
/// real-typed and nondecreasing.  Tridiagonal inputs skip the reduction.
Spectrum eig_hermitian(const ComplexMatrix& a, double tol = 1e-12);

/// Residual ||A v - eigenvalue v||_2 / ||A||_F of the eigenvector recovered by
/// a few rounds of shifted inverse iteration.  An exactly singular shift is
/// retried once at shift + 1e-12 ||A||_F; ok=false if that also fails.
InverseIterationResult inverse_iteration_residual(const ComplexMatrix& a, Complex eigenvalue);

}  // namespace dho

#endif  // DHO_LINALG_HPP
