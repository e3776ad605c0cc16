#include "dho/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

namespace dho {

namespace {

constexpr double kTiny = 1e-300;

void require_square(const ComplexMatrix& a) {
  if (a.rows() < 1 || a.rows() != a.cols()) {
    raise("DimensionMismatch", "square matrix with n >= 1 required");
  }
}

void require_finite(const ComplexMatrix& a) {
  if (!a.allFinite()) raise("NonFiniteInput", "matrix contains NaN or Inf");
}

bool ascending_re_im(const Complex& x, const Complex& y) {
  if (x.real() != y.real()) return x.real() < y.real();
  return x.imag() < y.imag();
}

void finalize_spectrum(Spectrum& s, const ComplexMatrix& a) {
  std::sort(s.eigenvalues.begin(), s.eigenvalues.end(), ascending_re_im);
  const Complex tr = a.trace();
  const Complex tr2 = a.cwiseProduct(a.transpose()).sum();  // trace(A^2) in O(n^2)
  const Complex sum = s.eigenvalues.sum();
  const Complex sum2 = s.eigenvalues.array().square().sum();
  s.trace_defect = std::abs(sum - tr) / (1.0 + std::abs(tr));
  s.trace2_defect = std::abs(sum2 - tr2) / (1.0 + std::abs(tr2));
}

// Unitary [[c, conj(s)], [-s, c]] with c real, mapping [x; y] to [r; 0].
struct GivensRotation {
  double c = 1.0;
  Complex s{0.0, 0.0};
};

GivensRotation make_givens(Complex x, Complex y) {
  GivensRotation g;
  const double ay = std::abs(y);
  if (ay == 0.0) return g;
  const double ax = std::abs(x);
  if (ax == 0.0) {
    g.c = 0.0;
    g.s = y / ay;
    return g;
  }
  const double rho = std::hypot(ax, ay);
  g.c = ax / rho;
  g.s = g.c * (y / x);
  // renormalize |s| so c^2 + |s|^2 = 1 despite rounding in y/x
  const double ss = std::abs(g.s);
  const double scale = std::sqrt((1.0 - g.c) * (1.0 + g.c));
  if (ss > 0.0) g.s *= scale / ss;
  return g;
}

// Left-apply G to rows (i, i+1) over columns [c0, c1].
void rotate_rows(ComplexMatrix& h, Index i, const GivensRotation& g, Index c0, Index c1) {
  for (Index col = c0; col <= c1; ++col) {
    const Complex t1 = h(i, col);
    const Complex t2 = h(i + 1, col);
    h(i, col) = g.c * t1 + std::conj(g.s) * t2;
    h(i + 1, col) = -g.s * t1 + g.c * t2;
  }
}

// Right-apply G^H to columns (j, j+1) over rows [r0, r1].
void rotate_cols(ComplexMatrix& h, Index j, const GivensRotation& g, Index r0, Index r1) {
  for (Index row = r0; row <= r1; ++row) {
    const Complex t1 = h(row, j);
    const Complex t2 = h(row, j + 1);
    h(row, j) = g.c * t1 + g.s * t2;
    h(row, j + 1) = -std::conj(g.s) * t1 + g.c * t2;
  }
}

// Eigenvalue of the trailing 2x2 block closest to its bottom-right entry,
// computed through the stable -bc/(p ± q) form.
Complex wilkinson_shift(const ComplexMatrix& h, Index hi) {
  const Complex a = h(hi - 1, hi - 1);
  const Complex b = h(hi - 1, hi);
  const Complex c = h(hi, hi - 1);
  const Complex d = h(hi, hi);
  const Complex p = 0.5 * (a - d);
  const Complex bc = b * c;
  const Complex q = std::sqrt(p * p + bc);
  const Complex r1 = p + q;
  const Complex r2 = p - q;
  const Complex big = (std::abs(r1) >= std::abs(r2)) ? r1 : r2;
  if (std::abs(big) == 0.0) return d;
  return d - bc / big;
}

// One implicit single-shift QR sweep on the Hessenberg window [lo, hi].
void qr_step(ComplexMatrix& h, Index lo, Index hi, Complex mu) {
  Complex x = h(lo, lo) - mu;
  Complex y = h(lo + 1, lo);
  for (Index k = lo; k < hi; ++k) {
    const GivensRotation g = make_givens(x, y);
    const Index bulge_col = (k > lo) ? k - 1 : lo;
    rotate_rows(h, k, g, bulge_col, hi);
    rotate_cols(h, k, g, lo, std::min(hi, k + 2));
    if (k > lo) h(k + 1, k - 1) = Complex(0.0, 0.0);
    if (k < hi - 1) {
      x = h(k + 1, k);
      y = h(k + 2, k);
    }
  }
}

// Implicit-shift QL eigenvalue iteration on a real symmetric tridiagonal
// matrix; d holds the diagonal, e the subdiagonal (e[i] couples i and i+1).
// Returns false if an eigenvalue fails to converge within the sweep cap.
bool tridiag_ql(std::vector<double>& d, std::vector<double>& e, double tol) {
  const int n = static_cast<int>(d.size());
  if (n == 1) return true;
  e.resize(n, 0.0);  // sentinel
  for (int l = 0; l < n; ++l) {
    int iter = 0;
    while (true) {
      int m = l;
      while (m < n - 1) {
        const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
        if (std::abs(e[m]) <= tol * dd || std::abs(e[m]) < kTiny) break;
        ++m;
      }
      if (m == l) break;
      if (iter++ == 60) return false;
      double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
      double r = std::hypot(g, 1.0);
      g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
      double s = 1.0, c = 1.0, p = 0.0;
      bool underflow = false;
      for (int i = m - 1; i >= l; --i) {
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
      }
      if (underflow) continue;
      d[l] -= p;
      e[l] = g;
      e[m] = 0.0;
    }
  }
  return true;
}

bool is_tridiagonal(const ComplexMatrix& a) {
  const Index n = a.rows();
  for (Index j = 0; j < n; ++j) {
    for (Index i = 0; i < n; ++i) {
      if (std::abs(i - j) >= 2 && a(i, j) != Complex(0.0, 0.0)) return false;
    }
  }
  return true;
}

}  // namespace

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows()) {
    raise("DimensionMismatch", "matmul requires a.cols() == b.rows()");
  }
  return a * b;
}

ComplexMatrix hessenberg_reduce(const ComplexMatrix& a) {
  require_square(a);
  require_finite(a);
  ComplexMatrix h = a;
  const Index n = h.rows();
  for (Index k = 0; k + 2 < n; ++k) {
    const Index len = n - k - 1;
    ComplexVector x = h.col(k).segment(k + 1, len);
    const double below = x.tail(len - 1).norm();
    if (below == 0.0) continue;  // column already in Hessenberg form
    const double sigma = x.norm();
    const Complex alpha = x(0);
    const double aabs = std::abs(alpha);
    const Complex phase = (aabs == 0.0) ? Complex(1.0, 0.0) : alpha / aabs;
    const Complex beta = -phase * sigma;
    ComplexVector v = x;
    v(0) -= beta;
    const double tau = 1.0 / (sigma * (sigma + aabs));  // 2 / ||v||^2
    Eigen::RowVectorXcd w = v.adjoint() * h.block(k + 1, k, len, n - k);
    h.block(k + 1, k, len, n - k).noalias() -= (tau * v) * w;
    ComplexVector u = h.block(0, k + 1, n, len) * v;
    h.block(0, k + 1, n, len).noalias() -= u * (tau * v.adjoint());
    h(k + 1, k) = beta;
    if (len > 1) h.col(k).segment(k + 2, len - 1).setZero();
  }
  return h;
}

Spectrum eig_general(const ComplexMatrix& a, double tol, int max_sweeps) {
  require_square(a);
  require_finite(a);
  if (!(tol > 0.0 && tol <= 1e-4)) raise("InvalidArgument", "tol must be in (0, 1e-4]");
  const Index n = a.rows();
  const long budget = (max_sweeps < 0) ? 30L * n : max_sweeps;
  if (budget < 1) raise("InvalidArgument", "max_sweeps must be >= 1");

  Spectrum spec;
  spec.eigenvalues.resize(n);
  spec.converged = true;

  ComplexMatrix h = hessenberg_reduce(a);
  Index hi = n - 1;
  long steps = 0;
  int stalled = 0;

  while (hi >= 0) {
    for (Index k = hi; k >= 1; --k) {
      const double scale = std::abs(h(k - 1, k - 1)) + std::abs(h(k, k));
      if (std::abs(h(k, k - 1)) <= tol * scale || std::abs(h(k, k - 1)) < kTiny) {
        h(k, k - 1) = Complex(0.0, 0.0);
      }
    }
    if (hi == 0 || h(hi, hi - 1) == Complex(0.0, 0.0)) {
      spec.eigenvalues(hi) = h(hi, hi);
      --hi;
      stalled = 0;
      continue;
    }
    Index lo = hi;
    while (lo > 0 && h(lo, lo - 1) != Complex(0.0, 0.0)) --lo;
    if (steps >= budget) {
      spec.converged = false;
      for (Index k = 0; k <= hi; ++k) spec.eigenvalues(k) = h(k, k);  // best estimates
      break;
    }
    Complex mu;
    if (stalled > 0 && stalled % 12 == 0) {
      // ad-hoc exceptional shift to break symmetric limit cycles
      mu = h(hi, hi) + Complex(0.75 * std::abs(h(hi, hi - 1)), 0.0);
    } else {
      mu = wilkinson_shift(h, hi);
    }
    qr_step(h, lo, hi, mu);
    ++steps;
    ++stalled;
  }

  finalize_spectrum(spec, a);
  return spec;
}

Spectrum eig_hermitian(const ComplexMatrix& a, double tol) {
  require_square(a);
  require_finite(a);
  if (!(tol > 0.0 && tol <= 1e-4)) raise("InvalidArgument", "tol must be in (0, 1e-4]");
  const double defect = (a - a.adjoint()).norm() / std::max(a.norm(), kTiny);
  if (defect > 1e-10) {
    raise("NotHermitian", "hermiticity defect " + std::to_string(defect) + " exceeds 1e-10");
  }
  const Index n = a.rows();

  std::vector<double> d(n), e(n > 1 ? n - 1 : 0);
  if (n == 1) {
    d[0] = a(0, 0).real();
  } else if (is_tridiagonal(a)) {
    for (Index i = 0; i < n; ++i) d[i] = a(i, i).real();
    for (Index i = 0; i + 1 < n; ++i) e[i] = std::abs(a(i + 1, i));
  } else {
    // Householder tridiagonalization (the Hessenberg form of a Hermitian
    // matrix), then a diagonal phase similarity making the off-diagonal real.
    const ComplexMatrix t = hessenberg_reduce(a);
    for (Index i = 0; i < n; ++i) d[i] = t(i, i).real();
    for (Index i = 0; i + 1 < n; ++i) e[i] = std::abs(t(i + 1, i));
  }

  Spectrum spec;
  spec.converged = tridiag_ql(d, e, tol);
  std::sort(d.begin(), d.end());
  spec.eigenvalues.resize(n);
  for (Index i = 0; i < n; ++i) spec.eigenvalues(i) = Complex(d[i], 0.0);
  finalize_spectrum(spec, a);
  return spec;
}

InverseIterationResult inverse_iteration_residual(const ComplexMatrix& a, Complex eigenvalue) {
  require_square(a);
  require_finite(a);
  const Index n = a.rows();
  const double anorm = a.norm();

  std::mt19937_64 rng(0x5EED0F00ULL + static_cast<unsigned long long>(n));
  std::normal_distribution<double> gauss(0.0, 1.0);
  ComplexVector v(n);
  for (Index i = 0; i < n; ++i) v(i) = Complex(gauss(rng), gauss(rng));
  v.normalize();

  InverseIterationResult result;
  for (int attempt = 0; attempt < 2; ++attempt) {
    const Complex shift =
        eigenvalue + (attempt == 0 ? 0.0 : 1e-12 * std::max(anorm, 1.0));
    ComplexMatrix m = a;
    m.diagonal().array() -= shift;
    Eigen::PartialPivLU<ComplexMatrix> lu(m);
    ComplexVector w = v;
    bool ok = true;
    for (int it = 0; it < 4; ++it) {
      w = lu.solve(w);
      if (!w.allFinite() || w.norm() == 0.0) {
        ok = false;
        break;
      }
      w.normalize();
    }
    if (ok) {
      result.residual = (a * w - eigenvalue * w).norm() / std::max(anorm, kTiny);
      result.ok = true;
      return result;
    }
  }
  return result;
}

}  // namespace dho
