#ifndef DHO_OPERATORS_HPP
#define DHO_OPERATORS_HPP

#include "dho/model.hpp"
#include "dho/types.hpp"

#include <variant>

namespace dho {

/// Uniform symmetric position mesh on [-L, L] with hard-wall (Dirichlet)
/// boundaries.  Nodes are mirror-symmetric about 0 by construction.
struct Grid {
  double half_width = 10.0;  // L
  int n_points = 801;

  double spacing() const { return 2.0 * half_width / (n_points - 1); }
  double node(int j) const;
  void validate() const;
};

/// Truncated number basis of a reference oscillator at frequency omega_basis.
/// Operator products are formed at size n_basis + pad and cropped back, so
/// every retained matrix element is exact.
struct FockBasis {
  int n_basis = 128;
  double omega_basis = 1.0;
  int pad = 2;

  void validate() const;
};

using Backend = std::variant<Grid, FockBasis>;

/// Default mesh half-width 8/sqrt(m*W/hbar) with W = sqrt(max(omega^2 -
/// lambda^2/4, 1e-6*omega^2)), sized so the ground-state tail at the wall is
/// below 1e-13.  Requires omega > 0.
double default_half_width(const PhysParams& p);
Grid default_grid(const PhysParams& p, int n_points = 801);

ComplexMatrix position_matrix(const Grid& g, const PhysParams& p);
ComplexMatrix position_matrix(const FockBasis& b, const PhysParams& p);

ComplexMatrix momentum_matrix(const Grid& g, const PhysParams& p);
ComplexMatrix momentum_matrix(const FockBasis& b, const PhysParams& p);

/// Ladder-built y and p at the padded size n_basis + pad.  Products of these
/// are exact on every index retained after cropping back to n_basis.
ComplexMatrix position_matrix_padded(const FockBasis& b, const PhysParams& p);
ComplexMatrix momentum_matrix_padded(const FockBasis& b, const PhysParams& p);

/// Kinetic energy from the 3-point second-difference stencil (not P*P, which
/// lives on a doubled mesh and admits checkerboard modes).
ComplexMatrix kinetic_matrix(const Grid& g, const PhysParams& p);

/// H = kinetic + (1/2) m omega^2 Y^2 + coupling, with the coupling ordered by
/// `ordering`.  The Symmetrized variant is Hermitian by construction.
ComplexMatrix build_hamiltonian(const Grid& g, const PhysParams& p, OrderingScheme ordering);
ComplexMatrix build_hamiltonian(const FockBasis& b, const PhysParams& p, OrderingScheme ordering);

ComplexMatrix build_hamiltonian(const Backend& backend, const PhysParams& p,
                                OrderingScheme ordering);

/// ||A - A^H||_F / max(||A||_F, 1e-300).
double hermiticity_defect(const ComplexMatrix& a);

}  // namespace dho

#endif  // DHO_OPERATORS_HPP
