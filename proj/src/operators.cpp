#include "dho/operators.hpp"

#include <cmath>

namespace dho {

namespace {

ComplexMatrix fock_position_of_size(const FockBasis& b, const PhysParams& p, int size) {
  ComplexMatrix y = ComplexMatrix::Zero(size, size);
  const double scale = p.hbar / (2.0 * p.m * b.omega_basis);
  for (int i = 0; i + 1 < size; ++i) {
    const double v = std::sqrt(scale * (i + 1));
    y(i, i + 1) = v;
    y(i + 1, i) = v;
  }
  return y;
}

ComplexMatrix fock_momentum_of_size(const FockBasis& b, const PhysParams& p, int size) {
  ComplexMatrix mom = ComplexMatrix::Zero(size, size);
  const double scale = 0.5 * p.m * p.hbar * b.omega_basis;
  for (int i = 0; i + 1 < size; ++i) {
    const double v = std::sqrt(scale * (i + 1));
    mom(i, i + 1) = Complex(0.0, -v);
    mom(i + 1, i) = Complex(0.0, v);
  }
  return mom;
}

ComplexVector grid_nodes(const Grid& g) {
  ComplexVector nodes(g.n_points);
  for (int j = 0; j < g.n_points; ++j) nodes(j) = g.node(j);
  return nodes;
}

ComplexMatrix coupling_term(const ComplexMatrix& yp, const ComplexMatrix& py, double lambda,
                            OrderingScheme ordering) {
  switch (ordering) {
    case OrderingScheme::YP: return (0.5 * lambda) * yp;
    case OrderingScheme::PY: return (0.5 * lambda) * py;
    case OrderingScheme::Symmetrized: return (0.25 * lambda) * (yp + py);
  }
  return ComplexMatrix();
}

}  // namespace

double Grid::node(int j) const {
  const int last = n_points - 1;
  const double h = spacing();
  if (2 * j == last) return 0.0;
  if (2 * j < last) return -half_width + j * h;
  return half_width - (last - j) * h;  // exact mirror of the lower half
}

void Grid::validate() const {
  if (!(half_width > 0.0) || !std::isfinite(half_width) || n_points < 3) {
    raise("InvalidGrid", "require half_width > 0 and n_points >= 3");
  }
}

void FockBasis::validate() const {
  if (n_basis < 2 || pad < 2 || !(omega_basis > 0.0) || !std::isfinite(omega_basis)) {
    raise("InvalidBasis", "require n_basis >= 2, pad >= 2, omega_basis > 0");
  }
}

double default_half_width(const PhysParams& p) {
  p.validate();
  if (p.omega <= 0.0) {
    raise("InvalidParams", "default grid sizing requires omega > 0");
  }
  const double w2 = std::max(p.omega * p.omega - 0.25 * p.lambda_damp * p.lambda_damp,
                             1e-6 * p.omega * p.omega);
  const double w = std::sqrt(w2);
  return 8.0 / std::sqrt(p.m * w / p.hbar);
}

Grid default_grid(const PhysParams& p, int n_points) {
  return Grid{default_half_width(p), n_points};
}

ComplexMatrix position_matrix(const Grid& g, const PhysParams& p) {
  g.validate();
  p.validate();
  return grid_nodes(g).asDiagonal();
}

ComplexMatrix position_matrix(const FockBasis& b, const PhysParams& p) {
  b.validate();
  p.validate();
  return fock_position_of_size(b, p, b.n_basis + b.pad).topLeftCorner(b.n_basis, b.n_basis);
}

ComplexMatrix position_matrix_padded(const FockBasis& b, const PhysParams& p) {
  b.validate();
  p.validate();
  return fock_position_of_size(b, p, b.n_basis + b.pad);
}

ComplexMatrix momentum_matrix_padded(const FockBasis& b, const PhysParams& p) {
  b.validate();
  p.validate();
  return fock_momentum_of_size(b, p, b.n_basis + b.pad);
}

ComplexMatrix momentum_matrix(const Grid& g, const PhysParams& p) {
  g.validate();
  p.validate();
  const int n = g.n_points;
  const double c = p.hbar / (2.0 * g.spacing());
  ComplexMatrix mom = ComplexMatrix::Zero(n, n);
  for (int j = 0; j + 1 < n; ++j) {
    mom(j, j + 1) = Complex(0.0, -c);
    mom(j + 1, j) = Complex(0.0, c);
  }
  return mom;
}

ComplexMatrix momentum_matrix(const FockBasis& b, const PhysParams& p) {
  b.validate();
  p.validate();
  return fock_momentum_of_size(b, p, b.n_basis + b.pad).topLeftCorner(b.n_basis, b.n_basis);
}

ComplexMatrix kinetic_matrix(const Grid& g, const PhysParams& p) {
  g.validate();
  p.validate();
  const int n = g.n_points;
  const double h = g.spacing();
  const double diag = p.hbar * p.hbar / (p.m * h * h);
  const double off = -0.5 * diag;
  ComplexMatrix t = ComplexMatrix::Zero(n, n);
  t.diagonal().setConstant(diag);
  for (int j = 0; j + 1 < n; ++j) {
    t(j, j + 1) = off;
    t(j + 1, j) = off;
  }
  return t;
}

ComplexMatrix build_hamiltonian(const Grid& g, const PhysParams& p, OrderingScheme ordering) {
  g.validate();
  p.validate();
  const ComplexVector nodes = grid_nodes(g);
  const ComplexMatrix mom = momentum_matrix(g, p);
  ComplexMatrix h = kinetic_matrix(g, p);
  for (int j = 0; j < g.n_points; ++j) {
    const double y = nodes(j).real();
    h(j, j) += 0.5 * p.m * p.omega * p.omega * y * y;
  }
  const ComplexMatrix yp = nodes.asDiagonal() * mom;
  const ComplexMatrix py = mom * nodes.asDiagonal();
  h += coupling_term(yp, py, p.lambda_damp, ordering);
  return h;
}

ComplexMatrix build_hamiltonian(const FockBasis& b, const PhysParams& p,
                                OrderingScheme ordering) {
  b.validate();
  p.validate();
  const ComplexMatrix y = position_matrix_padded(b, p);
  const ComplexMatrix mom = momentum_matrix_padded(b, p);
  ComplexMatrix h = (mom * mom) / (2.0 * p.m);
  h += (0.5 * p.m * p.omega * p.omega) * (y * y);
  h += coupling_term(y * mom, mom * y, p.lambda_damp, ordering);
  return h.topLeftCorner(b.n_basis, b.n_basis);
}

ComplexMatrix build_hamiltonian(const Backend& backend, const PhysParams& p,
                                OrderingScheme ordering) {
  return std::visit([&](const auto& ctx) { return build_hamiltonian(ctx, p, ordering); },
                    backend);
}

double hermiticity_defect(const ComplexMatrix& a) {
  if (a.rows() != a.cols() || a.rows() < 1) {
    raise("DimensionMismatch", "square matrix required");
  }
  return (a - a.adjoint()).norm() / std::max(a.norm(), 1e-300);
}

}  // namespace dho
