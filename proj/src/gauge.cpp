#include "dho/gauge.hpp"

#include "dho/linalg.hpp"

#include <cmath>
#include <limits>

namespace dho {

namespace {

constexpr double kTiny = 1e-300;

double shifted_freq_sq(const PhysParams& p, FrequencyShiftVariant variant) {
  const double frac = (variant == FrequencyShiftVariant::QuarterLambdaSquared) ? 0.25 : 0.5;
  return p.omega * p.omega - frac * p.lambda_damp * p.lambda_damp;
}

// Lowest oscillator eigenfunctions sampled on the mesh, used as smooth probe
// states.  The width follows the grid sizing scale so the probes are well
// resolved and decay inside the walls.
std::vector<ComplexVector> probe_states(const Grid& g, const PhysParams& p, int count) {
  const double w2 = std::max(p.omega * p.omega - 0.25 * p.lambda_damp * p.lambda_damp,
                             1e-6 * std::max(p.omega * p.omega, 1.0));
  const double alpha = std::sqrt(p.m * std::sqrt(w2) / p.hbar);
  std::vector<ComplexVector> probes;
  probes.reserve(count);
  Eigen::VectorXd h_prev = Eigen::VectorXd::Zero(g.n_points);
  Eigen::VectorXd h_cur = Eigen::VectorXd::Ones(g.n_points);
  Eigen::VectorXd u(g.n_points), envelope(g.n_points);
  for (int j = 0; j < g.n_points; ++j) {
    u(j) = alpha * g.node(j);
    envelope(j) = std::exp(-0.5 * u(j) * u(j));
  }
  for (int k = 0; k < count; ++k) {
    if (k > 0) {
      // Hermite recurrence H_{k} = 2 u H_{k-1} - 2 (k-1) H_{k-2}
      Eigen::VectorXd h_next = 2.0 * u.cwiseProduct(h_cur) - 2.0 * (k - 1) * h_prev;
      h_prev.swap(h_cur);
      h_cur.swap(h_next);
    }
    Eigen::VectorXd psi = h_cur.cwiseProduct(envelope);
    const double norm = psi.norm();
    if (norm > 0.0) psi /= norm;
    probes.push_back(psi.cast<Complex>());
  }
  return probes;
}

// max_k ||(X - H) psi_k|| / ||H psi_k|| over the probe family.
double probe_action_defect(const ComplexMatrix& x, const ComplexMatrix& h, const Grid& g,
                           const PhysParams& p) {
  double worst = 0.0;
  for (const auto& psi : probe_states(g, p, 6)) {
    const ComplexVector hv = h * psi;
    const ComplexVector dv = x * psi - hv;
    worst = std::max(worst, dv.norm() / std::max(hv.norm(), kTiny));
  }
  return worst;
}

ComplexMatrix gauge_conjugated_hamiltonian(const Grid& g, const PhysParams& p) {
  const ComplexMatrix h_sym = build_hamiltonian(g, p, OrderingScheme::Symmetrized);
  return conjugate(h_sym, gauge_phase(g, p));
}

}  // namespace

ComplexMatrix gauge_phase(const Grid& g, const PhysParams& p) {
  g.validate();
  p.validate();
  ComplexVector diag(g.n_points);
  const double scale = p.m * p.lambda_damp / (4.0 * p.hbar);
  for (int j = 0; j < g.n_points; ++j) {
    const double y = g.node(j);
    diag(j) = std::exp(Complex(0.0, scale * y * y));
  }
  return diag.asDiagonal();
}

ComplexMatrix conjugate(const ComplexMatrix& h, const ComplexMatrix& u) {
  if (h.rows() != h.cols() || u.rows() != u.cols() || h.rows() != u.rows()) {
    raise("DimensionMismatch", "conjugate requires equal square dimensions");
  }
  const Index n = u.rows();
  for (Index j = 0; j < n; ++j) {
    for (Index i = 0; i < n; ++i) {
      if (i != j && u(i, j) != Complex(0.0, 0.0)) {
        raise("NotUnitaryDiagonal", "off-diagonal entry in U");
      }
    }
    if (std::abs(std::abs(u(j, j)) - 1.0) > 1e-12) {
      raise("NotUnitaryDiagonal", "diagonal entry of U is not unimodular");
    }
  }
  const ComplexVector d = u.diagonal();
  return d.asDiagonal() * h * d.conjugate().asDiagonal();
}

ComplexMatrix shifted_oscillator(const Grid& g, const PhysParams& p,
                                 FrequencyShiftVariant variant) {
  g.validate();
  p.validate();
  const double w2 = shifted_freq_sq(p, variant);
  ComplexMatrix h = kinetic_matrix(g, p);
  for (int j = 0; j < g.n_points; ++j) {
    const double y = g.node(j);
    h(j, j) += 0.5 * p.m * w2 * y * y;
  }
  return h;
}

ComplexMatrix shifted_oscillator(const FockBasis& b, const PhysParams& p,
                                 FrequencyShiftVariant variant) {
  b.validate();
  p.validate();
  const double w2 = shifted_freq_sq(p, variant);
  const ComplexMatrix y = position_matrix_padded(b, p);
  const ComplexMatrix mom = momentum_matrix_padded(b, p);
  ComplexMatrix h = (mom * mom) / (2.0 * p.m);
  h += (0.5 * p.m * w2) * (y * y);
  return h.topLeftCorner(b.n_basis, b.n_basis);
}

double completed_square_defect(const Grid& g, const PhysParams& p) {
  g.validate();
  p.validate();
  const ComplexMatrix mom = momentum_matrix(g, p);
  ComplexMatrix a = mom;
  for (int j = 0; j < g.n_points; ++j) {
    a(j, j) += 0.5 * p.m * p.lambda_damp * g.node(j);
  }
  const ComplexMatrix h_sym = build_hamiltonian(g, p, OrderingScheme::Symmetrized);
  const double w2 = shifted_freq_sq(p, FrequencyShiftVariant::QuarterLambdaSquared);

  // Compare actions on probes: X psi = A(A psi)/2m + (1/2) m w2 y^2 psi.
  double worst = 0.0;
  for (const auto& psi : probe_states(g, p, 6)) {
    ComplexVector xpsi = a * (a * psi) / (2.0 * p.m);
    for (int j = 0; j < g.n_points; ++j) {
      const double y = g.node(j);
      xpsi(j) += 0.5 * p.m * w2 * y * y * psi(j);
    }
    const ComplexVector hv = h_sym * psi;
    worst = std::max(worst, (xpsi - hv).norm() / std::max(hv.norm(), kTiny));
  }
  return worst;
}

double completed_square_defect(const FockBasis& b, const PhysParams& p) {
  b.validate();
  p.validate();
  const ComplexMatrix y = position_matrix_padded(b, p);
  const ComplexMatrix a = momentum_matrix_padded(b, p) + (0.5 * p.m * p.lambda_damp) * y;
  const double w2 = shifted_freq_sq(p, FrequencyShiftVariant::QuarterLambdaSquared);
  ComplexMatrix x = (a * a) / (2.0 * p.m);
  x += (0.5 * p.m * w2) * (y * y);
  const ComplexMatrix h_sym = build_hamiltonian(b, p, OrderingScheme::Symmetrized);
  const int interior = b.n_basis - 2;  // drop the top-2 rows/cols of the truncation
  const ComplexMatrix diff =
      x.topLeftCorner(interior, interior) - h_sym.topLeftCorner(interior, interior);
  return diff.norm() / std::max(h_sym.topLeftCorner(interior, interior).norm(), kTiny);
}

GaugeEquivalenceReport gauge_equivalence_defect(const Grid& g, const PhysParams& p,
                                                FrequencyShiftVariant variant) {
  g.validate();
  p.validate();
  if (regime_of(p) != Regime::Underdamped) {
    raise("InvalidParams", "gauge equivalence check requires underdamped params");
  }
  const Grid fine{g.half_width, 2 * g.n_points - 1};
  GaugeEquivalenceReport report;
  const auto defect_at = [&](const Grid& mesh) {
    const ComplexMatrix x = gauge_conjugated_hamiltonian(mesh, p);
    const ComplexMatrix target = shifted_oscillator(mesh, p, variant);
    return probe_action_defect(x, target, mesh, p);
  };
  report.defect_coarse = defect_at(g);
  report.defect_fine = defect_at(fine);
  if (report.defect_fine == 0.0) {
    report.order = std::numeric_limits<double>::infinity();
  } else {
    report.order = std::log2(report.defect_coarse / report.defect_fine);
  }
  return report;
}

double gauge_eigenvalue_mismatch(const Grid& g, const PhysParams& p, int n_levels,
                                 FrequencyShiftVariant variant) {
  if (n_levels < 1) raise("InvalidArgument", "n_levels must be >= 1");
  const ComplexMatrix x = gauge_conjugated_hamiltonian(g, p);
  const ComplexMatrix target = shifted_oscillator(g, p, variant);
  const Spectrum sx = eig_hermitian(x);
  const Spectrum st = eig_hermitian(target);
  double worst = 0.0;
  for (int k = 0; k < n_levels; ++k) {
    worst = std::max(worst, std::abs(sx.eigenvalues(k) - st.eigenvalues(k)));
  }
  return worst;
}

}  // namespace dho
