#include "dho/analysis.hpp"

#include <cmath>

namespace dho {

namespace {

void check_resolvable(const Backend& backend, int n_levels) {
  if (n_levels < 1) raise("InvalidArgument", "n_levels must be >= 1");
  const bool ok = std::visit(
      [&](const auto& ctx) {
        using T = std::decay_t<decltype(ctx)>;
        if constexpr (std::is_same_v<T, FockBasis>) {
          return n_levels <= ctx.n_basis / 4;
        } else {
          return n_levels <= ctx.n_points / 10;
        }
      },
      backend);
  if (!ok) {
    raise("UnresolvableLevels",
          "n_levels must stay within n_basis/4 (fock) or n_points/10 (grid)");
  }
}

Spectrum solve_backend(const PhysParams& p, OrderingScheme ordering, const Backend& backend) {
  const ComplexMatrix h = build_hamiltonian(backend, p, ordering);
  if (ordering == OrderingScheme::Symmetrized) return eig_hermitian(h);
  return eig_general(h);
}

}  // namespace

double default_tol_abs(const Backend& backend, const PhysParams& p) {
  const double unit = p.hbar * std::max(p.omega, 1e-300);
  return std::holds_alternative<FockBasis>(backend) ? 1e-8 * unit : 5e-3 * unit;
}

const char* backend_name(const Backend& backend) {
  return std::holds_alternative<FockBasis>(backend) ? "fock" : "grid";
}

SpectrumReport compare_spectrum(const PhysParams& p, OrderingScheme ordering,
                                const Backend& backend, int n_levels,
                                std::optional<double> tol_abs) {
  p.validate();
  check_resolvable(backend, n_levels);

  SpectrumReport report;
  report.params = p;
  report.ordering = ordering;
  report.backend = backend;
  report.regime = regime_of(p);
  report.compared_levels = n_levels;
  report.tol_abs = tol_abs.value_or(default_tol_abs(backend, p));
  report.comparison_enabled = (report.regime == Regime::Underdamped);

  const Spectrum spectrum = solve_backend(p, ordering, backend);
  report.trace_defect = spectrum.trace_defect;
  report.trace2_defect = spectrum.trace2_defect;
  report.solver_converged = spectrum.converged;

  const Complex shift = ordering_shift(p, ordering);
  for (int n = 0; n < n_levels; ++n) {
    const Complex numeric = spectrum.eigenvalues(n);
    const Complex analytic = analytic_energy(p, n) + shift;
    report.numeric.push_back(numeric);
    report.analytic.push_back(analytic);
    const double abs_err = std::abs(numeric - analytic);
    report.max_abs_err = std::max(report.max_abs_err, abs_err);
    report.max_rel_err =
        std::max(report.max_rel_err, abs_err / std::max(std::abs(analytic), 1e-300));
    report.max_imag_part = std::max(report.max_imag_part, std::abs(numeric.imag()));
  }

  bool pass = report.comparison_enabled && report.solver_converged &&
              report.max_abs_err <= report.tol_abs;
  if (ordering == OrderingScheme::Symmetrized) {
    pass = pass && report.max_imag_part <= report.tol_abs;
  }
  report.pass = pass;
  return report;
}

OrderingShiftCheck ordering_shift_check(const PhysParams& p, const Backend& backend,
                                        int n_levels, std::optional<double> tol) {
  p.validate();
  check_resolvable(backend, n_levels);

  OrderingShiftCheck check;
  check.tol = tol.value_or(std::holds_alternative<FockBasis>(backend)
                               ? 1e-8
                               : 1e-4 * p.hbar * p.omega);

  const Spectrum sym = solve_backend(p, OrderingScheme::Symmetrized, backend);
  const Spectrum yp = solve_backend(p, OrderingScheme::YP, backend);
  const Spectrum py = solve_backend(p, OrderingScheme::PY, backend);
  const Complex shift = ordering_shift(p, OrderingScheme::YP);
  for (int n = 0; n < n_levels; ++n) {
    check.max_deviation_yp = std::max(
        check.max_deviation_yp,
        std::abs((yp.eigenvalues(n) - sym.eigenvalues(n)) - shift));
    check.max_deviation_py = std::max(
        check.max_deviation_py,
        std::abs((py.eigenvalues(n) - sym.eigenvalues(n)) + shift));
  }
  check.pass = check.max_deviation_yp <= check.tol && check.max_deviation_py <= check.tol;
  return check;
}

std::vector<SweepRow> damping_sweep(const PhysParams& base, const std::vector<double>& lambdas,
                                    const Backend& backend, int n_levels) {
  base.validate();
  check_resolvable(backend, n_levels);
  std::vector<SweepRow> rows;
  rows.reserve(lambdas.size() * static_cast<size_t>(n_levels));
  for (const double lambda : lambdas) {
    if (lambda < 0.0) raise("InvalidParams", "lambda values must be >= 0");
    PhysParams p = base;
    p.lambda_damp = lambda;
    const Regime regime = regime_of(p);
    const Spectrum spectrum = solve_backend(p, OrderingScheme::Symmetrized, backend);
    for (int n = 0; n < n_levels; ++n) {
      SweepRow row;
      row.lambda = lambda;
      row.n = n;
      row.numeric = spectrum.eigenvalues(n);
      row.analytic = analytic_energy(p, n);
      row.regime = regime;
      row.comparison_enabled = (regime == Regime::Underdamped);
      row.abs_err = row.comparison_enabled ? std::abs(row.numeric - row.analytic) : 0.0;
      rows.push_back(row);
    }
  }
  return rows;
}

}  // namespace dho
