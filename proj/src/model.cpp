#include "dho/model.hpp"

#include <algorithm>
#include <cmath>

namespace dho {

void PhysParams::validate() const {
  const bool finite = std::isfinite(m) && std::isfinite(omega) &&
                      std::isfinite(lambda_damp) && std::isfinite(hbar);
  if (!finite || m <= 0.0 || hbar <= 0.0 || omega < 0.0 || lambda_damp < 0.0) {
    raise("InvalidParams",
          "require m > 0, hbar > 0, omega >= 0, lambda >= 0, all finite");
  }
}

const char* to_string(OrderingScheme s) {
  switch (s) {
    case OrderingScheme::YP: return "yp";
    case OrderingScheme::PY: return "py";
    case OrderingScheme::Symmetrized: return "sym";
  }
  return "?";
}

const char* to_string(Regime r) {
  switch (r) {
    case Regime::Underdamped: return "underdamped";
    case Regime::Critical: return "critical";
    case Regime::Overdamped: return "overdamped";
  }
  return "?";
}

Regime regime_of(const PhysParams& p) {
  p.validate();
  const double gap = 2.0 * p.omega - p.lambda_damp;
  const double scale = std::max({2.0 * p.omega, p.lambda_damp, 1.0});
  if (std::abs(gap) <= 1e-12 * scale) return Regime::Critical;
  return gap > 0.0 ? Regime::Underdamped : Regime::Overdamped;
}

Complex effective_frequency(const PhysParams& p) {
  const double radicand = p.omega * p.omega - 0.25 * p.lambda_damp * p.lambda_damp;
  switch (regime_of(p)) {
    case Regime::Critical: return Complex(0.0, 0.0);
    case Regime::Underdamped: return Complex(std::sqrt(radicand), 0.0);
    case Regime::Overdamped: return Complex(0.0, std::sqrt(-radicand));
  }
  return Complex(0.0, 0.0);
}

Complex analytic_energy(const PhysParams& p, int n) {
  if (n < 0) raise("InvalidParams", "level index must be >= 0");
  return p.hbar * (n + 0.5) * effective_frequency(p);
}

Complex ordering_shift(const PhysParams& p, OrderingScheme ordering) {
  p.validate();
  const Complex c(0.0, 0.25 * p.hbar * p.lambda_damp);
  switch (ordering) {
    case OrderingScheme::YP: return c;
    case OrderingScheme::PY: return -c;
    case OrderingScheme::Symmetrized: return Complex(0.0, 0.0);
  }
  return Complex(0.0, 0.0);
}

}  // namespace dho
