#ifndef DHO_MODEL_HPP
#define DHO_MODEL_HPP

#include "dho/types.hpp"

namespace dho {

/// The four scalars of the damped-oscillator model.
struct PhysParams {
  double m = 1.0;            // mass
  double omega = 1.0;        // angular frequency
  double lambda_damp = 1.0;  // damping coefficient
  double hbar = 1.0;         // action quantum

  /// Throws Error("InvalidParams") unless m > 0, hbar > 0, omega >= 0,
  /// lambda_damp >= 0 and all four are finite.
  void validate() const;
};

/// Operator ordering of the classical y*p coupling term.
///   YP          -> (lambda/2) y p
///   PY          -> (lambda/2) p y
///   Symmetrized -> lambda (y p + p y) / 4   (Hermitian)
enum class OrderingScheme { YP, PY, Symmetrized };

enum class Regime { Underdamped, Critical, Overdamped };

const char* to_string(OrderingScheme s);
const char* to_string(Regime r);

/// Classifies the sign of omega^2 - lambda^2/4.  Critical means
/// |2 omega - lambda| <= 1e-12 * max(2 omega, lambda, 1).
Regime regime_of(const PhysParams& p);

/// sqrt(omega^2 - lambda^2/4) on the principal branch: real and >= 0 when
/// underdamped, exactly 0 at critical damping, positive imaginary beyond it.
Complex effective_frequency(const PhysParams& p);

/// hbar * sqrt(omega^2 - lambda^2/4) * (n + 1/2).  Real iff lambda <= 2 omega;
/// the overdamped value is a formula-level analytic continuation only.
Complex analytic_energy(const PhysParams& p, int n);

/// The exact constant c with H(ordering) = H(Symmetrized) + c * I, obtained
/// from (lambda/2) y p = lambda (y p + p y)/4 + (lambda/4) [y, p]:
/// +i hbar lambda / 4 for YP, its negative for PY, 0 for Symmetrized.
Complex ordering_shift(const PhysParams& p, OrderingScheme ordering);

}  // namespace dho

#endif  // DHO_MODEL_HPP
