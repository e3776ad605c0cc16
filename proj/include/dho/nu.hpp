#ifndef DHO_NU_HPP
#define DHO_NU_HPP

#include "dho/model.hpp"
#include "dho/types.hpp"

#include <string>
#include <vector>

namespace dho {

/// Polynomial with complex coefficients, ascending degree, kept canonical:
/// the highest stored coefficient is nonzero unless the polynomial is the
/// zero polynomial (stored as the single coefficient 0).
class ComplexPoly {
 public:
  ComplexPoly() : coeffs_{Complex(0.0, 0.0)} {}
  ComplexPoly(std::initializer_list<Complex> coeffs);
  explicit ComplexPoly(std::vector<Complex> coeffs);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.size() == 1 && coeffs_[0] == Complex(0.0, 0.0); }
  Complex coeff(int k) const;
  const std::vector<Complex>& coeffs() const { return coeffs_; }

  ComplexPoly derivative() const;
  Complex evaluate(Complex y) const;

  friend ComplexPoly operator+(const ComplexPoly& a, const ComplexPoly& b);
  friend ComplexPoly operator-(const ComplexPoly& a, const ComplexPoly& b);
  friend ComplexPoly operator*(const ComplexPoly& a, const ComplexPoly& b);
  friend ComplexPoly operator*(Complex c, const ComplexPoly& a);
  bool operator==(const ComplexPoly& other) const { return coeffs_ == other.coeffs_; }

 private:
  void normalize();
  std::vector<Complex> coeffs_;
};

/// Value affine in the energy: c0 + c1 * E.
struct AffineComplex {
  Complex c0{0.0, 0.0};
  Complex c1{0.0, 0.0};
  Complex at(Complex energy) const { return c0 + c1 * energy; }
};

/// Equation psi'' + (tau_tilde/sigma) psi' + (sigma_tilde/sigma^2) psi = 0
/// with sigma_tilde(y; E) = sigma_tilde_base(y) + energy_coeff * E.
struct NUProblem {
  ComplexPoly sigma;             // deg <= 2
  ComplexPoly tau_tilde;         // deg <= 1
  ComplexPoly sigma_tilde_base;  // deg <= 2
  Complex energy_coeff{0.0, 0.0};

  void validate() const;
};

struct NUSolution {
  AffineComplex k;             // root of the perfect-square condition
  ComplexPoly pi_poly;         // selected branch, deg <= 1
  ComplexPoly tau;             // tau_tilde + 2 pi
  Complex alpha;               // slope of the square-root factor a*y + b
  AffineComplex beta_note;     // energy_coeff*E minus the constant under the root
  AffineComplex lambda_affine; // lambda(E) = k(E) + pi'
  std::vector<Complex> levels;
};

/// Perfect-square (zero discriminant) condition on
///   Q(y; k, E) = ((sigma' - tau_tilde)/2)^2 - sigma_tilde + k sigma.
/// Returns every k root expressible as an affine function of E (all of them
/// when sigma is constant).  Throws Error("DegenerateProblem") when Q has no
/// y-dependence to square, Error("NonAffineEnergy") when the roots are not
/// affine in E (use energy_levels, which falls back to a secant solve).
std::vector<AffineComplex> discriminant_condition(const NUProblem& problem);

struct BranchResult {
  ComplexPoly pi_poly;
  ComplexPoly tau;
  Complex alpha;  // a in the factorization Q = (a y + b)^2
  Complex b;
};

/// Forms both candidates pi = (sigma' - tau_tilde)/2 +- (a y + b) and returns
/// the one whose tau = tau_tilde + 2 pi has Re(tau') < 0 (the normalizable
/// branch).  Throws Error("NoBoundStateBranch") if neither qualifies.
BranchResult select_branch(const NUProblem& problem, const AffineComplex& k);

/// Full pipeline on the affine path.
NUSolution solve_nu(const NUProblem& problem, int n_max);

/// E_0..E_n_max.  Affine problems are solved exactly; otherwise a complex
/// secant iteration runs from guess_base*(n + 1/2) per level and
/// Error("NonAffineEnergy") is thrown if it fails to converge.
std::vector<Complex> energy_levels(const NUProblem& problem, int n_max,
                                   Complex guess_base = Complex(1.0, 0.0));

/// Same, with an explicit starting guess per level (guesses[n] seeds E_n).
std::vector<Complex> energy_levels(const NUProblem& problem,
                                   const std::vector<Complex>& guesses);

enum class NUPreset { PlainHO, DampedSymCorrected, DampedSymPrinted, DampedNaive };

/// plain-ho | damped-sym-corrected | damped-sym-printed | damped-naive
NUPreset nu_preset_from_name(const std::string& name);
const char* to_string(NUPreset preset);

/// The four shipped problems.  The damped family discretizes
///   psi'' - (m lambda y / (i hbar)) psi'
///        + (2m/hbar^2)(E - m omega^2 y^2 / 2 + s * i hbar lambda/4) psi = 0
/// with s = +1 (corrected), s = -1 (printed), s = 0 (naive, no constant);
/// plain-ho is the undamped oscillator regardless of params.lambda_damp.
NUProblem make_nu_preset(NUPreset preset, const PhysParams& p);

}  // namespace dho

#endif  // DHO_NU_HPP
