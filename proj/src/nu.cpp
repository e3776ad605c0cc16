#include "dho/nu.hpp"

#include <cmath>
#include <limits>
#include <optional>

namespace dho {

namespace {

const Complex kZero(0.0, 0.0);

// Quadratic-in-y coefficients of Q(y; k, E) and of its k-discriminant.
// R(y) = ((sigma' - tau_tilde)/2)^2 - sigma_tilde_base, so that
// Q = R - eps*E + k*sigma with q_j = R_j + k s_j (j = 1, 2) and
// q_0 = R_0 - eps*E + k s_0.
struct QStructure {
  ComplexPoly half_diff;  // (sigma' - tau_tilde)/2
  Complex r0, r1, r2;     // coefficients of R
  Complex s0, s1, s2;     // coefficients of sigma
  Complex a_quad;         // k^2 coefficient of the discriminant
  Complex b0, b1;         // k coefficient, affine in E
  Complex c0, c1;         // constant coefficient, affine in E
};

QStructure q_structure(const NUProblem& problem) {
  QStructure q;
  q.half_diff = Complex(0.5, 0.0) * (problem.sigma.derivative() - problem.tau_tilde);
  const ComplexPoly r = q.half_diff * q.half_diff - problem.sigma_tilde_base;
  q.r0 = r.coeff(0);
  q.r1 = r.coeff(1);
  q.r2 = r.coeff(2);
  q.s0 = problem.sigma.coeff(0);
  q.s1 = problem.sigma.coeff(1);
  q.s2 = problem.sigma.coeff(2);
  const Complex eps = problem.energy_coeff;
  q.a_quad = q.s1 * q.s1 - 4.0 * q.s2 * q.s0;
  q.b0 = 2.0 * q.r1 * q.s1 - 4.0 * (q.r2 * q.s0 + q.r0 * q.s2);
  q.b1 = 4.0 * q.s2 * eps;
  q.c0 = q.r1 * q.r1 - 4.0 * q.r2 * q.r0;
  q.c1 = 4.0 * q.r2 * eps;
  return q;
}

struct BranchCandidate {
  Complex lambda_of_e;  // k + pi' at the probed energy
  Complex tau_prime;
};

// All normalizable branches at a fixed energy (numeric path).
std::vector<BranchCandidate> candidates_at(const NUProblem& problem, const QStructure& q,
                                           Complex energy) {
  std::vector<Complex> k_roots;
  const Complex b = q.b0 + q.b1 * energy;
  const Complex c = q.c0 + q.c1 * energy;
  if (q.a_quad == kZero) {
    if (b != kZero) k_roots.push_back(-c / b);
  } else {
    const Complex disc = std::sqrt(b * b - 4.0 * q.a_quad * c);
    const Complex big = (std::abs(-b + disc) >= std::abs(-b - disc)) ? (-b + disc) : (-b - disc);
    const Complex r1 = big / (2.0 * q.a_quad);
    k_roots.push_back(r1);
    if (r1 != kZero) k_roots.push_back(c / (q.a_quad * r1));
  }

  std::vector<BranchCandidate> out;
  const Complex tau_tilde_prime = problem.tau_tilde.coeff(1);
  const Complex half_diff_prime = q.half_diff.coeff(1);
  for (const Complex& k : k_roots) {
    const Complex q2 = q.r2 + k * q.s2;
    const Complex a = std::sqrt(q2);
    for (const double sign : {+1.0, -1.0}) {
      const Complex pi_prime = half_diff_prime + sign * a;
      const Complex tau_prime = tau_tilde_prime + 2.0 * pi_prime;
      if (tau_prime.real() < 0.0) {
        out.push_back({k + pi_prime, tau_prime});
      }
    }
  }
  return out;
}

Complex lambda_target(const NUProblem& problem, Complex tau_prime, int n) {
  // -n tau' - n(n-1) sigma''/2, with sigma''/2 equal to the y^2 coefficient.
  return -static_cast<double>(n) * tau_prime -
         static_cast<double>(n) * static_cast<double>(n - 1) * problem.sigma.coeff(2);
}

std::optional<Complex> secant_level(const NUProblem& problem, const QStructure& q, int n,
                                    Complex guess) {
  auto f = [&](Complex energy) -> std::optional<Complex> {
    const auto cands = candidates_at(problem, q, energy);
    std::optional<Complex> best;
    double best_mod = std::numeric_limits<double>::infinity();
    for (const auto& cand : cands) {
      const Complex val = cand.lambda_of_e - lambda_target(problem, cand.tau_prime, n);
      const double mod = std::abs(val);
      if (mod < best_mod) {
        best_mod = mod;
        best = val;
      }
    }
    return best;
  };

  Complex e0 = guess;
  Complex e1 = guess + std::max(1e-4, 1e-4 * std::abs(guess));
  auto f0 = f(e0);
  auto f1 = f(e1);
  for (int it = 0; it < 100 && f0 && f1; ++it) {
    if (std::abs(*f1) <= 1e-12 * (1.0 + std::abs(e1))) return e1;
    const Complex denom = *f1 - *f0;
    if (denom == kZero) break;
    const Complex e2 = e1 - *f1 * (e1 - e0) / denom;
    e0 = e1;
    f0 = f1;
    e1 = e2;
    f1 = f(e1);
    if (std::abs(e1 - e0) <= 1e-14 * (1.0 + std::abs(e1)) && f1 &&
        std::abs(*f1) <= 1e-10 * (1.0 + std::abs(e1))) {
      return e1;
    }
  }
  return std::nullopt;
}

}  // namespace

ComplexPoly::ComplexPoly(std::initializer_list<Complex> coeffs)
    : coeffs_(coeffs.begin(), coeffs.end()) {
  normalize();
}

ComplexPoly::ComplexPoly(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) {
  normalize();
}

void ComplexPoly::normalize() {
  while (coeffs_.size() > 1 && coeffs_.back() == kZero) coeffs_.pop_back();
  if (coeffs_.empty()) coeffs_.push_back(kZero);
}

Complex ComplexPoly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(coeffs_.size())) return kZero;
  return coeffs_[static_cast<size_t>(k)];
}

ComplexPoly ComplexPoly::derivative() const {
  if (coeffs_.size() == 1) return ComplexPoly();
  std::vector<Complex> out(coeffs_.size() - 1);
  for (size_t i = 1; i < coeffs_.size(); ++i) {
    out[i - 1] = static_cast<double>(i) * coeffs_[i];
  }
  return ComplexPoly(std::move(out));
}

Complex ComplexPoly::evaluate(Complex y) const {
  Complex acc = kZero;
  for (size_t i = coeffs_.size(); i-- > 0;) acc = acc * y + coeffs_[i];
  return acc;
}

ComplexPoly operator+(const ComplexPoly& a, const ComplexPoly& b) {
  std::vector<Complex> out(std::max(a.coeffs_.size(), b.coeffs_.size()), kZero);
  for (size_t i = 0; i < a.coeffs_.size(); ++i) out[i] += a.coeffs_[i];
  for (size_t i = 0; i < b.coeffs_.size(); ++i) out[i] += b.coeffs_[i];
  return ComplexPoly(std::move(out));
}

ComplexPoly operator-(const ComplexPoly& a, const ComplexPoly& b) {
  return a + Complex(-1.0, 0.0) * b;
}

ComplexPoly operator*(const ComplexPoly& a, const ComplexPoly& b) {
  if (a.is_zero() || b.is_zero()) return ComplexPoly();
  std::vector<Complex> out(a.coeffs_.size() + b.coeffs_.size() - 1, kZero);
  for (size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (size_t j = 0; j < b.coeffs_.size(); ++j) {
      out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return ComplexPoly(std::move(out));
}

ComplexPoly operator*(Complex c, const ComplexPoly& a) {
  std::vector<Complex> out = a.coeffs_;
  for (auto& x : out) x *= c;
  return ComplexPoly(std::move(out));
}

void NUProblem::validate() const {
  if (sigma.is_zero()) raise("DegenerateProblem", "sigma must be nonzero");
  if (sigma.degree() > 2 || tau_tilde.degree() > 1 || sigma_tilde_base.degree() > 2) {
    raise("InvalidArgument", "degree bounds: sigma <= 2, tau_tilde <= 1, sigma_tilde <= 2");
  }
  if (energy_coeff == kZero) {
    raise("InvalidArgument", "energy_coeff must be nonzero (energy must appear)");
  }
}

std::vector<AffineComplex> discriminant_condition(const NUProblem& problem) {
  problem.validate();
  const QStructure q = q_structure(problem);
  if (q.r2 == kZero && q.s2 == kZero && q.r1 == kZero && q.s1 == kZero) {
    raise("DegenerateProblem", "Q has no y-dependence, nothing to factor as a square");
  }
  if (q.a_quad == kZero) {
    if (q.b0 == kZero && q.b1 == kZero) {
      raise("DegenerateProblem",
            (q.c0 == kZero && q.c1 == kZero)
                ? "discriminant vanishes identically; k is unconstrained"
                : "no admissible k: square-root structure degenerates");
    }
    if (q.b1 != kZero) {
      raise("NonAffineEnergy", "k root is rational in E; use energy_levels");
    }
    return {AffineComplex{-q.c0 / q.b0, -q.c1 / q.b0}};
  }
  if (q.b1 == kZero && q.c1 == kZero) {
    // energy-free quadratic: two constant roots
    const Complex disc = std::sqrt(q.b0 * q.b0 - 4.0 * q.a_quad * q.c0);
    const Complex big =
        (std::abs(-q.b0 + disc) >= std::abs(-q.b0 - disc)) ? (-q.b0 + disc) : (-q.b0 - disc);
    const Complex r1 = big / (2.0 * q.a_quad);
    std::vector<AffineComplex> roots{AffineComplex{r1, kZero}};
    if (r1 != kZero) roots.push_back(AffineComplex{q.c0 / (q.a_quad * r1), kZero});
    return roots;
  }
  raise("NonAffineEnergy", "k roots are not affine in E; use energy_levels");
}

BranchResult select_branch(const NUProblem& problem, const AffineComplex& k) {
  problem.validate();
  const QStructure q = q_structure(problem);

  // Coefficients of the perfect square must not retain energy dependence on
  // this (affine) path.
  if (k.c1 * q.s2 != kZero || k.c1 * q.s1 != kZero) {
    raise("NonAffineEnergy", "square-root factor depends on E; use energy_levels");
  }
  const Complex q2 = q.r2 + k.c0 * q.s2;
  const Complex q1 = q.r1 + k.c0 * q.s1;
  const Complex a = std::sqrt(q2);
  Complex b;
  if (a == kZero) {
    // Q degenerates to its constant term; its perfect-square root is constant.
    const Complex e_coeff = k.c1 * q.s0 - problem.energy_coeff;
    if (std::abs(e_coeff) > 1e-12 * (1.0 + std::abs(problem.energy_coeff))) {
      raise("NonAffineEnergy", "constant term depends on E with no y^2 part");
    }
    b = std::sqrt(q.r0 + k.c0 * q.s0);
  } else {
    b = q1 / (2.0 * a);
  }

  std::optional<BranchResult> picked;
  for (const double sign : {+1.0, -1.0}) {
    const ComplexPoly root_factor{sign * b, sign * a};
    BranchResult cand;
    cand.pi_poly = q.half_diff + root_factor;
    cand.tau = problem.tau_tilde + Complex(2.0, 0.0) * cand.pi_poly;
    cand.alpha = a;
    cand.b = b;
    const Complex tau_prime = cand.tau.coeff(1);
    if (tau_prime.real() < 0.0) {
      if (!picked || tau_prime.real() < picked->tau.coeff(1).real()) picked = cand;
    }
  }
  if (!picked) {
    raise("NoBoundStateBranch", "neither pi branch yields Re(tau') < 0");
  }
  return *picked;
}

NUSolution solve_nu(const NUProblem& problem, int n_max) {
  if (n_max < 0) raise("InvalidArgument", "n_max must be >= 0");
  const auto roots = discriminant_condition(problem);
  const QStructure q = q_structure(problem);

  std::optional<Error> last_error;
  for (const auto& k : roots) {
    try {
      const BranchResult branch = select_branch(problem, k);
      NUSolution sol;
      sol.k = k;
      sol.pi_poly = branch.pi_poly;
      sol.tau = branch.tau;
      sol.alpha = branch.alpha;
      sol.beta_note = AffineComplex{-q.r0, problem.energy_coeff};
      const Complex pi_prime = branch.pi_poly.coeff(1);
      sol.lambda_affine = AffineComplex{k.c0 + pi_prime, k.c1};
      if (sol.lambda_affine.c1 == kZero) {
        raise("DegenerateProblem", "lambda(E) does not depend on E");
      }
      const Complex tau_prime = branch.tau.coeff(1);
      sol.levels.reserve(static_cast<size_t>(n_max) + 1);
      for (int n = 0; n <= n_max; ++n) {
        const Complex target = lambda_target(problem, tau_prime, n);
        sol.levels.push_back((target - sol.lambda_affine.c0) / sol.lambda_affine.c1);
      }
      return sol;
    } catch (const Error& err) {
      if (err.code() == "NoBoundStateBranch") {
        last_error = err;
        continue;
      }
      throw;
    }
  }
  throw last_error.value_or(Error("NoBoundStateBranch", "no k root admits a bound branch"));
}

std::vector<Complex> energy_levels(const NUProblem& problem, int n_max, Complex guess_base) {
  if (n_max < 0) raise("InvalidArgument", "n_max must be >= 0");
  std::vector<Complex> guesses;
  guesses.reserve(static_cast<size_t>(n_max) + 1);
  for (int n = 0; n <= n_max; ++n) guesses.push_back(guess_base * (n + 0.5));
  return energy_levels(problem, guesses);
}

std::vector<Complex> energy_levels(const NUProblem& problem, const std::vector<Complex>& guesses) {
  if (guesses.empty()) raise("InvalidArgument", "at least one guess required");
  const int n_max = static_cast<int>(guesses.size()) - 1;
  try {
    return solve_nu(problem, n_max).levels;
  } catch (const Error& err) {
    if (err.code() != "NonAffineEnergy") throw;
  }
  problem.validate();
  const QStructure q = q_structure(problem);
  std::vector<Complex> levels;
  levels.reserve(guesses.size());
  for (int n = 0; n <= n_max; ++n) {
    const auto level = secant_level(problem, q, n, guesses[static_cast<size_t>(n)]);
    if (!level) {
      raise("NonAffineEnergy",
            "secant iteration failed for level " + std::to_string(n) +
                "; supply a better guess or solve the affine form directly");
    }
    levels.push_back(*level);
  }
  return levels;
}

NUPreset nu_preset_from_name(const std::string& name) {
  if (name == "plain-ho") return NUPreset::PlainHO;
  if (name == "damped-sym-corrected") return NUPreset::DampedSymCorrected;
  if (name == "damped-sym-printed") return NUPreset::DampedSymPrinted;
  if (name == "damped-naive") return NUPreset::DampedNaive;
  raise("InvalidArgument", "unknown NU preset '" + name + "'");
}

const char* to_string(NUPreset preset) {
  switch (preset) {
    case NUPreset::PlainHO: return "plain-ho";
    case NUPreset::DampedSymCorrected: return "damped-sym-corrected";
    case NUPreset::DampedSymPrinted: return "damped-sym-printed";
    case NUPreset::DampedNaive: return "damped-naive";
  }
  return "?";
}

NUProblem make_nu_preset(NUPreset preset, const PhysParams& p) {
  p.validate();
  NUProblem problem;
  problem.sigma = ComplexPoly{Complex(1.0, 0.0)};
  problem.energy_coeff = Complex(2.0 * p.m / (p.hbar * p.hbar), 0.0);
  const Complex y2_coeff(-(p.m * p.m * p.omega * p.omega) / (p.hbar * p.hbar), 0.0);
  const Complex drift(0.0, p.m * p.lambda_damp / p.hbar);
  const Complex half_drift(0.0, p.m * p.lambda_damp / (2.0 * p.hbar));
  switch (preset) {
    case NUPreset::PlainHO:
      problem.tau_tilde = ComplexPoly();
      problem.sigma_tilde_base = ComplexPoly{kZero, kZero, y2_coeff};
      break;
    case NUPreset::DampedSymCorrected:
      problem.tau_tilde = ComplexPoly{kZero, drift};
      problem.sigma_tilde_base = ComplexPoly{half_drift, kZero, y2_coeff};
      break;
    case NUPreset::DampedSymPrinted:
      problem.tau_tilde = ComplexPoly{kZero, drift};
      problem.sigma_tilde_base = ComplexPoly{-half_drift, kZero, y2_coeff};
      break;
    case NUPreset::DampedNaive:
      problem.tau_tilde = ComplexPoly{kZero, drift};
      problem.sigma_tilde_base = ComplexPoly{kZero, kZero, y2_coeff};
      break;
  }
  return problem;
}

}  // namespace dho
