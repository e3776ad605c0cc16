#ifndef DHO_TYPES_HPP
#define DHO_TYPES_HPP

#include <Eigen/Dense>

#include <complex>
#include <stdexcept>
#include <string>
#include <utility>

namespace dho {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;
using Index = Eigen::Index;

inline constexpr Complex kImag{0.0, 1.0};

/// Library error carrying a short machine-checkable code ("DimensionMismatch",
/// "NotHermitian", ...) in front of the human-readable detail.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& detail)
      : std::runtime_error(detail.empty() ? code : code + ": " + detail),
        code_(std::move(code)) {}

  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

[[noreturn]] inline void raise(const std::string& code, const std::string& detail = "") {
  throw Error(code, detail);
}

}  // namespace dho

#endif  // DHO_TYPES_HPP
