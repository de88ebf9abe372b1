#include "gft/params.hpp"

#include <cmath>
#include <string>

#include "gft/errors.hpp"

namespace gft {

ClassParams validate_params(double alpha, double beta, double lambda) {
  if (!std::isfinite(alpha) || alpha < 0.0 || alpha > 1.0) {
    throw OutOfRangeError("alpha", "need 0 <= alpha <= 1, got " + std::to_string(alpha));
  }
  if (!std::isfinite(beta) || beta <= 0.0) {
    throw OutOfRangeError("beta", "need beta > 0, got " + std::to_string(beta));
  }
  if (!std::isfinite(lambda) || lambda < 0.0 || lambda >= 1.0) {
    throw OutOfRangeError("lambda", "need 0 <= lambda < 1, got " + std::to_string(lambda));
  }
  return ClassParams(alpha, beta, lambda);
}

Complex PolynomialSpec::evaluate(Complex z) const {
  Complex q{1.0, 0.0};
  for (const Complex& zk : zeros_) q *= 1.0 - z / zk;
  return q;
}

PolynomialSpec validate_polynomial(std::vector<Complex> zeros) {
  if (zeros.empty()) throw OutOfRangeError("zeros", "polynomial must be non-constant");
  for (std::size_t k = 0; k < zeros.size(); ++k) {
    const Complex& z = zeros[k];
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
      throw OutOfRangeError("zeros", "zero #" + std::to_string(k + 1) + " is not finite");
    }
    if (std::abs(z) < 1.0) throw ZeroInsideDiscError(k + 1);
  }
  return PolynomialSpec(std::move(zeros));
}

std::string_view to_string(Branch b) noexcept {
  return b == Branch::Sigma0 ? "sigma0" : "sigma_tilde0";
}

std::string_view to_string(WitnessSign s) noexcept {
  return s == WitnessSign::MinusSigma ? "-R" : "+R";
}

}  // namespace gft
