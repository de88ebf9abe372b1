#include "gft/analytic.hpp"

#include <cmath>
#include <string>

#include "gft/errors.hpp"

namespace gft {

namespace {

void require_radius(double r) {
  if (!std::isfinite(r) || r < 0.0 || r >= 1.0) {
    throw OutOfRangeError("r", "need 0 <= r < 1, got " + std::to_string(r));
  }
}

}  // namespace

ExtremalSpec make_extremal_spec(const ClassParams& params, Complex rotation, PolynomialSpec polynomial) {
  if (!(std::abs(std::abs(rotation) - 1.0) <= 1e-12)) {
    throw OutOfRangeError("rotation", "need |x| = 1");
  }
  return ExtremalSpec{params, rotation, std::move(polynomial)};
}

Complex log_derivative_Q(const PolynomialSpec& q, Complex z) {
  Complex sum{0.0, 0.0};
  const auto zeros = q.zeros();
  for (std::size_t k = 0; k < zeros.size(); ++k) {
    const Complex den = z - zeros[k];
    if (den == Complex(0.0, 0.0)) throw PoleHitError("z equals zero #" + std::to_string(k + 1));
    sum += z / den;
  }
  return sum;
}

Complex extremal_w(const ClassParams& p, Complex z) {
  const double a = p.alpha();
  const double b = p.beta();
  const Complex den = 1.0 - z * z;
  if (den == Complex(0.0, 0.0)) throw PoleHitError("z = +-1");
  return ((1.0 - 2.0 * a - b) * z * z + (2.0 - 2.0 * a + b) * z + 1.0) / den;
}

Complex general_w(const ExtremalSpec& spec, Complex z) {
  if (!(std::abs(z) < 1.0)) throw OutOfRangeError("z", "need |z| < 1");
  const double a = spec.params.alpha();
  const Complex xz = spec.rotation * z;
  const Complex starlike = (1.0 + (1.0 - 2.0 * a) * xz) / (1.0 - xz);
  const double weight = spec.params.beta() / spec.polynomial.degree();
  return starlike + weight * log_derivative_Q(spec.polynomial, z);
}

Disc disc_bound(const ClassParams& p, double r) {
  require_radius(r);
  const double a = p.alpha();
  const double b = p.beta();
  const double den = 1.0 - r * r;
  return Disc{(1.0 - (2.0 * a - 1.0 + b) * r * r) / den, (2.0 - 2.0 * a + b) * r / den};
}

double psi_lower_bound(const ClassParams& p, double r) {
  require_radius(r);
  return (1.0 - (1.0 - 2.0 * p.alpha()) * r) / (1.0 + r) - p.beta() * r / (1.0 - r);
}

Disc q_disc_bound(int degree, double r) {
  require_radius(r);
  const double den = 1.0 - r * r;
  return Disc{-degree * r * r / den, degree * r / den};
}

}  // namespace gft
