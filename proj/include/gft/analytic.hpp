#pragma once

#include "gft/params.hpp"

namespace gft {

/// f(z) = z (1 - x z)^{2 alpha - 2} with |x| = 1 (a rotation of the extremal
/// starlike function of order alpha) paired with a polynomial Q.
struct ExtremalSpec {
  ClassParams params;
  Complex rotation;
  PolynomialSpec polynomial;
};

/// Throws OutOfRangeError when | |x| - 1 | > 1e-12.
ExtremalSpec make_extremal_spec(const ClassParams& params, Complex rotation, PolynomialSpec polynomial);

/// z Q'(z) / Q(z) = sum_k z / (z - z_k). Throws PoleHitError at a zero.
Complex log_derivative_Q(const PolynomialSpec& q, Complex z);

/// w(z) = z F'(z) / F(z) for F(z) = z (1 - z)^{2 alpha - 2} (1 + z)^beta:
///   ((1 - 2a - b) z^2 + (2 - 2a + b) z + 1) / (1 - z^2).
/// Independent of deg Q. Throws PoleHitError at z = +-1.
Complex extremal_w(const ClassParams& p, Complex z);

/// z F'(z) / F(z) = (1 + (1 - 2a) x z) / (1 - x z) + (beta / n) z Q'/Q.
/// Requires |z| < 1.
Complex general_w(const ExtremalSpec& spec, Complex z);

/// Disc D(a_F(r), c_F(r)) that contains z F'/F for every admissible f and Q
/// and every |z| <= r:
///   a_F = (1 - (2a - 1 + b) r^2) / (1 - r^2),   c_F = (2 - 2a + b) r / (1 - r^2).
/// Requires 0 <= r < 1.
Disc disc_bound(const ClassParams& p, double r);

/// psi(r) = (1 - (1 - 2a) r) / (1 + r) - b r / (1 - r) = a_F(r) - c_F(r),
/// the lower bound for Re w on |z| <= r.
double psi_lower_bound(const ClassParams& p, double r);

/// Disc of the Q-only bound: | zQ'/Q + n r^2/(1-r^2) | <= n r / (1 - r^2).
Disc q_disc_bound(int degree, double r);

}  // namespace gft
