#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "gft/analytic.hpp"
#include "gft/radii.hpp"
#include "gft/regions.hpp"

namespace gft {

// The oracle never touches the closed forms: it uses only the covering disc
// D(a_F(r), c_F(r)) and region membership.

struct OracleConfig {
  double tol = 1e-9;          ///< bisection half-width target
  int boundary_samples = 720;  ///< points on the disc circle per containment test
  int coarse_steps = 200;      ///< bracketing grid r = i / coarse_steps
};

/// Throws OutOfRangeError unless tol > 0, boundary_samples >= 8, coarse_steps >= 10.
void validate(const OracleConfig& cfg);

/// True when all `samples` equally spaced points of the circle |w - c| = rho
/// (angle 0 and, for even counts, pi hit exactly) lie in the open domain.
bool disc_in_domain(const TargetDomain& d, const Disc& disc, int samples);

struct NumericRadius {
  double value = 1.0;
  /// Containment held at every coarse grid point; value is 1.
  bool reached_one = false;
  /// Containment came back after the first failure somewhere on the grid.
  bool non_monotone = false;
  /// Index i of the first coarse point r = i / coarse_steps that failed.
  int first_failure_step = -1;
};

/// Largest r* such that D(a_F(r), c_F(r)) lies in the class's domain for all
/// r <= r*: full coarse scan, then bisection inside the first failing bracket.
NumericRadius numeric_radius_detailed(TargetClass c, const ClassParams& p, const OracleConfig& cfg = {});

/// Value of numeric_radius_detailed; 1 when no failure was found in (0, 1).
double numeric_radius(TargetClass c, const ClassParams& p, const OracleConfig& cfg = {});

struct SharpnessReport {
  Complex witness_z;
  Complex witness_w;
  /// Distance of the class's boundary functional from its critical value at
  /// the witness, e.g. | |Log w| - 1 | for Exp or |w - phi(-1)| for Cardioid.
  double boundary_residual = 0.0;
  /// Smallest signed_margin of the extremal image of |z| = R(1 - eps).
  double inside_margin_below = 0.0;
  /// All sampled image points at R(1 - eps) are inside.
  bool interior_below = false;
  /// The witness at R(1 + eps) is outside (vacuously true when R(1 + eps) >= 1).
  bool exterior_above = false;
};

/// Checks that the extremal F(z) = z (1 - z)^{2a-2} (1 + z)^b attains the
/// boundary at z = -R (Sigma0) or z = +R (SigmaTilde0). Throws WitnessPoleError
/// for R >= 1 and OutOfRangeError for R <= 0 or eps outside (0, 1 - R).
SharpnessReport verify_sharpness(TargetClass c, const ClassParams& p, double R, Branch branch, double eps,
                                 int samples = 720);

/// Same, taking the branch from compute_radius(c, p).
SharpnessReport verify_sharpness(TargetClass c, const ClassParams& p, double R, double eps);

/// Class boundary functional residual at w for the given branch.
double boundary_residual(TargetClass c, const ClassParams& p, Branch branch, Complex w);

struct DiscBoundReport {
  std::size_t checked = 0;
  std::size_t disc_violations = 0;  ///< |w - a_F| > c_F + 1e-10
  std::size_t q_violations = 0;     ///< |zQ'/Q + n r^2/(1-r^2)| > n r/(1-r^2) + 1e-10
};

/// Samples z = r e^{i theta_j} for each spec and r and counts violations of
/// the covering disc and the separate Q-only disc.
DiscBoundReport verify_disc_bound(std::span<const ExtremalSpec> specs, std::span<const double> r_grid, int samples);

/// Random rotated-extremal specs: x uniform on the circle, alpha in [0, 1],
/// beta in (0, 5], n in [1, max_degree], zeros with modulus in [1, max_modulus]
/// and uniform angle. Deterministic in `seed`.
std::vector<ExtremalSpec> random_extremal_specs(std::size_t count, std::uint64_t seed, int max_degree = 5,
                                                double max_modulus = 10.0);

}  // namespace gft
