#pragma once

#include <numbers>
#include <string_view>

#include "gft/params.hpp"
#include "gft/polyline.hpp"

namespace gft {

/// The six target regions Omega. Each is symmetric about the real axis and
/// contains w = 1.
///
///   HalfPlane(lambda)  Re w > lambda
///   Exp                |Log w| < 1, image of the disc under e^z
///   Cardioid           image under 1 + 4z/3 + 2z^2/3
///   Rational           image under 1 + (z^2 + kz)/(k^2 - kz), k = sqrt(2) + 1
///   Nephroid           ((u-1)^2 + v^2 - 4/9)^3 < 4v^2/3, image under 1 + z - z^3/3
///   ModSigmoid         |Log(w / (2 - w))| < 1, image under 2 / (1 + e^{-z})
enum class DomainKind { HalfPlane, Exp, Cardioid, Rational, Nephroid, ModSigmoid };

inline constexpr double kRationalK = std::numbers::sqrt2 + 1.0;
inline constexpr int kBoundarySegments = 4096;
/// Points this close to a polyline boundary are classified as outside.
inline constexpr double kBoundaryBand = 1e-9;

/// e^{2 pi i k / n}, exact at the four quarter turns.
Complex unit_circle_point(int k, int n);

class TargetDomain {
 public:
  static TargetDomain half_plane(double lambda);
  static constexpr TargetDomain exp() { return TargetDomain(DomainKind::Exp, 0.0); }
  static constexpr TargetDomain cardioid() { return TargetDomain(DomainKind::Cardioid, 0.0); }
  static constexpr TargetDomain rational() { return TargetDomain(DomainKind::Rational, 0.0); }
  static constexpr TargetDomain nephroid() { return TargetDomain(DomainKind::Nephroid, 0.0); }
  static constexpr TargetDomain mod_sigmoid() { return TargetDomain(DomainKind::ModSigmoid, 0.0); }

  constexpr DomainKind kind() const noexcept { return kind_; }
  /// Only meaningful for HalfPlane.
  constexpr double lambda() const noexcept { return lambda_; }
  constexpr bool bounded() const noexcept { return kind_ != DomainKind::HalfPlane; }

  std::string_view name() const noexcept;

  friend constexpr bool operator==(const TargetDomain&, const TargetDomain&) = default;

 private:
  constexpr TargetDomain(DomainKind k, double lambda) : kind_(k), lambda_(lambda) {}

  DomainKind kind_;
  double lambda_;
};

/// Open interval Omega ∩ R = (lo, hi) and the center `split` at which the
/// inscribed-disc radius switches from the left to the right end. hi is +inf
/// for the half-plane.
struct RealDiameter {
  double lo;
  double hi;
  double split;
};

RealDiameter real_diameter(const TargetDomain& d) noexcept;

/// Open-region membership. Analytic inequality for HalfPlane, Exp, Nephroid and
/// ModSigmoid; winding number of the 4096-edge boundary polyline for Cardioid
/// and Rational. Throws NonFiniteError.
bool contains(const TargetDomain& d, Complex w);

/// Winding-number membership for any bounded domain. Exposed so the analytic
/// predicates can be cross-checked against the boundary curve.
bool contains_by_winding(const TargetDomain& d, Complex w);

/// phi(e^{i theta}) for the domain's superordinate function.
/// Throws UnboundedDomainError for HalfPlane.
Complex boundary_point(const TargetDomain& d, double theta);

/// phi(-1) and phi(+1): the ends of the real diameter as boundary points.
/// For the half-plane the right end is +inf.
Complex boundary_left(const TargetDomain& d) noexcept;
Complex boundary_right(const TargetDomain& d) noexcept;

/// Cached closed polyline through boundary_point at kBoundarySegments equally
/// spaced angles (vertex i at theta = 2*pi*i/N). Throws for HalfPlane.
const ClosedPolyline& boundary_polyline(const TargetDomain& d);

/// Radius of the largest open disc centered at real `a` that the domain's
/// inscribed-disc lemma guarantees to lie in Omega: the distance to the nearer
/// end of the real diameter (for ModSigmoid written as (e-1)/(e+1) - |a-1|).
/// Zero at the endpoints; throws CenterOutsideDiameterError outside them.
double inscribed_radius(const TargetDomain& d, double a);

/// Positive inside, negative outside; magnitude is the distance to the
/// boundary (to the polyline for bounded domains, so accurate to ~1e-6).
double signed_margin(const TargetDomain& d, Complex w);

}  // namespace gft
