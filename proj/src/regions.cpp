#include "gft/regions.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "gft/errors.hpp"

namespace gft {

namespace {

constexpr double kE = std::numbers::e;
constexpr double kPi = std::numbers::pi;

Complex superordinate(DomainKind kind, Complex z) {
  switch (kind) {
    case DomainKind::Exp:
      return std::exp(z);
    case DomainKind::Cardioid:
      return 1.0 + (4.0 / 3.0) * z + (2.0 / 3.0) * z * z;
    case DomainKind::Rational:
      return 1.0 + (z * z + kRationalK * z) / (kRationalK * kRationalK - kRationalK * z);
    case DomainKind::Nephroid:
      return 1.0 + z - z * z * z / 3.0;
    case DomainKind::ModSigmoid:
      return 2.0 / (1.0 + std::exp(-z));
    case DomainKind::HalfPlane:
      break;
  }
  throw UnboundedDomainError();
}

ClosedPolyline build_polyline(DomainKind kind) {
  std::vector<Complex> v;
  v.reserve(kBoundarySegments);
  for (int i = 0; i < kBoundarySegments; ++i) v.push_back(superordinate(kind, unit_circle_point(i, kBoundarySegments)));
  return ClosedPolyline(std::move(v), kBoundaryBand);
}

bool nephroid_sextic_inside(Complex w) {
  const double u = w.real() - 1.0;
  const double v = w.imag();
  const double q = u * u + v * v - 4.0 / 9.0;
  return q * q * q - (4.0 / 3.0) * v * v < 0.0;
}

void require_finite(Complex w) {
  if (!std::isfinite(w.real()) || !std::isfinite(w.imag())) {
    throw NonFiniteError("w = (" + std::to_string(w.real()) + ", " + std::to_string(w.imag()) + ")");
  }
}

}  // namespace

// Snapping the quarter turns makes the real-axis vertices of every polyline
// exactly phi(+-1).
Complex unit_circle_point(int k, int n) {
  k %= n;
  if (k < 0) k += n;
  if (k == 0) return {1.0, 0.0};
  if (4 * k == n) return {0.0, 1.0};
  if (2 * k == n) return {-1.0, 0.0};
  if (4 * k == 3 * n) return {0.0, -1.0};
  const double t = 2.0 * kPi * k / n;
  return {std::cos(t), std::sin(t)};
}

TargetDomain TargetDomain::half_plane(double lambda) {
  if (!std::isfinite(lambda) || lambda < 0.0 || lambda >= 1.0) {
    throw OutOfRangeError("lambda", "need 0 <= lambda < 1");
  }
  return TargetDomain(DomainKind::HalfPlane, lambda);
}

std::string_view TargetDomain::name() const noexcept {
  switch (kind_) {
    case DomainKind::HalfPlane: return "half-plane";
    case DomainKind::Exp: return "exp";
    case DomainKind::Cardioid: return "cardioid";
    case DomainKind::Rational: return "rational";
    case DomainKind::Nephroid: return "nephroid";
    case DomainKind::ModSigmoid: return "sigmoid";
  }
  return "?";
}

RealDiameter real_diameter(const TargetDomain& d) noexcept {
  switch (d.kind()) {
    case DomainKind::HalfPlane:
      return {d.lambda(), std::numeric_limits<double>::infinity(), std::numeric_limits<double>::infinity()};
    case DomainKind::Exp:
      return {1.0 / kE, kE, (kE + 1.0 / kE) / 2.0};
    case DomainKind::Cardioid:
      return {1.0 / 3.0, 3.0, 5.0 / 3.0};
    case DomainKind::Rational:
      return {2.0 * (std::numbers::sqrt2 - 1.0), 2.0, std::numbers::sqrt2};
    case DomainKind::Nephroid:
      return {1.0 / 3.0, 5.0 / 3.0, 1.0};
    case DomainKind::ModSigmoid:
      return {2.0 / (1.0 + kE), 2.0 * kE / (1.0 + kE), 1.0};
  }
  return {0.0, 0.0, 0.0};
}

Complex boundary_left(const TargetDomain& d) noexcept { return real_diameter(d).lo; }
Complex boundary_right(const TargetDomain& d) noexcept { return real_diameter(d).hi; }

const ClosedPolyline& boundary_polyline(const TargetDomain& d) {
  switch (d.kind()) {
    case DomainKind::Exp: {
      static const ClosedPolyline p = build_polyline(DomainKind::Exp);
      return p;
    }
    case DomainKind::Cardioid: {
      static const ClosedPolyline p = build_polyline(DomainKind::Cardioid);
      return p;
    }
    case DomainKind::Rational: {
      static const ClosedPolyline p = build_polyline(DomainKind::Rational);
      return p;
    }
    case DomainKind::Nephroid: {
      static const ClosedPolyline p = build_polyline(DomainKind::Nephroid);
      return p;
    }
    case DomainKind::ModSigmoid: {
      static const ClosedPolyline p = build_polyline(DomainKind::ModSigmoid);
      return p;
    }
    case DomainKind::HalfPlane:
      break;
  }
  throw UnboundedDomainError();
}

bool contains_by_winding(const TargetDomain& d, Complex w) {
  require_finite(w);
  const auto c = boundary_polyline(d).classify(w);
  return c.winding == 1 && !c.near_edge;
}

bool contains(const TargetDomain& d, Complex w) {
  require_finite(w);
  switch (d.kind()) {
    case DomainKind::HalfPlane:
      return w.real() > d.lambda();
    case DomainKind::Exp:
      // Re w <= 0 means |arg w| >= pi/2 > 1.
      return w.real() > 0.0 && std::abs(std::log(w)) < 1.0;
    case DomainKind::ModSigmoid: {
      if (w == Complex(2.0, 0.0)) return false;
      const Complex q = w / (2.0 - w);
      return q.real() > 0.0 && std::abs(std::log(q)) < 1.0;
    }
    case DomainKind::Nephroid:
      return nephroid_sextic_inside(w);
    case DomainKind::Cardioid:
    case DomainKind::Rational:
      return contains_by_winding(d, w);
  }
  return false;
}

Complex boundary_point(const TargetDomain& d, double theta) {
  if (!std::isfinite(theta)) throw NonFiniteError("theta");
  if (!d.bounded()) throw UnboundedDomainError();
  return superordinate(d.kind(), std::polar(1.0, theta));
}

double inscribed_radius(const TargetDomain& d, double a) {
  const RealDiameter dia = real_diameter(d);
  if (!std::isfinite(a) || a < dia.lo || a > dia.hi) throw CenterOutsideDiameterError(a);
  switch (d.kind()) {
    case DomainKind::HalfPlane:
      return a - d.lambda();
    case DomainKind::ModSigmoid:
      return std::max(0.0, (kE - 1.0) / (kE + 1.0) - std::abs(a - 1.0));
    default:
      return a <= dia.split ? a - dia.lo : dia.hi - a;
  }
}

double signed_margin(const TargetDomain& d, Complex w) {
  if (!d.bounded()) return w.real() - d.lambda();
  const double dist = boundary_polyline(d).distance(w);
  return contains(d, w) ? dist : -dist;
}

}  // namespace gft
