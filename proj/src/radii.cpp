#include "gft/radii.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "gft/errors.hpp"

namespace gft {

namespace {

constexpr double kE = std::numbers::e;
constexpr double kSqrt2 = std::numbers::sqrt2;
// Closed form vs. defining-polynomial root.
constexpr double kConsistencyTol = 1e-10;
// |X| below this fraction of its term magnitudes counts as X <= 0.
constexpr double kTieBand = 1e-12;

// Shorthands used by every class: s = 2 - 2a + b > 0 and p = 2a - 1 + b.
struct Shape {
  double a;
  double b;
  double s;
  double p;
};

Shape shape(const ClassParams& prm) {
  const double a = prm.alpha();
  const double b = prm.beta();
  return {a, b, 2.0 - 2.0 * a + b, 2.0 * a - 1.0 + b};
}

struct XValue {
  double value;
  double scale;
};

XValue x_exp(const Shape& k) {
  const double c = 1.0 + kE * kE - 2.0 * kE * (2.0 * k.a + k.b - 1.0);
  const double root = k.s - std::sqrt(k.s * k.s - 4.0 * (kE - 1.0) * (2.0 * k.a - 1.0 + k.b - kE));
  const double t1 = 2.0 * k.s * c * root;
  const double t2 = 4.0 * (2.0 * k.a + k.b - 1.0 - kE) * (kE * kE - 1.0) * (2.0 * k.a + k.b - 2.0);
  return {t1 + t2, std::abs(t1) + std::abs(t2)};
}

XValue x_cardioid(const Shape& k) {
  const double u = 6.0 * k.a - 6.0 - 3.0 * k.b;
  const double disc = std::sqrt(std::pow(6.0 - 6.0 * k.a + 3.0 * k.b, 2) + 8.0 * (6.0 * k.a + 3.0 * k.b - 4.0));
  const double t1 = 2.0 * (8.0 - 6.0 * k.a - 3.0 * k.b) * u * (u + disc);
  const double t2 = 48.0 * (6.0 * k.a + 3.0 * k.b - 4.0) * (2.0 - 2.0 * k.a - k.b);
  return {t1 + t2, std::abs(t1) + std::abs(t2)};
}

XValue x_rational(const Shape& k) {
  const double c = 3.0 - 2.0 * kSqrt2;
  const double t = 2.0 * k.a - 2.0 - k.b;
  const double m = 1.0 + kSqrt2 - 2.0 * k.a - k.b;
  const double n = 1.0 - 2.0 * kSqrt2 + 2.0 * k.a + k.b;
  const double t1 = 2.0 * t * m * (t + std::sqrt(t * t - 4.0 * c * (2.0 * kSqrt2 - 1.0 - 2.0 * k.a - k.b)));
  const double t2 = 4.0 * n * (c * m + (1.0 - kSqrt2) * n);
  return {t1 + t2, std::abs(t1) + std::abs(t2)};
}

// Positive root of zeta, where a_F(r) reaches the midpoint of the diameter.
double sigma_tilde1(TargetClass c, const Shape& k) {
  switch (c) {
    case TargetClass::Exp:
      return std::sqrt((1.0 - 2.0 * kE + kE * kE) /
                       (1.0 + 2.0 * kE + kE * kE - 4.0 * kE * k.a - 2.0 * kE * k.b));
    case TargetClass::Cardioid:
      return std::sqrt(2.0 / (8.0 - 6.0 * k.a - 3.0 * k.b));
    case TargetClass::Rational:
      return std::sqrt((kSqrt2 - 1.0) / (kSqrt2 + 1.0 - 2.0 * k.a - k.b));
    default:
      break;
  }
  throw NotApplicableError("sigma~_1 for " + std::string(to_string(c)));
}

void check_consistent(TargetClass c, Branch br, const ClassParams& p, double closed) {
  // A closed form above 1 is simply not a radius; nothing to cross-check.
  if (closed > 1.0) return;
  const double root = solve_smallest_root(case_polynomial(c, p, br));
  if (std::abs(root - closed) > kConsistencyTol) {
    throw InternalConsistencyError("closed form " + std::string(to_string(br)) + " for " +
                                   std::string(to_string(c)) + " = " + std::to_string(closed) +
                                   " but polynomial root = " + std::to_string(root));
  }
}

RadiusResult make_result(double value, Branch br, std::optional<CaseDiagnostics> diag) {
  return RadiusResult{value, br, witness_for(br), std::move(diag)};
}

RadiusResult two_case(TargetClass c, const ClassParams& p, bool use_sigma0, CaseDiagnostics diag) {
  const double s0 = sigma0_closed_form(c, p);
  const double st0 = sigma_tilde0_closed_form(c, p);
  check_consistent(c, Branch::Sigma0, p, s0);
  check_consistent(c, Branch::SigmaTilde0, p, st0);
  return use_sigma0 ? make_result(s0, Branch::Sigma0, diag) : make_result(st0, Branch::SigmaTilde0, diag);
}

RadiusResult with_selector(TargetClass c, const ClassParams& p) {
  const CaseDiagnostics diag = case_selector(p, c);
  const bool sigma0 = diag.two_alpha_beta_minus_two >= 0.0 || diag.x_tie || *diag.x_value <= 0.0;
  return two_case(c, p, sigma0, diag);
}

RadiusResult by_sign(TargetClass c, const ClassParams& p) {
  CaseDiagnostics diag;
  diag.two_alpha_beta_minus_two = p.two_alpha_beta_minus_two();
  return two_case(c, p, diag.two_alpha_beta_minus_two >= 0.0, diag);
}

}  // namespace

std::string_view to_string(TargetClass c) noexcept {
  switch (c) {
    case TargetClass::StarlikeOrder: return "st";
    case TargetClass::Exp: return "exp";
    case TargetClass::Cardioid: return "cardioid";
    case TargetClass::Rational: return "rational";
    case TargetClass::Nephroid: return "nephroid";
    case TargetClass::ModSigmoid: return "sigmoid";
  }
  return "?";
}

std::optional<TargetClass> parse_target_class(std::string_view s) noexcept {
  for (TargetClass c : kAllClasses) {
    if (to_string(c) == s) return c;
  }
  return std::nullopt;
}

TargetDomain target_domain(TargetClass c, const ClassParams& p) {
  switch (c) {
    case TargetClass::StarlikeOrder: return TargetDomain::half_plane(p.lambda());
    case TargetClass::Exp: return TargetDomain::exp();
    case TargetClass::Cardioid: return TargetDomain::cardioid();
    case TargetClass::Rational: return TargetDomain::rational();
    case TargetClass::Nephroid: return TargetDomain::nephroid();
    case TargetClass::ModSigmoid: return TargetDomain::mod_sigmoid();
  }
  throw NotApplicableError("unknown class");
}

double Quadratic::max_abs_coefficient() const noexcept {
  return std::max({std::abs(a2), std::abs(a1), std::abs(a0)});
}

double solve_smallest_root(double a2, double a1, double a0) {
  // Roots a hair above 1 from rounding are accepted and clamped.
  constexpr double kUpper = 1.0 + 8.0 * std::numeric_limits<double>::epsilon();
  auto admissible = [&](double r) { return std::isfinite(r) && r > 0.0 && r <= kUpper; };

  const double scale = std::max(std::abs(a1), std::abs(a0));
  if (std::abs(a2) <= 1e-14 * scale) {
    if (a1 == 0.0) throw NoRootInUnitIntervalError();
    const double r = -a0 / a1;
    if (!admissible(r)) throw NoRootInUnitIntervalError();
    return std::min(r, 1.0);
  }

  double disc = a1 * a1 - 4.0 * a2 * a0;
  if (disc < 0.0) {
    if (disc < -1e-14 * (a1 * a1 + std::abs(4.0 * a2 * a0))) throw NoRootInUnitIntervalError();
    disc = 0.0;
  }
  const double q = -0.5 * (a1 + std::copysign(std::sqrt(disc), a1));
  double best = std::numeric_limits<double>::infinity();
  for (double r : {q / a2, q != 0.0 ? a0 / q : q / a2}) {
    if (admissible(r)) best = std::min(best, r);
  }
  if (!std::isfinite(best)) throw NoRootInUnitIntervalError();
  return std::min(best, 1.0);
}

Quadratic case_polynomial(TargetClass c, const ClassParams& prm, Branch br) {
  const Shape k = shape(prm);
  const bool left = br == Branch::Sigma0;
  switch (c) {
    case TargetClass::StarlikeOrder: {
      if (!left) break;
      const double l = prm.lambda();
      return {1.0 - 2.0 * k.a - k.b + l, -k.s, 1.0 - l};
    }
    case TargetClass::Exp:
      if (left) return {1.0 - kE * k.p, -kE * k.s, kE - 1.0};
      return {k.p - kE, -k.s, kE - 1.0};
    case TargetClass::Cardioid:
      if (left) return {3.0 * k.p - 1.0, 3.0 * k.s, -2.0};
      return {k.p - 3.0, -k.s, 2.0};
    case TargetClass::Rational:
      if (left) return {2.0 * (kSqrt2 - 1.0) - k.p, -k.s, 3.0 - 2.0 * kSqrt2};
      return {2.0 * k.a - 3.0 + k.b, -k.s, 1.0};
    case TargetClass::Nephroid:
      if (left) return {4.0 - 6.0 * k.a - 3.0 * k.b, -3.0 * k.s, 2.0};
      return {6.0 * k.a - 8.0 + 3.0 * k.b, -3.0 * k.s, 2.0};
    case TargetClass::ModSigmoid: {
      const double m = (2.0 - 2.0 * k.a - k.b) * (kE + 1.0);
      if (left) return {m - (kE - 1.0), -k.s * (kE + 1.0), kE - 1.0};
      return {m + (kE - 1.0), k.s * (kE + 1.0), -(kE - 1.0)};
    }
  }
  throw NotApplicableError("sigma~_0 for " + std::string(to_string(c)));
}

double sigma0_closed_form(TargetClass c, const ClassParams& prm) {
  const Shape k = shape(prm);
  const double a = k.a;
  const double b = k.b;
  const double s = k.s;
  switch (c) {
    case TargetClass::StarlikeOrder: {
      const double l = prm.lambda();
      return 2.0 * (1.0 - l) / (s + std::sqrt(s * s + 4.0 * (1.0 - l) * (2.0 * a + b - 1.0 - l)));
    }
    case TargetClass::Exp:
      return 2.0 * (kE - 1.0) /
             (kE * s + std::sqrt(std::pow(kE * s, 2) - 4.0 * (kE - 1.0) * (1.0 - kE * (2.0 * a - 1.0 + b))));
    case TargetClass::Cardioid:
      return 4.0 / (3.0 * s + std::sqrt(std::pow(6.0 - 6.0 * a + 3.0 * b, 2) + 8.0 * (6.0 * a + 3.0 * b - 4.0)));
    case TargetClass::Rational: {
      const double c0 = 3.0 - 2.0 * kSqrt2;
      return 2.0 * c0 /
             (s + std::sqrt(std::pow(-2.0 + 2.0 * a - b, 2) - 4.0 * c0 * (2.0 * kSqrt2 - 1.0 - 2.0 * a - b)));
    }
    case TargetClass::Nephroid:
      return 4.0 / (3.0 * s + std::sqrt(9.0 * std::pow(-2.0 + 2.0 * a - b, 2) - 8.0 * (4.0 - 6.0 * a - 3.0 * b)));
    case TargetClass::ModSigmoid: {
      const double g = (kE + 1.0) * s;
      return 2.0 * (kE - 1.0) /
             (g + std::sqrt(g * g - 4.0 * (kE - 1.0) * (3.0 + kE - 2.0 * a - 2.0 * a * kE - b - b * kE)));
    }
  }
  throw NotApplicableError("sigma_0");
}

double sigma_tilde0_closed_form(TargetClass c, const ClassParams& prm) {
  const Shape k = shape(prm);
  const double a = k.a;
  const double b = k.b;
  const double s = k.s;
  switch (c) {
    case TargetClass::StarlikeOrder:
      break;
    case TargetClass::Exp:
      return 2.0 * (kE - 1.0) / (s + std::sqrt(s * s - 4.0 * (kE - 1.0) * (2.0 * a - 1.0 + b - kE)));
    case TargetClass::Cardioid:
      return 4.0 / (s + std::sqrt(s * s - 8.0 * (2.0 * a + b - 4.0)));
    case TargetClass::Rational:
      return 2.0 / (s + std::sqrt(std::pow(-2.0 + 2.0 * a - b, 2) - 4.0 * (2.0 * a - 3.0 + b)));
    case TargetClass::Nephroid:
      return 4.0 / (3.0 * s + std::sqrt(9.0 * std::pow(-2.0 + 2.0 * a - b, 2) - 8.0 * (6.0 * a - 8.0 + 3.0 * b)));
    case TargetClass::ModSigmoid: {
      const double g = (kE + 1.0) * s;
      return 2.0 * (kE - 1.0) /
             (g + std::sqrt(g * g + 4.0 * (kE - 1.0) * (1.0 + 3.0 * kE - 2.0 * a - 2.0 * a * kE - b - b * kE)));
    }
  }
  throw NotApplicableError("sigma~_0 for " + std::string(to_string(c)));
}

CaseDiagnostics case_selector(const ClassParams& p, TargetClass c) {
  const Shape k = shape(p);
  XValue x{};
  switch (c) {
    case TargetClass::Exp: x = x_exp(k); break;
    case TargetClass::Cardioid: x = x_cardioid(k); break;
    case TargetClass::Rational: x = x_rational(k); break;
    default:
      throw NotApplicableError("class " + std::string(to_string(c)) + " has no X(alpha, beta) selector");
  }
  CaseDiagnostics d;
  d.two_alpha_beta_minus_two = p.two_alpha_beta_minus_two();
  d.x_value = x.value;
  d.x_tie = std::abs(x.value) <= kTieBand * x.scale;
  if (d.two_alpha_beta_minus_two < 0.0) d.sigma_tilde_1 = sigma_tilde1(c, k);
  return d;
}

RadiusResult radius_starlike_order(const ClassParams& p) {
  const double s0 = sigma0_closed_form(TargetClass::StarlikeOrder, p);
  check_consistent(TargetClass::StarlikeOrder, Branch::Sigma0, p, s0);
  CaseDiagnostics diag;
  diag.two_alpha_beta_minus_two = p.two_alpha_beta_minus_two();
  return make_result(s0, Branch::Sigma0, diag);
}

RadiusResult radius_exp(const ClassParams& p) { return with_selector(TargetClass::Exp, p); }
RadiusResult radius_cardioid(const ClassParams& p) { return with_selector(TargetClass::Cardioid, p); }
RadiusResult radius_rational(const ClassParams& p) { return with_selector(TargetClass::Rational, p); }
RadiusResult radius_nephroid(const ClassParams& p) { return by_sign(TargetClass::Nephroid, p); }
RadiusResult radius_sigmoid(const ClassParams& p) { return by_sign(TargetClass::ModSigmoid, p); }

RadiusResult compute_radius(TargetClass c, const ClassParams& p) {
  switch (c) {
    case TargetClass::StarlikeOrder: return radius_starlike_order(p);
    case TargetClass::Exp: return radius_exp(p);
    case TargetClass::Cardioid: return radius_cardioid(p);
    case TargetClass::Rational: return radius_rational(p);
    case TargetClass::Nephroid: return radius_nephroid(p);
    case TargetClass::ModSigmoid: return radius_sigmoid(p);
  }
  throw NotApplicableError("unknown class");
}

std::string_view case_label(TargetClass c, const RadiusResult& r) noexcept {
  if (c == TargetClass::StarlikeOrder || !r.diagnostics) return "single";
  const CaseDiagnostics& d = *r.diagnostics;
  if (d.two_alpha_beta_minus_two >= 0.0) return "2a+b-2>=0";
  if (!d.x_value) return "2a+b-2<0";
  return (d.x_tie || *d.x_value <= 0.0) ? "X<=0" : "X>0";
}

}  // namespace gft
