#pragma once

#include <array>
#include <optional>
#include <string_view>

#include "gft/params.hpp"
#include "gft/regions.hpp"

namespace gft {

/// Target subclasses of starlike functions. StarlikeOrder takes its order
/// lambda from ClassParams.
enum class TargetClass { StarlikeOrder, Exp, Cardioid, Rational, Nephroid, ModSigmoid };

inline constexpr std::array<TargetClass, 6> kAllClasses{
    TargetClass::StarlikeOrder, TargetClass::Exp,      TargetClass::Cardioid,
    TargetClass::Rational,      TargetClass::Nephroid, TargetClass::ModSigmoid};

/// CLI spelling: st, exp, cardioid, rational, nephroid, sigmoid.
std::string_view to_string(TargetClass c) noexcept;
std::optional<TargetClass> parse_target_class(std::string_view s) noexcept;

TargetDomain target_domain(TargetClass c, const ClassParams& p);

/// True for the three classes whose branch choice uses X(alpha, beta).
constexpr bool has_case_selector(TargetClass c) noexcept {
  return c == TargetClass::Exp || c == TargetClass::Cardioid || c == TargetClass::Rational;
}

struct Quadratic {
  double a2 = 0.0;
  double a1 = 0.0;
  double a0 = 0.0;

  double operator()(double r) const noexcept { return (a2 * r + a1) * r + a0; }
  double max_abs_coefficient() const noexcept;
};

/// Smallest root of a2 r^2 + a1 r + a0 in (0, 1]. Falls back to the linear
/// root when |a2| <= 1e-14 max(|a1|, |a0|); otherwise uses the cancellation-free
/// pair q / a2, a0 / q with q = -(a1 + sign(a1) sqrt(D)) / 2.
/// Throws NoRootInUnitIntervalError.
double solve_smallest_root(double a2, double a1, double a0);
inline double solve_smallest_root(const Quadratic& q) { return solve_smallest_root(q.a2, q.a1, q.a0); }

/// The polynomial whose smallest positive root is the branch's radius, with
/// the coefficients in their published form (so for some classes
/// it is the negative of a_F - c_F - lo rearranged).
/// StarlikeOrder has only Sigma0; asking for SigmaTilde0 throws NotApplicableError.
Quadratic case_polynomial(TargetClass c, const ClassParams& p, Branch b);

/// The displayed closed forms for sigma_0 and sigma~_0.
double sigma0_closed_form(TargetClass c, const ClassParams& p);
double sigma_tilde0_closed_form(TargetClass c, const ClassParams& p);

/// 2a+b-2, X(alpha, beta) and sigma~_1 for Exp, Cardioid and Rational.
/// Throws NotApplicableError for the other classes.
CaseDiagnostics case_selector(const ClassParams& p, TargetClass c);

RadiusResult radius_starlike_order(const ClassParams& p);
RadiusResult radius_exp(const ClassParams& p);
RadiusResult radius_cardioid(const ClassParams& p);
RadiusResult radius_rational(const ClassParams& p);
RadiusResult radius_nephroid(const ClassParams& p);
RadiusResult radius_sigmoid(const ClassParams& p);

RadiusResult compute_radius(TargetClass c, const ClassParams& p);

/// Case label for output: "single" (StarlikeOrder has one case), otherwise
/// "2a+b-2>=0", "X<=0", "X>0" or "2a+b-2<0".
std::string_view case_label(TargetClass c, const RadiusResult& r) noexcept;

}  // namespace gft
