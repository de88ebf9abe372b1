#pragma once

#include <complex>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace gft {

using Complex = std::complex<double>;

/// Validated (alpha, beta, lambda). Only validate_params() constructs one, so
/// holding a ClassParams means the standing hypotheses hold:
/// 0 <= alpha <= 1, beta > 0, 0 <= lambda < 1.
class ClassParams {
 public:
  double alpha() const noexcept { return alpha_; }
  double beta() const noexcept { return beta_; }
  double lambda() const noexcept { return lambda_; }

  /// alpha == 1 collapses f to the identity z.
  bool degenerate() const noexcept { return alpha_ == 1.0; }

  /// 2*alpha + beta - 2: its sign splits every class into two cases.
  double two_alpha_beta_minus_two() const noexcept { return 2.0 * alpha_ + beta_ - 2.0; }

  friend bool operator==(const ClassParams&, const ClassParams&) = default;

 private:
  friend ClassParams validate_params(double alpha, double beta, double lambda);
  ClassParams(double a, double b, double l) : alpha_(a), beta_(b), lambda_(l) {}

  double alpha_;
  double beta_;
  double lambda_;
};

/// Throws OutOfRangeError naming the offending parameter.
ClassParams validate_params(double alpha, double beta, double lambda = 0.0);

/// Closed disc with real center.
struct Disc {
  double center = 1.0;
  double radius = 0.0;

  bool covers(Complex w, double slack = 0.0) const {
    return std::abs(w - center) <= radius + slack;
  }
};

/// Non-vanishing polynomial on the unit disc, stored by its zeros and
/// normalised so that Q(0) = 1, i.e. Q(z) = prod_k (1 - z / z_k).
class PolynomialSpec {
 public:
  int degree() const noexcept { return static_cast<int>(zeros_.size()); }
  std::span<const Complex> zeros() const noexcept { return zeros_; }

  Complex evaluate(Complex z) const;

 private:
  friend PolynomialSpec validate_polynomial(std::vector<Complex> zeros);
  explicit PolynomialSpec(std::vector<Complex> zeros) : zeros_(std::move(zeros)) {}

  std::vector<Complex> zeros_;
};

/// Throws OutOfRangeError for an empty list or a non-finite zero and
/// ZeroInsideDiscError for |z_k| < 1.
PolynomialSpec validate_polynomial(std::vector<Complex> zeros);

/// Which closed form produced a radius. Sigma0 is the root attached to the
/// left end of the domain's real diameter, SigmaTilde0 to the right end.
enum class Branch { Sigma0, SigmaTilde0 };

/// Where the extremal function touches the boundary: z = -R or z = +R.
enum class WitnessSign { MinusSigma, PlusSigma };

constexpr WitnessSign witness_for(Branch b) noexcept {
  return b == Branch::Sigma0 ? WitnessSign::MinusSigma : WitnessSign::PlusSigma;
}

std::string_view to_string(Branch b) noexcept;
std::string_view to_string(WitnessSign s) noexcept;

struct CaseDiagnostics {
  double two_alpha_beta_minus_two = 0.0;
  /// X(alpha, beta); only the exponential, cardioid and rational classes define one.
  std::optional<double> x_value;
  /// Positive root of zeta, i.e. where the covering-disc center crosses the
  /// midpoint of the real diameter. Present only when 2a+b-2 < 0.
  std::optional<double> sigma_tilde_1;
  /// |X| fell inside the tie band and was treated as X <= 0.
  bool x_tie = false;
};

struct RadiusResult {
  double value = 0.0;
  Branch branch = Branch::Sigma0;
  WitnessSign witness_sign = WitnessSign::MinusSigma;
  std::optional<CaseDiagnostics> diagnostics;
};

}  // namespace gft
