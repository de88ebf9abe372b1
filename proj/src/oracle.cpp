#include "gft/oracle.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "gft/errors.hpp"
#include "gft/support.hpp"

namespace gft {

namespace {

constexpr double kBoundSlack = 1e-10;

bool contained_at(const TargetDomain& d, const ClassParams& p, double r, int samples) {
  return disc_in_domain(d, disc_bound(p, r), samples);
}

}  // namespace

void validate(const OracleConfig& cfg) {
  if (!(cfg.tol > 0.0)) throw OutOfRangeError("tol", "need tol > 0");
  if (cfg.boundary_samples < 8) throw OutOfRangeError("boundary_samples", "need >= 8");
  if (cfg.coarse_steps < 10) throw OutOfRangeError("coarse_steps", "need >= 10");
}

bool disc_in_domain(const TargetDomain& d, const Disc& disc, int samples) {
  for (int j = 0; j < samples; ++j) {
    if (!contains(d, disc.center + disc.radius * unit_circle_point(j, samples))) return false;
  }
  return true;
}

NumericRadius numeric_radius_detailed(TargetClass c, const ClassParams& p, const OracleConfig& cfg) {
  validate(cfg);
  const TargetDomain d = target_domain(c, p);
  const int steps = cfg.coarse_steps;
  const int samples = cfg.boundary_samples;

  NumericRadius out;
  for (int i = 1; i < steps; ++i) {
    const bool inside = contained_at(d, p, static_cast<double>(i) / steps, samples);
    if (!inside && out.first_failure_step < 0) {
      out.first_failure_step = i;
    } else if (inside && out.first_failure_step >= 0) {
      out.non_monotone = true;
      break;
    }
  }
  if (out.first_failure_step < 0) {
    out.reached_one = true;
    out.value = 1.0;
    return out;
  }

  double lo = static_cast<double>(out.first_failure_step - 1) / steps;
  double hi = static_cast<double>(out.first_failure_step) / steps;
  while (hi - lo > 2.0 * cfg.tol) {
    const double mid = 0.5 * (lo + hi);
    (contained_at(d, p, mid, samples) ? lo : hi) = mid;
  }
  out.value = 0.5 * (lo + hi);
  return out;
}

double numeric_radius(TargetClass c, const ClassParams& p, const OracleConfig& cfg) {
  return numeric_radius_detailed(c, p, cfg).value;
}

double boundary_residual(TargetClass c, const ClassParams& p, Branch branch, Complex w) {
  const TargetDomain d = target_domain(c, p);
  switch (c) {
    case TargetClass::StarlikeOrder:
      return std::abs(w.real() - p.lambda());
    case TargetClass::Exp:
      return std::abs(std::abs(std::log(w)) - 1.0);
    case TargetClass::ModSigmoid:
      return std::abs(std::abs(std::log(w / (2.0 - w))) - 1.0);
    case TargetClass::Cardioid:
    case TargetClass::Rational:
    case TargetClass::Nephroid:
      return std::abs(w - (branch == Branch::Sigma0 ? boundary_left(d) : boundary_right(d)));
  }
  return std::numeric_limits<double>::infinity();
}

SharpnessReport verify_sharpness(TargetClass c, const ClassParams& p, double R, Branch branch, double eps,
                                 int samples) {
  if (!(R < 1.0)) throw WitnessPoleError();
  if (!(R > 0.0)) throw OutOfRangeError("R", "need 0 < R < 1");
  if (!(eps > 0.0 && eps < 1.0 - R)) throw OutOfRangeError("eps", "need 0 < eps < 1 - R");
  const TargetDomain d = target_domain(c, p);
  const double sign = branch == Branch::Sigma0 ? -1.0 : 1.0;

  SharpnessReport rep;
  rep.witness_z = sign * R;
  rep.witness_w = extremal_w(p, rep.witness_z);
  rep.boundary_residual = boundary_residual(c, p, branch, rep.witness_w);

  const double r_in = R * (1.0 - eps);
  rep.interior_below = true;
  rep.inside_margin_below = std::numeric_limits<double>::infinity();
  for (int j = 0; j < samples; ++j) {
    const Complex w = extremal_w(p, r_in * unit_circle_point(j, samples));
    if (!contains(d, w)) rep.interior_below = false;
    rep.inside_margin_below = std::min(rep.inside_margin_below, signed_margin(d, w));
  }

  const double r_out = R * (1.0 + eps);
  rep.exterior_above = r_out >= 1.0 || !contains(d, extremal_w(p, sign * r_out));
  return rep;
}

SharpnessReport verify_sharpness(TargetClass c, const ClassParams& p, double R, double eps) {
  return verify_sharpness(c, p, R, compute_radius(c, p).branch, eps);
}

DiscBoundReport verify_disc_bound(std::span<const ExtremalSpec> specs, std::span<const double> r_grid,
                                  int samples) {
  DiscBoundReport rep;
  for (const ExtremalSpec& spec : specs) {
    const int n = spec.polynomial.degree();
    for (double r : r_grid) {
      const Disc bound = disc_bound(spec.params, r);
      const Disc qbound = q_disc_bound(n, r);
      for (int j = 0; j < samples; ++j) {
        const Complex z = r * unit_circle_point(j, samples);
        ++rep.checked;
        if (!bound.covers(general_w(spec, z), kBoundSlack)) ++rep.disc_violations;
        if (!qbound.covers(log_derivative_Q(spec.polynomial, z), kBoundSlack)) ++rep.q_violations;
      }
    }
  }
  return rep;
}

std::vector<ExtremalSpec> random_extremal_specs(std::size_t count, std::uint64_t seed, int max_degree,
                                                double max_modulus) {
  Rng rng(seed);
  std::vector<ExtremalSpec> out;
  out.reserve(count);
  const double two_pi = 2.0 * std::numbers::pi;
  for (std::size_t i = 0; i < count; ++i) {
    const double alpha = rng.uniform(0.0, 1.0);
    const double beta = 5.0 - rng.uniform(0.0, 4.99);  // (0.01, 5]
    const Complex x = std::polar(1.0, rng.uniform(0.0, two_pi));
    const int n = rng.integer(1, max_degree);
    std::vector<Complex> zeros;
    for (int k = 0; k < n; ++k) {
      zeros.push_back(std::polar(rng.uniform(1.0, max_modulus), rng.uniform(0.0, two_pi)));
    }
    out.push_back(make_extremal_spec(validate_params(alpha, beta), x, validate_polynomial(std::move(zeros))));
  }
  return out;
}

}  // namespace gft
