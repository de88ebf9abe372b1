#include "gft/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>

#include "gft/support.hpp"

namespace gft {

namespace {

constexpr double kLemmaInside = 1e-6;
constexpr double kLemmaOutside = 1e-4;
constexpr double kSharpEps = 1e-4;
constexpr double kWitnessTol = 1e-9;
constexpr double kRootTol = 1e-10;
constexpr int kSharpnessDraws = 50;
constexpr int kLemmaCenters = 64;
constexpr std::size_t kDiscSpecs = 1000;
constexpr int kDiscSamples = 256;

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", x);
  return buf;
}

std::string point(TargetClass c, const ClassParams& p) {
  char buf[128];
  if (c == TargetClass::StarlikeOrder) {
    std::snprintf(buf, sizeof buf, "%s alpha=%.12g beta=%.12g lambda=%.12g", std::string(to_string(c)).c_str(),
                  p.alpha(), p.beta(), p.lambda());
  } else {
    std::snprintf(buf, sizeof buf, "%s alpha=%.12g beta=%.12g", std::string(to_string(c)).c_str(), p.alpha(),
                  p.beta());
  }
  return buf;
}

double agreement_tol(const OracleConfig& cfg) { return std::max(1e-6, 10.0 * cfg.tol); }

std::vector<TargetDomain> domains_for(const std::vector<TargetClass>& classes) {
  std::vector<TargetDomain> out;
  for (TargetClass c : classes) {
    if (c == TargetClass::StarlikeOrder) {
      for (double l : {0.0, 0.25, 0.5}) out.push_back(TargetDomain::half_plane(l));
    } else {
      out.push_back(target_domain(c, validate_params(0.5, 1.0)));
    }
  }
  return out;
}

CheckGroup lemma_checks(const TargetDomain& d, int samples) {
  const RealDiameter dia = real_diameter(d);
  const double hi = d.bounded() ? dia.hi : dia.lo + 4.0;
  CheckGroup g;
  g.name = "lemma-disc " + std::string(d.name());
  if (!d.bounded()) g.name += " lambda=" + num(d.lambda());
  for (int i = 1; i <= kLemmaCenters; ++i) {
    const double a = dia.lo + (hi - dia.lo) * i / (kLemmaCenters + 1.0);
    const double ra = inscribed_radius(d, a);
    bool inside = true;
    bool escapes = false;
    for (int j = 0; j < samples; ++j) {
      const Complex u = unit_circle_point(j, samples);
      inside = inside && contains(d, a + ra * (1.0 - kLemmaInside) * u);
      escapes = escapes || !contains(d, a + ra * (1.0 + kLemmaOutside) * u);
    }
    (inside && escapes ? g.passed : g.failed) += 1;
  }
  return g;
}

CheckGroup disc_bound_checks(std::uint64_t seed) {
  const std::vector<ExtremalSpec> specs = random_extremal_specs(kDiscSpecs, seed);
  std::vector<double> grid;
  for (int i = 1; i <= 9; ++i) grid.push_back(i / 10.0);
  std::vector<DiscBoundReport> reps(specs.size());
  parallel_for(specs.size(), [&](std::size_t i) {
    reps[i] = verify_disc_bound(std::span(&specs[i], 1), grid, kDiscSamples);
  });
  CheckGroup g;
  g.name = "disc-bound";
  std::size_t disc = 0;
  std::size_t q = 0;
  for (const DiscBoundReport& r : reps) {
    disc += r.disc_violations;
    q += r.q_violations;
    (r.disc_violations + r.q_violations == 0 ? g.passed : g.failed) += 1;
  }
  g.detail = "disc_violations=" + std::to_string(disc) + " q_violations=" + std::to_string(q);
  return g;
}

RadiusResult faulted(TargetClass c, const ClassParams& p, double fault) {
  RadiusResult r = compute_radius(c, p);
  r.value += fault;
  return r;
}

CheckGroup residual_checks(TargetClass c, double fault) {
  CheckGroup g;
  g.name = "root-residual " + std::string(to_string(c));
  double worst = 0.0;
  for (const ClassParams& p : acceptance_grid(c)) {
    const RadiusResult r = faulted(c, p, fault);
    const Quadratic q = case_polynomial(c, p, r.branch);
    const double res = std::abs(q(r.value)) / (1.0 + q.max_abs_coefficient());
    worst = std::max(worst, res);
    (res <= kRootTol ? g.passed : g.failed) += 1;
  }
  g.detail = "max=" + num(worst);
  return g;
}

CheckGroup agreement_checks(TargetClass c, const VerifyOptions& opt, std::vector<std::string>& notes) {
  const std::vector<ClassParams> grid = acceptance_grid(c);
  std::vector<NumericRadius> oracle(grid.size());
  parallel_for(grid.size(), [&](std::size_t i) { oracle[i] = numeric_radius_detailed(c, grid[i], opt.oracle); });
  CheckGroup g;
  g.name = "oracle-agreement " + std::string(to_string(c));
  double worst = 0.0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double dev = std::abs(faulted(c, grid[i], opt.radius_fault).value - oracle[i].value);
    worst = std::max(worst, dev);
    (dev <= agreement_tol(opt.oracle) ? g.passed : g.failed) += 1;
    if (oracle[i].non_monotone) notes.push_back("non-monotone containment at " + point(c, grid[i]));
  }
  g.detail = "max_dev=" + num(worst);
  return g;
}

CheckGroup sharpness_checks(TargetClass c, const VerifyOptions& opt) {
  Rng rng(opt.seed + 7919u * static_cast<std::uint64_t>(c));
  std::vector<ClassParams> draws;
  for (int i = 0; i < kSharpnessDraws; ++i) {
    const double a = rng.uniform(0.0, 1.0);
    const double b = rng.uniform(0.05, 4.0);
    const double l = c == TargetClass::StarlikeOrder ? rng.uniform(0.0, 0.9) : 0.0;
    draws.push_back(validate_params(a, b, l));
  }
  std::vector<char> ok(draws.size());
  std::vector<double> res(draws.size());
  parallel_for(draws.size(), [&](std::size_t i) {
    const RadiusResult r = faulted(c, draws[i], opt.radius_fault);
    const SharpnessReport s =
        verify_sharpness(c, draws[i], r.value, r.branch, kSharpEps, opt.oracle.boundary_samples);
    res[i] = s.boundary_residual;
    ok[i] = s.boundary_residual <= kWitnessTol && s.interior_below && s.exterior_above;
  });
  CheckGroup g;
  g.name = "sharpness " + std::string(to_string(c));
  for (char k : ok) (k ? g.passed : g.failed) += 1;
  g.detail = "max_witness_residual=" + num(*std::max_element(res.begin(), res.end()));
  return g;
}

CheckGroup branch_audit(TargetClass c, const VerifyOptions& opt, std::vector<std::string>& audit) {
  const std::vector<ClassParams> grid = branch_audit_grid();
  std::vector<double> oracle(grid.size());
  parallel_for(grid.size(), [&](std::size_t i) { oracle[i] = numeric_radius(c, grid[i], opt.oracle); });
  CheckGroup g;
  g.name = "branch-audit " + std::string(to_string(c));
  std::size_t tilde = 0;
  std::vector<std::string> lines;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const RadiusResult r = faulted(c, grid[i], opt.radius_fault);
    if (r.branch == Branch::SigmaTilde0) ++tilde;
    const double dev = std::abs(r.value - oracle[i]);
    if (dev <= agreement_tol(opt.oracle)) {
      ++g.passed;
      continue;
    }
    ++g.failed;
    const Branch other = r.branch == Branch::Sigma0 ? Branch::SigmaTilde0 : Branch::Sigma0;
    const double alt = other == Branch::Sigma0 ? sigma0_closed_form(c, grid[i]) : sigma_tilde0_closed_form(c, grid[i]);
    char buf[256];
    std::snprintf(buf, sizeof buf, "  disagree %s branch=%s closed=%.12g oracle=%.12g %s=%.12g",
                  point(c, grid[i]).c_str(), std::string(to_string(r.branch)).c_str(), r.value, oracle[i],
                  std::string(to_string(other)).c_str(), alt);
    lines.emplace_back(buf);
  }
  audit.push_back("branch-audit " + std::string(to_string(c)) + ": " + std::to_string(grid.size()) + " points, " +
                  std::to_string(tilde) + " on sigma_tilde0, " + std::to_string(g.failed) + " disagree with oracle");
  audit.insert(audit.end(), lines.begin(), lines.end());
  g.detail = std::to_string(tilde) + " on sigma_tilde0";
  return g;
}

}  // namespace

std::size_t VerifyReport::failed() const noexcept {
  std::size_t n = 0;
  for (const CheckGroup& g : groups) n += g.failed;
  return n;
}

std::size_t VerifyReport::passed() const noexcept {
  std::size_t n = 0;
  for (const CheckGroup& g : groups) n += g.passed;
  return n;
}

std::vector<ClassParams> acceptance_grid(TargetClass c) {
  std::vector<ClassParams> out;
  for (int i = 0; i <= 10; ++i) {
    for (double b : {0.25, 0.5, 1.0, 2.0, 4.0}) {
      if (c == TargetClass::StarlikeOrder) {
        for (double l : {0.0, 0.25, 0.5}) out.push_back(validate_params(i / 10.0, b, l));
      } else {
        out.push_back(validate_params(i / 10.0, b));
      }
    }
  }
  return out;
}

std::vector<ClassParams> branch_audit_grid() {
  std::vector<ClassParams> out;
  for (int i = 0; i <= 20; ++i) {
    for (int j = 0; j <= 20; ++j) {
      const double a = i / 20.0;
      const double b = 0.01 * std::pow(200.0, j / 20.0);
      if (2.0 * a + b - 2.0 < 0.0) out.push_back(validate_params(a, b));
    }
  }
  return out;
}

VerifyReport run_verification(const VerifyOptions& opt) {
  validate(opt.oracle);
  VerifyReport rep;
  for (const TargetDomain& d : domains_for(opt.classes)) rep.groups.push_back(lemma_checks(d, opt.oracle.boundary_samples));
  rep.groups.push_back(disc_bound_checks(opt.seed));
  for (TargetClass c : opt.classes) {
    rep.groups.push_back(residual_checks(c, opt.radius_fault));
    rep.groups.push_back(agreement_checks(c, opt, rep.notes));
    rep.groups.push_back(sharpness_checks(c, opt));
    if (c != TargetClass::StarlikeOrder) rep.groups.push_back(branch_audit(c, opt, rep.audit));
  }
  return rep;
}

}  // namespace gft
