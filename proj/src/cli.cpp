#include "gft/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "gft/errors.hpp"
#include "gft/oracle.hpp"
#include "gft/plot.hpp"
#include "gft/support.hpp"
#include "gft/verify.hpp"

namespace gft::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

double parse_number(std::string_view s) {
  double v = 0.0;
  const char* end = s.data() + s.size();
  const auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (ec != std::errc() || ptr != end || !std::isfinite(v)) {
    throw UsageError("not a number: '" + std::string(s) + "'");
  }
  return v;
}

TargetClass class_from_flag(const std::string& s) {
  const auto c = parse_target_class(s);
  if (!c) throw UsageError("unknown class '" + s + "'");
  return *c;
}

void require_lambda_applies(TargetClass c, bool given) {
  if (given && c != TargetClass::StarlikeOrder) throw UsageError("--lambda applies only to --class st");
}

std::string join_lines(const std::vector<std::string>& rows) {
  std::string s;
  for (const std::string& r : rows) s += r + "\n";
  return s;
}

bool write_file(const std::string& path, const std::string& content, std::ostream& err) {
  std::ofstream f(path, std::ios::binary);
  if (f) f << content;
  if (!f) {
    err << "error: cannot write '" << path << "'\n";
    return false;
  }
  return true;
}

struct RadiusArgs {
  std::string cls;
  double alpha = 0.0;
  double beta = 0.0;
  double lambda = 0.0;
  std::string format = "json";
  std::string out;
};

struct ScanArgs {
  std::string cls;
  std::string alpha;
  std::string beta;
  std::string lambda = "0";
  bool oracle = false;
  std::string out;
};

struct VerifyArgs {
  double tol = 1e-9;
  int samples = 720;
  std::uint64_t seed = 42;
  std::string cls = "all";
  double fault = 0.0;
};

int cmd_radius(const RadiusArgs& a, bool lambda_given, std::ostream& out) {
  const TargetClass c = class_from_flag(a.cls);
  require_lambda_applies(c, lambda_given);
  const OutputRecord r = make_record(c, validate_params(a.alpha, a.beta, a.lambda));
  out << (a.format == "text" ? record_text(r) : record_json(r) + "\n");
  return kOk;
}

int cmd_scan(const ScanArgs& a, bool lambda_given, std::ostream& out, std::ostream& err) {
  const TargetClass c = class_from_flag(a.cls);
  require_lambda_applies(c, lambda_given);
  const std::vector<double> alphas = parse_range(a.alpha);
  const std::vector<double> betas = parse_range(a.beta);
  const std::vector<double> lambdas = parse_range(a.lambda);

  std::vector<ClassParams> grid;
  for (double al : alphas) {
    for (double be : betas) {
      for (double la : lambdas) grid.push_back(validate_params(al, be, la));
    }
  }
  std::vector<std::string> rows(grid.size());
  parallel_for(grid.size(), [&](std::size_t i) {
    OutputRecord r = make_record(c, grid[i]);
    if (a.oracle) {
      r.oracle_radius = numeric_radius(c, grid[i]);
      r.residual = std::abs(r.result.value - *r.oracle_radius);
    }
    rows[i] = csv_row(r);
  });
  const std::string text = csv_header() + "\n" + join_lines(rows);
  if (a.out.empty()) {
    out << text;
    return kOk;
  }
  return write_file(a.out, text, err) ? kOk : kUsage;
}

int cmd_verify(const VerifyArgs& a, std::ostream& out) {
  VerifyOptions opt;
  opt.oracle.tol = a.tol;
  opt.oracle.boundary_samples = a.samples;
  opt.seed = a.seed;
  opt.radius_fault = a.fault;
  if (a.cls != "all") opt.classes = {class_from_flag(a.cls)};

  const VerifyReport rep = run_verification(opt);
  for (const CheckGroup& g : rep.groups) {
    out << (g.ok() ? "PASS " : "FAIL ") << g.name << " " << g.passed << "/" << (g.passed + g.failed);
    if (!g.detail.empty()) out << " " << g.detail;
    out << "\n";
  }
  for (const std::string& n : rep.notes) out << "note: " << n << "\n";
  for (const std::string& l : rep.audit) out << l << "\n";
  out << "summary: " << rep.passed() << " passed, " << rep.failed() << " failed\n";
  return rep.failed() == 0 ? kOk : kVerifyFailed;
}

int cmd_plot(const RadiusArgs& a, bool lambda_given, std::ostream& err) {
  const TargetClass c = class_from_flag(a.cls);
  require_lambda_applies(c, lambda_given);
  const std::string svg = render_svg(c, validate_params(a.alpha, a.beta, a.lambda));
  return write_file(a.out, svg, err) ? kOk : kUsage;
}

}  // namespace

std::string format_number(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x == 0.0 ? 0.0 : x);
  return buf;
}

double round_sig(double x) {
  if (!std::isfinite(x)) return x;
  return std::strtod(format_number(x).c_str(), nullptr);
}

std::vector<double> parse_range(std::string_view spec) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= spec.size(); ++i) {
    if (i == spec.size() || spec[i] == ':') {
      parts.push_back(spec.substr(start, i - start));
      start = i + 1;
    }
  }
  if (parts.size() == 1) return {parse_number(parts[0])};
  if (parts.size() != 3) throw UsageError("range must be lo:hi:step, got '" + std::string(spec) + "'");
  const double lo = parse_number(parts[0]);
  const double hi = parse_number(parts[1]);
  const double step = parse_number(parts[2]);
  if (hi < lo) throw UsageError("range '" + std::string(spec) + "' has hi < lo");
  if (!(step > 0.0)) throw UsageError("range '" + std::string(spec) + "' needs step > 0");
  const double count = std::floor((hi - lo) / step + 1e-9) + 1.0;
  if (count > 1e7) throw UsageError("range '" + std::string(spec) + "' has too many points");
  std::vector<double> out;
  for (int i = 0; i < static_cast<int>(count); ++i) out.push_back(round_sig(lo + i * step));
  return out;
}

OutputRecord make_record(TargetClass c, const ClassParams& p) {
  OutputRecord r;
  r.cls = c;
  r.alpha = p.alpha();
  r.beta = p.beta();
  r.lambda = p.lambda();
  r.result = compute_radius(c, p);
  return r;
}

std::string csv_header() { return "class,alpha,beta,lambda,radius,branch,case,oracle_radius,residual"; }

std::string csv_field(std::string_view s) {
  if (s.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(s);
  std::string q = "\"";
  for (char ch : s) {
    if (ch == '"') q += '"';
    q += ch;
  }
  return q + "\"";
}

std::string csv_row(const OutputRecord& r) {
  const std::string fields[] = {
      std::string(to_string(r.cls)),
      format_number(r.alpha),
      format_number(r.beta),
      format_number(r.lambda),
      format_number(r.result.value),
      std::string(to_string(r.result.branch)),
      std::string(case_label(r.cls, r.result)),
      r.oracle_radius ? format_number(*r.oracle_radius) : "",
      r.residual ? format_number(*r.residual) : "",
  };
  std::string row = csv_field(fields[0]);
  for (std::size_t i = 1; i < std::size(fields); ++i) row += "," + csv_field(fields[i]);
  return row;
}

std::string record_json(const OutputRecord& r) {
  ordered_json j;
  j["class"] = to_string(r.cls);
  j["alpha"] = round_sig(r.alpha);
  j["beta"] = round_sig(r.beta);
  j["lambda"] = round_sig(r.lambda);
  j["radius"] = round_sig(r.result.value);
  j["branch"] = to_string(r.result.branch);
  j["witness"] = to_string(r.result.witness_sign);
  j["case"] = case_label(r.cls, r.result);
  if (const auto& d = r.result.diagnostics) {
    j["two_alpha_beta_minus_two"] = round_sig(d->two_alpha_beta_minus_two);
    if (d->x_value) j["x"] = round_sig(*d->x_value);
    if (d->x_value) j["x_tie"] = d->x_tie;
    if (d->sigma_tilde_1) j["sigma_tilde_1"] = round_sig(*d->sigma_tilde_1);
  }
  if (r.oracle_radius) j["oracle_radius"] = round_sig(*r.oracle_radius);
  if (r.residual) j["residual"] = round_sig(*r.residual);
  return j.dump();
}

std::string record_text(const OutputRecord& r) {
  std::ostringstream s;
  s << "class: " << to_string(r.cls) << "\n";
  s << "alpha: " << format_number(r.alpha) << "\n";
  s << "beta: " << format_number(r.beta) << "\n";
  s << "lambda: " << format_number(r.lambda) << "\n";
  s << "radius: " << format_number(r.result.value) << "\n";
  s << "branch: " << to_string(r.result.branch) << "\n";
  s << "witness: z = " << to_string(r.result.witness_sign) << "\n";
  s << "case: " << case_label(r.cls, r.result) << "\n";
  if (const auto& d = r.result.diagnostics) {
    s << "2a+b-2: " << format_number(d->two_alpha_beta_minus_two) << "\n";
    if (d->x_value) s << "X: " << format_number(*d->x_value) << (d->x_tie ? " (tie)" : "") << "\n";
    if (d->sigma_tilde_1) s << "sigma_tilde_1: " << format_number(*d->sigma_tilde_1) << "\n";
  }
  return s.str();
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Sharp radii of starlikeness for f(z) Q(z)^(beta/n)", "gft-radii"};
  app.require_subcommand(1);
  const std::vector<std::string> classes{"st", "exp", "cardioid", "rational", "nephroid", "sigmoid"};

  RadiusArgs ra;
  auto* radius = app.add_subcommand("radius", "Closed-form radius at one parameter point");
  radius->add_option("--class", ra.cls, "Target class")->required()->check(CLI::IsMember(classes));
  radius->add_option("--alpha", ra.alpha, "Order alpha of f, in [0, 1]")->required();
  radius->add_option("--beta", ra.beta, "Exponent beta > 0")->required();
  auto* radius_lambda = radius->add_option("--lambda", ra.lambda, "Order lambda in [0, 1) for st");
  radius->add_option("--format", ra.format, "Output format")->check(CLI::IsMember({"json", "text"}));

  ScanArgs sa;
  auto* scan = app.add_subcommand("scan", "CSV table over a parameter grid");
  scan->add_option("--class", sa.cls, "Target class")->required()->check(CLI::IsMember(classes));
  scan->add_option("--alpha", sa.alpha, "lo:hi:step")->required();
  scan->add_option("--beta", sa.beta, "lo:hi:step")->required();
  auto* scan_lambda = scan->add_option("--lambda", sa.lambda, "lo:hi:step, st only");
  scan->add_flag("--oracle", sa.oracle, "Add the numerical oracle radius and |radius - oracle_radius|");
  scan->add_option("--out", sa.out, "Write the CSV here instead of stdout");

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "Run the verification suites");
  verify->add_option("--tol", va.tol, "Oracle bisection tolerance");
  verify->add_option("--samples", va.samples, "Boundary samples per containment test");
  verify->add_option("--seed", va.seed, "Seed for the random draws");
  verify->add_option("--class", va.cls, "Class or all")->check(CLI::IsMember([&] {
    auto v = classes;
    v.push_back("all");
    return v;
  }()));
  verify->add_option("--inject-radius-fault", va.fault)->group("");

  RadiusArgs pa;
  auto* plot = app.add_subcommand("plot", "SVG of region, covering disc and extremal image at the radius");
  plot->add_option("--class", pa.cls, "Target class")->required()->check(CLI::IsMember(classes));
  plot->add_option("--alpha", pa.alpha, "Order alpha of f, in [0, 1]")->required();
  plot->add_option("--beta", pa.beta, "Exponent beta > 0")->required();
  auto* plot_lambda = plot->add_option("--lambda", pa.lambda, "Order lambda in [0, 1) for st");
  plot->add_option("--out", pa.out, "SVG file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*radius) return cmd_radius(ra, radius_lambda->count() > 0, out);
    if (*scan) return cmd_scan(sa, scan_lambda->count() > 0, out, err);
    if (*verify) return cmd_verify(va, out);
    if (*plot) return cmd_plot(pa, plot_lambda->count() > 0, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return *verify ? kVerifyFailed : kUsage;
  }
  return kUsage;
}

}  // namespace gft::cli
