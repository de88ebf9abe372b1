#include <doctest.h>
#include <json.hpp>

#include <sys/wait.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "gft/cli.hpp"
#include "gft/plot.hpp"

using namespace gft;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "gft-radii");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

int run_binary(const std::string& args) {
  const std::string cmd = std::string(GFT_RADII_BIN) + " " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

std::filesystem::path temp_path(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("gft_cli_test_" + name);
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream f(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(f), {}};
}

// Points of an SVG path "Mx y Lx y ... [Z]" with the given id.
std::vector<std::pair<double, double>> svg_path(const std::string& svg, const std::string& id) {
  const std::size_t tag = svg.find("<path id=\"" + id + "\"");
  REQUIRE(tag != std::string::npos);
  const std::size_t open = svg.find(" d=\"", tag) + 4;
  const std::size_t close = svg.find('"', open);
  std::vector<std::pair<double, double>> pts;
  std::istringstream in(svg.substr(open, close - open));
  for (std::string tok; in >> tok;) {
    if (tok == "Z") break;
    const double x = std::stod(tok.substr(1));
    std::string y;
    in >> y;
    pts.emplace_back(x, std::stod(y));
  }
  return pts;
}

}  // namespace

TEST_CASE("radius prints JSON") {
  const Run r = run({"radius", "--class", "st", "--alpha", "0", "--beta", "1"});
  CHECK(r.code == 0);
  const auto j = nlohmann::ordered_json::parse(r.out);
  CHECK(j["class"] == "st");
  CHECK(j["radius"].get<double>() == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
  CHECK(j["branch"] == "sigma0");
  CHECK(j["case"] == "single");

  const Run c = run({"radius", "--class", "cardioid", "--alpha", "1", "--beta", "1"});
  CHECK(c.code == 0);
  CHECK(nlohmann::json::parse(c.out)["radius"].get<double>() == 0.4);
}

TEST_CASE("radius JSON round-trips byte for byte") {
  for (const char* cls : {"st", "exp", "cardioid", "rational", "nephroid", "sigmoid"}) {
    for (const char* a : {"0", "0.2", "0.5", "1"}) {
      const Run r = run({"radius", "--class", cls, "--alpha", a, "--beta", "0.05"});
      REQUIRE(r.code == 0);
      REQUIRE(!r.out.empty());
      const std::string line = r.out.substr(0, r.out.size() - 1);
      CHECK(nlohmann::ordered_json::parse(line).dump() == line);
    }
  }
}

TEST_CASE("numbers carry 12 significant digits") {
  CHECK(cli::format_number(1.0 / 3.0) == "0.333333333333");
  CHECK(cli::format_number(-0.0) == "0");
  CHECK(cli::format_number(2.0) == "2");
  CHECK(cli::round_sig(0.1 + 0.2) == 0.3);
  const Run r = run({"radius", "--class", "exp", "--alpha", "1", "--beta", "1", "--format", "text"});
  CHECK(r.out.find("radius: 0.38730016322\n") != std::string::npos);
  CHECK(r.out.find("case: 2a+b-2>=0\n") != std::string::npos);
}

TEST_CASE("radius usage and validation errors exit 1") {
  CHECK(run({"radius", "--class", "st", "--alpha", "0", "--beta", "-1"}).code == 1);
  CHECK(run({"radius", "--class", "st", "--alpha", "1.5", "--beta", "1"}).code == 1);
  CHECK(run({"radius", "--class", "st", "--alpha", "0", "--beta", "1", "--lambda", "1"}).code == 1);
  CHECK(run({"radius", "--class", "exp", "--alpha", "0", "--beta", "1", "--lambda", "0.2"}).code == 1);
  CHECK(run({"radius", "--class", "parabolic", "--alpha", "0", "--beta", "1"}).code == 1);
  CHECK(run({"radius", "--class", "st", "--alpha", "x", "--beta", "1"}).code == 1);
  CHECK(run({"radius", "--class", "st", "--beta", "1"}).code == 1);
  CHECK(run({}).code == 1);
  CHECK(run({"--help"}).code == 0);
  const Run bad = run({"radius", "--class", "st", "--alpha", "0", "--beta", "-1"});
  CHECK(bad.out.empty());
  CHECK(bad.err.find("beta") != std::string::npos);
}

TEST_CASE("scan produces the grid in alpha-major order") {
  const Run r = run({"scan", "--class", "exp", "--alpha", "0:1:0.5", "--beta", "1:1:1"});
  REQUIRE(r.code == 0);
  const auto rows = lines(r.out);
  REQUIRE(rows.size() == 4);
  CHECK(rows[0] == "class,alpha,beta,lambda,radius,branch,case,oracle_radius,residual");
  CHECK(rows[3] == "exp,1,1,0,0.38730016322,sigma0,2a+b-2>=0,,");

  const Run st = run({"scan", "--class", "st", "--alpha", "0:0.1:0.1", "--beta", "1:2:1", "--lambda", "0:0.5:0.25"});
  REQUIRE(st.code == 0);
  const auto st_rows = lines(st.out);
  REQUIRE(st_rows.size() == 13);
  const std::vector<std::string> expect_keys = {"0,1,0", "0,1,0.25", "0,1,0.5", "0,2,0"};
  for (std::size_t i = 0; i < expect_keys.size(); ++i) CHECK(st_rows[i + 1].find("st," + expect_keys[i] + ",") == 0);
  CHECK(st_rows[7].find("st,0.1,1,0,") == 0);
}

TEST_CASE("scan with the oracle") {
  const Run r = run({"scan", "--class", "cardioid", "--alpha", "0:1:0.25", "--beta", "0.5:2:0.5", "--oracle"});
  REQUIRE(r.code == 0);
  const auto rows = lines(r.out);
  REQUIRE(rows.size() == 1 + 5 * 4);
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const auto f = split(rows[i], ',');
    REQUIRE(f.size() == 9);
    CHECK(std::abs(std::stod(f[4]) - std::stod(f[7])) <= 1e-6);
    CHECK(std::stod(f[8]) <= 1e-6);
  }
}

TEST_CASE("scan output does not depend on the thread count") {
  const std::vector<std::string> args = {"scan", "--class", "rational", "--alpha", "0:1:0.1", "--beta", "0.1:3:0.3",
                                         "--oracle"};
  ::setenv("GFT_RADII_THREADS", "1", 1);
  const Run one = run(args);
  ::setenv("GFT_RADII_THREADS", "4", 1);
  const Run four = run(args);
  const Run again = run(args);
  ::unsetenv("GFT_RADII_THREADS");
  REQUIRE(one.code == 0);
  CHECK(one.out == four.out);
  CHECK(four.out == again.out);
}

TEST_CASE("scan writes to a file") {
  const auto path = temp_path("scan.csv");
  const Run r = run({"scan", "--class", "nephroid", "--alpha", "0:1:0.5", "--beta", "1", "--out", path.string()});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  CHECK(lines(slurp(path)).size() == 4);
  std::filesystem::remove(path);
  CHECK(run({"scan", "--class", "nephroid", "--alpha", "0", "--beta", "1", "--out", "/nonexistent/dir/x.csv"}).code == 1);
}

TEST_CASE("malformed ranges exit 1") {
  for (const char* bad : {"0:1", "1:0:0.1", "a:b:c", "0:1:0", "0:1:-0.1", "0:1:0.5:2", ""}) {
    CAPTURE(bad);
    CHECK(run({"scan", "--class", "exp", "--alpha", bad, "--beta", "1"}).code == 1);
  }
  CHECK(cli::parse_range("0:1:0.1").size() == 11);
  CHECK(cli::parse_range("0:1:0.1")[3] == 0.3);
  CHECK(cli::parse_range("0.25") == std::vector<double>{0.25});
}

TEST_CASE("csv quoting") {
  CHECK(cli::csv_field("plain") == "plain");
  CHECK(cli::csv_field("a,b") == "\"a,b\"");
  CHECK(cli::csv_field("say \"hi\"") == "\"say \"\"hi\"\"\"");
}

TEST_CASE("verify exit codes") {
  const Run ok = run({"verify", "--class", "nephroid", "--tol", "1e-3"});
  CHECK(ok.code == 0);
  CHECK(ok.out.find("FAIL") == std::string::npos);
  CHECK(ok.out.find("summary: ") != std::string::npos);
  CHECK(ok.out.find("branch-audit nephroid: ") != std::string::npos);

  const Run bad = run({"verify", "--class", "nephroid", "--tol", "1e-3", "--inject-radius-fault", "1e-3"});
  CHECK(bad.code == 2);
  CHECK(bad.out.find("FAIL sharpness nephroid") != std::string::npos);

  CHECK(run({"verify", "--tol", "0"}).code == 1);
  CHECK(run({"verify", "--class", "nope"}).code == 1);
}

TEST_CASE("full verify run passes") {
  const Run r = run({"verify", "--class", "all", "--seed", "42"});
  CHECK(r.code == 0);
  CHECK(r.out.find("FAIL") == std::string::npos);
  for (const char* c : {"exp", "cardioid", "rational"}) {
    CHECK(r.out.find(std::string("branch-audit ") + c + ": ") != std::string::npos);
  }
}

TEST_CASE("plot writes three named curves") {
  const auto path = temp_path("n.svg");
  const Run r = run({"plot", "--class", "nephroid", "--alpha", "0.2", "--beta", "1", "--out", path.string()});
  REQUIRE(r.code == 0);
  const std::string svg = slurp(path);
  std::filesystem::remove(path);
  CHECK(svg.find("version=\"1.1\"") != std::string::npos);
  const auto region = svg_path(svg, "region");
  const auto disc = svg_path(svg, "disc");
  const auto image = svg_path(svg, "image");
  CHECK(region.size() == static_cast<std::size_t>(kPlotAngles));
  CHECK(disc.size() == static_cast<std::size_t>(kPlotAngles));
  CHECK(image.size() == static_cast<std::size_t>(kPlotAngles));

  // Sharpness: the image touches the boundary at the witness.
  double best = 1e9;
  for (const auto& p : image) {
    for (const auto& q : region) best = std::min(best, std::hypot(p.first - q.first, p.second - q.second));
  }
  CHECK(best <= 1e-6);

  // viewBox: bounding box of all curves plus 5% on each side.
  double x0 = 1e9, y0 = 1e9, x1 = -1e9, y1 = -1e9;
  for (const auto* c : {&region, &disc, &image}) {
    for (const auto& p : *c) {
      x0 = std::min(x0, p.first);
      x1 = std::max(x1, p.first);
      y0 = std::min(y0, p.second);
      y1 = std::max(y1, p.second);
    }
  }
  const std::size_t vb = svg.find("viewBox=\"");
  REQUIRE(vb != std::string::npos);
  std::istringstream box(svg.substr(vb + 9, svg.find('"', vb + 9) - vb - 9));
  double bx = 0, by = 0, bw = 0, bh = 0;
  box >> bx >> by >> bw >> bh;
  CHECK(bx == doctest::Approx(x0 - 0.05 * (x1 - x0)).epsilon(1e-9));
  CHECK(by == doctest::Approx(y0 - 0.05 * (y1 - y0)).epsilon(1e-9));
  CHECK(bw == doctest::Approx(1.1 * (x1 - x0)).epsilon(1e-9));
  CHECK(bh == doctest::Approx(1.1 * (y1 - y0)).epsilon(1e-9));
}

TEST_CASE("plot touches the boundary for every class") {
  for (const char* cls : {"exp", "cardioid", "rational", "nephroid", "sigmoid"}) {
    for (const char* beta : {"1", "0.05"}) {
      CAPTURE(cls);
      CAPTURE(beta);
      const auto path = temp_path(std::string(cls) + ".svg");
      REQUIRE(run({"plot", "--class", cls, "--alpha", "0.2", "--beta", beta, "--out", path.string()}).code == 0);
      const std::string svg = slurp(path);
      std::filesystem::remove(path);
      double best = 1e9;
      for (const auto& p : svg_path(svg, "image")) {
        for (const auto& q : svg_path(svg, "region")) best = std::min(best, std::hypot(p.first - q.first, p.second - q.second));
      }
      CHECK(best <= 1e-6);
    }
  }
}

TEST_CASE("plot of a half-plane is a vertical line") {
  const auto path = temp_path("s.svg");
  REQUIRE(run({"plot", "--class", "st", "--alpha", "0", "--beta", "1", "--lambda", "0", "--out", path.string()}).code == 0);
  const std::string svg = slurp(path);
  std::filesystem::remove(path);
  const auto region = svg_path(svg, "region");
  REQUIRE(region.size() == 2);
  CHECK(region[0].first == 0.0);
  CHECK(region[1].first == 0.0);
  CHECK(region[0].second != region[1].second);
  // The witness image point 0 sits on the line.
  double best = 1e9;
  for (const auto& p : svg_path(svg, "image")) best = std::min(best, std::abs(p.first));
  CHECK(best <= 1e-6);
}

TEST_CASE("plot to an unwritable path exits 1") {
  CHECK(run({"plot", "--class", "exp", "--alpha", "0", "--beta", "1", "--out", "/nonexistent/dir/x.svg"}).code == 1);
  CHECK(run({"plot", "--class", "exp", "--alpha", "0", "--beta", "1"}).code == 1);
}

TEST_CASE("installed binary exit codes") {
  CHECK(run_binary("radius --class st --alpha 0 --beta 1") == 0);
  CHECK(run_binary("radius --class st --alpha 0 --beta -1") == 1);
  CHECK(run_binary("scan --class exp --alpha 0:1 --beta 1") == 1);
  CHECK(run_binary("verify --class sigmoid --tol 1e-3 --inject-radius-fault 1e-3") == 2);
  CHECK(run_binary("verify --class sigmoid --tol 1e-3") == 0);
}
