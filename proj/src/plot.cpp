#include "gft/plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

#include "gft/analytic.hpp"

namespace gft {

namespace {

constexpr double kMargin = 0.05;

struct Box {
  double x0 = std::numeric_limits<double>::infinity();
  double y0 = std::numeric_limits<double>::infinity();
  double x1 = -std::numeric_limits<double>::infinity();
  double y1 = -std::numeric_limits<double>::infinity();

  void add(Complex w) {
    x0 = std::min(x0, w.real());
    x1 = std::max(x1, w.real());
    y0 = std::min(y0, -w.imag());
    y1 = std::max(y1, -w.imag());
  }
  void add(const std::vector<Complex>& ws) {
    for (Complex w : ws) add(w);
  }
};

std::string coord(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x == 0.0 ? 0.0 : x);
  return buf;
}

std::string path_data(const std::vector<Complex>& pts, bool closed) {
  std::string d;
  d.reserve(pts.size() * 32);
  for (std::size_t i = 0; i < pts.size(); ++i) {
    d += i == 0 ? "M" : " L";
    d += coord(pts[i].real());
    d += ' ';
    d += coord(-pts[i].imag());
  }
  if (closed) d += " Z";
  return d;
}

}  // namespace

PlotCurves tangency_curves(TargetClass c, const ClassParams& p) {
  PlotCurves out;
  out.radius = compute_radius(c, p).value;
  const double R = out.radius;
  const Disc disc = disc_bound(p, R);
  for (int k = 0; k < kPlotAngles; ++k) {
    const Complex u = unit_circle_point(k, kPlotAngles);
    out.disc.push_back(disc.center + disc.radius * u);
    out.image.push_back(extremal_w(p, R * u));
  }

  const TargetDomain d = target_domain(c, p);
  if (d.bounded()) {
    // Every stride-th polyline vertex: the same angles, with exact quarter turns.
    const auto& v = boundary_polyline(d).vertices();
    const std::size_t stride = v.size() / kPlotAngles;
    for (std::size_t k = 0; k < v.size(); k += stride) out.region.push_back(v[k]);
  } else {
    Box b;
    b.add(out.disc);
    b.add(out.image);
    const double pad = kMargin * (b.y1 - b.y0);
    out.region_closed = false;
    out.region = {Complex(d.lambda(), -(b.y0 - pad)), Complex(d.lambda(), -(b.y1 + pad))};
  }
  return out;
}

std::string render_svg(TargetClass c, const ClassParams& p) {
  const PlotCurves curves = tangency_curves(c, p);
  Box b;
  b.add(curves.region);
  b.add(curves.disc);
  b.add(curves.image);
  const double w = b.x1 - b.x0;
  const double h = b.y1 - b.y0;
  const double x0 = b.x0 - kMargin * w;
  const double y0 = b.y0 - kMargin * h;
  const double vw = w * (1.0 + 2.0 * kMargin);
  const double vh = h * (1.0 + 2.0 * kMargin);
  const double stroke = 0.004 * std::max(vw, vh);

  std::string s;
  s += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  s += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"800\" height=\"" +
       coord(std::round(800.0 * vh / vw)) + "\" viewBox=\"" + coord(x0) + " " + coord(y0) + " " + coord(vw) + " " +
       coord(vh) + "\">\n";
  s += "<title>" + std::string(to_string(c)) + " alpha=" + coord(p.alpha()) + " beta=" + coord(p.beta());
  if (c == TargetClass::StarlikeOrder) s += " lambda=" + coord(p.lambda());
  s += " R=" + coord(curves.radius) + "</title>\n";
  s += "<g fill=\"none\" stroke-width=\"" + coord(stroke) + "\">\n";
  s += "<path id=\"region\" stroke=\"#1f4e9c\" d=\"" + path_data(curves.region, curves.region_closed) + "\"/>\n";
  s += "<path id=\"disc\" stroke=\"#c0392b\" d=\"" + path_data(curves.disc, true) + "\"/>\n";
  s += "<path id=\"image\" stroke=\"#27863a\" d=\"" + path_data(curves.image, true) + "\"/>\n";
  s += "</g>\n</svg>\n";
  return s;
}

}  // namespace gft
