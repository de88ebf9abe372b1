#include "gft/polyline.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace gft {

namespace {

// > 0 when p is left of the directed line a -> b.
double orientation(Complex a, Complex b, Complex p) {
  return (b.real() - a.real()) * (p.imag() - a.imag()) -
         (p.real() - a.real()) * (b.imag() - a.imag());
}

}  // namespace

double segment_distance(Complex p, Complex a, Complex b) {
  const Complex d = b - a;
  const double len2 = std::norm(d);
  if (len2 == 0.0) return std::abs(p - a);
  double t = ((p.real() - a.real()) * d.real() + (p.imag() - a.imag()) * d.imag()) / len2;
  t = std::clamp(t, 0.0, 1.0);
  return std::abs(p - (a + t * d));
}

ClosedPolyline::ClosedPolyline(std::vector<Complex> vertices, double band, int slabs)
    : vertices_(std::move(vertices)), band_(band) {
  if (vertices_.size() < 3) throw std::invalid_argument("polyline needs at least 3 vertices");
  if (slabs < 1) throw std::invalid_argument("slab count must be positive");
  y_min_ = std::numeric_limits<double>::infinity();
  y_max_ = -y_min_;
  for (const Complex& v : vertices_) {
    y_min_ = std::min(y_min_, v.imag());
    y_max_ = std::max(y_max_, v.imag());
  }
  y_min_ -= band_;
  y_max_ += band_;
  slab_height_ = (y_max_ - y_min_) / slabs;
  if (!(slab_height_ > 0.0)) slab_height_ = 1.0;
  slabs_.resize(static_cast<std::size_t>(slabs));

  const std::size_t n = vertices_.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Complex a = vertices_[i];
    const Complex b = vertices_[(i + 1) % n];
    const int lo = slab_of(std::min(a.imag(), b.imag()) - band_);
    const int hi = slab_of(std::max(a.imag(), b.imag()) + band_);
    for (int s = lo; s <= hi; ++s) slabs_[static_cast<std::size_t>(s)].push_back(static_cast<std::uint32_t>(i));
  }
}

int ClosedPolyline::slab_of(double y) const {
  const auto last = static_cast<int>(slabs_.size()) - 1;
  const double idx = std::floor((y - y_min_) / slab_height_);
  if (idx < 0.0) return 0;
  if (idx > last) return last;
  return static_cast<int>(idx);
}

ClosedPolyline::Classification ClosedPolyline::classify(Complex p) const {
  Classification out;
  const double py = p.imag();
  if (py < y_min_ || py > y_max_) return out;

  const std::size_t n = vertices_.size();
  for (std::uint32_t i : slabs_[static_cast<std::size_t>(slab_of(py))]) {
    const Complex a = vertices_[i];
    const Complex b = vertices_[(i + 1) % n];
    if (!out.near_edge && band_ > 0.0 && segment_distance(p, a, b) < band_) out.near_edge = true;
    if (a.imag() <= py) {
      if (b.imag() > py && orientation(a, b, p) > 0.0) ++out.winding;
    } else if (b.imag() <= py && orientation(a, b, p) < 0.0) {
      --out.winding;
    }
  }
  return out;
}

double ClosedPolyline::distance(Complex p) const {
  double best = std::numeric_limits<double>::infinity();
  const std::size_t n = vertices_.size();
  for (std::size_t i = 0; i < n; ++i) {
    best = std::min(best, segment_distance(p, vertices_[i], vertices_[(i + 1) % n]));
  }
  return best;
}

}  // namespace gft
