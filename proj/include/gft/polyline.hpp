#pragma once

#include <cstdint>
#include <vector>

#include "gft/params.hpp"

namespace gft {

/// Closed polygon with a horizontal-slab index so that point queries touch
/// only the few edges whose y-extent (widened by `band`) contains the query.
class ClosedPolyline {
 public:
  struct Classification {
    int winding = 0;
    /// Query lies within `band` of some edge.
    bool near_edge = false;
  };

  ClosedPolyline(std::vector<Complex> vertices, double band, int slabs = 512);

  /// Winding number via signed upward/downward crossings of a rightward ray.
  Classification classify(Complex p) const;

  int winding_number(Complex p) const { return classify(p).winding; }

  /// Exact Euclidean distance to the polygon (linear scan over all edges).
  double distance(Complex p) const;

  const std::vector<Complex>& vertices() const noexcept { return vertices_; }
  double band() const noexcept { return band_; }

 private:
  int slab_of(double y) const;

  std::vector<Complex> vertices_;
  double band_;
  double y_min_;
  double y_max_;
  double slab_height_;
  std::vector<std::vector<std::uint32_t>> slabs_;  // edge i joins vertex i to i+1 (mod n)
};

/// Distance from p to the segment [a, b].
double segment_distance(Complex p, Complex a, Complex b);

}  // namespace gft
