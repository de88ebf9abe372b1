#pragma once

#include <string>
#include <vector>

#include "gft/radii.hpp"

namespace gft {

inline constexpr int kPlotAngles = 1024;

struct PlotCurves {
  double radius = 0.0;
  /// Closed boundary of the region, or two points of the line Re w = lambda.
  std::vector<Complex> region;
  bool region_closed = true;
  std::vector<Complex> disc;
  std::vector<Complex> image;
};

/// Region boundary, covering disc D(a_F(R), c_F(R)) and the extremal image of
/// |z| = R at the closed-form radius R, each sampled at kPlotAngles angles.
PlotCurves tangency_curves(TargetClass c, const ClassParams& p);

/// SVG 1.1 document with paths "region", "disc" and "image". The picture
/// plane is (Re w, -Im w); the viewBox is the bounding box of all three curves
/// grown by 5% of its size on every side.
std::string render_svg(TargetClass c, const ClassParams& p);

}  // namespace gft
