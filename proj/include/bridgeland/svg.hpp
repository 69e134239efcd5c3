#pragma once

#include <string>
#include <vector>

#include "bridgeland/walls.hpp"

namespace bridgeland {

struct PlotOptions {
  double width = 800;
  double height = 500;
  double margin = 50;
  std::string comment;  // written as an XML comment after the root element
};

// Semicircles and vertical lines of `walls` clipped to the view, with axes,
// tick labels and wall ids (the index in `walls`).
std::string plot_walls(const std::vector<WallLocus>& walls, const Region& view,
                       const PlotOptions& options = {});

}  // namespace bridgeland
