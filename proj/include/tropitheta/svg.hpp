#pragma once

#include <string>

#include "tropitheta/embedding.hpp"

namespace tropitheta {

// Graphs of θ_b ((Q, ℓ) normalization) over the fundamental interval, n = 1.
std::string svg_theta_graphs(const TropicalDescentDatum& datum, const PolarizationInfo& info);
// Closed image polygon; for more than two coordinates the first two are drawn.
std::string svg_image_polygon(const ImageComplex& img);
// Linearity cells of φ̃ on the fundamental parallelogram, n = 2.
std::string svg_cells(const PiecewiseAffineMap& map);

}  // namespace tropitheta
