#pragma once

#include <cstddef>
#include <string>

namespace syt {

// DOT digraph of the legal-partition lattice with coordinates up to
// max_coordinate: nodes labeled "shape : count", one arrowhead style per
// row index. Caps: r <= 3, max_coordinate <= 6 (throws CapExceeded).
std::string young_graph_dot(std::size_t r, long max_coordinate);

} // namespace syt
