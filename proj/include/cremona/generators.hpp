#pragma once

#include <cstdint>

#include "cremona/hypgraph.hpp"

namespace cremona::graphs {

Graph path(std::size_t n);
Graph cycle(std::size_t n);
Graph complete(std::size_t n);
/// side x side grid; vertex (row, col) is row * side + col.
Graph grid(std::size_t side);
/// Uniform random recursive tree.
Graph random_tree(std::size_t n, std::uint64_t seed);

/// Gamma(x, y) = the unique path between x and y. Requires a tree.
SubgraphFamily geodesic_family(const Graph& tree);
/// Gamma(x, y) = {x, y}.
SubgraphFamily edge_family(std::size_t n);
/// Geodesics of the grid that step along the coordinate with the larger
/// remaining gap (column first on ties).
SubgraphFamily staircase_family(std::size_t side);

}  // namespace cremona::graphs
