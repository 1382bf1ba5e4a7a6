#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "nestcyc/graph.hpp"

namespace nestcyc {

Graph complete_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph hypercube(std::size_t dim);
Graph torus_grid(std::size_t rows, std::size_t cols);
Graph gnp(std::size_t n, double p, std::uint64_t seed);
Graph gnm(std::size_t n, std::size_t m, std::uint64_t seed);
/// Pairing model; defective pairs (loops, repeats) are re-drawn, with a full
/// restart if the remainder cannot be completed.
Graph random_regular(std::size_t n, std::size_t d, std::uint64_t seed);

/// Parses "name:arg[,arg]" with name in complete, cycle, hypercube, torus,
/// gnp, gnm, regular. Throws InputError on malformed or infeasible specs.
Graph generate_graph(std::string_view spec, std::uint64_t seed);

}  // namespace nestcyc
