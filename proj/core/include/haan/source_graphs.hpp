#pragma once

#include "haan/reductions.hpp"

#include <cstdint>
#include <istream>
#include <string_view>

namespace haan {

/// Built-in source graphs: k3, k4, k5, prism, petersen, cycle:N and
/// random-regular:N:D[:SEED]. `seed` is used when the descriptor has no seed.
/// Throws Error(InvalidConfig) for unknown names or bad parameters.
SourceGraph named_graph(std::string_view descriptor, std::uint64_t seed = 0);

SourceGraph complete_graph(std::size_t n);
SourceGraph cycle_graph(std::size_t n);

/// Uniform simple d-regular graph on n vertices by the pairing model, retrying
/// until the pairing is simple.
SourceGraph random_regular_graph(std::size_t n, std::size_t d, std::uint64_t seed);

/// Edge-list text: one "u v" pair per line, '#' comments, and an optional
/// "vertices N" line for isolated vertices. Throws Error(ParseError).
SourceGraph read_edge_list(std::istream& in);

} // namespace haan
