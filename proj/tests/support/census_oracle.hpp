#pragma once

#include <array>
#include <cstdint>

#include "hypermotif/graph.hpp"

namespace hypermotif::testkit {

using Adj3 = std::array<std::array<bool, 3>, 3>;

int encode(const Adj3& a);
Adj3 decode(int code);

/// Minimum code over all six relabelings, from an explicit 3x3 matrix.
int oracle_canonical(int code);

/// Census by visiting every node triple; classes numbered by ascending
/// canonical code.
std::array<std::uint64_t, 16> oracle_census(const DirectedGraph& g);

}  // namespace hypermotif::testkit
