#pragma once

#include <string>

#include "fends/ball.hpp"
#include "fends/subgraph.hpp"

namespace fends {

/// Graphviz digraph of a ball. Nodes are named by canonical key ("1" for
/// the base); edges carry generator labels. With a level, its vertices are
/// grey and each component of the complement gets its own colour, horizon
/// components drawn with a double outline.
std::string to_dot(const Ball &ball, const std::string &name = "ball");
std::string to_dot(const Subgraph &level, const std::string &name = "ball");

} // namespace fends
