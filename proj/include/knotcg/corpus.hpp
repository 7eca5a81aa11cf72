#pragma once

#include <optional>
#include <string>
#include <vector>

#include "knotcg/seifert.hpp"

namespace knotcg::corpus {

// Orientation convention: the right-handed trefoil is [[-1,1],[0,-1]] and has
// sigma_{1/3} = -2.
SeifertMatrix right_trefoil();
SeifertMatrix left_trefoil();
SeifertMatrix figure_eight();
/// [[0,1],[2,0]] + [[0,1],[2,0]], the genus-two knot K before infection.
SeifertMatrix paper_knot();

/// Connected sum of n copies of s, assembled directly as a block matrix.
SeifertMatrix repeated_sum(const SeifertMatrix& s, std::size_t n, std::string label);

/// unknot, trefoil / right-trefoil, left-trefoil, figure-eight, paper-k.
std::optional<SeifertMatrix> lookup(const std::string& name);
std::vector<std::string> names();

}  // namespace knotcg::corpus
