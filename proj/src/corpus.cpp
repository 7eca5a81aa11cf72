#include "knotcg/corpus.hpp"

namespace knotcg::corpus {

SeifertMatrix right_trefoil() { return SeifertMatrix({{-1, 1}, {0, -1}}, "right-trefoil"); }
SeifertMatrix left_trefoil() { return SeifertMatrix({{1, 0}, {-1, 1}}, "left-trefoil"); }
SeifertMatrix figure_eight() { return SeifertMatrix({{1, 1}, {0, -1}}, "figure-eight"); }

SeifertMatrix paper_knot() {
  return SeifertMatrix({{0, 1, 0, 0}, {2, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, 2, 0}}, "paper-k");
}

SeifertMatrix repeated_sum(const SeifertMatrix& s, std::size_t n, std::string label) {
  const std::size_t b = s.size();
  IntMatrix v(b * n, b * n);
  for (std::size_t copy = 0; copy < n; ++copy)
    for (std::size_t i = 0; i < b; ++i)
      for (std::size_t j = 0; j < b; ++j) v(copy * b + i, copy * b + j) = s.matrix()(i, j);
  return SeifertMatrix(std::move(v), std::move(label));
}

std::optional<SeifertMatrix> lookup(const std::string& name) {
  if (name == "unknot") return SeifertMatrix::unknot();
  if (name == "trefoil" || name == "right-trefoil") return right_trefoil();
  if (name == "left-trefoil") return left_trefoil();
  if (name == "figure-eight") return figure_eight();
  if (name == "paper-k") return paper_knot();
  return std::nullopt;
}

std::vector<std::string> names() {
  return {"unknot", "trefoil", "right-trefoil", "left-trefoil", "figure-eight", "paper-k"};
}

}  // namespace knotcg::corpus
