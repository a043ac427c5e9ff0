#include "steiner_helix/tree.hpp"

#include <numeric>
#include <stdexcept>

namespace steiner_helix {

namespace {

// id -> contiguous vertex slot: terminals first, then Steiner points.
Eigen::Index slot(const TreeEmbedding& tree, int id) {
  if (id >= 0) {
    if (id >= tree.terminals.cols()) throw std::out_of_range("TreeEmbedding: bad terminal id");
    return id;
  }
  const Eigen::Index s = -id;
  if (s > tree.steiner_points.cols()) throw std::out_of_range("TreeEmbedding: bad Steiner id");
  return tree.terminals.cols() + (s - 1);
}

struct UnionFind {
  std::vector<Eigen::Index> parent;
  explicit UnionFind(Eigen::Index n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  Eigen::Index find(Eigen::Index v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  }
  bool unite(Eigen::Index a, Eigen::Index b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
};

}  // namespace

Eigen::Vector3d TreeEmbedding::vertex(int id) const {
  if (id >= 0) {
    if (id >= terminals.cols()) throw std::out_of_range("TreeEmbedding: bad terminal id");
    return terminals.col(id);
  }
  const Eigen::Index s = -id;
  if (s > steiner_points.cols()) throw std::out_of_range("TreeEmbedding: bad Steiner id");
  return steiner_points.col(s - 1);
}

double TreeEmbedding::edge_length(const std::pair<int, int>& edge) const {
  return (vertex(edge.first) - vertex(edge.second)).norm();
}

double edge_length_sum(const TreeEmbedding& tree) {
  double sum = 0.0;
  for (const auto& edge : tree.edges) sum += tree.edge_length(edge);
  return sum;
}

bool is_spanning_tree(const TreeEmbedding& tree) {
  const Eigen::Index vertices = tree.vertex_count();
  if (static_cast<Eigen::Index>(tree.edges.size()) != vertices - 1) return false;
  UnionFind components(vertices);
  for (const auto& edge : tree.edges)
    if (!components.unite(slot(tree, edge.first), slot(tree, edge.second))) return false;
  return true;
}

}  // namespace steiner_helix
