#include "steiner_helix/spanning.hpp"

#include <algorithm>
#include <numeric>

namespace steiner_helix {

double spanning_tree_length(const HelixParams& params, int k) {
  validate(params);
  return spanning_tree_length(params.omega, params.alpha, params.n, k);
}

TreeEmbedding union_embedding(const HelixParams& params, int k) {
  TreeEmbedding tree;
  tree.terminals = helix_points(params);
  tree.edges = skip_union(params, k).edges();
  tree.total_length = edge_length_sum(tree);
  return tree;
}

TreeEmbedding minimum_spanning_tree(const Eigen::Ref<const Eigen::Matrix3Xd>& points,
                                    int max_points) {
  const Eigen::Index n = points.cols();
  if (n < 2) throw std::invalid_argument("minimum_spanning_tree: need at least 2 points");
  if (n > max_points) throw std::invalid_argument("minimum_spanning_tree: point count exceeds cap");
  if (!points.allFinite())
    throw std::invalid_argument("minimum_spanning_tree: non-finite coordinates");

  struct CandidateEdge {
    double length;
    int a, b;  // a < b
  };
  std::vector<CandidateEdge> candidates;
  candidates.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      candidates.push_back({(points.col(a) - points.col(b)).norm(), a, b});
  std::sort(candidates.begin(), candidates.end(), [](const CandidateEdge& u, const CandidateEdge& v) {
    if (u.length != v.length) return u.length < v.length;
    if (u.a != v.a) return u.a < v.a;
    return u.b < v.b;
  });

  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  const auto find = [&parent](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };

  TreeEmbedding tree;
  tree.terminals = points;
  tree.edges.reserve(n - 1);
  for (const auto& edge : candidates) {
    const int ra = find(edge.a);
    const int rb = find(edge.b);
    if (ra == rb) continue;
    parent[ra] = rb;
    tree.edges.emplace_back(edge.a, edge.b);
    tree.total_length += edge.length;
    if (static_cast<Eigen::Index>(tree.edges.size()) == n - 1) break;
  }
  return tree;
}

}  // namespace steiner_helix
