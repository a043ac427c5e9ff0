#include "steiner_helix/helix.hpp"

#include <numbers>

namespace steiner_helix {

void validate(const HelixParams& params) {
  if (params.n < 2) throw std::domain_error("helix: need at least 2 points");
  if (!(params.omega > 0.0 && params.omega < 2.0 * std::numbers::pi))
    throw std::domain_error("helix: omega must lie strictly inside (0, 2*pi)");
}

Eigen::Matrix3Xd helix_points(const HelixParams& params) {
  validate(params);
  Eigen::Matrix3Xd points(3, params.n);
  for (int i = 0; i < params.n; ++i)
    points.col(i) = helix_point(i, params.omega, params.alpha);
  return points;
}

SkipSequence skip_subsequence(const HelixParams& params, int j, int k) {
  validate(params);
  if (k < 1 || k > params.n - 1)
    throw std::domain_error("skip_subsequence: need 1 <= k <= n-1");
  if (j < 0 || j >= k) throw std::domain_error("skip_subsequence: need 0 <= j < k");
  SkipSequence seq;
  seq.j = j;
  seq.k = k;
  seq.l_max = (params.n - j - 1) / k;
  seq.indices.reserve(seq.l_max + 1);
  for (int l = 0; l <= seq.l_max; ++l) seq.indices.push_back(j + l * k);
  return seq;
}

UnionSequence skip_union(const HelixParams& params, int k) {
  UnionSequence result;
  result.subsequences.reserve(k);
  for (int j = 0; j < k; ++j) result.subsequences.push_back(skip_subsequence(params, j, k));
  result.connectors.reserve(k - 1);
  for (int j = 0; j + 1 < k; ++j) {
    const int last = j + result.subsequences[j].l_max * k;
    if (last + 1 <= params.n - 1)
      result.connectors.emplace_back(last, last + 1);
    else
      result.connectors.emplace_back(j, j + 1);
  }
  return result;
}

std::vector<std::pair<int, int>> UnionSequence::edges() const {
  std::vector<std::pair<int, int>> all;
  for (const auto& seq : subsequences)
    for (std::size_t l = 0; l + 1 < seq.indices.size(); ++l)
      all.emplace_back(seq.indices[l], seq.indices[l + 1]);
  all.insert(all.end(), connectors.begin(), connectors.end());
  return all;
}

}  // namespace steiner_helix
