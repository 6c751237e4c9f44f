#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

#include "antimagic/tree.hpp"

namespace antimagic {

struct GenError : std::runtime_error {
  enum class Kind { BudgetInfeasible, OddBudget };
  Kind kind;
  GenError(Kind k, const std::string& msg)
      : std::runtime_error(msg), kind(k) {}
};

/// Parameters for random trees whose even-degree vertices form a path of
/// order exactly 2p. `extra_budget` is the edge count beyond the 2p-1
/// spine edges; it must be even and at least 2 (each spine end needs an
/// attachment). `leaf_endpoint_bias` is the probability of forcing a leaf
/// neighbor at the first spine end.
struct GenSpec {
  int p = 1;
  long long extra_budget = 2;
  std::uint64_t seed = 0;
  double leaf_endpoint_bias = 0.5;
};

namespace detail {

/// Grows a rooted tree under `root` in which every vertex has an even
/// number of children: children are always attached in pairs to a
/// uniformly chosen existing vertex. `budget` (edge count) must be even.
inline void grow_even_children(std::vector<std::pair<VertexId, VertexId>>& edges,
                               VertexId root, VertexId& next_id,
                               long long budget, std::mt19937_64& rng) {
  std::vector<VertexId> verts{root};
  while (budget > 0) {
    std::uniform_int_distribution<std::size_t> pick(0, verts.size() - 1);
    VertexId v = verts[pick(rng)];
    VertexId a = next_id++, b = next_id++;
    edges.emplace_back(v, a);
    edges.emplace_back(v, b);
    verts.push_back(a);
    verts.push_back(b);
    budget -= 2;
  }
}

/// Splits `total` into `count` odd parts, each at least `min_size`
/// (odd), remainder spread in 2-unit steps.
inline std::vector<long long> split_odd_parts(long long total, int count,
                                              long long min_size,
                                              std::mt19937_64& rng) {
  std::vector<long long> sizes(count, min_size);
  long long rem = total - min_size * count;
  std::uniform_int_distribution<int> pick(0, count - 1);
  for (long long u = 0; u < rem / 2; ++u) sizes[pick(rng)] += 2;
  return sizes;
}

}  // namespace detail

/// Rooted tree (root id 0) with `budget` edges in which every vertex has
/// an even number of children. Throws OddBudget on odd budgets.
struct RootedTree {
  int size = 1;  // vertex count
  std::vector<std::pair<VertexId, VertexId>> edges;
};

inline RootedTree generate_odd_subtree(long long budget, std::uint64_t seed) {
  if (budget < 0 || budget % 2 != 0)
    throw GenError(GenError::Kind::OddBudget,
                   "even-children subtree needs an even edge budget");
  std::mt19937_64 rng(seed);
  RootedTree rt;
  VertexId next = 1;
  detail::grow_even_children(rt.edges, 0, next, budget, rng);
  rt.size = next;
  return rt;
}

/// Random tree whose even-degree vertices are exactly the spine path
/// w_1..w_{2p}: the spine ends receive an odd number of pendant subtrees,
/// interior spine vertices an even number, and every pendant subtree has
/// even children throughout, so all off-spine vertices have odd degree.
inline Tree generate(const GenSpec& spec) {
  if (spec.p < 1) throw std::invalid_argument("p must be >= 1");
  const long long budget = spec.extra_budget;
  if (budget % 2 != 0 || budget < 2)
    throw GenError(GenError::Kind::BudgetInfeasible,
                   "extra budget must be even and >= 2");

  std::mt19937_64 rng(spec.seed);
  std::bernoulli_distribution flip(spec.leaf_endpoint_bias);
  bool leaf_end = flip(rng);
  if (!leaf_end && budget < 6) leaf_end = true;  // both ends would need size 3

  const int spine = 2 * spec.p;
  const int end1 = 0, end2 = spine - 1;

  // Edge budget per spine vertex: ends odd (>= 1, or >= 3 when no leaf
  // endpoint is wanted), interior even.
  const long long end_min = leaf_end ? 1 : 3;
  std::vector<long long> alloc(spine, 0);
  alloc[end1] = alloc[end2] = end_min;
  long long rem = budget - 2 * end_min;
  std::uniform_int_distribution<int> slot(0, spine - 1);
  for (long long u = 0; u < rem / 2; ++u) alloc[slot(rng)] += 2;

  std::vector<std::pair<VertexId, VertexId>> edges;
  edges.reserve(spine - 1 + budget);
  for (int i = 0; i + 1 < spine; ++i) edges.emplace_back(i, i + 1);

  VertexId next_id = spine;
  for (int s = 0; s < spine; ++s) {
    long long b = alloc[s];
    if (b == 0) continue;
    const bool is_end = (s == end1 || s == end2);
    std::vector<long long> sizes;
    if (is_end && leaf_end && s == end1) {
      // Reserve one guaranteed leaf pendant, then an even count of odd
      // pendants for the rest.
      sizes.push_back(1);
      long long left = b - 1;  // even
      if (left > 0) {
        std::uniform_int_distribution<long long> cnt(1, left / 2);
        int c = static_cast<int>(2 * cnt(rng));
        if (c > left) c = static_cast<int>(left);
        sizes.resize(1 + c, 1);
        long long rem2 = left - c;
        std::uniform_int_distribution<int> pick(1, c);
        for (long long u = 0; u < rem2 / 2; ++u) sizes[pick(rng)] += 2;
      }
    } else {
      const long long min_size = (is_end && !leaf_end) ? 3 : 1;
      const long long cmax = b / min_size;
      int c;
      if (is_end) {
        // odd count in [1, cmax]
        std::uniform_int_distribution<long long> cnt(0, (cmax - 1) / 2);
        c = static_cast<int>(2 * cnt(rng) + 1);
      } else {
        // even count in [2, cmax] (b is even so cmax >= 2)
        std::uniform_int_distribution<long long> cnt(1, cmax / 2);
        c = static_cast<int>(2 * cnt(rng));
      }
      sizes = detail::split_odd_parts(b, c, min_size, rng);
    }
    for (long long size : sizes) {
      VertexId pendant_root = next_id++;
      edges.emplace_back(s, pendant_root);
      detail::grow_even_children(edges, pendant_root, next_id, size - 1, rng);
    }
  }
  return Tree::from_edges(std::move(edges));
}

}  // namespace antimagic
