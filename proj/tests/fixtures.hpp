#pragma once

#include <algorithm>
#include <numeric>
#include <set>
#include <vector>

#include "antimagic/tree.hpp"

namespace antimagic::testing {

inline Tree make_tree(std::vector<std::pair<VertexId, VertexId>> edges) {
  return Tree::from_edges(std::move(edges));
}

inline Tree path_tree(int n) {
  std::vector<std::pair<VertexId, VertexId>> es;
  for (int i = 0; i + 1 < n; ++i) es.emplace_back(i, i + 1);
  return make_tree(std::move(es));
}

inline Tree star_tree(int leaves) {
  std::vector<std::pair<VertexId, VertexId>> es;
  for (int i = 1; i <= leaves; ++i) es.emplace_back(0, i);
  return make_tree(std::move(es));
}

/// P4 on 0-1-2-3 with extra leaves 4,5 at vertex 2 (m = 5).
inline Tree p4_plus_two_leaves() {
  return make_tree({{0, 1}, {1, 2}, {2, 3}, {2, 4}, {2, 5}});
}

/// p = 5, m = 21, neither spine endpoint a leaf (swap case): spine
/// 0..11 (even-degree vertices 1..10), two extra leaves at each of
/// 0, 2, 5, 8, 11.
inline Tree swap_fixture_tree() {
  std::vector<std::pair<VertexId, VertexId>> es;
  for (int i = 0; i < 11; ++i) es.emplace_back(i, i + 1);
  es.insert(es.end(), {{0, 12}, {0, 13}, {11, 14}, {11, 15}});
  es.insert(es.end(),
            {{2, 16}, {2, 17}, {5, 18}, {5, 19}, {8, 20}, {8, 21}});
  return make_tree(std::move(es));
}

/// p = 5, m = 21, leaf at v0 (no swaps): spine 0..11 with v0 = 0 a leaf,
/// two extra leaves at each of 2, 4, 6, 8 and at 11.
inline Tree leaf_fixture_tree() {
  std::vector<std::pair<VertexId, VertexId>> es;
  for (int i = 0; i < 11; ++i) es.emplace_back(i, i + 1);
  es.insert(es.end(), {{11, 12}, {11, 13}});
  es.insert(es.end(),
            {{2, 14}, {2, 15}, {4, 16}, {4, 17}, {6, 18}, {6, 19},
             {8, 20}, {8, 21}});
  return make_tree(std::move(es));
}

/// p = 4, l = 3, m = 21 (swap-and-extend case): spine 0..9 with even
/// vertices 1..8, extension 9-10-11-12 with pendants 13, 14, 15, two
/// leaves at 0, four leaves at 4.
inline Tree extend_fixture_tree() {
  std::vector<std::pair<VertexId, VertexId>> es;
  for (int i = 0; i < 9; ++i) es.emplace_back(i, i + 1);
  es.insert(es.end(), {{9, 10}, {10, 11}, {11, 12}});   // extension path
  es.insert(es.end(), {{9, 13}, {10, 14}, {11, 15}});   // pendants
  es.insert(es.end(), {{0, 16}, {0, 17}});
  es.insert(es.end(), {{4, 18}, {4, 19}, {4, 20}, {4, 21}});
  return make_tree(std::move(es));
}

/// p = 2 corner: no swaps happen and the conflict vertex is v0 itself.
inline Tree p2_no_swap_tree() {
  return make_tree({{0, 1},
                    {1, 2},
                    {2, 3},
                    {0, 4},
                    {4, 5},
                    {4, 6},
                    {3, 7},
                    {7, 8},
                    {7, 9}});
}

/// Applies a vertex-id permutation (and keeps edge order).
inline Tree permute_tree(const Tree& t, const std::vector<int>& perm) {
  std::vector<std::pair<VertexId, VertexId>> es;
  for (auto [u, v] : t.edges()) es.emplace_back(perm[u], perm[v]);
  return make_tree(std::move(es));
}

/// Brute-force isomorphism test over all vertex permutations.
inline bool brute_isomorphic(const Tree& a, const Tree& b) {
  if (a.vertex_count() != b.vertex_count() ||
      a.edge_count() != b.edge_count())
    return false;
  const int n = a.vertex_count();
  std::set<std::pair<int, int>> eb;
  for (auto [u, v] : b.edges()) eb.insert(std::minmax(u, v));
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (auto [u, v] : a.edges()) {
      if (!eb.count(std::minmax(perm[u], perm[v]))) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

/// Independent classification of the even-degree vertex set, written
/// against the definition rather than the walk used by the library.
struct NaiveEvenPath {
  bool empty = false;
  bool odd_count = false;
  bool is_even_path = false;
  std::vector<VertexId> order;  // when is_even_path
};

inline NaiveEvenPath naive_even_path(const Tree& t) {
  NaiveEvenPath r;
  std::vector<VertexId> evens;
  for (VertexId v = 0; v < t.vertex_count(); ++v)
    if (t.degree(v) % 2 == 0) evens.push_back(v);
  if (evens.empty()) {
    r.empty = true;
    return r;
  }
  if (evens.size() % 2 == 1) {
    r.odd_count = true;
    return r;
  }
  std::set<VertexId> es(evens.begin(), evens.end());
  std::set<std::pair<VertexId, VertexId>> adj;
  for (auto [u, v] : t.edges())
    if (es.count(u) && es.count(v)) adj.insert(std::minmax(u, v));
  // A path on k vertices has k-1 induced edges, endpoints of induced
  // degree 1 and interior of degree 2; check by trying every ordering of
  // the set and testing consecutive adjacency.
  std::vector<VertexId> order(evens);
  std::sort(order.begin(), order.end());
  do {
    bool ok = true;
    for (std::size_t i = 0; i + 1 < order.size() && ok; ++i)
      ok = adj.count(std::minmax(order[i], order[i + 1])) > 0;
    if (ok && adj.size() == order.size() - 1) {
      r.is_even_path = true;
      r.order = order;
      return r;
    }
  } while (std::next_permutation(order.begin(), order.end()));
  return r;
}

}  // namespace antimagic::testing
