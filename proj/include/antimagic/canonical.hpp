#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "antimagic/tree.hpp"

namespace antimagic {

namespace detail {

/// AHU encoding of the tree rooted at `root`: children encodings are
/// sorted and concatenated inside parentheses. Iterative post-order.
inline std::string ahu_encode(const Tree& t, VertexId root) {
  const int n = t.vertex_count();
  std::vector<VertexId> parent(n, -1), order;
  order.reserve(n);
  std::vector<VertexId> stack{root};
  parent[root] = root;
  while (!stack.empty()) {
    VertexId v = stack.back();
    stack.pop_back();
    order.push_back(v);
    for (const auto& a : t.neighbors(v)) {
      if (parent[a.neighbor] < 0) {
        parent[a.neighbor] = v;
        stack.push_back(a.neighbor);
      }
    }
  }
  std::vector<std::vector<std::string>> kids(n);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    VertexId v = *it;
    auto& ks = kids[v];
    std::sort(ks.begin(), ks.end());
    std::string enc = "(";
    for (const auto& k : ks) enc += k;
    enc += ")";
    if (v == root) return enc;
    kids[parent[v]].push_back(std::move(enc));
  }
  return "()";  // unreachable for a valid tree
}

/// The one or two middle vertices of the tree (leaf peeling).
inline std::vector<VertexId> centers(const Tree& t) {
  const int n = t.vertex_count();
  if (n == 1) return {0};
  std::vector<int> deg(n);
  std::vector<VertexId> layer;
  for (VertexId v = 0; v < n; ++v) {
    deg[v] = t.degree(v);
    if (deg[v] == 1) layer.push_back(v);
  }
  int remaining = n;
  while (remaining > 2) {
    std::vector<VertexId> next;
    remaining -= static_cast<int>(layer.size());
    for (VertexId v : layer)
      for (const auto& a : t.neighbors(v))
        if (--deg[a.neighbor] == 1) next.push_back(a.neighbor);
    layer = std::move(next);
  }
  return layer;
}

}  // namespace detail

/// Canonical string for the free tree: encode at the center, and for a
/// bicentral tree take the lexicographically smaller of the two centered
/// encodings. Equal strings iff the trees are isomorphic.
inline std::string canonical_form(const Tree& t) {
  auto cs = detail::centers(t);
  std::string best = detail::ahu_encode(t, cs[0]);
  if (cs.size() == 2) {
    std::string other = detail::ahu_encode(t, cs[1]);
    if (other < best) best = std::move(other);
  }
  return best;
}

}  // namespace antimagic
