#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "antimagic/labeler.hpp"
#include "antimagic/tree.hpp"

namespace antimagic {

struct IncompleteLabeling : std::runtime_error {
  IncompleteLabeling() : std::runtime_error("labeling does not cover E(T)") {}
};

inline constexpr int kCollisionReportCap = 100;

struct SumReport {
  std::vector<std::int64_t> sums;  // by vertex id
  int modulus = 0;                 // m + 2
  std::vector<int> residues;       // by vertex id
  std::vector<std::pair<VertexId, VertexId>> collisions;
  std::vector<std::pair<VertexId, VertexId>> residue_collisions;
  bool truncated = false;  // a collision list hit the report cap
};

namespace detail {

// All pairs (capped) of indices sharing a key, keys obtained via `key(v)`.
template <class Key>
inline void collect_collisions(int n, Key&& key,
                               std::vector<std::pair<VertexId, VertexId>>& out,
                               bool& truncated) {
  std::vector<VertexId> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(),
            [&](VertexId a, VertexId b) { return key(a) < key(b); });
  for (int i = 0; i + 1 < n; ++i) {
    for (int j = i + 1; j < n && key(idx[j]) == key(idx[i]); ++j) {
      if (static_cast<int>(out.size()) >= kCollisionReportCap) {
        truncated = true;
        return;
      }
      out.emplace_back(std::min(idx[i], idx[j]), std::max(idx[i], idx[j]));
    }
  }
}

}  // namespace detail

inline SumReport vertex_sums(const Tree& t, const EdgeLabeling& phi) {
  if (phi.size() != t.edge_count() || !phi.is_total())
    throw IncompleteLabeling();
  const int n = t.vertex_count();
  SumReport r;
  r.sums.assign(n, 0);
  for (EdgeId e = 0; e < t.edge_count(); ++e) {
    auto [u, v] = t.edge(e);
    r.sums[u] += phi[e];
    r.sums[v] += phi[e];
  }
  r.modulus = t.edge_count() + 2;
  r.residues.resize(n);
  for (VertexId v = 0; v < n; ++v)
    r.residues[v] = static_cast<int>(r.sums[v] % r.modulus);
  detail::collect_collisions(
      n, [&](VertexId v) { return r.sums[v]; }, r.collisions, r.truncated);
  detail::collect_collisions(
      n, [&](VertexId v) { return r.residues[v]; }, r.residue_collisions,
      r.truncated);
  return r;
}

struct AntimagicCheck {
  bool ok = false;
  std::string reason;  // empty when ok
  std::optional<std::pair<VertexId, VertexId>> collision;
};

/// True iff phi is a bijection onto [1, m] with pairwise distinct vertex
/// sums. Failures are results, not errors.
inline AntimagicCheck is_antimagic(const Tree& t, const EdgeLabeling& phi) {
  AntimagicCheck c;
  const int m = t.edge_count();
  if (phi.size() != m) {
    c.reason = "labeling covers " + std::to_string(phi.size()) +
               " edges, tree has " + std::to_string(m);
    return c;
  }
  std::vector<char> seen(m + 1, 0);
  for (EdgeId e = 0; e < m; ++e) {
    int x = phi[e];
    if (x < 1 || x > m || seen[x]) {
      c.reason = "not a bijection onto [1,m]: label " + std::to_string(x) +
                 " on edge " + std::to_string(e);
      return c;
    }
    seen[x] = 1;
  }
  std::vector<std::int64_t> sums(t.vertex_count(), 0);
  for (EdgeId e = 0; e < m; ++e) {
    auto [u, v] = t.edge(e);
    sums[u] += phi[e];
    sums[v] += phi[e];
  }
  std::vector<VertexId> idx(t.vertex_count());
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(),
            [&](VertexId a, VertexId b) { return sums[a] < sums[b]; });
  for (std::size_t i = 0; i + 1 < idx.size(); ++i) {
    if (sums[idx[i]] == sums[idx[i + 1]]) {
      c.collision = {std::min(idx[i], idx[i + 1]),
                     std::max(idx[i], idx[i + 1])};
      c.reason = "equal vertex sums";
      return c;
    }
  }
  c.ok = true;
  return c;
}

/// Residue diagnostics for a labeling produced by the two-step
/// construction: T_1 residues against the per-case expectation, the
/// incoming-edge congruence for vertices outside T_1, and disjointness of
/// the T_1 residue set from the T_2 label interval.
struct ResidueAuditReport {
  bool ok = true;
  std::vector<std::string> deviations;
  std::vector<int> expected_t1;  // sorted residue set
  std::vector<int> actual_t1;    // sorted, duplicates removed
  std::pair<int, int> t2_interval{1, 0};  // empty when first > second
  std::optional<std::pair<VertexId, VertexId>> exception;
};

inline ResidueAuditReport residue_audit(const Tree& t,
                                        const EvenPathDecomposition& d,
                                        const EdgeLabeling& phi, int ell) {
  const int m = t.edge_count();
  const int mod = m + 2;
  ResidueAuditReport rep;
  auto deviate = [&rep](std::string msg) {
    rep.ok = false;
    rep.deviations.push_back(std::move(msg));
  };

  const auto t1_edges = d.t1_edges();
  const auto t1_verts = d.t1_vertices();
  std::vector<char> in_t1_vertex(t.vertex_count(), 0);
  std::vector<char> in_t1_edge(m, 0);
  for (VertexId v : t1_verts) in_t1_vertex[v] = 1;
  for (EdgeId e : t1_edges) in_t1_edge[e] = 1;

  std::vector<std::int64_t> full(t.vertex_count(), 0), t1(t.vertex_count(), 0);
  for (EdgeId e = 0; e < m; ++e) {
    auto [u, v] = t.edge(e);
    full[u] += phi[e];
    full[v] += phi[e];
    if (in_t1_edge[e]) {
      t1[u] += phi[e];
      t1[v] += phi[e];
    }
  }

  // (i) T_1 residue set matches the case formula; at most the declared
  // exception pair collides, the T-leaf member with the smaller T_1 sum.
  ResidueExpectation exp = expected_residues(d, m, ell);
  rep.expected_t1 = exp.residues;
  rep.exception = exp.exception;
  std::vector<std::pair<int, VertexId>> by_res;
  for (VertexId v : t1_verts)
    by_res.emplace_back(static_cast<int>(t1[v] % mod), v);
  std::sort(by_res.begin(), by_res.end());
  for (const auto& [r, v] : by_res)
    if (rep.actual_t1.empty() || rep.actual_t1.back() != r)
      rep.actual_t1.push_back(r);
  if (rep.actual_t1 != rep.expected_t1)
    deviate("T_1 residue set differs from the case formula");
  std::vector<std::pair<VertexId, VertexId>> dup;
  for (std::size_t i = 0; i + 1 < by_res.size(); ++i)
    if (by_res[i].first == by_res[i + 1].first)
      dup.emplace_back(by_res[i].second, by_res[i + 1].second);
  if (!exp.exception) {
    if (!dup.empty())
      deviate("unexpected T_1 residue collision at vertex " +
              std::to_string(dup.front().first));
  } else {
    auto [a, b] = *exp.exception;  // b is the T-leaf
    if (dup.size() != 1 ||
        std::minmax(dup[0].first, dup[0].second) != std::minmax(a, b)) {
      deviate("T_1 residue collision differs from the declared exception");
    } else {
      if (!t.is_leaf(b))
        deviate("exception vertex " + std::to_string(b) +
                " is not a leaf of T");
      if (!(t1[b] < t1[a]))
        deviate("exception leaf sum is not strictly smaller");
    }
  }

  // (ii) every vertex outside T_1 is congruent to its incoming edge label.
  // Root the T_2 components at their T_1 vertices and walk outward.
  {
    std::vector<char> visited(t.vertex_count(), 0);
    for (VertexId v : t1_verts) visited[v] = 1;
    std::vector<VertexId> stack;
    for (VertexId root : t1_verts) {
      stack.assign(1, root);
      while (!stack.empty()) {
        VertexId v = stack.back();
        stack.pop_back();
        for (const auto& a : t.neighbors(v)) {
          if (in_t1_edge[a.edge] || visited[a.neighbor]) continue;
          visited[a.neighbor] = 1;
          if (full[a.neighbor] % mod != phi[a.edge] % mod)
            deviate("vertex " + std::to_string(a.neighbor) +
                    " not congruent to its incoming edge label");
          stack.push_back(a.neighbor);
        }
      }
    }
  }

  // Condition 1: full sums of T_1 vertices keep their T_1 residues.
  for (VertexId v : t1_verts)
    if (full[v] % mod != t1[v] % mod)
      deviate("T_1 vertex " + std::to_string(v) +
              " changed residue in the full labeling");

  // (iii) disjointness of R_{m+2}(T_1) from the T_2 interval.
  const int lo = d.p + ell + 2, hi = m - d.p - ell;
  rep.t2_interval = {lo, hi};
  for (int r : rep.actual_t1)
    if (r >= lo && r <= hi)
      deviate("T_1 residue " + std::to_string(r) +
              " lies inside the T_2 label interval");

  return rep;
}

}  // namespace antimagic
