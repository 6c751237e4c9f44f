#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "antimagic/tree.hpp"

namespace antimagic {

inline constexpr std::uint64_t kDefaultOracleBudget = 100'000'000;

enum class OracleOutcome { Found, NoneExists, Timeout };

struct OracleResult {
  OracleOutcome outcome = OracleOutcome::Timeout;
  std::optional<EdgeLabeling> labeling;
  std::uint64_t nodes_explored = 0;

  static const char* outcome_name(OracleOutcome o) {
    switch (o) {
      case OracleOutcome::Found: return "Found";
      case OracleOutcome::NoneExists: return "NoneExists";
      case OracleOutcome::Timeout: return "Timeout";
    }
    return "?";
  }
};

namespace detail {

struct OracleSearch {
  const Tree& t;
  int m;
  std::uint64_t budget;
  std::uint64_t nodes = 0;
  bool timeout = false;
  std::vector<int> label;          // by edge id, 0 = unassigned
  std::uint64_t used = 0;          // bitmask over labels 1..m
  std::vector<int> remaining;      // unlabeled incident edges per vertex
  std::vector<std::int64_t> sum;   // partial vertex sums
  std::vector<std::int64_t> done;  // sums of fully labeled vertices

  OracleSearch(const Tree& tree, std::uint64_t b)
      : t(tree),
        m(tree.edge_count()),
        budget(b),
        label(m, 0),
        remaining(tree.vertex_count()),
        sum(tree.vertex_count(), 0) {
    for (VertexId v = 0; v < tree.vertex_count(); ++v)
      remaining[v] = tree.degree(v);
  }

  // Next edge to label: the one completing the most endpoints, ties by id.
  EdgeId pick_edge() const {
    EdgeId best = -1;
    int best_score = -1;
    for (EdgeId e = 0; e < m; ++e) {
      if (label[e] != 0) continue;
      auto [u, v] = t.edge(e);
      int score = (remaining[u] == 1) + (remaining[v] == 1);
      if (score > best_score) {
        best_score = score;
        best = e;
      }
    }
    return best;
  }

  bool complete_ok(VertexId v) {
    for (std::int64_t s : done)
      if (s == sum[v]) return false;
    done.push_back(sum[v]);
    return true;
  }

  bool dfs(int assigned) {
    if (assigned == m) return true;
    const EdgeId e = pick_edge();
    auto [u, v] = t.edge(e);
    for (int lab = 1; lab <= m; ++lab) {
      if (used & (1ull << lab)) continue;
      if (++nodes > budget) {
        timeout = true;
        return false;
      }
      label[e] = lab;
      used |= 1ull << lab;
      sum[u] += lab;
      sum[v] += lab;
      --remaining[u];
      --remaining[v];

      int pushed = 0;
      bool ok = true;
      if (remaining[u] == 0) {
        ok = complete_ok(u);
        pushed += ok;
      }
      if (ok && remaining[v] == 0) {
        ok = complete_ok(v);
        pushed += ok;
      }
      if (ok && dfs(assigned + 1)) return true;

      done.resize(done.size() - pushed);
      ++remaining[u];
      ++remaining[v];
      sum[u] -= lab;
      sum[v] -= lab;
      used &= ~(1ull << lab);
      label[e] = 0;
      if (timeout) return false;
    }
    return false;
  }
};

}  // namespace detail

/// Exhaustive backtracking search for an antimagic labeling. A partial
/// assignment is pruned as soon as two fully labeled vertices share a sum.
/// Practical up to m ~ 12.
inline OracleResult search_antimagic(
    const Tree& t, std::uint64_t budget = kDefaultOracleBudget) {
  if (t.edge_count() > 63)
    throw std::invalid_argument("oracle search limited to m <= 63");
  detail::OracleSearch s(t, budget);
  OracleResult r;
  if (s.dfs(0)) {
    r.outcome = OracleOutcome::Found;
    EdgeLabeling phi(t.edge_count());
    for (EdgeId e = 0; e < t.edge_count(); ++e) phi[e] = s.label[e];
    r.labeling = std::move(phi);
  } else {
    r.outcome = s.timeout ? OracleOutcome::Timeout : OracleOutcome::NoneExists;
  }
  r.nodes_explored = s.nodes;
  return r;
}

// ---------------------------------------------------------------------------
// Pruefer sequences

/// Decodes a Pruefer sequence of length n-2 over [0, n-1] into the
/// corresponding labeled tree on n = seq.size() + 2 vertices.
inline Tree pruefer_decode(const std::vector<int>& seq) {
  const int n = static_cast<int>(seq.size()) + 2;
  std::vector<int> deg(n, 1);
  for (int x : seq) ++deg[x];

  std::vector<std::pair<VertexId, VertexId>> edges;
  edges.reserve(n - 1);
  int ptr = 0;
  while (deg[ptr] != 1) ++ptr;
  int leaf = ptr;
  for (int x : seq) {
    edges.emplace_back(leaf, x);
    if (--deg[x] == 1 && x < ptr) {
      leaf = x;
    } else {
      ++ptr;
      while (deg[ptr] != 1) ++ptr;
      leaf = ptr;
    }
  }
  edges.emplace_back(leaf, n - 1);
  return Tree::from_edges(std::move(edges));
}

/// Inverse of pruefer_decode: repeatedly removes the smallest leaf and
/// records its neighbor.
inline std::vector<int> pruefer_encode(const Tree& t) {
  const int n = t.vertex_count();
  std::vector<int> deg(n);
  std::vector<char> removed(n, 0);
  for (VertexId v = 0; v < n; ++v) deg[v] = t.degree(v);
  std::vector<int> seq;
  seq.reserve(n - 2);
  int ptr = 0;
  while (deg[ptr] != 1) ++ptr;
  int leaf = ptr;
  for (int step = 0; step < n - 2; ++step) {
    removed[leaf] = 1;
    VertexId parent = -1;
    for (const auto& a : t.neighbors(leaf))
      if (!removed[a.neighbor]) parent = a.neighbor;
    seq.push_back(parent);
    if (--deg[parent] == 1 && parent < ptr) {
      leaf = parent;
    } else {
      ++ptr;
      while (deg[ptr] != 1 || removed[ptr]) ++ptr;
      leaf = ptr;
    }
  }
  return seq;
}

/// Visits every labeled tree on n vertices exactly once (n^{n-2} of them)
/// by running an odometer over all Pruefer sequences.
template <class Visit>
inline void trees_from_pruefer(int n, Visit&& visit) {
  if (n < 2) return;
  std::vector<int> seq(n - 2, 0);
  while (true) {
    visit(pruefer_decode(seq));
    int i = static_cast<int>(seq.size()) - 1;
    while (i >= 0 && seq[i] == n - 1) seq[i--] = 0;
    if (i < 0) break;
    ++seq[i];
  }
}

/// Uniform random labeled tree from a seeded generator; same seed, same tree.
inline Tree sample_tree(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<int> seq(n >= 2 ? n - 2 : 0);
  std::uniform_int_distribution<int> pick(0, n - 1);
  for (int& x : seq) x = pick(rng);
  return pruefer_decode(seq);
}

}  // namespace antimagic
