#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "antimagic/tree.hpp"

namespace antimagic {

struct PreconditionViolated : std::runtime_error {
  EvenPathStatus status;
  explicit PreconditionViolated(EvenPathStatus st)
      : std::runtime_error(std::string("even-degree vertices do not induce "
                                       "a path of even order: ") +
                           EvenPathStatus::tag_name(st.tag)),
        status(std::move(st)) {}
};

struct InvariantViolated : std::logic_error {
  using std::logic_error::logic_error;
};

enum class CaseTag { P1, LeafEndpoint, SwapOnly, SwapAndExtend };

inline const char* case_name(CaseTag c) {
  switch (c) {
    case CaseTag::P1: return "P1";
    case CaseTag::LeafEndpoint: return "LeafEndpoint";
    case CaseTag::SwapOnly: return "SwapOnly";
    case CaseTag::SwapAndExtend: return "SwapAndExtend";
  }
  return "?";
}

/// The spine path P = (v_0 .. v_{2p+1}) around the even-degree vertices,
/// the case routing for the first labeling step, and (when the case
/// requires it) the extension path P' = (x_0 .. x_l) with its pendant
/// vertices y_0 .. y_{l-1}.
struct EvenPathDecomposition {
  int p = 0;
  std::vector<VertexId> path;       // v_0 .. v_{2p+1}
  std::vector<EdgeId> path_edges;   // e_1 .. e_{2p+1}, e_i = v_{i-1} v_i
  CaseTag case_tag = CaseTag::P1;
  int swap_count = 0;               // floor((p-1)/2) in the swap cases
  int conflict_index = -1;          // k: p-2 if p even, p-1 if p odd

  std::vector<VertexId> extension;        // x_0 .. x_l (x_0 == path.back())
  std::vector<VertexId> pendants;         // y_0 .. y_{l-1}
  std::vector<EdgeId> extension_edges;    // x_i x_{i+1}
  std::vector<EdgeId> pendant_edges;      // x_i y_i

  int ell() const {
    return extension.empty() ? 0 : static_cast<int>(extension.size()) - 1;
  }

  std::vector<EdgeId> t1_edges() const {
    std::vector<EdgeId> es = path_edges;
    es.insert(es.end(), extension_edges.begin(), extension_edges.end());
    es.insert(es.end(), pendant_edges.begin(), pendant_edges.end());
    return es;
  }

  /// V(T_1) in a fixed order: spine first, then x_1..x_l, then y_0..y_{l-1}.
  std::vector<VertexId> t1_vertices() const {
    std::vector<VertexId> vs = path;
    vs.insert(vs.end(), extension.begin() + (extension.empty() ? 0 : 1),
              extension.end());
    vs.insert(vs.end(), pendants.begin(), pendants.end());
    return vs;
  }
};

namespace detail {

// Among the neighbors of `anchor` other than `exclude`, prefer a leaf,
// then the smallest id.
inline VertexId pick_endpoint(const Tree& t, VertexId anchor,
                              VertexId exclude) {
  VertexId best = -1;
  bool best_leaf = false;
  for (const auto& a : t.neighbors(anchor)) {
    if (a.neighbor == exclude) continue;
    bool leaf = t.is_leaf(a.neighbor);
    if (best < 0 || (leaf && !best_leaf) ||
        (leaf == best_leaf && a.neighbor < best)) {
      best = a.neighbor;
      best_leaf = leaf;
    }
  }
  return best;
}

}  // namespace detail

/// Builds the path decomposition for a tree whose even-degree vertices
/// induce a path of even order 2p. Throws PreconditionViolated otherwise.
inline EvenPathDecomposition decompose(const Tree& t) {
  EvenPathStatus st = find_even_path(t);
  if (st.tag != EvenPathTag::EvenPathOfEvenOrder)
    throw PreconditionViolated(std::move(st));

  EvenPathDecomposition d;
  d.p = st.half_order();
  std::vector<VertexId> inner = std::move(st.path);  // v_1 .. v_{2p}

  const VertexId second = inner.size() > 1 ? inner[1] : -1;
  const VertexId second_last =
      inner.size() > 1 ? inner[inner.size() - 2] : -1;
  VertexId front = detail::pick_endpoint(t, inner.front(), second);
  VertexId back = detail::pick_endpoint(t, inner.back(), second_last);

  // A leaf endpoint must sit at v_0; reverse the orientation if only the
  // far end offers one.
  if (d.p > 1 && !t.is_leaf(front) && t.is_leaf(back)) {
    std::reverse(inner.begin(), inner.end());
    std::swap(front, back);
  }

  d.path.reserve(inner.size() + 2);
  d.path.push_back(front);
  d.path.insert(d.path.end(), inner.begin(), inner.end());
  d.path.push_back(back);
  d.path_edges.reserve(d.path.size() - 1);
  for (std::size_t i = 1; i < d.path.size(); ++i)
    d.path_edges.push_back(t.edge_between(d.path[i - 1], d.path[i]));

  if (d.p == 1) {
    d.case_tag = CaseTag::P1;
  } else if (t.is_leaf(front)) {
    d.case_tag = CaseTag::LeafEndpoint;
  } else {
    d.case_tag =
        d.p % 2 == 1 ? CaseTag::SwapOnly : CaseTag::SwapAndExtend;
    d.swap_count = (d.p - 1) / 2;
    d.conflict_index = d.p % 2 == 0 ? d.p - 2 : d.p - 1;
  }

  if (d.case_tag == CaseTag::SwapAndExtend) {
    // Maximal path of odd-degree vertices from x_0 = v_{2p+1}, stepping to
    // the smallest-id unused neighbor; y_i is the smallest-id neighbor of
    // x_i off the path. x_0 is not a leaf, so l >= 1.
    std::vector<char> on_path(t.vertex_count(), 0);
    for (VertexId v : d.path) on_path[v] = 1;
    d.extension.push_back(back);
    VertexId cur = back;
    while (!t.is_leaf(cur) || cur == back) {
      VertexId next = -1;
      for (const auto& a : t.neighbors(cur))
        if (!on_path[a.neighbor] && (next < 0 || a.neighbor < next))
          next = a.neighbor;
      if (next < 0) break;
      on_path[next] = 1;
      d.extension_edges.push_back(t.edge_between(cur, next));
      d.extension.push_back(next);
      cur = next;
    }
    // Pendants for x_0 .. x_{l-1}.
    for (std::size_t i = 0; i + 1 < d.extension.size(); ++i) {
      VertexId xi = d.extension[i];
      VertexId y = -1;
      for (const auto& a : t.neighbors(xi))
        if (!on_path[a.neighbor] && (y < 0 || a.neighbor < y)) y = a.neighbor;
      if (y < 0)
        throw InvariantViolated("extension vertex lacks a pendant neighbor");
      on_path[y] = 1;
      d.pendants.push_back(y);
      d.pendant_edges.push_back(t.edge_between(xi, y));
    }
  }
  return d;
}

/// Step I: labels the edges of T_1 (the spine, plus the extension and
/// pendant edges in the SwapAndExtend case). Returns the partial labeling
/// and the extension length l (0 outside SwapAndExtend). The label set
/// used is exactly [1, p+l+1] + [m-p-l+1, m].
inline std::pair<EdgeLabeling, int> label_step1(
    const Tree& t, const EvenPathDecomposition& d) {
  const int m = t.edge_count();
  const int p = d.p;
  EdgeLabeling phi(m);

  for (int i = 0; i <= p; ++i) phi[d.path_edges[2 * i]] = i + 1;
  for (int i = 1; i <= p; ++i) phi[d.path_edges[2 * i - 1]] = m - p + i;

  if (d.case_tag == CaseTag::SwapOnly ||
      d.case_tag == CaseTag::SwapAndExtend) {
    for (int i = 1; i <= d.swap_count; ++i) {
      phi[d.path_edges[2 * i - 2]] = m - p + i;  // e_{2i-1}
      phi[d.path_edges[2 * i - 1]] = i;          // e_{2i}
    }
  }

  int ell = 0;
  if (d.case_tag == CaseTag::SwapAndExtend) {
    ell = d.ell();
    phi[d.path_edges[2 * p]] = p + ell + 1;  // e_{2p+1}
    for (int i = 0; i < ell; ++i) {
      phi[d.extension_edges[i]] = p + i + 1;
      phi[d.pendant_edges[i]] = m - p - i;
    }
  }
  return {std::move(phi), ell};
}

/// Expected residue set of T_1 vertex sums modulo m+2, together with the
/// single permitted residue collision (the leaf of T listed second).
struct ResidueExpectation {
  std::vector<int> residues;  // sorted, duplicates removed
  std::optional<std::pair<VertexId, VertexId>> exception;
};

inline ResidueExpectation expected_residues(const EvenPathDecomposition& d,
                                            int m, int ell) {
  const int p = d.p;
  std::set<int> r;
  auto span = [&r](int lo, int hi) {
    for (int x = lo; x <= hi; ++x) r.insert(x);
  };
  ResidueExpectation out;
  switch (d.case_tag) {
    case CaseTag::P1:
      r = {0, 1, 2, m + 1};
      break;
    case CaseTag::LeafEndpoint:
      span(0, p + 1);
      r.erase(p);
      span(m - p + 2, m + 1);
      out.exception = {d.path[p + 2], d.path[0]};  // v_{p+2}, the leaf v_0
      break;
    case CaseTag::SwapOnly:
      span(0, p + 1);
      span(m - p + 1, m + 1);
      r.erase(m);
      break;
    case CaseTag::SwapAndExtend:
      span(0, p + ell);
      span(m - p - ell + 1, m + 1);
      r.erase(m - 1);
      out.exception = {d.extension.front(), d.extension.back()};  // x_0, x_l
      break;
  }
  out.residues.assign(r.begin(), r.end());
  return out;
}

/// Sibling edge pairs of the forest T_2 = T - E(T_1), each pair outgoing
/// from one vertex of a component rooted at its unique T_1 vertex.
struct PairSchedule {
  std::vector<std::pair<EdgeId, EdgeId>> pairs;
  int pair_count() const { return static_cast<int>(pairs.size()); }
};

struct OddChildren : InvariantViolated {
  VertexId vertex;
  explicit OddChildren(VertexId v)
      : InvariantViolated("vertex " + std::to_string(v) +
                          " has an odd number of children in T_2"),
        vertex(v) {}
};

inline PairSchedule build_pair_schedule(const Tree& t,
                                        const EvenPathDecomposition& d,
                                        const EdgeLabeling& partial) {
  std::vector<char> t1_edge(t.edge_count(), 0);
  for (EdgeId e = 0; e < t.edge_count(); ++e)
    if (partial[e] != 0) t1_edge[e] = 1;

  std::vector<char> visited(t.vertex_count(), 0);
  for (VertexId v : d.t1_vertices()) visited[v] = 1;

  PairSchedule sched;
  std::vector<VertexId> queue;  // BFS over each component, roots in T_1 order
  std::vector<std::pair<VertexId, EdgeId>> kids;
  for (VertexId root : d.t1_vertices()) {
    queue.assign(1, root);
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      VertexId v = queue[qi];
      kids.clear();
      for (const auto& a : t.neighbors(v))
        if (!t1_edge[a.edge] && !visited[a.neighbor])
          kids.emplace_back(a.neighbor, a.edge);
      if (kids.size() % 2 != 0) throw OddChildren(v);
      std::sort(kids.begin(), kids.end());
      for (std::size_t i = 0; i < kids.size(); i += 2)
        sched.pairs.emplace_back(kids[i].second, kids[i + 1].second);
      for (const auto& [w, e] : kids) {
        visited[w] = 1;
        queue.push_back(w);
      }
    }
  }
  return sched;
}

/// Step II: pair i (1-based) receives the complementary labels
/// p+l+2+(i-1) and m-p-l-(i-1); each pair sums to m+2.
inline EdgeLabeling label_step2(EdgeLabeling partial,
                                const PairSchedule& schedule, int p, int ell,
                                int m) {
  const int lo = p + ell + 2, hi = m - p - ell;
  const int interval = hi >= lo ? hi - lo + 1 : 0;
  if (2 * schedule.pair_count() != interval)
    throw InvariantViolated("pair schedule does not fill the label interval");
  for (int i = 1; i <= schedule.pair_count(); ++i) {
    auto [f1, f2] = schedule.pairs[i - 1];
    partial[f1] = lo + (i - 1);
    partial[f2] = hi - (i - 1);
  }
  return partial;
}

#ifdef NDEBUG
inline constexpr bool kDefaultInvariantChecks = false;
#else
inline constexpr bool kDefaultInvariantChecks = true;
#endif

/// Full construction: decompose, label T_1, then label T_2 in
/// complementary pairs. Linear in the edge count. With `check` set,
/// re-verifies the bijection before returning.
inline EdgeLabeling label(const Tree& t,
                          bool check = kDefaultInvariantChecks) {
  EvenPathDecomposition d = decompose(t);
  auto [partial, ell] = label_step1(t, d);
  PairSchedule sched = build_pair_schedule(t, d, partial);
  EdgeLabeling phi =
      label_step2(std::move(partial), sched, d.p, ell, t.edge_count());
  if (check) {
    std::vector<char> seen(t.edge_count() + 1, 0);
    for (EdgeId e = 0; e < t.edge_count(); ++e) {
      int x = phi[e];
      if (x < 1 || x > t.edge_count() || seen[x])
        throw InvariantViolated("labeling is not a bijection onto [1,m]");
      seen[x] = 1;
    }
  }
  return phi;
}

}  // namespace antimagic
