#pragma once

#include <cstdint>
#include <queue>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

namespace antimagic {

using VertexId = int;
using EdgeId = int;

struct ParseError : std::runtime_error {
  enum class Kind {
    MalformedLine,
    SelfLoop,
    DuplicateEdge,
    CycleDetected,
    Disconnected,
    Empty,
  };
  Kind kind;
  int line;  // 1-based; 0 when not tied to a specific line

  ParseError(Kind k, int ln, const std::string& msg)
      : std::runtime_error(msg), kind(k), line(ln) {}
};

struct Adjacent {
  VertexId neighbor;
  EdgeId edge;
};

/// Bijection (when complete) from edge ids to labels in [1, m].
/// Zero marks an unlabeled edge.
struct EdgeLabeling {
  std::vector<int> labels;

  explicit EdgeLabeling(int edge_count = 0) : labels(edge_count, 0) {}

  int operator[](EdgeId e) const { return labels[e]; }
  int& operator[](EdgeId e) { return labels[e]; }
  int size() const { return static_cast<int>(labels.size()); }

  bool is_total() const {
    for (int x : labels)
      if (x == 0) return false;
    return true;
  }
};

/// Simple connected acyclic graph over vertex ids 0..n-1, immutable after
/// construction. Edge ids follow the order the edges were given.
class Tree {
 public:
  static Tree from_edges(std::vector<std::pair<VertexId, VertexId>> edges) {
    Tree t;
    if (edges.empty())
      throw ParseError(ParseError::Kind::Empty, 0, "tree has no edges");

    VertexId max_id = 0;
    for (auto [u, v] : edges) {
      if (u < 0 || v < 0)
        throw ParseError(ParseError::Kind::MalformedLine, 0,
                         "negative vertex id");
      max_id = std::max({max_id, u, v});
    }
    t.n_ = max_id + 1;

    std::unordered_set<std::uint64_t> seen;
    seen.reserve(edges.size() * 2);
    for (auto [u, v] : edges) {
      if (u == v)
        throw ParseError(ParseError::Kind::SelfLoop, 0, "self loop");
      const std::uint64_t key =
          (static_cast<std::uint64_t>(std::min(u, v)) << 32) |
          static_cast<std::uint32_t>(std::max(u, v));
      if (!seen.insert(key).second)
        throw ParseError(ParseError::Kind::DuplicateEdge, 0,
                         "duplicate edge");
    }

    const int m = static_cast<int>(edges.size());
    if (m >= t.n_)
      throw ParseError(ParseError::Kind::CycleDetected, 0,
                       "edge count implies a cycle");
    if (m < t.n_ - 1)
      throw ParseError(ParseError::Kind::Disconnected, 0,
                       "edge count below n-1");

    t.edges_ = std::move(edges);
    t.adj_.assign(t.n_, {});
    for (EdgeId e = 0; e < m; ++e) {
      auto [u, v] = t.edges_[e];
      t.adj_[u].push_back({v, e});
      t.adj_[v].push_back({u, e});
    }

    // m == n-1, so connected iff acyclic; one BFS settles both.
    std::vector<char> visited(t.n_, 0);
    std::vector<VertexId> stack{0};
    visited[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
      VertexId v = stack.back();
      stack.pop_back();
      for (const auto& a : t.adj_[v]) {
        if (!visited[a.neighbor]) {
          visited[a.neighbor] = 1;
          ++reached;
          stack.push_back(a.neighbor);
        }
      }
    }
    if (reached != t.n_)
      throw ParseError(ParseError::Kind::Disconnected, 0,
                       "graph is not connected");
    return t;
  }

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  std::pair<VertexId, VertexId> edge(EdgeId e) const { return edges_[e]; }
  const std::vector<std::pair<VertexId, VertexId>>& edges() const {
    return edges_;
  }
  const std::vector<Adjacent>& neighbors(VertexId v) const { return adj_[v]; }
  int degree(VertexId v) const { return static_cast<int>(adj_[v].size()); }
  bool is_leaf(VertexId v) const { return adj_[v].size() == 1; }

  /// Edge id of {u, v}; throws if not adjacent.
  EdgeId edge_between(VertexId u, VertexId v) const {
    if (degree(u) > degree(v)) std::swap(u, v);
    for (const auto& a : adj_[u])
      if (a.neighbor == v) return a.edge;
    throw std::logic_error("edge_between: vertices not adjacent");
  }

 private:
  Tree() = default;
  int n_ = 0;
  std::vector<std::pair<VertexId, VertexId>> edges_;
  std::vector<std::vector<Adjacent>> adj_;
};

namespace detail {

inline bool parse_int(const std::string& tok, long& out) {
  if (tok.empty()) return false;
  std::size_t pos = 0;
  try {
    out = std::stol(tok, &pos);
  } catch (...) {
    return false;
  }
  return pos == tok.size();
}

}  // namespace detail

/// Parses an edge-list document: one "u v" pair per line, '#' comments,
/// blank lines ignored. An optional third integer per line is a label
/// (collected into *labels_out when given).
inline Tree parse_tree_impl(const std::string& text,
                            std::vector<int>* labels_out) {
  std::vector<std::pair<VertexId, VertexId>> edges;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos)
      line.erase(hash);
    std::istringstream ls(line);
    std::vector<std::string> toks;
    std::string tok;
    while (ls >> tok) toks.push_back(tok);
    if (toks.empty()) continue;
    if (toks.size() != 2 && !(labels_out && toks.size() == 3))
      throw ParseError(ParseError::Kind::MalformedLine, lineno,
                       "expected 'u v' on line " + std::to_string(lineno));
    long u, v;
    if (!detail::parse_int(toks[0], u) || !detail::parse_int(toks[1], v) ||
        u < 0 || v < 0)
      throw ParseError(ParseError::Kind::MalformedLine, lineno,
                       "bad vertex id on line " + std::to_string(lineno));
    edges.emplace_back(static_cast<VertexId>(u), static_cast<VertexId>(v));
    if (labels_out) {
      long lab = 0;
      if (toks.size() == 3 && (!detail::parse_int(toks[2], lab) || lab <= 0))
        throw ParseError(ParseError::Kind::MalformedLine, lineno,
                         "bad label on line " + std::to_string(lineno));
      labels_out->push_back(static_cast<int>(lab));
    }
  }
  try {
    return Tree::from_edges(std::move(edges));
  } catch (ParseError& e) {
    throw;
  }
}

inline Tree parse_tree(const std::string& text) {
  return parse_tree_impl(text, nullptr);
}

/// Edge list whose lines may carry a third column with the edge label.
inline std::pair<Tree, EdgeLabeling> parse_labeled_tree(
    const std::string& text) {
  std::vector<int> labels;
  Tree t = parse_tree_impl(text, &labels);
  EdgeLabeling phi(t.edge_count());
  for (EdgeId e = 0; e < t.edge_count(); ++e) phi[e] = labels[e];
  return {std::move(t), std::move(phi)};
}

// ---------------------------------------------------------------------------
// Even-degree path detection

enum class EvenPathTag { EmptyEven, OddCount, EvenPathOfEvenOrder, NotAPath };
enum class NotAPathReason { Disconnected, BranchingVertex };

struct EvenPathStatus {
  EvenPathTag tag;
  int even_count = 0;
  std::vector<VertexId> path;  // set iff tag == EvenPathOfEvenOrder
  NotAPathReason reason = NotAPathReason::Disconnected;

  int half_order() const { return static_cast<int>(path.size()) / 2; }

  static const char* tag_name(EvenPathTag t) {
    switch (t) {
      case EvenPathTag::EmptyEven: return "EmptyEven";
      case EvenPathTag::OddCount: return "OddCount";
      case EvenPathTag::EvenPathOfEvenOrder: return "EvenPathOfEvenOrder";
      case EvenPathTag::NotAPath: return "NotAPath";
    }
    return "?";
  }
};

/// Classifies the set of even-degree vertices. When they induce a path of
/// even order, the returned ordering starts at the endpoint with the
/// smaller id.
inline EvenPathStatus find_even_path(const Tree& t) {
  const int n = t.vertex_count();
  std::vector<char> even(n, 0);
  std::vector<VertexId> evens;
  for (VertexId v = 0; v < n; ++v) {
    if (t.degree(v) % 2 == 0) {
      even[v] = 1;
      evens.push_back(v);
    }
  }

  EvenPathStatus st;
  st.even_count = static_cast<int>(evens.size());
  if (evens.empty()) {
    st.tag = EvenPathTag::EmptyEven;
    return st;
  }
  if (evens.size() % 2 == 1) {
    st.tag = EvenPathTag::OddCount;
    return st;
  }

  // Degree of each even vertex inside the induced subgraph.
  VertexId lo_end = -1, hi_end = -1;
  int endpoint_count = 0;
  for (VertexId v : evens) {
    int d = 0;
    for (const auto& a : t.neighbors(v)) d += even[a.neighbor];
    if (d > 2) {
      st.tag = EvenPathTag::NotAPath;
      st.reason = NotAPathReason::BranchingVertex;
      return st;
    }
    if (d <= 1) {  // d==0 only when the induced graph is disconnected
      if (d == 0 && evens.size() > 1) {
        st.tag = EvenPathTag::NotAPath;
        st.reason = NotAPathReason::Disconnected;
        return st;
      }
      ++endpoint_count;
      if (lo_end < 0 || v < lo_end) lo_end = v;
      hi_end = v;
    }
  }
  if (endpoint_count != 2) {
    st.tag = EvenPathTag::NotAPath;
    st.reason = NotAPathReason::Disconnected;
    return st;
  }

  // Walk the induced path from the smaller-id endpoint.
  std::vector<VertexId> seq;
  seq.reserve(evens.size());
  VertexId prev = -1, cur = lo_end;
  while (true) {
    seq.push_back(cur);
    VertexId next = -1;
    for (const auto& a : t.neighbors(cur)) {
      if (even[a.neighbor] && a.neighbor != prev) {
        next = a.neighbor;
        break;
      }
    }
    if (next < 0) break;
    prev = cur;
    cur = next;
  }
  if (seq.size() != evens.size()) {
    st.tag = EvenPathTag::NotAPath;
    st.reason = NotAPathReason::Disconnected;
    return st;
  }
  st.tag = EvenPathTag::EvenPathOfEvenOrder;
  st.path = std::move(seq);
  return st;
}

}  // namespace antimagic
