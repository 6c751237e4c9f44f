#pragma once

#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "antimagic/tree.hpp"
#include "antimagic/verifier.hpp"

namespace antimagic {

enum class OutputFormat { EdgeList, Structured, Dot };

struct LabelingMismatch : std::runtime_error {
  LabelingMismatch()
      : std::runtime_error("labeling does not match the tree's edge set") {}
};

inline OutputFormat parse_format(const std::string& name) {
  if (name == "edge-list") return OutputFormat::EdgeList;
  if (name == "structured") return OutputFormat::Structured;
  if (name == "dot") return OutputFormat::Dot;
  throw std::invalid_argument("unknown format: " + name);
}

/// Structured machine-readable document for a tree and (optionally) a
/// labeling: {n, edges:[[u,v,label]], sums:[[v,s]], modulus, residues}.
inline nlohmann::json structured_document(
    const Tree& t, const std::optional<EdgeLabeling>& phi) {
  nlohmann::json doc;
  doc["n"] = t.vertex_count();
  auto edges = nlohmann::json::array();
  for (EdgeId e = 0; e < t.edge_count(); ++e) {
    auto [u, v] = t.edge(e);
    if (phi)
      edges.push_back({u, v, (*phi)[e]});
    else
      edges.push_back({u, v});
  }
  doc["edges"] = std::move(edges);
  if (phi) {
    SumReport rep = vertex_sums(t, *phi);
    auto sums = nlohmann::json::array();
    auto residues = nlohmann::json::array();
    for (VertexId v = 0; v < t.vertex_count(); ++v) {
      sums.push_back({v, rep.sums[v]});
      residues.push_back({v, rep.residues[v]});
    }
    doc["sums"] = std::move(sums);
    doc["modulus"] = rep.modulus;
    doc["residues"] = std::move(residues);
  }
  return doc;
}

inline std::string serialize(const Tree& t,
                             const std::optional<EdgeLabeling>& phi,
                             OutputFormat format) {
  if (phi && (phi->size() != t.edge_count() || !phi->is_total()))
    throw LabelingMismatch();
  std::ostringstream out;
  switch (format) {
    case OutputFormat::EdgeList:
      for (EdgeId e = 0; e < t.edge_count(); ++e) {
        auto [u, v] = t.edge(e);
        out << u << ' ' << v;
        if (phi) out << ' ' << (*phi)[e];
        out << '\n';
      }
      break;
    case OutputFormat::Structured:
      out << structured_document(t, phi).dump(2) << '\n';
      break;
    case OutputFormat::Dot: {
      out << "graph {\n";
      if (phi) {
        SumReport rep = vertex_sums(t, *phi);
        for (VertexId v = 0; v < t.vertex_count(); ++v)
          out << "  " << v << " [label=\"" << v << "\\ns=" << rep.sums[v]
              << "\"];\n";
      }
      for (EdgeId e = 0; e < t.edge_count(); ++e) {
        auto [u, v] = t.edge(e);
        out << "  " << u << " -- " << v;
        if (phi) out << " [label=\"" << (*phi)[e] << "\"]";
        out << ";\n";
      }
      out << "}\n";
      break;
    }
  }
  return out.str();
}

}  // namespace antimagic
