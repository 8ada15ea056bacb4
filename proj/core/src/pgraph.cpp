#include "ncinvert/pgraph.hpp"

#include <algorithm>
#include <cstddef>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "ncinvert/parking.hpp"

namespace ncinvert {

namespace {

void place_parts(const Composition& comp, std::size_t next_part, std::size_t next_slot,
                 GenComposition& slots, std::vector<GenComposition>& out) {
  if (next_part == comp.size()) {
    if (is_parking_type(slots)) out.push_back(slots);
    return;
  }
  const std::size_t remaining = comp.size() - next_part;
  for (std::size_t slot = next_slot; slot + remaining <= slots.size(); ++slot) {
    slots[slot] = comp[next_part];
    place_parts(comp, next_part + 1, slot + 1, slots, out);
    slots[slot] = 0;
  }
}

}  // namespace

GammaGraph build_gamma(const Composition& comp, int weight_cap) {
  if (!is_composition(comp)) throw std::invalid_argument("build_gamma: not a composition");
  const long n = weight(comp);
  if (n > weight_cap)
    throw CapExceeded("build_gamma: weight " + std::to_string(n) + " exceeds cap " +
                      std::to_string(weight_cap));
  GammaGraph graph;
  graph.comp = comp;
  graph.weight = static_cast<int>(n);

  GenComposition slots(static_cast<std::size_t>(n) + 1, 0);
  place_parts(comp, 0, 0, slots, graph.vertices);
  std::sort(graph.vertices.begin(), graph.vertices.end());

  const std::set<GenComposition> vertex_set(graph.vertices.begin(), graph.vertices.end());
  for (const GenComposition& v : graph.vertices) {
    for (std::size_t i = 0; i + 1 < v.size(); ++i) {
      if (v[i] == 0 || v[i + 1] != 0) continue;
      GenComposition w = v;
      std::swap(w[i], w[i + 1]);
      if (vertex_set.count(w)) {
        graph.edges.push_back(GammaEdge{v, w, static_cast<int>(i) + 1});
      }
    }
  }
  std::sort(graph.edges.begin(), graph.edges.end());
  return graph;
}

GenComposition expected_source(const Composition& comp) {
  if (!is_composition(comp)) throw std::invalid_argument("expected_source: not a composition");
  const long n = weight(comp);
  GenComposition out(comp.begin(), comp.end());
  out.resize(static_cast<std::size_t>(n) + 1, 0);
  return out;
}

GenComposition expected_sink(const Composition& comp) {
  if (!is_composition(comp)) throw std::invalid_argument("expected_sink: not a composition");
  GenComposition out;
  for (int part : comp) {
    out.push_back(part);
    for (int i = 1; i < part; ++i) out.push_back(0);
  }
  out.push_back(0);
  return out;
}

GenComposition iota(const GenComposition& vertex) {
  if (!is_parking_type(vertex)) throw std::invalid_argument("iota: not a parking-type vector");
  Composition comp;
  for (int part : vertex) {
    if (part != 0) comp.push_back(part);
  }
  const Composition conj = conjugate(comp);
  GenComposition out(vertex.size(), 0);
  std::size_t next = 0;
  for (std::size_t i = 0; i < vertex.size(); ++i) {
    const int reversed_entry = vertex[vertex.size() - 1 - i];
    if (reversed_entry == 0) {
      if (next >= conj.size()) throw std::logic_error("iota: conjugate part count mismatch");
      out[i] = conj[next++];
    }
  }
  if (next != conj.size()) throw std::logic_error("iota: conjugate part count mismatch");
  return out;
}

IsoCertificate conjugacy_isomorphism(const Composition& comp, int weight_cap) {
  IsoCertificate cert;
  const GammaGraph graph = build_gamma(comp, weight_cap);
  const GammaGraph image = build_gamma(conjugate(comp), weight_cap);
  const int n = graph.weight;

  std::map<GenComposition, GenComposition> vertex_image;
  const std::set<GenComposition> image_vertices(image.vertices.begin(), image.vertices.end());
  std::set<GenComposition> hit;
  cert.vertices_match = (graph.vertices.size() == image.vertices.size());
  cert.involution = true;
  for (const GenComposition& v : graph.vertices) {
    const GenComposition u = iota(v);
    if (!image_vertices.count(u) || hit.count(u)) {
      cert.vertices_match = false;
      cert.detail = "vertex image missing or repeated";
      break;
    }
    if (iota(u) != v) {
      cert.involution = false;
      cert.detail = "iota fails to be an involution";
      break;
    }
    hit.insert(u);
    vertex_image.emplace(v, u);
    cert.vertex_map.emplace_back(v, u);
  }

  cert.edges_match = cert.vertices_match && (graph.edges.size() == image.edges.size());
  if (cert.edges_match) {
    const std::set<GammaEdge> image_edges(image.edges.begin(), image.edges.end());
    for (const GammaEdge& edge : graph.edges) {
      const GammaEdge mapped{vertex_image.at(edge.from), vertex_image.at(edge.to),
                             n + 1 - edge.label};
      if (!image_edges.count(mapped)) {
        cert.edges_match = false;
        cert.detail = "edge image missing";
        break;
      }
    }
  }
  cert.valid = cert.vertices_match && cert.edges_match && cert.involution;
  return cert;
}

std::string gamma_to_dot(const GammaGraph& graph) {
  const auto render = [](const GenComposition& v) {
    std::string out;
    for (int part : v) {
      if (!out.empty()) out += ' ';
      out += (part == 0) ? "." : std::to_string(part);
    }
    return out;
  };
  std::ostringstream os;
  os << "digraph gamma {\n";
  os << "  rankdir=LR;\n";
  for (const GenComposition& v : graph.vertices) {
    os << "  \"" << render(v) << "\";\n";
  }
  for (const GammaEdge& edge : graph.edges) {
    os << "  \"" << render(edge.from) << "\" -> \"" << render(edge.to) << "\" [label=\""
       << edge.label << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace ncinvert
