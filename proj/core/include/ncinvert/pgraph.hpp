#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ncinvert/composition.hpp"

namespace ncinvert {

/* An edge moves a value from slot `label` into the empty slot label+1
 * (slots are 1-based). */
struct GammaEdge {
  GenComposition from;
  GenComposition to;
  int label = 0;

  friend bool operator==(const GammaEdge& a, const GammaEdge& b) {
    return a.label == b.label && a.from == b.from && a.to == b.to;
  }
  friend bool operator<(const GammaEdge& a, const GammaEdge& b) {
    if (a.from != b.from) return a.from < b.from;
    if (a.to != b.to) return a.to < b.to;
    return a.label < b.label;
  }
};

/* The move graph on the parking-type vectors whose nonzero parts read I:
 * slots 1..n+1 for weight n, and an edge per (value, empty-slot) swap that
 * keeps the vector parking-type. */
struct GammaGraph {
  Composition comp;
  int weight = 0;
  std::vector<GenComposition> vertices;  // sorted
  std::vector<GammaEdge> edges;          // sorted
};

/* pre: comp is a zero-free composition, weight(comp) <= weight_cap. */
GammaGraph build_gamma(const Composition& comp, int weight_cap = 9);

/* The vector I 0...0, always a vertex with no incoming edge. */
GenComposition expected_source(const Composition& comp);

/* Each part p rendered as p followed by p-1 zeros, plus a final zero;
 * always the unique vertex with no outgoing edge. */
GenComposition expected_sink(const Composition& comp);

/* Conjugation on vertices: the parts of the conjugate composition, laid
 * out in order on the zero slots of the reversed vector.  An involution;
 * maps the graph of I onto the graph of the conjugate of I, edge labels
 * i -> n+1-i. */
GenComposition iota(const GenComposition& vertex);

struct IsoCertificate {
  bool valid = false;
  bool vertices_match = false;
  bool edges_match = false;
  bool involution = false;
  std::vector<std::pair<GenComposition, GenComposition>> vertex_map;
  std::string detail;
};

/* Checks that iota realizes an isomorphism from the graph of comp onto the
 * graph of conjugate(comp), preserving edge direction and flipping labels. */
IsoCertificate conjugacy_isomorphism(const Composition& comp, int weight_cap = 9);

/* DOT rendering; vertices print their slots with '.' for zero. */
std::string gamma_to_dot(const GammaGraph& graph);

}  // namespace ncinvert
