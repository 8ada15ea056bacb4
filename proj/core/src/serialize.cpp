#include "ncinvert/serialize.hpp"

#include <iomanip>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace ncinvert {

namespace {

using Json = nlohmann::ordered_json;

Json coefficient_node(const Coefficient& coeff) {
  Json out = Json::array();
  for (const auto& [key, value] : coeff.terms()) {
    out.push_back(Json::array(
        {key.first, key.second, value.get_num().get_str(), value.get_den().get_str()}));
  }
  return out;
}

Coefficient coefficient_from_node(const Json& node) {
  if (!node.is_array()) throw std::invalid_argument("coefficient node must be an array");
  Coefficient out;
  for (const Json& term : node) {
    if (!term.is_array() || term.size() != 4)
      throw std::invalid_argument("coefficient term must be [q, x, num, den]");
    const long q_exp = term[0].get<long>();
    const long x_exp = term[1].get<long>();
    Rational value(Integer(term[2].get<std::string>()), Integer(term[3].get<std::string>()));
    value.canonicalize();
    out.add_term(q_exp, x_exp, value);
  }
  return out;
}

Json element_node(const NcsfElement& elem) {
  Json out;
  out["basis"] = std::string(1, basis_letter(elem.basis()));
  Json terms = Json::array();
  for (const auto& [key, coeff] : elem.terms()) {
    Json term;
    term["key"] = key;
    term["coeff"] = coefficient_node(coeff);
    terms.push_back(std::move(term));
  }
  out["terms"] = std::move(terms);
  return out;
}

NcsfElement element_from_node(const Json& node) {
  const std::string basis_text = node.at("basis").get<std::string>();
  Basis basis = Basis::S;
  if (basis_text == "S") {
    basis = Basis::S;
  } else if (basis_text == "R") {
    basis = Basis::R;
  } else if (basis_text == "L") {
    basis = Basis::L;
  } else {
    throw std::invalid_argument("unknown basis: " + basis_text);
  }
  NcsfElement out(basis);
  for (const Json& term : node.at("terms")) {
    out.add_term(term.at("key").get<GenComposition>(),
                 coefficient_from_node(term.at("coeff")));
  }
  return out;
}

Json solver_report_node(const SolverResult& result) {
  Json out;
  out["equation"] = result.equation;
  out["order"] = result.order;
  Json components = Json::array();
  Json checksums = Json::array();
  for (const NcsfElement& elem : result.components) {
    Json node = element_node(elem);
    checksums.push_back("fnv64:" + fnv1a64_hex(node.dump()));
    components.push_back(std::move(node));
  }
  out["components"] = std::move(components);
  out["checksums"] = std::move(checksums);
  return out;
}

Json integer_rows_node(const std::vector<std::vector<Integer>>& rows) {
  Json out = Json::array();
  for (const std::vector<Integer>& row : rows) {
    Json line = Json::array();
    for (const Integer& value : row) line.push_back(value.get_str());
    out.push_back(std::move(line));
  }
  return out;
}

}  // namespace

std::uint64_t fnv1a64(const std::string& text) {
  std::uint64_t hash = 14695981039346656037ULL;
  for (unsigned char byte : text) {
    hash ^= byte;
    hash *= 1099511628211ULL;
  }
  return hash;
}

std::string fnv1a64_hex(const std::string& text) {
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << fnv1a64(text);
  return os.str();
}

std::string coefficient_to_json(const Coefficient& coeff) {
  return coefficient_node(coeff).dump();
}

Coefficient coefficient_from_json(const std::string& text) {
  return coefficient_from_node(Json::parse(text));
}

std::string element_to_json(const NcsfElement& elem) { return element_node(elem).dump(); }

NcsfElement element_from_json(const std::string& text) {
  return element_from_node(Json::parse(text));
}

std::string solver_report_json(const SolverResult& result) {
  return solver_report_node(result).dump(2);
}

std::string kl_quotient_json(const KlQuotient& quotient) {
  Json out;
  out["k"] = quotient.k;
  out["l"] = quotient.l;
  out["r"] = quotient.r;
  out["q_mode"] = quotient.q_mode;
  out["raw"] = solver_report_node(quotient.raw);
  out["normalized"] = solver_report_node(quotient.normalized);
  Json norm;
  norm["inferred"] = quotient.normalization.inferred;
  norm["matched"] = quotient.normalization.matched;
  norm["triangular"] = quotient.normalization.triangular;
  norm["triangular_shifted"] = quotient.normalization.triangular_shifted;
  out["normalization"] = std::move(norm);
  return out.dump(2);
}

std::string family_json(const ParkingFamily& family) {
  Json out;
  switch (family.kind) {
    case ParkingFamily::Kind::Classic:
      out["kind"] = "classic";
      break;
    case ParkingFamily::Kind::Shifted:
      out["kind"] = "shifted";
      break;
    case ParkingFamily::Kind::Arithmetic:
      out["kind"] = "arithmetic";
      break;
  }
  out["k"] = family.k;
  out["l"] = family.l;
  out["display"] = family.display();
  return out.dump();
}

std::string gamma_json(const GammaGraph& graph) {
  Json out;
  out["composition"] = graph.comp;
  out["weight"] = graph.weight;
  out["vertices"] = graph.vertices;
  Json edges = Json::array();
  for (const GammaEdge& edge : graph.edges) {
    Json node;
    node["from"] = edge.from;
    node["to"] = edge.to;
    node["label"] = edge.label;
    edges.push_back(std::move(node));
  }
  out["edges"] = std::move(edges);
  out["source"] = expected_source(graph.comp);
  out["sink"] = expected_sink(graph.comp);
  return out.dump(2);
}

std::string certificate_json(const Composition& comp, const IsoCertificate& cert) {
  Json out;
  out["composition"] = comp;
  out["conjugate"] = conjugate(comp);
  out["valid"] = cert.valid;
  out["vertices_match"] = cert.vertices_match;
  out["edges_match"] = cert.edges_match;
  out["involution"] = cert.involution;
  Json pairs = Json::array();
  for (const auto& [v, u] : cert.vertex_map) {
    pairs.push_back(Json::array({v, u}));
  }
  out["vertex_map"] = std::move(pairs);
  out["detail"] = cert.detail;
  return out.dump(2);
}

std::string triangle_csv(const std::vector<std::vector<Integer>>& rows) {
  std::ostringstream os;
  for (const std::vector<Integer>& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) os << ',';
      os << row[i].get_str();
    }
    os << '\n';
  }
  return os.str();
}

std::string triangle_json(const std::vector<std::vector<Integer>>& rows) {
  return integer_rows_node(rows).dump();
}

}  // namespace ncinvert
