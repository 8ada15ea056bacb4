#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ncinvert/coefficient.hpp"
#include "ncinvert/invert.hpp"
#include "ncinvert/ncsf.hpp"
#include "ncinvert/parking.hpp"
#include "ncinvert/pgraph.hpp"
#include "ncinvert/rational.hpp"

namespace ncinvert {

std::uint64_t fnv1a64(const std::string& text);
std::string fnv1a64_hex(const std::string& text);

/* Coefficient <-> JSON array of [q_exp, x_exp, "num", "den"], sorted by
 * (q_exp, x_exp); numerator and denominator as decimal strings. */
std::string coefficient_to_json(const Coefficient& coeff);
Coefficient coefficient_from_json(const std::string& text);

/* NcsfElement <-> {"basis": "S|R|L", "terms": [{"key": [...], "coeff":
 * ...}]}, keys in increasing lexicographic order. */
std::string element_to_json(const NcsfElement& elem);
NcsfElement element_from_json(const std::string& text);

/* {"equation", "order", "components": [...], "checksums": ["fnv64:..."]}
 * with one checksum per component, taken over its JSON rendering. */
std::string solver_report_json(const SolverResult& result);

std::string kl_quotient_json(const KlQuotient& quotient);

std::string family_json(const ParkingFamily& family);

std::string gamma_json(const GammaGraph& graph);

std::string certificate_json(const Composition& comp, const IsoCertificate& cert);

/* One line per row, entries comma-separated. */
std::string triangle_csv(const std::vector<std::vector<Integer>>& rows);
/* Nested arrays of decimal strings. */
std::string triangle_json(const std::vector<std::vector<Integer>>& rows);

}  // namespace ncinvert
