#include "doctest.h"

#include <random>
#include <string>
#include <vector>

#include "json.hpp"

#include "ncinvert/invert.hpp"
#include "ncinvert/ncsf.hpp"
#include "ncinvert/parking.hpp"
#include "ncinvert/pgraph.hpp"
#include "ncinvert/serialize.hpp"

using namespace ncinvert;

namespace {

Coefficient random_coefficient(std::mt19937& gen) {
  std::uniform_int_distribution<long> q_exp(-3, 3);
  std::uniform_int_distribution<long> x_exp(0, 3);
  std::uniform_int_distribution<long> num(-9, 9);
  std::uniform_int_distribution<long> den(1, 6);
  Coefficient out = Coefficient::zero();
  for (int i = 0; i < 4; ++i) {
    out = out + Coefficient::monomial(q_exp(gen), x_exp(gen), Rational(num(gen), den(gen)));
  }
  return out;
}

}  // namespace

TEST_CASE("fnv1a64 reference values") {
  CHECK(fnv1a64_hex("") == "cbf29ce484222325");
  CHECK(fnv1a64_hex("a") == "af63dc4c8601ec8c");
  CHECK(fnv1a64("") == 0xcbf29ce484222325ULL);
}

TEST_CASE("coefficient json round-trip") {
  std::mt19937 gen(20260816u);
  for (int trial = 0; trial < 20; ++trial) {
    const Coefficient coeff = random_coefficient(gen);
    const std::string text = coefficient_to_json(coeff);
    CHECK(coefficient_from_json(text) == coeff);
    CHECK(nlohmann::json::parse(text).is_array());
  }
  CHECK(coefficient_from_json(coefficient_to_json(Coefficient::zero())) == Coefficient::zero());
}

TEST_CASE("element json round-trip") {
  std::mt19937 gen(816u);
  for (const Basis basis : {Basis::S, Basis::R, Basis::L}) {
    NcsfElement elem(basis);
    elem.add_term({2, 1}, random_coefficient(gen));
    elem.add_term({1, 1, 1}, random_coefficient(gen));
    elem.add_term({}, Coefficient::one());
    const std::string text = element_to_json(elem);
    CHECK(element_from_json(text) == elem);
    const nlohmann::json parsed = nlohmann::json::parse(text);
    CHECK(parsed.contains("basis"));
    CHECK(parsed.contains("terms"));
  }
}

TEST_CASE("solver report carries one checksum per component") {
  const SolverResult result = solve_g(3);
  const nlohmann::json parsed = nlohmann::json::parse(solver_report_json(result));
  CHECK(parsed["equation"] == "g");
  CHECK(parsed["order"] == 3);
  REQUIRE(parsed["components"].size() == parsed["checksums"].size());
  for (const auto& sum : parsed["checksums"]) {
    const std::string text = sum.get<std::string>();
    CHECK(text.rfind("fnv64:", 0) == 0);
  }
}

TEST_CASE("quotient, family, gamma and certificate reports parse as json") {
  const nlohmann::json quotient = nlohmann::json::parse(kl_quotient_json(quotient_kl(2, 1, 2, true)));
  CHECK(quotient["k"] == 2);
  CHECK(quotient["l"] == 1);

  const nlohmann::json family = nlohmann::json::parse(family_json(ParkingFamily::arithmetic(2, 1)));
  CHECK(family.contains("display"));

  const GammaGraph graph = build_gamma({2, 1});
  const nlohmann::json gamma = nlohmann::json::parse(gamma_json(graph));
  CHECK(gamma["vertices"].size() == 2);
  CHECK(gamma["edges"].size() == 1);

  const IsoCertificate cert = conjugacy_isomorphism({2, 1});
  const nlohmann::json report = nlohmann::json::parse(certificate_json({2, 1}, cert));
  CHECK(report["valid"] == true);
}

TEST_CASE("triangle renderings") {
  const std::vector<std::vector<Integer>> rows{{Integer(1)}, {Integer(1), Integer(1)}};
  CHECK(triangle_csv(rows) == "1\n1,1\n");
  const nlohmann::json parsed = nlohmann::json::parse(triangle_json(rows));
  REQUIRE(parsed.is_array());
  CHECK(parsed[1][1] == "1");
}
