#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "decimation/big_count.hpp"
#include "decimation/decimation_count.hpp"
#include "decimation/errors.hpp"
#include "decimation/oracle.hpp"
#include "decimation/orbits_counting.hpp"
#include "decimation/units_lattice.hpp"

// JSON forms of the reports. Counts are decimal strings so that consumers
// limited to doubles or 64-bit integers cannot truncate them.

namespace decimation::io {

using nlohmann::json;

inline json to_json(const CountReport& r) {
  json rows = json::array();
  for (const auto& row : r.per_subgroup) {
    rows.push_back({{"generators", row.generators},
                    {"order", row.order()},
                    {"elements", row.elements},
                    {"C", row.c},
                    {"nsol", to_decimal(row.nsol)},
                    {"N_prime", to_decimal(row.n_prime)},
                    {"N", to_decimal(row.n)},
                    {"numD", to_decimal(row.num_d)}});
  }
  return {{"group", r.group},
          {"moduli", r.moduli},
          {"order", r.order},
          {"exponent", r.exponent},
          {"delta", r.delta},
          {"necklaces", to_decimal(r.necklaces)},
          {"symmetric_necklaces", to_decimal(r.symmetric_necklaces)},
          {"bracelets", to_decimal(r.bracelets)},
          {"decimation_classes", to_decimal(r.decimation_classes)},
          {"per_subgroup", rows},
          {"warnings", r.warnings}};
}

inline CountReport count_report_from_json(const json& j) {
  try {
    CountReport r;
    r.group = j.at("group").get<std::string>();
    r.moduli = j.at("moduli").get<std::vector<std::int64_t>>();
    r.order = j.at("order").get<std::int64_t>();
    r.exponent = j.at("exponent").get<std::int64_t>();
    r.delta = j.at("delta").get<std::int64_t>();
    r.necklaces = from_decimal(j.at("necklaces").get<std::string>());
    r.symmetric_necklaces = from_decimal(j.at("symmetric_necklaces").get<std::string>());
    r.bracelets = from_decimal(j.at("bracelets").get<std::string>());
    r.decimation_classes = from_decimal(j.at("decimation_classes").get<std::string>());
    for (const auto& row : j.at("per_subgroup")) {
      SubgroupRow s;
      s.generators = row.at("generators").get<std::vector<std::int64_t>>();
      s.elements = row.at("elements").get<std::vector<std::int64_t>>();
      s.c = row.at("C").get<std::int64_t>();
      s.nsol = from_decimal(row.at("nsol").get<std::string>());
      s.n_prime = from_decimal(row.at("N_prime").get<std::string>());
      s.n = from_decimal(row.at("N").get<std::string>());
      s.num_d = from_decimal(row.at("numD").get<std::string>());
      r.per_subgroup.push_back(std::move(s));
    }
    r.warnings = j.value("warnings", std::vector<std::string>{});
    return r;
  } catch (const json::exception& e) {
    fail(ErrorCode::Parse, std::string("malformed count report: ") + e.what());
  }
}

inline json to_json(const oracle::OracleReport& r) {
  json groups = json::array();
  for (const auto& [elements, count] : r.per_multiplier_group)
    groups.push_back({{"elements", elements}, {"order", elements.size()}, {"necklaces", to_decimal(count)}});
  json out = {{"total_multisets", to_decimal(r.total_multisets)},
              {"necklaces", to_decimal(r.necklaces)},
              {"symmetric_necklaces", to_decimal(r.symmetric_necklaces)},
              {"bracelets", to_decimal(r.bracelets)},
              {"decimation_classes", to_decimal(r.decimation_classes)},
              {"per_multiplier_group", groups}};
  if (r.class_representatives) out["class_representatives"] = *r.class_representatives;
  return out;
}

inline json to_json(const SubgroupLattice& lattice) {
  json nodes = json::array();
  for (const auto& n : lattice.nodes)
    nodes.push_back({{"order", n.order()}, {"generators", n.generators()}, {"elements", n.elements()}});
  json edges = json::array();
  for (const auto& [j, k] : lattice.edges) edges.push_back({j, k});
  return {{"modulus", lattice.modulus}, {"nodes", nodes}, {"edges", edges}};
}

inline json to_json(const OrbitProfile& p) {
  return {{"orbits", p.orbits}, {"sizes", p.sizes}, {"q", p.q}, {"r", p.r}};
}

}  // namespace decimation::io
