#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "decimation/decimation.hpp"
#include "decimation/io.hpp"
#include "decimation/sweep.hpp"

namespace decimation::cli {

enum class Format { Json, Csv, Text };

struct RunConfig {
  std::string command;
  std::string group;
  std::optional<std::int64_t> density;
  std::string vector;
  std::vector<std::int64_t> generators;
  Format format = Format::Json;
  std::string cache_path;
  std::uint64_t budget = 5'000'000;
  unsigned threads = 1;
  bool verify = false;
  std::int64_t lmin = 3;
  std::int64_t lmax = 3;
  std::string density_rule;
};

inline int exit_code(ErrorCode code) {
  switch (code) {
    case ErrorCode::UnsupportedParameters: return 3;
    case ErrorCode::InternalConsistency: return 4;
    case ErrorCode::TooLarge: return 5;
    default: return 2;
  }
}

inline Format parse_format(const std::string& s) {
  if (s == "json") return Format::Json;
  if (s == "csv") return Format::Csv;
  if (s == "text") return Format::Text;
  fail(ErrorCode::Parse, "unknown format '" + s + "' (json, csv or text)");
}

namespace detail {

using nlohmann::json;

inline std::string join(const std::vector<std::int64_t>& v, const char* sep = " ") {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + std::to_string(v[i]);
  return out;
}

inline Group require_group(const RunConfig& c) {
  if (c.group.empty()) fail(ErrorCode::Parse, c.command + " needs --group");
  return Group::parse(c.group);
}

inline std::int64_t require_density(const RunConfig& c) {
  if (!c.density) fail(ErrorCode::Parse, c.command + " needs --density");
  if (*c.density < 0) fail(ErrorCode::Parse, "density must be nonnegative");
  return *c.density;
}

inline void print_count_report(const CountReport& r, Format f, std::ostream& out) {
  if (f == Format::Json) {
    out << io::to_json(r).dump(2) << '\n';
    return;
  }
  if (f == Format::Csv) {
    out << "group,delta,generators,order,C,nsol,N_prime,N,numD\n";
    for (const auto& row : r.per_subgroup)
      out << r.group << ',' << r.delta << ',' << join(row.generators, " ") << ',' << row.order() << ',' << row.c
          << ',' << row.nsol << ',' << row.n_prime << ',' << row.n << ',' << row.num_d << '\n';
    return;
  }
  out << "group               " << r.group << "\n"
      << "density             " << r.delta << "\n"
      << "necklaces           " << r.necklaces << "\n"
      << "symmetric necklaces " << r.symmetric_necklaces << "\n"
      << "bracelets           " << r.bracelets << "\n"
      << "decimation classes  " << r.decimation_classes << "\n\n";
  std::vector<std::vector<std::string>> table{{"|H|", "C", "nsol", "N'", "N", "numD", "generators"}};
  for (const auto& row : r.per_subgroup)
    table.push_back({std::to_string(row.order()), std::to_string(row.c), row.nsol.str(), row.n_prime.str(), row.n.str(),
                     row.num_d.str(), "<" + join(row.generators, ",") + ">"});
  std::vector<std::size_t> width(table[0].size(), 0);
  for (const auto& line : table)
    for (std::size_t k = 0; k < line.size(); ++k) width[k] = std::max(width[k], line[k].size());
  for (const auto& line : table) {
    for (std::size_t k = 0; k < line.size(); ++k) {
      const auto pad = std::string(width[k] - line[k].size(), ' ');
      out << (k + 1 < line.size() ? pad + line[k] + "  " : line[k]);
    }
    out << '\n';
  }
}

inline void print_single(const Group& g, std::int64_t delta, const char* name, const BigCount& value, Format f,
                         std::ostream& out) {
  if (f == Format::Json) {
    out << json{{"group", g.to_string()}, {"delta", delta}, {name, to_decimal(value)}}.dump(2) << '\n';
  } else if (f == Format::Csv) {
    out << "group,delta," << name << '\n' << g.to_string() << ',' << delta << ',' << value << '\n';
  } else {
    out << value << '\n';
  }
}

inline int run_multipliers(const RunConfig& c, std::ostream& out) {
  const auto g = require_group(c);
  if (c.vector.empty()) fail(ErrorCode::Parse, "multipliers needs --vector");
  const auto I = GroupMultiset::parse(g, c.vector);
  const auto h = multiplier_group(I);
  const auto period = is_periodic(I);
  json witnesses = json::array();
  if (!period) {
    for (auto t : h.elements()) {
      const auto w = translate_witness(I, t);
      std::vector<std::string> fixed;
      for (const auto& z : fixed_translates(I, t)) fixed.push_back(z.to_string());
      witnesses.push_back({{"t", t},
                           {"g0", w->g0.to_string()},
                           {"j", w->j},
                           {"translate_fixing", is_translate_fixing(I, t)},
                           {"fixed_translates", fixed}});
    }
  }
  json doc = {{"group", g.to_string()},
              {"vector", I.multiplicities()},
              {"density", I.density()},
              {"sigma", I.sigma().to_string()},
              {"periodic", period.has_value()},
              {"multiplier_group",
               {{"order", h.order()}, {"generators", h.generators()}, {"elements", h.elements()}}},
              {"witnesses", witnesses}};
  if (period) doc["period"] = period->to_string();
  if (std::gcd(I.density(), g.exponent()) == 1) doc["canonical_shift"] = canonical_shift(I).to_string();

  if (c.format == Format::Json) {
    out << doc.dump(2) << '\n';
  } else if (c.format == Format::Csv) {
    out << "t,g0,j,translate_fixing\n";
    for (const auto& w : witnesses)
      out << w["t"].get<std::int64_t>() << ',' << w["g0"].get<std::string>() << ','
          << join(w["j"].get<std::vector<std::int64_t>>(), " ") << ',' << (w["translate_fixing"].get<bool>() ? 1 : 0)
          << '\n';
  } else {
    out << "multiplier group <" << join(h.generators(), ",") << "> = {" << join(h.elements(), ", ") << "}\n";
  }
  return 0;
}

inline int run_orbits(const RunConfig& c, std::ostream& out) {
  const auto g = require_group(c);
  const UnitSubgroup h(g.exponent(), c.generators);
  const auto p = h_orbits(g, h);
  if (c.format == Format::Json) {
    auto doc = io::to_json(p);
    doc["group"] = g.to_string();
    doc["subgroup"] = h.elements();
    out << doc.dump(2) << '\n';
  } else if (c.format == Format::Csv) {
    out << "orbit,size,elements\n";
    for (std::size_t i = 0; i < p.orbits.size(); ++i) {
      std::vector<std::int64_t> idx(p.orbits[i].begin(), p.orbits[i].end());
      out << i << ',' << p.sizes[i] << ',' << join(idx, " ") << '\n';
    }
  } else {
    for (std::size_t i = 0; i < p.orbits.size(); ++i) {
      out << '{';
      for (std::size_t k = 0; k < p.orbits[i].size(); ++k)
        out << (k ? ", " : "") << g.element(p.orbits[i][k]).to_string();
      out << "}\n";
    }
    out << "q = " << join(p.q) << "\nr = " << join(p.r) << '\n';
  }
  return 0;
}

inline int run_lattice(const RunConfig& c, std::ostream& out) {
  const auto g = require_group(c);
  const auto lattice = subgroup_lattice(g.exponent());
  if (c.format == Format::Json) {
    out << io::to_json(lattice).dump(2) << '\n';
  } else if (c.format == Format::Csv) {
    out << "node,order,generators,elements\n";
    for (std::size_t i = 0; i < lattice.nodes.size(); ++i)
      out << i << ',' << lattice.nodes[i].order() << ',' << join(lattice.nodes[i].generators()) << ','
          << join(lattice.nodes[i].elements()) << '\n';
  } else {
    for (std::size_t i = 0; i < lattice.nodes.size(); ++i) {
      out << i << ": <" << join(lattice.nodes[i].generators(), ",") << "> order " << lattice.nodes[i].order();
      std::vector<std::int64_t> below;
      for (auto k : lattice.covers_of(i)) below.push_back(static_cast<std::int64_t>(k));
      if (!below.empty()) out << ", covers " << join(below, ",");
      out << '\n';
    }
  }
  return 0;
}

inline int run_oracle(const RunConfig& c, std::ostream& out, std::ostream& err) {
  const auto g = require_group(c);
  const auto delta = require_density(c);
  oracle::CensusOptions options;
  options.budget = c.budget;
  const auto census = oracle::orbit_census(g, delta, options);
  auto doc = io::to_json(census);
  doc["group"] = g.to_string();
  doc["delta"] = delta;
  int status = 0;
  if (c.verify) {
    CountOptions count_options;
    count_options.threads = c.threads;
    const auto report = count_decimation_classes(g, delta, count_options);
    json diffs = json::array();
    auto check = [&](const std::string& what, const BigCount& expected, const BigCount& got) {
      if (expected != got) diffs.push_back({{"quantity", what}, {"oracle", to_decimal(expected)}, {"pipeline", to_decimal(got)}});
    };
    check("necklaces", census.necklaces, report.necklaces);
    check("symmetric_necklaces", census.symmetric_necklaces, report.symmetric_necklaces);
    check("bracelets", census.bracelets, report.bracelets);
    check("decimation_classes", census.decimation_classes, report.decimation_classes);
    std::map<std::vector<std::int64_t>, BigCount> pipeline;
    for (const auto& row : report.per_subgroup) pipeline[row.elements] = row.n;
    for (const auto& [elements, n] : pipeline) {
      const auto it = census.per_multiplier_group.find(elements);
      check("N_H <" + join(elements, ",") + ">", it == census.per_multiplier_group.end() ? BigCount(0) : it->second, n);
    }
    for (const auto& [elements, n] : census.per_multiplier_group)
      if (!pipeline.count(elements)) check("N_H <" + join(elements, ",") + ">", n, 0);
    doc["verify"] = {{"pipeline_decimation_classes", to_decimal(report.decimation_classes)},
                     {"match", diffs.empty()},
                     {"differences", diffs}};
    for (const auto& w : report.warnings) err << "warning: " << w << '\n';
    if (!diffs.empty()) status = 1;
  }
  if (c.format == Format::Json) {
    out << doc.dump(2) << '\n';
  } else if (c.format == Format::Csv) {
    out << "group,delta,necklaces,symmetric,bracelets,decimation_classes\n"
        << g.to_string() << ',' << delta << ',' << census.necklaces << ',' << census.symmetric_necklaces << ','
        << census.bracelets << ',' << census.decimation_classes << '\n';
  } else {
    out << "multisets " << census.total_multisets << "\nnecklaces " << census.necklaces << "\nsymmetric "
        << census.symmetric_necklaces << "\nbracelets " << census.bracelets << "\nclasses " << census.decimation_classes;
    if (c.verify) out << " = pipeline " << doc["verify"]["pipeline_decimation_classes"].get<std::string>();
    out << '\n';
    if (status) out << "MISMATCH\n" << doc["verify"]["differences"].dump(2) << '\n';
  }
  return status;
}

inline int run_sweep(const RunConfig& c, std::ostream& out) {
  if (c.density_rule.empty()) fail(ErrorCode::Parse, "sweep needs --density-rule");
  const DensityRule rule(c.density_rule);
  SweepCache cache(c.cache_path.empty() ? default_cache_path() : c.cache_path);
  CountOptions options;
  options.threads = c.threads;
  const auto points = cyclic_sweep(cache, c.lmin, c.lmax, rule, options);
  auto status_name = [](SweepPoint::Status s) {
    switch (s) {
      case SweepPoint::Status::Computed: return "computed";
      case SweepPoint::Status::Cached: return "cached";
      default: return "skipped";
    }
  };
  if (c.format == Format::Json) {
    json rows = json::array();
    for (const auto& p : points) {
      json row = {{"group", p.group}, {"delta", p.delta}, {"status", status_name(p.status)}};
      if (p.status == SweepPoint::Status::Skipped) {
        row["reason"] = p.reason;
      } else {
        row["necklaces"] = to_decimal(p.row.necklaces);
        row["symmetric_necklaces"] = to_decimal(p.row.symmetric);
        row["bracelets"] = to_decimal(p.row.bracelets);
        row["decimation_classes"] = to_decimal(p.row.decimation_classes);
      }
      rows.push_back(row);
    }
    out << json{{"cache", cache.path()}, {"rule", rule.text()}, {"points", rows}}.dump(2) << '\n';
  } else if (c.format == Format::Csv) {
    out << kCacheHeader << ",status\n";
    for (const auto& p : points) {
      if (p.status == SweepPoint::Status::Skipped)
        out << p.group << ',' << p.delta << ",,,,,,," << status_name(p.status) << '\n';
      else
        out << p.row.to_csv() << ',' << status_name(p.status) << '\n';
    }
  } else {
    for (const auto& p : points) {
      out << p.group << " delta " << p.delta << ": ";
      if (p.status == SweepPoint::Status::Skipped)
        out << "skipped (" << p.reason << ")\n";
      else
        out << p.row.decimation_classes << " classes (" << status_name(p.status) << ")\n";
    }
  }
  return 0;
}

inline int dispatch(const RunConfig& c, std::ostream& out, std::ostream& err) {
  const auto& cmd = c.command;
  if (cmd == "count") {
    CountOptions options;
    options.threads = c.threads;
    const auto report = count_decimation_classes(require_group(c), require_density(c), options);
    for (const auto& w : report.warnings) err << "warning: " << w << '\n';
    print_count_report(report, c.format, out);
    return 0;
  }
  if (cmd == "necklaces" || cmd == "symmetric" || cmd == "bracelets") {
    const auto g = require_group(c);
    const auto delta = require_density(c);
    if (cmd == "necklaces") print_single(g, delta, "necklaces", necklace_count(g, delta), c.format, out);
    if (cmd == "symmetric")
      print_single(g, delta, "symmetric_necklaces", symmetric_necklace_count(g, delta), c.format, out);
    if (cmd == "bracelets") print_single(g, delta, "bracelets", bracelet_count(g, delta), c.format, out);
    return 0;
  }
  if (cmd == "multipliers") return run_multipliers(c, out);
  if (cmd == "orbits") return run_orbits(c, out);
  if (cmd == "lattice") return run_lattice(c, out);
  if (cmd == "oracle") return run_oracle(c, out, err);
  if (cmd == "sweep") return run_sweep(c, out);
  fail(ErrorCode::Parse, "unknown command '" + cmd + "'");
}

}  // namespace detail

/// Runs one command; errors are reported on `err` and mapped to exit codes.
inline int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    return detail::dispatch(config, out, err);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code(e.code());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 4;
  }
}

}  // namespace decimation::cli
