#pragma once

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "zonocone/cone.hpp"
#include "zonocone/config_space.hpp"
#include "zonocone/rational.hpp"
#include "zonocone/scheme.hpp"
#include "zonocone/symmetry.hpp"

namespace zc {

using json = nlohmann::ordered_json;

inline long long to_ll(const Int& x) {
  if (x > std::numeric_limits<long long>::max() || x < std::numeric_limits<long long>::min())
    throw std::overflow_error("integer too large for JSON");
  return static_cast<long long>(x);
}

inline json json_ivec(const IntVec& v) {
  json a = json::array();
  for (const Int& x : v) a.push_back(to_ll(x));
  return a;
}

inline std::vector<std::string> partition_order(const PartitionScheme& scheme) {
  std::vector<std::string> out;
  out.reserve(scheme.partitions.size());
  for (const PartitionIndex& p : scheme.partitions) out.push_back(partition_string(p));
  return out;
}

inline json cone_json(const Cone& cone, const PartitionScheme& scheme) {
  json j;
  j["ambient"] = cone.ambient;
  j["order"] = partition_order(scheme);
  json rays = json::array();
  for (const IntVec& r : cone.rays) rays.push_back(json_ivec(r));
  j["rays"] = std::move(rays);
  json facets = json::array();
  for (const IntVec& f : cone.facets) facets.push_back(json_ivec(f));
  j["facets"] = std::move(facets);
  json inc = json::array();
  for (const std::vector<bool>& row : cone.incidence) {
    std::string bits(row.size(), '0');
    for (std::size_t r = 0; r < row.size(); ++r)
      if (row[r]) bits[r] = '1';
    inc.push_back(std::move(bits));
  }
  j["incidence"] = std::move(inc);
  return j;
}

/// Facets as CSV: header row of partition labels, one facet per row.
inline std::string facets_csv(const Cone& cone, const PartitionScheme& scheme) {
  std::string out;
  const std::vector<std::string> order = partition_order(scheme);
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (i) out += ',';
    out += order[i];
  }
  out += '\n';
  for (const IntVec& f : cone.facets) {
    for (std::size_t i = 0; i < f.size(); ++i) {
      if (i) out += ',';
      out += f[i].str();
    }
    out += '\n';
  }
  return out;
}

inline json monomial_point_json(const MonomialPoint& p) {
  json j;
  j["scheme"] = {{"n", p.scheme->n}, {"d", p.scheme->d}};
  j["order"] = partition_order(*p.scheme);
  json vals = json::array();
  for (const Rat& v : p.values) vals.push_back(to_string(v));
  j["values"] = std::move(vals);
  return j;
}

inline json orbits_json(const std::vector<FacetOrbit>& orbits, const MatchReport* match = nullptr) {
  json arr = json::array();
  for (std::size_t o = 0; o < orbits.size(); ++o) {
    json j;
    j["orbit"] = o;
    j["size"] = orbits[o].size;
    j["canonical"] = json_ivec(orbits[o].canonical_representative);
    int type = 0;
    if (match)
      for (const TypeMatch& m : match->entries)
        if (m.is_facet && m.orbit_index == o) type = m.type;
    if (type)
      j["type"] = type;
    else
      j["type"] = nullptr;
    arr.push_back(std::move(j));
  }
  return arr;
}

inline void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << content;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

inline std::string dump(const json& j) { return j.dump(2) + "\n"; }

// ============================================================
// Logging, controlled by ZONOCONE_LOG (0 = quiet, 1 = info, 2 = debug)
// ============================================================

inline int log_level() {
  static const int level = [] {
    const char* env = std::getenv("ZONOCONE_LOG");
    if (!env || !*env) return 0;
    std::string s(env);
    if (s == "debug" || s == "2") return 2;
    if (s == "info" || s == "1") return 1;
    return 0;
  }();
  return level;
}

inline void log_info(const std::string& msg) {
  if (log_level() >= 1) std::cerr << "[zonocone] " << msg << "\n";
}

inline void log_debug(const std::string& msg) {
  if (log_level() >= 2) std::cerr << "[zonocone:debug] " << msg << "\n";
}

}  // namespace zc
