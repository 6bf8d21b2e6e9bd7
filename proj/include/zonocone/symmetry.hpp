#pragma once

#include <algorithm>
#include <cstddef>
#include <fstream>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "zonocone/rational.hpp"
#include "zonocone/scheme.hpp"

namespace zc {

/// Coordinate permutation induced by relabeling the bodies: the coordinate of
/// partition P moves to the coordinate of sigma(P).
struct InducedPermutation {
  std::vector<int> source;          // source[i] = sigma(i+1), values 1..n
  std::vector<std::size_t> action;  // partition index -> image partition index
};

inline InducedPermutation induced_action(const std::vector<int>& sigma,
                                         const PartitionScheme& scheme) {
  if (static_cast<int>(sigma.size()) != scheme.n)
    throw std::invalid_argument("induced_action: permutation size mismatch");
  InducedPermutation out;
  out.source = sigma;
  out.action.resize(scheme.partitions.size());
  for (std::size_t i = 0; i < scheme.partitions.size(); ++i) {
    std::vector<std::vector<int>> img;
    for (const SubsetIndex& blk : scheme.partitions[i].blocks) {
      std::vector<int> b;
      for (int m : blk.members) b.push_back(sigma[static_cast<std::size_t>(m) - 1]);
      img.push_back(std::move(b));
    }
    out.action[i] = scheme.partition_index(canonical_partition(std::move(img)));
  }
  return out;
}

/// Applies the coordinate action: (sigma . v)[action[i]] = v[i].
template <typename T>
std::vector<T> apply_action(const InducedPermutation& perm, const std::vector<T>& v) {
  std::vector<T> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[perm.action[i]] = v[i];
  return out;
}

inline std::vector<InducedPermutation> all_induced_actions(const PartitionScheme& scheme) {
  std::vector<int> sigma(static_cast<std::size_t>(scheme.n));
  std::iota(sigma.begin(), sigma.end(), 1);
  std::vector<InducedPermutation> out;
  do {
    out.push_back(induced_action(sigma, scheme));
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return out;
}

struct FacetOrbit {
  IntVec canonical_representative;  // lexicographically minimal image
  std::vector<std::size_t> members;
  std::size_t size = 0;
};

/// Partitions a facet list into S_n orbits. Throws when the list is not
/// closed under the action. Orbits ordered by canonical representative.
inline std::vector<FacetOrbit> orbit_classify(const std::vector<IntVec>& facets,
                                              const PartitionScheme& scheme) {
  const std::vector<InducedPermutation> actions = all_induced_actions(scheme);
  std::map<IntVec, std::size_t> index_of;
  for (std::size_t i = 0; i < facets.size(); ++i) index_of.emplace(facets[i], i);

  std::vector<bool> seen(facets.size(), false);
  std::vector<FacetOrbit> orbits;
  for (std::size_t i = 0; i < facets.size(); ++i) {
    if (seen[i]) continue;
    FacetOrbit orb;
    orb.canonical_representative = facets[i];
    for (const InducedPermutation& perm : actions) {
      IntVec img = apply_action(perm, facets[i]);
      auto it = index_of.find(img);
      if (it == index_of.end())
        throw std::runtime_error("orbit_classify: facet set not closed under the action");
      if (!seen[it->second]) {
        seen[it->second] = true;
        orb.members.push_back(it->second);
      }
      if (img < orb.canonical_representative) orb.canonical_representative = std::move(img);
    }
    std::sort(orb.members.begin(), orb.members.end());
    orb.size = orb.members.size();
    orbits.push_back(std::move(orb));
  }
  std::sort(orbits.begin(), orbits.end(), [](const FacetOrbit& a, const FacetOrbit& b) {
    return a.canonical_representative < b.canonical_representative;
  });
  return orbits;
}

inline IntVec canonical_image(const IntVec& v, const std::vector<InducedPermutation>& actions) {
  IntVec best = v;
  for (const InducedPermutation& perm : actions) {
    IntVec img = apply_action(perm, v);
    if (img < best) best = std::move(img);
  }
  return best;
}

// ============================================================
// The eight inequality types for (6,2), shipped as data
// ============================================================

/// Coefficient columns keyed by type number 1..8, each in the canonical
/// partition-coordinate order of the scheme.
struct TypeTable {
  std::vector<std::string> row_labels;  // file row order
  std::vector<IntVec> columns;          // columns[t-1] in canonical order
};

inline TypeTable load_type_table(const std::string& path, const PartitionScheme& scheme) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  TypeTable table;
  table.columns.assign(8, IntVec(scheme.partitions.size(), 0));
  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error("empty table file");
  std::size_t rows = 0;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream ss(line);
    std::string cell;
    std::getline(ss, cell, ',');
    std::size_t pos = scheme.partition_index(parse_partition(cell));
    table.row_labels.push_back(cell);
    for (int t = 0; t < 8; ++t) {
      if (!std::getline(ss, cell, ',')) throw std::runtime_error("short row in table file");
      table.columns[static_cast<std::size_t>(t)][pos] = Int(cell);
    }
    ++rows;
  }
  if (rows != scheme.partitions.size()) throw std::runtime_error("wrong row count in table file");
  return table;
}

struct TypeMatch {
  int type = 0;                 // 1..8
  bool is_facet = false;
  std::size_t facet_index = 0;  // valid when is_facet
  std::size_t orbit_index = 0;  // valid when is_facet
};

struct MatchReport {
  std::vector<TypeMatch> entries;  // one per type, in type order
  bool all_facets = false;
  bool bijective = false;  // the 8 types hit 8 distinct orbits
};

/// Checks each type column against the facet list and maps it to its orbit.
inline MatchReport match_type_table(const TypeTable& table, const std::vector<IntVec>& facets,
                                    const std::vector<FacetOrbit>& orbits) {
  std::map<IntVec, std::size_t> index_of;
  for (std::size_t i = 0; i < facets.size(); ++i) index_of.emplace(facets[i], i);
  std::vector<std::size_t> orbit_of(facets.size());
  for (std::size_t o = 0; o < orbits.size(); ++o)
    for (std::size_t m : orbits[o].members) orbit_of[m] = o;

  MatchReport rep;
  rep.all_facets = true;
  std::vector<std::size_t> hit;
  for (int t = 1; t <= 8; ++t) {
    TypeMatch m;
    m.type = t;
    auto it = index_of.find(table.columns[static_cast<std::size_t>(t - 1)]);
    if (it != index_of.end()) {
      m.is_facet = true;
      m.facet_index = it->second;
      m.orbit_index = orbit_of[it->second];
      hit.push_back(m.orbit_index);
    } else {
      rep.all_facets = false;
    }
    rep.entries.push_back(m);
  }
  std::sort(hit.begin(), hit.end());
  rep.bijective = rep.all_facets &&
                  std::adjacent_find(hit.begin(), hit.end()) == hit.end() &&
                  hit.size() == orbits.size();
  return rep;
}

}  // namespace zc
