#pragma once

#include <map>
#include <utility>
#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include "zonocone/zonocone.hpp"

namespace zt {

using namespace zc;

struct Built {
  PartitionScheme scheme;
  std::vector<Generator> generators;
  Cone cone;
  std::vector<FacetOrbit> orbits;
};

/// Cones are expensive; build each (n,d) once per test process.
inline const Built& built(int n, int d) {
  static std::map<std::pair<int, int>, Built> cache;
  auto key = std::make_pair(n, d);
  auto it = cache.find(key);
  if (it == cache.end()) {
    Built b;
    b.scheme = enumerate_scheme(n, d);
    b.generators = generators_for(n, d, b.scheme);
    std::vector<RatVec> pts;
    for (const Generator& g : b.generators) {
      RatVec v(g.ray.size());
      for (std::size_t i = 0; i < g.ray.size(); ++i) v[i] = Rat(g.ray[i]);
      pts.push_back(std::move(v));
    }
    b.cone = conic_hull(pts);
    b.orbits = orbit_classify(b.cone.facets, b.scheme);
    it = cache.emplace(key, std::move(b)).first;
  }
  return it->second;
}

inline IntVec iv(std::initializer_list<long long> xs) {
  IntVec v;
  for (long long x : xs) v.push_back(Int(x));
  return v;
}

inline RatVec rv(std::initializer_list<long long> xs) {
  RatVec v;
  for (long long x : xs) v.push_back(Rat(x));
  return v;
}

inline Zonotope zono(std::initializer_list<std::initializer_list<long long>> gens) {
  Zonotope z;
  for (auto& g : gens) z.generators.push_back(Segment{rv(g)});
  return z;
}

}  // namespace zt
