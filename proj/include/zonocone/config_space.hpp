#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "zonocone/mixed_volume.hpp"
#include "zonocone/rational.hpp"
#include "zonocone/scheme.hpp"

namespace zc {

/// Vector of mixed volumes V_I over all d-subsets I of [n], for a fixed
/// n-tuple of bodies.
struct PureConfiguration {
  const PartitionScheme* scheme = nullptr;
  RatVec values;  // indexed by scheme->subsets
};

/// Vector of partition monomials V_{I_1} ... V_{I_k} over all partitions.
struct MonomialPoint {
  const PartitionScheme* scheme = nullptr;
  RatVec values;  // indexed by scheme->partitions
};

inline void check_bodies(const std::vector<Zonotope>& bodies, const PartitionScheme& scheme) {
  if (static_cast<int>(bodies.size()) != scheme.n)
    throw std::invalid_argument("expected n bodies");
  for (const Zonotope& z : bodies)
    for (const Segment& g : z.generators)
      if (static_cast<int>(g.direction.size()) != scheme.d)
        throw std::invalid_argument("body dimension mismatch");
}

/// PV: entry at subset I is the mixed volume of the bodies indexed by I.
inline PureConfiguration pure_config(const std::vector<Zonotope>& bodies,
                                     const PartitionScheme& scheme) {
  check_bodies(bodies, scheme);
  PureConfiguration out;
  out.scheme = &scheme;
  out.values.reserve(scheme.subsets.size());
  std::vector<Zonotope> pick(scheme.d);
  for (const SubsetIndex& s : scheme.subsets) {
    for (int j = 0; j < scheme.d; ++j) pick[j] = bodies[s.members[j] - 1];
    out.values.push_back(mv_zonotopes(pick));
  }
  return out;
}

/// The partition monomial map: entry at I_1|...|I_k is x_{I_1} ... x_{I_k}.
inline MonomialPoint phi_monomial(const PureConfiguration& x) {
  MonomialPoint out;
  out.scheme = x.scheme;
  const PartitionScheme& scheme = *x.scheme;
  out.values.reserve(scheme.partitions.size());
  for (const PartitionIndex& p : scheme.partitions) {
    Rat prod = 1;
    for (const SubsetIndex& blk : p.blocks) prod *= x.values[scheme.subset_index(blk)];
    out.values.push_back(prod);
  }
  return out;
}

/// Phi = phi_monomial of pure_config; Minkowski multilinear in each slot.
inline MonomialPoint big_phi(const std::vector<Zonotope>& bodies, const PartitionScheme& scheme) {
  return phi_monomial(pure_config(bodies, scheme));
}

/// Coordinates of the absolute Grassmannian point of an n-tuple of vectors:
/// entry at I is |det(u_I)|, i.e. d! times the segment mixed volume.
inline PureConfiguration abs_grassmann_point(const std::vector<RatVec>& vectors,
                                             const PartitionScheme& scheme) {
  if (static_cast<int>(vectors.size()) != scheme.n)
    throw std::invalid_argument("expected n vectors");
  PureConfiguration out;
  out.scheme = &scheme;
  out.values.reserve(scheme.subsets.size());
  const int d = scheme.d;
  for (const SubsetIndex& s : scheme.subsets) {
    RatMat m(d, RatVec(d));
    for (int j = 0; j < d; ++j) {
      const RatVec& u = vectors[s.members[j] - 1];
      if (static_cast<int>(u.size()) != d) throw std::invalid_argument("vector dimension mismatch");
      for (int i = 0; i < d; ++i) m[i][j] = u[i];
    }
    out.values.push_back(rat_abs(det(m)));
  }
  return out;
}

/// Phi of a tuple of single segments, given by their direction vectors.
inline MonomialPoint big_phi_segments(const std::vector<RatVec>& directions,
                                      const PartitionScheme& scheme) {
  std::vector<Zonotope> bodies;
  bodies.reserve(directions.size());
  for (const RatVec& u : directions) bodies.push_back(segment_body(u));
  return big_phi(bodies, scheme);
}

}  // namespace zc
