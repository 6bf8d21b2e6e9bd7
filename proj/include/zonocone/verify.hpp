#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "zonocone/cone.hpp"
#include "zonocone/config_space.hpp"
#include "zonocone/linalg.hpp"
#include "zonocone/mixed_volume.hpp"
#include "zonocone/rational.hpp"
#include "zonocone/scheme.hpp"
#include "zonocone/symmetry.hpp"

namespace zc {

// ============================================================
// Closed-form inequality family for six bodies in R^3
// ============================================================

struct InequalityFamily63 {
  std::vector<IntVec> normals;  // deduplicated, sorted
  std::size_t coordinate_count = 0;
  std::size_t lower_count = 0;
  std::size_t upper_count = 0;
};

namespace detail {

/// Coordinate position of vv_I: the partition {I, complement}.
inline std::size_t vv_position(std::vector<int> I, const PartitionScheme& scheme) {
  std::vector<int> comp;
  for (int m = 1; m <= scheme.n; ++m)
    if (std::find(I.begin(), I.end(), m) == I.end()) comp.push_back(m);
  return scheme.partition_index(canonical_partition({std::move(I), std::move(comp)}));
}

}  // namespace detail

/// The 130 normals: vv_I >= 0, and for each 2-subset J and l in J^c the pair
///   vv_{J+l} <= sum_{m in J^c \ l} vv_{J+m}
///   sum_{m in J^c \ l} vv_{J+m} <= vv_{J+l} + sum_{P splits J} vv_P
inline InequalityFamily63 family_63(const PartitionScheme& scheme) {
  if (scheme.n != 6 || scheme.d != 3)
    throw std::invalid_argument("family_63: scheme must be (6,3)");
  const std::size_t N = scheme.partitions.size();
  InequalityFamily63 fam;
  std::set<IntVec> dedup;
  auto push = [&](IntVec v, std::size_t& counter) {
    if (dedup.insert(v).second) {
      fam.normals.push_back(std::move(v));
      ++counter;
    }
  };
  for (std::size_t i = 0; i < N; ++i) {
    IntVec v(N, 0);
    v[i] = 1;
    push(std::move(v), fam.coordinate_count);
  }
  for (int j1 = 1; j1 <= 6; ++j1)
    for (int j2 = j1 + 1; j2 <= 6; ++j2) {
      std::vector<int> rest;
      for (int m = 1; m <= 6; ++m)
        if (m != j1 && m != j2) rest.push_back(m);
      std::vector<std::size_t> split;  // partitions separating j1 from j2
      for (std::size_t p = 0; p < N; ++p) {
        const SubsetIndex& first = scheme.partitions[p].blocks[0];
        bool has1 = std::find(first.members.begin(), first.members.end(), j1) != first.members.end();
        bool has2 = std::find(first.members.begin(), first.members.end(), j2) != first.members.end();
        if (has1 != has2) split.push_back(p);
      }
      for (int ell : rest) {
        IntVec lower(N, 0), upper(N, 0);
        std::size_t pos_ell = detail::vv_position({j1, j2, ell}, scheme);
        lower[pos_ell] = -1;
        upper[pos_ell] = 1;
        for (int m : rest)
          if (m != ell) {
            std::size_t pos = detail::vv_position({j1, j2, m}, scheme);
            lower[pos] += 1;
            upper[pos] -= 1;
          }
        for (std::size_t p : split) upper[p] += 1;
        push(std::move(lower), fam.lower_count);
        push(std::move(upper), fam.upper_count);
      }
    }
  std::sort(fam.normals.begin(), fam.normals.end());
  return fam;
}

struct FamilyComparison {
  bool equal = false;
  std::vector<IntVec> missing;  // family members absent from the facets
  std::vector<IntVec> extra;    // facets absent from the family
};

inline FamilyComparison check_family_equals_facets(const InequalityFamily63& fam,
                                                   const Cone& cone) {
  std::set<IntVec> a(fam.normals.begin(), fam.normals.end());
  std::set<IntVec> b(cone.facets.begin(), cone.facets.end());
  FamilyComparison cmp;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(cmp.missing));
  std::set_difference(b.begin(), b.end(), a.begin(), a.end(), std::back_inserter(cmp.extra));
  cmp.equal = cmp.missing.empty() && cmp.extra.empty();
  return cmp;
}

// ============================================================
// The six-body counterexample in the plane
// ============================================================

/// Four segments and two triangles; the tuple whose monomial point leaves the
/// symmetric cone through a Type-3 facet.
inline std::vector<ConvexPolygon> counterexample_bodies() {
  auto seg = [](int x, int y) {
    return convex_polygon({Vec2{0, 0}, Vec2{x, y}});
  };
  std::vector<ConvexPolygon> b;
  b.push_back(seg(1, 0));
  b.push_back(seg(0, 1));
  b.push_back(seg(-1, 1));
  b.push_back(seg(1, 1));
  b.push_back(convex_polygon({Vec2{-1, 1}, Vec2{0, 0}, Vec2{1, 1}}));
  b.push_back(convex_polygon({Vec2{0, 0}, Vec2{1, 0}, Vec2{0, 1}}));
  return b;
}

/// Phi for general planar convex bodies, via the polarization formula.
inline MonomialPoint phi_polygons(const std::vector<ConvexPolygon>& bodies,
                                  const PartitionScheme& scheme) {
  if (scheme.d != 2) throw std::invalid_argument("phi_polygons: d must be 2");
  if (static_cast<int>(bodies.size()) != scheme.n)
    throw std::invalid_argument("phi_polygons: expected n bodies");
  PureConfiguration pv;
  pv.scheme = &scheme;
  pv.values.reserve(scheme.subsets.size());
  for (const SubsetIndex& s : scheme.subsets)
    pv.values.push_back(mv_polygons(bodies[s.members[0] - 1], bodies[s.members[1] - 1]));
  return phi_monomial(pv);
}

struct CounterexampleReport {
  MonomialPoint point;
  std::vector<std::size_t> violated_facets;
  Rat min_value = 0;  // most negative facet value
  std::set<std::size_t> violating_orbits;
  bool strict_violation = false;
};

inline CounterexampleReport counterexample_check(const Cone& cone,
                                                 const std::vector<FacetOrbit>& orbits,
                                                 const PartitionScheme& scheme) {
  CounterexampleReport rep;
  rep.point = phi_polygons(counterexample_bodies(), scheme);
  std::vector<std::size_t> orbit_of(cone.facets.size());
  for (std::size_t o = 0; o < orbits.size(); ++o)
    for (std::size_t m : orbits[o].members) orbit_of[m] = o;
  for (std::size_t f = 0; f < cone.facets.size(); ++f) {
    Rat val = dot(cone.facets[f], rep.point.values);
    if (val < 0) {
      rep.violated_facets.push_back(f);
      rep.violating_orbits.insert(orbit_of[f]);
      if (val < rep.min_value) rep.min_value = val;
    }
  }
  rep.strict_violation = !rep.violated_facets.empty();
  return rep;
}

// ============================================================
// Fiber invariance: matchings of K_n and the vertex-edge map
// ============================================================

struct FiberReport {
  int n = 0;
  std::size_t edge_count = 0;
  std::size_t matching_count = 0;
  std::size_t rank_f = 0;
  std::size_t rank_g = 0;
  std::size_t expected_rank_f = 0;
  bool fg_all_ones = false;
  bool f_ones_half_n = false;
  bool ok = false;
};

inline std::vector<std::vector<std::pair<int, int>>> perfect_matchings(int n) {
  std::vector<std::vector<std::pair<int, int>>> out;
  std::vector<std::pair<int, int>> cur;
  std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
  auto rec = [&](auto&& self) -> void {
    int low = 0;
    for (int v = 1; v <= n; ++v)
      if (!used[static_cast<std::size_t>(v)]) {
        low = v;
        break;
      }
    if (low == 0) {
      out.push_back(cur);
      return;
    }
    used[static_cast<std::size_t>(low)] = true;
    for (int w = low + 1; w <= n; ++w) {
      if (used[static_cast<std::size_t>(w)]) continue;
      used[static_cast<std::size_t>(w)] = true;
      cur.emplace_back(low, w);
      self(self);
      cur.pop_back();
      used[static_cast<std::size_t>(w)] = false;
    }
    used[static_cast<std::size_t>(low)] = false;
  };
  rec(rec);
  return out;
}

inline FiberReport fiber_rank_check(int n) {
  if (n != 4 && n != 6 && n != 8) throw std::invalid_argument("fiber_rank_check: n in {4,6,8}");
  FiberReport rep;
  rep.n = n;
  std::map<std::pair<int, int>, std::size_t> edge_pos;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) edge_pos.emplace(std::make_pair(i, j), edge_pos.size());
  rep.edge_count = edge_pos.size();
  auto matchings = perfect_matchings(n);
  rep.matching_count = matchings.size();

  IntMat f(rep.matching_count, IntVec(rep.edge_count, 0));
  for (std::size_t m = 0; m < matchings.size(); ++m)
    for (auto [i, j] : matchings[m]) f[m][edge_pos.at({i, j})] = 1;
  IntMat g(rep.edge_count, IntVec(static_cast<std::size_t>(n), 0));
  for (const auto& [e, pos] : edge_pos) {
    g[pos][static_cast<std::size_t>(e.first) - 1] = 1;
    g[pos][static_cast<std::size_t>(e.second) - 1] = 1;
  }

  rep.rank_f = rank(f);
  rep.rank_g = rank(g);
  rep.expected_rank_f = rep.edge_count - static_cast<std::size_t>(n) + 1;

  rep.fg_all_ones = true;
  for (int v = 0; v < n; ++v)
    for (std::size_t m = 0; m < f.size(); ++m) {
      Int s = 0;
      for (std::size_t e = 0; e < rep.edge_count; ++e) s += f[m][e] * g[e][static_cast<std::size_t>(v)];
      if (s != 1) rep.fg_all_ones = false;
    }
  rep.f_ones_half_n = true;
  for (std::size_t m = 0; m < f.size(); ++m) {
    Int s = 0;
    for (std::size_t e = 0; e < rep.edge_count; ++e) s += f[m][e];
    if (s != n / 2) rep.f_ones_half_n = false;
  }
  rep.ok = rep.rank_f == rep.expected_rank_f && rep.rank_g == static_cast<std::size_t>(n) &&
           rep.fg_all_ones && rep.f_ones_half_n;
  return rep;
}

// ============================================================
// Splitting a doubled point preserves the ray
// ============================================================

struct LemmaSplitReport {
  bool equal = false;
  bool support_ok = false;   // exactly 6 nonzero coordinates, all 1/8
  bool permuted_ok = false;  // equality survives a relabeling
  bool ok = false;
};

inline LemmaSplitReport lemma_split_check(const PartitionScheme& scheme) {
  if (scheme.n != 6 || scheme.d != 2)
    throw std::invalid_argument("lemma_split_check: scheme must be (6,2)");
  const RatVec e1{1, 0}, e2{0, 1}, e12{1, 1};
  std::vector<RatVec> u{e2, e2, e2, e12, e12, e12};
  std::vector<RatVec> up{e2, e2, e2, e12, e12, e1};
  MonomialPoint a = big_phi_segments(u, scheme);
  MonomialPoint b = big_phi_segments(up, scheme);
  LemmaSplitReport rep;
  rep.equal = a.values == b.values;
  std::size_t nonzero = 0;
  bool all_eighth = true;
  for (const Rat& v : a.values)
    if (v != 0) {
      ++nonzero;
      if (v != Rat(1, 8)) all_eighth = false;
    }
  rep.support_ok = nonzero == 6 && all_eighth;
  // relabeled variant: rotate the tuple, equality must persist
  std::vector<RatVec> ur(6), upr(6);
  for (int i = 0; i < 6; ++i) {
    ur[static_cast<std::size_t>((i + 1) % 6)] = u[static_cast<std::size_t>(i)];
    upr[static_cast<std::size_t>((i + 1) % 6)] = up[static_cast<std::size_t>(i)];
  }
  rep.permuted_ok = big_phi_segments(ur, scheme).values == big_phi_segments(upr, scheme).values;
  rep.ok = rep.equal && rep.support_ok && rep.permuted_ok;
  return rep;
}

// ============================================================
// Two-face checks
// ============================================================

struct TwoFaceReport {
  int pairs_33_checked = 0;
  bool pairs_33_ok = false;         // parallelogram witness, all (3,3) pairs
  bool mixed_path_ok = false;       // segment witness for the nested case
  bool obstruction_exact_ok = false;
  long long obstruction_trials = 0;
  long long witnesses_found = 0;    // expected 0; sampling evidence only
  uint64_t seed = 0;
  bool ok = false;
};

namespace detail {

inline std::vector<RatVec> pure_33_directions(const std::vector<int>& half) {
  std::vector<RatVec> dirs(6, RatVec{1, 0});
  for (int i : half) dirs[static_cast<std::size_t>(i) - 1] = RatVec{0, 1};
  return dirs;
}

inline std::vector<RatVec> pure_222_directions(const PartitionIndex& p) {
  const std::array<RatVec, 3> d{RatVec{1, 0}, RatVec{0, 1}, RatVec{1, 1}};
  std::vector<RatVec> dirs(6);
  for (int blk = 0; blk < 3; ++blk)
    for (int i : p.blocks[static_cast<std::size_t>(blk)].members)
      dirs[static_cast<std::size_t>(i) - 1] = d[static_cast<std::size_t>(blk)];
  return dirs;
}

inline RatVec combine(const Rat& s, const RatVec& a, const Rat& t, const RatVec& b) {
  RatVec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = s * a[i] + t * b[i];
  return out;
}

inline RatVec rat_of(const IntVec& v) {
  RatVec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = Rat(v[i]);
  return out;
}

/// Exact decomposition test: phi == alpha r1 + beta r2 with alpha, beta > 0.
/// Requires coordinates where exactly one ray is nonzero (true for all pairs
/// used here).
inline bool in_open_two_face(const RatVec& phi, const IntVec& r1, const IntVec& r2) {
  std::size_t i1 = r1.size(), i2 = r2.size();
  for (std::size_t i = 0; i < r1.size(); ++i) {
    if (r1[i] != 0 && r2[i] == 0 && i1 == r1.size()) i1 = i;
    if (r2[i] != 0 && r1[i] == 0 && i2 == r2.size()) i2 = i;
  }
  if (i1 == r1.size() || i2 == r2.size())
    throw std::logic_error("in_open_two_face: rays lack private support");
  Rat alpha = phi[i1] / Rat(r1[i1]);
  Rat beta = phi[i2] / Rat(r2[i2]);
  if (!(alpha > 0 && beta > 0)) return false;
  for (std::size_t i = 0; i < phi.size(); ++i)
    if (phi[i] != alpha * Rat(r1[i]) + beta * Rat(r2[i])) return false;
  return true;
}

inline bool is_ray_of(const Cone& cone, const RatVec& phi) {
  IntVec r = primitive_ray(phi);
  return std::find(cone.rays.begin(), cone.rays.end(), r) != cone.rays.end();
}

struct RandomZonotopes {
  std::vector<Zonotope> bodies;
};

inline RandomZonotopes random_zonotope_tuple(std::mt19937_64& rng, int n, int d) {
  RandomZonotopes out;
  for (int b = 0; b < n; ++b) {
    Zonotope z;
    std::size_t k = 1 + static_cast<std::size_t>(rng() % 3);
    for (std::size_t g = 0; g < k; ++g) {
      RatVec dir(static_cast<std::size_t>(d));
      for (int c = 0; c < d; ++c)
        dir[static_cast<std::size_t>(c)] = Rat(static_cast<long long>(rng() % 19) - 9);
      z.generators.push_back(Segment{std::move(dir)});
    }
    out.bodies.push_back(std::move(z));
  }
  return out;
}

inline std::string describe(const RandomZonotopes& t) {
  std::ostringstream os;
  for (std::size_t b = 0; b < t.bodies.size(); ++b) {
    if (b) os << "; ";
    os << "Z" << b + 1 << "=";
    for (std::size_t g = 0; g < t.bodies[b].generators.size(); ++g) {
      if (g) os << "+";
      os << "[0,(";
      const RatVec& d = t.bodies[b].generators[g].direction;
      for (std::size_t c = 0; c < d.size(); ++c) {
        if (c) os << ",";
        os << to_string(d[c]);
      }
      os << ")]";
    }
  }
  return os.str();
}

}  // namespace detail

/// (i) every pair of halves rays carries a constructive parallelogram witness;
/// (ii) the nested mixed pair carries a two-leg segment witness;
/// (iii) the blocked pairs satisfy the exact coordinate identities that drive
///       the obstruction, and a randomized search finds no interior preimage.
inline TwoFaceReport two_face_checks(const PartitionScheme& scheme, const Cone& cone,
                                     long long trials, uint64_t seed) {
  if (scheme.n != 6 || scheme.d != 2)
    throw std::invalid_argument("two_face_checks: scheme must be (6,2)");
  TwoFaceReport rep;
  rep.seed = seed;
  const RatVec e1{1, 0}, e2{0, 1}, e12{1, 1};
  const std::vector<std::pair<Rat, Rat>> params{
      {Rat(1), Rat(0)}, {Rat(3, 4), Rat(1, 4)}, {Rat(1, 2), Rat(1, 2)},
      {Rat(1, 4), Rat(3, 4)}, {Rat(0), Rat(1)}};

  // ---- (i) pairs of halves rays ----
  PartitionScheme halves = enumerate_scheme(6, 3);
  bool ok33 = true;
  for (std::size_t x = 0; x < halves.partitions.size() && ok33; ++x)
    for (std::size_t y = x + 1; y < halves.partitions.size() && ok33; ++y) {
      std::vector<int> A = halves.partitions[x].blocks[0].members;
      std::vector<int> B = halves.partitions[y].blocks[0].members;
      std::vector<int> inter;
      std::set_intersection(A.begin(), A.end(), B.begin(), B.end(), std::back_inserter(inter));
      if (inter.size() != 2) {  // use the complementary half instead
        B = halves.partitions[y].blocks[1].members;
        inter.clear();
        std::set_intersection(A.begin(), A.end(), B.begin(), B.end(), std::back_inserter(inter));
      }
      if (inter.size() != 2) throw std::logic_error("two_face_checks: bad halves pair");
      int c = 0, d = 0;
      for (int i : A)
        if (std::find(B.begin(), B.end(), i) == B.end()) c = i;
      for (int i : B)
        if (std::find(A.begin(), A.end(), i) == A.end()) d = i;

      MonomialPoint p1 = big_phi_segments(detail::pure_33_directions(A), scheme);
      MonomialPoint p2 = big_phi_segments(detail::pure_33_directions(B), scheme);
      ok33 = ok33 && detail::is_ray_of(cone, p1.values) && detail::is_ray_of(cone, p2.values);
      for (const auto& [s, t] : params) {
        std::vector<Zonotope> w(6);
        for (int i : inter) w[static_cast<std::size_t>(i) - 1] = segment_body(e2);
        w[static_cast<std::size_t>(c) - 1] = segment_body(e12);
        w[static_cast<std::size_t>(d) - 1] =
            Zonotope{{Segment{RatVec{s, 0}}, Segment{RatVec{0, t}}}};
        for (int i = 1; i <= 6; ++i)
          if (w[static_cast<std::size_t>(i) - 1].generators.empty() && i != c && i != d &&
              std::find(inter.begin(), inter.end(), i) == inter.end())
            w[static_cast<std::size_t>(i) - 1] = segment_body(e1);
        MonomialPoint pw = big_phi(w, scheme);
        if (pw.values != detail::combine(s, p1.values, t, p2.values)) ok33 = false;
      }
      ++rep.pairs_33_checked;
    }
  rep.pairs_33_ok = ok33;

  // ---- (ii) nested mixed pair: halves {1,2,3}|{4,5,6} over pairs 12|34|56 ----
  {
    auto path_phi = [&](const Rat& l) {
      std::vector<Zonotope> z{segment_body(e2),
                              segment_body(e2),
                              segment_body(RatVec{1 - l, l}),
                              segment_body(e12),
                              segment_body(e1),
                              segment_body(e1)};
      return big_phi(z, scheme);
    };
    MonomialPoint p0 = path_phi(0), ph = path_phi(Rat(1, 2)), p1 = path_phi(1);
    bool okm = detail::is_ray_of(cone, p0.values) && detail::is_ray_of(cone, ph.values) &&
               detail::is_ray_of(cone, p1.values);
    okm = okm &&
          primitive_ray(p1.values) ==
              primitive_ray(big_phi_segments(detail::pure_33_directions({1, 2, 3}), scheme).values) &&
          primitive_ray(p0.values) ==
              primitive_ray(big_phi_segments(detail::pure_33_directions({1, 2, 4}), scheme).values) &&
          primitive_ray(ph.values) ==
              primitive_ray(big_phi_segments(
                                detail::pure_222_directions(canonical_partition({{1, 2}, {3, 4}, {5, 6}})),
                                scheme)
                                .values);
    for (const Rat& l : {Rat(0), Rat(1, 8), Rat(1, 4), Rat(3, 8), Rat(1, 2)})
      if (path_phi(l).values != detail::combine(1 - 2 * l, p0.values, 2 * l, ph.values)) okm = false;
    for (const Rat& l : {Rat(1, 2), Rat(5, 8), Rat(3, 4), Rat(7, 8), Rat(1)})
      if (path_phi(l).values != detail::combine(2 - 2 * l, ph.values, 2 * l - 1, p1.values))
        okm = false;
    rep.mixed_path_ok = okm;
  }

  // ---- (iii) blocked pairs ----
  struct BlockedCase {
    IntVec r1, r2;
    // positions whose x-coordinates must equal 0, s, t, s+t when x = s r1 + t r2
    std::size_t zero_pos, s_pos, t_pos, st_pos;
    bool plucker_style;  // share-one-part case: obstruction is quadratic
    bool mixed;          // st_pos reads the second coefficient, not the sum
  };
  std::vector<BlockedCase> cases;
  auto ray222 = [&](std::vector<std::vector<int>> blocks) {
    return primitive_ray(
        big_phi_segments(detail::pure_222_directions(canonical_partition(std::move(blocks))), scheme)
            .values);
  };
  auto ray33 = [&](const std::vector<int>& half) {
    return primitive_ray(big_phi_segments(detail::pure_33_directions(half), scheme).values);
  };
  auto pos_of = [&](const std::string& s) {
    return scheme.partition_index(parse_partition(s));
  };
  {
    // share one part
    BlockedCase c;
    c.r1 = ray222({{1, 2}, {3, 4}, {5, 6}});
    c.r2 = ray222({{1, 3}, {2, 4}, {5, 6}});
    c.zero_pos = pos_of("12|34|56");
    c.s_pos = pos_of("13|25|46");   // V13 (= s when x = s r1 + t r2)
    c.t_pos = pos_of("12|35|46");   // V12 (= t)
    c.st_pos = pos_of("14|25|36");  // V14 (= s+t)
    c.plucker_style = true;
    c.mixed = false;
    cases.push_back(std::move(c));
  }
  {
    // no shared part, case (a)
    BlockedCase c;
    c.r1 = ray222({{1, 2}, {3, 4}, {5, 6}});
    c.r2 = ray222({{1, 6}, {2, 3}, {4, 5}});
    c.zero_pos = pos_of("12|36|45");
    c.s_pos = pos_of("16|23|45");
    c.t_pos = pos_of("12|34|56");
    c.st_pos = pos_of("14|25|36");
    c.plucker_style = false;
    c.mixed = false;
    cases.push_back(std::move(c));
  }
  {
    // mixed types, not nested
    BlockedCase c;
    c.r1 = ray33({1, 3, 5});
    c.r2 = ray222({{1, 2}, {3, 4}, {5, 6}});
    c.zero_pos = pos_of("13|24|56");
    c.s_pos = pos_of("12|34|56");   // only r1 supported here
    c.t_pos = pos_of("13|25|46");   // only r2 supported here
    c.st_pos = pos_of("15|24|36");  // equals the r2 coefficient as well
    c.plucker_style = false;
    c.mixed = true;
    cases.push_back(std::move(c));
  }

  const std::vector<std::pair<Rat, Rat>> st_samples{
      {Rat(1), Rat(1)}, {Rat(1, 2), Rat(3, 2)}, {Rat(2), Rat(5)}};
  bool okx = true;
  for (const BlockedCase& c : cases) {
    for (const auto& [s, t] : st_samples) {
      RatVec x = detail::combine(s, detail::rat_of(c.r1), t, detail::rat_of(c.r2));
      if (x[c.zero_pos] != 0) okx = false;
      if (c.mixed) {
        // coordinates read off the two coefficients directly
        if (x[c.s_pos] != s || x[c.t_pos] != t || x[c.st_pos] != t) okx = false;
      } else {
        if (x[c.s_pos] != s || x[c.t_pos] != t || x[c.st_pos] != s + t) okx = false;
      }
      if (c.plucker_style) {
        // forced values contradict the four-body inequality: s^2 + t^2 >= (s+t)^2 fails
        if (!((s + t) * (s + t) > s * s + t * t)) okx = false;
      }
    }
  }
  rep.obstruction_exact_ok = okx;

  // randomized search for interior preimages (expected to find none)
  rep.obstruction_trials = trials;
  for (long long t = 0; t < trials; ++t) {
    std::mt19937_64 rng(seed ^ (0x9E3779B97F4A7C15ULL * static_cast<uint64_t>(t + 1)));
    detail::RandomZonotopes z = detail::random_zonotope_tuple(rng, 6, 2);
    MonomialPoint phi = big_phi(z.bodies, scheme);
    for (const BlockedCase& c : cases)
      if (detail::in_open_two_face(phi.values, c.r1, c.r2)) ++rep.witnesses_found;
  }

  rep.ok = rep.pairs_33_ok && rep.mixed_path_ok && rep.obstruction_exact_ok &&
           rep.witnesses_found == 0;
  return rep;
}

// ============================================================
// Randomized membership sampling
// ============================================================

struct SampleReport {
  long long trials = 0;
  long long violations = 0;
  uint64_t seed = 0;
  std::vector<Rat> min_slack_per_orbit;  // over all trials and orbit members
};

/// Draws random zonotope tuples, maps them through Phi, and requires every
/// point to land inside or on the cone. A violation throws with the witness.
inline SampleReport sample_inequalities(const Cone& cone, const PartitionScheme& scheme,
                                        const std::vector<FacetOrbit>& orbits, long long trials,
                                        uint64_t seed, int jobs = 1) {
  if (trials < 1) throw std::invalid_argument("sample_inequalities: trials must be >= 1");
  std::vector<std::size_t> orbit_of(cone.facets.size());
  for (std::size_t o = 0; o < orbits.size(); ++o)
    for (std::size_t m : orbits[o].members) orbit_of[m] = o;

  struct Acc {
    std::vector<Rat> min_slack;
    std::vector<char> init;
    std::string witness;
  };
  if (jobs < 1) jobs = 1;
  std::vector<Acc> accs(static_cast<std::size_t>(jobs));
  auto work = [&](int w) {
    Acc& acc = accs[static_cast<std::size_t>(w)];
    acc.min_slack.assign(orbits.size(), Rat(0));
    acc.init.assign(orbits.size(), 0);
    for (long long t = w; t < trials; t += jobs) {
      std::mt19937_64 rng(seed ^ (0x9E3779B97F4A7C15ULL * static_cast<uint64_t>(t + 1)));
      detail::RandomZonotopes z = detail::random_zonotope_tuple(rng, scheme.n, scheme.d);
      MonomialPoint phi = big_phi(z.bodies, scheme);
      for (std::size_t f = 0; f < cone.facets.size(); ++f) {
        Rat s = dot(cone.facets[f], phi.values);
        if (s < 0 && acc.witness.empty()) acc.witness = detail::describe(z);
        std::size_t o = orbit_of[f];
        if (!acc.init[o] || s < acc.min_slack[o]) {
          acc.min_slack[o] = s;
          acc.init[o] = 1;
        }
      }
    }
  };
  if (jobs == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < jobs; ++w) pool.emplace_back(work, w);
    for (std::thread& th : pool) th.join();
  }

  SampleReport rep;
  rep.trials = trials;
  rep.seed = seed;
  rep.min_slack_per_orbit.assign(orbits.size(), Rat(0));
  std::vector<char> merged(orbits.size(), 0);
  for (const Acc& acc : accs) {
    if (!acc.witness.empty())
      throw std::runtime_error("sample_inequalities: violation witness: " + acc.witness);
    for (std::size_t o = 0; o < orbits.size(); ++o) {
      if (o >= acc.init.size() || !acc.init[o]) continue;
      if (!merged[o] || acc.min_slack[o] < rep.min_slack_per_orbit[o]) {
        rep.min_slack_per_orbit[o] = acc.min_slack[o];
        merged[o] = 1;
      }
    }
  }
  return rep;
}

// ============================================================
// Plücker residuals
// ============================================================

/// det-based two-form coordinates on four planar vectors:
/// x12 x34 - x13 x24 + x14 x23.
inline Rat plucker_residual_2d(const std::array<RatVec, 4>& u) {
  auto d2 = [&](int i, int j) {
    return u[static_cast<std::size_t>(i)][0] * u[static_cast<std::size_t>(j)][1] -
           u[static_cast<std::size_t>(i)][1] * u[static_cast<std::size_t>(j)][0];
  };
  return d2(0, 1) * d2(2, 3) - d2(0, 2) * d2(1, 3) + d2(0, 3) * d2(1, 2);
}

/// x_I = det(u_I) det(u_{I^c}) for six vectors in R^3, I given 1-based.
inline Rat x_pair_product(const std::vector<RatVec>& u, std::vector<int> I) {
  if (u.size() != 6) throw std::invalid_argument("x_pair_product: expected 6 vectors");
  std::sort(I.begin(), I.end());
  std::vector<int> comp;
  for (int m = 1; m <= 6; ++m)
    if (std::find(I.begin(), I.end(), m) == I.end()) comp.push_back(m);
  auto det3 = [&](const std::vector<int>& idx) {
    RatMat m(3, RatVec(3));
    for (int j = 0; j < 3; ++j)
      for (int i = 0; i < 3; ++i)
        m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
            u[static_cast<std::size_t>(idx[static_cast<std::size_t>(j)]) - 1]
             [static_cast<std::size_t>(i)];
    return det(m);
  };
  return det3(I) * det3(comp);
}

/// x123 - x124 + x125 - x126 vanishes identically.
inline Rat plucker_residual_3d(const std::vector<RatVec>& u) {
  return x_pair_product(u, {1, 2, 3}) - x_pair_product(u, {1, 2, 4}) +
         x_pair_product(u, {1, 2, 5}) - x_pair_product(u, {1, 2, 6});
}

/// x123 + x124 + x125 - (x126 + x256 + x236 - x146 - x156 - x136 + x246)
/// vanishes identically.
inline Rat derived_identity_residual_3d(const std::vector<RatVec>& u) {
  return x_pair_product(u, {1, 2, 3}) + x_pair_product(u, {1, 2, 4}) +
         x_pair_product(u, {1, 2, 5}) -
         (x_pair_product(u, {1, 2, 6}) + x_pair_product(u, {2, 5, 6}) +
          x_pair_product(u, {2, 3, 6}) - x_pair_product(u, {1, 4, 6}) -
          x_pair_product(u, {1, 5, 6}) - x_pair_product(u, {1, 3, 6}) +
          x_pair_product(u, {2, 4, 6}));
}

}  // namespace zc
