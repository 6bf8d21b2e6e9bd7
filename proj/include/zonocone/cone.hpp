#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "zonocone/linalg.hpp"
#include "zonocone/rational.hpp"

namespace zc {

struct ConeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Full-dimensional pointed polyhedral cone. Rays are the extreme rays among
/// the input generators, facets are inward normals (<a,x> >= 0 on the cone);
/// both primitive, deduplicated, lexicographically sorted.
/// incidence[f][r] is true when ray r lies on facet f.
struct Cone {
  std::size_t ambient = 0;
  std::vector<IntVec> rays;
  std::vector<IntVec> facets;
  std::vector<std::vector<bool>> incidence;
};

namespace detail {

/// Extreme rays of {y : <y, c> >= 0 for all c in cons} by double description.
/// Requires rank(cons) == N; at most 64 constraints (zero sets are bitmasks).
inline std::vector<IntVec> dual_rays(const std::vector<IntVec>& cons, std::size_t N) {
  if (cons.size() > 64) throw ConeError("double description limited to 64 generators");

  struct DualRay {
    IntVec v;
    uint64_t zero = 0;  // bit i: <v, cons[i]> == 0, over processed constraints
  };

  // initial basis: first N linearly independent constraints in input order
  std::vector<std::size_t> basis;
  {
    IntMat acc;
    for (std::size_t i = 0; i < cons.size() && basis.size() < N; ++i) {
      acc.push_back(cons[i]);
      if (rank(acc) == acc.size())
        basis.push_back(i);
      else
        acc.pop_back();
    }
    if (basis.size() < N) throw ConeError("generators do not span the ambient space");
  }

  // rays of the simplicial dual cone: y_j with M y_j = |det M| e_j,
  // i.e. the columns of sign(det) * adj(M) for M = rows cons[basis]
  std::vector<DualRay> cur;
  {
    IntMat m(N, IntVec(N));
    for (std::size_t t = 0; t < N; ++t) m[t] = cons[basis[t]];
    Int dm = det_bareiss(m);
    for (std::size_t j = 0; j < N; ++j) {
      DualRay r;
      r.v.assign(N, 0);
      for (std::size_t k = 0; k < N; ++k) {
        // cofactor expansion: adj(M)[k][j] = C_{j,k} = (-1)^{j+k} det(M minor j,k)
        IntMat sub;
        sub.reserve(N - 1);
        for (std::size_t a = 0; a < N; ++a) {
          if (a == j) continue;
          IntVec row;
          row.reserve(N - 1);
          for (std::size_t b = 0; b < N; ++b)
            if (b != k) row.push_back(m[a][b]);
          sub.push_back(std::move(row));
        }
        Int c = det_bareiss(std::move(sub));
        if ((j + k) % 2 == 1) c = -c;
        r.v[k] = (dm < 0) ? -c : c;
      }
      r.v = primitive(std::move(r.v));
      for (std::size_t t = 0; t < N; ++t)
        if (t != j) r.zero |= uint64_t{1} << basis[t];
      cur.push_back(std::move(r));
    }
  }

  uint64_t processed = 0;
  for (std::size_t i : basis) processed |= uint64_t{1} << i;

  for (std::size_t i = 0; i < cons.size(); ++i) {
    if ((processed >> i) & 1) continue;
    const IntVec& c = cons[i];
    std::vector<std::size_t> pos, neg;
    std::vector<Int> val(cur.size());
    for (std::size_t k = 0; k < cur.size(); ++k) {
      val[k] = dot(cur[k].v, c);
      if (val[k] > 0)
        pos.push_back(k);
      else if (val[k] < 0)
        neg.push_back(k);
    }
    std::vector<DualRay> next;
    std::set<IntVec> fresh;
    for (std::size_t k = 0; k < cur.size(); ++k)
      if (val[k] >= 0) {
        DualRay r = cur[k];
        if (val[k] == 0) r.zero |= uint64_t{1} << i;
        next.push_back(std::move(r));
      }
    for (std::size_t p : pos)
      for (std::size_t n : neg) {
        uint64_t common = cur[p].zero & cur[n].zero;
        if (static_cast<std::size_t>(std::popcount(common)) + 2 < N) continue;
        bool adjacent = true;
        for (std::size_t k = 0; k < cur.size() && adjacent; ++k)
          if (k != p && k != n && (cur[k].zero & common) == common) adjacent = false;
        if (!adjacent) continue;
        // val[p] * neg - val[n] * pos: nonnegative on all processed
        // constraints, zero exactly on common zeros and on c
        IntVec w(N);
        for (std::size_t t = 0; t < N; ++t)
          w[t] = val[p] * cur[n].v[t] - val[n] * cur[p].v[t];
        w = primitive(std::move(w));
        if (!fresh.insert(w).second) continue;
        DualRay r;
        r.v = std::move(w);
        r.zero = common | (uint64_t{1} << i);
        next.push_back(std::move(r));
      }
    cur = std::move(next);
    processed |= uint64_t{1} << i;
    if (cur.empty()) throw ConeError("dual cone collapsed; generators inconsistent");
  }

  std::vector<IntVec> out;
  out.reserve(cur.size());
  for (DualRay& r : cur) out.push_back(std::move(r.v));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace detail

/// Conic hull by double description. Throws ConeError when the input does not
/// span the ambient space or the hull is not pointed.
inline Cone conic_hull(const std::vector<RatVec>& points) {
  if (points.empty()) throw ConeError("conic_hull: empty input");
  const std::size_t N = points[0].size();
  std::vector<IntVec> gens;
  for (const RatVec& p : points) {
    if (p.size() != N) throw ConeError("conic_hull: mixed dimensions");
    bool zero = std::all_of(p.begin(), p.end(), [](const Rat& x) { return x == 0; });
    if (zero) continue;
    gens.push_back(primitive_ray(p));
  }
  if (gens.empty()) throw ConeError("conic_hull: all points zero");
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());

  Cone cone;
  cone.ambient = N;
  cone.facets = detail::dual_rays(gens, N);

  {
    IntMat m = cone.facets;
    if (rank(std::move(m)) < N) throw ConeError("conic_hull: cone is not pointed");
  }

  // extreme rays: exactly the generators whose tight facets have rank N-1
  for (const IntVec& g : gens) {
    IntMat tight;
    for (const IntVec& f : cone.facets) {
      Int s = dot(f, g);
      if (s < 0) throw ConeError("conic_hull: internal facet violation");
      if (s == 0) tight.push_back(f);
    }
    if (rank(std::move(tight)) == N - 1) cone.rays.push_back(g);
  }

  cone.incidence.assign(cone.facets.size(), std::vector<bool>(cone.rays.size(), false));
  for (std::size_t f = 0; f < cone.facets.size(); ++f)
    for (std::size_t r = 0; r < cone.rays.size(); ++r)
      if (dot(cone.facets[f], cone.rays[r]) == 0) cone.incidence[f][r] = true;
  return cone;
}

/// Dimension of the smallest face containing the given extreme rays: take the
/// facets through all of them, then the rank of every ray on all those facets.
inline std::size_t face_dimension(const Cone& cone, const std::vector<std::size_t>& ray_indices) {
  if (ray_indices.empty()) throw std::invalid_argument("face_dimension: empty ray subset");
  for (std::size_t r : ray_indices)
    if (r >= cone.rays.size()) throw std::invalid_argument("face_dimension: not an extreme ray");
  std::vector<std::size_t> tight;
  for (std::size_t f = 0; f < cone.facets.size(); ++f) {
    bool all = true;
    for (std::size_t r : ray_indices) all = all && cone.incidence[f][r];
    if (all) tight.push_back(f);
  }
  IntMat span;
  for (std::size_t r = 0; r < cone.rays.size(); ++r) {
    bool on_all = true;
    for (std::size_t f : tight) on_all = on_all && cone.incidence[f][r];
    if (on_all) span.push_back(cone.rays[r]);
  }
  return rank(std::move(span));
}

inline std::size_t face_dimension(const Cone& cone, const std::vector<IntVec>& rays) {
  std::vector<std::size_t> idx;
  for (const IntVec& r : rays) {
    auto it = std::find(cone.rays.begin(), cone.rays.end(), primitive(r));
    if (it == cone.rays.end()) throw std::invalid_argument("face_dimension: not an extreme ray");
    idx.push_back(static_cast<std::size_t>(it - cone.rays.begin()));
  }
  return face_dimension(cone, idx);
}

/// True iff every pair of distinct extreme rays spans a 2-face.
inline bool is_2_neighborly(const Cone& cone) {
  for (std::size_t i = 0; i < cone.rays.size(); ++i)
    for (std::size_t j = i + 1; j < cone.rays.size(); ++j)
      if (face_dimension(cone, std::vector<std::size_t>{i, j}) != 2) return false;
  return true;
}

enum class Location { inside, boundary, outside };

struct MembershipReport {
  Location location = Location::inside;
  std::vector<std::size_t> tight;     // facets with <a,x> == 0
  std::vector<std::size_t> violated;  // facets with <a,x> < 0
};

inline MembershipReport check_point(const Cone& cone, const RatVec& x) {
  if (x.size() != cone.ambient) throw std::invalid_argument("check_point: wrong dimension");
  MembershipReport rep;
  for (std::size_t f = 0; f < cone.facets.size(); ++f) {
    Rat s = dot(cone.facets[f], x);
    if (s < 0)
      rep.violated.push_back(f);
    else if (s == 0)
      rep.tight.push_back(f);
  }
  if (!rep.violated.empty())
    rep.location = Location::outside;
  else if (!rep.tight.empty())
    rep.location = Location::boundary;
  else
    rep.location = Location::inside;
  return rep;
}

inline std::string to_string(Location loc) {
  switch (loc) {
    case Location::inside: return "inside";
    case Location::boundary: return "boundary";
    case Location::outside: return "outside";
  }
  return "?";
}

}  // namespace zc
