#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "zonocone/config_space.hpp"
#include "zonocone/linalg.hpp"
#include "zonocone/rational.hpp"
#include "zonocone/scheme.hpp"

namespace zc {

/// Normalizes a nonzero integer vector to the canonical representative of its
/// projective point: primitive, last nonzero coordinate positive.
inline IntVec projective_normalize(IntVec v) {
  v = primitive(std::move(v));
  for (auto it = v.rbegin(); it != v.rend(); ++it) {
    if (*it != 0) {
      if (*it < 0)
        for (Int& x : v) x = -x;
      break;
    }
  }
  return v;
}

inline IntVec projective_normalize(const RatVec& v) {
  return projective_normalize(scale_to_integer(v));
}

/// Labeled multiset of points in RP^l, l in {1,2}, with canonical
/// homogeneous representatives. Multiplicity is implicit via equal entries.
struct ProjectiveConfiguration {
  int dim = 1;  // projective dimension l
  std::vector<IntVec> points;

  bool non_degenerate() const {
    IntMat m;
    m.reserve(points.size());
    for (const IntVec& p : points) m.push_back(p);
    return rank(std::move(m)) == static_cast<std::size_t>(dim) + 1;
  }
};

inline ProjectiveConfiguration make_config(int dim, std::vector<IntVec> raw) {
  ProjectiveConfiguration c;
  c.dim = dim;
  c.points.reserve(raw.size());
  for (IntVec& p : raw) {
    if (static_cast<int>(p.size()) != dim + 1)
      throw std::invalid_argument("point has wrong homogeneous dimension");
    c.points.push_back(projective_normalize(std::move(p)));
  }
  return c;
}

inline IntVec cross3(const IntVec& a, const IntVec& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

/// The spanned hyperplanes: for l=1 the distinct points themselves, for l=2
/// the distinct lines through pairs of distinct points (primitive normals).
inline std::vector<IntVec> hyperplanes_of(const ProjectiveConfiguration& c) {
  std::set<IntVec> out;
  std::vector<IntVec> distinct(c.points.begin(), c.points.end());
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  if (c.dim == 1) {
    // a single point spans the hyperplane {itself}; store the dual covector
    // so that incidence is the pairing <h, a> = 0
    for (const IntVec& p : distinct) out.insert(projective_normalize(IntVec{p[1], -p[0]}));
  } else if (c.dim == 2) {
    for (std::size_t i = 0; i < distinct.size(); ++i)
      for (std::size_t j = i + 1; j < distinct.size(); ++j)
        out.insert(projective_normalize(cross3(distinct[i], distinct[j])));
  } else {
    throw std::invalid_argument("hyperplanes_of: projective dimension must be 1 or 2");
  }
  return {out.begin(), out.end()};
}

/// A point is locked when it lies on at least l distinct hyperplanes spanned
/// by the configuration with one copy of the point removed.
inline bool is_locked(const ProjectiveConfiguration& c, std::size_t index) {
  if (!c.non_degenerate()) throw std::invalid_argument("is_locked: degenerate configuration");
  if (index >= c.points.size()) throw std::invalid_argument("is_locked: index out of range");
  ProjectiveConfiguration rest = c;
  rest.points.erase(rest.points.begin() + static_cast<std::ptrdiff_t>(index));
  const IntVec& a = c.points[index];
  int count = 0;
  for (const IntVec& h : hyperplanes_of(rest)) {
    if (dot(h, a) == 0 && ++count >= c.dim) return true;
  }
  return false;
}

inline bool is_rigid(const ProjectiveConfiguration& c) {
  for (std::size_t i = 0; i < c.points.size(); ++i)
    if (!is_locked(c, i)) return false;
  return true;
}

// ============================================================
// Generators of C_{n,d}
// ============================================================

/// One generator: the segment directions, the labeling of distinct points by
/// blocks of [n], and a type tag ("(3,3)", "(2,2,2)", "A1", "A2").
struct Generator {
  std::vector<RatVec> directions;
  std::vector<std::vector<int>> labeling;
  std::string type;
  IntVec ray;  // primitive Phi image
};

namespace detail {

inline IntVec phi_ray(const std::vector<RatVec>& dirs, const PartitionScheme& scheme) {
  MonomialPoint mp = big_phi_segments(dirs, scheme);
  return primitive_ray(mp.values);
}

}  // namespace detail

/// The labeled rigid-configuration tuples generating C_{n,d}, with duplicate
/// rays removed. Counts: 3 for (4,2), 25 for (6,2), 30 for (6,3).
inline std::vector<Generator> generators_for(int n, int d, const PartitionScheme& scheme) {
  if (scheme.n != n || scheme.d != d) throw std::invalid_argument("scheme mismatch");
  std::vector<Generator> out;
  if (d == 2 && (n == 4 || n == 6)) {
    const RatVec a{1, 0}, b{0, 1}, c{1, 1};
    // two-block partitions: doubled pair of points, type (k,k)
    PartitionScheme halves = enumerate_scheme(n, n / 2);
    std::string kk = "(" + std::to_string(n / 2) + "," + std::to_string(n / 2) + ")";
    for (const PartitionIndex& p : halves.partitions) {
      Generator g;
      g.directions.assign(n, {});
      for (int i : p.blocks[0].members) g.directions[i - 1] = a;
      for (int i : p.blocks[1].members) g.directions[i - 1] = b;
      g.labeling = {p.blocks[0].members, p.blocks[1].members};
      g.type = kk;
      g.ray = detail::phi_ray(g.directions, scheme);
      out.push_back(std::move(g));
    }
    if (n == 6) {
      PartitionScheme pairs = enumerate_scheme(6, 2);
      for (const PartitionIndex& p : pairs.partitions) {
        Generator g;
        g.directions.assign(6, {});
        const std::array<const RatVec*, 3> pts{&a, &b, &c};
        for (int blk = 0; blk < 3; ++blk)
          for (int i : p.blocks[blk].members) g.directions[i - 1] = *pts[blk];
        g.labeling = {p.blocks[0].members, p.blocks[1].members, p.blocks[2].members};
        g.type = "(2,2,2)";
        g.ray = detail::phi_ray(g.directions, scheme);
        out.push_back(std::move(g));
      }
    }
  } else if (n == 6 && d == 3) {
    const std::vector<RatVec> a1_pts{{0, 0, 1}, {1, 0, 1}, {0, 1, 1}};
    PartitionScheme pairs = enumerate_scheme(6, 2);
    for (const PartitionIndex& p : pairs.partitions) {
      Generator g;
      g.directions.assign(6, {});
      for (int blk = 0; blk < 3; ++blk)
        for (int i : p.blocks[blk].members) g.directions[i - 1] = a1_pts[blk];
      g.labeling = {p.blocks[0].members, p.blocks[1].members, p.blocks[2].members};
      g.type = "A1";
      g.ray = detail::phi_ray(g.directions, scheme);
      out.push_back(std::move(g));
    }
    // all 720 labelings of the six simple points; distinct rays survive
    const std::vector<RatVec> a2_pts{{0, 0, 1}, {1, 0, 1}, {0, 1, 1},
                                     {1, 1, 1}, {1, 0, 0}, {0, 1, 0}};
    std::array<int, 6> perm{0, 1, 2, 3, 4, 5};
    std::set<IntVec> seen;
    std::vector<Generator> a2;
    do {
      std::vector<RatVec> dirs(6);
      for (int i = 0; i < 6; ++i) dirs[i] = a2_pts[perm[i]];
      IntVec ray = detail::phi_ray(dirs, scheme);
      if (seen.insert(ray).second) {
        Generator g;
        g.directions = std::move(dirs);
        g.labeling.resize(6);
        for (int i = 0; i < 6; ++i) g.labeling[perm[i]] = {i + 1};
        g.type = "A2";
        g.ray = std::move(ray);
        a2.push_back(std::move(g));
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
    std::sort(a2.begin(), a2.end(),
              [](const Generator& x, const Generator& y) { return x.ray < y.ray; });
    out.insert(out.end(), std::make_move_iterator(a2.begin()), std::make_move_iterator(a2.end()));
  } else {
    throw std::invalid_argument("generators_for: unsupported (n,d)");
  }
  return out;
}

// ============================================================
// A seven-point rigid family: three concurrent lines through the origin
// (y=0, y=x, x=0) carrying two points each, cut by the fixed transversal
// y = 1-x and by a second transversal y = s(x-2) of rational slope s.
// ============================================================

inline ProjectiveConfiguration seven_point_family(const Rat& s) {
  if (s == 0 || s == 1) throw std::invalid_argument("seven_point_family: slope must avoid 0 and 1");
  auto hom = [](const Rat& x, const Rat& y) {
    return projective_normalize(scale_to_integer(RatVec{x, y, 1}));
  };
  Rat bx = Rat(2) * s / (s - 1);
  std::vector<IntVec> pts{
      hom(0, 0),          // the common point of the three lines
      hom(1, 0),          // y=0 meets y=1-x
      hom(Rat(1, 2), Rat(1, 2)),  // y=x meets y=1-x
      hom(0, 1),          // x=0 meets y=1-x
      hom(2, 0),          // y=0 meets the sloped transversal
      hom(bx, bx),        // y=x meets it
      hom(0, -2 * s),     // x=0 meets it
  };
  return make_config(2, std::move(pts));
}

// ============================================================
// Exhaustive rigidity searches
// ============================================================

/// RP^1, n = 6: every multiplicity assignment over a fixed set of distinct
/// positions, testing rigid <=> all points multiple. Returns the number of
/// non-degenerate signatures checked; throws on any mismatch.
inline int rp1_exhaustive_check() {
  const std::vector<IntVec> positions{{0, 1}, {1, 1}, {2, 1}, {3, 1}, {4, 1}, {1, 0}};
  int checked = 0;
  // compositions of 6 over 6 slots (multiplicity 0 = position unused)
  std::array<int, 6> m{};
  auto rec = [&](auto&& self, int slot, int left) -> void {
    if (slot == 6) {
      if (left != 0) return;
      int used = 0;
      bool all_multiple = true;
      for (int k = 0; k < 6; ++k) {
        if (m[k] > 0) ++used;
        if (m[k] == 1) all_multiple = false;
      }
      if (used < 2) return;  // degenerate in RP^1
      ProjectiveConfiguration c;
      c.dim = 1;
      for (int k = 0; k < 6; ++k)
        for (int t = 0; t < m[k]; ++t) c.points.push_back(positions[k]);
      if (is_rigid(c) != all_multiple)
        throw std::logic_error("rp1_exhaustive_check: classification mismatch");
      ++checked;
      return;
    }
    for (int v = 0; v <= left; ++v) {
      m[slot] = v;
      self(self, slot + 1, left - v);
    }
    m[slot] = 0;
  };
  rec(rec, 0, 6);
  return checked;
}

/// Result of the RP^2 grid sweep over all 6-point multisets with homogeneous
/// coordinates in {-2..2}: rigid configurations by signature.
struct GridSearchResult {
  long long configs_tested = 0;
  long long rigid_a1 = 0;       // three doubled points, not collinear
  long long rigid_a2 = 0;       // six simple points, complete quadrilateral
  long long rigid_unknown = 0;  // anything else (expected: none)
};

namespace detail {

struct Grid {
  std::vector<std::array<int, 3>> pts;
  std::vector<uint64_t> line_mask;               // grid points on each line
  std::vector<std::vector<uint16_t>> line_id;    // line through a pair
  static constexpr uint16_t kNoLine = 0xFFFF;

  Grid() {
    std::set<std::array<int, 3>> seen;
    for (int a = -2; a <= 2; ++a)
      for (int b = -2; b <= 2; ++b)
        for (int c = -2; c <= 2; ++c) {
          if (a == 0 && b == 0 && c == 0) continue;
          IntVec v = projective_normalize(IntVec{a, b, c});
          std::array<int, 3> key{static_cast<int>(v[0]), static_cast<int>(v[1]),
                                 static_cast<int>(v[2])};
          seen.insert(key);
        }
    pts.assign(seen.begin(), seen.end());
    const std::size_t P = pts.size();
    line_id.assign(P, std::vector<uint16_t>(P, kNoLine));
    std::map<std::array<int, 3>, uint16_t> lines;
    for (std::size_t i = 0; i < P; ++i)
      for (std::size_t j = i + 1; j < P; ++j) {
        IntVec u{pts[i][0], pts[i][1], pts[i][2]};
        IntVec v{pts[j][0], pts[j][1], pts[j][2]};
        IntVec c = projective_normalize(cross3(u, v));
        std::array<int, 3> key{static_cast<int>(c[0]), static_cast<int>(c[1]),
                               static_cast<int>(c[2])};
        auto [it, fresh] = lines.try_emplace(key, static_cast<uint16_t>(lines.size()));
        line_id[i][j] = line_id[j][i] = it->second;
      }
    line_mask.assign(lines.size(), 0);
    for (const auto& [key, id] : lines) {
      IntVec L{key[0], key[1], key[2]};
      for (std::size_t p = 0; p < P; ++p) {
        Int d = L[0] * pts[p][0] + L[1] * pts[p][1] + L[2] * pts[p][2];
        if (d == 0) line_mask[id] |= uint64_t{1} << p;
      }
    }
  }

  bool on_line(uint16_t line, int p) const { return (line_mask[line] >> p) & 1; }
};

/// Locked test over a multiset given as distinct grid indices + multiplicities.
inline bool grid_config_rigid(const Grid& g, const std::vector<int>& q,
                              const std::vector<int>& mult) {
  const int r = static_cast<int>(q.size());
  for (int i = 0; i < r; ++i) {
    // remove one copy of q[i]; remaining distinct points:
    // all of q if mult[i] >= 2, else q without q[i]
    uint16_t found[2];
    int nfound = 0;
    auto add_line = [&](uint16_t L) {
      if (nfound == 1 && found[0] == L) return false;
      found[nfound++] = L;
      return nfound >= 2;
    };
    bool locked = false;
    if (mult[i] >= 2) {
      // lines through q[i] and any other distinct point all pass through q[i]
      for (int b = 0; b < r && !locked; ++b)
        if (b != i) locked = add_line(g.line_id[q[i]][q[b]]);
    }
    for (int b = 0; b < r && !locked; ++b) {
      if (b == i) continue;
      for (int c = b + 1; c < r && !locked; ++c) {
        if (c == i) continue;
        uint16_t L = g.line_id[q[b]][q[c]];
        if (g.on_line(L, q[i])) locked = add_line(L);
      }
    }
    if (!locked) return false;
  }
  return true;
}

inline bool grid_degenerate(const Grid& g, const std::vector<int>& q) {
  if (q.size() < 3) return true;
  uint64_t all = 0;
  for (int p : q) all |= uint64_t{1} << p;
  uint16_t L = g.line_id[q[0]][q[1]];
  return (g.line_mask[L] & all) == all;
}

/// Signature check for a rigid multiset: A1 = multiplicities {2,2,2} on a
/// non-collinear triple; A2 = six simple points with exactly four 3-point
/// lines, every point on exactly two of them.
inline std::string grid_signature(const Grid& g, const std::vector<int>& q,
                                  const std::vector<int>& mult) {
  std::vector<int> ms = mult;
  std::sort(ms.begin(), ms.end());
  if (ms == std::vector<int>{2, 2, 2}) return "A1";
  if (ms == std::vector<int>{1, 1, 1, 1, 1, 1}) {
    std::map<uint16_t, int> rich;
    for (std::size_t b = 0; b < q.size(); ++b)
      for (std::size_t c = b + 1; c < q.size(); ++c) {
        uint16_t L = g.line_id[q[b]][q[c]];
        int cnt = 0;
        for (int p : q) cnt += g.on_line(L, p);
        if (cnt >= 3) rich[L] = cnt;
      }
    if (rich.size() != 4) return "unknown";
    std::vector<int> per_point(q.size(), 0);
    for (const auto& [L, cnt] : rich) {
      if (cnt != 3) return "unknown";
      for (std::size_t p = 0; p < q.size(); ++p) per_point[p] += g.on_line(L, q[p]);
    }
    for (int c : per_point)
      if (c != 2) return "unknown";
    return "A2";
  }
  return "unknown";
}

}  // namespace detail

/// Sweeps every 6-point multiset over the 49-point grid (all multiplicity
/// signatures), classifying each rigid non-degenerate configuration.
inline GridSearchResult grid_search_rp2() {
  static const detail::Grid grid;
  const int P = static_cast<int>(grid.pts.size());
  GridSearchResult res;

  // multiplicity signatures: partitions of 6
  std::vector<std::vector<int>> signatures;
  {
    std::vector<int> cur;
    auto rec = [&](auto&& self, int left, int maxpart) -> void {
      if (left == 0) {
        signatures.push_back(cur);
        return;
      }
      for (int k = std::min(left, maxpart); k >= 1; --k) {
        cur.push_back(k);
        self(self, left - k, k);
        cur.pop_back();
      }
    };
    rec(rec, 6, 6);
  }

  for (const std::vector<int>& sig : signatures) {
    const int r = static_cast<int>(sig.size());
    if (r < 3) continue;  // at most 2 distinct points never spans RP^2
    // enumerate assignments of distinct grid points to the signature slots;
    // slots holding equal multiplicities are unordered, so force increasing
    // point indices within each run of equal values
    std::vector<int> q(r);
    auto rec = [&](auto&& self, int slot) -> void {
      if (slot == r) {
        ++res.configs_tested;
        if (detail::grid_degenerate(grid, q)) return;
        if (!detail::grid_config_rigid(grid, q, sig)) return;
        std::string s = detail::grid_signature(grid, q, sig);
        if (s == "A1")
          ++res.rigid_a1;
        else if (s == "A2")
          ++res.rigid_a2;
        else
          ++res.rigid_unknown;
        return;
      }
      int lo = 0;
      if (slot > 0 && sig[slot] == sig[slot - 1]) lo = q[slot - 1] + 1;
      for (int p = lo; p < P; ++p) {
        bool used = false;
        for (int t = 0; t < slot; ++t) used |= (q[t] == p);
        if (used) continue;
        q[slot] = p;
        self(self, slot + 1);
      }
    };
    rec(rec, 0);
  }
  return res;
}

}  // namespace zc
