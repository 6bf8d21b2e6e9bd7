// Acceptance gate: one pass/fail line per criterion, exit 0 only when all
// criteria hold within their time budgets.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <string>

#include "zonocone/zonocone.hpp"

using namespace zc;

namespace {

struct Built {
  PartitionScheme scheme;
  std::vector<Generator> generators;
  Cone cone;
  std::vector<FacetOrbit> orbits;
};

Built build_cone(int n, int d) {
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
  return b;
}

std::string g_data_dir = "data";
int g_failures = 0;

void criterion(int number, const std::string& label, long budget_ms,
               const std::function<bool()>& body) {
  auto t0 = std::chrono::steady_clock::now();
  bool ok = false;
  std::string note;
  try {
    ok = body();
  } catch (const std::exception& e) {
    ok = false;
    note = std::string(" (") + e.what() + ")";
  }
  long ms = static_cast<long>(
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0)
          .count());
  if (ms > budget_ms) {
    ok = false;
    note += " (over time budget " + std::to_string(budget_ms) + " ms)";
  }
  if (!ok) ++g_failures;
  std::cout << "criterion " << number << " [" << label << "]: " << (ok ? "PASS" : "FAIL") << " ("
            << ms << " ms)" << note << "\n";
}

IntVec iv(std::initializer_list<long long> xs) {
  IntVec v;
  for (long long x : xs) v.push_back(Int(x));
  return v;
}

bool same_set(std::vector<IntVec> a, std::vector<IntVec> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc > 1) g_data_dir = argv[1];

  Built c42, c62, c63;

  criterion(1, "C(4,2) exact reproduction", 1000, [&] {
    c42 = build_cone(4, 2);
    return same_set(c42.cone.rays, {iv({0, 1, 1}), iv({1, 0, 1}), iv({1, 1, 0})}) &&
           same_set(c42.cone.facets, {iv({-1, 1, 1}), iv({1, -1, 1}), iv({1, 1, -1})});
  });

  criterion(2, "C(6,2): 25 rays, 975 facets, 8 orbits, table match", 300000, [&] {
    c62 = build_cone(6, 2);
    int n33 = 0, n222 = 0;
    for (const Generator& g : c62.generators) {
      if (g.type == "(3,3)") ++n33;
      if (g.type == "(2,2,2)") ++n222;
    }
    TypeTable table = load_type_table(g_data_dir + "/table1.csv", c62.scheme);
    MatchReport m = match_type_table(table, c62.cone.facets, c62.orbits);
    return c62.cone.rays.size() == 25 && n33 == 10 && n222 == 15 &&
           c62.cone.facets.size() == 975 && c62.orbits.size() == 8 && m.all_facets && m.bijective;
  });

  criterion(3, "C(6,3): 30 rays, 130 facets, closed-form family", 300000, [&] {
    c63 = build_cone(6, 3);
    InequalityFamily63 fam = family_63(c63.scheme);
    FamilyComparison cmp = check_family_equals_facets(fam, c63.cone);
    return c63.cone.rays.size() == 30 && c63.cone.facets.size() == 130 &&
           fam.coordinate_count == 10 && fam.lower_count == 60 && fam.upper_count == 60 &&
           cmp.equal;
  });

  criterion(4, "counterexample violates one type-3 image; random tuples never do", 60000, [&] {
    TypeTable table = load_type_table(g_data_dir + "/table1.csv", c62.scheme);
    MatchReport m = match_type_table(table, c62.cone.facets, c62.orbits);
    CounterexampleReport rep = counterexample_check(c62.cone, c62.orbits, c62.scheme);
    bool single_type3 = rep.strict_violation && rep.violating_orbits.size() == 1 &&
                        m.entries[2].is_facet &&
                        *rep.violating_orbits.begin() == m.entries[2].orbit_index;
    SampleReport sample = sample_inequalities(c62.cone, c62.scheme, c62.orbits, 1000, 20260815, 4);
    bool clean = sample.violations == 0;
    for (const Rat& s : sample.min_slack_per_orbit) clean = clean && s >= 0;
    return single_type3 && rep.min_value < 0 && clean;
  });

  criterion(5, "fiber ranks for n = 4, 6, 8", 10000, [&] {
    bool ok = true;
    for (int n : {4, 6, 8}) ok = ok && fiber_rank_check(n).ok;
    return ok;
  });

  criterion(6, "rigid configurations: exhaustive RP1, grid RP2, 7-point family", 300000, [&] {
    int rp1 = rp1_exhaustive_check();
    GridSearchResult grid = grid_search_rp2();
    bool seven = true;
    for (int s : {-1, 2, 3}) seven = seven && is_rigid(seven_point_family(Rat(s)));
    return rp1 == 456 && grid.rigid_a1 == 17336 && grid.rigid_a2 == 8642 &&
           grid.rigid_unknown == 0 && seven;
  });

  criterion(7, "1000 sampled tuples inside each cone", 120000, [&] {
    for (const Built* b : {&c42, &c62, &c63}) {
      SampleReport rep = sample_inequalities(b->cone, b->scheme, b->orbits, 1000, 424242, 4);
      if (rep.violations != 0) return false;
      for (const Rat& s : rep.min_slack_per_orbit)
        if (s < 0) return false;
    }
    return true;
  });

  criterion(8, "2-face witnesses and the split lemma", 60000, [&] {
    LemmaSplitReport lemma = lemma_split_check(c62.scheme);
    TwoFaceReport faces = two_face_checks(c62.scheme, c62.cone, 20000, 20260815);
    return lemma.ok && faces.ok && faces.pairs_33_checked == 45 && faces.witnesses_found == 0;
  });

  criterion(9, "property suites, 200+ instances each", 120000, [&] {
    std::mt19937_64 rng(2718281828);

    // determinant alternation
    for (int t = 0; t < 200; ++t) {
      std::size_t k = 2 + rng() % 3;
      IntMat a(k, IntVec(k));
      for (auto& row : a)
        for (auto& x : row) x = Int(static_cast<long long>(rng() % 19) - 9);
      Int d0 = det_bareiss(a);
      IntMat s = a;
      std::size_t i = rng() % k, j = (i + 1 + rng() % (k - 1)) % k;
      std::swap(s[i], s[j]);
      if (det_bareiss(s) != -d0) return false;
      IntMat r = a;
      r[i] = r[j];
      if (det_bareiss(r) != 0) return false;
    }

    // multilinearity of the monomial map
    PartitionScheme s42 = c42.scheme;
    for (int t = 0; t < 200; ++t) {
      std::vector<Zonotope> bodies;
      for (int i = 0; i < 4; ++i) {
        Zonotope z;
        std::size_t k = 1 + rng() % 2;
        for (std::size_t g = 0; g < k; ++g) {
          RatVec dir{Rat(static_cast<long long>(rng() % 9) - 4),
                     Rat(static_cast<long long>(rng() % 9) - 4)};
          z.generators.push_back(Segment{std::move(dir)});
        }
        bodies.push_back(std::move(z));
      }
      Zonotope extra;
      extra.generators.push_back(Segment{RatVec{Rat(1), Rat(2)}});
      std::size_t slot = rng() % 4;
      MonomialPoint base = big_phi(bodies, s42);
      std::vector<Zonotope> other = bodies, summed = bodies;
      other[slot] = extra;
      summed[slot] = bodies[slot] + extra;
      MonomialPoint add = big_phi(other, s42), tot = big_phi(summed, s42);
      for (std::size_t i = 0; i < base.values.size(); ++i)
        if (tot.values[i] != base.values[i] + add.values[i]) return false;
    }

    // Pluecker residuals and the vv_I = vv_{I^c} symmetry
    PartitionScheme s63 = c63.scheme;
    for (int t = 0; t < 200; ++t) {
      std::array<RatVec, 4> u2;
      for (auto& col : u2)
        col = RatVec{Rat(static_cast<long long>(rng() % 21) - 10),
                     Rat(static_cast<long long>(rng() % 21) - 10)};
      if (plucker_residual_2d(u2) != 0) return false;

      std::vector<RatVec> u3(6, RatVec(3));
      for (auto& col : u3)
        for (auto& x : col) x = Rat(static_cast<long long>(rng() % 15) - 7);
      if (plucker_residual_3d(u3) != 0) return false;
      if (derived_identity_residual_3d(u3) != 0) return false;

      MonomialPoint p = big_phi_segments(u3, s63);
      PureConfiguration g = abs_grassmann_point(u3, s63);
      for (const PartitionIndex& part : s63.partitions) {
        Rat gi = g.values[s63.subset_index(part.blocks[0])];
        Rat gj = g.values[s63.subset_index(part.blocks[1])];
        if (p.values[s63.partition_index(part)] != gi * gj / 36) return false;
        if (s63.partition_index(canonical_partition(
                {part.blocks[1].members, part.blocks[0].members})) !=
            s63.partition_index(part))
          return false;
      }
    }

    // duality round-trip of the cone engine
    for (int t = 0; t < 200; ++t) {
      std::size_t dim = 3 + rng() % 2;
      std::vector<RatVec> pts;
      for (std::size_t i = 0; i + 1 < dim; ++i) {
        RatVec e(dim, Rat(0));
        e[i] = 1;
        e[dim - 1] = 1;
        pts.push_back(std::move(e));
      }
      RatVec apex(dim, Rat(0));
      apex[dim - 1] = 1;
      pts.push_back(std::move(apex));
      for (std::size_t i = 0, extra = rng() % 4; i < extra; ++i) {
        RatVec v(dim);
        for (std::size_t j = 0; j + 1 < dim; ++j)
          v[j] = Rat(static_cast<long long>(rng() % 9) - 4);
        v[dim - 1] = Rat(1 + static_cast<long long>(rng() % 3));
        pts.push_back(std::move(v));
      }
      Cone c1 = conic_hull(pts);
      std::vector<RatVec> fr;
      for (const IntVec& f : c1.facets) {
        RatVec v(f.size());
        for (std::size_t i = 0; i < f.size(); ++i) v[i] = Rat(f[i]);
        fr.push_back(std::move(v));
      }
      Cone c2 = conic_hull(fr);
      if (!same_set(c2.rays, c1.facets) || !same_set(c2.facets, c1.rays)) return false;
    }
    return true;
  });

  if (g_failures == 0) {
    std::cout << "acceptance: all 9 criteria PASS\n";
    return 0;
  }
  std::cout << "acceptance: " << g_failures << " criterion(s) FAILED\n";
  return 1;
}
