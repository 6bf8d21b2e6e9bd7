#include <random>

#include "helpers.hpp"

using namespace zt;

TEST_CASE("the closed form inequality family for (6,3)", "[verify]") {
  const Built& b = built(6, 3);
  InequalityFamily63 fam = family_63(b.scheme);
  CHECK(fam.normals.size() == 130);
  CHECK(fam.coordinate_count == 10);
  CHECK(fam.lower_count == 60);
  CHECK(fam.upper_count == 60);

  FamilyComparison cmp = check_family_equals_facets(fam, b.cone);
  CHECK(cmp.equal);
  CHECK(cmp.missing.empty());
  CHECK(cmp.extra.empty());

  // the comparator reports one-sided differences
  InequalityFamily63 dropped = fam;
  dropped.normals.erase(dropped.normals.begin());
  FamilyComparison cmp2 = check_family_equals_facets(dropped, b.cone);
  CHECK_FALSE(cmp2.equal);
  CHECK(cmp2.missing.empty());
  CHECK(cmp2.extra.size() == 1);

  InequalityFamily63 mangled = fam;
  mangled.normals[0][0] += 1;
  FamilyComparison cmp3 = check_family_equals_facets(mangled, b.cone);
  CHECK_FALSE(cmp3.equal);
  CHECK(cmp3.missing.size() == 1);
  CHECK(cmp3.extra.size() == 1);

  PartitionScheme s62 = enumerate_scheme(6, 2);
  CHECK_THROWS_AS(family_63(s62), std::invalid_argument);
}

TEST_CASE("the six body counterexample lands outside C(6,2)", "[verify]") {
  const Built& b = built(6, 2);
  CounterexampleReport rep = counterexample_check(b.cone, b.orbits, b.scheme);

  // frozen monomial coordinates, canonical partition order
  const char* expected[] = {"3/4", "1/2", "1/4", "3/8", "1/2", "1/4", "3/8", "1/4",
                            "1/4", "1/4", "1/8", "1/4", "1/4", "1/4", "1/2"};
  REQUIRE(rep.point.values.size() == 15);
  for (std::size_t i = 0; i < 15; ++i)
    CHECK(rep.point.values[i] == parse_rational(expected[i]));

  CHECK(rep.strict_violation);
  CHECK(rep.violated_facets.size() == 1);
  CHECK(rep.min_value == Rat(-1, 8));
  REQUIRE(rep.violating_orbits.size() == 1);
  std::size_t orb = *rep.violating_orbits.begin();
  CHECK(b.orbits[orb].size == 120);

  // and that orbit is the type 3 column of the table
  TypeTable table = load_type_table(std::string(ZONOCONE_DATA_DIR) + "/table1.csv", b.scheme);
  MatchReport m = match_type_table(table, b.cone.facets, b.orbits);
  CHECK(m.entries[2].orbit_index == orb);

  MembershipReport loc = check_point(b.cone, rep.point.values);
  CHECK(loc.location == Location::outside);
}

TEST_CASE("matching and vertex-edge maps of complete graphs", "[verify]") {
  for (int n : {4, 6, 8}) {
    FiberReport rep = fiber_rank_check(n);
    CHECK(rep.ok);
    CHECK(rep.edge_count == static_cast<std::size_t>(n * (n - 1) / 2));
    CHECK(rep.rank_f == rep.expected_rank_f);
    CHECK(rep.rank_g == static_cast<std::size_t>(n));
    CHECK(rep.fg_all_ones);
    CHECK(rep.f_ones_half_n);
  }
  CHECK(fiber_rank_check(4).matching_count == 3);
  CHECK(fiber_rank_check(6).matching_count == 15);
  CHECK(fiber_rank_check(8).matching_count == 105);
  CHECK(fiber_rank_check(6).expected_rank_f == 10);
  CHECK(fiber_rank_check(8).expected_rank_f == 21);
  CHECK_THROWS_AS(fiber_rank_check(5), std::invalid_argument);
}

TEST_CASE("equal monomial images for the split configurations", "[verify]") {
  PartitionScheme s = enumerate_scheme(6, 2);
  LemmaSplitReport rep = lemma_split_check(s);
  CHECK(rep.equal);
  CHECK(rep.support_ok);
  CHECK(rep.permuted_ok);
  CHECK(rep.ok);
}

TEST_CASE("two-dimensional faces: witnesses and obstructions", "[verify]") {
  const Built& b = built(6, 2);
  TwoFaceReport rep = two_face_checks(b.scheme, b.cone, 2000, 97);
  CHECK(rep.pairs_33_checked == 45);
  CHECK(rep.pairs_33_ok);
  CHECK(rep.mixed_path_ok);
  CHECK(rep.obstruction_exact_ok);
  CHECK(rep.obstruction_trials == 2000);
  CHECK(rep.witnesses_found == 0);
  CHECK(rep.ok);
}

TEST_CASE("random zonotope tuples stay inside the cones", "[verify]") {
  for (auto [n, d] : {std::pair{4, 2}, std::pair{6, 2}, std::pair{6, 3}}) {
    const Built& b = built(n, d);
    SampleReport rep = sample_inequalities(b.cone, b.scheme, b.orbits, 250, 12345, 2);
    CHECK(rep.trials == 250);
    CHECK(rep.violations == 0);
    REQUIRE(rep.min_slack_per_orbit.size() == b.orbits.size());
    for (const Rat& s : rep.min_slack_per_orbit) CHECK(s >= 0);
  }
}

TEST_CASE("sampling reports are deterministic and independent of the thread count", "[verify]") {
  const Built& b = built(6, 2);
  SampleReport r1 = sample_inequalities(b.cone, b.scheme, b.orbits, 120, 777, 1);
  SampleReport r2 = sample_inequalities(b.cone, b.scheme, b.orbits, 120, 777, 4);
  CHECK(r1.min_slack_per_orbit == r2.min_slack_per_orbit);
  // the seed drives the drawn tuples
  std::mt19937_64 g1(777), g2(778);
  CHECK(detail::describe(detail::random_zonotope_tuple(g1, 6, 2)) !=
        detail::describe(detail::random_zonotope_tuple(g2, 6, 2)));
}

TEST_CASE("the sampler detects a broken cone", "[verify]") {
  const Built& b = built(4, 2);
  Cone broken = b.cone;
  for (Int& x : broken.facets[0]) x = -x;
  std::vector<FacetOrbit> orbit{{broken.facets[0], {0, 1, 2}, 3}};
  CHECK_THROWS_AS(sample_inequalities(broken, b.scheme, orbit, 50, 1, 1), std::runtime_error);
}

TEST_CASE("the shipped counterexample data file matches the built-in bodies", "[verify]") {
  json j = json::parse(read_file(std::string(ZONOCONE_DATA_DIR) + "/counterexample.json"));
  REQUIRE(j.at("d").get<int>() == 2);
  const json& bodies = j.at("bodies");
  std::vector<ConvexPolygon> expected = counterexample_bodies();
  REQUIRE(bodies.size() == expected.size());
  for (std::size_t i = 0; i < expected.size(); ++i) {
    std::vector<Vec2> pts;
    if (bodies[i].contains("segment")) {
      const json& v = bodies[i].at("segment");
      pts.push_back(Vec2{0, 0});
      pts.push_back(Vec2{parse_rational(v[0].get<std::string>()),
                         parse_rational(v[1].get<std::string>())});
    } else {
      for (const json& p : bodies[i].at("polygon"))
        pts.push_back(Vec2{parse_rational(p[0].get<std::string>()),
                           parse_rational(p[1].get<std::string>())});
    }
    CHECK(convex_polygon(pts) == expected[i]);
  }
}
