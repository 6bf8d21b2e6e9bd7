#include <random>

#include "helpers.hpp"

using namespace zt;

namespace {

std::vector<RatVec> random_directions(std::mt19937_64& rng, int n, int d) {
  std::vector<RatVec> u(static_cast<std::size_t>(n), RatVec(static_cast<std::size_t>(d)));
  for (auto& col : u)
    for (auto& x : col) x = Rat(static_cast<long long>(rng() % 15) - 7);
  return u;
}

}  // namespace

TEST_CASE("pure configurations index mixed volumes by subsets", "[config]") {
  PartitionScheme s = enumerate_scheme(4, 2);
  std::vector<Zonotope> bodies{zono({{1, 0}}), zono({{0, 1}}), zono({{1, 1}}), zono({{1, -1}})};
  PureConfiguration pv = pure_config(bodies, s);
  REQUIRE(pv.values.size() == 6);
  // subsets in lex order: 12, 13, 14, 23, 24, 34
  CHECK(pv.values[0] == Rat(1, 2));   // det(e1, e2) / 2
  CHECK(pv.values[5] == 1);           // det((1,1),(1,-1)) / 2
  CHECK_THROWS_AS(pure_config({bodies[0]}, s), std::invalid_argument);
}

TEST_CASE("the monomial map multiplies block volumes", "[config]") {
  PartitionScheme s = enumerate_scheme(4, 2);
  std::vector<RatVec> u{rv({0, 1}), rv({0, 1}), rv({1, 1}), rv({1, 1})};
  MonomialPoint p = big_phi_segments(u, s);
  REQUIRE(p.values.size() == 3);
  // partitions: 12|34, 13|24, 14|23
  CHECK(p.values[0] == 0);
  CHECK(p.values[1] == Rat(1, 4));
  CHECK(p.values[2] == Rat(1, 4));
  CHECK(primitive_ray(p.values) == iv({0, 1, 1}));
}

TEST_CASE("Phi is Minkowski multilinear in each slot", "[config]") {
  std::mt19937_64 rng(31);
  PartitionScheme s42 = enumerate_scheme(4, 2);
  PartitionScheme s63 = enumerate_scheme(6, 3);
  for (int t = 0; t < 210; ++t) {
    const PartitionScheme& s = (t % 2 == 0) ? s42 : s63;
    std::vector<Zonotope> bodies;
    for (int i = 0; i < s.n; ++i) {
      Zonotope z;
      std::size_t k = 1 + rng() % 2;
      for (std::size_t g = 0; g < k; ++g) {
        RatVec dir(static_cast<std::size_t>(s.d));
        for (auto& x : dir) x = Rat(static_cast<long long>(rng() % 9) - 4);
        z.generators.push_back(Segment{std::move(dir)});
      }
      bodies.push_back(std::move(z));
    }
    std::size_t slot = rng() % static_cast<std::size_t>(s.n);
    Zonotope extra;
    extra.generators.push_back(Segment{RatVec(static_cast<std::size_t>(s.d), Rat(1))});

    MonomialPoint base = big_phi(bodies, s);
    std::vector<Zonotope> other = bodies;
    other[slot] = extra;
    MonomialPoint added = big_phi(other, s);
    std::vector<Zonotope> summed = bodies;
    summed[slot] = bodies[slot] + extra;
    MonomialPoint total = big_phi(summed, s);
    for (std::size_t i = 0; i < base.values.size(); ++i)
      CHECK(total.values[i] == base.values[i] + added.values[i]);

    std::vector<Zonotope> scaled = bodies;
    scaled[slot] = bodies[slot].scaled(Rat(5, 2));
    MonomialPoint sc = big_phi(scaled, s);
    for (std::size_t i = 0; i < base.values.size(); ++i)
      CHECK(sc.values[i] == Rat(5, 2) * base.values[i]);
  }
}

TEST_CASE("Pluecker residuals vanish identically", "[config]") {
  std::mt19937_64 rng(37);
  for (int t = 0; t < 210; ++t) {
    std::array<RatVec, 4> u2;
    for (auto& col : u2) {
      col = RatVec(2);
      for (auto& x : col) x = Rat(static_cast<long long>(rng() % 25) - 12);
    }
    CHECK(plucker_residual_2d(u2) == 0);

    std::vector<RatVec> u3 = random_directions(rng, 6, 3);
    CHECK(plucker_residual_3d(u3) == 0);
    CHECK(derived_identity_residual_3d(u3) == 0);
  }
}

TEST_CASE("partition coordinates match split determinant products", "[config]") {
  PartitionScheme s = enumerate_scheme(6, 3);
  std::mt19937_64 rng(41);
  for (int t = 0; t < 210; ++t) {
    std::vector<RatVec> u = random_directions(rng, 6, 3);
    MonomialPoint p = big_phi_segments(u, s);
    PureConfiguration g = abs_grassmann_point(u, s);
    for (const PartitionIndex& part : s.partitions) {
      const std::vector<int>& I = part.blocks[0].members;
      const std::vector<int>& J = part.blocks[1].members;
      Rat gi = g.values[s.subset_index(SubsetIndex{I})];
      Rat gj = g.values[s.subset_index(SubsetIndex{J})];
      // the coordinate depends only on the unordered pair {I, I^c}
      CHECK(s.partition_index(canonical_partition({J, I})) == s.partition_index(part));
      CHECK(p.values[s.partition_index(part)] == gi * gj / 36);
    }
  }
}

TEST_CASE("Grassmann points are nonnegative and scale linearly per column", "[config]") {
  PartitionScheme s = enumerate_scheme(6, 2);
  std::mt19937_64 rng(43);
  std::vector<RatVec> u = random_directions(rng, 6, 2);
  PureConfiguration g = abs_grassmann_point(u, s);
  for (const Rat& v : g.values) CHECK(v >= 0);
  std::vector<RatVec> u2 = u;
  for (auto& x : u2[2]) x *= 7;
  PureConfiguration g2 = abs_grassmann_point(u2, s);
  for (std::size_t i = 0; i < s.subsets.size(); ++i) {
    bool in = std::find(s.subsets[i].members.begin(), s.subsets[i].members.end(), 3) !=
              s.subsets[i].members.end();
    CHECK(g2.values[i] == (in ? Rat(7) : Rat(1)) * g.values[i]);
  }
}
