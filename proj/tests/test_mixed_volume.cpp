#include <random>

#include "helpers.hpp"

using namespace zt;

namespace {

Zonotope random_zonotope(std::mt19937_64& rng, int d) {
  Zonotope z;
  std::size_t k = 1 + rng() % 3;
  for (std::size_t g = 0; g < k; ++g) {
    RatVec dir(static_cast<std::size_t>(d));
    for (auto& x : dir) x = Rat(static_cast<long long>(rng() % 13) - 6);
    z.generators.push_back(Segment{std::move(dir)});
  }
  return z;
}

}  // namespace

TEST_CASE("mixed volume of segments is a scaled determinant", "[mv]") {
  CHECK(mv_segments({Segment{rv({1, 0})}, Segment{rv({0, 1})}}) == Rat(1, 2));
  CHECK(mv_segments({Segment{rv({1, 0})}, Segment{rv({2, 0})}}) == 0);
  CHECK(mv_segments({Segment{rv({1, 0, 0})}, Segment{rv({0, 1, 0})}, Segment{rv({0, 0, 1})}}) ==
        Rat(1, 6));
  CHECK(mv_segments({Segment{rv({0, 0})}, Segment{rv({1, 1})}}) == 0);
}

TEST_CASE("zonotope volume: unit cube", "[mv]") {
  Zonotope cube = zono({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  CHECK(mv_zonotopes({cube, cube, cube}) == 1);
  Zonotope square = zono({{1, 0}, {0, 1}});
  CHECK(mv_zonotopes({square, square}) == 1);
}

TEST_CASE("mixed volume is symmetric, multilinear, and monotone under scaling", "[mv]") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 220; ++t) {
    int d = 2 + static_cast<int>(rng() % 2);
    std::vector<Zonotope> bodies;
    for (int i = 0; i < d; ++i) bodies.push_back(random_zonotope(rng, d));
    Rat base = mv_zonotopes(bodies);
    CHECK(base >= 0);

    // symmetry
    std::vector<Zonotope> swapped = bodies;
    std::swap(swapped[0], swapped[1]);
    CHECK(mv_zonotopes(swapped) == base);

    // additivity in the first slot
    Zonotope extra = random_zonotope(rng, d);
    std::vector<Zonotope> summed = bodies;
    summed[0] = bodies[0] + extra;
    std::vector<Zonotope> other = bodies;
    other[0] = extra;
    CHECK(mv_zonotopes(summed) == base + mv_zonotopes(other));

    // homogeneity in the first slot
    std::vector<Zonotope> scaled = bodies;
    scaled[0] = bodies[0].scaled(Rat(3, 2));
    CHECK(mv_zonotopes(scaled) == Rat(3, 2) * base);
  }
}

TEST_CASE("polygon area and Minkowski sums", "[mv]") {
  ConvexPolygon square = convex_polygon({Vec2{0, 0}, Vec2{1, 0}, Vec2{1, 1}, Vec2{0, 1}});
  CHECK(polygon_area(square) == 1);
  ConvexPolygon tri = convex_polygon({Vec2{0, 0}, Vec2{1, 0}, Vec2{0, 1}});
  CHECK(polygon_area(tri) == Rat(1, 2));

  // interior and duplicate points do not change the hull
  ConvexPolygon square2 = convex_polygon(
      {Vec2{0, 0}, Vec2{1, 0}, Vec2{1, 1}, Vec2{0, 1}, Vec2{Rat(1, 2), Rat(1, 2)}, Vec2{0, 0}});
  CHECK(square2 == square);

  ConvexPolygon sum = minkowski_sum(square, tri);
  CHECK(polygon_area(sum) == polygon_area(square) + polygon_area(tri) + 2 * mv_polygons(square, tri));
}

TEST_CASE("polygon and zonotope mixed areas agree", "[mv]") {
  std::mt19937_64 rng(23);
  for (int t = 0; t < 220; ++t) {
    Zonotope a = random_zonotope(rng, 2);
    Zonotope b = random_zonotope(rng, 2);
    CHECK(mv_polygons(zonotope_polygon(a), zonotope_polygon(b)) == mv_zonotopes({a, b}));
  }
}

TEST_CASE("mixed area of the two counterexample triangles", "[mv]") {
  std::vector<ConvexPolygon> bodies = counterexample_bodies();
  REQUIRE(bodies.size() == 6);
  CHECK(mv_polygons(bodies[4], bodies[5]) == Rat(3, 2));
  CHECK(polygon_area(bodies[4]) == 1);
  CHECK(polygon_area(bodies[5]) == Rat(1, 2));
}

TEST_CASE("mixed area is translation invariant", "[mv]") {
  ConvexPolygon tri = convex_polygon({Vec2{0, 0}, Vec2{2, 0}, Vec2{0, 2}});
  ConvexPolygon tri_shift = convex_polygon({Vec2{5, -3}, Vec2{7, -3}, Vec2{5, -1}});
  ConvexPolygon square = convex_polygon({Vec2{0, 0}, Vec2{1, 0}, Vec2{1, 1}, Vec2{0, 1}});
  CHECK(mv_polygons(tri, square) == mv_polygons(tri_shift, square));
}

TEST_CASE("arity errors", "[mv]") {
  CHECK_THROWS_AS(mv_segments({Segment{rv({1, 0})}}), std::invalid_argument);
  Zonotope square = zono({{1, 0}, {0, 1}});
  CHECK_THROWS_AS(mv_zonotopes({square, square, square}), std::invalid_argument);
}
