#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "test_util.hpp"

using namespace tritorus;
using namespace tritorus::testutil;

TEST_CASE("area of the reference shapes") {
    CHECK(area(unit_square()) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(area(notched_square(0.5, 0.5)) == doctest::Approx(0.75).epsilon(1e-14));
    CHECK(area(corner_triangle(0.3, 0.2)) == doctest::Approx(0.03).epsilon(1e-12));
    CHECK(area(notched_square(0.3, 0.2)) == doctest::Approx(1.0 - 0.06).epsilon(1e-14));
    CHECK(area(ConvexPolygon::empty()) == 0.0);
}

TEST_CASE("construction normalizes orientation and collapses degenerate rings") {
    const ConvexPolygon cw = ConvexPolygon::from_vertices(
        {{-0.5, 0.5}, {0.5, 0.5}, {0.5, -0.5}, {-0.5, -0.5}});
    CHECK(area(cw) == doctest::Approx(1.0));
    const auto& v = cw.vertices();
    double twice_area = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i)
        twice_area += cross(v[i], v[(i + 1) % v.size()]);
    CHECK(twice_area > 0.0);

    CHECK(ConvexPolygon::from_vertices({{0, 0}, {1, 0}}).is_empty());
    CHECK(ConvexPolygon::from_vertices({{0, 0}, {1, 0}, {2, 0}}).is_empty());
    CHECK(ConvexPolygon::from_vertices({{0, 0}, {1e-13, 0}, {1, 0}, {1, 1}}).size() == 3);
    CHECK_THROWS_AS(ConvexPolygon::from_vertices({{0, 0}, {1, 0}, {1, 1}, {0.2, -0.4}}),
                    std::invalid_argument);
}

TEST_CASE("translate shifts vertices and preserves area") {
    const ConvexPolygon q = unit_square();
    CHECK(max_cyclic_vertex_distance(translate(q, {0, 0}), q) == 0.0);

    const ConvexPolygon shifted = translate(q, {1.0, 0.0});
    const Box box = bounding_box(shifted);
    CHECK(box.lo.x == doctest::Approx(0.5));
    CHECK(box.hi.x == doctest::Approx(1.5));
    CHECK(box.lo.y == doctest::Approx(-0.5));
    CHECK(box.hi.y == doctest::Approx(0.5));

    Rng rng(7);
    for (int i = 0; i < 100; ++i) {
        const ConvexPolygon p = random_convex_polygon(rng);
        const Vec2 w{rng.uniform(-10, 10), rng.uniform(-10, 10)};
        const ConvexPolygon moved = translate(p, w);
        CHECK(moved.size() == p.size());
        CHECK(area(moved) == doctest::Approx(area(p)).epsilon(1e-12));
    }
}

TEST_CASE("apply_affine handles identity, reflection and scaling") {
    const ConvexPolygon hex = notched_square(0.4, 0.3);
    CHECK(max_cyclic_vertex_distance(apply_affine(AffineMap::identity(), hex), hex) == 0.0);

    // normalizing matrix of the hexagonal torus sends (1/2, 1/(2 sqrt 3)) to (1/2, 1/2)
    const double b = std::sqrt(3.0) / 2.0;
    const AffineMap gamma = AffineMap::linear(1.0, 0.0, 0.5, b);
    const Vec2 img = gamma.apply({0.5, 1.0 / (2.0 * std::sqrt(3.0))});
    CHECK(img.x == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(img.y == doctest::Approx(0.5).epsilon(1e-14));

    const ConvexPolygon doubled = apply_affine(AffineMap::scaling(2.0), hex);
    CHECK(area(doubled) == doctest::Approx(4.0 * area(hex)).epsilon(1e-12));

    // orientation-reversing maps keep the output counterclockwise
    const ConvexPolygon mirrored = apply_affine(AffineMap::linear(-1, 0, 0, 1), hex);
    CHECK(area(mirrored) == doctest::Approx(area(hex)).epsilon(1e-12));

    CHECK_THROWS_AS(apply_affine(AffineMap::linear(1, 2, 2, 4), hex), std::invalid_argument);
}

TEST_CASE("intersection: idempotence, boundary touch, square translates") {
    const ConvexPolygon q = unit_square();
    CHECK(area(intersect_convex(q, q)) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(intersect_convex(q, translate(q, {1.0, 0.0})).is_empty());
    CHECK(intersect_convex(q, translate(q, {5.0, 0.0})).is_empty());

    // area(Q & Q_(u,v)) = (1-|u|)(1-|v|)
    CHECK(area(intersect_convex(q, translate(q, {0.25, 0.5}))) ==
          doctest::Approx(0.375).epsilon(1e-13));
    Rng rng(11);
    for (int i = 0; i < 50; ++i) {
        const double u = rng.uniform(-1, 1), v = rng.uniform(-1, 1);
        CHECK(area(intersect_convex(q, translate(q, {u, v}))) ==
              doctest::Approx((1 - std::fabs(u)) * (1 - std::fabs(v))).epsilon(1e-10));
    }

    CHECK(intersect_convex(q, ConvexPolygon::empty()).is_empty());
    CHECK(intersect_convex(ConvexPolygon::empty(), q).is_empty());
}

TEST_CASE("intersection area is commutative") {
    Rng rng(13);
    for (int i = 0; i < 200; ++i) {
        const ConvexPolygon p = random_convex_polygon(rng);
        const ConvexPolygon q = random_convex_polygon(rng);
        CHECK(std::fabs(area(intersect_convex(p, q)) - area(intersect_convex(q, p))) <=
              1e-12);
    }
}

TEST_CASE("fast intersection-area kernel agrees with the general path") {
    Rng rng(17);
    for (int i = 0; i < 300; ++i) {
        const ConvexPolygon p = random_convex_polygon(rng);
        const ConvexPolygon q = random_convex_polygon(rng);
        const Vec2 w{rng.uniform(-2, 2), rng.uniform(-2, 2)};
        const double fast = intersection_area_shifted(p, q, w);
        const double slow = area(intersect_convex(p, translate(q, w)));
        CHECK(fast == doctest::Approx(slow).epsilon(1e-9));
    }
}

TEST_CASE("half-plane intersection: square, redundancy, failure modes") {
    const std::vector<HalfPlane> square_planes{
        {{1, 0}, 0.5}, {{-1, 0}, 0.5}, {{0, 1}, 0.5}, {{0, -1}, 0.5}};
    const HalfPlaneResult sq = halfplane_intersection(square_planes);
    REQUIRE(sq.status == HalfPlaneResult::Status::ok);
    CHECK(max_cyclic_vertex_distance(sq.polygon, unit_square()) <= 1e-9);

    // two of the six lattice planes are redundant at a = 0: a rectangle remains
    const TauParam square_tau = TauParam::make(0.0, 1.3);
    const HalfPlaneResult rect = halfplane_intersection(dirichlet_halfplanes(square_tau));
    REQUIRE(rect.status == HalfPlaneResult::Status::ok);
    CHECK(rect.polygon.size() == 4);
    CHECK(area(rect.polygon) == doctest::Approx(1.3).epsilon(1e-12));

    const std::vector<HalfPlane> open{{{1, 0}, 0.5}, {{0, 1}, 0.5}};
    CHECK(halfplane_intersection(open).status == HalfPlaneResult::Status::unbounded);

    const std::vector<HalfPlane> contradiction{{{1, 0}, -1.0}, {{-1, 0}, -1.0}};
    CHECK(halfplane_intersection(contradiction).status == HalfPlaneResult::Status::empty);
}

TEST_CASE("half-plane area agrees with rejection sampling") {
    Rng rng(20);
    for (int set = 0; set < 50; ++set) {
        // jittered plane angles around a random center keep the region bounded
        const int k = 4 + static_cast<int>(rng.next_u64() % 5);
        const Vec2 ctr{rng.uniform(-2, 2), rng.uniform(-2, 2)};
        std::vector<HalfPlane> planes;
        for (int i = 0; i < k; ++i) {
            const double th = 2.0 * 3.14159265358979 * (i + 0.9 * rng.next_unit()) / k;
            const Vec2 n{std::cos(th), std::sin(th)};
            planes.push_back({n, dot(n, ctr) + rng.uniform(0.2, 1.5)});
        }
        const HalfPlaneResult res = halfplane_intersection(planes);
        REQUIRE(res.status == HalfPlaneResult::Status::ok);

        const Box box = bounding_box(res.polygon);
        const double box_area = (box.hi.x - box.lo.x) * (box.hi.y - box.lo.y);
        const long long n_samples = 20000;
        long long inside = 0;
        for (long long i = 0; i < n_samples; ++i) {
            const Vec2 pt{rng.uniform(box.lo.x, box.hi.x), rng.uniform(box.lo.y, box.hi.y)};
            if (contains_point(res.polygon, pt)) ++inside;
        }
        const double frac = static_cast<double>(inside) / n_samples;
        const double est = box_area * frac;
        const double se = box_area * std::sqrt(frac * (1 - frac) / n_samples) + 1e-12;
        CHECK(std::fabs(est - area(res.polygon)) <= 3.0 * se);
    }
}

TEST_CASE("Minkowski difference of the corner triangle with itself") {
    const ConvexPolygon tri = corner_triangle(0.5, 0.5);
    const ConvexPolygon v = minkowski_diff_convex(tri, tri);
    REQUIRE(v.size() == 6);
    CHECK(area(v) == doctest::Approx(3.0 * 0.5 * 0.5).epsilon(1e-13));
    CHECK(area(v) == doctest::Approx(6.0 * area(tri)).epsilon(1e-13));

    // explicit vertices of the difference hexagon for legs (s, t)
    const double s = 0.5, t = 0.5;
    const ConvexPolygon expected = ConvexPolygon::from_vertices(
        {{s, t}, {0, t}, {-s, 0}, {-s, -t}, {0, -t}, {s, 0}});
    CHECK(max_cyclic_vertex_distance(v, expected) <= 1e-12);

    // membership characterization: w in V iff T meets T shifted by w
    Rng rng(23);
    for (int i = 0; i < 2000; ++i) {
        const Vec2 w{rng.uniform(-0.7, 0.7), rng.uniform(-0.7, 0.7)};
        const bool in_v = contains_point(v, w, 1e-9);
        const bool meets = intersection_area_shifted(tri, tri, w) > 0.0;
        if (in_v != meets) {
            // disagreement is only tolerable within a band around the boundary
            bool near_edge = contains_point(v, w, 1e-3) && !contains_point(v, w, -1e-3);
            CHECK(near_edge);
        }
    }
}

TEST_CASE("Minkowski difference against a convex-hull oracle") {
    Rng rng(29);
    for (int it = 0; it < 100; ++it) {
        const ConvexPolygon p = random_convex_polygon(rng);
        const ConvexPolygon q = random_convex_polygon(rng);
        const ConvexPolygon fast = minkowski_diff_convex(p, q);
        std::vector<Vec2> diffs;
        for (const Vec2& u : p.vertices())
            for (const Vec2& v : q.vertices()) diffs.push_back(u - v);
        const ConvexPolygon oracle = ConvexPolygon::from_vertices(convex_hull(diffs));
        CHECK(area(fast) == doctest::Approx(area(oracle)).epsilon(1e-10));
        for (const Vec2& v : oracle.vertices()) CHECK(contains_point(fast, v, 1e-9));
    }
}

TEST_CASE("self-difference is centrally symmetric") {
    Rng rng(31);
    for (int it = 0; it < 100; ++it) {
        const ConvexPolygon p = random_convex_polygon(rng);
        const ConvexPolygon d = minkowski_diff_convex(p, p);
        std::vector<Vec2> negated;
        for (const Vec2& v : d.vertices()) negated.push_back(-v);
        CHECK(max_cyclic_vertex_distance(d, ConvexPolygon::from_vertices(negated)) <= 1e-10);
    }
}

TEST_CASE("tiny corner triangles behave near the degenerate limit") {
    const ConvexPolygon tiny = corner_triangle(1e-5, 1e-5);
    REQUIRE_FALSE(tiny.is_empty());
    const ConvexPolygon d = minkowski_diff_convex(tiny, tiny);
    CHECK(area(d) == doctest::Approx(3e-10).epsilon(1e-6));
    CHECK(corner_triangle(0.0, 0.3).is_empty());
}

TEST_CASE("unimodular maps preserve area") {
    Rng rng(37);
    for (int it = 0; it < 200; ++it) {
        const ConvexPolygon p = random_convex_polygon(rng);
        const double sh1 = rng.uniform(-1, 1), sh2 = rng.uniform(-1, 1);
        const double th = rng.uniform(0.0, 6.283185307179586);
        AffineMap g = AffineMap::linear(std::cos(th), -std::sin(th), std::sin(th),
                                        std::cos(th)) *
                      AffineMap::linear(1, sh1, 0, 1) * AffineMap::linear(1, 0, sh2, 1);
        g.tx = rng.uniform(-3, 3);
        g.ty = rng.uniform(-3, 3);
        REQUIRE(g.unimodular(1e-9));
        CHECK(std::fabs(area(apply_affine(g, p)) - area(p)) / area(p) <= 1e-10);
    }
}

TEST_CASE("polygon scale guard falls back to the general intersection path") {
    // polygons with many vertices exceed the fixed-size kernel buffers
    std::vector<Vec2> big;
    for (int i = 0; i < 40; ++i) {
        const double th = 2.0 * 3.14159265358979 * i / 40;
        big.push_back({std::cos(th), std::sin(th)});
    }
    const ConvexPolygon circle40 = ConvexPolygon::from_vertices(big);
    const double direct = area(intersect_convex(circle40, translate(circle40, {0.5, 0.0})));
    CHECK(intersection_area_shifted(circle40, circle40, {0.5, 0.0}) ==
          doctest::Approx(direct).epsilon(1e-12));
}
