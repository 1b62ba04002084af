#include <doctest.h>

#include "sphcox/cone.hpp"

using namespace sphcox;

static Vec V(std::initializer_list<long> xs) {
    Vec v;
    for (long x : xs) v.push_back(Int(x));
    return v;
}

static const FreeLattice L2(2, {"x", "y"});
static const FreeLattice L3(3, {"x", "y", "z"});

TEST_CASE("first quadrant round-trips between descriptions") {
    Cone q = cone_from_rays(L2, {V({1, 0}), V({0, 1})});
    CHECK(q.rays.size() == 2);
    CHECK(q.lineality.empty());
    CHECK(q.facets.size() == 2);
    CHECK(q.span_eqs.empty());
    CHECK(q.dim() == 2);
    Cone q2 = cone_from_inequalities(L2, q.facets);
    CHECK(q == q2);
    CHECK(q.contains(V({3, 5})));
    CHECK(q.contains(V({0, 0})));
    CHECK_FALSE(q.contains(V({-1, 2})));
}

TEST_CASE("non-extreme generators are filtered") {
    Cone q = cone_from_rays(L2, {V({1, 0}), V({1, 1}), V({2, 1}), V({0, 1})});
    CHECK(q.rays.size() == 2);
    CHECK(q.rays[0] == V({0, 1}));
    CHECK(q.rays[1] == V({1, 0}));
}

TEST_CASE("generators are made primitive") {
    Cone c = cone_from_rays(L2, {V({2, 4})});
    REQUIRE(c.rays.size() == 1);
    CHECK(c.rays[0] == V({1, 2}));
    CHECK(c.dim() == 1);
    CHECK(c.span_eqs.size() == 1);
}

TEST_CASE("half-space has lineality") {
    Cone h = cone_from_inequalities(L2, {V({0, 1})});
    CHECK(h.lineality.size() == 1);
    CHECK(h.rays.size() == 1);
    CHECK(h.dim() == 2);
    CHECK(h.contains(V({-7, 0})));
    CHECK(h.contains(V({7, 1})));
    CHECK_FALSE(h.contains(V({0, -1})));
}

TEST_CASE("full space and zero cone") {
    Cone f = cone_full(L3);
    CHECK(f.lineality.size() == 3);
    CHECK(f.rays.empty());
    CHECK(f.facets.empty());
    CHECK(f.span_eqs.empty());
    CHECK(f.contains(V({-1, 5, 9})));

    Cone z = cone_from_rays(L3, {});
    CHECK(z.is_zero());
    CHECK(z.dim() == 0);
    CHECK(z.span_eqs.size() == 3);
    CHECK(z.contains(V({0, 0, 0})));
    CHECK_FALSE(z.contains(V({1, 0, 0})));
}

TEST_CASE("a line is pure lineality") {
    Cone l = cone_from_rays(L2, {V({1, 2}), V({-1, -2})});
    CHECK(l.rays.empty());
    CHECK(l.lineality.size() == 1);
    CHECK(l.dim() == 1);
}

TEST_CASE("intersection of quadrant and half-space") {
    Cone q = cone_from_rays(L2, {V({1, 0}), V({0, 1})});
    Cone h = cone_from_inequalities(L2, {V({1, -1})});  // x >= y
    Cone i = intersect(q, h);
    CHECK(i.rays.size() == 2);
    CHECK(i.contains(V({2, 1})));
    CHECK_FALSE(i.contains(V({1, 2})));
}

TEST_CASE("faces of the quadrant") {
    Cone q = cone_from_rays(L2, {V({1, 0}), V({0, 1})});
    Cone x_axis = cone_from_rays(L2, {V({1, 0})});
    Cone origin = cone_from_rays(L2, {});
    Cone diag = cone_from_rays(L2, {V({1, 1})});
    CHECK(is_face(x_axis, q));
    CHECK(is_face(origin, q));
    CHECK(is_face(q, q));
    CHECK_FALSE(is_face(diag, q));   // contained but not a face
    CHECK_FALSE(is_face(q, x_axis)); // not even contained
}

TEST_CASE("intersect_is_face distinguishes facial from overlapping") {
    Cone a = cone_from_rays(L2, {V({1, 0}), V({0, 1})});
    Cone b = cone_from_rays(L2, {V({0, 1}), V({-1, 0})});
    auto [ok, common] = intersect_is_face(a, b);
    CHECK(ok);
    CHECK(common.rays.size() == 1);

    Cone c = cone_from_rays(L2, {V({1, 1}), V({1, -1})});
    auto [bad, overlap] = intersect_is_face(a, c);
    CHECK_FALSE(bad);
    CHECK(overlap.dim() == 2);
}

TEST_CASE("smoothness is unimodularity of the ray matrix") {
    CHECK(is_smooth_cone(cone_from_rays(L2, {V({1, 0}), V({0, 1})})));
    CHECK(is_smooth_cone(cone_from_rays(L2, {V({1, 0})})));
    CHECK(is_smooth_cone(cone_from_rays(L2, {})));
    CHECK_FALSE(is_smooth_cone(cone_from_rays(L2, {V({1, 0}), V({1, 2})})));
    CHECK_FALSE(is_smooth_cone(cone_from_inequalities(L2, {V({0, 1})})));  // lineality
    // saturated but 3 rays in rank 2 is impossible for smooth
    CHECK_FALSE(is_smooth_cone(cone_from_rays(L3, {V({1, 0, 0}), V({0, 1, 0}), V({1, 1, 2})})));
}

TEST_CASE("dual halfspaces reproduce the cone") {
    Cone c = cone_from_rays(L3, {V({1, 0, 0}), V({1, 2, 0})});
    HalfspaceDescription hd = dual_halfspaces(c);
    Cone back = cone_from_inequalities(L3, hd.inner_normals, hd.span_eqs);
    CHECK(back == c);
    CHECK(hd.span_eqs.size() == 1);
}
