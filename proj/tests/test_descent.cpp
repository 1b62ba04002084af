#include <doctest.h>

#include "sphcox/descent.hpp"
#include "sphcox/errors.hpp"
#include "sphcox/tropical.hpp"

using namespace sphcox;

static Vec V(std::initializer_list<long> xs) {
    Vec v;
    for (long x : xs) v.push_back(Int(x));
    return v;
}

static Mat M(std::initializer_list<std::initializer_list<long>> rows) {
    Mat out;
    for (const auto& r : rows) {
        Vec v;
        for (long x : r) v.push_back(Int(x));
        out.push_back(v);
    }
    return out;
}

TEST_CASE("descent maps of the determinant example") {
    BoldDatum b = make_bold_datum(2, 1, 0, M({{-1}, {-1}}), Mat{});
    DescentMaps dm = descent_maps(b);
    REQUIRE(dm.gamma_columns.size() == 2);  // rows of the (rbar+xc) x mbar matrix
    CHECK(dm.gamma_columns == M({{1}, {1}}));
    REQUIRE(dm.torus_weight_basis.size() == 1);
    CHECK(dm.torus_weight_basis[0] == V({1, 1}));
    CHECK(dm.transition == M({{1}}));
    CHECK(dm.pullback == M({{-1}, {-1}, {1}}));
    CHECK(dm.pushforward == M({{-1, -1, 1}}));
}

TEST_CASE("descent maps with a doubled pairing") {
    BoldDatum b = make_bold_datum(1, 1, 0, M({{-2}}), Mat{});
    DescentMaps dm = descent_maps(b);
    CHECK(dm.torus_weight_basis[0] == V({2}));
    CHECK(dm.transition == M({{1}}));
    CHECK(dm.pushforward == M({{-2, 1}}));
}

TEST_CASE("descent maps with a center factor") {
    // d = 0, mu restricted identically: the lift torus equals the center
    BoldDatum b = make_bold_datum(1, 2, 2, M({{0, 0}}), M({{1, 0}, {0, 1}}));
    DescentMaps dm = descent_maps(b);
    CHECK(dm.transition == M({{1, 0}, {0, 1}}));
    CHECK(dm.pullback == M({{0, 0}, {1, 0}, {0, 1}}));
}

TEST_CASE("rank-deficient pairing cannot be lifted") {
    BoldDatum b = make_bold_datum(1, 2, 0, M({{1, 1}}), Mat{});
    CHECK_THROWS_AS(descent_maps(b), MathError);
}

TEST_CASE("lifting bold rays puts them on the torus part") {
    BoldDatum b = make_bold_datum(2, 1, 0, M({{-1}, {-1}}), Mat{});
    DescentMaps dm = descent_maps(b);
    std::vector<Vec> lifted = lift_rays(b, dm, {V({1})});
    REQUIRE(lifted.size() == 1);
    CHECK(lifted[0] == V({0, 0, 1}));
    std::vector<Vec> l2 = lift_rays(b, dm, {V({-1})});
    CHECK(l2[0] == V({0, 0, -1}));
    CHECK_THROWS_AS(lift_rays(b, dm, {V({-3})}), InputError);  // not primitive
}

TEST_CASE("descending the valuation cone round-trips") {
    SphericalDatum d = make_spherical_datum(2, {2, 2}, 1, true,
                                            {"S[1,1]*S[2,2] - S[1,2]*S[2,1] - T[1]"});
    BoldDatum b = make_bold_datum(2, 1, 0, M({{-1}, {-1}}), Mat{});
    DescentMaps dm = descent_maps(b);
    validate_relation_weights(d, b, dm);

    ValuationCone vc = valuation_cone(d, d.relations.front());
    Cone down = descend_cone(b, dm, vc.cone);
    CHECK(down.ambient_dim() == 1);
    CHECK(down.dim() == 1);
    CHECK(down.lineality.empty());
    REQUIRE(down.rays.size() == 1);
    CHECK(down.rays[0] == V({1}));
}

TEST_CASE("relation weights reject a mismatched pairing") {
    SphericalDatum d = make_spherical_datum(2, {2, 2}, 1, true,
                                            {"S[1,1]*S[2,2] - S[1,2]*S[2,1] - T[1]"});
    BoldDatum bad = make_bold_datum(2, 1, 0, M({{-1}, {-2}}), Mat{});
    DescentMaps dm = descent_maps(bad);
    CHECK_THROWS_AS(validate_relation_weights(d, bad, dm), MathError);
}

TEST_CASE("relation weights require matching shapes") {
    // d_matrix rows must match the datum's section blocks; caught as malformed input
    SphericalDatum d = make_spherical_datum(1, {2}, 1, true, {});
    BoldDatum b = make_bold_datum(2, 1, 0, M({{-1}, {-1}}), Mat{});
    DescentMaps dm = descent_maps(b);
    CHECK_THROWS_AS(validate_relation_weights(d, b, dm), InputError);
}
