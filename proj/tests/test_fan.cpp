#include <doctest.h>

#include "sphcox/errors.hpp"
#include "sphcox/fan.hpp"

using namespace sphcox;

static Vec V(std::initializer_list<long> xs) {
    Vec v;
    for (long x : xs) v.push_back(Int(x));
    return v;
}

TEST_CASE("omission choices enumerate the product of block sizes") {
    CHECK(enumerate_omissions({2, 2}).size() == 4);
    CHECK(enumerate_omissions({3, 3}).size() == 9);
    CHECK(enumerate_omissions({1}).size() == 1);
    // no blocks: exactly one empty choice
    auto none = enumerate_omissions({});
    REQUIRE(none.size() == 1);
    CHECK(none.front().empty());
    // deterministic odometer order
    auto two = enumerate_omissions({2, 3});
    CHECK(two.size() == 6);
    CHECK(two.front() == std::vector<int>({0, 0}));
    CHECK(two.back() == std::vector<int>({1, 2}));
}

static SphericalDatum sl2_torus_datum() {
    return make_spherical_datum(2, {2, 2}, 1, true,
                                {"S[1,1]*S[2,2] - S[1,2]*S[2,1] - T[1]"});
}

TEST_CASE("iota broadcasts block coordinates") {
    SphericalDatum d = sl2_torus_datum();
    CHECK(iota_embed(d, V({3, -1, 5})) == V({3, 3, -1, -1, 5}));
    CHECK(big_lattice(d).rank == 5);
    CHECK(hat_lattice(d, 2).rank == 7);
}

TEST_CASE("sigma cones of the determinant example") {
    SphericalDatum d = sl2_torus_datum();
    Cone s = sigma_cone(d, V({0, 0, 1}), {0, 1});
    // generators: iota(u) = e5, kept v[1,2] = e2, kept v[2,1] = e3
    CHECK(s.dim() == 3);
    CHECK(s.rays.size() == 3);
    CHECK(is_smooth_cone(s));

    Cone shat = sigma_hat_cone(d, 0, 1, {0, 1});
    CHECK(shat.dim() == 3);
    CHECK(shat.contains(V({0, 0, 0, 0, 0, 1})));  // e[1] generator, not iota(u)
    CHECK_FALSE(shat.contains(V({0, 0, 0, 0, 1, 0})));
}

TEST_CASE("fan sizes for the fixtures") {
    SphericalDatum d = sl2_torus_datum();
    Fan f = fan_of_embedding(d, {V({0, 0, 1})});
    CHECK(f.max_cones.size() == 4);
    CHECK(verify_fan(f).ok());

    Fan fhat = lifted_fan(d, {V({0, 0, 1})});
    CHECK(fhat.max_cones.size() == 4);
    CHECK(fhat.ambient.rank == 6);
    CHECK(verify_fan(fhat).ok());

    Fan empty = fan_of_embedding(d, {});
    CHECK(empty.max_cones.empty());
    CHECK(verify_fan(empty).ok());

    SphericalDatum sld = make_spherical_datum(
        2, {3, 3}, 0, true, {"S[1,1]*S[2,1] + S[1,2]*S[2,2] + S[1,3]*S[2,3] - 1"});
    Fan f18 = fan_of_embedding(sld, {V({-1, 0}), V({-1, -1})});
    CHECK(f18.max_cones.size() == 18);
    FanCheckReport rep = verify_fan(f18);
    CHECK(rep.ok());
    CHECK(rep.cone_count == 18);
    CHECK(rep.cone_dim == 5);
}

TEST_CASE("verify_fan flags overlaps and non-smooth cones") {
    FreeLattice L(2, {"x", "y"});
    Fan bad;
    bad.ambient = L;
    bad.max_cones.push_back(cone_from_rays(L, {V({1, 0}), V({0, 1})}));
    bad.max_cones.push_back(cone_from_rays(L, {V({1, 1}), V({1, -1})}));
    bad.labels = {"a", "b"};
    FanCheckReport rep = verify_fan(bad);
    CHECK_FALSE(rep.ok());
    REQUIRE(rep.bad_pairs.size() == 1);
    CHECK(rep.bad_pairs[0] == std::pair<std::size_t, std::size_t>{0, 1});

    Fan rough;
    rough.ambient = L;
    rough.max_cones.push_back(cone_from_rays(L, {V({1, 0}), V({1, 2})}));
    rough.labels = {"c"};
    FanCheckReport rep2 = verify_fan(rough);
    CHECK_FALSE(rep2.ok());
    REQUIRE(rep2.non_smooth.size() == 1);
    CHECK(rep2.non_smooth[0] == 0);
}

TEST_CASE("serial and parallel verification agree") {
    SphericalDatum sld = make_spherical_datum(
        2, {3, 3}, 0, true, {"S[1,1]*S[2,1] + S[1,2]*S[2,2] + S[1,3]*S[2,3] - 1"});
    Fan f = fan_of_embedding(sld, {V({-1, 0}), V({-1, -1}), V({0, -1})});
    FanCheckReport a = verify_fan(f, false);
    FanCheckReport b = verify_fan(f, true);
    CHECK(a.ok() == b.ok());
    CHECK(a.cone_count == b.cone_count);
    CHECK(a.cone_dim == b.cone_dim);
    CHECK(a.non_smooth == b.non_smooth);
    CHECK(a.bad_pairs == b.bad_pairs);
}
