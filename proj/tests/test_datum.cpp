#include <doctest.h>

#include "sphcox/datum.hpp"
#include "sphcox/errors.hpp"

using namespace sphcox;

static Vec V(std::initializer_list<long> xs) {
    Vec v;
    for (long x : xs) v.push_back(Int(x));
    return v;
}

TEST_CASE("variable table order is blockwise sections then torus") {
    SphericalDatum d = make_spherical_datum(2, {2, 3}, 2, true, {});
    REQUIRE(d.space_table->size() == 7);
    CHECK(d.space_table->at(0).name() == "S[1,1]");
    CHECK(d.space_table->at(1).name() == "S[1,2]");
    CHECK(d.space_table->at(2).name() == "S[2,1]");
    CHECK(d.space_table->at(4).name() == "S[2,3]");
    CHECK(d.space_table->at(5).name() == "T[1]");
    CHECK(d.space_table->at(6).name() == "T[2]");
    CHECK(d.total_block_size() == 5);
    CHECK(d.weight_rank() == 4);
}

TEST_CASE("lattice labels") {
    SphericalDatum d = make_spherical_datum(2, {2, 2}, 1, true, {});
    CHECK(weight_lattice(d).basis_labels ==
          std::vector<std::string>({"v1*", "v2*", "w1*"}));
    CHECK(covaluation_lattice(d).basis_labels ==
          std::vector<std::string>({"v1", "v2", "w1"}));
}

TEST_CASE("monomial weights accumulate block degrees and torus exponents") {
    SphericalDatum d = make_spherical_datum(2, {2, 2}, 1, true, {});
    // S[1,1]*S[1,2]*S[2,1]^3*T[1]^-2 -> (2, 3, -2)
    Vec exps = V({1, 1, 3, 0, -2});
    CHECK(monomial_weight(d, exps) == V({2, 3, -2}));
    CHECK(monomial_weight(d, V({0, 0, 0, 0, 0})) == V({0, 0, 0}));
}

TEST_CASE("datum validation") {
    CHECK_THROWS_AS(make_spherical_datum(2, {2}, 0, true, {}), InputError);
    CHECK_THROWS_AS(make_spherical_datum(1, {0}, 0, true, {}), InputError);
    CHECK_THROWS_AS(make_spherical_datum(-1, {}, 0, true, {}), InputError);
    CHECK_THROWS_AS(make_spherical_datum(0, {}, -1, true, {}), InputError);
    // zero relation
    CHECK_THROWS_AS(make_spherical_datum(1, {2}, 0, true, {"0"}), InputError);
    // S with negative exponent
    CHECK_THROWS_AS(make_spherical_datum(1, {2}, 0, true, {"S[1,1]^-1 - 1"}), InputError);
    // T with negative exponent is allowed
    SphericalDatum ok = make_spherical_datum(1, {2}, 1, true, {"S[1,1]*T[1]^-1 - 1"});
    CHECK(ok.principal());
}

TEST_CASE("ray validation") {
    SphericalDatum d = make_spherical_datum(1, {2}, 1, true, {});
    validate_rays(d, {V({1, 0}), V({0, -1})});
    CHECK_THROWS_AS(validate_rays(d, {V({1})}), InputError);          // wrong dim
    CHECK_THROWS_AS(validate_rays(d, {V({2, 4})}), InputError);       // not primitive
    CHECK_THROWS_AS(validate_rays(d, {V({0, 0})}), InputError);       // zero
    CHECK_THROWS_AS(validate_rays(d, {V({1, 0}), V({1, 0})}), InputError);  // duplicate
}
