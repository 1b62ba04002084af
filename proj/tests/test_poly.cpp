#include <doctest.h>

#include "sphcox/errors.hpp"
#include "sphcox/parser.hpp"
#include "sphcox/poly.hpp"

using namespace sphcox;

namespace {

VarTablePtr table_st() {
    // S[1,1], S[1,2], S[2,1], S[2,2], T[1]
    std::vector<Var> vars;
    for (int i = 1; i <= 2; ++i)
        for (int j = 1; j <= 2; ++j) vars.push_back(Var{VarKind::S, i, j, true});
    vars.push_back(Var{VarKind::T, 1, 0, false});
    return std::make_shared<const VarTable>(vars);
}

VarTablePtr table_sw() {
    // S[1,1], S[1,2], W[1], W[2]
    std::vector<Var> vars;
    vars.push_back(Var{VarKind::S, 1, 1, true});
    vars.push_back(Var{VarKind::S, 1, 2, true});
    vars.push_back(Var{VarKind::W, 1, 0, false});
    vars.push_back(Var{VarKind::W, 2, 0, false});
    return std::make_shared<const VarTable>(vars);
}

LaurentPoly parse_on(const VarTablePtr& t, const std::string& s) {
    return parse_poly(s, t);
}

} // namespace

TEST_CASE("parser round-trips the determinant relation") {
    VarTablePtr t = table_st();
    LaurentPoly f = parse_on(t, "S[1,1]*S[2,2] - S[1,2]*S[2,1] - T[1]");
    CHECK(f.term_count() == 3);
    CHECK(f.to_string() == "S[1,1]*S[2,2] - S[1,2]*S[2,1] - T[1]");
}

TEST_CASE("parser accepts whitespace, parens, signs, and powers") {
    VarTablePtr t = table_st();
    CHECK(parse_on(t, "  - ( S[1,1] - S[1,2] ) * 2 ").to_string() ==
          "-2*S[1,1] + 2*S[1,2]");
    CHECK(parse_on(t, "S[1,1]^3").to_string() == "S[1,1]^3");
    CHECK(parse_on(t, "T[1]^-2").to_string() == "T[1]^-2");
    CHECK(parse_on(t, "(S[1,1] + 1)^2").to_string() ==
          "S[1,1]^2 + 2*S[1,1] + 1");
    CHECK(parse_on(t, "3").to_string() == "3");
    CHECK(parse_on(t, "0").is_zero());
    CHECK(parse_on(t, "2 - 2").is_zero());
}

TEST_CASE("parser rejects malformed input") {
    VarTablePtr t = table_st();
    CHECK_THROWS_AS(parse_on(t, ""), InputError);
    CHECK_THROWS_AS(parse_on(t, "S[3,1]"), InputError);        // unknown variable
    CHECK_THROWS_AS(parse_on(t, "W[1]"), InputError);          // not in table
    CHECK_THROWS_AS(parse_on(t, "S[1,1"), InputError);
    CHECK_THROWS_AS(parse_on(t, "S[1,1] +"), InputError);
    CHECK_THROWS_AS(parse_on(t, "S[0,1]"), InputError);        // indices are 1-based
    CHECK_THROWS_AS(parse_on(t, "S[1,1] $ S[1,2]"), InputError);
    CHECK_THROWS_AS(parse_on(t, "(S[1,1] + 1)^-1"), InputError);  // inverse of a sum
}

TEST_CASE("canonical order puts weightless boundary monomials last") {
    VarTablePtr t = table_sw();
    // W carries weight 0, so the pure-W monomial sorts after every S-term
    LaurentPoly f = parse_on(t, "W[1]*W[2]^2 - S[1,1]*S[1,2] + S[1,1]^2");
    CHECK(f.to_string() == "S[1,1]^2 - S[1,1]*S[1,2] + W[1]*W[2]^2");
    // and a constant sorts on par with pure-W monomials, after S-terms
    LaurentPoly g = parse_on(t, "1 - S[1,1] + W[1]");
    CHECK(g.to_string() == "-S[1,1] + W[1] + 1");
}

TEST_CASE("coefficient formatting") {
    VarTablePtr t = table_sw();
    CHECK(parse_on(t, "2*S[1,1] - 3*W[1] + 5").to_string() == "2*S[1,1] - 3*W[1] + 5");
    CHECK(parse_on(t, "-S[1,1]").to_string() == "-S[1,1]");
    CHECK(parse_on(t, "S[1,1] - S[1,2]").to_string() == "S[1,1] - S[1,2]");
}

TEST_CASE("arithmetic and exactness") {
    VarTablePtr t = table_st();
    LaurentPoly det = parse_on(t, "S[1,1]*S[2,2] - S[1,2]*S[2,1]");
    LaurentPoly sq = det * det;
    CHECK(sq.term_count() == 3);  // middle terms merge into -2 S11 S22 S12 S21
    LaurentPoly back = sq - det.pow(2);
    CHECK(back.is_zero());
    CHECK((det - det).is_zero());
    CHECK((-det + det).is_zero());
    LaurentPoly tinv = parse_on(t, "T[1]^-1");
    CHECK((tinv * parse_on(t, "T[1]")).to_string() == "1");
}

TEST_CASE("pow rejects negative exponents on non-monomials") {
    VarTablePtr t = table_st();
    LaurentPoly sum = parse_on(t, "S[1,1] + 1");
    CHECK_THROWS_AS(sum.pow(-1), InputError);
    CHECK(parse_on(t, "T[1]").pow(-3).to_string() == "T[1]^-3");
}

TEST_CASE("remapping between tables") {
    VarTablePtr st = table_st();
    VarTablePtr sw = table_sw();
    LaurentPoly f = parse_on(st, "S[1,1]*S[1,2]");
    // move S[1,1] -> slot 0, S[1,2] -> slot 1 of the S/W table, drop others
    std::vector<std::size_t> map = {0, 1, static_cast<std::size_t>(-1),
                                    static_cast<std::size_t>(-1),
                                    static_cast<std::size_t>(-1)};
    LaurentPoly g = f.remapped(sw, map);
    CHECK(g.to_string() == "S[1,1]*S[1,2]");
    // dropping a variable that occurs is an error
    LaurentPoly h = parse_on(st, "S[2,1]");
    CHECK_THROWS_AS(h.remapped(sw, map), InputError);
}

TEST_CASE("collapse sets selected variables to one") {
    VarTablePtr st = table_st();
    std::vector<Var> no_t;
    for (const Var& v : st->vars())
        if (v.kind != VarKind::T) no_t.push_back(v);
    VarTablePtr target = std::make_shared<const VarTable>(no_t);
    std::vector<bool> drop = {false, false, false, false, true};
    LaurentPoly f = parse_on(st, "S[1,1]*T[1]^2 - T[1]");
    CHECK(f.collapse_to_one(target, drop).to_string() == "S[1,1] - 1");
    LaurentPoly cancels = parse_on(st, "T[1] - 1");
    CHECK(cancels.collapse_to_one(target, drop).is_zero());
}

TEST_CASE("variable table validation") {
    std::vector<Var> dup = {Var{VarKind::S, 1, 1, true}, Var{VarKind::S, 1, 1, true}};
    CHECK_THROWS_AS(VarTable{dup}, InputError);
    std::vector<Var> bad_index = {Var{VarKind::W, 0, 0, false}};
    CHECK_THROWS_AS(VarTable{bad_index}, InputError);
}
