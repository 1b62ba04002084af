#include <doctest.h>

#include <fstream>
#include <sstream>

#include "sphcox/errors.hpp"
#include "sphcox/input.hpp"

using namespace sphcox;

TEST_CASE("toml subset: scalars, arrays, comments") {
    TomlDoc doc = parse_toml(
        "# leading comment\n"
        "[alpha]\n"
        "count = -12  # trailing comment\n"
        "flag = true\n"
        "name = \"a # not-a-comment\"\n"
        "grid = [[1, 2], [3, 4],]\n"
        "multi = [\n"
        "  [1, 0],  # row one\n"
        "  [0, 1],\n"
        "]\n"
        "empty = []\n");
    const TomlTable& t = doc.at("alpha").front();
    CHECK(t.at("count").integer == -12);
    CHECK(t.at("flag").boolean == true);
    CHECK(t.at("name").str == "a # not-a-comment");
    CHECK(t.at("grid").array.size() == 2);
    CHECK(t.at("grid").array[1].array[0].integer == 3);
    CHECK(t.at("multi").array.size() == 2);
    CHECK(t.at("empty").array.empty());
}

TEST_CASE("toml subset: arrays of tables accumulate") {
    TomlDoc doc = parse_toml(
        "[[thing]]\n"
        "x = 1\n"
        "[[thing]]\n"
        "x = 2\n");
    REQUIRE(doc.at("thing").size() == 2);
    CHECK(doc.at("thing")[0].at("x").integer == 1);
    CHECK(doc.at("thing")[1].at("x").integer == 2);
}

TEST_CASE("toml subset: malformed input") {
    CHECK_THROWS_AS(parse_toml("key value\n"), InputError);
    CHECK_THROWS_AS(parse_toml("[unclosed\n"), InputError);
    CHECK_THROWS_AS(parse_toml("k = [1, 2\n"), InputError);
    CHECK_THROWS_AS(parse_toml("k = \"open\n"), InputError);
    CHECK_THROWS_AS(parse_toml("k = maybe\n"), InputError);
    CHECK_THROWS_AS(parse_toml("k = 1\nk = 2\n"), InputError);
    CHECK_THROWS_AS(parse_toml("[a]\nx = 1\n[a]\ny = 2\n"), InputError);
}

TEST_CASE("problem loading validates the schema") {
    CHECK_THROWS_AS(load_problem_text(""), InputError);                       // no [space]
    CHECK_THROWS_AS(load_problem_text("[space]\nr = 1\nm = 0\n"), InputError);  // no dims
    CHECK_THROWS_AS(load_problem_text("[space]\nr = 0\ndims = []\nm = 0\nzz = 1\n"),
                    InputError);  // unknown key
    CHECK_THROWS_AS(load_problem_text("[spaces]\n"), InputError);  // unknown section
    CHECK_THROWS_AS(load_problem_text("x = 1\n[space]\nr = 0\ndims = []\nm = 1\n"),
                    InputError);  // top-level keys
    CHECK_THROWS_AS(load_problem_text("[space]\nr = 0\ndims = []\nm = \"two\"\n"),
                    InputError);  // type mismatch
}

TEST_CASE("a minimal problem") {
    Problem p = load_problem_text(
        "[space]\n"
        "r = 1\n"
        "dims = [2]\n"
        "m = 1\n"
        "[[space.relations]]\n"
        "poly = \"S[1,1]*S[1,2] - T[1]\"\n"
        "[embedding]\n"
        "rays = [[0, 1]]\n");
    CHECK(p.datum.r == 1);
    CHECK(p.datum.dims == std::vector<int>({2}));
    CHECK(p.datum.m == 1);
    CHECK(p.datum.h_connected);
    REQUIRE(p.datum.relations.size() == 1);
    CHECK(p.datum.relations.front().to_string() == "S[1,1]*S[1,2] - T[1]");
    CHECK(p.embedding_given);
    REQUIRE(p.rays.size() == 1);
    CHECK(p.rays[0][1] == 1);
    CHECK_FALSE(p.bold.has_value());
    CHECK_FALSE(p.wonderful.has_value());
}

TEST_CASE("fixtures load with all optional sections") {
    std::ifstream in(std::string(FIXTURE_DIR) + "/sl2_torus.toml");
    REQUIRE(in.good());
    std::ostringstream buf;
    buf << in.rdbuf();
    Problem p = load_problem_text(buf.str());
    CHECK(p.datum.r == 2);
    CHECK(p.embedding_given);
    REQUIRE(p.bold.has_value());
    CHECK(p.bold->rbar == 2);
    CHECK(p.bold->mbar == 1);
    CHECK(p.bold->xc_rank == 0);
    CHECK(p.bold_rays_given);
    REQUIRE(p.bold_rays.size() == 1);

    Problem w = load_problem_file(std::string(FIXTURE_DIR) + "/sl_d.toml");
    REQUIRE(w.wonderful.has_value());
    CHECK(w.wonderful->ring->size() == 6);
    CHECK(w.wonderful->z_sections.size() == 1);
    CHECK(w.wonderful->roots.size() == 1);

    CHECK_THROWS_AS(load_problem_file("/nonexistent/x.toml"), InputError);
}

TEST_CASE("relation polynomials are validated at load time") {
    CHECK_THROWS_AS(load_problem_text("[space]\nr = 1\ndims = [2]\nm = 0\n"
                                      "[[space.relations]]\npoly = \"S[9,9]\"\n"),
                    InputError);
    CHECK_THROWS_AS(load_problem_text("[space]\nr = 1\ndims = [2]\nm = 0\n"
                                      "[[space.relations]]\npoly = \"W[1]\"\n"),
                    InputError);
}
