#include <doctest.h>

#include <fstream>
#include <sstream>

#include "sphcox/errors.hpp"
#include "sphcox/report.hpp"

using namespace sphcox;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    REQUIRE_MESSAGE(in.good(), path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

Problem fixture(const std::string& name) {
    return load_problem_file(std::string(FIXTURE_DIR) + "/" + name + ".toml");
}

void check_golden(const std::string& name, const std::string& command) {
    Problem p = fixture(name);
    Report rep = run_command(command, p);
    CHECK(rep.exit_code == 0);
    std::string expected = read_file(std::string(GOLDEN_DIR) + "/" + name + "." + command + ".txt");
    CHECK_MESSAGE(rep.text == expected, name, " ", command);
}

} // namespace

TEST_CASE("linear combinations and half-spaces format canonically") {
    std::vector<std::string> labels = {"a", "b", "c"};
    CHECK(linear_combo({Int(1), Int(1), Int(-1)}, labels) == "a + b - c");
    CHECK(linear_combo({Int(2), Int(0), Int(-3)}, labels) == "2*a - 3*c");
    CHECK(linear_combo({Int(-1), Int(0), Int(0)}, labels) == "-a");
    CHECK(linear_combo({Int(0), Int(0), Int(0)}, labels) == "0");
    CHECK(halfspace_line({Int(1), Int(1), Int(-1)}, labels) == "a + b - c <= 0");
    CHECK(halfspace_line({Int(-1), Int(0), Int(2)}, labels) == "a - 2*c >= 0");
    CHECK(halfspace_line({Int(0), Int(-2), Int(1)}, labels) == "2*b - c >= 0");
}

TEST_CASE("reports match the golden files") {
    for (const char* name : {"sl2_torus", "sl2_ntorus", "sl_d", "sl3_horospherical", "toric"})
        for (const char* cmd : {"cox", "valcone", "roots", "clgroup", "fan-check"})
            check_golden(name, cmd);
    check_golden("sl2_torus", "lift");
    check_golden("sl2_ntorus", "lift");
    check_golden("sl_d", "brion-compare");
}

TEST_CASE("reports are deterministic") {
    Problem p = fixture("sl_d");
    Report a = run_command("cox", p);
    Report b = run_command("cox", p);
    CHECK(a.text == b.text);
    CHECK(a.data == b.data);
    ReportOptions serial;
    serial.parallel = false;
    Report c = run_command("cox", p, serial);
    CHECK(a.text == c.text);
}

TEST_CASE("json mirrors the text content") {
    Report rep = run_command("cox", fixture("sl2_torus"));
    CHECK(rep.data["command"] == "cox");
    CHECK(rep.data["class_group"] == "Z^2");
    CHECK(rep.data["factorial"] == true);
    CHECK(rep.data["relations"].size() == 1);
    CHECK(rep.data["relations"][0] == "S[1,1]*S[2,2] - S[1,2]*S[2,1] - W[1]");
    Report vc = run_command("valcone", fixture("sl3_horospherical"));
    CHECK(vc.data["horospherical"] == true);
    CHECK(vc.data["halfspaces"].empty());
}

TEST_CASE("command errors carry the right exception type") {
    Problem p = fixture("sl2_torus");
    CHECK_THROWS_AS(run_command("bogus", p), InputError);
    CHECK_THROWS_AS(run_command("brion-compare", p), InputError);  // no [wonderful]
    Problem t = fixture("toric");
    CHECK_THROWS_AS(run_command("lift", t), InputError);  // no [bold]
}

TEST_CASE("non-principal ideals are unsupported for tropical commands") {
    Problem p = load_problem_text(
        "[space]\nr = 1\ndims = [2]\nm = 0\n"
        "[[space.relations]]\npoly = \"S[1,1]*S[1,2] - 1\"\n"
        "[[space.relations]]\npoly = \"S[1,1]^2 - 1\"\n");
    CHECK_THROWS_AS(run_command("valcone", p), UnsupportedError);
    CHECK_THROWS_AS(run_command("roots", p), UnsupportedError);
    // cox still works, with warnings
    Report rep = run_command("cox", p);
    CHECK(rep.exit_code == 0);
    CHECK(rep.data["generating_guaranteed"] == false);
    CHECK(rep.data["warnings"].size() == 2);
}

TEST_CASE("rays outside the valuation cone: error, then warning under the flag") {
    Problem p = load_problem_text(
        "[space]\nr = 2\ndims = [2, 2]\nm = 1\n"
        "[[space.relations]]\npoly = \"S[1,1]*S[2,2] - S[1,2]*S[2,1] - T[1]\"\n"
        "[embedding]\nrays = [[1, 1, 0]]\n");
    CHECK_THROWS_AS(run_command("cox", p), MathError);
    ReportOptions allow;
    allow.allow_outside_valuation_cone = true;
    Report rep = run_command("cox", p, allow);
    CHECK(rep.exit_code == 0);
    CHECK(rep.data["warnings"].size() == 1);
}

TEST_CASE("embedding and bold rays must be consistent when both given") {
    Problem p = load_problem_text(
        "[space]\nr = 2\ndims = [2, 2]\nm = 1\n"
        "[[space.relations]]\npoly = \"S[1,1]*S[2,2] - S[1,2]*S[2,1] - T[1]\"\n"
        "[embedding]\nrays = [[0, 1, 1]]\n"
        "[bold]\nd_matrix = [[-1], [-1]]\nxc_rank = 0\nmu_restriction = []\n"
        "bold_rays = [[1]]\n");
    CHECK_THROWS_AS(run_command("clgroup", p), MathError);
}

TEST_CASE("bold rays are derived from the embedding when omitted") {
    Problem p = load_problem_text(
        "[space]\nr = 2\ndims = [2, 2]\nm = 1\n"
        "[[space.relations]]\npoly = \"S[1,1]*S[2,2] - S[1,2]*S[2,1] - T[1]\"\n"
        "[embedding]\nrays = [[0, 0, 1]]\n"
        "[bold]\nd_matrix = [[-1], [-1]]\nxc_rank = 0\nmu_restriction = []\n");
    Report rep = run_command("clgroup", p);
    CHECK(rep.data["class_group"] == "Z^2");
    CHECK(rep.data["degrees"].size() == 3);
}

TEST_CASE("declared comparison roots must match the computed ones") {
    Problem p = load_problem_text(
        "[space]\nr = 2\ndims = [3, 3]\nm = 0\n"
        "[[space.relations]]\npoly = \"S[1,1]*S[2,1] + S[1,2]*S[2,2] + S[1,3]*S[2,3] - 1\"\n"
        "[embedding]\nrays = [[-1, 0]]\n"
        "[wonderful]\nvars = [\"X[1,1]\"]\nz_sections = [\"X[1,1]\"]\nroots = [[2, 1]]\n");
    CHECK_THROWS_AS(run_command("brion-compare", p), MathError);
}
