#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "numindex/errors.hpp"
#include "numindex/io.hpp"

#include <cstdio>
#include <fstream>

using namespace numindex;
using nlohmann::json;

TEST_CASE("fraction strings round trip")
{
    CHECK(to_fraction(Rat(1, 2)) == "1/2");
    CHECK(to_fraction(Rat(-3, 4)) == "-3/4");
    CHECK(to_fraction(Rat(5)) == "5");
    CHECK(to_fraction(Rat(0)) == "0");
    CHECK(to_fraction(Rat(2, 4)) == "1/2");

    CHECK(parse_fraction("1/2") == Rat(1, 2));
    CHECK(parse_fraction("-7/3") == Rat(-7, 3));
    CHECK(parse_fraction("+4/6") == Rat(2, 3));
    CHECK(parse_fraction("12") == 12);
    CHECK(parse_fraction(to_fraction(Rat(-1234567, 891))) ==
          Rat(-1234567, 891));

    CHECK_THROWS_AS(parse_fraction(""), PreconditionError);
    CHECK_THROWS_AS(parse_fraction("1/0"), PreconditionError);
    CHECK_THROWS_AS(parse_fraction("a/b"), PreconditionError);
    CHECK_THROWS_AS(parse_fraction("1.5"), PreconditionError);
    CHECK_THROWS_AS(parse_fraction("1/2/3"), PreconditionError);
}

TEST_CASE("rational json values")
{
    CHECK(rational_from_json(json(3)) == 3);
    CHECK(rational_from_json(json(-2)) == -2);
    CHECK(rational_from_json(json("5/8")) == Rat(5, 8));
    CHECK_THROWS_AS(rational_from_json(json(0.5)), PreconditionError);
    CHECK_THROWS_AS(rational_from_json(json::array()), PreconditionError);

    CHECK(rational_to_json(Rat(5, 8)).get<std::string>() == "5/8");
}

TEST_CASE("matrices from json keep exactness")
{
    const ParsedMatrix exact =
        matrix_from_json(json::parse(R"([[1, "1/2"], ["-2/3", 0]])"));
    REQUIRE(exact.exact);
    CHECK(exact.rational(0, 1) == Rat(1, 2));
    CHECK(exact.rational(1, 0) == Rat(-2, 3));
    CHECK(exact.floating(0, 1) == doctest::Approx(0.5));

    const ParsedMatrix floaty =
        matrix_from_json(json::parse(R"([[1, 0.5], [0, 1]])"));
    CHECK_FALSE(floaty.exact);
    CHECK(floaty.floating(0, 1) == 0.5);

    CHECK_THROWS_AS(matrix_from_json(json::parse(R"([[1, 2], [3]])")),
                    PreconditionError);
    CHECK_THROWS_AS(matrix_from_json(json::parse("[]")), PreconditionError);
    CHECK_THROWS_AS(matrix_from_json(json::parse("3")), PreconditionError);
}

TEST_CASE("space aliases")
{
    const ParsedSpace cube = parse_space_arg("linf:3");
    CHECK(cube.space.is_polytope());
    CHECK(cube.space.dim() == 3);
    CHECK(cube.space.vertices().rows() == 8);

    const ParsedSpace cross = parse_space_arg("l1:2");
    CHECK(cross.space.vertices().rows() == 4);

    const ParsedSpace euclid = parse_space_arg("l2:2");
    CHECK_FALSE(euclid.space.is_polytope());
    CHECK(euclid.space.p_exponent() == 2.0);

    const ParsedSpace lp = parse_space_arg("lp:2:1.5");
    CHECK(lp.space.p_exponent() == 1.5);

    const ParsedSpace oct = parse_space_arg("octagon");
    CHECK(oct.space.vertices().rows() == 8);

    CHECK_THROWS_AS(parse_space_arg("linf:0"), PreconditionError);
    CHECK_THROWS_AS(parse_space_arg("linf:17"), PreconditionError);
    CHECK_THROWS_AS(parse_space_arg("linf:x"), PreconditionError);
    CHECK_THROWS_AS(parse_space_arg("lp:2:0.5"), PreconditionError);
    CHECK_THROWS_AS(parse_space_arg("nonsense"), PreconditionError);
}

TEST_CASE("space from json")
{
    const ParsedSpace s = space_from_json(json::parse(
        R"({"name": "diamond", "kind": "polytope",
            "vertices": [[1, 0], [-1, 0], [0, "1/1"], [0, -1]]})"));
    CHECK(s.space.name() == "diamond");
    CHECK(s.space.vertices().rows() == 4);
    CHECK(s.warnings.empty());

    const ParsedSpace lp = space_from_json(json::parse(
        R"({"kind": "lp", "dim": 3, "p": 2.5})"));
    CHECK(lp.space.dim() == 3);
    CHECK(lp.space.p_exponent() == 2.5);

    CHECK_THROWS_AS(space_from_json(json::parse(
                        R"({"kind": "polytope", "vertices": [[1, 0], [0, 1]]})")),
                    PreconditionError);
    CHECK_THROWS_AS(space_from_json(json::parse(
                        R"({"kind": "lp", "dim": 2, "p": 0.5})")),
                    PreconditionError);
    CHECK_THROWS_AS(space_from_json(json::parse(
                        R"({"kind": "polytope", "dim": 3,
                            "vertices": [[1, 0], [-1, 0], [0, 1], [0, -1]]})")),
                    PreconditionError);
}

TEST_CASE("half vertex lists close under negation on request")
{
    const ParsedSpace s = space_from_json(json::parse(
        R"({"kind": "polytope", "symmetrize": true,
            "vertices": [[1, 0], [0, 1]]})"));
    CHECK(s.space.vertices().rows() == 4);
    REQUIRE(s.warnings.size() == 1);
    CHECK(s.warnings[0].find("negation") != std::string::npos);
}

TEST_CASE("space json round trip is exact")
{
    const Space s = Space::octagon();
    const ParsedSpace back = space_from_json(space_to_json(s));
    REQUIRE(back.space.vertices().rows() == s.vertices().rows());
    for (Eigen::Index r = 0; r < s.vertices().rows(); ++r)
        CHECK(lex_compare(back.space.vertices().row(r).transpose(),
                          s.vertices().row(r).transpose()) == 0);

    const json j = space_to_json(Space::lp_space("p", 2, 3.0));
    CHECK(j["kind"] == "lp");
    CHECK(j["p"] == 3.0);
}

TEST_CASE("inline and file space arguments")
{
    const ParsedSpace inline_space = parse_space_arg(
        R"({"kind": "polytope", "vertices": [[1, 1], [-1, -1],
            [1, -1], [-1, 1]]})");
    CHECK(inline_space.space.vertices().rows() == 4);

    const std::string path = "tmp_space_arg.json";
    {
        std::ofstream out(path);
        out << R"({"kind": "lp", "dim": 2, "p": 2})";
    }
    const ParsedSpace from_file = parse_space_arg(path);
    CHECK_FALSE(from_file.space.is_polytope());
    std::remove(path.c_str());

    CHECK_THROWS_AS(parse_space_arg("no_such_file.json"), PreconditionError);
}

TEST_CASE("inline and file matrix arguments")
{
    const ParsedMatrix m = parse_matrix_arg(R"([["1/2", 0], [0, 1]])");
    REQUIRE(m.exact);
    CHECK(m.rational(0, 0) == Rat(1, 2));

    const std::string path = "tmp_matrix_arg.json";
    {
        std::ofstream out(path);
        out << R"([[1, 2], [3, 4]])";
    }
    const ParsedMatrix from_file = parse_matrix_arg(path);
    CHECK(from_file.rational(1, 1) == 4);
    std::remove(path.c_str());
}

TEST_CASE("operators built from parsed matrices dispatch by exactness")
{
    const Space s = Space::cube(2);
    const Operator exact =
        make_operator(s, parse_matrix_arg(R"([[1, 0], ["1/2", 1]])"));
    CHECK(exact.exact());

    const Operator floaty =
        make_operator(s, parse_matrix_arg(R"([[1, 0], [0.5, 1]])"));
    CHECK_FALSE(floaty.exact());

    CHECK_THROWS_AS(make_operator(s, parse_matrix_arg("[[1, 0, 0], [0, 1, 0], [0, 0, 1]]")),
                    PreconditionError);
}

TEST_CASE("report envelope carries the shared fields")
{
    const Space s = Space::cube(2);
    const json report = make_report("op norm", s, json{{"matrix", "[[1,0],[0,1]]"}},
                                    json{{"value", "1"}}, json::array(),
                                    json{{"mode", "exact"}});
    CHECK(report.contains("command"));
    CHECK(report.contains("space"));
    CHECK(report.contains("inputs"));
    CHECK(report.contains("result"));
    CHECK(report.contains("certifications"));
    CHECK(report.contains("provenance"));
    CHECK(report["command"] == "op norm");
    CHECK(report["space"]["dim"] == 2);
}
