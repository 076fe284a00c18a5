#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"

using namespace genpos;
using testutil::t;

TEST_CASE("polynomial parsing and printing") {
    FieldSpec QQ;
    auto vars = testutil::var_names(3);
    auto f = parse_polynomial(QQ, vars, "x1^2*x2 - 3*x2*x3^2 + x3^3");
    CHECK(f.num_terms() == 3);
    CHECK(f.leading_term() == t(3, "x1^2*x2"));
    CHECK(f.coefficient(t(3, "x2*x3^2")) == Scalar::from_int(QQ, -3));
    // round trip through the printer
    auto g = parse_polynomial(QQ, vars, f.str(vars));
    CHECK(f == g);

    auto h = parse_polynomial(QQ, vars, "2*x1*x2 + x1*x2 - x3^2");
    CHECK(h.coefficient(t(3, "x1*x2")) == Scalar::from_int(QQ, 3));

    FieldSpec F5{5};
    auto m = parse_polynomial(F5, vars, "7*x1 + x2");
    CHECK(m.coefficient(t(3, "x1")) == Scalar::from_int(F5, 2));
    CHECK(parse_polynomial(F5, vars, "5*x1").is_zero());
}

TEST_CASE("parse errors carry positions") {
    FieldSpec QQ;
    auto vars = testutil::var_names(2);
    CHECK_THROWS_AS(parse_polynomial(QQ, vars, "x1 + y"), ParseError);
    CHECK_THROWS_AS(parse_polynomial(QQ, vars, "x1^"), ParseError);
    CHECK_THROWS_AS(parse_polynomial(QQ, vars, ""), ParseError);
}

TEST_CASE("ideal file format") {
    auto f = parse_ideal_file(
        "# sample\n"
        "field: QQ\n"
        "vars: x1 x2 x3\n"
        "label: demo\n"
        "I: x1^2, x1*x2 + x2*x3,\n"
        "   x2^3\n");
    CHECK(f.field.rationals());
    CHECK(f.vars == testutil::var_names(3));
    CHECK(f.ideal.generators().size() == 3);
    CHECK(f.metadata.at("label") == "demo");

    auto g = parse_ideal_file("field: GF(7)\nvars: x1 x2\nI: x1^2 + 3*x1*x2\n");
    CHECK(g.field.p == 7);

    CHECK_THROWS_AS(parse_ideal_file("vars: x1\nI: x1\n"), ParseError);          // no field
    CHECK_THROWS_AS(parse_ideal_file("field: QQ\nI: x1\n"), ParseError);         // no vars
    CHECK_THROWS_AS(parse_ideal_file("field: QQ\nvars: x1\n"), ParseError);      // no ideal
    CHECK_THROWS_AS(parse_ideal_file("field: GF(6)\nvars: x1\nI: x1\n"), ParseError);
    // inhomogeneous generator
    CHECK_THROWS_AS(parse_ideal_file("field: QQ\nvars: x1 x2\nI: x1^2 + x2\n"), ParseError);
}

TEST_CASE("every shipped fixture parses") {
    for (int i = 1; i <= 24; ++i) {
        char name[32];
        std::snprintf(name, sizeof name, "case%02d.ideal", i);
        auto f = testutil::load_fixture(name);
        CHECK(!f.ideal.generators().empty());
        for (const auto& g : f.ideal.generators()) CHECK(g.is_homogeneous());
    }
    for (const char* name : {"reg01.ideal", "reg02.ideal", "reg03.ideal", "reg04.ideal"})
        CHECK(!testutil::load_fixture(name).ideal.generators().empty());
}
