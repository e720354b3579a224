#include <doctest.h>

#include <fstream>

#include "gftk/a348410.hpp"
#include "gftk/parse.hpp"

using namespace gftk;

TEST_CASE("parse_xy basic polynomials") {
    XYPoly p = parse_xy("1 - x - y");
    CHECK(p.terms().size() == 3);
    CHECK(p.terms().at({0, 0}) == 1);
    CHECK(p.terms().at({1, 0}) == -1);
    CHECK(p.terms().at({0, 1}) == -1);

    XYPoly q = parse_xy("x^2*y + 3");
    CHECK(q.terms().at({2, 1}) == 1);
    CHECK(q.terms().at({0, 0}) == 3);
}

TEST_CASE("parse_xy rational coefficients and signs") {
    XYPoly p = parse_xy("-1/2*x + 2/4*y");
    CHECK(p.terms().at({1, 0}) == reduced(-1, 2));
    CHECK(p.terms().at({0, 1}) == reduced(1, 2));

    CHECK(parse_xy("+x").terms().at({1, 0}) == 1);
    CHECK(parse_xy("0").is_zero());
    CHECK(parse_xy("x - x").is_zero());
}

TEST_CASE("parse_xy expands products and powers") {
    // (1+x)(1-x)^2 = 1 - x - x^2 + x^3
    XYPoly p = parse_xy("(1+x)*(1-x)^2");
    CHECK(p.terms().at({0, 0}) == 1);
    CHECK(p.terms().at({1, 0}) == -1);
    CHECK(p.terms().at({2, 0}) == -1);
    CHECK(p.terms().at({3, 0}) == 1);
    CHECK(p.terms().size() == 4);

    CHECK(parse_xy("(x+y)^0").terms().at({0, 0}) == 1);
    CHECK(parse_xy("((x))").terms().at({1, 0}) == 1);
}

TEST_CASE("parse_xy matches the built-in diagonal input") {
    CHECK(parse_xy("(1+x)*(1-x)^2") == a348410_f().num);
    CHECK(parse_xy("1 - x - x^2 + x^3 - y") == a348410_f().den);
}

TEST_CASE("parse_xy is whitespace insensitive but requires explicit *") {
    CHECK(parse_xy(" 1-x\t- y ") == parse_xy("1-x-y"));
    CHECK_THROWS_AS(parse_xy("2x"), InvalidArgument);
    CHECK_THROWS_AS(parse_xy("x y"), InvalidArgument);
}

TEST_CASE("parse_xy rejects malformed input with a position") {
    CHECK_THROWS_AS(parse_xy(""), InvalidArgument);
    CHECK_THROWS_AS(parse_xy("x +"), InvalidArgument);
    CHECK_THROWS_AS(parse_xy("(1+x"), InvalidArgument);
    CHECK_THROWS_AS(parse_xy("1+x)"), InvalidArgument);
    CHECK_THROWS_AS(parse_xy("x^"), InvalidArgument);
    CHECK_THROWS_AS(parse_xy("x^-2"), InvalidArgument);
    CHECK_THROWS_AS(parse_xy("x^99999"), InvalidArgument);
    CHECK_THROWS_AS(parse_xy("z"), InvalidArgument);
    CHECK_THROWS_AS(parse_xy("1//2"), InvalidArgument);
    try {
        parse_xy("1 + ?");
    } catch (const InvalidArgument& e) {
        CHECK(std::string(e.what()).find("position") != std::string::npos);
    }
}

TEST_CASE("parse_coefficients plain rows") {
    auto c = parse_coefficients("1\n1\n5\n19\n");
    CHECK(c == std::vector<Rational>{1, 1, 5, 19});
    auto r = parse_coefficients("1/2\n-3/4\n");
    CHECK(r[0] == reduced(1, 2));
    CHECK(r[1] == reduced(-3, 4));
}

TEST_CASE("parse_coefficients b-file rows with comments") {
    auto c = parse_coefficients("# A000045\n0 0\n1 1\n2 1\n3 2\n\n4 3\n");
    CHECK(c == std::vector<Rational>{0, 1, 1, 2, 3});
}

TEST_CASE("parse_coefficients rejects inconsistent layouts") {
    CHECK_THROWS_AS(parse_coefficients("1\n2 5\n"), InvalidArgument);
    CHECK_THROWS_AS(parse_coefficients("0 1\n2 1\n"), InvalidArgument); // gap in indices
    CHECK_THROWS_AS(parse_coefficients("0 1 7\n"), InvalidArgument);   // extra field
    CHECK_THROWS_AS(parse_coefficients("abc\n"), InvalidArgument);
    CHECK_THROWS_AS(parse_coefficients("0 x\n"), InvalidArgument);
    CHECK_THROWS_AS(parse_coefficients("1/2 3\n"), InvalidArgument); // fractional index
    // no data is not a parse error; emptiness is the caller's concern
    CHECK(parse_coefficients("").empty());
    CHECK(parse_coefficients("# only comments\n").empty());
}

TEST_CASE("read_coefficients loads from a file") {
    const char* path = "gftk_test_coeffs.txt";
    {
        std::ofstream out(path);
        out << "# three terms\n1\n4\n9\n";
    }
    auto c = read_coefficients(path);
    CHECK(c == std::vector<Rational>{1, 4, 9});
    std::remove(path);
    CHECK_THROWS_AS(read_coefficients("gftk_no_such_file.txt"), InvalidArgument);
}
