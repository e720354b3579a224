#include <doctest.h>

#include "gftk/intfactor.hpp"
#include "gftk/quadext.hpp"
#include "gftk/rational.hpp"

using namespace gftk;

TEST_CASE("reduced canonicalizes fractions built from parts") {
    CHECK(reduced(2, 4) == Rational(1, 2));
    CHECK(reduced(-6, -4) == Rational(3, 2));
    CHECK(reduced(0, 7) == 0);
    CHECK(reduced(5, -10) == -reduced(1, 2));
    CHECK(to_string(reduced(5, -10)) == "-1/2");
}

TEST_CASE("rational_from_string accepts p, -p, p/q") {
    CHECK(rational_from_string("7") == 7);
    CHECK(rational_from_string("-3") == -3);
    CHECK(rational_from_string("22/7") == reduced(22, 7));
    CHECK(rational_from_string("-4/6") == reduced(-2, 3));
    CHECK(rational_from_string("10/5") == 2);
    CHECK_THROWS_AS(rational_from_string(""), InvalidArgument);
    CHECK_THROWS_AS(rational_from_string("1/"), InvalidArgument);
    CHECK_THROWS_AS(rational_from_string("1/0"), InvalidArgument);
    CHECK_THROWS_AS(rational_from_string("x"), InvalidArgument);
    CHECK_THROWS_AS(rational_from_string("1 2"), InvalidArgument);
}

TEST_CASE("to_string renders integers without denominator") {
    CHECK(to_string(Rational(5)) == "5");
    CHECK(to_string(reduced(-9, 3)) == "-3");
    CHECK(to_string(reduced(9, 6)) == "3/2");
    CHECK(to_string(Integer(-12)) == "-12");
}

TEST_CASE("binomial handles the usual triangle") {
    CHECK(binomial(0, 0) == 1);
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(10, 10) == 1);
    CHECK(binomial(10, 0) == 1);
    CHECK(binomial(3, 5) == 0);
    CHECK(binomial(52, 5) == Integer(2598960));
}

TEST_CASE("binomial extends to negative upper index by falling factorials") {
    // (-1 choose k) = (-1)^k, (-2 choose k) = (-1)^k (k+1)
    CHECK(binomial(-1, 0) == 1);
    CHECK(binomial(-1, 3) == -1);
    CHECK(binomial(-2, 2) == 3);
    CHECK(binomial(-2, 3) == -4);
    CHECK(binomial(-5, 2) == 15);
    CHECK_THROWS_AS(binomial(4, -1), InvalidArgument);
}

TEST_CASE("is_integer") {
    CHECK(is_integer(Rational(4)));
    CHECK(!is_integer(reduced(4, 3)));
    CHECK(is_integer(reduced(8, 4)));
}

TEST_CASE("QuadExt arithmetic in Q(sqrt(2))") {
    QuadExt x(Rational(1), Rational(1), 2);  // 1 + sqrt(2)
    QuadExt y(Rational(1), Rational(-1), 2); // 1 - sqrt(2)

    CHECK(x + y == QuadExt(Rational(2)));
    CHECK((x + y).is_rational());
    CHECK(x * y == QuadExt(Rational(-1))); // norm of 1 + sqrt(2)
    CHECK(x.conj() == y);
    CHECK(x - x == QuadExt());
    CHECK((x - x).is_zero());

    // (1 + sqrt 2)^2 = 3 + 2 sqrt 2
    CHECK(x * x == QuadExt(Rational(3), Rational(2), 2));

    // division round trips
    QuadExt q = x / y;
    CHECK(q * y == x);
    CHECK(x / x == QuadExt(Rational(1)));
}

TEST_CASE("QuadExt division by zero and mixed radicands are usage errors") {
    QuadExt x(Rational(1), Rational(1), 2);
    QuadExt z(Rational(0), Rational(1), 3);
    CHECK_THROWS_AS(x / QuadExt(), InvalidArgument);
    CHECK_THROWS_AS(x + z, InvalidArgument);
    CHECK_THROWS_AS(x * z, InvalidArgument);
    // rationals embed into any Q(sqrt(d)) without conflict
    CHECK(QuadExt(Rational(2)) * z == QuadExt(Rational(0), Rational(2), 3));
    CHECK_THROWS_AS(QuadExt(Rational(1), Rational(1), 1), InvalidArgument);
    CHECK_THROWS_AS(QuadExt(Rational(1), Rational(1), -2), InvalidArgument);
    // b == 0 collapses d so the value is plain rational
    CHECK(QuadExt(Rational(5), Rational(0), 2).d() == 0);
}

TEST_CASE("factor returns sorted prime powers") {
    using PF = std::vector<std::pair<Integer, int>>;
    CHECK(factor(Integer(1)) == PF{});
    CHECK(factor(Integer(2)) == PF{{2, 1}});
    CHECK(factor(Integer(360)) == PF{{2, 3}, {3, 2}, {5, 1}});
    CHECK(factor(Integer(97)) == PF{{97, 1}});
    CHECK(factor(Integer(1024)) == PF{{2, 10}});
}

TEST_CASE("divisors ascend") {
    CHECK(divisors(Integer(1)) == std::vector<Integer>{1});
    CHECK(divisors(Integer(12)) == std::vector<Integer>{1, 2, 3, 4, 6, 12});
    CHECK(divisors(Integer(49)) == std::vector<Integer>{1, 7, 49});
}

TEST_CASE("square_part extracts the largest square divisor's root") {
    CHECK(square_part(Integer(1)) == 1);
    CHECK(square_part(Integer(8)) == 2);   // 8 = 4 * 2
    CHECK(square_part(Integer(72)) == 6);  // 72 = 36 * 2
    CHECK(square_part(Integer(30)) == 1);  // squarefree
    CHECK(square_part(Integer(144)) == 12);
}
