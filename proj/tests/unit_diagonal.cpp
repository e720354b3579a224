#include <doctest.h>

#include "gftk/a348410.hpp"
#include "gftk/diagonal.hpp"
#include "gftk/parse.hpp"

using namespace gftk;

namespace {

RationalBivariate rat(const char* num, const char* den) {
    return RationalBivariate{parse_xy(num), parse_xy(den)};
}

} // namespace

TEST_CASE("substitute_diagonal on the built-in input") {
    DiagonalProblem p = substitute_diagonal(a348410_f());
    CHECK(p.num.tc == std::vector<ZPoly>{{1}, {0, -1}, {0, 0, -1}, {0, 0, 0, 1}});
    CHECK(p.den.tc == std::vector<ZPoly>{{-1}, {1}, {0, -1}, {0, 0, -1}, {0, 0, 0, 1}});
}

TEST_CASE("substitute_diagonal shapes for small examples") {
    DiagonalProblem a = substitute_diagonal(rat("1", "1-y"));
    CHECK(a.num.tc == std::vector<ZPoly>{{1}});
    CHECK(a.den.tc == std::vector<ZPoly>{{-1}, {1}});

    DiagonalProblem b = substitute_diagonal(rat("1", "1-x-y"));
    CHECK(b.num.tc == std::vector<ZPoly>{{1}});
    CHECK(b.den.tc == std::vector<ZPoly>{{-1}, {1}, {0, -1}});

    DiagonalProblem c = substitute_diagonal(rat("1", "1-x*y"));
    CHECK(c.num.tc == std::vector<ZPoly>{{1}});
    CHECK(c.den.tc == std::vector<ZPoly>{{}, {1, -1}});
}

TEST_CASE("diagonal_gf reproduces A348410") {
    RSeries g = diagonal_gf(a348410_f(), 8);
    const Rational want[] = {1, 1, 5, 19, 85, 376, 1715, 7890};
    for (long n = 0; n < 8; ++n) CHECK(g.coeff(n) == want[n]);
    CHECK(g.precision() == 8);
}

TEST_CASE("diagonal_gf on textbook diagonals") {
    // diag 1/(1-y) = 1
    RSeries a = diagonal_gf(rat("1", "1-y"), 6);
    CHECK(a == RSeries::constant(Rational(1), 6));

    // diag 1/(1-x-y) = central binomial coefficients
    RSeries b = diagonal_gf(rat("1", "1-x-y"), 6);
    const Rational central[] = {1, 2, 6, 20, 70, 252};
    for (long n = 0; n < 6; ++n) CHECK(b.coeff(n) == central[n]);

    // diag 1/(1-xy) = 1/(1-z)
    RSeries c = diagonal_gf(rat("1", "1-x*y"), 6);
    for (long n = 0; n < 6; ++n) CHECK(c.coeff(n) == 1);

    // diag y/(1-y) = 0: the two residues cancel
    RSeries d = diagonal_gf(rat("y", "1-y"), 6);
    CHECK(d.is_zero());
    CHECK(d.precision() == 6);

    // zero numerator short-circuits
    CHECK(diagonal_gf(rat("0", "1-x-y"), 5).is_zero());
}

TEST_CASE("diagonal_gf propagates branch diagnostics") {
    // (1-y)^2 yields a repeated bounded root after substitution
    CHECK_THROWS_AS(diagonal_gf(rat("1", "(1-y)^2"), 4), MultipleBoundedRoot);
    CHECK_THROWS_AS(diagonal_gf(a348410_f(), 0), InvalidArgument);
}

TEST_CASE("the brute-force oracle agrees with the residue method") {
    RationalBivariate f = a348410_f();
    CHECK(diagonal_oracle(f, 0) == 1);
    CHECK(diagonal_oracle(f, 2) == 5);
    CHECK(diagonal_oracle(f, 7) == 7890);

    RSeries g = diagonal_gf(f, 20);
    std::vector<Rational> oc = diagonal_oracle_coeffs(f, 20);
    for (long n = 0; n < 20; ++n) CHECK(g.coeff(n) == oc[static_cast<std::size_t>(n)]);

    RationalBivariate h = rat("1+x", "1-x-2*y");
    RSeries gh = diagonal_gf(h, 12);
    std::vector<Rational> oh = diagonal_oracle_coeffs(h, 12);
    for (long n = 0; n < 12; ++n) CHECK(gh.coeff(n) == oh[static_cast<std::size_t>(n)]);
}

TEST_CASE("closed_form_check ties the residue to both closed forms") {
    ClosedFormReport r = closed_form_check(20);
    CHECK(r.all_equal);
    CHECK(r.checked_order == 20);
    CHECK(r.derivative_identity);
    CHECK(r.residue_series.coeff(0) == 1);
    CHECK(r.residue_series.coeff(7) == 7890);
    CHECK(ps_first_difference(r.residue_series, r.s4_closed_form) == std::nullopt);
    CHECK(ps_first_difference(r.residue_series, r.rational_rewrite) == std::nullopt);
}

TEST_CASE("denominators vanishing at the origin are rejected up front") {
    CHECK_THROWS_AS(rat("1", "x+y"), InvalidArgument);
    CHECK_THROWS_AS(rat("1", "0"), InvalidArgument);
}
