#include <doctest.h>

#include "gftk/branch.hpp"

using namespace gftk;

namespace {

// 1 - x - x^2 + x^3 - y after the diagonal substitution: -1 + t - z t^2 - z^2 t^3 + z^3 t^4
PolyTZ a348410_den() {
    return PolyTZ{{{-1}, {1}, {0, -1}, {0, 0, -1}, {0, 0, 0, 1}}};
}

// 1 - x - y: -1 + t - z t^2
PolyTZ catalan_den() {
    return PolyTZ{{{-1}, {1}, {0, -1}}};
}

Rational q(long num, long den) { return reduced(num, den); }

} // namespace

TEST_CASE("newton_polygon lists segment valuations descending") {
    auto poly = newton_polygon(a348410_den());
    REQUIRE(poly.size() == 2);
    CHECK(poly[0] == std::pair<Rational, long>{Rational(0), 1});
    CHECK(poly[1] == std::pair<Rational, long>{Rational(-1), 3});

    auto cat = newton_polygon(catalan_den());
    REQUIRE(cat.size() == 2);
    CHECK(cat[0] == std::pair<Rational, long>{Rational(0), 1});
    CHECK(cat[1] == std::pair<Rational, long>{Rational(-1), 1});

    // t^2 - z: a single ramified segment of valuation 1/2
    PolyTZ sq{{{0, -1}, {}, {1}}};
    auto ps = newton_polygon(sq);
    REQUIRE(ps.size() == 1);
    CHECK(ps[0] == std::pair<Rational, long>{q(1, 2), 2});

    CHECK_THROWS_AS(newton_polygon(PolyTZ{}), InvalidArgument);
}

TEST_CASE("hensel_lift expands the bounded root") {
    PolyTZ d = a348410_den();
    RSeries s4 = hensel_lift<Rational>(d, Rational(1), 8);
    const Rational want[] = {1, 1, 3, 9, 32, 119, 466, 1881};
    for (long n = 0; n < 8; ++n) CHECK(s4.coeff(n) == want[n]);
    CHECK(eval_at(d, s4, 8).is_zero());

    RSeries cat = hensel_lift<Rational>(catalan_den(), Rational(1), 6);
    const Rational cwant[] = {1, 1, 2, 5, 14, 42};
    for (long n = 0; n < 6; ++n) CHECK(cat.coeff(n) == cwant[n]);
}

TEST_CASE("hensel_lift rejects non-simple starting points") {
    PolyTZ d = a348410_den();
    CHECK_THROWS_AS(hensel_lift<Rational>(d, Rational(2), 4), NotASimpleRoot);
    CHECK_THROWS_AS(hensel_lift<Rational>(d, Rational(1), 0), InvalidArgument);
    // (t-1)^2 - z: t0 = 1 is a double root of D(t,0)
    PolyTZ dbl{{{1, -1}, {-2}, {1}}};
    CHECK_THROWS_AS(hensel_lift<Rational>(dbl, Rational(1), 4), NotASimpleRoot);
}

TEST_CASE("hensel_lift works over a quadratic extension") {
    // t^2 - 2 - z at t0 = sqrt(2): sqrt(2+z) = sqrt2 (1 + z/4 - z^2/32 + ...)
    PolyTZ d{{{-2, -1}, {}, {1}}};
    QuadExt t0(Rational(0), Rational(1), 2);
    QSeries s = hensel_lift<QuadExt>(d, t0, 4);
    CHECK(s.coeff(0) == t0);
    CHECK(s.coeff(1) == QuadExt(Rational(0), q(1, 4), 2));
    CHECK(s.coeff(2) == QuadExt(Rational(0), q(-1, 32), 2));
    CHECK(eval_at(d, s, 4).is_zero());
}

TEST_CASE("classify_bounded on the A348410 denominator") {
    BranchSummary bs = classify_bounded(a348410_den(), 10);
    REQUIRE(bs.bounded.size() == 1);
    const Branch& b = bs.bounded.front();
    CHECK(b.valuation == 0);
    CHECK(b.ramification == 1);
    CHECK(b.bounded);
    CHECK(b.sqrt_d == 0);
    CHECK(b.expansion.coeff(Rational(0)) == QuadExt(Rational(1)));
    REQUIRE(bs.unbounded.size() == 1);
    CHECK(bs.unbounded[0] == std::pair<Rational, long>{Rational(-1), 3});
}

TEST_CASE("classify_bounded keeps identically-zero branches") {
    // t(1 - z), the diagonal denominator of 1/(1-xy)
    PolyTZ d{{{}, {1, -1}}};
    BranchSummary bs = classify_bounded(d, 6);
    REQUIRE(bs.bounded.size() == 1);
    CHECK(bs.bounded[0].expansion.body().is_zero());
    CHECK(bs.bounded[0].valuation == Rational(6)); // zero mod z^6: valuation pegged at the precision
    CHECK(bs.unbounded.empty());
}

TEST_CASE("classify_bounded error taxonomy") {
    // (t-1)^2 - z: repeated bounded root
    CHECK_THROWS_AS(classify_bounded(PolyTZ{{{1, -1}, {-2}, {1}}}, 4), MultipleBoundedRoot);
    // t^2 - z: repeated root at t = 0
    CHECK_THROWS_AS(classify_bounded(PolyTZ{{{0, -1}, {}, {1}}}, 4), MultipleBoundedRoot);
    // t^2 - 2 - z t: bounded roots outside Q
    CHECK_THROWS_AS(classify_bounded(PolyTZ{{{-2}, {0, -1}, {1}}}, 4), UnsupportedRamification);
    CHECK_THROWS_AS(classify_bounded(PolyTZ{}, 4), InvalidArgument);
}

TEST_CASE("expand_branch recovers the rational unbounded branch") {
    std::vector<Branch> unb = expand_branch(a348410_den(), Rational(-1), 10);
    REQUIRE(unb.size() == 3);
    const Branch* b1 = nullptr;
    for (const Branch& b : unb)
        if (b.ramification == 1) b1 = &b;
    REQUIRE(b1 != nullptr);
    CHECK(b1->valuation == -1);
    CHECK(!b1->bounded);
    CHECK(b1->sqrt_d == 0);
    CHECK(b1->multiplicity_at_leading_order == 1);
    CHECK(b1->expansion.coeff(Rational(-1)) == QuadExt(Rational(-1)));
    CHECK(b1->expansion.coeff(Rational(0)) == QuadExt(q(-1, 4)));
    CHECK(b1->expansion.coeff(Rational(1)) == QuadExt(q(1, 8)));
    CHECK(b1->expansion.coeff(Rational(2)) == QuadExt(q(-27, 256)));
    CHECK(b1->expansion.coeff(Rational(3)) == QuadExt(q(111, 1024)));
    CHECK(eval_at_puiseux(a348410_den(), b1->expansion, 10).is_zero());
}

TEST_CASE("expand_branch splits the double leading root into a conjugate pair") {
    std::vector<Branch> unb = expand_branch(a348410_den(), Rational(-1), 10);
    REQUIRE(unb.size() == 3);
    const Branch *b2 = nullptr, *b3 = nullptr;
    for (const Branch& b : unb) {
        if (b.ramification != 2) continue;
        (b2 ? b3 : b2) = &b;
    }
    REQUIRE(b2 != nullptr);
    REQUIRE(b3 != nullptr);
    CHECK(b2->sqrt_d == 2);
    CHECK(b3->sqrt_d == 2);
    CHECK(b2->multiplicity_at_leading_order == 2);
    CHECK(b2->valuation == -1);

    // leading terms: z^-1 + (1/2)sqrt2 z^-1/2 - 3/8 + (37/128)sqrt2 z^1/2 + ...
    CHECK(b2->expansion.coeff(Rational(-1)) == QuadExt(Rational(1)));
    CHECK(b2->expansion.coeff(q(-1, 2)) == QuadExt(Rational(0), q(1, 2), 2));
    CHECK(b2->expansion.coeff(Rational(0)) == QuadExt(q(-3, 8)));
    CHECK(b2->expansion.coeff(q(1, 2)) == QuadExt(Rational(0), q(37, 128), 2));
    CHECK(b2->expansion.coeff(Rational(2)) == QuadExt(q(-741, 512)));

    // coefficientwise conjugates
    const QSeries& p2 = b2->expansion.body();
    const QSeries& p3 = b3->expansion.body();
    REQUIRE(p2.valuation() == p3.valuation());
    REQUIRE(p2.precision() == p3.precision());
    for (long k = p2.valuation(); k < p2.precision(); ++k) {
        CHECK(p2.coeff(k).rat_part() == p3.coeff(k).rat_part());
        CHECK(p2.coeff(k).sqrt_part() == -p3.coeff(k).sqrt_part());
    }
    CHECK(eval_at_puiseux(a348410_den(), b2->expansion, 20).is_zero());
}

TEST_CASE("the four branch expansions sum to the trace 1/z") {
    PolyTZ d = a348410_den();
    std::vector<Branch> unb = expand_branch(d, Rational(-1), 10);
    BranchSummary bs = classify_bounded(d, 10);
    Puiseux sum = bs.bounded.front().expansion;
    for (const Branch& b : unb) sum = sum + b.expansion;
    Puiseux target(RSeries::monomial(Rational(1), -1, 10));
    CHECK((sum - target).is_zero());
}

TEST_CASE("expand_branch on a ramified segment with simple leading roots") {
    // t^2 = z: two branches +/- z^(1/2), exact
    PolyTZ d{{{0, -1}, {}, {1}}};
    std::vector<Branch> br = expand_branch(d, q(1, 2), 6);
    REQUIRE(br.size() == 2);
    for (const Branch& b : br) {
        CHECK(b.valuation == q(1, 2));
        CHECK(b.ramification == 2);
        CHECK(b.bounded);
        CHECK(b.sqrt_d == 0);
        CHECK(eval_at_puiseux(d, b.expansion, 12).is_zero());
    }
    CHECK(br[0].expansion.coeff(q(1, 2)) + br[1].expansion.coeff(q(1, 2)) == QuadExt());
}

TEST_CASE("expand_branch recenters a double rational leading root") {
    // (t-1)^2 - z: pair 1 +/- z^(1/2), rational coefficients on the ramified grid
    PolyTZ d{{{1, -1}, {-2}, {1}}};
    std::vector<Branch> br = expand_branch(d, Rational(0), 6);
    REQUIRE(br.size() == 2);
    CHECK(br[0].sqrt_d == 0); // discriminant is a perfect square
    CHECK(br[0].ramification == 2);
    CHECK(br[0].multiplicity_at_leading_order == 2);
    CHECK(br[0].expansion.coeff(Rational(0)) == QuadExt(Rational(1)));
    QuadExt half0 = br[0].expansion.coeff(q(1, 2));
    QuadExt half1 = br[1].expansion.coeff(q(1, 2));
    CHECK(half0 + half1 == QuadExt());
    CHECK((half0 == QuadExt(Rational(1)) || half0 == QuadExt(Rational(-1))));
    for (const Branch& b : br) CHECK(eval_at_puiseux(d, b.expansion, 12).is_zero());
}

TEST_CASE("expand_branch unsupported shapes") {
    // (t-1)^2 + z: the pair would be imaginary
    CHECK_THROWS_AS(expand_branch(PolyTZ{{{1, 1}, {-2}, {1}}}, Rational(0), 4), UnsupportedRamification);
    // (t-1)^3 - z: triple leading root
    CHECK_THROWS_AS(expand_branch(PolyTZ{{{1, -1}, {-3}, {3}, {1}}}, Rational(0), 4), UnsupportedRamification);
    // (t-1)^2 exactly: nothing to split
    CHECK_THROWS_AS(expand_branch(PolyTZ{{{1}, {-2}, {1}}}, Rational(0), 4), UnsupportedRamification);
    // t^2 - 2: leading roots outside Q
    CHECK_THROWS_AS(expand_branch(PolyTZ{{{-2}, {0, -1}, {1}}}, Rational(0), 4), UnsupportedRamification);
    // a valuation that is not on the polygon has no branches
    CHECK(expand_branch(a348410_den(), Rational(7), 4).empty());
    CHECK_THROWS_AS(expand_branch(PolyTZ{}, Rational(0), 4), InvalidArgument);
}
