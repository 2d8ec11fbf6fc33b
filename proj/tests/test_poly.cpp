#include <doctest.h>

#include <random>

#include "locpos/poly.hpp"

using namespace locpos;

namespace {

SparsePolynomial random_poly(std::mt19937_64& rng, unsigned arity) {
    std::uniform_int_distribution<unsigned> nterms(0, 6);
    std::uniform_int_distribution<unsigned> expo(0, 5);
    std::uniform_int_distribution<long> coeff(-9, 9);
    SparsePolynomial p(arity);
    unsigned t = nterms(rng);
    for (unsigned i = 0; i < t; ++i) {
        ExponentVector alpha(arity);
        for (unsigned j = 0; j < arity; ++j) alpha[j] = expo(rng);
        p.add_term(alpha, Rat(coeff(rng)));
    }
    return p;
}

std::vector<Rat> random_point(std::mt19937_64& rng, unsigned arity) {
    std::uniform_int_distribution<long> num(-8, 8);
    std::uniform_int_distribution<long> den(1, 8);
    std::vector<Rat> x(arity);
    for (unsigned i = 0; i < arity; ++i) x[i] = make_rat(num(rng), den(rng));
    return x;
}

const std::string kExample2 =
    "x^16+y^18-x^7*y^3+x^12*y^15+x^4*y^2-2*x^3*y^3+x^2*y^4";

}  // namespace

TEST_CASE("parse basic forms") {
    SparsePolynomial p = parse_polynomial("x^2 + y^4 + z^6 - 2*x*y^2*z^3");
    CHECK(p.arity() == 3);
    CHECK(p.term_count() == 4);
    CHECK(p.coefficient({1, 2, 3}) == -2);

    CHECK(parse_polynomial("0").is_zero());
    SparsePolynomial q = parse_polynomial("x - x + y");
    CHECK(q.term_count() == 1);
    CHECK(q.coefficient({0, 1}) == 1);
}

TEST_CASE("parse rational coefficients and errors") {
    SparsePolynomial p = parse_polynomial("1/2*x + 3*y");
    CHECK(p.coefficient({1, 0}) == make_rat(1, 2));

    CHECK_THROWS_AS(parse_polynomial("x^-2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_polynomial("x^1/2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_polynomial("x +"), std::invalid_argument);
    CHECK_THROWS_AS(
        parse_polynomial("x + w", std::vector<std::string>{"x", "y"}),
        std::invalid_argument);
}

TEST_CASE("format") {
    CHECK(SparsePolynomial(2).format() == "0");
    SparsePolynomial p(2);
    p.add_term({2, 0}, Rat(1));
    p.add_term({0, 2}, Rat(1));
    CHECK(p.format() == "x^2 + y^2");

    SparsePolynomial f = parse_polynomial(kExample2);
    CHECK(parse_polynomial(f.format()).term_count() == 7);
}

TEST_CASE("evaluate") {
    SparsePolynomial p = parse_polynomial("x^2+y^2");
    CHECK(p.evaluate({make_rat(1, 2), make_rat(1, 2)}) == make_rat(1, 2));

    // Independent term-by-term hand sum at (1,1): 1+1-1+1+1-2+1 = 2.
    SparsePolynomial f = parse_polynomial(kExample2);
    Rat by_hand = Rat(1) + 1 - 1 + 1 + 1 - 2 + 1;
    CHECK(f.evaluate({Rat(1), Rat(1)}) == by_hand);

    CHECK(f.evaluate({Rat(0), Rat(0)}) == 0);
    CHECK_THROWS_AS(p.evaluate({Rat(1)}), std::invalid_argument);
}

TEST_CASE("ring operations") {
    SparsePolynomial xpy = parse_polynomial("x+y");
    SparsePolynomial xmy = parse_polynomial("x-y");
    CHECK((xpy * xmy) == parse_polynomial("x^2-y^2"));
    CHECK(xpy.pow(2) == parse_polynomial("x^2+2*x*y+y^2"));
    CHECK(xpy.pow(0) == parse_polynomial("1", std::vector<std::string>{"x", "y"}));

    // Hand expansion oracle for the m=1 Handelman product.
    SparsePolynomial h = parse_polynomial("x^2-x*y+y^2");
    SparsePolynomial q = parse_polynomial("x^2+x*y+y^2");
    CHECK((h * q) == parse_polynomial("x^4+x^2*y^2+y^4"));

    CHECK_THROWS_AS(xpy * parse_polynomial("x"), std::invalid_argument);
}

TEST_CASE("split_signs") {
    auto [plus, minus] = parse_polynomial("x^2-x*y+y^2").split_signs();
    CHECK(plus == parse_polynomial("x^2+y^2"));
    CHECK(minus.coefficient({1, 1}) == -1);

    SparsePolynomial f = parse_polynomial(kExample2);
    auto [fp, fm] = f.split_signs();
    CHECK(fp.term_count() == 5);
    CHECK(fm.term_count() == 2);
    CHECK((fp + fm) == f);
    SparsePolynomial spread = fp - fm;
    for (const auto& [alpha, c] : spread.terms()) CHECK(c > 0);

    auto [zp, zm] = SparsePolynomial(2).split_signs();
    CHECK(zp.is_zero());
    CHECK(zm.is_zero());
}

TEST_CASE("apply_signs") {
    SparsePolynomial p = parse_polynomial("x^2-x*y");
    CHECK(p.apply_signs({1, -1}) == parse_polynomial("x^2+x*y"));
    CHECK(p.apply_signs({1, 1}) == p);
    SparsePolynomial cube = parse_polynomial("x^3");
    CHECK(cube.apply_signs({-1}) == parse_polynomial("-x^3"));
    CHECK(p.apply_signs({1, -1}).apply_signs({1, -1}) == p);
}

TEST_CASE("substitute_curve") {
    SparsePolynomial f = parse_polynomial(kExample2);
    std::vector<UnivariatePolynomial> diag{
        UnivariatePolynomial::monomial(1, Rat(1)),
        UnivariatePolynomial::monomial(1, Rat(1))};
    UnivariatePolynomial composed = f.substitute_curve(diag);
    CHECK(composed.coefficient(27) == 1);
    CHECK(composed.coefficient(18) == 1);
    CHECK(composed.coefficient(16) == 1);
    CHECK(composed.coefficient(10) == -1);
    CHECK(composed.terms().size() == 4);

    SparsePolynomial circle = parse_polynomial("x^2+y^2");
    UnivariatePolynomial two_t2 = circle.substitute_curve(diag);
    CHECK(two_t2.coefficient(2) == 2);
    CHECK(two_t2.terms().size() == 1);

    SparsePolynomial g = parse_polynomial("x^2-y^3");
    std::vector<UnivariatePolynomial> axis{UnivariatePolynomial(),
                                           UnivariatePolynomial::monomial(1, Rat(1))};
    CHECK(g.substitute_curve(axis).coefficient(3) == -1);

    std::vector<UnivariatePolynomial> off{UnivariatePolynomial::monomial(0, Rat(1)),
                                          UnivariatePolynomial::monomial(1, Rat(1))};
    CHECK_THROWS_AS(g.substitute_curve(off), std::invalid_argument);
}

TEST_CASE("lowest_term") {
    SparsePolynomial f = parse_polynomial(kExample2);
    std::vector<UnivariatePolynomial> diag{
        UnivariatePolynomial::monomial(1, Rat(1)),
        UnivariatePolynomial::monomial(1, Rat(1))};
    auto low = f.substitute_curve(diag).lowest_term();
    REQUIRE(low.has_value());
    CHECK(low->first == 10);
    CHECK(low->second == -1);

    auto two = UnivariatePolynomial::monomial(2, Rat(2)).lowest_term();
    CHECK(two->first == 2);
    CHECK(two->second == 2);

    CHECK_FALSE(UnivariatePolynomial().lowest_term().has_value());
}

TEST_CASE("evaluation homomorphism properties") {
    std::mt19937_64 rng(12345);
    for (int trial = 0; trial < 100; ++trial) {
        unsigned arity = 1 + static_cast<unsigned>(trial % 3);
        SparsePolynomial p = random_poly(rng, arity);
        SparsePolynomial q = random_poly(rng, arity);
        std::vector<Rat> x = random_point(rng, arity);
        CHECK((p + q).evaluate(x) == p.evaluate(x) + q.evaluate(x));
        CHECK((p * q).evaluate(x) == p.evaluate(x) * q.evaluate(x));
    }
}

TEST_CASE("parse after format is identity") {
    std::mt19937_64 rng(777);
    for (int trial = 0; trial < 50; ++trial) {
        SparsePolynomial p = random_poly(rng, 1 + trial % 3);
        if (p.is_zero()) continue;
        CHECK(parse_polynomial(p.format(), p.variable_names()) == p);
    }
}

TEST_CASE("split reconstruction and sign substitution identities") {
    std::mt19937_64 rng(999);
    for (int trial = 0; trial < 50; ++trial) {
        unsigned arity = 1 + trial % 3;
        SparsePolynomial p = random_poly(rng, arity);
        auto [plus, minus] = p.split_signs();
        CHECK((plus + minus) == p);

        SignVector sigma(arity);
        for (unsigned i = 0; i < arity; ++i) sigma[i] = (rng() & 1) ? 1 : -1;
        std::vector<Rat> x = random_point(rng, arity);
        std::vector<Rat> sx(arity);
        for (unsigned i = 0; i < arity; ++i) sx[i] = sigma[i] * x[i];
        CHECK(p.apply_signs(sigma).evaluate(x) == p.evaluate(sx));
    }
}

TEST_CASE("curve substitution commutes with evaluation") {
    std::mt19937_64 rng(4242);
    std::uniform_int_distribution<unsigned> wdist(1, 3);
    std::uniform_int_distribution<long> cdist(-3, 3);
    for (int trial = 0; trial < 50; ++trial) {
        unsigned arity = 1 + trial % 3;
        SparsePolynomial p = random_poly(rng, arity);
        std::vector<UnivariatePolynomial> phi;
        for (unsigned i = 0; i < arity; ++i) {
            UnivariatePolynomial u;
            u.add_term(wdist(rng), Rat(cdist(rng)));
            u.add_term(wdist(rng) + 1, Rat(cdist(rng)));
            phi.push_back(u);
        }
        Rat t0 = make_rat(cdist(rng), 2);
        std::vector<Rat> x(arity);
        for (unsigned i = 0; i < arity; ++i) x[i] = phi[i].evaluate(t0);
        CHECK(p.substitute_curve(phi).evaluate(t0) == p.evaluate(x));
    }
}
