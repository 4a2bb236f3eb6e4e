#include <doctest.h>

#include "helpers.hpp"
#include "quot/series.hpp"

using namespace quot;
using quot::testing::Rng;

TEST_CASE("rational arithmetic stays reduced with positive denominator") {
    Rational r(6, 4);
    CHECK(r.numerator() == 3);
    CHECK(r.denominator() == 2);
    Rational s(1, -3);
    CHECK(s.denominator() == 3);
    CHECK(s.numerator() == -1);
    CHECK((r * s).str() == "-1/2");
    CHECK(Rational::parse("-7/21").str() == "-1/3");
    CHECK_THROWS_AS(Rational(1, 0), validation_error);
    CHECK_THROWS_AS(r / Rational(0), validation_error);
}

TEST_CASE("gaussian rationals form a field with involutive conjugation") {
    GaussianRational i = GaussianRational::i();
    CHECK(i * i == GaussianRational(-1));
    Rng rng(11);
    for (int k = 0; k < 20; ++k) {
        GaussianRational z = rng.gaussian();
        CHECK(z.conj().conj() == z);
        if (!z.is_zero()) {
            CHECK(z / z == GaussianRational(1));
            CHECK(z * (GaussianRational(1) / z) == GaussianRational(1));
        }
    }
    CHECK(GaussianRational(Rational(1, 2), Rational(-3)).str() == "1/2-3*i");
}

TEST_CASE("difference of squares and absorbing zero") {
    MultiPoly x1 = MultiPoly::variable(2, 0), x2 = MultiPoly::variable(2, 1);
    CHECK((x1 + x2) * (x1 - x2) == x1 * x1 - x2 * x2);
    MultiPoly p = (x1 + x2) * (x1 + x2);
    CHECK((p * MultiPoly(2)).is_zero());
}

TEST_CASE("cube expansion (xi - rho)^3 xi^2") {
    MultiPoly xi = MultiPoly::variable(2, 0), rho = MultiPoly::variable(2, 1);
    MultiPoly lhs = (xi - rho).pow(3) * xi.pow(2);
    MultiPoly expect(2);
    expect.add_term({5, 0}, GaussianRational(1));
    expect.add_term({4, 1}, GaussianRational(-3));
    expect.add_term({3, 2}, GaussianRational(3));
    expect.add_term({2, 3}, GaussianRational(-1));
    CHECK(lhs == expect);
}

TEST_CASE("ring axioms hold on random triples, checked by evaluation") {
    Rng rng(23);
    for (int trial = 0; trial < 10; ++trial) {
        MultiPoly a = rng.poly(2, 3, 4), b = rng.poly(2, 3, 4), c = rng.poly(2, 3, 4);
        MultiPoly assoc = (a * b) * c - a * (b * c);
        MultiPoly dist = a * (b + c) - (a * b + a * c);
        MultiPoly comm = a * b - b * a;
        for (int p = 0; p < 5; ++p) {
            auto pt = rng.point(2);
            CHECK(assoc.eval(pt) == GaussianRational(0));
            CHECK(dist.eval(pt) == GaussianRational(0));
            CHECK(comm.eval(pt) == GaussianRational(0));
        }
    }
}

TEST_CASE("substitution agrees with evaluation") {
    Rng rng(31);
    MultiPoly p = rng.poly(2, 3, 5);
    MultiPoly x = MultiPoly::variable(1, 0);
    // substitute X1 -> 2X, X2 -> X^2 and evaluate at X=3 vs direct evaluation
    std::vector<MultiPoly> images{GaussianRational(2) * x, x * x};
    MultiPoly q = p.substitute(images);
    GaussianRational lhs = q.eval({GaussianRational(3)});
    GaussianRational rhs = p.eval({GaussianRational(6), GaussianRational(9)});
    CHECK(lhs == rhs);
}

TEST_CASE("geometric series basics") {
    TruncatedSeries g = TruncatedSeries::geometric(4, 9);
    CHECK(g.coeff(0) == GaussianRational(1));
    CHECK(g.coeff(4) == GaussianRational(1));
    CHECK(g.coeff(8) == GaussianRational(1));
    CHECK(g.coeff(2) == GaussianRational(0));
    CHECK(g.coeff(9) == GaussianRational(0));

    TruncatedSeries g1 = TruncatedSeries::geometric(1, 3);
    for (int k = 0; k <= 3; ++k) CHECK(g1.coeff(k) == GaussianRational(1));
}

TEST_CASE("(1 - t^k) geometric(k) = 1 up to the bound for k = 1..6") {
    for (int k = 1; k <= 6; ++k) {
        int bound = 12;
        TruncatedSeries one_minus = TruncatedSeries::one(bound);
        one_minus.set(k, GaussianRational(-1));
        TruncatedSeries prod = one_minus * TruncatedSeries::geometric(k, bound);
        CHECK(prod == TruncatedSeries::one(bound));
    }
}

TEST_CASE("terms of different exponential conventions never mix") {
    LocalizationTerm real_term(MultiPoly::constant(1, GaussianRational(1)), testing::form1(Rational(1)),
                               ExpConvention::Real);
    LocalizationTerm imag_term(MultiPoly::constant(1, GaussianRational(1)), testing::form1(Rational(1)),
                               ExpConvention::Imag);
    CHECK_THROWS_AS(term_mul(real_term, imag_term), validation_error);
    LocalizationTerm ok = term_mul(real_term, real_term);
    CHECK(ok.exponent[0] == Rational(2));
}

TEST_CASE("laurent expansion of e^{3X}/X") {
    LocalizationTerm t(MultiPoly::constant(1, GaussianRational(1)), testing::form1(Rational(3)),
                       ExpConvention::Real);
    t.push_denominator(testing::form1(Rational(1)));
    auto c = laurent_expand(t, 0, 1);
    CHECK(c.at(-1).constant_term() == GaussianRational(1));
    CHECK(c.at(0).constant_term() == GaussianRational(3));
    CHECK(c.at(1).constant_term() == GaussianRational(Rational(9, 2)));
}

TEST_CASE("laurent expansion cancels monomial numerators") {
    // X^2 / X^3 with zero exponent: single coefficient 1 at exponent -1
    LocalizationTerm t(MultiPoly::variable(1, 0, 2), testing::form1(Rational(0)), ExpConvention::Real);
    t.push_denominator(testing::form1(Rational(1)), 3);
    auto c = laurent_expand(t, 0, 2);
    for (const auto& [k, coeff] : c) {
        if (k == -1)
            CHECK(coeff.constant_term() == GaussianRational(1));
        else
            CHECK(coeff.is_zero());
    }
}

TEST_CASE("mixed-variable pole factors are rejected") {
    // 1/(X1 (X1+X2)) cannot be expanded around X1 = 0 with polynomial
    // coefficients: the factor X1+X2 degenerates at X2 = 0.
    LocalizationTerm t(MultiPoly::constant(2, GaussianRational(1)), LinearForm(2), ExpConvention::Real);
    t.push_denominator(testing::form2(Rational(1), Rational(0)));
    t.push_denominator(testing::form2(Rational(1), Rational(1)));
    CHECK_THROWS_AS(laurent_expand(t, 0, -1), math_contract_error);
}

TEST_CASE("laurent expansion of a product is the Cauchy product of expansions") {
    Rng rng(47);
    for (int trial = 0; trial < 12; ++trial) {
        auto make_term = [&]() {
            MultiPoly num(1);
            int nt = static_cast<int>(rng.integer(1, 3));
            for (int i = 0; i < nt; ++i)
                num.add_term({static_cast<int>(rng.integer(0, 3))}, rng.gaussian());
            if (num.is_zero()) num = MultiPoly::constant(1, GaussianRational(1));
            LocalizationTerm t(num, testing::form1(rng.rational(4)), ExpConvention::Real);
            int mult = static_cast<int>(rng.integer(1, 3));
            t.push_denominator(testing::form1(rng.nonzero_rational(3)), mult);
            return t;
        };
        LocalizationTerm a = make_term(), b = make_term();
        LocalizationTerm ab = term_mul(a, b);
        const int order = 6;
        auto ea = laurent_expand(a, 0, order);
        auto eb = laurent_expand(b, 0, order);
        auto eab = laurent_expand(ab, 0, order - 6); // compare only provably exact coefficients
        for (const auto& [k, c] : eab) {
            GaussianRational sum(0);
            for (const auto& [i, ca] : ea) {
                auto it = eb.find(k - i);
                if (it != eb.end()) sum += ca.constant_term() * it->second.constant_term();
            }
            CHECK(c.constant_term() == sum);
        }
    }
}
