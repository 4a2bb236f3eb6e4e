#include <doctest.h>

#include "helpers.hpp"
#include "quot/expr.hpp"
#include "quot/residue.hpp"
#include "quot/witten.hpp"

using namespace quot;

namespace {

SqrtEpsPolynomial plain_term(int k, const GaussianRational& c) {
    SqrtEpsPolynomial p;
    p.add_plain(k, c);
    return p;
}

SqrtEpsPolynomial pi_term(int k, const GaussianRational& c) {
    SqrtEpsPolynomial p;
    p.add_pi(k, c);
    return p;
}

// Integrate a one-variable polynomial in y against e^{-y^2/(2 eps)} over the
// chosen half-line (+1 or -1) or the whole line (0).
SqrtEpsPolynomial integrate_poly(const MultiPoly& q, int cone) {
    SqrtEpsPolynomial out;
    for (const auto& [e, c] : q.terms()) {
        int j = e[0];
        if (cone == 0) {
            out += c * gaussian_line_moment(j);
        } else {
            GaussianRational f = c;
            if (cone < 0 && j % 2 == 1) f = -f;
            out += f * gaussian_halfline_moment(j);
        }
    }
    return out;
}

} // namespace

TEST_CASE("half-line Gaussian moments match the closed forms for j = 0..8") {
    CHECK(gaussian_halfline_moment(1) == plain_term(2, GaussianRational(1)));  // eps
    CHECK(gaussian_halfline_moment(0) == pi_term(1, GaussianRational(1)));     // sqrt(pi/2) eps^{1/2}
    CHECK(gaussian_halfline_moment(3) == plain_term(4, GaussianRational(2)));  // 2 eps^2
    CHECK(gaussian_halfline_moment(5) == plain_term(6, GaussianRational(8)));
    CHECK(gaussian_halfline_moment(7) == plain_term(8, GaussianRational(48)));
    CHECK(gaussian_halfline_moment(2) == pi_term(3, GaussianRational(1)));
    CHECK(gaussian_halfline_moment(4) == pi_term(5, GaussianRational(3)));
    CHECK(gaussian_halfline_moment(6) == pi_term(7, GaussianRational(15)));
    CHECK(gaussian_halfline_moment(8) == pi_term(9, GaussianRational(105)));
}

TEST_CASE("full-line moments vanish for odd exponents and double for even ones") {
    CHECK(gaussian_line_moment(1).is_zero());
    CHECK(gaussian_line_moment(3).is_zero());
    CHECK(gaussian_line_moment(0) == pi_term(1, GaussianRational(2)));
    CHECK(gaussian_line_moment(2) == pi_term(3, GaussianRational(2)));
}

TEST_CASE("witten integral of the zero class vanishes") {
    ActionModel m = model_circle_pn({0, 1, 2, 3});
    WittenResult r = witten_i0(m, MultiPoly(2));
    CHECK(r.value.is_zero());
}

TEST_CASE("zero-moment contribution for circle weights (0,1,2,3)") {
    // q(0, X) = X^N realized by eta = rho^N; the zero-moment point contributes
    // a single monomial at sqrt(eps)-exponent (#weights - N - 2) after the
    // eps^{-s/2} shift, nonzero for N in {0, 1}.
    ActionModel m = model_circle_pn({0, 1, 2, 3});
    const int nweights = 4;
    for (int N : {0, 1}) {
        MultiPoly eta = parse_class_expression(N == 0 ? "1" : "rho", m.generators);
        const FixedComponent* p0 = nullptr;
        for (const auto& c : m.components) {
            if (c.moment[0].is_zero()) p0 = &c;
        }
        REQUIRE(p0 != nullptr);
        MultiPoly p = witten_component_polynomial(m, *p0, eta);
        SqrtEpsPolynomial contribution = integrate_poly(p, -1).shifted(-static_cast<int>(m.s));
        int expected_exp = nweights - N - 2;
        CHECK(contribution.plain.size() + contribution.sqrt_pi_2.size() == 1);
        CHECK((contribution.coeff_plain(expected_exp) != GaussianRational(0) ||
               contribution.coeff_pi(expected_exp) != GaussianRational(0)));

        // the full integral keeps a nonzero term at that exponent for N = 1
        if (N == 1) {
            WittenResult r = witten_i0(m, eta);
            CHECK(r.value.coeff_plain(expected_exp) != GaussianRational(0));
        }
    }
}

TEST_CASE("positive-moment components: the two cones sum to the full-line moments") {
    ActionModel m = model_su2_p1n(4);
    MultiPoly eta = parse_class_expression("xi1+xi2+xi3+xi4", m.generators);
    const MultiPoly d_of_y = m.weyl_denominator();
    for (const auto& comp : m.components) {
        if (!(comp.moment[0] > Rational(0))) continue;
        MultiPoly q = d_of_y * witten_component_polynomial(m, comp, eta);
        SqrtEpsPolynomial both = integrate_poly(q, +1) + integrate_poly(q, -1);
        SqrtEpsPolynomial line = integrate_poly(q, 0);
        CHECK(both == line);
        // odd-in-y parts cancel exactly between the two cones
        for (const auto& [k, c] : both.plain) CHECK(line.coeff_plain(k) == c);
    }
}

TEST_CASE("structural match with the printed zero-moment display for (P^1)^n, n even") {
    // Printed form (constants absorbed): eps^{-3/2} res( int_{-inf}^0
    // (-1)^{n/2} (y / X^{n-1}) q(delta X, X^2) e^{-y^2/2eps} e^{-iyX} dy ).
    // The implementation uses D(y) = 2y and D(X) = 2X, so its per-component
    // contribution is exactly 4 times the printed value.
    const int n = 4;
    ActionModel m = model_su2_p1n(n);
    MultiPoly eta = parse_class_expression("zeta2+xi1*xi2", m.generators);
    for (const auto& comp : m.components) {
        if (!comp.moment[0].is_zero()) continue;
        // implementation path
        MultiPoly q_impl = m.weyl_denominator() * witten_component_polynomial(m, comp, eta);
        SqrtEpsPolynomial mine = integrate_poly(q_impl, -1).shifted(-3);

        // printed display, assembled independently
        std::vector<MultiPoly> images;
        for (const auto& g : m.generators) images.push_back(comp.restriction.at(g));
        MultiPoly restricted = eta.substitute(images); // q(delta X, X^2)
        MultiPoly integrand(1);                        // polynomial in y
        int sign_pow = n / 2;
        for (const auto& [e, c] : restricted.terms()) {
            int need = (n - 2) - e[0]; // (-iy)^need / need! from e^{-iyX} against X^{n-1}
            if (need < 0) continue;
            GaussianRational coeff = c * GaussianRational(Rational(0), Rational(-1)).pow(need) /
                                     GaussianRational(Rational(factorial(need)));
            if (sign_pow % 2 == 1) coeff = -coeff;
            integrand.add_term({need + 1}, coeff); // the leading factor y
        }
        SqrtEpsPolynomial printed = integrate_poly(integrand, -1).shifted(-3);
        CHECK(mine == GaussianRational(4) * printed);
    }
}

TEST_CASE("weyl-symmetric top-degree classes give a clean constant for (P^1)^4") {
    ActionModel m = model_su2_p1n(4);
    MultiPoly eta = parse_class_expression("xi1+xi2+xi3+xi4", m.generators);
    WittenResult r = witten_i0(m, eta);
    // on-degree input: a polynomial in sqrt(eps), nothing below eps^0
    CHECK(r.value.min_exponent() >= 0);
    // zero-moment components cancel pairwise (delta vs -delta), so the plain
    // channel is empty and the value is a polynomial in eps
    CHECK(r.value.plain.empty());
    CHECK(r.value.coeff_pi(0) != GaussianRational(0)); // the pairing term at eps^0
}

TEST_CASE("on-degree inputs stay polynomial in sqrt(eps)") {
    {
        ActionModel m = model_circle_pn({0, 1, 2, 3});
        for (const char* e : {"1", "rho", "xi", "xi*rho", "xi^2"}) {
            WittenResult r = witten_i0(m, parse_class_expression(e, m.generators));
            CAPTURE(e);
            CHECK(r.value.min_exponent() >= 0);
        }
    }
    {
        ActionModel m = model_su2_p1n(4);
        for (const char* e : {"1", "xi1", "xi1+xi2+xi3+xi4"}) {
            WittenResult r = witten_i0(m, parse_class_expression(e, m.generators));
            CAPTURE(e);
            CHECK(r.value.min_exponent() >= 0);
        }
    }
}

TEST_CASE("full-line contribution equals the Gaussian-in-X residue expansion") {
    // Parseval: integrating D(y) p_F(y) e^{-y^2/2eps} over the whole line
    // equals -i eps sqrt(2 pi eps) res_X( D(X)^2 q e^{i mu X} e^{-eps X^2/2} / e_F )
    // for the SU(2) root D = 2X, with the X-Gaussian expanded exactly.
    ActionModel m = model_su2_p1n(4);
    for (const char* cls : {"1", "xi1", "zeta2", "xi1*xi2+zeta2"}) {
        MultiPoly eta = parse_class_expression(cls, m.generators);
        auto lifted = localized_terms(m, eta, LinearForm(1), false, ExpConvention::Imag);
        for (const auto& [comp, base_term] : lifted) {
            if (!(comp->moment[0] > Rational(0))) continue;

            MultiPoly q = m.weyl_denominator() * witten_component_polynomial(m, *comp, eta);
            SqrtEpsPolynomial lhs = integrate_poly(q, +1) + integrate_poly(q, -1);

            SqrtEpsPolynomial rhs;
            int pole = base_term.pole_order();
            for (int k = 0; 2 * k <= pole; ++k) {
                // res( D^2 q e^{i mu X} X^{2k} / e_F ) * (-1/2)^k / k!
                LocalizationTerm t = base_term;
                MultiPoly d2 = m.weyl_denominator();
                d2 = d2 * d2;
                t.numerator = t.numerator * d2 * MultiPoly::variable(1, 0, 2 * k);
                t.exponent = testing::form1(comp->moment[0]);
                GaussianRational rk = residue_1d(t) * GaussianRational(Rational(-1, 2)).pow(k) /
                                      GaussianRational(Rational(factorial(k)));
                // times -i eps sqrt(2 pi eps) = -2i sqrt(pi/2) (sqrt eps)^3 eps^k
                rhs.add_pi(2 * k + 3, GaussianRational(Rational(0), Rational(-2)) * rk);
            }
            CAPTURE(cls);
            CAPTURE(comp->id);
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("circle models satisfy the same Parseval identity, including P^m components") {
    // For D = 1 the full-line contribution of a positive-moment component is
    // sqrt(2 pi eps) res_X( q e^{i mu X} e^{-eps X^2/2} / e_F ); the
    // repeated-weight model exercises the fiber-integrated numerators.
    for (const auto& weights : std::vector<std::vector<long long>>{{0, 1, 2, 3},
                                                                   {1, 1, 1, 0, 0, -1, -1, -1}}) {
        ActionModel m = model_circle_pn(weights);
        for (const char* cls : {"1", "xi", "rho", "xi*rho"}) {
            MultiPoly eta = parse_class_expression(cls, m.generators);
            auto lifted = localized_terms(m, eta, LinearForm(1), false, ExpConvention::Imag);
            for (const auto& [comp, base_term] : lifted) {
                if (!(comp->moment[0] > Rational(0))) continue;
                MultiPoly q = witten_component_polynomial(m, *comp, eta);
                SqrtEpsPolynomial lhs = integrate_poly(q, +1) + integrate_poly(q, -1);
                SqrtEpsPolynomial rhs;
                int pole = base_term.pole_order();
                for (int k = 0; 2 * k <= pole; ++k) {
                    LocalizationTerm t = base_term;
                    t.numerator = t.numerator * MultiPoly::variable(1, 0, 2 * k);
                    t.exponent = testing::form1(comp->moment[0]);
                    GaussianRational rk = residue_1d(t) * GaussianRational(Rational(-1, 2)).pow(k) /
                                          GaussianRational(Rational(factorial(k)));
                    rhs.add_pi(2 * k + 1, GaussianRational(2) * rk);
                }
                CAPTURE(cls);
                CAPTURE(comp->id);
                CHECK(lhs == rhs);
            }
        }
    }
}

TEST_CASE("sqrt(pi/2) channel never multiplies itself") {
    SqrtEpsPolynomial a = pi_term(1, GaussianRational(1));
    CHECK_THROWS_AS(a * a, validation_error);
    SqrtEpsPolynomial b = plain_term(2, GaussianRational(3));
    CHECK((a * b).coeff_pi(3) == GaussianRational(3));
}
