#pragma once

#include <map>

#include "quot/poly.hpp"

namespace quot {

// Whether the exponential factor is e^{lambda(X)} or e^{i*lambda(X)}.
// Terms of different conventions never mix in arithmetic.
enum class ExpConvention { Real, Imag };

// Meromorphic germ q(X) e^{lambda(X)} / prod_j beta_j(X)^{m_j} on the
// complexified Cartan algebra. Denominator forms are nonzero; a term with an
// empty denominator is polynomial-times-exponential.
struct LocalizationTerm {
    int nvars = 0;
    MultiPoly numerator;                // polynomial in X_1..X_nvars
    LinearForm exponent;                // lambda
    ExpConvention convention = ExpConvention::Real;
    std::map<LinearForm, int> denominator; // form -> multiplicity (> 0)

    LocalizationTerm() = default;
    LocalizationTerm(MultiPoly num, LinearForm exp, ExpConvention conv)
        : nvars(num.nvars()), numerator(std::move(num)), exponent(std::move(exp)), convention(conv) {
        if (exponent.nvars() != nvars) throw validation_error("localization term arity mismatch");
    }

    int pole_order() const {
        int n = 0;
        for (const auto& [f, m] : denominator) n += m;
        return n;
    }

    void push_denominator(const LinearForm& f, int mult = 1) {
        if (f.is_zero()) throw validation_error("zero denominator form");
        if (f.nvars() != nvars) throw validation_error("denominator form arity mismatch");
        denominator[f] += mult;
    }
};

// Product of germs: numerators multiply, exponents add, denominators merge.
LocalizationTerm term_mul(const LocalizationTerm& a, const LocalizationTerm& b);

// Laurent expansion around X_var = 0. Preconditions: the exponent is
// supported on `var` only, and every denominator form is a nonzero scalar
// multiple of X_var (a factor mixing X_var with other variables, or free of
// X_var altogether, has no Laurent expansion with polynomial coefficients
// around X_var = 0 and raises math_contract_error).
//
// Returns coefficient-of-X_var^k for k from -pole_order to `order`; each
// coefficient is a polynomial in the remaining variables (indices above
// `var` shift down by one).
std::map<int, MultiPoly> laurent_expand(const LocalizationTerm& term, int var, int order);

} // namespace quot
