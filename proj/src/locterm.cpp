#include "quot/locterm.hpp"

namespace quot {

LocalizationTerm term_mul(const LocalizationTerm& a, const LocalizationTerm& b) {
    if (a.nvars != b.nvars) throw validation_error("localization term arity mismatch");
    if (a.convention != b.convention)
        throw validation_error("cannot mix real-exponential and i-exponential terms");
    LocalizationTerm r(a.numerator * b.numerator, a.exponent + b.exponent, a.convention);
    r.denominator = a.denominator;
    for (const auto& [f, m] : b.denominator) r.denominator[f] += m;
    return r;
}

std::map<int, MultiPoly> laurent_expand(const LocalizationTerm& term, int var, int order) {
    const int n = term.nvars;
    if (var < 0 || var >= n) throw validation_error("laurent variable out of range");

    // Pole data: every denominator form must be c * X_var.
    int pole = 0;
    Rational denom_const(1);
    std::vector<std::string> dbg_names;
    for (int i = 0; i < n; ++i) dbg_names.push_back("X" + std::to_string(i + 1));
    for (const auto& [f, m] : term.denominator) {
        bool pure = !f[var].is_zero();
        for (int i = 0; i < n && pure; ++i) {
            if (i != var && !f[i].is_zero()) pure = false;
        }
        if (!pure)
            throw math_contract_error("non-expandable pole: factor " + f.str(dbg_names) +
                                      " is not a multiple of " + dbg_names[var] +
                                      " (its remaining part vanishes at the origin)");
        pole += m;
        denom_const *= f[var].pow(m);
    }

    for (int i = 0; i < n; ++i) {
        if (i != var && !term.exponent[i].is_zero())
            throw validation_error("laurent expansion requires the exponent to involve only the expansion variable");
    }

    // numerator * exp(lambda_v X_var), truncated so that X_var^(order+pole) is exact.
    const Rational lambda_v = term.exponent[var];
    const int need = order + pole; // highest power of X_var needed before shifting by -pole
    MultiPoly top = term.numerator;
    if (!lambda_v.is_zero()) {
        MultiPoly expsum(n);
        GaussianRational base(lambda_v);
        if (term.convention == ExpConvention::Imag) base *= GaussianRational::i();
        GaussianRational c(1);
        for (int k = 0; k <= std::max(need, 0); ++k) {
            Exponents e(n, 0);
            e[var] = k;
            expsum.add_term(e, c);
            c *= base;
            c /= GaussianRational(Rational(k + 1));
        }
        top = top * expsum;
    }

    std::map<int, MultiPoly> out;
    GaussianRational scale = GaussianRational(Rational(1) / denom_const);
    std::vector<MultiPoly> by_power = top.collect(var);
    for (int k = 0; k < static_cast<int>(by_power.size()); ++k) {
        if (k - pole > order) break;
        out[k - pole] = scale * by_power[k];
    }
    // Ensure every exponent in range is present, including exact zeros.
    for (int k = -pole; k <= order; ++k) {
        if (!out.count(k)) out[k] = MultiPoly(n - 1);
    }
    return out;
}

} // namespace quot
