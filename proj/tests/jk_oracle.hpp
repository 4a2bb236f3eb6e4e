#pragma once

// Test-only independent evaluators for the multivariable residue: an
// iterated one-variable partial-fraction oracle for rank 2, and the
// directional-limit evaluation used to exercise the residue axioms.

#include <stdexcept>

#include "quot/residue.hpp"

namespace quot::testing {

// ---------------------------------------------------------------------------
// Rank-2 oracle: univariate partial fractions in X2 over Q(X1), then an
// independent dual-coordinate evaluation of each resulting basis germ. Kept
// deliberately separate from the library's circuit-splitting reduction.
// ---------------------------------------------------------------------------

using LaurentX1 = std::map<int, GaussianRational>; // power of X1 -> coefficient

struct OracleBasisTerm {
    LaurentX1 a;        // coefficient, Laurent in X1
    Rational root;      // pole at X2 = root * X1
    int k = 0;          // pole order in (X2 - root X1)
    int pure_pole = 0;  // power of X1 downstairs
};

inline GaussianRational oracle_eval_basis(const OracleBasisTerm& t, const LinearForm& lambda,
                                   ExpConvention conv, const Chamber& chamber, const Perturbation& rho) {
    GaussianRational total(0);
    for (const auto& [d, coeff] : t.a) {
        int p = t.pure_pole - std::min(d, 0) * 1; // negative powers join the X1 pole
        int numer_pow = std::max(d, 0);
        if (p <= 0) continue; // denominator {X2 - c X1} alone does not span
        // Basis u1 = X1, u2 = X2 - c X1 (sign-normalized against the chamber).
        Rational c = t.root;
        Rational s1 = Rational(1), s2 = Rational(1);
        GaussianRational sign(1);
        Rational v1 = chamber.xi[0];
        Rational v2 = chamber.xi[1] - c * chamber.xi[0];
        if (v1.is_zero()) throw std::logic_error("oracle: chamber degenerate");
        if (v2.is_zero()) throw std::logic_error("oracle: chamber degenerate");
        if (v1 < Rational(0)) {
            s1 = Rational(-1);
            if (p % 2 == 1) sign = -sign;
        }
        if (v2 < Rational(0)) {
            s2 = Rational(-1);
            if (t.k % 2 == 1) sign = -sign;
        }
        // lambda = lt1 * s1 u1 + lt2 * s2 u2 with u1 = X1, u2 = X2 - c X1.
        Rational lt2 = lambda[1] / s2;
        Rational lt1 = (lambda[0] + c * lambda[1]) / s1;
        Rational rt2 = rho.rho[1] / s2;
        Rational rt1 = (rho.rho[0] + c * rho.rho[1]) / s1;
        auto select = [&](const Rational& l, const Rational& r) -> int {
            if (l > Rational(0)) return 1;
            if (l < Rational(0)) return 0;
            if (r > Rational(0)) return 2; // frozen: exact degree only
            if (r < Rational(0)) return 0;
            // The iterated decomposition put the exponent on a cone boundary
            // that this perturbation cannot resolve; a different rho is
            // needed for the oracle's basis even if the direct evaluation is
            // boundary-free.
            throw validation_error("oracle: exponent on a cone boundary of the iterated basis; "
                                   "perturbation is degenerate there");
        };
        int sel1 = select(lt1, rt1), sel2 = select(lt2, rt2);
        if (sel1 == 0 || sel2 == 0) continue;
        // numerator sign s1^numer_pow from rewriting X1^numer_pow = (s1 u1)^...
        GaussianRational term = coeff * sign;
        if (numer_pow % 2 == 1 && s1 < Rational(0)) term = -term;
        int need1 = p - 1 - numer_pow;
        int need2 = t.k - 1;
        if (need1 < 0) continue;
        auto expo_factor = [&](int need, const Rational& l, int sel) -> GaussianRational {
            if (need == 0) return GaussianRational(1);
            if (sel == 2) return GaussianRational(0);
            GaussianRational base(l);
            if (conv == ExpConvention::Imag) base *= GaussianRational::i();
            return base.pow(need) / GaussianRational(Rational(factorial(need)));
        };
        GaussianRational f1 = expo_factor(need1, lt1, sel1);
        GaussianRational f2 = expo_factor(need2, lt2, sel2);
        // |det| of rows {s1*(1,0), s2*(-c,1)} is 1.
        total += term * f1 * f2;
    }
    return total;
}

inline GaussianRational oracle_jk_rank2(const LocalizationTerm& input, const Chamber& chamber,
                                 const Perturbation& rho) {
    if (input.nvars != 2) throw std::logic_error("oracle: rank-2 only");
    // Sign adjustment, then grouping into pure-X1 factors and X2-roots.
    GaussianRational scale(1);
    int pure_pole = 0;
    std::map<Rational, int> roots; // c -> multiplicity of (X2 - c X1)
    for (const auto& [f, m] : input.denominator) {
        Rational v = f.eval(chamber.xi);
        if (v.is_zero()) throw std::logic_error("oracle: chamber degenerate");
        if (f[1].is_zero()) {
            pure_pole += m;
            scale *= GaussianRational(f[0].pow(m));
        } else {
            roots[-f[0] / f[1]] += m;
            scale *= GaussianRational(f[1].pow(m));
        }
    }

    GaussianRational total(0);
    for (const auto& [c, k] : roots) {
        // Expand q(X1, cX1 + w) / prod_{c' != c} ((c'-c)... ) around w = 0 up
        // to w^{k-1}; A_{c, k-j} is the w^j coefficient.
        // Representation: map w-power -> Laurent polynomial in X1.
        std::map<int, LaurentX1> series;
        for (const auto& [e, coeff] : input.numerator.terms()) {
            // X1^{e0} (cX1 + w)^{e1}
            for (int j = 0; j <= e[1] && j < k; ++j) {
                GaussianRational bin(Rational(binomial(e[1], j)));
                GaussianRational pw(c.pow(e[1] - j));
                series[j][e[0] + e[1] - j] += coeff * bin * pw;
            }
        }
        for (const auto& [c2, k2] : roots) {
            if (c2 == c) continue;
            // ((c2 - c) X1 - w)^{-k2}: note X2 - c2 X1 = (c - c2) X1 + w.
            Rational d = c - c2;
            std::map<int, LaurentX1> factor;
            for (int r = 0; r < k; ++r) {
                GaussianRational coeff(Rational(binomial(k2 - 1 + r, r)) * d.pow(-(k2 + r)));
                if (r % 2 == 1) coeff = -coeff;
                factor[r][-(k2 + r)] = coeff;
            }
            std::map<int, LaurentX1> next;
            for (const auto& [ja, va] : series) {
                for (const auto& [jb, vb] : factor) {
                    if (ja + jb >= k) continue;
                    for (const auto& [da, ca] : va) {
                        for (const auto& [db, cb] : vb) next[ja + jb][da + db] += ca * cb;
                    }
                }
            }
            series = std::move(next);
        }
        for (int j = 0; j < k; ++j) {
            auto it = series.find(j);
            if (it == series.end()) continue;
            OracleBasisTerm t;
            t.a = it->second;
            t.root = c;
            t.k = k - j;
            t.pure_pole = pure_pole;
            total += oracle_eval_basis(t, input.exponent, input.convention, chamber, rho);
        }
    }
    return total / scale;
}

// lim_{s -> 0+} res(num e^{i s dir} / prod beta_j^{m_j}) for an independent
// denominator {(beta_j, m_j)}: the exponential drops out, so only the exact
// extraction degree survives, gated by the direction's dual coordinates.
// A test-local re-derivation of axioms ii-iv used to cross-check the library.
inline GaussianRational dir_limit_eval(const MultiPoly& num, const LinearForm& dir,
                                const std::vector<std::pair<LinearForm, int>>& forms) {
    const int l = static_cast<int>(forms.size());
    std::vector<std::vector<Rational>> m(l, std::vector<Rational>(l));
    for (int j = 0; j < l; ++j)
        for (int i = 0; i < l; ++i) m[j][i] = forms[j].first[i];
    Rational dm = det(m);
    auto minv = invert(m);
    if (!minv.has_value()) throw std::logic_error("dir limit: dependent forms");
    std::vector<Rational> dt(l, Rational(0));
    for (int j = 0; j < l; ++j)
        for (int i = 0; i < l; ++i) dt[j] += (*minv)[i][j] * dir[i];
    for (int j = 0; j < l; ++j) {
        if (dt[j] < Rational(0)) return GaussianRational(0);
        if (dt[j].is_zero()) throw std::logic_error("dir limit: non-generic direction");
    }
    std::vector<MultiPoly> images(l);
    for (int i = 0; i < l; ++i) {
        LinearForm xi_in_u(l);
        for (int j = 0; j < l; ++j) xi_in_u[j] = (*minv)[i][j];
        images[i] = MultiPoly::from_linear_form(xi_in_u);
    }
    MultiPoly q = num.substitute(images);
    Exponents want(l);
    for (int j = 0; j < l; ++j) want[j] = forms[j].second - 1;
    auto it = q.terms().find(want);
    GaussianRational c = it == q.terms().end() ? GaussianRational(0) : it->second;
    return GaussianRational(dm.abs().inverse()) * c;
}


} // namespace quot::testing
