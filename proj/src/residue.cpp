#include "quot/residue.hpp"

#include <algorithm>
#include <deque>

namespace quot {

MultiPoly exp_series(const MultiPoly& coeff, int xvar, int order, ExpConvention conv) {
    const int n = coeff.nvars();
    if (coeff.degree_in(xvar) > 0)
        throw validation_error("exp_series coefficient must not involve the expansion variable");
    MultiPoly base = coeff;
    if (conv == ExpConvention::Imag) base = GaussianRational::i() * base;
    MultiPoly out(n);
    MultiPoly power = MultiPoly::constant(n, GaussianRational(1));
    for (int k = 0; k <= order; ++k) {
        if (k > 0) power = power * base;
        MultiPoly xk = MultiPoly::variable(n, xvar, k);
        out += GaussianRational(Rational(BigInt(1), factorial(k))) * (power * xk);
    }
    return out;
}

GaussianRational residue_1d(const LocalizationTerm& term) {
    if (term.nvars != 1)
        throw validation_error("residue_1d needs a one-variable germ; route multivariable poles through jk_residue");
    auto coeffs = laurent_expand(term, 0, -1);
    auto it = coeffs.find(-1);
    return it == coeffs.end() ? GaussianRational(0) : it->second.constant_term();
}

GaussianRational residue_1d_plus(const LocalizationTerm& term, const Rational& mu) {
    if (mu < Rational(0)) return GaussianRational(0);
    return residue_1d(term);
}

MultiPoly residue_first_var(const LocalizationTerm& term) {
    auto coeffs = laurent_expand(term, 0, -1);
    auto it = coeffs.find(-1);
    return it == coeffs.end() ? MultiPoly(term.nvars - 1) : it->second;
}

bool Perturbation::is_zero() const {
    return std::all_of(rho.begin(), rho.end(), [](const Rational& c) { return c.is_zero(); });
}

Rational det(const std::vector<std::vector<Rational>>& m) {
    auto a = m;
    const int n = static_cast<int>(a.size());
    Rational d(1);
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int row = col; row < n; ++row) {
            if (!a[row][col].is_zero()) {
                pivot = row;
                break;
            }
        }
        if (pivot < 0) return Rational(0);
        if (pivot != col) {
            std::swap(a[pivot], a[col]);
            d = -d;
        }
        d *= a[col][col];
        Rational inv = a[col][col].inverse();
        for (int row = col + 1; row < n; ++row) {
            if (a[row][col].is_zero()) continue;
            Rational f = a[row][col] * inv;
            for (int j = col; j < n; ++j) a[row][j] -= f * a[col][j];
        }
    }
    return d;
}

std::optional<std::vector<std::vector<Rational>>> invert(std::vector<std::vector<Rational>> m) {
    const int n = static_cast<int>(m.size());
    std::vector<std::vector<Rational>> inv(n, std::vector<Rational>(n, Rational(0)));
    for (int i = 0; i < n; ++i) inv[i][i] = Rational(1);
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int row = col; row < n; ++row) {
            if (!m[row][col].is_zero()) {
                pivot = row;
                break;
            }
        }
        if (pivot < 0) return std::nullopt;
        std::swap(m[pivot], m[col]);
        std::swap(inv[pivot], inv[col]);
        Rational piv_inv = m[col][col].inverse();
        for (int j = 0; j < n; ++j) {
            m[col][j] *= piv_inv;
            inv[col][j] *= piv_inv;
        }
        for (int row = 0; row < n; ++row) {
            if (row == col || m[row][col].is_zero()) continue;
            Rational f = m[row][col];
            for (int j = 0; j < n; ++j) {
                m[row][j] -= f * m[col][j];
                inv[row][j] -= f * inv[col][j];
            }
        }
    }
    return inv;
}

namespace {

// Is f in the span of `accepted`? If so return the coefficients.
std::optional<std::vector<Rational>> in_span(const std::vector<LinearForm>& accepted, const LinearForm& f) {
    const int rows = f.nvars();
    const int cols = static_cast<int>(accepted.size());
    // Augmented system: accepted forms as columns, RHS f.
    std::vector<std::vector<Rational>> a(rows, std::vector<Rational>(cols + 1, Rational(0)));
    for (int j = 0; j < cols; ++j) {
        for (int i = 0; i < rows; ++i) a[i][j] = accepted[j][i];
    }
    for (int i = 0; i < rows; ++i) a[i][cols] = f[i];
    std::vector<int> pivot_col_of_row;
    int row = 0;
    for (int col = 0; col < cols && row < rows; ++col) {
        int p = -1;
        for (int r = row; r < rows; ++r) {
            if (!a[r][col].is_zero()) {
                p = r;
                break;
            }
        }
        if (p < 0) continue;
        std::swap(a[p], a[row]);
        Rational inv = a[row][col].inverse();
        for (int j = col; j <= cols; ++j) a[row][j] *= inv;
        for (int r = 0; r < rows; ++r) {
            if (r == row || a[r][col].is_zero()) continue;
            Rational fct = a[r][col];
            for (int j = col; j <= cols; ++j) a[r][j] -= fct * a[row][j];
        }
        pivot_col_of_row.push_back(col);
        ++row;
    }
    for (int r = row; r < rows; ++r) {
        if (!a[r][cols].is_zero()) return std::nullopt; // inconsistent: f not in span
    }
    std::vector<Rational> coeffs(cols, Rational(0));
    for (int r = 0; r < row; ++r) coeffs[pivot_col_of_row[r]] = a[r][cols];
    return coeffs;
}

struct ReduceWork {
    MultiPoly num;
    std::map<LinearForm, int> den;
};

// Basis-denominator germ evaluation: coefficient extraction in the dual
// coordinates u_j = beta_j(X) with the cone selection applied to
// lambda + s rho, s -> 0+.
GaussianRational evaluate_basis_term(const MultiPoly& num, const LinearForm& lambda, ExpConvention conv,
                                     const std::vector<std::pair<LinearForm, int>>& forms,
                                     const Perturbation& rho) {
    const int l = static_cast<int>(forms.size());
    std::vector<std::vector<Rational>> m(l, std::vector<Rational>(l));
    for (int j = 0; j < l; ++j) {
        for (int i = 0; i < l; ++i) m[j][i] = forms[j].first[i];
    }
    Rational dm = det(m);
    auto minv_opt = invert(m);
    if (!minv_opt) throw math_contract_error("basis term with singular form matrix");
    const auto& minv = *minv_opt;

    // Coordinates of lambda and rho in the dual basis of the beta's.
    std::vector<Rational> lt(l, Rational(0)), rt(l, Rational(0));
    for (int j = 0; j < l; ++j) {
        for (int i = 0; i < l; ++i) {
            lt[j] += minv[i][j] * lambda[i];
            rt[j] += minv[i][j] * rho.rho[i];
        }
    }

    // Cone selection on lambda + s rho.
    std::vector<bool> frozen(l, false); // lambda-coordinate exactly 0: only exact-degree matches survive
    for (int j = 0; j < l; ++j) {
        if (lt[j] > Rational(0)) continue;
        if (lt[j] < Rational(0)) return GaussianRational(0);
        if (rt[j] > Rational(0)) {
            frozen[j] = true;
            continue;
        }
        if (rt[j] < Rational(0)) return GaussianRational(0);
        throw validation_error("exponent lies on a cone boundary: a nonzero perturbation rho is required");
    }

    // Rewrite the numerator in the u coordinates.
    std::vector<MultiPoly> images(l);
    for (int i = 0; i < l; ++i) {
        LinearForm xi_in_u(l);
        for (int j = 0; j < l; ++j) xi_in_u[j] = minv[i][j];
        images[i] = MultiPoly::from_linear_form(xi_in_u);
    }
    MultiPoly q = num.substitute(images);

    GaussianRational total(0);
    for (const auto& [exps, coeff] : q.terms()) {
        GaussianRational factor = coeff;
        bool alive = true;
        for (int j = 0; j < l && alive; ++j) {
            int need = forms[j].second - 1 - exps[j];
            if (need < 0) {
                alive = false;
                break;
            }
            if (need == 0) continue;
            if (frozen[j] || lt[j].is_zero()) {
                alive = false;
                break;
            }
            GaussianRational lam(lt[j]);
            if (conv == ExpConvention::Imag) lam *= GaussianRational::i();
            factor *= lam.pow(need);
            factor /= GaussianRational(Rational(factorial(need)));
        }
        if (alive) total += factor;
    }
    return GaussianRational(dm.abs().inverse()) * total;
}

} // namespace

GaussianRational jk_residue(const std::vector<LocalizationTerm>& terms, const Chamber& chamber,
                            const Perturbation& perturbation) {
    const int l = chamber.rank();
    if (l < 1) throw validation_error("chamber has rank 0");
    if (static_cast<int>(perturbation.rho.size()) != l)
        throw validation_error("perturbation rank mismatch");
    if (!perturbation.is_zero()) {
        LinearForm rho_form(perturbation.rho);
        if (!(rho_form.eval(chamber.xi) < Rational(0)))
            throw validation_error("-rho must lie strictly in the dual cone of the chamber");
    }

    GaussianRational total(0);
    for (const auto& input : terms) {
        if (input.nvars != l) throw validation_error("term rank does not match chamber");

        // Sign-adjust the denominator forms against the chamber vector.
        MultiPoly num = input.numerator;
        std::map<LinearForm, int> den;
        for (const auto& [f, mult] : input.denominator) {
            Rational v = f.eval(chamber.xi);
            if (v.is_zero())
                throw validation_error("invalid chamber: vector vanishes on a denominator form");
            if (v > Rational(0)) {
                den[f] += mult;
            } else {
                if (mult % 2 == 1) num = -num;
                den[-f] += mult;
            }
        }

        // Partial-fraction reduction to independent denominators. Children of
        // a split keep the exponent; only numerator scalars and multiplicities
        // change, so the worklist is over (numerator, denominators).
        std::deque<ReduceWork> work;
        work.push_back(ReduceWork{num, den});
        while (!work.empty()) {
            ReduceWork w = std::move(work.front());
            work.pop_front();
            if (w.num.is_zero()) continue;

            // Scan forms in ascending order, keeping an independent prefix;
            // the first dependent form becomes the pivot of the split.
            std::vector<LinearForm> accepted;
            std::optional<std::pair<LinearForm, std::vector<Rational>>> dep;
            for (const auto& [f, mult] : w.den) {
                auto coeffs = in_span(accepted, f);
                if (coeffs) {
                    dep = std::make_pair(f, *coeffs);
                    break;
                }
                accepted.push_back(f);
            }

            if (!dep) {
                if (static_cast<int>(w.den.size()) < l) continue; // does not span: contributes 0
                std::vector<std::pair<LinearForm, int>> forms(w.den.begin(), w.den.end());
                total += evaluate_basis_term(w.num, input.exponent, input.convention, forms, perturbation);
                continue;
            }

            // pivot = sum_k d_k * beta_k over the accepted prefix: split
            // 1 = sum_k d_k beta_k / pivot, cancelling one power of beta_k
            // and raising the pivot's multiplicity.
            const LinearForm& pivot = dep->first;
            const std::vector<Rational>& d = dep->second;
            for (size_t k = 0; k < d.size(); ++k) {
                if (d[k].is_zero()) continue;
                ReduceWork child;
                child.num = GaussianRational(d[k]) * w.num;
                child.den = w.den;
                auto it = child.den.find(accepted[k]);
                if (it->second == 1)
                    child.den.erase(it);
                else
                    --it->second;
                child.den[pivot] += 1;
                work.push_back(std::move(child));
            }
        }
    }
    return total;
}

std::vector<GaussianRational> FiniteGradedRing::one() const {
    auto e = zero();
    e[0] = GaussianRational(1);
    return e;
}

std::vector<GaussianRational> FiniteGradedRing::mul(const std::vector<GaussianRational>& a,
                                                    const std::vector<GaussianRational>& b) const {
    auto r = zero();
    for (int i = 0; i < dim(); ++i) {
        if (a[i].is_zero()) continue;
        for (int j = 0; j < dim(); ++j) {
            if (b[j].is_zero()) continue;
            GaussianRational c = a[i] * b[j];
            for (int k = 0; k < dim(); ++k) r[k] += c * mult[i][j][k];
        }
    }
    return r;
}

std::vector<GaussianRational> FiniteGradedRing::add(std::vector<GaussianRational> a,
                                                    const std::vector<GaussianRational>& b) const {
    for (int i = 0; i < dim(); ++i) a[i] += b[i];
    return a;
}

std::vector<GaussianRational> FiniteGradedRing::scale(const GaussianRational& c,
                                                      std::vector<GaussianRational> a) const {
    for (auto& x : a) x *= c;
    return a;
}

GaussianRational FiniteGradedRing::integrate(const std::vector<GaussianRational>& a) const {
    GaussianRational r(0);
    for (int i = 0; i < dim(); ++i) r += a[i] * integral[i];
    return r;
}

int FiniteGradedRing::top_degree() const {
    int d = 0;
    for (int x : degrees) d = std::max(d, x);
    return d;
}

FiniteGradedRing FiniteGradedRing::point() {
    FiniteGradedRing r;
    r.degrees = {0};
    r.mult = {{{GaussianRational(1)}}};
    r.integral = {GaussianRational(1)};
    return r;
}

FiniteGradedRing FiniteGradedRing::truncated_power(int d) {
    FiniteGradedRing r;
    const int n = d + 1;
    r.degrees.resize(n);
    for (int k = 0; k <= d; ++k) r.degrees[k] = 2 * k;
    r.mult.assign(n, std::vector<std::vector<GaussianRational>>(n, std::vector<GaussianRational>(n, GaussianRational(0))));
    for (int i = 0; i <= d; ++i) {
        for (int j = 0; j <= d; ++j) {
            if (i + j <= d) r.mult[i][j][i + j] = GaussianRational(1);
        }
    }
    r.integral.assign(n, GaussianRational(0));
    r.integral[d] = GaussianRational(1);
    return r;
}

GaussianRational pushforward_projective_bundle(const std::vector<std::vector<GaussianRational>>& cls,
                                               const std::vector<std::vector<GaussianRational>>& chern,
                                               const FiniteGradedRing& ring) {
    const int r = static_cast<int>(chern.size());
    if (r <= 0) throw validation_error("projective bundle pushforward needs rank >= 1");
    for (const auto& c : chern) {
        if (static_cast<int>(c.size()) != ring.dim())
            throw validation_error("chern class has wrong coefficient dimension");
        if (!c.empty() && !c[0].is_zero())
            throw validation_error("chern classes must have no degree-zero component");
    }

    // 1/p(y) = y^{-r} sum_k (-1)^k (c_1/y + ... + c_r/y^r)^k; the sum is
    // finite because the chern classes are nilpotent in a finite ring.
    std::map<int, std::vector<GaussianRational>> inv_p; // power of y -> ring element
    std::map<int, std::vector<GaussianRational>> b;     // B = sum c_j y^{-j}
    for (int j = 1; j <= r; ++j) b[-j] = chern[static_cast<size_t>(j) - 1];
    std::map<int, std::vector<GaussianRational>> bpow;
    bpow[0] = ring.one();
    int sign = 1;
    const int kmax = ring.top_degree() + 2;
    for (int k = 0; k <= kmax; ++k) {
        bool any = false;
        for (const auto& [e, v] : bpow) {
            for (const auto& c : v) {
                if (!c.is_zero()) any = true;
            }
            auto it = inv_p.find(e - r);
            if (it == inv_p.end())
                inv_p[e - r] = ring.scale(GaussianRational(sign), v);
            else
                it->second = ring.add(it->second, ring.scale(GaussianRational(sign), v));
        }
        if (!any) break;
        // bpow *= B
        std::map<int, std::vector<GaussianRational>> next;
        for (const auto& [e1, v1] : bpow) {
            for (const auto& [e2, v2] : b) {
                auto prod = ring.mul(v1, v2);
                auto it = next.find(e1 + e2);
                if (it == next.end())
                    next[e1 + e2] = prod;
                else
                    it->second = ring.add(it->second, prod);
            }
        }
        bpow = std::move(next);
        sign = -sign;
    }

    // Coefficient of y^{-1} in cls(y) / p(y), integrated over the base.
    auto acc = ring.zero();
    for (int k = 0; k < static_cast<int>(cls.size()); ++k) {
        auto it = inv_p.find(-1 - k);
        if (it == inv_p.end()) continue;
        acc = ring.add(acc, ring.mul(cls[static_cast<size_t>(k)], it->second));
    }
    return ring.integrate(acc);
}

} // namespace quot
