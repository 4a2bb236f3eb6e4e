#include "quot/ihring.hpp"

#include <algorithm>
#include <set>

#include "quot/errors.hpp"

namespace quot {

namespace {

// Leading term under lex with xi > rho: the largest exponent vector in the
// (lexicographically ordered) term map.
std::pair<Exponents, GaussianRational> leading_term(const MultiPoly& f) {
    if (f.is_zero()) throw math_contract_error("leading term of zero");
    auto it = std::prev(f.terms().end());
    return {it->first, it->second};
}

bool divides(const Exponents& a, const Exponents& b) {
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] > b[i]) return false;
    }
    return true;
}

Exponents exp_sub(const Exponents& a, const Exponents& b) {
    Exponents r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

Exponents exp_lcm(const Exponents& a, const Exponents& b) {
    Exponents r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
    return r;
}

MultiPoly reduce(const MultiPoly& f, const std::vector<MultiPoly>& basis) {
    MultiPoly work = f;
    MultiPoly remainder(f.nvars());
    while (!work.is_zero()) {
        auto [lt, lc] = leading_term(work);
        bool reduced = false;
        for (const auto& g : basis) {
            auto [glt, glc] = leading_term(g);
            if (!divides(glt, lt)) continue;
            GaussianRational factor = lc / glc;
            work -= MultiPoly::monomial(f.nvars(), exp_sub(lt, glt), factor) * g;
            reduced = true;
            break;
        }
        if (!reduced) {
            remainder.add_term(lt, lc);
            work.add_term(lt, -lc);
        }
    }
    return remainder;
}

MultiPoly s_polynomial(const MultiPoly& f, const MultiPoly& g) {
    auto [flt, flc] = leading_term(f);
    auto [glt, glc] = leading_term(g);
    Exponents l = exp_lcm(flt, glt);
    MultiPoly a = MultiPoly::monomial(f.nvars(), exp_sub(l, flt), GaussianRational(1) / flc) * f;
    MultiPoly b = MultiPoly::monomial(g.nvars(), exp_sub(l, glt), GaussianRational(1) / glc) * g;
    return a - b;
}

std::vector<MultiPoly> buchberger(std::vector<MultiPoly> gens) {
    std::vector<MultiPoly> basis;
    for (auto& g : gens) {
        if (!g.is_zero()) basis.push_back(g);
    }
    if (basis.empty()) return basis;
    std::vector<std::pair<size_t, size_t>> pairs;
    for (size_t i = 0; i < basis.size(); ++i) {
        for (size_t j = i + 1; j < basis.size(); ++j) pairs.emplace_back(i, j);
    }
    while (!pairs.empty()) {
        auto [i, j] = pairs.back();
        pairs.pop_back();
        MultiPoly s = reduce(s_polynomial(basis[i], basis[j]), basis);
        if (s.is_zero()) continue;
        basis.push_back(s);
        for (size_t k = 0; k + 1 < basis.size(); ++k) pairs.emplace_back(k, basis.size() - 1);
    }

    // Minimalize: drop elements whose leading term another leading term divides.
    std::vector<MultiPoly> minimal;
    for (size_t i = 0; i < basis.size(); ++i) {
        auto [lt, lc] = leading_term(basis[i]);
        bool redundant = false;
        for (size_t j = 0; j < basis.size() && !redundant; ++j) {
            if (i == j) continue;
            auto [olt, olc] = leading_term(basis[j]);
            if (divides(olt, lt) && (olt != lt || j < i)) redundant = true;
        }
        if (!redundant) minimal.push_back(basis[i]);
    }

    // Fully reduce tails and normalize monic.
    std::vector<MultiPoly> reduced;
    for (size_t i = 0; i < minimal.size(); ++i) {
        std::vector<MultiPoly> others;
        for (size_t j = 0; j < minimal.size(); ++j) {
            if (j != i) others.push_back(minimal[j]);
        }
        MultiPoly r = reduce(minimal[i], others);
        if (r.is_zero()) continue;
        auto [lt, lc] = leading_term(r);
        reduced.push_back((GaussianRational(1) / lc) * r);
    }
    std::sort(reduced.begin(), reduced.end(), [](const MultiPoly& a, const MultiPoly& b) {
        return leading_term(b).first < leading_term(a).first;
    });
    return reduced;
}

int zero_multiplicity(const std::vector<long long>& weights) {
    return static_cast<int>(std::count(weights.begin(), weights.end(), 0));
}

} // namespace

bool weakly_balanced_check(const std::vector<long long>& weights) {
    long long pos = 0, neg = 0;
    for (long long w : weights) {
        if (w > 0) ++pos;
        if (w < 0) ++neg;
    }
    return pos == neg;
}

MultiPoly QuotientRingPresentation::normal_form(const MultiPoly& f) const { return reduce(f, groebner); }

std::vector<Exponents> QuotientRingPresentation::standard_monomials(int coh_degree) const {
    std::vector<Exponents> out;
    if (coh_degree < 0 || coh_degree % 2 != 0) return out;
    int d = coh_degree / 2;
    for (int i = 0; i <= d; ++i) {
        Exponents e{i, d - i};
        bool standard = true;
        for (const auto& g : groebner) {
            if (divides(leading_term(g).first, e)) {
                standard = false;
                break;
            }
        }
        if (standard) out.push_back(e);
    }
    return out;
}

void QuotientRingPresentation::verify() const {
    for (const auto& f : ideal) {
        if (!normal_form(f).is_zero())
            throw math_contract_error("ideal generator does not reduce to zero against the basis");
    }
    for (size_t i = 0; i < groebner.size(); ++i) {
        for (size_t j = i + 1; j < groebner.size(); ++j) {
            if (!reduce(s_polynomial(groebner[i], groebner[j]), groebner).is_zero())
                throw math_contract_error("S-polynomial does not reduce to zero: not a Groebner basis");
        }
    }
    for (int d = 0; d <= 16; d += 2) {
        for (int i = 0; i * 2 <= d; ++i) {
            MultiPoly m = MultiPoly::monomial(2, {i, d / 2 - i}, GaussianRational(1));
            MultiPoly once = normal_form(m);
            if (normal_form(once) != once) throw math_contract_error("normal form is not idempotent");
        }
    }
}

QuotientRingPresentation semistable_ring(const std::vector<long long>& weights) {
    bool has_pos = std::any_of(weights.begin(), weights.end(), [](long long w) { return w > 0; });
    bool has_neg = std::any_of(weights.begin(), weights.end(), [](long long w) { return w < 0; });
    if (!has_pos || !has_neg)
        throw validation_error("degenerate weight set: all weights on one side, the semistable locus is empty");

    QuotientRingPresentation pres;
    pres.weights = weights;
    std::set<long long> values(weights.begin(), weights.end());
    for (long long m : values) {
        if (m == 0) continue;
        MultiPoly gen = MultiPoly::constant(2, GaussianRational(1));
        for (long long r : weights) {
            bool include = (m > 0) ? (r < m) : (r > m);
            if (!include) continue;
            // xi - r * rho
            MultiPoly lin = MultiPoly::variable(2, 0);
            lin -= GaussianRational(Rational(r)) * MultiPoly::variable(2, 1);
            gen = gen * lin;
        }
        pres.ideal.push_back(gen);
    }
    pres.groebner = buchberger(pres.ideal);
    pres.verify();
    return pres;
}

VmBasis vm_basis(const std::vector<long long>& weights) {
    if (!weakly_balanced_check(weights))
        throw validation_error("weights are not weakly balanced (#positive != #negative)");
    QuotientRingPresentation pres = semistable_ring(weights);

    VmBasis basis;
    basis.zero_multiplicity = zero_multiplicity(weights);
    int nonzero = static_cast<int>(weights.size()) - basis.zero_multiplicity;
    basis.n_R = nonzero - 1;
    basis.top_degree = 2 * (static_cast<int>(weights.size()) - 2);

    const bool truncate = basis.zero_multiplicity >= 1;
    for (int d = 0; d <= basis.top_degree; d += 2) {
        std::vector<Exponents> kept;
        for (const auto& e : pres.standard_monomials(d)) {
            if (!truncate || e[0] >= basis.zero_multiplicity || 2 * e[1] < basis.n_R) kept.push_back(e);
        }
        std::sort(kept.begin(), kept.end()); // ascending xi-exponent
        basis.monomials[d] = std::move(kept);
    }
    const auto& top = basis.monomials[basis.top_degree];
    if (top.size() != 1)
        throw math_contract_error("top degree of the truncated basis is not one-dimensional; "
                                  "no distinguished top class");
    basis.tau = top.front();
    return basis;
}

std::vector<int> VmBasis::graded_dimensions() const {
    std::vector<int> dims;
    for (int d = 0; d <= top_degree; d += 2) dims.push_back(static_cast<int>(monomials.at(d).size()));
    return dims;
}

GaussianRational ih_pairing_scalar(const std::vector<long long>& weights, const MultiPoly& alpha,
                                   const MultiPoly& beta) {
    if (alpha.is_zero() || beta.is_zero()) return GaussianRational(0);
    VmBasis basis = vm_basis(weights);
    int da = 2 * alpha.total_degree(), db = 2 * beta.total_degree();
    if (da + db != basis.top_degree)
        throw validation_error("degree mismatch: " + std::to_string(da) + " + " + std::to_string(db) +
                               " != " + std::to_string(basis.top_degree));
    QuotientRingPresentation pres = semistable_ring(weights);
    MultiPoly nf = pres.normal_form(alpha * beta);
    if (nf.is_zero()) return GaussianRational(0);
    if (nf.terms().size() != 1 || nf.terms().begin()->first != basis.tau)
        throw math_contract_error("normal form of the product is not a multiple of the top class "
                                  "(inputs are not in the truncated subspace)");
    return nf.terms().begin()->second;
}

std::vector<std::vector<GaussianRational>> ih_pairing_matrix(const std::vector<long long>& weights, int d) {
    VmBasis basis = vm_basis(weights);
    if (d < 0 || d > basis.top_degree || d % 2 != 0)
        throw validation_error("no basis in degree " + std::to_string(d));
    int cod = basis.top_degree - d;
    QuotientRingPresentation pres = semistable_ring(weights);
    const auto& rows = basis.monomials.at(d);
    const auto& cols = basis.monomials.at(cod);
    std::vector<std::vector<GaussianRational>> m(rows.size(), std::vector<GaussianRational>(cols.size()));
    for (size_t a = 0; a < rows.size(); ++a) {
        for (size_t b = 0; b < cols.size(); ++b) {
            MultiPoly pa = MultiPoly::monomial(2, rows[a], GaussianRational(1));
            MultiPoly pb = MultiPoly::monomial(2, cols[b], GaussianRational(1));
            MultiPoly nf = pres.normal_form(pa * pb);
            if (nf.is_zero()) {
                m[a][b] = GaussianRational(0);
            } else if (nf.terms().size() == 1 && nf.terms().begin()->first == basis.tau) {
                m[a][b] = nf.terms().begin()->second;
            } else {
                throw math_contract_error("pairing of basis monomials is not a multiple of the top class");
            }
        }
    }
    return m;
}

} // namespace quot
