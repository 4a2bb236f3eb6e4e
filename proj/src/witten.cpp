#include "quot/witten.hpp"

#include "quot/residue.hpp"

namespace quot {

void SqrtEpsPolynomial::add_plain(int k, const GaussianRational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = plain.emplace(k, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) plain.erase(it);
    }
}

void SqrtEpsPolynomial::add_pi(int k, const GaussianRational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = sqrt_pi_2.emplace(k, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) sqrt_pi_2.erase(it);
    }
}

SqrtEpsPolynomial& SqrtEpsPolynomial::operator+=(const SqrtEpsPolynomial& o) {
    for (const auto& [k, c] : o.plain) add_plain(k, c);
    for (const auto& [k, c] : o.sqrt_pi_2) add_pi(k, c);
    return *this;
}

SqrtEpsPolynomial operator*(const GaussianRational& c, const SqrtEpsPolynomial& p) {
    SqrtEpsPolynomial r;
    for (const auto& [k, v] : p.plain) r.add_plain(k, c * v);
    for (const auto& [k, v] : p.sqrt_pi_2) r.add_pi(k, c * v);
    return r;
}

SqrtEpsPolynomial operator*(const SqrtEpsPolynomial& a, const SqrtEpsPolynomial& b) {
    if (!a.sqrt_pi_2.empty() && !b.sqrt_pi_2.empty())
        throw validation_error("product would square the sqrt(pi/2) channel");
    SqrtEpsPolynomial r;
    for (const auto& [ka, ca] : a.plain) {
        for (const auto& [kb, cb] : b.plain) r.add_plain(ka + kb, ca * cb);
        for (const auto& [kb, cb] : b.sqrt_pi_2) r.add_pi(ka + kb, ca * cb);
    }
    for (const auto& [ka, ca] : a.sqrt_pi_2) {
        for (const auto& [kb, cb] : b.plain) r.add_pi(ka + kb, ca * cb);
    }
    return r;
}

SqrtEpsPolynomial SqrtEpsPolynomial::shifted(int k) const {
    SqrtEpsPolynomial r;
    for (const auto& [e, c] : plain) r.plain[e + k] = c;
    for (const auto& [e, c] : sqrt_pi_2) r.sqrt_pi_2[e + k] = c;
    return r;
}

int SqrtEpsPolynomial::min_exponent() const {
    int m = 0;
    bool any = false;
    for (const auto& [e, c] : plain) {
        m = any ? std::min(m, e) : e;
        any = true;
    }
    for (const auto& [e, c] : sqrt_pi_2) {
        m = any ? std::min(m, e) : e;
        any = true;
    }
    return any ? m : 0;
}

GaussianRational SqrtEpsPolynomial::coeff_plain(int k) const {
    auto it = plain.find(k);
    return it == plain.end() ? GaussianRational(0) : it->second;
}

GaussianRational SqrtEpsPolynomial::coeff_pi(int k) const {
    auto it = sqrt_pi_2.find(k);
    return it == sqrt_pi_2.end() ? GaussianRational(0) : it->second;
}

static std::string eps_power(int k) {
    if (k == 0) return "";
    if (k == 2) return "eps";
    if (k % 2 == 0) return "eps^" + std::to_string(k / 2);
    return "eps^(" + std::to_string(k) + "/2)";
}

std::string SqrtEpsPolynomial::str() const {
    std::string out;
    auto emit = [&](int k, const GaussianRational& c, bool pi_channel) {
        std::string term;
        std::string cs = c.str();
        bool unit = (cs == "1"), munit = (cs == "-1");
        std::string tail = pi_channel ? "sqrt(pi/2)" : "";
        std::string ep = eps_power(k);
        if (!ep.empty()) {
            if (!tail.empty()) tail += "*";
            tail += ep;
        }
        if (tail.empty()) {
            term = cs;
        } else if (unit) {
            term = tail;
        } else if (munit) {
            term = "-" + tail;
        } else if (!c.is_real() && !c.real().is_zero()) {
            term = "(" + cs + ")*" + tail;
        } else {
            term = cs + "*" + tail;
        }
        if (!out.empty() && term[0] != '-') out += "+";
        out += term;
    };
    std::map<int, std::pair<GaussianRational, GaussianRational>> merged;
    for (const auto& [k, c] : plain) merged[k].first = c;
    for (const auto& [k, c] : sqrt_pi_2) merged[k].second = c;
    for (const auto& [k, pr] : merged) {
        if (!pr.first.is_zero()) emit(k, pr.first, false);
        if (!pr.second.is_zero()) emit(k, pr.second, true);
    }
    return out.empty() ? "0" : out;
}

SqrtEpsPolynomial gaussian_halfline_moment(int j) {
    if (j < 0) throw validation_error("moment exponent must be >= 0");
    SqrtEpsPolynomial r;
    BigInt dfac = 1; // (j-1)(j-3)...down to 2 or 1
    for (long long k = j - 1; k >= 2; k -= 2) dfac *= k;
    if (j % 2 == 1)
        r.add_plain(j + 1, GaussianRational(Rational(dfac)));
    else
        r.add_pi(j + 1, GaussianRational(Rational(dfac)));
    return r;
}

SqrtEpsPolynomial gaussian_line_moment(int j) {
    if (j % 2 == 1) return SqrtEpsPolynomial{};
    return GaussianRational(2) * gaussian_halfline_moment(j);
}

MultiPoly witten_component_polynomial(const ActionModel& model, const FixedComponent& comp,
                                      const MultiPoly& eta) {
    if (model.rank != 1) throw validation_error("witten integral is implemented for rank-1 models");
    auto terms = localized_terms(model, eta, LinearForm(1), false, ExpConvention::Imag);
    const LocalizationTerm* term = nullptr;
    for (const auto& [c, t] : terms) {
        if (c == &comp || c->id == comp.id) term = &t;
    }
    if (!term) throw validation_error("component not in model");

    // Two working variables: X = 0, y = 1. The numerator picks up D(X) and
    // the truncated e^{i(mu - y)X}; the y-polynomial is the X^{-1} coefficient.
    MultiPoly weighted = model.weyl_denominator() * term->numerator;
    MultiPoly num(2);
    for (const auto& [e, c] : weighted.terms()) num.add_term({e[0], 0}, c);
    int pole = term->pole_order();
    MultiPoly coeff(2); // mu - y
    coeff.add_term({0, 0}, GaussianRational(comp.moment[0]));
    coeff.add_term({0, 1}, GaussianRational(-1));
    num = num * exp_series(coeff, 0, pole, ExpConvention::Imag);

    LocalizationTerm lifted(num, LinearForm(2), ExpConvention::Imag);
    for (const auto& [f, m] : term->denominator)
        lifted.push_denominator(LinearForm(std::vector<Rational>{f[0], Rational(0)}), m);
    return residue_first_var(lifted);
}

WittenResult witten_i0(const ActionModel& model, const MultiPoly& eta) {
    if (model.rank != 1) throw validation_error("witten integral is implemented for rank-1 models");
    SqrtEpsPolynomial total;
    const MultiPoly d_of_y = model.weyl_denominator(); // reused with the variable read as y

    for (const auto& comp : model.components) {
        int sign_mu = comp.moment[0].sign();
        if (sign_mu < 0) continue;
        MultiPoly p = witten_component_polynomial(model, comp, eta);
        MultiPoly q = d_of_y * p; // integrand polynomial in y
        std::vector<int> cones = sign_mu > 0 ? std::vector<int>{+1, -1} : std::vector<int>{-1};
        for (int cone : cones) {
            for (const auto& [e, c] : q.terms()) {
                int j = e[0];
                GaussianRational factor = c;
                if (cone < 0 && j % 2 == 1) factor = -factor;
                total += factor * gaussian_halfline_moment(j);
            }
        }
    }

    WittenResult result;
    result.value = total.shifted(-static_cast<int>(model.s));
    result.prefactor = "A_K = i^l (2 pi)^(-l/2) / (|W| vol T), l = " + std::to_string(model.rank) +
                       ", |W| = " + std::to_string(model.weyl);
    return result;
}

} // namespace quot
