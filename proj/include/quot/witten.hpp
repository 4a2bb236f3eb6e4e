#pragma once

#include <map>

#include "quot/model.hpp"

namespace quot {

// Exact polynomial in sqrt(eps) with two coefficient channels: plain terms
// and terms carrying one symbolic factor sqrt(pi/2) (the even Gaussian
// moments). Exponents count powers of sqrt(eps) and may be shifted negative
// by the eps^{-s/2} prefactor for over-degree inputs.
struct SqrtEpsPolynomial {
    std::map<int, GaussianRational> plain;     // exponent of sqrt(eps) -> coefficient
    std::map<int, GaussianRational> sqrt_pi_2; // coefficient of sqrt(pi/2) * sqrt(eps)^k

    bool is_zero() const { return plain.empty() && sqrt_pi_2.empty(); }
    void add_plain(int k, const GaussianRational& c);
    void add_pi(int k, const GaussianRational& c);
    SqrtEpsPolynomial& operator+=(const SqrtEpsPolynomial& o);
    friend SqrtEpsPolynomial operator+(SqrtEpsPolynomial a, const SqrtEpsPolynomial& b) { return a += b; }
    friend SqrtEpsPolynomial operator*(const GaussianRational& c, const SqrtEpsPolynomial& p);
    // Only defined when at most one factor uses the sqrt(pi/2) channel.
    friend SqrtEpsPolynomial operator*(const SqrtEpsPolynomial& a, const SqrtEpsPolynomial& b);
    friend bool operator==(const SqrtEpsPolynomial& a, const SqrtEpsPolynomial& b) {
        return a.plain == b.plain && a.sqrt_pi_2 == b.sqrt_pi_2;
    }

    SqrtEpsPolynomial shifted(int k) const; // multiply by sqrt(eps)^k
    int min_exponent() const;               // smallest exponent present; 0 if zero
    GaussianRational coeff_plain(int k) const;
    GaussianRational coeff_pi(int k) const;
    std::string str() const;
};

// int_0^infty e^{-y^2/(2 eps)} y^j dy:
//   j odd:  eps^{(j+1)/2} (j-1)(j-3)...4*2
//   j even: sqrt(pi/2) eps^{(j+1)/2} (j-1)(j-3)...3*1
SqrtEpsPolynomial gaussian_halfline_moment(int j);

// Full-line moment: 0 for odd j, twice the half-line moment for even j.
SqrtEpsPolynomial gaussian_line_moment(int j);

struct WittenResult {
    SqrtEpsPolynomial value;      // includes the eps^{-s/2} shift
    std::string prefactor;        // the symbolic overall constant, reported not evaluated
};

// Localized Witten integral of eta e^{i omega-bar} for a rank-1 model, up to
// the symbolic constant A_K = i^l (2 pi)^{-l/2} / (|W| vol T). Components
// with positive moment integrate over both half-lines, zero-moment
// components over the negative half-line only, negative ones not at all.
WittenResult witten_i0(const ActionModel& model, const MultiPoly& eta);

// Polynomial p_F(y) = res_{X=0}( D(X) i_F^*(eta)(X) e^{i(mu(F) - y)X} / e_F(X) ),
// the per-component residue with the Fourier variable left symbolic.
// Exposed for tests and the structural checks.
MultiPoly witten_component_polynomial(const ActionModel& model, const FixedComponent& comp,
                                      const MultiPoly& eta);

} // namespace quot
