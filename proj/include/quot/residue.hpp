#pragma once

#include <optional>
#include <vector>

#include "quot/locterm.hpp"

namespace quot {

// Truncated exponential series exp(c * X_xvar) (or exp(i c X_xvar)) where the
// coefficient c is a polynomial in the variables other than xvar.
MultiPoly exp_series(const MultiPoly& coeff, int xvar, int order, ExpConvention conv);

// Coefficient of 1/X in the Laurent expansion of a rank-1 germ
// q(X) e^{lambda X} / X^N. Denominator forms must be scalar multiples of X.
GaussianRational residue_1d(const LocalizationTerm& term);

// Same, but 0 unless mu >= 0 (the truncated residue res^+).
GaussianRational residue_1d_plus(const LocalizationTerm& term, const Rational& mu);

// Rank-1 residue where the numerator may involve parameter variables: returns
// the coefficient of X_0^{-1} as a polynomial in the remaining variables.
MultiPoly residue_first_var(const LocalizationTerm& term);

// Connected component Lambda of {xi : beta(xi) != 0 for all denominator
// forms}, represented by one rational vector in its interior.
struct Chamber {
    std::vector<Rational> xi;
    int rank() const { return static_cast<int>(xi.size()); }
};

// Perturbation covector rho with -rho in the dual cone of Lambda, used to
// resolve exponents lying on cone boundaries. rho = 0 means "none supplied".
struct Perturbation {
    std::vector<Rational> rho;
    bool is_zero() const;
    static Perturbation none(int rank) { return Perturbation{std::vector<Rational>(static_cast<size_t>(rank), Rational(0))}; }
};

// Multivariable Jeffrey-Kirwan residue res^{rho,Lambda}, linear in the terms.
// Denominator forms are sign-adjusted internally so that beta(xi) > 0 for the
// chamber vector (each flip multiplies the term by -1 per multiplicity);
// terms whose denominators do not span t* contribute zero; basis terms are
// evaluated by exponential expansion with the cone selection applied to
// lambda + s*rho as s -> 0+.
GaussianRational jk_residue(const std::vector<LocalizationTerm>& terms, const Chamber& chamber,
                            const Perturbation& perturbation);

// Finite graded-commutative coefficient ring with an integration functional,
// described by a basis with degrees, a multiplication table and the values of
// the functional on basis elements. Elements are coefficient vectors.
struct FiniteGradedRing {
    std::vector<int> degrees;                               // degree of each basis element
    std::vector<std::vector<std::vector<GaussianRational>>> mult; // mult[i][j] = basis_i * basis_j
    std::vector<GaussianRational> integral;                 // functional on basis elements

    int dim() const { return static_cast<int>(degrees.size()); }
    std::vector<GaussianRational> zero() const { return std::vector<GaussianRational>(degrees.size(), GaussianRational(0)); }
    std::vector<GaussianRational> one() const; // basis element 0 is required to be the unit
    std::vector<GaussianRational> mul(const std::vector<GaussianRational>& a,
                                      const std::vector<GaussianRational>& b) const;
    std::vector<GaussianRational> add(std::vector<GaussianRational> a,
                                      const std::vector<GaussianRational>& b) const;
    std::vector<GaussianRational> scale(const GaussianRational& c, std::vector<GaussianRational> a) const;
    GaussianRational integrate(const std::vector<GaussianRational>& a) const;
    int top_degree() const;

    static FiniteGradedRing point();                 // Q, integral(1) = 1
    static FiniteGradedRing truncated_power(int d);  // Q[h]/h^{d+1}, integral(h^d) = 1
};

// Integration over the projectivization of a rank-r bundle with total Chern
// roots packaged as p(y) = y^r + c_1 y^{r-1} + ... + c_r: the value is the
// residue at y = 0 of class/p(y) paired with the base integration functional.
// `cls[k]` is the coefficient of y^k of the class.
GaussianRational pushforward_projective_bundle(const std::vector<std::vector<GaussianRational>>& cls,
                                               const std::vector<std::vector<GaussianRational>>& chern,
                                               const FiniteGradedRing& ring);

// --- small exact linear algebra helpers (rank <= 4 in practice) ---
Rational det(const std::vector<std::vector<Rational>>& m);
std::optional<std::vector<std::vector<Rational>>> invert(std::vector<std::vector<Rational>> m);

} // namespace quot
