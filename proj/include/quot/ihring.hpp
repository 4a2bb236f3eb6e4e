#pragma once

#include <map>

#include "quot/poly.hpp"

namespace quot {

// A circle action on P^n is weakly balanced iff the number of positive
// weights (with multiplicity) equals the number of negative ones.
bool weakly_balanced_check(const std::vector<long long>& weights);

// Presentation of the equivariant cohomology of the semistable locus of a
// circle action on projective space: C[xi, rho] modulo one unstable-stratum
// class per distinct nonzero moment value. Variables: index 0 = xi (degree 2),
// index 1 = rho (degree 2); monomial order lex with xi > rho.
struct QuotientRingPresentation {
    std::vector<long long> weights;
    std::vector<MultiPoly> ideal;    // generating classes of the unstable strata
    std::vector<MultiPoly> groebner; // reduced basis, monic, sorted by leading monomial (descending)

    MultiPoly normal_form(const MultiPoly& f) const;
    // Monomials of cohomological degree `coh_degree` not divisible by any
    // leading term of the basis, as exponent pairs (i, j) with xi^i rho^j.
    std::vector<Exponents> standard_monomials(int coh_degree) const;
    // Buchberger postconditions: every S-polynomial and every ideal generator
    // reduces to zero, and the normal form is idempotent. Throws on failure.
    void verify() const;
};

QuotientRingPresentation semistable_ring(const std::vector<long long>& weights);

// The part of the semistable presentation surviving the truncation along the
// strata: a standard monomial xi^i rho^j is retained iff i >= q or 2j < n_R,
// where q is the zero-weight multiplicity and n_R = (#nonzero weights) - 1.
struct VmBasis {
    int zero_multiplicity = 0; // q
    int n_R = 0;
    int top_degree = 0;        // 2 * dim_C of the quotient
    std::map<int, std::vector<Exponents>> monomials; // cohomological degree -> retained monomials
    Exponents tau;             // the unique retained monomial in top degree

    std::vector<int> graded_dimensions() const; // degrees 0, 2, ..., top_degree
};

VmBasis vm_basis(const std::vector<long long>& weights);

// Pairing scalar of Poincare-complementary classes: the normal form of
// alpha*beta must be a scalar multiple of tau; that scalar is returned.
GaussianRational ih_pairing_scalar(const std::vector<long long>& weights, const MultiPoly& alpha,
                                   const MultiPoly& beta);

// Gram matrix of the pairing between the retained monomials of degree d
// (rows) and of complementary degree (columns), both in stored order.
std::vector<std::vector<GaussianRational>> ih_pairing_matrix(const std::vector<long long>& weights, int d);

} // namespace quot
