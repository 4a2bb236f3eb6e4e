#pragma once

#include <map>
#include <string>
#include <vector>

#include "quot/rational.hpp"

namespace quot {

using Exponents = std::vector<int>; // dense, one entry per variable

// Element of t*: a linear form with rational coefficients in the variables
// X_1..X_l. Linear forms carry no constant part.
class LinearForm {
public:
    LinearForm() = default;
    explicit LinearForm(int nvars) : coeffs_(nvars, Rational(0)) {}
    explicit LinearForm(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {}

    int nvars() const { return static_cast<int>(coeffs_.size()); }
    const Rational& operator[](int i) const { return coeffs_[i]; }
    Rational& operator[](int i) { return coeffs_[i]; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    bool is_zero() const;
    Rational eval(const std::vector<Rational>& point) const;

    LinearForm operator-() const;
    friend LinearForm operator+(const LinearForm& a, const LinearForm& b);
    friend LinearForm operator-(const LinearForm& a, const LinearForm& b);
    friend LinearForm operator*(const Rational& c, const LinearForm& f);

    friend bool operator==(const LinearForm& a, const LinearForm& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const LinearForm& a, const LinearForm& b) { return !(a == b); }
    friend bool operator<(const LinearForm& a, const LinearForm& b); // lexicographic, for map keys

    std::string str(const std::vector<std::string>& names) const;

private:
    std::vector<Rational> coeffs_;
};

// Sparse multivariate polynomial over Q(i) with dense exponent vectors.
// No zero coefficients are stored; the term map is ordered, so iteration
// (and hence printing and serialization) is deterministic.
class MultiPoly {
public:
    MultiPoly() : nvars_(0) {}
    explicit MultiPoly(int nvars) : nvars_(nvars) {}

    static MultiPoly constant(int nvars, const GaussianRational& c);
    static MultiPoly variable(int nvars, int index, int power = 1);
    static MultiPoly monomial(int nvars, Exponents exps, const GaussianRational& c);
    static MultiPoly from_linear_form(const LinearForm& f);

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Exponents, GaussianRational>& terms() const { return terms_; }

    // Total degree; -1 for the zero polynomial.
    int total_degree() const;
    int degree_in(int var) const;
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Exponents(nvars_, 0)); }
    GaussianRational constant_term() const;

    void add_term(const Exponents& exps, const GaussianRational& c);

    MultiPoly operator-() const;
    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator*(const GaussianRational& c, const MultiPoly& p);
    friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
        return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }
    // arbitrary total order for containers
    friend bool operator<(const MultiPoly& a, const MultiPoly& b) {
        if (a.nvars_ != b.nvars_) return a.nvars_ < b.nvars_;
        return a.terms_ < b.terms_;
    }

    MultiPoly pow(int e) const;
    GaussianRational eval(const std::vector<GaussianRational>& point) const;

    // Simultaneous substitution X_i -> images[i]; all images share a variable count.
    MultiPoly substitute(const std::vector<MultiPoly>& images) const;

    // Homogeneous part of total degree d.
    MultiPoly homogeneous_part(int d) const;

    // Splits into coefficients of powers of one variable: result[k] is the
    // coefficient of var^k, a polynomial in the remaining nvars-1 variables
    // (variable indices above `var` shift down by one).
    std::vector<MultiPoly> collect(int var) const;

    std::string str(const std::vector<std::string>& names) const;

private:
    int nvars_;
    std::map<Exponents, GaussianRational> terms_;
};

MultiPoly poly_add(const MultiPoly& a, const MultiPoly& b);
MultiPoly poly_mul(const MultiPoly& a, const MultiPoly& b);

} // namespace quot
