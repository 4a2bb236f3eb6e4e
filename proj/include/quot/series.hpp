#pragma once

#include <string>
#include <vector>

#include "quot/rational.hpp"

namespace quot {

// Power series in one formal variable, truncated at a caller-supplied bound.
// Arithmetic is exact below the bound and silently drops anything above it.
class TruncatedSeries {
public:
    TruncatedSeries(std::string var, int bound)
        : var_(std::move(var)), coeffs_(static_cast<size_t>(bound) + 1, GaussianRational(0)) {
        if (bound < 0) throw validation_error("series bound must be >= 0");
    }

    static TruncatedSeries zero(int bound, std::string var = "t") { return TruncatedSeries(std::move(var), bound); }
    static TruncatedSeries one(int bound, std::string var = "t") {
        TruncatedSeries s(std::move(var), bound);
        s.set(0, GaussianRational(1));
        return s;
    }
    // 1 + t^k + t^{2k} + ... up to the bound; exactly (1 - t^k)^{-1} truncated.
    static TruncatedSeries geometric(int k, int bound, std::string var = "t");

    int bound() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::string& var() const { return var_; }
    const GaussianRational& coeff(int k) const { return coeffs_.at(static_cast<size_t>(k)); }
    void set(int k, const GaussianRational& c) { coeffs_.at(static_cast<size_t>(k)) = c; }

    TruncatedSeries operator-() const;
    friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
    friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b);
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
    friend TruncatedSeries operator*(const GaussianRational& c, const TruncatedSeries& s);
    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
        return a.coeffs_ == b.coeffs_;
    }

    // Multiply by the monomial c * var^k (shifting coefficients up).
    TruncatedSeries shifted(int k, const GaussianRational& c = GaussianRational(1)) const;

    // Largest exponent with a nonzero coefficient; -1 if zero.
    int top() const;
    bool is_polynomial_up_to_bound(int degree) const; // nothing nonzero above `degree`
    bool palindromic(int top_degree, int step = 2) const;

    std::string str() const;

private:
    std::string var_;
    std::vector<GaussianRational> coeffs_;
};

} // namespace quot
