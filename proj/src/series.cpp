#include "quot/series.hpp"

namespace quot {

TruncatedSeries TruncatedSeries::geometric(int k, int bound, std::string var) {
    if (k < 1) throw validation_error("geometric series needs k >= 1");
    TruncatedSeries s(std::move(var), bound);
    for (int e = 0; e <= bound; e += k) s.set(e, GaussianRational(1));
    return s;
}

TruncatedSeries TruncatedSeries::operator-() const {
    TruncatedSeries r(var_, bound());
    for (int k = 0; k <= bound(); ++k) r.coeffs_[k] = -coeffs_[k];
    return r;
}

static void check_compatible(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (a.bound() != b.bound() || a.var() != b.var())
        throw validation_error("series bound/variable mismatch");
}

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
    check_compatible(a, b);
    TruncatedSeries r(a.var(), a.bound());
    for (int k = 0; k <= a.bound(); ++k) r.set(k, a.coeff(k) + b.coeff(k));
    return r;
}

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) { return a + (-b); }

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    check_compatible(a, b);
    TruncatedSeries r(a.var(), a.bound());
    for (int i = 0; i <= a.bound(); ++i) {
        if (a.coeff(i).is_zero()) continue;
        for (int j = 0; i + j <= a.bound(); ++j) {
            if (b.coeff(j).is_zero()) continue;
            r.set(i + j, r.coeff(i + j) + a.coeff(i) * b.coeff(j));
        }
    }
    return r;
}

TruncatedSeries operator*(const GaussianRational& c, const TruncatedSeries& s) {
    TruncatedSeries r(s.var(), s.bound());
    for (int k = 0; k <= s.bound(); ++k) r.set(k, c * s.coeff(k));
    return r;
}

TruncatedSeries TruncatedSeries::shifted(int k, const GaussianRational& c) const {
    TruncatedSeries r(var_, bound());
    for (int e = 0; e + k <= bound(); ++e) r.set(e + k, c * coeff(e));
    return r;
}

int TruncatedSeries::top() const {
    for (int k = bound(); k >= 0; --k) {
        if (!coeffs_[k].is_zero()) return k;
    }
    return -1;
}

bool TruncatedSeries::is_polynomial_up_to_bound(int degree) const { return top() <= degree; }

bool TruncatedSeries::palindromic(int top_degree, int step) const {
    for (int k = 0; k <= top_degree; k += step) {
        if (coeff(k) != coeff(top_degree - k)) return false;
    }
    return true;
}

std::string TruncatedSeries::str() const {
    std::string out;
    for (int k = 0; k <= bound(); ++k) {
        if (coeffs_[k].is_zero()) continue;
        std::string term = coeffs_[k].str();
        if (k > 0) {
            if (term == "1")
                term = var_;
            else if (term == "-1")
                term = "-" + var_;
            else
                term += "*" + var_;
            if (k > 1) term += "^" + std::to_string(k);
        }
        if (!out.empty() && term[0] != '-') out += "+";
        out += term;
    }
    return out.empty() ? "0" : out;
}

} // namespace quot
