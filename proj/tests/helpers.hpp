#pragma once

#include <random>

#include "quot/locterm.hpp"

namespace quot::testing {

// Deterministic generator for randomized property tests.
class Rng {
public:
    explicit Rng(unsigned seed) : gen_(seed) {}

    long long integer(long long lo, long long hi) {
        std::uniform_int_distribution<long long> d(lo, hi);
        return d(gen_);
    }

    Rational rational(long long span = 6) {
        long long num = integer(-span, span);
        long long den = integer(1, span);
        return Rational(num, den);
    }

    Rational nonzero_rational(long long span = 6) {
        Rational r = rational(span);
        while (r.is_zero()) r = rational(span);
        return r;
    }

    GaussianRational gaussian(long long span = 6) { return GaussianRational(rational(span), rational(span)); }

    MultiPoly poly(int nvars, int max_degree, int terms, long long span = 6) {
        MultiPoly p(nvars);
        for (int t = 0; t < terms; ++t) {
            Exponents e(nvars);
            for (int i = 0; i < nvars; ++i) e[i] = static_cast<int>(integer(0, max_degree));
            p.add_term(e, gaussian(span));
        }
        return p;
    }

    std::vector<GaussianRational> point(int nvars, long long span = 6) {
        std::vector<GaussianRational> pt;
        for (int i = 0; i < nvars; ++i) pt.push_back(GaussianRational(rational(span), rational(span)));
        return pt;
    }

private:
    std::mt19937 gen_;
};

inline LinearForm form1(const Rational& c) { return LinearForm(std::vector<Rational>{c}); }
inline LinearForm form2(const Rational& a, const Rational& b) {
    return LinearForm(std::vector<Rational>{a, b});
}

} // namespace quot::testing
