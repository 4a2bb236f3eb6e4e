#include "quot/rational.hpp"

namespace quot {

Rational Rational::parse(const std::string& s) {
    auto bad = [&]() { return validation_error("cannot parse rational '" + s + "'"); };
    if (s.empty()) throw bad();
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(BigInt(s));
        BigInt num(s.substr(0, slash));
        BigInt den(s.substr(slash + 1));
        if (den == 0) throw bad();
        return Rational(num, den);
    } catch (const std::runtime_error&) {
        throw bad();
    }
}

Rational Rational::pow(long long e) const {
    if (e < 0) return inverse().pow(-e);
    Rational r(1), b = *this;
    while (e > 0) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

std::string Rational::str() const {
    std::string s = numerator().str();
    if (denominator() != 1) s += "/" + denominator().str();
    return s;
}

GaussianRational GaussianRational::pow(long long e) const {
    if (e < 0) {
        GaussianRational inv = GaussianRational(1) / *this;
        return inv.pow(-e);
    }
    GaussianRational r(1), b = *this;
    while (e > 0) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

std::string GaussianRational::str() const {
    if (im_.is_zero()) return re_.str();
    std::string im_part;
    if (im_ == Rational(1))
        im_part = "i";
    else if (im_ == Rational(-1))
        im_part = "-i";
    else
        im_part = im_.str() + "*i";
    if (re_.is_zero()) return im_part;
    if (im_part[0] != '-') return re_.str() + "+" + im_part;
    return re_.str() + im_part;
}

BigInt factorial(long long n) {
    BigInt r = 1;
    for (long long k = 2; k <= n; ++k) r *= k;
    return r;
}

BigInt binomial(long long n, long long k) {
    if (k < 0 || k > n) return 0;
    BigInt r = 1;
    for (long long j = 1; j <= k; ++j) {
        r *= (n - k + j);
        r /= j;
    }
    return r;
}

} // namespace quot
