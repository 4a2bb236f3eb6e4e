#include "quot/stratify.hpp"

#include "quot/errors.hpp"

namespace quot {

Family family_from_name(const std::string& s) {
    if (s == "pn") return Family::PN;
    if (s == "p1n") return Family::P1N;
    throw validation_error("family: expected pn or p1n, got '" + s + "'");
}

std::string family_name(Family f) { return f == Family::PN ? "pn" : "p1n"; }

static void check_spec(const StratificationSpec& spec) {
    if (spec.n < 0) throw validation_error("n must be >= 0");
    if (spec.effective_bound() % 2 != 0) throw validation_error("series bound must be even");
}

TruncatedSeries equivariant_series_total(const StratificationSpec& spec) {
    check_spec(spec);
    const int b = spec.effective_bound();
    TruncatedSeries numerator = TruncatedSeries::zero(b);
    if (spec.family == Family::PN) {
        for (int k = 0; k <= spec.n && 2 * k <= b; ++k) numerator.set(2 * k, GaussianRational(1));
    } else {
        numerator = TruncatedSeries::one(b);
        TruncatedSeries onept = TruncatedSeries::one(b);
        if (b >= 2) onept.set(2, GaussianRational(1));
        for (int k = 0; k < spec.n; ++k) numerator = numerator * onept;
    }
    return numerator * TruncatedSeries::geometric(4, b);
}

TruncatedSeries semistable_series(const StratificationSpec& spec) {
    check_spec(spec);
    const int b = spec.effective_bound();
    TruncatedSeries out = equivariant_series_total(spec);
    TruncatedSeries geom2 = TruncatedSeries::geometric(2, b);
    for (int j = spec.n / 2 + 1; j <= spec.n; ++j) {
        GaussianRational count(1);
        if (spec.family == Family::P1N) count = GaussianRational(Rational(binomial(spec.n, j)));
        out = out - geom2.shifted(2 * (j - 1), count);
    }
    return out;
}

BigInt p1n_orbit_count(int n) {
    if (n % 2 != 0) throw validation_error("orbit count needs n even");
    BigInt half = factorial(n / 2);
    return factorial(n) / (2 * half * half);
}

TruncatedSeries desing_series(const StratificationSpec& spec) {
    check_spec(spec);
    if (spec.n % 2 != 0) throw validation_error("desingularization series needs n even");
    const int b = spec.effective_bound();
    TruncatedSeries out = semistable_series(spec);

    TruncatedSeries added = TruncatedSeries::zero(b);
    for (int k = 1; k <= spec.n - 3 && 2 * k <= b; ++k) added.set(2 * k, GaussianRational(1));
    added = added * TruncatedSeries::geometric(4, b);

    TruncatedSeries removed = TruncatedSeries::zero(b);
    for (int k = 0; 2 * k <= spec.n - 4 && spec.n - 2 + 2 * k <= b; ++k)
        removed.set(spec.n - 2 + 2 * k, GaussianRational(1));
    removed = removed * TruncatedSeries::geometric(2, b);

    TruncatedSeries correction = added - removed;
    if (spec.family == Family::P1N)
        correction = GaussianRational(Rational(p1n_orbit_count(spec.n))) * correction;
    return out + correction;
}

TruncatedSeries ip_series(const StratificationSpec& spec) {
    check_spec(spec);
    if (spec.family != Family::PN)
        throw validation_error("the intersection Poincare series is available for the pn family only");
    if (spec.n % 2 != 0 || spec.n < 6) throw validation_error("ip series needs n even and >= 6");
    const int b = spec.effective_bound();
    TruncatedSeries out = desing_series(spec);
    for (int d = 1; d <= spec.n - 4 && 2 * d <= b; ++d) {
        long long c = std::min<long long>({(d + 1) / 2, (spec.n - 2 - d) / 2, (spec.n - 2) / 4});
        out.set(2 * d, out.coeff(2 * d) - GaussianRational(Rational(c)));
    }
    return out;
}

} // namespace quot
