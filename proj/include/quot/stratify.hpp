#pragma once

#include "quot/series.hpp"

namespace quot {

// The two SL(2) example families: P_n (binary forms) and (P^1)^n.
enum class Family { PN, P1N };

Family family_from_name(const std::string& s);
std::string family_name(Family f);

struct StratificationSpec {
    Family family = Family::PN;
    int n = 2;
    int bound = 0; // 0 means the default 2n+4

    int effective_bound() const { return bound > 0 ? bound : 2 * n + 4; }
};

// Equivariant Poincare series of the whole space:
//   P_n:     (1 + t^2 + ... + t^{2n}) (1-t^4)^{-1}
//   (P^1)^n: (1 + t^2)^n (1-t^4)^{-1}
TruncatedSeries equivariant_series_total(const StratificationSpec& spec);

// Series of the semistable locus: the total minus one stratum term
// t^{2(j-1)} (1-t^2)^{-1} for each n/2 < j <= n, weighted by the number of
// stratum components (1 for P_n, binom(n, j) for (P^1)^n).
TruncatedSeries semistable_series(const StratificationSpec& spec);

// Poincare series of the partial desingularization (n even):
// semistable + (t^2 + ... + t^{2(n-3)}) (1-t^4)^{-1}
//            - t^{n-2} (1 + t^2 + ... + t^{n-4}) (1-t^2)^{-1},
// the correction scaled by the blown-up orbit count n!/(2 ((n/2)!)^2) for the
// (P^1)^n family. Empty ranges contribute zero.
TruncatedSeries desing_series(const StratificationSpec& spec);

// Intersection Poincare series of the singular quotient (P_n family, n even
// >= 6): the desingularization series minus the kernel of the surjection onto
// intersection cohomology, whose coefficient at t^{2d} is
// min(floor((d+1)/2), floor((n-2-d)/2), floor((n-2)/4)) for 1 <= d <= n-4.
TruncatedSeries ip_series(const StratificationSpec& spec);

// Orbit count n!/(2 ((n/2)!)^2) of the locus blown up in the (P^1)^n family.
BigInt p1n_orbit_count(int n);

} // namespace quot
