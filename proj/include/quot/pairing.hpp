#pragma once

#include <map>
#include <optional>

#include "quot/model.hpp"
#include "quot/residue.hpp"

namespace quot {

// Overall scalar relating a quotient pairing to its maximal-torus
// abelianization: n0 (-1)^{n+} / (n0^T |W|).
Rational martin_factor(const ActionModel& model);

// Pairing kappa(eta) e^{omega} [M//G] when 0 is a regular value:
//   U(1):  -n0 * res_{X=0} sum_{mu(F) > 0} h_F(X)
//   SU(2): (n0/2) * res_{X=0} ((2X)^2 sum_{mu(F) > 0} h_F(X))
//   torus: residue_scale * jk_residue(D^2 * terms) over a caller chamber.
// Strictly semistable components are rejected: route those models through
// pair_ih or pair_partial_desing.
GaussianRational pair_regular(const ActionModel& model, const MultiPoly& eta,
                              const std::optional<Chamber>& chamber = std::nullopt,
                              const std::optional<Perturbation>& perturbation = std::nullopt);

// Abelianized pairing kappa^T(eta D^2) [M//_xi T] at a regular shift xi:
// the U(1) formula applied to eta * D^2 with the exponent shifted by -xi and
// n0^T in place of n0.
GaussianRational pair_abelianized(const ActionModel& model, const MultiPoly& eta, const Rational& shift);

// Generic-rank form: residue_scale * jk_residue of the D^2-weighted terms
// with exponents mu(F) - xi, over a caller-supplied chamber.
GaussianRational pair_abelianized(const ActionModel& model, const MultiPoly& eta, const LinearForm& shift,
                                  const Chamber& chamber,
                                  const std::optional<Perturbation>& perturbation = std::nullopt);

// Intersection-cohomology pairing <kappa(alpha), kappa(beta)> on a singular
// rank-1 quotient: martin_factor * pair_abelianized(alpha*beta, eps) with eps
// picked automatically inside (0, smallest positive moment); the result is
// recomputed at a second eps as a self-check.
GaussianRational pair_ih(const ActionModel& model, const MultiPoly& alpha, const MultiPoly& beta);

struct WallCrossingReport {
    Rational wall;
    bool increasing = true;
    GaussianRational jump; // pairing just above the wall minus just below
    std::vector<std::string> contributing;
};

// Change of pair_abelianized across the wall at moment value w (rank 1),
// computed on the wall fixed locus: n0^T * res_{X=0}(i_F^*(eta) D^2 / e_F)
// summed over components with moment w. A w that is not a component moment
// reports a zero jump.
WallCrossingReport wall_crossing_jump(const ActionModel& model, const Rational& w, const MultiPoly& eta,
                                      bool increasing = true);

// Exceptional fixed-point data of the single blow-up resolving a strictly
// semistable component: the weights of the circle action on the fiber of the
// projectivized normal bundle (for su2_pn with n even: -n..n omitting 0,-2,2).
struct BlowupSpec {
    std::map<std::string, std::vector<Rational>> fiber_weights; // component id -> weights
};

// Derives the fiber weights from the model itself: the normal weights of each
// flagged component minus one pair +-gamma per positive root (the directions
// along the group orbit).
BlowupSpec default_blowup_spec(const ActionModel& model);

struct PartialDesingResult {
    GaussianRational value;      // kappa(eta) [resolved quotient]
    GaussianRational correction; // summed exceptional-divisor wall terms (before martin_factor)
};

// Pairing on the single-stage partial desingularization:
// martin_factor * (pair_abelianized at a small positive shift + exceptional
// wall-crossing corrections from the blow-up data).
PartialDesingResult pair_partial_desing(const ActionModel& model, const MultiPoly& eta,
                                        const BlowupSpec& blowup);

// Smallest strictly positive component moment (rank 1); throws when none.
Rational smallest_positive_moment(const ActionModel& model);

} // namespace quot
