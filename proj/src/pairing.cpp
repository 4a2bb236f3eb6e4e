#include "quot/pairing.hpp"

#include <algorithm>

namespace quot {

namespace {

GaussianRational require_real(GaussianRational v, const char* what) {
    if (!v.is_real()) throw math_contract_error(std::string(what) + ": nonzero imaginary part in a real pipeline");
    return v;
}

// res_{X=0} of sum of (extra * numerator) e^{...} / e_F over selected F.
GaussianRational residue_sum_rank1(const ActionModel& model, const MultiPoly& eta, const Rational& shift,
                                   bool include_exponential, const MultiPoly& extra,
                                   const Rational& moment_above) {
    LinearForm sh(std::vector<Rational>{shift});
    auto terms = localized_terms(model, eta, sh, include_exponential, ExpConvention::Real);
    GaussianRational total(0);
    for (auto& [comp, term] : terms) {
        if (!(comp->moment[0] > moment_above)) continue;
        term.numerator = term.numerator * extra;
        total += residue_1d(term);
    }
    return total;
}

} // namespace

Rational martin_factor(const ActionModel& model) {
    Rational r(model.n0, model.n0T * model.weyl);
    return model.nplus % 2 == 0 ? r : -r;
}

Rational smallest_positive_moment(const ActionModel& model) {
    if (model.rank != 1) throw validation_error("smallest_positive_moment is a rank-1 notion");
    std::optional<Rational> best;
    for (const auto& c : model.components) {
        if (c.moment[0] > Rational(0) && (!best || c.moment[0] < *best)) best = c.moment[0];
    }
    if (!best) throw validation_error("no component with positive moment (empty chamber)");
    return *best;
}

GaussianRational pair_regular(const ActionModel& model, const MultiPoly& eta,
                              const std::optional<Chamber>& chamber,
                              const std::optional<Perturbation>& perturbation) {
    if (model.has_strictly_semistable())
        throw validation_error(
            "model has a strictly semistable component (0 is not a regular value); "
            "use pair_ih or pair_partial_desing");
    switch (model.group) {
        case GroupTag::U1: {
            GaussianRational r = residue_sum_rank1(model, eta, Rational(0), true,
                                                   MultiPoly::constant(1, GaussianRational(1)), Rational(0));
            return require_real(GaussianRational(Rational(-model.n0)) * r, "pair_regular");
        }
        case GroupTag::SU2: {
            MultiPoly d2 = model.weyl_denominator();
            d2 = d2 * d2;
            GaussianRational r = residue_sum_rank1(model, eta, Rational(0), true, d2, Rational(0));
            return require_real(GaussianRational(Rational(model.n0, 2)) * r, "pair_regular");
        }
        case GroupTag::Torus: {
            if (!chamber) throw validation_error("torus models need an explicit chamber");
            MultiPoly d2 = model.weyl_denominator();
            d2 = d2 * d2;
            auto terms = localized_terms(model, eta, LinearForm(model.rank), true, ExpConvention::Real);
            std::vector<LocalizationTerm> flat;
            for (auto& [comp, t] : terms) {
                t.numerator = t.numerator * d2;
                flat.push_back(std::move(t));
            }
            Perturbation pert = perturbation ? *perturbation : Perturbation::none(model.rank);
            GaussianRational r = jk_residue(flat, *chamber, pert);
            return require_real(GaussianRational(*model.residue_scale) * r, "pair_regular");
        }
    }
    throw validation_error("unknown group");
}

GaussianRational pair_abelianized(const ActionModel& model, const MultiPoly& eta, const Rational& shift) {
    if (model.rank != 1) throw validation_error("pair_abelianized currently expects a rank-1 model");
    for (const auto& c : model.components) {
        if (c.moment[0] == shift)
            throw validation_error("shift " + shift.str() + " is a critical value (moment of component '" +
                                   c.id + "')");
    }
    MultiPoly d2 = model.weyl_denominator();
    d2 = d2 * d2;
    GaussianRational r = residue_sum_rank1(model, eta, shift, true, d2, shift);
    return require_real(GaussianRational(Rational(-model.n0T)) * r, "pair_abelianized");
}

GaussianRational pair_abelianized(const ActionModel& model, const MultiPoly& eta, const LinearForm& shift,
                                  const Chamber& chamber, const std::optional<Perturbation>& perturbation) {
    if (shift.nvars() != model.rank) throw validation_error("shift arity mismatch");
    if (model.rank == 1 && model.group != GroupTag::Torus) return pair_abelianized(model, eta, shift[0]);
    if (!model.residue_scale)
        throw validation_error("generic-rank abelianized pairing needs the model's residue_scale");
    for (const auto& c : model.components) {
        if (LinearForm(c.moment) == shift)
            throw validation_error("shift coincides with the moment of component '" + c.id + "'");
    }
    MultiPoly d2 = model.weyl_denominator();
    d2 = d2 * d2;
    auto terms = localized_terms(model, eta, shift, true, ExpConvention::Real);
    std::vector<LocalizationTerm> flat;
    for (auto& [comp, t] : terms) {
        t.numerator = t.numerator * d2;
        flat.push_back(std::move(t));
    }
    Perturbation pert = perturbation ? *perturbation : Perturbation::none(model.rank);
    GaussianRational r = jk_residue(flat, chamber, pert);
    return require_real(GaussianRational(*model.residue_scale) * r, "pair_abelianized");
}

GaussianRational pair_ih(const ActionModel& model, const MultiPoly& alpha, const MultiPoly& beta) {
    if (model.rank != 1) throw validation_error("pair_ih is implemented for rank-1 models");
    if (alpha.is_zero() || beta.is_zero()) return GaussianRational(0);
    int da = model.degree_of(alpha), db = model.degree_of(beta);
    if (da + db != model.quotient_real_dim())
        throw validation_error("degree mismatch: " + std::to_string(da) + " + " + std::to_string(db) +
                               " != quotient dimension " + std::to_string(model.quotient_real_dim()));
    MultiPoly product = alpha * beta;
    Rational mplus = smallest_positive_moment(model);
    GaussianRational mf(martin_factor(model));
    GaussianRational v1 = mf * pair_abelianized(model, product, mplus / Rational(2));
    GaussianRational v2 = mf * pair_abelianized(model, product, mplus / Rational(3));
    if (v1 != v2)
        throw math_contract_error("pair_ih: value depends on the shift inside (0, " + mplus.str() + ")");
    return v1;
}

WallCrossingReport wall_crossing_jump(const ActionModel& model, const Rational& w, const MultiPoly& eta,
                                      bool increasing) {
    if (model.rank != 1) throw validation_error("wall_crossing_jump is a rank-1 operation");
    WallCrossingReport report;
    report.wall = w;
    report.increasing = increasing;
    MultiPoly d2 = model.weyl_denominator();
    d2 = d2 * d2;
    auto terms = localized_terms(model, eta, LinearForm(1), false, ExpConvention::Real);
    GaussianRational jump(0);
    for (auto& [comp, term] : terms) {
        if (comp->moment[0] != w) continue;
        report.contributing.push_back(comp->id);
        term.numerator = term.numerator * d2;
        jump += residue_1d(term);
    }
    jump *= GaussianRational(Rational(model.n0T));
    if (!increasing) jump = -jump;
    report.jump = require_real(jump, "wall_crossing_jump");
    return report;
}

BlowupSpec default_blowup_spec(const ActionModel& model) {
    if (model.rank != 1) throw validation_error("blow-up data is derived for rank-1 models only");
    BlowupSpec spec;
    for (const auto& c : model.components) {
        if (!c.strictly_semistable) continue;
        std::map<Rational, int> weights;
        for (const auto& [f, m] : c.normal_weights) weights[f[0]] += m;
        // Remove one +-gamma pair per positive root: those normal directions
        // point along the group orbit, not into the projectivized fiber.
        for (const auto& root : model.positive_roots) {
            for (const Rational& val : {root[0], -root[0]}) {
                auto it = weights.find(val);
                if (it == weights.end() || it->second == 0)
                    throw validation_error("component '" + c.id +
                                           "': normal weights do not contain the root direction " + val.str());
                if (--it->second == 0) weights.erase(it);
            }
        }
        std::vector<Rational> fiber;
        for (const auto& [val, mult] : weights) {
            for (int k = 0; k < mult; ++k) fiber.push_back(val);
        }
        spec.fiber_weights[c.id] = std::move(fiber);
    }
    return spec;
}

PartialDesingResult pair_partial_desing(const ActionModel& model, const MultiPoly& eta,
                                        const BlowupSpec& blowup) {
    if (model.rank != 1) throw validation_error("pair_partial_desing is a rank-1 operation");
    for (const auto& c : model.components) {
        if (c.strictly_semistable && !blowup.fiber_weights.count(c.id))
            throw validation_error("missing blow-up data for strictly semistable component '" + c.id + "'");
    }
    Rational mplus = smallest_positive_moment(model);
    GaussianRational base = pair_abelianized(model, eta, mplus / Rational(2));

    MultiPoly d2 = model.weyl_denominator();
    d2 = d2 * d2;
    GaussianRational correction(0);
    for (const auto& c : model.components) {
        if (!c.strictly_semistable) continue;
        const auto& fiber = blowup.fiber_weights.at(c.id);
        std::vector<MultiPoly> images;
        for (const auto& g : model.generators) images.push_back(c.restriction.at(g));
        MultiPoly restricted = eta.substitute(images) * d2;
        for (size_t i = 0; i < fiber.size(); ++i) {
            const Rational& w = fiber[i];
            if (!(w > Rational(0))) continue;
            // Euler class of the exceptional fixed point over c with fiber
            // weight w: the line direction w, the orbit directions +-gamma,
            // and the in-fiber weights w' - w.
            LocalizationTerm t(restricted, LinearForm(1), ExpConvention::Real);
            t.push_denominator(LinearForm(std::vector<Rational>{w}), 1);
            for (const auto& root : model.positive_roots) {
                t.push_denominator(root, 1);
                t.push_denominator(-root, 1);
            }
            for (size_t k = 0; k < fiber.size(); ++k) {
                if (k == i) continue;
                if (fiber[k] == w)
                    throw validation_error("repeated fiber weight " + w.str() +
                                           ": positive-dimensional exceptional fixed loci are not supported");
                t.push_denominator(LinearForm(std::vector<Rational>{fiber[k] - w}), 1);
            }
            correction += residue_1d(t);
        }
    }
    correction *= GaussianRational(Rational(model.n0T));
    require_real(correction, "pair_partial_desing correction");

    PartialDesingResult result;
    result.correction = correction;
    result.value = require_real(GaussianRational(martin_factor(model)) * (base + correction),
                                "pair_partial_desing");
    return result;
}

} // namespace quot
