#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "quot/locterm.hpp"

namespace quot {

enum class GroupTag { U1, SU2, Torus };

std::string group_tag_name(GroupTag g);
GroupTag group_tag_from_name(const std::string& s);

// Connected component of the torus fixed locus with its localization data.
// Isolated components restrict each ring generator to a polynomial in X.
// A component with projective_dim = m > 0 is a P^m inside a projective space
// on which the circle acts linearly (the built-in repeated-weight family):
// the generator "xi" restricts to moment*X - h and "rho" to X, where h is the
// hyperplane class of the component, and every normal weight pairs with +h in
// the Euler class; localized_terms integrates h out.
struct FixedComponent {
    std::string id;
    std::vector<Rational> moment;                      // length = rank
    std::vector<std::pair<LinearForm, int>> normal_weights;
    std::map<std::string, MultiPoly> restriction;      // generator -> poly in X
    bool strictly_semistable = false;
    int projective_dim = 0;

    bool operator==(const FixedComponent& o) const;
};

// Combinatorial fixed-point dataset of a linearized torus/SU(2) action plus
// the group constants entering the residue formulas.
struct ActionModel {
    int rank = 1;
    GroupTag group = GroupTag::U1;
    long long n0 = 1;      // order of the generic stabilizer in K
    long long n0T = 1;     // order of the generic stabilizer in T
    long long weyl = 1;    // |W|
    long long s = 1;       // dim K
    long long nplus = 0;   // number of positive roots, (s - rank)/2
    std::optional<Rational> residue_scale; // torus models: caller-supplied overall constant
    std::vector<std::string> generators;
    std::vector<int> generator_degrees;
    std::vector<LinearForm> positive_roots;
    std::vector<FixedComponent> components;

    bool operator==(const ActionModel& o) const;

    int generator_index(const std::string& name) const; // -1 if absent
    // prod of the positive roots, a polynomial in X (1 for a torus with no roots).
    MultiPoly weyl_denominator() const;
    int complex_dim_of_space() const;  // dim_C M, recovered from any component
    int quotient_real_dim() const;     // dim_R of the symplectic quotient
    bool has_strictly_semistable() const;
    int degree_of(const MultiPoly& cls) const; // cohomological degree, -1 for 0
    void validate() const;             // structural invariants; throws validation_error
};

// Linear circle action on P^n with the given integer weights. Repeated
// weights produce one projective component per distinct value; a component
// with weight value 0 is flagged strictly semistable.
ActionModel model_circle_pn(const std::vector<long long>& weights);

// SU(2) acting diagonally on (P^1)^n: 2^n isolated fixed points indexed by
// sign vectors delta, with moment sum(delta) and Euler class (prod delta) X^n.
ActionModel model_su2_p1n(int n);

// SU(2) acting on P_n (binary forms of degree n): n+1 isolated points with
// moment n-2j and Euler class prod_{k != j} 2(j-k) X^n.
ActionModel model_su2_pn(int n);

// Parses "su2_pn:5", "su2_p1n:3", "circle:1,0,-1".
ActionModel model_from_builtin_name(const std::string& name);

// The localization germ of each fixed component for the class eta (expressed
// in the model's generators): numerator i_F^* eta, exponent (moment - shift)(X)
// when include_exponential is set, denominator the normal weights.
std::vector<std::pair<const FixedComponent*, LocalizationTerm>> localized_terms(
    const ActionModel& model, const MultiPoly& eta, const LinearForm& shift, bool include_exponential,
    ExpConvention convention = ExpConvention::Real);

// JSON model schema (documented in the README); throws validation_error with
// the offending field named.
ActionModel load_model_json(const std::string& json_text);
ActionModel load_model_file(const std::string& path);
std::string dump_model_json(const ActionModel& model);

} // namespace quot
