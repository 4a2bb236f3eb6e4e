#include "quot/model.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>

#include <json.hpp>

namespace quot {

std::string group_tag_name(GroupTag g) {
    switch (g) {
        case GroupTag::U1: return "u1";
        case GroupTag::SU2: return "su2";
        case GroupTag::Torus: return "torus";
    }
    throw validation_error("unknown group tag");
}

GroupTag group_tag_from_name(const std::string& s) {
    if (s == "u1") return GroupTag::U1;
    if (s == "su2") return GroupTag::SU2;
    if (s == "torus") return GroupTag::Torus;
    throw validation_error("group: expected one of u1/su2/torus, got '" + s + "'");
}

bool FixedComponent::operator==(const FixedComponent& o) const {
    return id == o.id && moment == o.moment && normal_weights == o.normal_weights &&
           restriction == o.restriction && strictly_semistable == o.strictly_semistable &&
           projective_dim == o.projective_dim;
}

bool ActionModel::operator==(const ActionModel& o) const {
    return rank == o.rank && group == o.group && n0 == o.n0 && n0T == o.n0T && weyl == o.weyl &&
           s == o.s && nplus == o.nplus && residue_scale == o.residue_scale &&
           generators == o.generators && generator_degrees == o.generator_degrees &&
           positive_roots == o.positive_roots && components == o.components;
}

int ActionModel::generator_index(const std::string& name) const {
    for (size_t i = 0; i < generators.size(); ++i) {
        if (generators[i] == name) return static_cast<int>(i);
    }
    return -1;
}

MultiPoly ActionModel::weyl_denominator() const {
    MultiPoly d = MultiPoly::constant(rank, GaussianRational(1));
    for (const auto& root : positive_roots) d = d * MultiPoly::from_linear_form(root);
    return d;
}

int ActionModel::complex_dim_of_space() const {
    if (components.empty()) throw validation_error("model has no components");
    const auto& c = components.front();
    int n = c.projective_dim;
    for (const auto& [f, m] : c.normal_weights) n += m;
    return n;
}

int ActionModel::quotient_real_dim() const {
    return 2 * (complex_dim_of_space() - static_cast<int>(s));
}

bool ActionModel::has_strictly_semistable() const {
    return std::any_of(components.begin(), components.end(),
                       [](const FixedComponent& c) { return c.strictly_semistable; });
}

int ActionModel::degree_of(const MultiPoly& cls) const {
    int deg = -1;
    for (const auto& [e, c] : cls.terms()) {
        int d = 0;
        for (size_t i = 0; i < e.size(); ++i) d += e[i] * generator_degrees[i];
        deg = std::max(deg, d);
    }
    return deg;
}

void ActionModel::validate() const {
    if (rank < 1) throw validation_error("rank must be >= 1");
    if (generators.empty()) throw validation_error("generators must be non-empty");
    if (generator_degrees.size() != generators.size())
        throw validation_error("generator degree list out of sync");
    if (nplus != (s - rank) / 2 || (s - rank) % 2 != 0)
        throw validation_error("constants: nplus must equal (s - rank)/2");
    switch (group) {
        case GroupTag::U1:
            if (rank != 1 || weyl != 1 || s != 1 || nplus != 0)
                throw validation_error("u1 model needs rank=1, weyl=1, s=1, nplus=0");
            break;
        case GroupTag::SU2:
            if (rank != 1 || weyl != 2 || s != 3 || nplus != 1)
                throw validation_error("su2 model needs rank=1, weyl=2, s=3, nplus=1");
            break;
        case GroupTag::Torus:
            if (weyl != 1 || s != rank || nplus != 0)
                throw validation_error("torus model needs weyl=1, s=rank, nplus=0");
            if (!residue_scale) throw validation_error("torus model needs constants.residue_scale");
            break;
    }
    if (static_cast<long long>(positive_roots.size()) != nplus)
        throw validation_error("positive_roots must list exactly nplus roots");
    for (const auto& r : positive_roots) {
        if (r.nvars() != rank) throw validation_error("positive root arity mismatch");
        if (r.is_zero()) throw validation_error("zero positive root");
    }
    if (components.empty()) throw validation_error("components must be non-empty");
    int dim = -1;
    for (const auto& c : components) {
        const std::string where = "component '" + c.id + "'";
        if (static_cast<int>(c.moment.size()) != rank)
            throw validation_error(where + ": moment has wrong length");
        if (c.projective_dim < 0) throw validation_error(where + ": negative projective_dim");
        if (c.projective_dim > 0 &&
            (group != GroupTag::U1 || generators != std::vector<std::string>{"xi", "rho"}))
            throw validation_error(where + ": projective components are supported only for the circle family with generators (xi, rho)");
        int d = c.projective_dim;
        for (const auto& [f, m] : c.normal_weights) {
            if (f.nvars() != rank) throw validation_error(where + ": normal weight arity mismatch");
            if (f.is_zero()) throw validation_error(where + ": zero normal weight");
            if (m <= 0) throw validation_error(where + ": weight multiplicity must be positive");
            d += m;
        }
        if (dim < 0)
            dim = d;
        else if (d != dim)
            throw validation_error(where + ": components disagree on the ambient dimension");
        for (const auto& g : generators) {
            if (!c.restriction.count(g))
                throw validation_error(where + ": restriction missing generator '" + g + "'");
        }
        for (const auto& [g, p] : c.restriction) {
            if (generator_index(g) < 0)
                throw validation_error(where + ": restriction names unknown generator '" + g + "'");
            if (p.nvars() != rank) throw validation_error(where + ": restriction arity mismatch");
        }
    }
}

namespace {

LinearForm scalar_form(const Rational& c) { return LinearForm(std::vector<Rational>{c}); }

int default_degree(const std::string& gen) { return gen == "zeta2" ? 4 : 2; }

} // namespace

ActionModel model_circle_pn(const std::vector<long long>& weights) {
    if (weights.empty()) throw validation_error("circle model needs at least one weight");
    ActionModel m;
    m.rank = 1;
    m.group = GroupTag::U1;
    m.weyl = 1;
    m.s = 1;
    m.nplus = 0;
    m.generators = {"xi", "rho"};
    m.generator_degrees = {2, 2};

    // Generic stabilizer: gcd of the pairwise weight differences.
    long long g = 0;
    for (size_t i = 0; i < weights.size(); ++i) {
        for (size_t j = i + 1; j < weights.size(); ++j) g = std::gcd(g, std::llabs(weights[i] - weights[j]));
    }
    m.n0 = m.n0T = (g == 0 ? 1 : g);

    std::set<long long> distinct(weights.begin(), weights.end());
    const bool all_distinct = distinct.size() == weights.size();

    auto make_component = [&](const std::string& id, long long v, int mult) {
        FixedComponent c;
        c.id = id;
        c.moment = {Rational(v)};
        c.projective_dim = mult - 1;
        c.strictly_semistable = (v == 0);
        std::map<long long, int> others;
        for (long long w : weights) {
            if (w != v) others[w]++;
        }
        for (const auto& [w, cnt] : others) c.normal_weights.emplace_back(scalar_form(Rational(w - v)), cnt);
        std::sort(c.normal_weights.begin(), c.normal_weights.end());
        c.restriction["xi"] = Rational(v).is_zero() ? MultiPoly(1) : MultiPoly::monomial(1, {1}, GaussianRational(Rational(v)));
        c.restriction["rho"] = MultiPoly::variable(1, 0);
        return c;
    };

    if (all_distinct) {
        for (size_t j = 0; j < weights.size(); ++j)
            m.components.push_back(make_component("p" + std::to_string(j), weights[j], 1));
    } else {
        std::vector<long long> values(distinct.begin(), distinct.end());
        std::sort(values.begin(), values.end(), std::greater<long long>());
        for (long long v : values) {
            int mult = static_cast<int>(std::count(weights.begin(), weights.end(), v));
            m.components.push_back(make_component("w" + std::to_string(v), v, mult));
        }
    }
    m.validate();
    return m;
}

ActionModel model_su2_p1n(int n) {
    if (n < 1) throw validation_error("su2_p1n needs n >= 1");
    ActionModel m;
    m.rank = 1;
    m.group = GroupTag::SU2;
    m.weyl = 2;
    m.s = 3;
    m.nplus = 1;
    m.n0 = m.n0T = 2;
    m.positive_roots = {scalar_form(Rational(2))};
    for (int i = 1; i <= n; ++i) m.generators.push_back("xi" + std::to_string(i));
    m.generators.push_back("zeta2");
    for (const auto& g : m.generators) m.generator_degrees.push_back(default_degree(g));

    for (long long mask = 0; mask < (1LL << n); ++mask) {
        FixedComponent c;
        std::vector<int> delta(n);
        long long total = 0;
        std::string id = "d";
        for (int j = 0; j < n; ++j) {
            delta[j] = (mask >> j) & 1 ? -1 : 1;
            total += delta[j];
            id += delta[j] > 0 ? '+' : '-';
        }
        c.id = id;
        c.moment = {Rational(total)};
        int plus = static_cast<int>(std::count(delta.begin(), delta.end(), 1));
        if (plus > 0) c.normal_weights.emplace_back(scalar_form(Rational(1)), plus);
        if (plus < n) c.normal_weights.emplace_back(scalar_form(Rational(-1)), n - plus);
        std::sort(c.normal_weights.begin(), c.normal_weights.end());
        c.strictly_semistable = (total == 0);
        for (int j = 0; j < n; ++j)
            c.restriction["xi" + std::to_string(j + 1)] =
                MultiPoly::monomial(1, {1}, GaussianRational(Rational(delta[j])));
        c.restriction["zeta2"] = MultiPoly::variable(1, 0, 2);
        m.components.push_back(std::move(c));
    }
    m.validate();
    return m;
}

ActionModel model_su2_pn(int n) {
    if (n < 2) throw validation_error("su2_pn needs n >= 2");
    ActionModel m;
    m.rank = 1;
    m.group = GroupTag::SU2;
    m.weyl = 2;
    m.s = 3;
    m.nplus = 1;
    m.n0 = m.n0T = 2;
    m.positive_roots = {scalar_form(Rational(2))};
    m.generators = {"xi", "zeta2"};
    m.generator_degrees = {2, 4};

    for (int j = 0; j <= n; ++j) {
        FixedComponent c;
        c.id = "p" + std::to_string(j);
        long long mu = n - 2LL * j;
        c.moment = {Rational(mu)};
        c.strictly_semistable = (mu == 0);
        std::map<long long, int> weights;
        for (int k = 0; k <= n; ++k) {
            if (k != j) weights[2LL * (j - k)]++;
        }
        for (const auto& [w, cnt] : weights) c.normal_weights.emplace_back(scalar_form(Rational(w)), cnt);
        std::sort(c.normal_weights.begin(), c.normal_weights.end());
        c.restriction["xi"] = mu == 0 ? MultiPoly(1) : MultiPoly::monomial(1, {1}, GaussianRational(Rational(mu)));
        c.restriction["zeta2"] = MultiPoly::variable(1, 0, 2);
        m.components.push_back(std::move(c));
    }
    m.validate();
    return m;
}

ActionModel model_from_builtin_name(const std::string& name) {
    auto colon = name.find(':');
    if (colon == std::string::npos) throw validation_error("builtin name needs the form family:args");
    const std::string family = name.substr(0, colon);
    const std::string args = name.substr(colon + 1);
    try {
        if (family == "su2_pn") return model_su2_pn(std::stoi(args));
        if (family == "su2_p1n") return model_su2_p1n(std::stoi(args));
        if (family == "circle") {
            std::vector<long long> weights;
            std::stringstream ss(args);
            std::string item;
            while (std::getline(ss, item, ',')) weights.push_back(std::stoll(item));
            return model_circle_pn(weights);
        }
    } catch (const validation_error&) {
        throw;
    } catch (const std::exception&) {
        throw validation_error("cannot parse builtin arguments in '" + name + "'");
    }
    throw validation_error("unknown builtin family '" + family + "' (expected su2_pn, su2_p1n or circle)");
}

namespace {

// Truncate powers of variable `hvar` above `cap`.
MultiPoly truncate_h(const MultiPoly& p, int hvar, int cap) {
    MultiPoly r(p.nvars());
    for (const auto& [e, c] : p.terms()) {
        if (e[hvar] <= cap) r.add_term(e, c);
    }
    return r;
}

// Integrate a projective component: substitutes xi -> vX - h, rho -> X,
// expands 1/prod((w-v)X + h)^{m_w} in the nilpotent hyperplane class h and
// extracts the h^{dim} coefficient. Returns {numerator in X, pole order}.
std::pair<MultiPoly, int> fiber_integrate(const FixedComponent& comp, const MultiPoly& eta,
                                          const std::vector<std::string>& generators) {
    const int pd = comp.projective_dim;
    // two working variables: X = 0, h = 1
    std::vector<MultiPoly> images;
    for (const auto& g : generators) {
        const MultiPoly& lin = comp.restriction.at(g);
        MultiPoly img(2);
        for (const auto& [e, c] : lin.terms()) img.add_term({e[0], 0}, c);
        if (g == "xi") img -= MultiPoly::variable(2, 1); // hyperplane-class twist
        images.push_back(img);
    }
    MultiPoly num = truncate_h(eta.substitute(images), 1, pd);

    // Multiply by X^{m_w + pd} (cX + h)^{-m_w} per weight, all h-truncated.
    int pole = 0;
    for (const auto& [f, mw] : comp.normal_weights) {
        const Rational c = f[0];
        MultiPoly factor(2);
        for (int r = 0; r <= pd; ++r) {
            Rational coef = Rational(binomial(mw - 1 + r, r)) * c.pow(-(mw + r));
            if (r % 2 == 1) coef = -coef;
            factor.add_term({pd - r, r}, GaussianRational(coef));
        }
        num = truncate_h(num * factor, 1, pd);
        pole += mw + pd;
    }

    // h^{pd} coefficient; remaining polynomial in X over X^{pole}.
    MultiPoly byh(1);
    for (const auto& [e, c] : num.terms()) {
        if (e[1] == pd) byh.add_term({e[0]}, c);
    }
    int cancel = pole;
    for (const auto& [e, c] : byh.terms()) cancel = std::min(cancel, e[0]);
    if (byh.is_zero()) cancel = 0;
    if (cancel > 0) {
        MultiPoly reduced(1);
        for (const auto& [e, c] : byh.terms()) reduced.add_term({e[0] - cancel}, c);
        byh = reduced;
    }
    return {byh, pole - cancel};
}

} // namespace

std::vector<std::pair<const FixedComponent*, LocalizationTerm>> localized_terms(
    const ActionModel& model, const MultiPoly& eta, const LinearForm& shift, bool include_exponential,
    ExpConvention convention) {
    if (eta.nvars() != static_cast<int>(model.generators.size()))
        throw validation_error("class is not expressed in the model's generators");
    if (shift.nvars() != model.rank) throw validation_error("shift arity mismatch");

    std::vector<std::pair<const FixedComponent*, LocalizationTerm>> out;
    for (const auto& comp : model.components) {
        LinearForm expo(model.rank);
        if (include_exponential) {
            for (int i = 0; i < model.rank; ++i) expo[i] = comp.moment[i] - shift[i];
        }
        if (comp.projective_dim == 0) {
            std::vector<MultiPoly> images;
            for (const auto& g : model.generators) images.push_back(comp.restriction.at(g));
            LocalizationTerm t(eta.substitute(images), expo, convention);
            for (const auto& [f, m] : comp.normal_weights) t.push_denominator(f, m);
            out.emplace_back(&comp, std::move(t));
        } else {
            auto [num, pole] = fiber_integrate(comp, eta, model.generators);
            LocalizationTerm t(std::move(num), expo, convention);
            if (pole > 0) t.push_denominator(LinearForm(std::vector<Rational>{Rational(1)}), pole);
            out.emplace_back(&comp, std::move(t));
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// JSON serialization
// ---------------------------------------------------------------------------

namespace {

using nlohmann::json;

json rational_to_json(const Rational& r) {
    json j = json::array();
    BigInt num = r.numerator(), den = r.denominator();
    static const BigInt lo = BigInt(std::numeric_limits<long long>::min());
    static const BigInt hi = BigInt(std::numeric_limits<long long>::max());
    auto emit = [&](const BigInt& v) -> json {
        if (v < lo || v > hi) return v.str();
        return static_cast<long long>(v);
    };
    j.push_back(emit(num));
    j.push_back(emit(den));
    return j;
}

Rational rational_from_json(const json& j, const std::string& where) {
    if (!j.is_array() || j.size() != 2)
        throw validation_error(where + ": rational must be [numerator, denominator]");
    auto part = [&](const json& v) -> BigInt {
        if (v.is_number_integer()) return BigInt(v.get<long long>());
        if (v.is_string()) return BigInt(v.get<std::string>());
        throw validation_error(where + ": rational entries must be integers");
    };
    BigInt den = part(j[1]);
    if (den == 0) throw validation_error(where + ": zero denominator");
    return Rational(part(j[0]), den);
}

json form_to_json(const LinearForm& f) {
    json j = json::array();
    for (int i = 0; i < f.nvars(); ++i) j.push_back(rational_to_json(f[i]));
    return j;
}

LinearForm form_from_json(const json& j, int rank, const std::string& where) {
    if (!j.is_array() || static_cast<int>(j.size()) != rank)
        throw validation_error(where + ": expected a length-" + std::to_string(rank) + " covector");
    std::vector<Rational> c;
    for (const auto& e : j) c.push_back(rational_from_json(e, where));
    return LinearForm(std::move(c));
}

std::string exps_key(const Exponents& e) {
    std::string k;
    for (size_t i = 0; i < e.size(); ++i) {
        if (i) k += ",";
        k += std::to_string(e[i]);
    }
    return k;
}

Exponents exps_from_key(const std::string& key, int rank, const std::string& where) {
    Exponents e;
    std::stringstream ss(key);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            e.push_back(std::stoi(item));
        } catch (const std::exception&) {
            throw validation_error(where + ": bad exponent key '" + key + "'");
        }
    }
    if (static_cast<int>(e.size()) != rank || std::any_of(e.begin(), e.end(), [](int x) { return x < 0; }))
        throw validation_error(where + ": bad exponent key '" + key + "'");
    return e;
}

json poly_to_json(const MultiPoly& p, const std::string& where) {
    json j = json::object();
    for (const auto& [e, c] : p.terms()) {
        if (!c.is_real()) throw validation_error(where + ": model polynomials must be real");
        j[exps_key(e)] = rational_to_json(c.real());
    }
    return j;
}

MultiPoly poly_from_json(const json& j, int rank, const std::string& where) {
    if (!j.is_object()) throw validation_error(where + ": polynomial must be a coefficient map");
    MultiPoly p(rank);
    for (auto it = j.begin(); it != j.end(); ++it)
        p.add_term(exps_from_key(it.key(), rank, where), GaussianRational(rational_from_json(it.value(), where)));
    return p;
}

} // namespace

std::string dump_model_json(const ActionModel& model) {
    json j;
    j["rank"] = model.rank;
    j["group"] = group_tag_name(model.group);
    json constants;
    constants["n0"] = model.n0;
    constants["n0T"] = model.n0T;
    constants["weyl"] = model.weyl;
    constants["s"] = model.s;
    constants["nplus"] = model.nplus;
    if (model.residue_scale) constants["residue_scale"] = rational_to_json(*model.residue_scale);
    j["constants"] = constants;
    j["generators"] = model.generators;
    json roots = json::array();
    for (const auto& r : model.positive_roots) roots.push_back(form_to_json(r));
    j["positive_roots"] = roots;
    json comps = json::array();
    for (const auto& c : model.components) {
        json jc;
        jc["id"] = c.id;
        json mom = json::array();
        for (const auto& m : c.moment) mom.push_back(rational_to_json(m));
        jc["moment"] = mom;
        json weights = json::array();
        for (const auto& [f, mult] : c.normal_weights) {
            for (int k = 0; k < mult; ++k) weights.push_back(form_to_json(f));
        }
        jc["normal_weights"] = weights;
        json restr = json::object();
        for (const auto& [g, p] : c.restriction) restr[g] = poly_to_json(p, "component '" + c.id + "' restriction");
        jc["restriction"] = restr;
        jc["strictly_semistable"] = c.strictly_semistable;
        if (c.projective_dim > 0) jc["projective_dim"] = c.projective_dim;
        comps.push_back(jc);
    }
    j["components"] = comps;
    return j.dump(2) + "\n";
}

ActionModel load_model_json(const std::string& json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const std::exception& e) {
        throw validation_error(std::string("model JSON does not parse: ") + e.what());
    }
    auto require = [&](const json& obj, const char* field, const std::string& where) -> const json& {
        if (!obj.contains(field)) throw validation_error(where + ": missing field '" + field + "'");
        return obj.at(field);
    };

    ActionModel m;
    m.rank = require(j, "rank", "model").get<int>();
    m.group = group_tag_from_name(require(j, "group", "model").get<std::string>());
    const json& constants = require(j, "constants", "model");
    m.n0 = require(constants, "n0", "constants").get<long long>();
    m.n0T = require(constants, "n0T", "constants").get<long long>();
    m.weyl = require(constants, "weyl", "constants").get<long long>();
    m.s = require(constants, "s", "constants").get<long long>();
    m.nplus = require(constants, "nplus", "constants").get<long long>();
    if (constants.contains("residue_scale"))
        m.residue_scale = rational_from_json(constants.at("residue_scale"), "constants.residue_scale");
    for (const auto& g : require(j, "generators", "model")) m.generators.push_back(g.get<std::string>());
    for (const auto& g : m.generators) m.generator_degrees.push_back(default_degree(g));
    for (const auto& r : require(j, "positive_roots", "model"))
        m.positive_roots.push_back(form_from_json(r, m.rank, "positive_roots"));

    const json& comps = require(j, "components", "model");
    if (!comps.is_array()) throw validation_error("components must be an array");
    for (size_t idx = 0; idx < comps.size(); ++idx) {
        const json& jc = comps[idx];
        FixedComponent c;
        c.id = jc.contains("id") ? jc.at("id").get<std::string>() : ("component" + std::to_string(idx));
        const std::string where = "component '" + c.id + "'";
        const json& mom = require(jc, "moment", where);
        if (!mom.is_array() || static_cast<int>(mom.size()) != m.rank)
            throw validation_error(where + ": moment must be a length-" + std::to_string(m.rank) + " vector");
        for (const auto& e : mom) c.moment.push_back(rational_from_json(e, where + ".moment"));
        std::map<LinearForm, int> weights;
        for (const auto& w : require(jc, "normal_weights", where))
            weights[form_from_json(w, m.rank, where + ".normal_weights")]++;
        for (const auto& [f, mult] : weights) c.normal_weights.emplace_back(f, mult);
        const json& restr = require(jc, "restriction", where);
        for (auto it = restr.begin(); it != restr.end(); ++it)
            c.restriction[it.key()] = poly_from_json(it.value(), m.rank, where + ".restriction." + it.key());
        if (jc.contains("strictly_semistable")) c.strictly_semistable = jc.at("strictly_semistable").get<bool>();
        if (jc.contains("projective_dim")) c.projective_dim = jc.at("projective_dim").get<int>();
        m.components.push_back(std::move(c));
    }
    m.validate();
    return m;
}

ActionModel load_model_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw validation_error("cannot open model file '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return load_model_json(ss.str());
}

} // namespace quot
