#include "quot/cli.hpp"

#include <fstream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "quot/expr.hpp"
#include "quot/ihring.hpp"
#include "quot/model.hpp"
#include "quot/pairing.hpp"
#include "quot/stratify.hpp"
#include "quot/witten.hpp"

namespace quot {

namespace {

using nlohmann::json;

struct CommandResult {
    std::string command;
    json values = json::object();
    std::string provenance;
    std::string latex; // optional alternative rendering
};

std::string render(const CommandResult& r, const std::string& format) {
    if (format == "json") {
        json j;
        j["command"] = r.command;
        j["values"] = r.values;
        j["provenance"] = r.provenance;
        return j.dump(2) + "\n";
    }
    if (format == "latex" && !r.latex.empty()) return r.latex;
    std::ostringstream out;
    out << "command: " << r.command << "\n";
    for (auto it = r.values.begin(); it != r.values.end(); ++it) {
        out << it.key() << ": ";
        if (it.value().is_string())
            out << it.value().get<std::string>();
        else
            out << it.value().dump();
        out << "\n";
    }
    out << "provenance: " << r.provenance << "\n";
    return out.str();
}

std::vector<Rational> parse_rational_csv(const std::string& text, const std::string& what) {
    std::vector<Rational> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(Rational::parse(item));
    if (out.empty()) throw validation_error(what + ": empty list");
    return out;
}

std::vector<long long> parse_int_csv(const std::string& text, const std::string& what) {
    std::vector<long long> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            out.push_back(std::stoll(item));
        } catch (const std::exception&) {
            throw validation_error(what + ": '" + item + "' is not an integer");
        }
    }
    if (out.empty()) throw validation_error(what + ": empty list");
    return out;
}

ActionModel resolve_model(const std::string& builtin, const std::string& model_path) {
    if (builtin.empty() == model_path.empty())
        throw validation_error("give exactly one of --builtin or --model");
    if (!builtin.empty()) return model_from_builtin_name(builtin);
    return load_model_file(model_path);
}

std::string echo_args(const std::vector<std::string>& args) {
    std::string s = "quotpair";
    for (const auto& a : args) s += " " + a;
    return s;
}

std::string monomial_name(const Exponents& e) {
    std::string s;
    auto part = [&](const char* name, int p) {
        if (p == 0) return;
        if (!s.empty()) s += "*";
        s += name;
        if (p > 1) s += "^" + std::to_string(p);
    };
    part("xi", e[0]);
    part("rho", e[1]);
    return s.empty() ? "1" : s;
}

json sqrt_eps_to_json(const SqrtEpsPolynomial& p) {
    json terms = json::array();
    std::map<int, std::pair<GaussianRational, GaussianRational>> merged;
    for (const auto& [k, c] : p.plain) merged[k].first = c;
    for (const auto& [k, c] : p.sqrt_pi_2) merged[k].second = c;
    for (const auto& [k, pr] : merged) {
        json t;
        t["sqrt_eps_exponent"] = k;
        t["plain"] = pr.first.str();
        t["sqrt_pi_over_2"] = pr.second.str();
        terms.push_back(t);
    }
    return terms;
}

std::vector<LocalizationTerm> load_terms_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw validation_error("cannot open terms file '" + path + "'");
    json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw validation_error(std::string("terms file does not parse: ") + e.what());
    }
    if (!j.contains("variables") || !j.contains("terms"))
        throw validation_error("terms file needs 'variables' and 'terms'");
    const int l = j.at("variables").get<int>();
    ExpConvention conv = ExpConvention::Real;
    if (j.contains("convention")) {
        std::string c = j.at("convention").get<std::string>();
        if (c == "i")
            conv = ExpConvention::Imag;
        else if (c != "real")
            throw validation_error("convention must be 'real' or 'i'");
    }
    auto rational_of = [](const json& v, const std::string& where) {
        if (!v.is_array() || v.size() != 2) throw validation_error(where + ": rational must be [num, den]");
        return Rational(BigInt(v[0].get<long long>()), BigInt(v[1].get<long long>()));
    };
    std::vector<LocalizationTerm> terms;
    for (const auto& jt : j.at("terms")) {
        MultiPoly num(l);
        for (auto it = jt.at("numerator").begin(); it != jt.at("numerator").end(); ++it) {
            Exponents e;
            std::stringstream ss(it.key());
            std::string part;
            while (std::getline(ss, part, ',')) e.push_back(std::stoi(part));
            if (static_cast<int>(e.size()) != l) throw validation_error("numerator exponent arity mismatch");
            num.add_term(e, GaussianRational(rational_of(it.value(), "numerator")));
        }
        std::vector<Rational> expc;
        for (const auto& v : jt.at("exponent")) expc.push_back(rational_of(v, "exponent"));
        if (static_cast<int>(expc.size()) != l) throw validation_error("exponent arity mismatch");
        LocalizationTerm t(num, LinearForm(expc), conv);
        for (const auto& jd : jt.at("denominator")) {
            std::vector<Rational> fc;
            for (const auto& v : jd.at("form")) fc.push_back(rational_of(v, "denominator form"));
            t.push_denominator(LinearForm(fc), jd.value("mult", 1));
        }
        terms.push_back(std::move(t));
    }
    return terms;
}

int run_pair(const std::vector<std::string>& args, const std::string& builtin, const std::string& model_path,
             const std::string& eta_str, const std::string& mode, const std::string& shift_str,
             const std::string& chamber_str, const std::string& rho_str, bool dump_model,
             const std::string& format, std::ostringstream& out) {
    ActionModel model = resolve_model(builtin, model_path);
    if (dump_model) {
        out << dump_model_json(model);
        return 0;
    }
    if (eta_str.empty()) throw validation_error("--eta is required (or use --dump-model)");
    MultiPoly eta = parse_class_expression(eta_str, model.generators);

    CommandResult r;
    r.command = echo_args(args);
    if (mode == "regular") {
        std::optional<Chamber> chamber;
        std::optional<Perturbation> pert;
        if (!chamber_str.empty()) chamber = Chamber{parse_rational_csv(chamber_str, "--chamber")};
        if (!rho_str.empty()) pert = Perturbation{parse_rational_csv(rho_str, "--rho")};
        GaussianRational v = pair_regular(model, eta, chamber, pert);
        r.values["value"] = v.str();
        switch (model.group) {
            case GroupTag::U1:
                r.provenance = "rank-1 residue formula, U(1) normalization: -n0 res_{X=0} sum over positive-moment components";
                break;
            case GroupTag::SU2:
                r.provenance = "rank-1 residue formula, SU(2) normalization: (n0/2) res_{X=0} (2X)^2 sum over positive-moment components";
                break;
            case GroupTag::Torus:
                r.provenance = "multivariable Jeffrey-Kirwan residue of D^2-weighted fixed-point terms, caller-supplied scale";
                break;
        }
    } else if (mode == "ih") {
        GaussianRational v = pair_ih(model, eta, MultiPoly::constant(static_cast<int>(model.generators.size()), GaussianRational(1)));
        r.values["value"] = v.str();
        r.provenance = "intersection pairing: Martin factor times the abelianized residue formula at a small "
                       "regular shift, self-checked at two shift values";
    } else if (mode == "abelian") {
        if (model.rank == 1) {
            Rational shift = shift_str.empty() ? smallest_positive_moment(model) / Rational(2)
                                               : Rational::parse(shift_str);
            GaussianRational v = pair_abelianized(model, eta, shift);
            r.values["value"] = v.str();
            r.values["shift"] = shift.str();
            r.provenance =
                "abelianized residue formula: -n0^T res_{X=0} of D^2-weighted terms with moments above the shift";
        } else {
            if (shift_str.empty() || chamber_str.empty())
                throw validation_error("generic-rank abelian mode needs --shift and --chamber");
            LinearForm shift(parse_rational_csv(shift_str, "--shift"));
            Chamber ch{parse_rational_csv(chamber_str, "--chamber")};
            std::optional<Perturbation> pert;
            if (!rho_str.empty()) pert = Perturbation{parse_rational_csv(rho_str, "--rho")};
            GaussianRational v = pair_abelianized(model, eta, shift, ch, pert);
            r.values["value"] = v.str();
            r.values["shift"] = shift_str;
            r.provenance = "shifted multivariable Jeffrey-Kirwan residue of D^2-weighted terms, caller-supplied scale";
        }
    } else if (mode == "desing") {
        PartialDesingResult v = pair_partial_desing(model, eta, default_blowup_spec(model));
        r.values["value"] = v.value.str();
        r.values["correction"] = "correction residue = " + v.correction.str();
        r.provenance = "partial desingularization: abelianized pairing at a small shift plus exceptional-divisor "
                       "wall-crossing corrections, times the Martin factor";
    } else {
        throw validation_error("unknown mode '" + mode + "' (regular|ih|abelian|desing)");
    }
    out << render(r, format);
    return 0;
}

int run_ih(const std::vector<std::string>& args, const std::string& weights_str, const std::string& what,
           const std::string& format, std::ostringstream& out) {
    std::vector<long long> weights = parse_int_csv(weights_str, "--weights");
    CommandResult r;
    r.command = echo_args(args);
    if (what == "betti") {
        VmBasis basis = vm_basis(weights);
        r.values["betti"] = basis.graded_dimensions();
        r.provenance = "graded dimensions of the truncated subspace mapping onto intersection cohomology";
    } else if (what == "vm") {
        VmBasis basis = vm_basis(weights);
        json per_degree = json::object();
        for (const auto& [deg, monos] : basis.monomials) {
            json list = json::array();
            for (const auto& e : monos) list.push_back(monomial_name(e));
            per_degree[std::to_string(deg)] = list;
        }
        r.values["vm"] = per_degree;
        r.values["tau"] = monomial_name(basis.tau);
        r.provenance = "standard monomials retained by the stratum truncation (kept iff i >= q or 2j < n_R)";
    } else if (what.rfind("matrix:", 0) == 0) {
        int d = 0;
        try {
            d = std::stoi(what.substr(7));
        } catch (const std::exception&) {
            throw validation_error("matrix degree must be an integer");
        }
        VmBasis basis = vm_basis(weights);
        auto m = ih_pairing_matrix(weights, d);
        json rows = json::array();
        for (const auto& row : m) {
            json jr = json::array();
            for (const auto& v : row) jr.push_back(v.str());
            rows.push_back(jr);
        }
        r.values["matrix"] = rows;
        json names = json::array();
        for (const auto& e : basis.monomials.at(d)) names.push_back(monomial_name(e));
        r.values["row_basis"] = names;
        r.provenance = "pairing matrix against the top class in the quotient presentation (lex basis, xi > rho)";
        std::ostringstream tex;
        tex << "\\begin{pmatrix}\n";
        for (size_t i = 0; i < m.size(); ++i) {
            for (size_t j = 0; j < m[i].size(); ++j) {
                if (j) tex << " & ";
                GaussianRational v = m[i][j];
                if (v.is_real() && !v.real().is_integer())
                    tex << (v.real() < Rational(0) ? "-" : "") << "\\frac{" << v.real().abs().numerator().str()
                        << "}{" << v.real().denominator().str() << "}";
                else
                    tex << v.str();
            }
            tex << " \\\\\n";
        }
        tex << "\\end{pmatrix}\n";
        r.latex = tex.str();
    } else {
        throw validation_error("unknown --what '" + what + "' (betti|vm|matrix:d)");
    }
    out << render(r, format);
    return 0;
}

int run_poincare(const std::vector<std::string>& args, const std::string& family, int n, const std::string& which,
                 int bound, const std::string& format, std::ostringstream& out) {
    StratificationSpec spec;
    spec.family = family_from_name(family);
    spec.n = n;
    spec.bound = bound;
    TruncatedSeries series = TruncatedSeries::zero(spec.effective_bound());
    CommandResult r;
    r.command = echo_args(args);
    if (which == "total") {
        series = equivariant_series_total(spec);
        r.provenance = "equivariant series of the whole space";
    } else if (which == "ss") {
        series = semistable_series(spec);
        r.provenance = "equivariantly perfect stratification: total series minus the unstable strata";
    } else if (which == "desing") {
        series = desing_series(spec);
        r.provenance = "series of the partial desingularization (blow-up correction applied)";
        if (spec.n <= 4) r.provenance += "; degenerate small-n edge: empty correction ranges contribute 0";
    } else if (which == "ip") {
        series = ip_series(spec);
        r.provenance = "intersection Poincare series: desingularization minus the kernel of the surjection";
    } else {
        throw validation_error("unknown --which '" + which + "' (total|ss|desing|ip)");
    }
    json coeffs = json::array();
    for (int k = 0; k <= series.bound(); k += 2) coeffs.push_back(series.coeff(k).str());
    r.values["even_coefficients"] = coeffs;
    r.values["bound"] = series.bound();
    r.values["series"] = series.str();
    out << render(r, format);
    return 0;
}

int run_witten(const std::vector<std::string>& args, const std::string& builtin, const std::string& model_path,
               const std::string& eta_str, const std::string& format, std::ostringstream& out) {
    ActionModel model = resolve_model(builtin, model_path);
    if (eta_str.empty()) throw validation_error("--eta is required");
    MultiPoly eta = parse_class_expression(eta_str, model.generators);
    WittenResult w = witten_i0(model, eta);
    CommandResult r;
    r.command = echo_args(args);
    r.values["polynomial"] = w.value.str();
    r.values["terms"] = sqrt_eps_to_json(w.value);
    r.values["prefactor"] = w.prefactor;
    r.provenance = "localized Gaussian integral: per-component residues integrated over moment cones, "
                   "reported up to the symbolic prefactor";
    out << render(r, format);
    return 0;
}

int run_residue(const std::vector<std::string>& args, const std::string& terms_path, const std::string& chamber_str,
                const std::string& rho_str, const std::string& format, std::ostringstream& out) {
    auto terms = load_terms_file(terms_path);
    Chamber chamber{parse_rational_csv(chamber_str, "--chamber")};
    Perturbation pert = rho_str.empty() ? Perturbation::none(chamber.rank())
                                        : Perturbation{parse_rational_csv(rho_str, "--rho")};
    GaussianRational v = jk_residue(terms, chamber, pert);
    CommandResult r;
    r.command = echo_args(args);
    r.values["value"] = v.str();
    r.provenance = "multivariable Jeffrey-Kirwan residue: partial fractions to basis denominators, "
                   "exponential expansion with cone selection";
    out << render(r, format);
    return 0;
}

} // namespace

CliResult run_cli(const std::vector<std::string>& args) {
    CLI::App app{"exact intersection pairings on symplectic and GIT quotients"};
    app.require_subcommand(1);

    std::string builtin, model_path, eta, mode = "regular", shift, chamber, rho, format = "plain";
    std::string weights, what = "betti";
    std::string family = "pn", which = "total";
    int n = 2, bound = 0;
    std::string terms_path;
    bool dump_model = false;

    auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", format, "plain|json|latex")->default_str("plain");
    };

    CLI::App* pair = app.add_subcommand("pair", "evaluate a quotient pairing");
    pair->add_option("--builtin", builtin, "built-in model, e.g. su2_pn:5, su2_p1n:3, circle:1,0,-1");
    pair->add_option("--model", model_path, "model JSON file");
    pair->add_option("--eta", eta, "class expression in the model generators");
    pair->add_option("--mode", mode, "regular|ih|abelian|desing")->default_str("regular");
    pair->add_option("--shift", shift, "shift for --mode abelian (rational)");
    pair->add_option("--chamber", chamber, "chamber vector (torus models), comma-separated rationals");
    pair->add_option("--rho", rho, "perturbation covector (torus models)");
    pair->add_flag("--dump-model", dump_model, "print the resolved model as JSON and exit");
    add_format(pair);

    CLI::App* ih = app.add_subcommand("ih", "intersection cohomology of a circle quotient");
    ih->add_option("--weights", weights, "integer weights, comma-separated")->required();
    ih->add_option("--what", what, "betti|vm|matrix:d")->default_str("betti");
    add_format(ih);

    CLI::App* poincare = app.add_subcommand("poincare", "Poincare series bookkeeping");
    poincare->add_option("--family", family, "pn|p1n")->required();
    poincare->add_option("--n", n, "family parameter")->required();
    poincare->add_option("--which", which, "total|ss|desing|ip")->required();
    poincare->add_option("--bound", bound, "series truncation bound (default 2n+4)");
    add_format(poincare);

    CLI::App* witten = app.add_subcommand("witten", "localized Gaussian integral as a sqrt(eps)-polynomial");
    witten->add_option("--builtin", builtin, "built-in model");
    witten->add_option("--model", model_path, "model JSON file");
    witten->add_option("--eta", eta, "class expression")->required();
    add_format(witten);

    CLI::App* residue = app.add_subcommand("residue", "Jeffrey-Kirwan residue of a term file");
    residue->add_option("--terms", terms_path, "JSON file of localization terms")->required();
    residue->add_option("--chamber", chamber, "chamber vector, comma-separated rationals")->required();
    residue->add_option("--rho", rho, "perturbation covector");
    add_format(residue);

    std::vector<const char*> argv;
    argv.push_back("quotpair");
    for (const auto& a : args) argv.push_back(a.c_str());

    CliResult result;
    std::ostringstream out;
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
        if (format != "plain" && format != "json" && format != "latex")
            throw validation_error("unknown --format '" + format + "'");
        if (pair->parsed())
            result.exit_code = run_pair(args, builtin, model_path, eta, mode, shift, chamber, rho,
                                        dump_model, format, out);
        else if (ih->parsed())
            result.exit_code = run_ih(args, weights, what, format, out);
        else if (poincare->parsed())
            result.exit_code = run_poincare(args, family, n, which, bound, format, out);
        else if (witten->parsed())
            result.exit_code = run_witten(args, builtin, model_path, eta, format, out);
        else if (residue->parsed())
            result.exit_code = run_residue(args, terms_path, chamber, rho, format, out);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            // --help and friends
            out << app.help();
            result.exit_code = 0;
        } else {
            out << "error: " << e.what() << "\n";
            result.exit_code = 2;
        }
    } catch (const math_contract_error& e) {
        out << "mathematical contract violation: " << e.what() << "\n";
        result.exit_code = 3;
    } catch (const validation_error& e) {
        out << "error: " << e.what() << "\n";
        result.exit_code = 2;
    } catch (const std::exception& e) {
        out << "error: " << e.what() << "\n";
        result.exit_code = 2;
    }
    result.output = out.str();
    return result;
}

} // namespace quot
