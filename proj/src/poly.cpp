#include "quot/poly.hpp"

#include <algorithm>

namespace quot {

bool LinearForm::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c.is_zero(); });
}

Rational LinearForm::eval(const std::vector<Rational>& point) const {
    if (point.size() != coeffs_.size()) throw validation_error("linear form evaluated at wrong arity");
    Rational r(0);
    for (size_t i = 0; i < coeffs_.size(); ++i) r += coeffs_[i] * point[i];
    return r;
}

LinearForm LinearForm::operator-() const {
    LinearForm r(nvars());
    for (int i = 0; i < nvars(); ++i) r[i] = -coeffs_[i];
    return r;
}

LinearForm operator+(const LinearForm& a, const LinearForm& b) {
    if (a.nvars() != b.nvars()) throw validation_error("linear form arity mismatch");
    LinearForm r(a.nvars());
    for (int i = 0; i < a.nvars(); ++i) r[i] = a[i] + b[i];
    return r;
}

LinearForm operator-(const LinearForm& a, const LinearForm& b) { return a + (-b); }

LinearForm operator*(const Rational& c, const LinearForm& f) {
    LinearForm r(f.nvars());
    for (int i = 0; i < f.nvars(); ++i) r[i] = c * f[i];
    return r;
}

bool operator<(const LinearForm& a, const LinearForm& b) {
    if (a.nvars() != b.nvars()) return a.nvars() < b.nvars();
    for (int i = 0; i < a.nvars(); ++i) {
        if (a[i] != b[i]) return a[i] < b[i];
    }
    return false;
}

std::string LinearForm::str(const std::vector<std::string>& names) const {
    std::string out;
    for (int i = 0; i < nvars(); ++i) {
        if (coeffs_[i].is_zero()) continue;
        std::string c = coeffs_[i].str();
        if (!out.empty() && c[0] != '-') out += "+";
        if (c == "1")
            out += names[i];
        else if (c == "-1")
            out += "-" + names[i];
        else
            out += c + "*" + names[i];
    }
    return out.empty() ? "0" : out;
}

MultiPoly MultiPoly::constant(int nvars, const GaussianRational& c) {
    MultiPoly p(nvars);
    p.add_term(Exponents(nvars, 0), c);
    return p;
}

MultiPoly MultiPoly::variable(int nvars, int index, int power) {
    MultiPoly p(nvars);
    Exponents e(nvars, 0);
    e[index] = power;
    p.add_term(e, GaussianRational(1));
    return p;
}

MultiPoly MultiPoly::monomial(int nvars, Exponents exps, const GaussianRational& c) {
    MultiPoly p(nvars);
    p.add_term(exps, c);
    return p;
}

MultiPoly MultiPoly::from_linear_form(const LinearForm& f) {
    MultiPoly p(f.nvars());
    for (int i = 0; i < f.nvars(); ++i) {
        if (f[i].is_zero()) continue;
        Exponents e(f.nvars(), 0);
        e[i] = 1;
        p.add_term(e, GaussianRational(f[i]));
    }
    return p;
}

int MultiPoly::total_degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) {
        int t = 0;
        for (int x : e) t += x;
        d = std::max(d, t);
    }
    return d;
}

int MultiPoly::degree_in(int var) const {
    int d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
    return d;
}

GaussianRational MultiPoly::constant_term() const {
    auto it = terms_.find(Exponents(nvars_, 0));
    return it == terms_.end() ? GaussianRational(0) : it->second;
}

void MultiPoly::add_term(const Exponents& exps, const GaussianRational& c) {
    if (static_cast<int>(exps.size()) != nvars_) throw validation_error("exponent arity mismatch");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(exps, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r(nvars_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    if (nvars_ != o.nvars_) throw validation_error("polynomial variable-count mismatch");
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    if (nvars_ != o.nvars_) throw validation_error("polynomial variable-count mismatch");
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    if (a.nvars_ != b.nvars_) throw validation_error("polynomial variable-count mismatch");
    MultiPoly r(a.nvars_);
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            Exponents e(ea);
            for (int i = 0; i < r.nvars_; ++i) e[i] += eb[i];
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

MultiPoly operator*(const GaussianRational& c, const MultiPoly& p) {
    MultiPoly r(p.nvars_);
    if (c.is_zero()) return r;
    for (const auto& [e, pc] : p.terms_) r.terms_.emplace(e, c * pc);
    return r;
}

MultiPoly MultiPoly::pow(int e) const {
    if (e < 0) throw validation_error("negative polynomial power");
    MultiPoly r = constant(nvars_, GaussianRational(1));
    MultiPoly b = *this;
    while (e > 0) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

GaussianRational MultiPoly::eval(const std::vector<GaussianRational>& point) const {
    if (static_cast<int>(point.size()) != nvars_) throw validation_error("evaluation arity mismatch");
    GaussianRational r(0);
    for (const auto& [e, c] : terms_) {
        GaussianRational t = c;
        for (int i = 0; i < nvars_; ++i) {
            if (e[i] != 0) t *= point[i].pow(e[i]);
        }
        r += t;
    }
    return r;
}

MultiPoly MultiPoly::substitute(const std::vector<MultiPoly>& images) const {
    if (static_cast<int>(images.size()) != nvars_) throw validation_error("substitution arity mismatch");
    int target_vars = images.empty() ? 0 : images[0].nvars();
    for (const auto& im : images) {
        if (im.nvars() != target_vars) throw validation_error("substitution images disagree on arity");
    }
    MultiPoly r(target_vars);
    for (const auto& [e, c] : terms_) {
        MultiPoly t = MultiPoly::constant(target_vars, c);
        for (int i = 0; i < nvars_; ++i) {
            if (e[i] != 0) t = t * images[i].pow(e[i]);
        }
        r += t;
    }
    return r;
}

MultiPoly MultiPoly::homogeneous_part(int d) const {
    MultiPoly r(nvars_);
    for (const auto& [e, c] : terms_) {
        int t = 0;
        for (int x : e) t += x;
        if (t == d) r.add_term(e, c);
    }
    return r;
}

std::vector<MultiPoly> MultiPoly::collect(int var) const {
    std::vector<MultiPoly> out(degree_in(var) + 1, MultiPoly(nvars_ - 1));
    for (const auto& [e, c] : terms_) {
        Exponents rest;
        rest.reserve(nvars_ - 1);
        for (int i = 0; i < nvars_; ++i) {
            if (i != var) rest.push_back(e[i]);
        }
        out[e[var]].add_term(rest, c);
    }
    return out;
}

std::string MultiPoly::str(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [e, c] : terms_) {
        std::string mono;
        for (int i = 0; i < nvars_; ++i) {
            if (e[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += names[i];
            if (e[i] > 1) mono += "^" + std::to_string(e[i]);
        }
        std::string cs = c.str();
        std::string term;
        if (mono.empty())
            term = cs;
        else if (cs == "1")
            term = mono;
        else if (cs == "-1")
            term = "-" + mono;
        else if (!c.is_real() && !c.imag().is_zero() && !c.real().is_zero())
            term = "(" + cs + ")*" + mono;
        else
            term = cs + "*" + mono;
        if (!out.empty() && term[0] != '-') out += "+";
        out += term;
    }
    return out;
}

MultiPoly poly_add(const MultiPoly& a, const MultiPoly& b) { return a + b; }
MultiPoly poly_mul(const MultiPoly& a, const MultiPoly& b) { return a * b; }

} // namespace quot
