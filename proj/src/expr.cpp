#include "quot/expr.hpp"

#include <cctype>

#include "quot/errors.hpp"

namespace quot {

namespace {

struct Token {
    enum Kind { Number, Ident, Plus, Minus, Star, Caret, LParen, RParen, End } kind;
    std::string text;
};

class Lexer {
public:
    explicit Lexer(const std::string& s) : s_(s) {}

    Token next() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (pos_ >= s_.size()) return {Token::End, ""};
        char c = s_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            // rational literal p/q, both parts plain digit runs
            if (pos_ + 1 < s_.size() && s_[pos_] == '/' && std::isdigit(static_cast<unsigned char>(s_[pos_ + 1]))) {
                ++pos_;
                while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            }
            return {Token::Number, s_.substr(start, pos_ - start)};
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t start = pos_;
            while (pos_ < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
                ++pos_;
            return {Token::Ident, s_.substr(start, pos_ - start)};
        }
        ++pos_;
        switch (c) {
            case '+': return {Token::Plus, "+"};
            case '-': return {Token::Minus, "-"};
            case '*': return {Token::Star, "*"};
            case '^': return {Token::Caret, "^"};
            case '(': return {Token::LParen, "("};
            case ')': return {Token::RParen, ")"};
            default: throw validation_error(std::string("unexpected character '") + c + "' in expression");
        }
    }

private:
    const std::string& s_;
    size_t pos_ = 0;
};

class Parser {
public:
    Parser(const std::string& text, const std::vector<std::string>& gens)
        : lex_(text), gens_(gens), nvars_(static_cast<int>(gens.size())) {
        advance();
    }

    MultiPoly parse() {
        MultiPoly r = expr();
        if (tok_.kind != Token::End) throw validation_error("trailing input in expression: '" + tok_.text + "'");
        return r;
    }

private:
    void advance() { tok_ = lex_.next(); }

    MultiPoly expr() {
        MultiPoly r = term();
        while (tok_.kind == Token::Plus || tok_.kind == Token::Minus) {
            bool minus = tok_.kind == Token::Minus;
            advance();
            MultiPoly t = term();
            r = minus ? r - t : r + t;
        }
        return r;
    }

    MultiPoly term() {
        MultiPoly r = factor();
        while (tok_.kind == Token::Star) {
            advance();
            r = r * factor();
        }
        return r;
    }

    MultiPoly factor() {
        if (tok_.kind == Token::Minus) {
            advance();
            return -factor();
        }
        MultiPoly base = atom();
        if (tok_.kind == Token::Caret) {
            advance();
            if (tok_.kind != Token::Number || tok_.text.find('/') != std::string::npos)
                throw validation_error("exponent must be a nonnegative integer");
            int e = 0;
            try {
                e = std::stoi(tok_.text);
            } catch (const std::exception&) {
                throw validation_error("exponent out of range");
            }
            advance();
            return base.pow(e);
        }
        return base;
    }

    MultiPoly atom() {
        if (tok_.kind == Token::Number) {
            Rational v = Rational::parse(tok_.text);
            advance();
            return MultiPoly::constant(nvars_, GaussianRational(v));
        }
        if (tok_.kind == Token::Ident) {
            int idx = -1;
            for (size_t i = 0; i < gens_.size(); ++i) {
                if (gens_[i] == tok_.text) idx = static_cast<int>(i);
            }
            if (idx < 0)
                throw validation_error("unknown generator '" + tok_.text + "' (model generators: " +
                                       joined() + ")");
            advance();
            return MultiPoly::variable(nvars_, idx);
        }
        if (tok_.kind == Token::LParen) {
            advance();
            MultiPoly r = expr();
            if (tok_.kind != Token::RParen) throw validation_error("missing ')' in expression");
            advance();
            return r;
        }
        throw validation_error("expected a literal, generator or '(' in expression");
    }

    std::string joined() const {
        std::string s;
        for (size_t i = 0; i < gens_.size(); ++i) {
            if (i) s += ", ";
            s += gens_[i];
        }
        return s;
    }

    Lexer lex_;
    const std::vector<std::string>& gens_;
    int nvars_;
    Token tok_;
};

} // namespace

MultiPoly parse_class_expression(const std::string& text, const std::vector<std::string>& generators) {
    return Parser(text, generators).parse();
}

} // namespace quot
