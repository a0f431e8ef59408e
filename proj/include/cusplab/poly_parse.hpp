#pragma once

#include <cctype>

#include "cusplab/multipoly.hpp"

namespace cusplab {

namespace parse_detail {

// Domain-level symbols usable inside polynomial text (the parameter k when
// coefficients live in Q(k)).
template <typename C>
inline std::optional<C> coeff_symbol(const std::string&) { return std::nullopt; }

template <>
inline std::optional<RatFunc> coeff_symbol<RatFunc>(const std::string& name) {
    if (name == "k") return RatFunc::k();
    return std::nullopt;
}

} // namespace parse_detail

// Grammar (explicit operators only, no implicit multiplication):
//   expr   := ('-')? term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*        division by constants only
//   factor := base ('^' nat)?
//   base   := nat | name | '(' expr ')'
template <typename C>
class PolyParser {
public:
    PolyParser(const std::string& text, RegistryPtr reg)
        : s_(text), pos_(0), reg_(std::move(reg)) {}

    MultiPoly<C> parse() {
        MultiPoly<C> p = expr();
        skip_ws();
        if (pos_ != s_.size()) throw syntax_error("unexpected trailing input", pos_);
        return p;
    }

private:
    void skip_ws() {
        while (pos_ < s_.size() && (s_[pos_] == ' ' || s_[pos_] == '\t' || s_[pos_] == '\n')) ++pos_;
    }
    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }
    bool eat(char c) {
        if (peek() == c) { ++pos_; return true; }
        return false;
    }

    MultiPoly<C> expr() {
        bool neg = eat('-');
        MultiPoly<C> acc = term();
        if (neg) acc = -acc;
        for (;;) {
            char c = peek();
            if (c == '+') { ++pos_; acc += term(); }
            else if (c == '-') { ++pos_; acc -= term(); }
            else break;
        }
        return acc;
    }

    MultiPoly<C> term() {
        MultiPoly<C> acc = factor();
        for (;;) {
            char c = peek();
            if (c == '*') { ++pos_; acc *= factor(); }
            else if (c == '/') {
                std::size_t at = pos_;
                ++pos_;
                MultiPoly<C> d = factor();
                if (d.total_degree() > 0)
                    throw syntax_error("division by a non-constant polynomial", at);
                if (d.is_zero()) throw syntax_error("division by zero", at);
                acc = acc / d;
            } else break;
        }
        return acc;
    }

    MultiPoly<C> factor() {
        MultiPoly<C> b = base();
        if (peek() == '^') {
            ++pos_;
            skip_ws();
            if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
                throw syntax_error("exponent must be a natural number", pos_);
            int e = 0;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
                e = e * 10 + (s_[pos_] - '0');
                if (e > 1000) throw syntax_error("exponent too large", pos_);
                ++pos_;
            }
            return b.pow(e);
        }
        return b;
    }

    MultiPoly<C> base() {
        char c = peek();
        if (c == '(') {
            ++pos_;
            MultiPoly<C> p = expr();
            if (!eat(')')) throw syntax_error("expected ')'", pos_);
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Int n(0);
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
                n = n * 10 + (s_[pos_] - '0');
                ++pos_;
            }
            return MultiPoly<C>::constant(reg_, C(Rat(n)));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t at = pos_;
            std::string name;
            while (pos_ < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) {
                name += s_[pos_];
                ++pos_;
            }
            if (reg_->has(name)) return MultiPoly<C>::variable(reg_, name);
            if (auto sym = parse_detail::coeff_symbol<C>(name))
                return MultiPoly<C>::constant(reg_, *sym);
            throw unknown_variable_error("unknown variable '" + name + "' (at position " +
                                         std::to_string(at) + ")");
        }
        throw syntax_error("expected a number, name or '('", pos_);
    }

    const std::string& s_;
    std::size_t pos_;
    RegistryPtr reg_;
};

template <typename C>
MultiPoly<C> parse_poly(const std::string& text, RegistryPtr reg) {
    return PolyParser<C>(text, std::move(reg)).parse();
}

} // namespace cusplab
