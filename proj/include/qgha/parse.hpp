/*
   Copyright 2026 The qgha Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef QGHA_PARSE_HPP
#define QGHA_PARSE_HPP

#include <cctype>
#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>

#include "algebra.hpp"

namespace qgha {

/// Expression tree for the input grammar
///
///   expr    := term (('+' | '-') term)*
///   term    := unary (('*' | '/') unary)*
///   unary   := '-' unary | power
///   power   := primary ('^' integer)?
///   primary := integer | 'h' | 'x' | 'y' | 'u' | '(' expr ')'
///
/// `u` names the generator of GF(p^k) over GF(p). Fractions are plain
/// division, so `2/7` is a literal and `1/2*h` means (1/2)*h.
struct Expr {
    enum class Kind { Number, Symbol, Neg, Add, Sub, Mul, Div, Pow };
    Kind kind;
    std::size_t offset;
    std::string text;  // digits for Number, the symbol for Symbol
    unsigned exponent = 0;
    std::unique_ptr<Expr> lhs, rhs;
};

namespace detail {

class ExprParser {
   public:
    explicit ExprParser(std::string_view s) : s_(s) {}

    std::unique_ptr<Expr> parse() {
        auto e = expr();
        skip();
        if (pos_ != s_.size()) throw SyntaxError(pos_, std::string("unexpected '") + s_[pos_] + "'");
        return e;
    }

   private:
    static constexpr unsigned kMaxExponent = 100000;

    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool eat(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    static std::unique_ptr<Expr> node(Expr::Kind k, std::size_t at, std::unique_ptr<Expr> l = nullptr,
                                      std::unique_ptr<Expr> r = nullptr) {
        auto e = std::make_unique<Expr>();
        e->kind = k;
        e->offset = at;
        e->lhs = std::move(l);
        e->rhs = std::move(r);
        return e;
    }

    std::unique_ptr<Expr> expr() {
        auto lhs = term();
        for (;;) {
            skip();
            const std::size_t at = pos_;
            if (eat('+'))
                lhs = node(Expr::Kind::Add, at, std::move(lhs), term());
            else if (eat('-'))
                lhs = node(Expr::Kind::Sub, at, std::move(lhs), term());
            else
                return lhs;
        }
    }
    std::unique_ptr<Expr> term() {
        auto lhs = unary();
        for (;;) {
            skip();
            const std::size_t at = pos_;
            if (eat('*'))
                lhs = node(Expr::Kind::Mul, at, std::move(lhs), unary());
            else if (eat('/'))
                lhs = node(Expr::Kind::Div, at, std::move(lhs), unary());
            else
                return lhs;
        }
    }
    std::unique_ptr<Expr> unary() {
        skip();
        const std::size_t at = pos_;
        if (eat('-')) return node(Expr::Kind::Neg, at, unary());
        return power();
    }
    std::unique_ptr<Expr> power() {
        auto base = primary();
        skip();
        const std::size_t at = pos_;
        if (!eat('^')) return base;
        if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
            throw SyntaxError(pos_, "expected exponent");
        unsigned long e = 0;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            e = e * 10 + static_cast<unsigned long>(s_[pos_++] - '0');
            if (e > kMaxExponent) throw SyntaxError(at, "exponent too large");
        }
        auto n = node(Expr::Kind::Pow, at, std::move(base));
        n->exponent = static_cast<unsigned>(e);
        return n;
    }
    std::unique_ptr<Expr> primary() {
        skip();
        const std::size_t at = pos_;
        if (pos_ >= s_.size()) throw SyntaxError(pos_, "unexpected end of input");
        const char c = s_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            auto n = node(Expr::Kind::Number, at);
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) n->text += s_[pos_++];
            return n;
        }
        if (c == 'h' || c == 'x' || c == 'y' || c == 'u') {
            ++pos_;
            auto n = node(Expr::Kind::Symbol, at);
            n->text = std::string(1, c);
            return n;
        }
        if (c == '(') {
            ++pos_;
            auto e = expr();
            if (!eat(')')) throw SyntaxError(pos_, "expected ')'");
            return e;
        }
        throw SyntaxError(pos_, std::string("unexpected '") + c + "'");
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

template <Field F>
Elem<F> decimal(const F& field, const std::string& digits) {
    Elem<F> v = field.zero();
    const Elem<F> ten = field.from_int(10);
    for (char d : digits) v = v * ten + field.from_int(d - '0');
    return v;
}

/// Evaluates an expression tree in a ring described by V. V provides
/// constant(Elem), symbol(char, offset), and as_constant(value) returning
/// an optional scalar for division.
template <class V, class Value>
Value evaluate(const Expr& e, const V& ring) {
    switch (e.kind) {
        case Expr::Kind::Number: return ring.constant(decimal(ring.field(), e.text));
        case Expr::Kind::Symbol: return ring.symbol(e.text[0], e.offset);
        case Expr::Kind::Neg: return -evaluate<V, Value>(*e.lhs, ring);
        case Expr::Kind::Add: return evaluate<V, Value>(*e.lhs, ring) + evaluate<V, Value>(*e.rhs, ring);
        case Expr::Kind::Sub: return evaluate<V, Value>(*e.lhs, ring) - evaluate<V, Value>(*e.rhs, ring);
        case Expr::Kind::Mul: return evaluate<V, Value>(*e.lhs, ring) * evaluate<V, Value>(*e.rhs, ring);
        case Expr::Kind::Div: {
            auto d = ring.as_constant(evaluate<V, Value>(*e.rhs, ring));
            if (!d) throw SyntaxError(e.offset, "divisor must be a constant");
            if (d->is_zero()) throw SyntaxError(e.offset, "division by zero");
            return evaluate<V, Value>(*e.lhs, ring) * d->inverse();
        }
        case Expr::Kind::Pow: {
            const Value base = evaluate<V, Value>(*e.lhs, ring);
            Value r = ring.constant(ring.field().one());
            for (unsigned i = 0; i < e.exponent; ++i) r = r * base;
            return r;
        }
    }
    throw SyntaxError(e.offset, "bad expression");
}

template <Field F>
struct PolyRing {
    const F* f;
    int cap;
    const F& field() const { return *f; }
    Poly<F> constant(const Elem<F>& c) const { return Poly<F>::constant(*f, c); }
    Poly<F> symbol(char c, std::size_t at) const {
        if (c == 'h') return Poly<F>::variable(*f);
        if (c == 'u') {
            if (!f->has_generator()) throw SyntaxError(at, "'u' is only defined in GF(p^k), k > 1");
            return constant(f->generator());
        }
        throw SyntaxError(at, std::string("'") + c + "' is not allowed in a polynomial in h");
    }
    std::optional<Elem<F>> as_constant(const Poly<F>& p) const {
        if (!p.is_constant()) return std::nullopt;
        return p.coeff(0);
    }
};

template <Field F>
struct PBWRing {
    const Algebra<F>* alg;
    const F& field() const { return alg->field(); }
    PBWElement<F> constant(const Elem<F>& c) const { return alg->scalar(c); }
    PBWElement<F> symbol(char c, std::size_t at) const {
        switch (c) {
            case 'x': return alg->x();
            case 'y': return alg->y();
            case 'h': return alg->h();
            default:
                if (!field().has_generator()) throw SyntaxError(at, "'u' is only defined in GF(p^k), k > 1");
                return alg->scalar(field().generator());
        }
    }
    std::optional<Elem<F>> as_constant(const PBWElement<F>& e) const {
        if (e.is_zero()) return field().zero();
        if (e.terms().size() != 1) return std::nullopt;
        const auto& [key, p] = *e.terms().begin();
        if (key.first || key.second || !p.is_constant()) return std::nullopt;
        return p.coeff(0);
    }
};

}  // namespace detail

inline std::unique_ptr<Expr> parse_expr(std::string_view text) { return detail::ExprParser(text).parse(); }

/// Parses a polynomial in h over the given field.
template <Field F>
Poly<F> parse_poly(std::string_view text, const F& field) {
    auto e = parse_expr(text);
    return detail::evaluate<detail::PolyRing<F>, Poly<F>>(*e, detail::PolyRing<F>{&field, kDefaultDegreeCap});
}

/// Parses a noncommutative expression in x, y, h and reduces it to normal form.
template <Field F>
PBWElement<F> parse_element(std::string_view text, const Algebra<F>& alg) {
    auto e = parse_expr(text);
    return detail::evaluate<detail::PBWRing<F>, PBWElement<F>>(*e, detail::PBWRing<F>{&alg});
}

/// Parses a single scalar (e.g. `3`, `-2/7`, `u^2+1`).
template <Field F>
Elem<F> parse_scalar(std::string_view text, const F& field) {
    const Poly<F> p = parse_poly(text, field);
    if (!p.is_constant()) throw SyntaxError(0, "expected a scalar, got a polynomial in h");
    return p.coeff(0);
}

}  // namespace qgha

#endif
