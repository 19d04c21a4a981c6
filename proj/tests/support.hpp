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

#ifndef QGHA_TESTS_SUPPORT_HPP
#define QGHA_TESTS_SUPPORT_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include <qgha/qgha.hpp>

namespace qgha::check {

// ---------------------------------------------------------------------------
// Generators
// ---------------------------------------------------------------------------

inline GF random_scalar(const GaloisField& field, std::mt19937_64& rng) {
    return field.element_at(std::uniform_int_distribution<std::uint64_t>(0, field.size() - 1)(rng));
}

inline Rational random_scalar(const RationalField&, std::mt19937_64& rng) {
    const long num = std::uniform_int_distribution<long>(-6, 6)(rng);
    const long den = std::uniform_int_distribution<long>(1, 3)(rng);
    return Rational(mpz_class(num), mpz_class(den));
}

template <Field F>
Elem<F> random_nonzero(const F& field, std::mt19937_64& rng) {
    for (;;) {
        Elem<F> e = random_scalar(field, rng);
        if (!e.is_zero()) return e;
    }
}

template <Field F>
Poly<F> random_poly(const F& field, int max_degree, std::mt19937_64& rng) {
    std::vector<Elem<F>> c;
    for (int i = 0; i <= max_degree; ++i) c.push_back(random_scalar(field, rng));
    return Poly<F>(field, std::move(c));
}

template <Field F>
PBWElement<F> random_element(const Algebra<F>& alg, unsigned max_exp, int max_h, std::size_t max_terms,
                             std::mt19937_64& rng) {
    PBWElement<F> out(alg);
    const std::size_t terms = std::uniform_int_distribution<std::size_t>(1, max_terms)(rng);
    std::uniform_int_distribution<unsigned> exp(0, max_exp);
    for (std::size_t t = 0; t < terms; ++t) {
        const unsigned i = exp(rng), k = exp(rng);
        out.add_term(i, random_poly(alg.field(), max_h, rng), k);
    }
    return out;
}

/// One algebra together with the field that owns its scalars.
template <Field F>
struct Instance {
    std::unique_ptr<F> field;
    std::unique_ptr<Algebra<F>> alg;
    std::string label;
};

inline Instance<RationalField> rational_instance(const std::string& q, const std::string& f, const std::string& g) {
    auto field = std::make_unique<RationalField>();
    auto alg = std::make_unique<Algebra<RationalField>>(*field, parse_scalar(q, *field), parse_poly(f, *field),
                                                        parse_poly(g, *field));
    return {std::move(field), std::move(alg), "Q q=" + q + " f=" + f + " g=" + g};
}

inline Instance<GaloisField> galois_instance(const std::string& spec, const std::string& q, const std::string& f,
                                             const std::string& g) {
    auto field = std::make_unique<GaloisField>(parse_field_spec(spec));
    auto alg = std::make_unique<Algebra<GaloisField>>(*field, parse_scalar(q, *field), parse_poly(f, *field),
                                                      parse_poly(g, *field));
    return {std::move(field), std::move(alg), spec + " q=" + q + " f=" + f + " g=" + g};
}

// ---------------------------------------------------------------------------
// Word rewriting oracle for products
// ---------------------------------------------------------------------------

/// Linear combinations of words in x, y, h reduced by the three rewrite
/// rules hx -> x f(h), yh -> f(h) y, yx -> q xy + g(h), always at the
/// leftmost redex. Shares nothing with the memoized straightening engine.
template <Field F>
class WordOracle {
   public:
    using Word = std::string;
    using Combo = std::map<Word, Elem<F>>;

    WordOracle(const F& field, Elem<F> q, Poly<F> f, Poly<F> g)
        : field_(&field), q_(std::move(q)), f_(std::move(f)), g_(std::move(g)) {}

    Combo from_pbw(const PBWElement<F>& u) const {
        Combo out;
        for (const auto& [key, p] : u.terms())
            for (int j = 0; j <= p.degree(); ++j)
                add(out, std::string(key.first, 'x') + std::string(static_cast<std::size_t>(j), 'h') +
                             std::string(key.second, 'y'),
                    p.coeff(j));
        return out;
    }

    Combo multiply(const Combo& a, const Combo& b) const {
        Combo raw;
        for (const auto& [wa, ca] : a)
            for (const auto& [wb, cb] : b) add(raw, wa + wb, ca * cb);
        return normalize(raw);
    }

    Combo normalize(Combo pending) const {
        Combo done;
        while (!pending.empty()) {
            auto it = pending.begin();
            const Word w = it->first;
            const Elem<F> c = it->second;
            pending.erase(it);
            std::size_t at = std::string::npos;
            for (std::size_t i = 0; i + 1 < w.size(); ++i) {
                const std::string pair = w.substr(i, 2);
                if (pair == "hx" || pair == "yh" || pair == "yx") {
                    at = i;
                    break;
                }
            }
            if (at == std::string::npos) {
                add(done, w, c);
                continue;
            }
            const Word pre = w.substr(0, at), post = w.substr(at + 2);
            const std::string pair = w.substr(at, 2);
            if (pair == "hx") {
                for (int j = 0; j <= f_.degree(); ++j)
                    add(pending, pre + "x" + std::string(static_cast<std::size_t>(j), 'h') + post, c * f_.coeff(j));
            } else if (pair == "yh") {
                for (int j = 0; j <= f_.degree(); ++j)
                    add(pending, pre + std::string(static_cast<std::size_t>(j), 'h') + "y" + post, c * f_.coeff(j));
            } else {
                add(pending, pre + "xy" + post, c * q_);
                for (int j = 0; j <= g_.degree(); ++j)
                    add(pending, pre + std::string(static_cast<std::size_t>(j), 'h') + post, c * g_.coeff(j));
            }
        }
        return done;
    }

   private:
    static void add(Combo& m, const Word& w, const Elem<F>& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = m.emplace(w, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) m.erase(it);
        }
    }

    const F* field_;
    Elem<F> q_;
    Poly<F> f_, g_;
};

// ---------------------------------------------------------------------------
// Spectral oracles
// ---------------------------------------------------------------------------

/// nu_alpha(i) as the literal sum over j < i of q^j g(f^[i-1-j](alpha)).
template <Field F>
Elem<F> nu_direct(const Algebra<F>& alg, const Elem<F>& alpha, std::size_t i) {
    const F& field = alg.field();
    Elem<F> total = field.zero();
    for (std::size_t j = 0; j < i; ++j) {
        Elem<F> point = alpha;
        for (std::size_t s = 0; s + 1 + j < i; ++s) point = alg.f()(point);
        total += power(field, alg.q(), static_cast<long long>(j)) * alg.g()(point);
    }
    return total;
}

/// Period of mu by running the recurrence until the state (index mod l, value)
/// returns to its start. Works because q != 0 makes every step a bijection.
inline std::uint64_t mu_period_by_iteration(const Algebra<GaloisField>& alg, const LambdaOrbit<GaloisField>& orbit,
                                            const GF& beta) {
    const std::size_t l = orbit.period();
    const std::uint64_t limit = alg.field().size() * l + 1;
    GF v = beta;
    for (std::uint64_t j = 1; j <= limit; ++j) {
        v = alg.q() * v + alg.g()(orbit.at(static_cast<long long>(j - 1)));
        if (j % l == 0 && v == beta) return j / l;
    }
    return 0;
}

/// Minimal period of alpha under f, or 0 when alpha is not periodic.
inline std::size_t periodic_length(const GaloisField& field, const Poly<GaloisField>& f, const GF& alpha) {
    GF v = f(alpha);
    for (std::size_t len = 1; len <= field.size(); ++len, v = f(v))
        if (v == alpha) return len;
    return 0;
}

/// Every scalar triple (h, x, y) acting on a line.
struct Triple {
    GF h, x, y;
    friend auto operator<=>(const Triple&, const Triple&) = default;
};

inline std::vector<Triple> one_dim_reps(const Algebra<GaloisField>& alg) {
    std::vector<Triple> out;
    const auto elements = all_elements(alg.field());
    for (const GF& h : elements)
        for (const GF& x : elements)
            for (const GF& y : elements) {
                const GF fh = alg.f()(h);
                if (!(h * x == x * fh)) continue;
                if (!(y * h == fh * y)) continue;
                if (!(y * x - alg.q() * x * y == alg.g()(h))) continue;
                out.push_back({h, x, y});
            }
    return out;
}

}  // namespace qgha::check

#endif
