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

#ifndef QGHA_ALGEBRA_HPP
#define QGHA_ALGEBRA_HPP

#include <map>
#include <memory>
#include <mutex>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "poly.hpp"

namespace qgha {

template <Field F>
class PBWElement;

/// The algebra on x, y, h with hx = x f(h), yh = f(h) y, yx - q xy = g(h).
///
/// Holds the parameters plus two memo tables (compositional powers of f and
/// normal forms of y^b x^c). The memos are filled under a mutex, so a const
/// Algebra may be shared between threads.
template <Field F>
class Algebra {
   public:
    using Element = Elem<F>;
    using PolyT = Poly<F>;

    /// One normal-form monomial x^i s(h) y^j.
    struct Term {
        unsigned i;
        PolyT s;
        unsigned j;
    };

    Algebra(const F& field, Element q, PolyT f, PolyT g, int degree_cap = kDefaultDegreeCap)
        : field_(&field), q_(std::move(q)), f_(std::move(f)), g_(std::move(g)), cap_(degree_cap) {}

    Algebra(const Algebra&) = delete;
    Algebra& operator=(const Algebra&) = delete;

    const F& field() const noexcept { return *field_; }
    const Element& q() const noexcept { return q_; }
    const PolyT& f() const noexcept { return f_; }
    const PolyT& g() const noexcept { return g_; }
    int degree_cap() const noexcept { return cap_; }

    /// f^[k](h).
    PolyT f_power(unsigned k) const {
        std::lock_guard lock(mu_);
        if (f_iter_.empty()) f_iter_.push_back(PolyT::variable(*field_));
        while (f_iter_.size() <= k) f_iter_.push_back(compose(f_, f_iter_.back(), cap_));
        return f_iter_[k];
    }

    /// sigma^k(p) = p(f^[k](h)).
    PolyT sigma(const PolyT& p, unsigned k) const {
        if (k == 0 || p.is_constant()) return p;
        return compose(p, f_power(k), cap_);
    }

    /// Closed form sum_{i<k} q^i sigma^{k-1-i}(g); theta_0 = 0.
    PolyT theta(unsigned k) const {
        PolyT out(*field_);
        Element qi = field_->one();
        for (unsigned i = 0; i < k; ++i) {
            out += sigma(g_, k - 1 - i) * qi;
            qi *= q_;
        }
        return out;
    }

    /// Normal form of y^b x^c, derived only from the three rewriting rules.
    std::shared_ptr<const std::vector<Term>> straighten(unsigned b, unsigned c) const {
        {
            std::lock_guard lock(mu_);
            if (auto it = straight_.find({b, c}); it != straight_.end()) return it->second;
        }
        std::map<std::pair<unsigned, unsigned>, PolyT> acc;
        auto add = [&](unsigned i, const PolyT& s, unsigned j) {
            if (s.is_zero()) return;
            check_degree(s, cap_);
            auto [it, fresh] = acc.try_emplace({i, j}, s);
            if (!fresh) it->second += s;
        };
        const PolyT one = PolyT::constant(*field_, field_->one());
        if (b == 0 || c == 0) {
            add(c, one, b);
        } else if (b == 1) {
            // y x^c = (q x y + g) x^(c-1) = q x (y x^(c-1)) + x^(c-1) sigma^(c-1)(g)
            for (const Term& t : *straighten(1, c - 1)) add(t.i + 1, t.s * q_, t.j);
            add(c - 1, sigma(g_, c - 1), 0);
        } else {
            // y^b x^c = y (y^(b-1) x^c); y x^i s y^j = sum x^i' t sigma^j'(s) y^(j'+j)
            for (const Term& t : *straighten(b - 1, c))
                for (const Term& u : *straighten(1, t.i)) add(u.i, u.s * sigma(t.s, u.j), u.j + t.j);
        }
        auto out = std::make_shared<std::vector<Term>>();
        for (auto& [key, s] : acc)
            if (!s.is_zero()) out->push_back({key.first, std::move(s), key.second});
        std::lock_guard lock(mu_);
        return straight_.try_emplace({b, c}, std::move(out)).first->second;
    }

    PBWElement<F> zero() const;
    PBWElement<F> one() const;
    PBWElement<F> x() const;
    PBWElement<F> y() const;
    PBWElement<F> h() const;
    PBWElement<F> scalar(const Element& c) const;
    PBWElement<F> poly(const PolyT& p) const;
    PBWElement<F> monomial(unsigned i, const PolyT& p, unsigned k) const;

   private:
    const F* field_;
    Element q_;
    PolyT f_, g_;
    int cap_;

    mutable std::mutex mu_;
    mutable std::vector<PolyT> f_iter_;
    mutable std::map<std::pair<unsigned, unsigned>, std::shared_ptr<const std::vector<Term>>> straight_;
};

/// Element in PBW normal form: sum of x^i p_{i,k}(h) y^k with no zero p stored.
template <Field F>
class PBWElement {
   public:
    using Element = Elem<F>;
    using PolyT = Poly<F>;
    using Key = std::pair<unsigned, unsigned>;  // (x-exponent, y-exponent)
    using TermMap = std::map<Key, PolyT>;

    explicit PBWElement(const Algebra<F>& alg) : alg_(&alg) {}

    const Algebra<F>& algebra() const noexcept { return *alg_; }
    const TermMap& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    PolyT coeff(unsigned i, unsigned k) const {
        auto it = terms_.find({i, k});
        return it == terms_.end() ? PolyT(alg_->field()) : it->second;
    }

    /// Adds x^i p y^k.
    void add_term(unsigned i, const PolyT& p, unsigned k) {
        if (p.is_zero()) return;
        auto [it, fresh] = terms_.try_emplace({i, k}, p);
        if (!fresh) {
            it->second += p;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    PBWElement& operator+=(const PBWElement& o) {
        for (const auto& [key, p] : o.terms_) add_term(key.first, p, key.second);
        return *this;
    }
    PBWElement& operator-=(const PBWElement& o) {
        for (const auto& [key, p] : o.terms_) add_term(key.first, -p, key.second);
        return *this;
    }
    PBWElement& operator*=(const Element& s) {
        if (s.is_zero()) {
            terms_.clear();
            return *this;
        }
        for (auto& [key, p] : terms_) p *= s;
        return *this;
    }
    friend PBWElement operator+(PBWElement a, const PBWElement& b) { return a += b; }
    friend PBWElement operator-(PBWElement a, const PBWElement& b) { return a -= b; }
    friend PBWElement operator*(PBWElement a, const Element& s) { return a *= s; }
    friend PBWElement operator*(const Element& s, PBWElement a) { return a *= s; }
    PBWElement operator-() const {
        PBWElement r = *this;
        for (auto& [key, p] : r.terms_) p = -p;
        return r;
    }

    /// (x^a p y^b)(x^c r y^d) = sum over y^b x^c = sum x^i s y^j of
    /// x^(a+i) sigma^i(p) s sigma^j(r) y^(j+d).
    friend PBWElement operator*(const PBWElement& u, const PBWElement& v) {
        const Algebra<F>& alg = *u.alg_;
        const int cap = alg.degree_cap();
        PBWElement out(alg);
        for (const auto& [kl, p] : u.terms_) {
            for (const auto& [kr, r] : v.terms_) {
                const auto terms = alg.straighten(kl.second, kr.first);
                for (const auto& t : *terms) {
                    PolyT s = alg.sigma(p, t.i) * t.s;
                    check_degree(s, cap);
                    s *= alg.sigma(r, t.j);
                    check_degree(s, cap);
                    out.add_term(kl.first + t.i, s, t.j + kr.second);
                }
            }
        }
        return out;
    }
    PBWElement& operator*=(const PBWElement& o) { return *this = *this * o; }

    friend bool operator==(const PBWElement& a, const PBWElement& b) { return a.terms_ == b.terms_; }

   private:
    const Algebra<F>* alg_;
    TermMap terms_;
};

template <Field F>
PBWElement<F> Algebra<F>::zero() const {
    return PBWElement<F>(*this);
}
template <Field F>
PBWElement<F> Algebra<F>::monomial(unsigned i, const PolyT& p, unsigned k) const {
    PBWElement<F> e(*this);
    e.add_term(i, p, k);
    return e;
}
template <Field F>
PBWElement<F> Algebra<F>::scalar(const Element& c) const {
    return monomial(0, PolyT::constant(*field_, c), 0);
}
template <Field F>
PBWElement<F> Algebra<F>::one() const {
    return scalar(field_->one());
}
template <Field F>
PBWElement<F> Algebra<F>::poly(const PolyT& p) const {
    return monomial(0, p, 0);
}
template <Field F>
PBWElement<F> Algebra<F>::x() const {
    return monomial(1, PolyT::constant(*field_, field_->one()), 0);
}
template <Field F>
PBWElement<F> Algebra<F>::y() const {
    return monomial(0, PolyT::constant(*field_, field_->one()), 1);
}
template <Field F>
PBWElement<F> Algebra<F>::h() const {
    return poly(PolyT::variable(*field_));
}

// ---------------------------------------------------------------------------
// Free operations
// ---------------------------------------------------------------------------

template <Field F>
PBWElement<F> multiply(const PBWElement<F>& u, const PBWElement<F>& v) {
    return u * v;
}

template <Field F>
PBWElement<F> power(const PBWElement<F>& u, unsigned e) {
    PBWElement<F> r = u.algebra().one();
    for (unsigned i = 0; i < e; ++i) r = r * u;
    return r;
}

/// uv - vu.
template <Field F>
PBWElement<F> commutator(const PBWElement<F>& u, const PBWElement<F>& v) {
    return u * v - v * u;
}

/// uv - s vu.
template <Field F>
PBWElement<F> q_commutator(const PBWElement<F>& u, const PBWElement<F>& v, const Elem<F>& s) {
    return u * v - (v * u) * s;
}

/// The anti-automorphism fixing h and swapping x and y. On a normal
/// monomial it is exact: iota(x^i p y^k) = x^k p y^i.
template <Field F>
PBWElement<F> iota(const PBWElement<F>& u) {
    PBWElement<F> out(u.algebra());
    for (const auto& [key, p] : u.terms()) out.add_term(key.second, p, key.first);
    return out;
}

/// Components by weight i - k; they sum to u.
template <Field F>
std::map<long, PBWElement<F>> weight_decompose(const PBWElement<F>& u) {
    std::map<long, PBWElement<F>> out;
    for (const auto& [key, p] : u.terms()) {
        const long w = static_cast<long>(key.first) - static_cast<long>(key.second);
        out.try_emplace(w, u.algebra()).first->second.add_term(key.first, p, key.second);
    }
    return out;
}

template <Field F>
std::string to_string(const PBWElement<F>& u) {
    if (u.is_zero()) return "0";
    std::string out;
    for (const auto& [key, p] : u.terms()) {
        std::vector<std::string> parts;
        if (key.first == 1) parts.push_back("x");
        if (key.first > 1) parts.push_back("x^" + std::to_string(key.first));
        std::string ps = to_string(p);
        const bool unit = p.is_constant() && p.leading().is_one();
        if (!(unit && (key.first || key.second))) {
            if (p.is_constant() && ps.find_first_of("+- ") == std::string::npos)
                parts.insert(parts.begin(), ps);
            else {
                if (ps.find(' ') != std::string::npos || (ps[0] == '-' && !parts.empty())) ps = "(" + ps + ")";
                parts.push_back(ps);
            }
        }
        if (key.second == 1) parts.push_back("y");
        if (key.second > 1) parts.push_back("y^" + std::to_string(key.second));
        std::string term;
        for (std::size_t i = 0; i < parts.size(); ++i) term += (i ? "*" : "") + parts[i];
        out += (out.empty() ? "" : " + ") + term;
    }
    return out;
}

template <Field F>
std::ostream& operator<<(std::ostream& os, const PBWElement<F>& u) {
    return os << to_string(u);
}

}  // namespace qgha

#endif
