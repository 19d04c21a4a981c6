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

#ifndef QGHA_POLY_HPP
#define QGHA_POLY_HPP

#include <algorithm>
#include <cstdlib>
#include <ostream>
#include <set>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "scalars.hpp"

namespace qgha {

/// Default cap on the h-degree of any intermediate polynomial.
inline constexpr int kDefaultDegreeCap = 512;

/// Univariate polynomial in h, coefficients indexed by degree. Trailing
/// zeros are always stripped, so the zero polynomial has no coefficients
/// and degree -1.
template <Field F>
class Poly {
   public:
    using Element = Elem<F>;

    explicit Poly(const F& field) : field_(&field) {}
    Poly(const F& field, std::vector<Element> coeffs) : field_(&field), c_(std::move(coeffs)) { trim(); }

    static Poly constant(const F& field, Element c) { return Poly(field, {std::move(c)}); }
    static Poly monomial(const F& field, Element c, int degree) {
        std::vector<Element> v(static_cast<std::size_t>(degree) + 1, field.zero());
        v.back() = std::move(c);
        return Poly(field, std::move(v));
    }
    static Poly variable(const F& field) { return monomial(field, field.one(), 1); }

    const F& field() const noexcept { return *field_; }
    const std::vector<Element>& coeffs() const noexcept { return c_; }
    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const noexcept { return c_.empty(); }
    bool is_constant() const noexcept { return c_.size() <= 1; }
    Element coeff(int i) const {
        return i >= 0 && i < static_cast<int>(c_.size()) ? c_[static_cast<std::size_t>(i)] : field_->zero();
    }
    Element leading() const { return c_.empty() ? field_->zero() : c_.back(); }

    Element operator()(const Element& a) const {
        Element r = field_->zero();
        for (std::size_t i = c_.size(); i-- > 0;) r = r * a + c_[i];
        return r;
    }

    Poly& operator+=(const Poly& o) {
        if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), field_->zero());
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        trim();
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), field_->zero());
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
        trim();
        return *this;
    }
    Poly& operator*=(const Element& s) {
        if (s.is_zero()) {
            c_.clear();
            return *this;
        }
        for (auto& c : c_) c *= s;
        return *this;
    }
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(Poly a, const Element& s) { return a *= s; }
    friend Poly operator*(const Element& s, Poly a) { return a *= s; }
    Poly operator-() const {
        Poly r = *this;
        for (auto& c : r.c_) c = -c;
        return r;
    }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly(*a.field_);
        std::vector<Element> r(a.c_.size() + b.c_.size() - 1, a.field_->zero());
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i].is_zero()) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
        }
        return Poly(*a.field_, std::move(r));
    }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

    /// Lexicographic on (degree, coefficients from the top) for canonical ordering.
    friend bool operator<(const Poly& a, const Poly& b) {
        if (a.c_.size() != b.c_.size()) return a.c_.size() < b.c_.size();
        for (std::size_t i = a.c_.size(); i-- > 0;)
            if (!(a.c_[i] == b.c_[i])) return a.c_[i] < b.c_[i];
        return false;
    }

   private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    const F* field_;
    std::vector<Element> c_;
};

template <Field F>
void check_degree(const Poly<F>& p, int cap) {
    if (p.degree() > cap)
        throw Error(ErrorCode::DegreeOverflow,
                    "h-degree " + std::to_string(p.degree()) + " exceeds cap " + std::to_string(cap));
}

/// p(r(h)).
template <Field F>
Poly<F> compose(const Poly<F>& p, const Poly<F>& r, int cap = kDefaultDegreeCap) {
    if (p.is_constant()) return p;
    if (r.degree() > 0 && static_cast<long>(p.degree()) * r.degree() > cap)
        throw Error(ErrorCode::DegreeOverflow, "composition degree exceeds cap " + std::to_string(cap));
    Poly<F> out(p.field());
    for (int i = p.degree(); i >= 0; --i) out = out * r + Poly<F>::constant(p.field(), p.coeff(i));
    return out;
}

/// f^[k](h), the k-fold compositional power of f; f^[0] = h.
template <Field F>
Poly<F> compositional_power(const Poly<F>& f, int k, int cap = kDefaultDegreeCap) {
    Poly<F> out = Poly<F>::variable(f.field());
    for (int i = 0; i < k; ++i) out = compose(f, out, cap);
    return out;
}

/// sigma^k(p) = p(f^[k](h)).
template <Field F>
Poly<F> sigma_power(const Poly<F>& p, int k, const Poly<F>& f, int cap = kDefaultDegreeCap) {
    if (k == 0 || p.is_constant()) return p;
    return compose(p, compositional_power(f, k, cap), cap);
}

/// Quotient and remainder; b must be nonzero.
template <Field F>
std::pair<Poly<F>, Poly<F>> divmod(const Poly<F>& a, const Poly<F>& b) {
    if (b.is_zero()) throw Error(ErrorCode::DivisionByZero, "polynomial division by 0");
    const F& field = a.field();
    Poly<F> rem = a;
    std::vector<Elem<F>> quot(static_cast<std::size_t>(std::max(0, a.degree() - b.degree() + 1)), field.zero());
    const Elem<F> inv = b.leading().inverse();
    while (!rem.is_zero() && rem.degree() >= b.degree()) {
        const int shift = rem.degree() - b.degree();
        const Elem<F> c = rem.leading() * inv;
        quot[static_cast<std::size_t>(shift)] = c;
        rem -= Poly<F>::monomial(field, c, shift) * b;
    }
    return {Poly<F>(field, std::move(quot)), rem};
}

/// Renders as e.g. `h^2 - 1/2*h + 3`; the output re-parses to the same polynomial.
template <Field F>
std::string to_string(const Poly<F>& p) {
    if (p.is_zero()) return "0";
    const F& field = p.field();
    std::string out;
    for (int i = p.degree(); i >= 0; --i) {
        Elem<F> c = p.coeff(i);
        if (c.is_zero()) continue;
        bool negative = false;
        if constexpr (std::is_same_v<Elem<F>, Rational>) {
            if (sgn(c.value()) < 0) {
                negative = true;
                c = -c;
            }
        }
        if (out.empty())
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        std::string cs = field.format(c);
        if (cs.find_first_of("+-") != std::string::npos) cs = "(" + cs + ")";
        if (i == 0) {
            out += cs;
            continue;
        }
        if (!c.is_one()) out += cs + "*";
        out += "h";
        if (i > 1) out += "^" + std::to_string(i);
    }
    return out;
}

template <Field F>
std::ostream& operator<<(std::ostream& os, const Poly<F>& p) {
    return os << to_string(p);
}

// ---------------------------------------------------------------------------
// Roots
// ---------------------------------------------------------------------------

/// Exhaustive evaluation over every field element.
inline std::vector<GF> roots_in_field(const Poly<GaloisField>& p, const GaloisField& field) {
    if (p.is_zero()) throw Error(ErrorCode::ZeroArgument, "roots of the zero polynomial");
    std::vector<GF> out;
    for (std::uint64_t i = 0; i < field.size(); ++i) {
        GF a = field.element_at(i);
        if (p(a).is_zero()) out.push_back(a);
    }
    return out;
}

namespace detail {

/// Positive divisors of |n|; refuses numbers whose trial division is too costly.
inline std::vector<mpz_class> divisors(mpz_class n) {
    n = abs(n);
    static const mpz_class kLimit("100000000000000");
    if (n > kLimit) throw Error(ErrorCode::UnsupportedField, "coefficient too large for rational root search");
    std::uint64_t v = n.get_ui();
    std::vector<mpz_class> small, large;
    for (std::uint64_t d = 1; d * d <= v; ++d) {
        if (v % d == 0) {
            small.emplace_back(static_cast<unsigned long>(d));
            if (d * d != v) large.emplace_back(static_cast<unsigned long>(v / d));
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

}  // namespace detail

/// Rational roots only, found by the rational root theorem, sorted ascending.
inline std::vector<Rational> roots_in_field(const Poly<RationalField>& p, const RationalField&) {
    if (p.is_zero()) throw Error(ErrorCode::ZeroArgument, "roots of the zero polynomial");
    mpz_class lcm_den = 1;
    for (const auto& c : p.coeffs()) lcm_den = lcm(lcm_den, c.value().get_den());
    std::vector<mpz_class> ints;
    for (const auto& c : p.coeffs()) ints.push_back(c.value().get_num() * (lcm_den / c.value().get_den()));
    std::set<Rational> found;
    std::size_t low = 0;
    while (low < ints.size() && ints[low] == 0) ++low;
    if (low > 0) found.insert(Rational(0));
    if (ints.size() - low > 1) {
        for (const auto& a : detail::divisors(ints[low])) {
            for (const auto& b : detail::divisors(ints.back())) {
                for (int sign : {1, -1}) {
                    Rational r(mpz_class(a * sign), b);
                    if (p(r).is_zero()) found.insert(r);
                }
            }
        }
    }
    return {found.begin(), found.end()};
}

}  // namespace qgha

#endif
