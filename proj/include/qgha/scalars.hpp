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

#ifndef QGHA_SCALARS_HPP
#define QGHA_SCALARS_HPP

#include <gmpxx.h>

#include <algorithm>
#include <cctype>
#include <compare>
#include <concepts>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "error.hpp"

namespace qgha {

/// Largest extension degree a GaloisField accepts unless told otherwise.
inline constexpr unsigned kDefaultExtensionBound = 6;

// ---------------------------------------------------------------------------
// Integer helpers
// ---------------------------------------------------------------------------

namespace detail {

__extension__ using uint128 = unsigned __int128;

inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<uint128>(a) * b % m);
}

inline std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mul_mod(r, a, m);
        a = mul_mod(a, a, m);
        e >>= 1;
    }
    return r;
}

inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

/// Distinct prime factors in increasing order (trial division).
inline std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

inline std::uint64_t ipow(std::uint64_t b, unsigned e) {
    std::uint64_t r = 1;
    while (e--) r *= b;
    return r;
}

// Dense polynomials over GF(p), low degree first, no trailing zeros.
using ModPoly = std::vector<std::uint64_t>;

inline void mp_trim(ModPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

inline ModPoly mp_mul(const ModPoly& a, const ModPoly& b, std::uint64_t p) {
    if (a.empty() || b.empty()) return {};
    ModPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + mul_mod(a[i], b[j], p)) % p;
    mp_trim(r);
    return r;
}

inline ModPoly mp_sub(ModPoly a, const ModPoly& b, std::uint64_t p) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + p - b[i]) % p;
    mp_trim(a);
    return a;
}

inline ModPoly mp_mod(ModPoly a, const ModPoly& m, std::uint64_t p) {
    const std::uint64_t inv = pow_mod(m.back(), p - 2, p);
    while (a.size() >= m.size()) {
        const std::uint64_t c = mul_mod(a.back(), inv, p);
        const std::size_t shift = a.size() - m.size();
        for (std::size_t i = 0; i < m.size(); ++i)
            a[shift + i] = (a[shift + i] + p - mul_mod(c, m[i], p)) % p;
        mp_trim(a);
    }
    return a;
}

inline ModPoly mp_gcd(ModPoly a, ModPoly b, std::uint64_t p) {
    while (!b.empty()) {
        ModPoly r = mp_mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

inline ModPoly mp_powmod(ModPoly base, std::uint64_t e, const ModPoly& m, std::uint64_t p) {
    ModPoly r{1};
    base = mp_mod(std::move(base), m, p);
    while (e) {
        if (e & 1) r = mp_mod(mp_mul(r, base, p), m, p);
        base = mp_mod(mp_mul(base, base, p), m, p);
        e >>= 1;
    }
    return r;
}

/// Ben-Or: m of degree k is irreducible iff gcd(u^(p^i) - u, m) = 1 for i <= k/2.
inline bool mp_irreducible(const ModPoly& m, std::uint64_t p) {
    const std::size_t k = m.size() - 1;
    if (k == 0) return false;
    if (k == 1) return true;
    ModPoly power{0, 1};
    for (std::size_t i = 1; i <= k / 2; ++i) {
        power = mp_powmod(power, p, m, p);
        ModPoly g = mp_gcd(m, mp_sub(power, ModPoly{0, 1}, p), p);
        if (g.size() > 1) return false;
    }
    return true;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// FieldSpec
// ---------------------------------------------------------------------------

struct FieldSpec {
    enum class Kind { Rationals, PrimeField, ExtensionField };

    Kind kind = Kind::Rationals;
    std::uint64_t characteristic = 0;
    unsigned degree = 1;
    /// Monic modulus, low degree first; only for ExtensionField.
    std::vector<std::uint64_t> modulus;

    static FieldSpec rationals() { return {}; }
    static FieldSpec prime(std::uint64_t p) { return {Kind::PrimeField, p, 1, {}}; }
    static FieldSpec extension(std::uint64_t p, unsigned k, std::vector<std::uint64_t> mod = {}) {
        return {k == 1 ? Kind::PrimeField : Kind::ExtensionField, p, k, std::move(mod)};
    }

    bool is_finite() const noexcept { return kind != Kind::Rationals; }

    friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

namespace detail {

inline std::string format_mod_poly(const ModPoly& c, char var) {
    std::string out;
    for (std::size_t i = c.size(); i-- > 0;) {
        if (c[i] == 0) continue;
        if (!out.empty()) out += '+';
        if (i == 0) {
            out += std::to_string(c[i]);
            continue;
        }
        if (c[i] != 1) out += std::to_string(c[i]) + "*";
        out += var;
        if (i > 1) out += "^" + std::to_string(i);
    }
    return out.empty() ? "0" : out;
}

/// Parses sums of terms `c*u^e` with integer c reduced mod p.
inline ModPoly parse_mod_poly(std::string_view text, std::uint64_t p, char var) {
    ModPoly out;
    std::size_t pos = 0;
    auto skip = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    auto number = [&]() -> std::uint64_t {
        skip();
        if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
            throw SyntaxError(pos, "expected integer");
        std::uint64_t v = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
            v = (v * 10 + static_cast<std::uint64_t>(text[pos++] - '0')) % p;
        return v;
    };
    bool first = true;
    for (;;) {
        skip();
        if (pos >= text.size()) {
            if (first) throw SyntaxError(pos, "empty polynomial");
            break;
        }
        bool neg = false;
        if (text[pos] == '+' || text[pos] == '-') {
            neg = text[pos] == '-';
            ++pos;
        } else if (!first) {
            throw SyntaxError(pos, "expected '+' or '-'");
        }
        first = false;
        skip();
        std::uint64_t coeff = 1;
        std::size_t exponent = 0;
        if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            coeff = number();
            skip();
            if (pos < text.size() && text[pos] == '*') {
                ++pos;
                skip();
                if (pos >= text.size() || text[pos] != var) throw SyntaxError(pos, "expected variable");
            }
        }
        if (pos < text.size() && text[pos] == var) {
            ++pos;
            exponent = 1;
            skip();
            if (pos < text.size() && text[pos] == '^') {
                ++pos;
                skip();
                const std::size_t at = pos;
                std::size_t e = 0;
                if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
                    throw SyntaxError(at, "expected exponent");
                while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
                    e = e * 10 + static_cast<std::size_t>(text[pos++] - '0');
                exponent = e;
            }
        }
        if (out.size() <= exponent) out.resize(exponent + 1, 0);
        const std::uint64_t c = neg ? (p - coeff) % p : coeff;
        out[exponent] = (out[exponent] + c) % p;
    }
    mp_trim(out);
    return out;
}

}  // namespace detail

inline std::string to_string(const FieldSpec& spec) {
    switch (spec.kind) {
        case FieldSpec::Kind::Rationals: return "Q";
        case FieldSpec::Kind::PrimeField: return "GF(" + std::to_string(spec.characteristic) + ")";
        case FieldSpec::Kind::ExtensionField:
            return "GF(" + std::to_string(spec.characteristic) + "^" + std::to_string(spec.degree) +
                   ");mod=" + detail::format_mod_poly(spec.modulus, 'u');
    }
    return "?";
}

/// Accepts `Q`, `GF(p)`, `GF(p^k)`, `GF(n)` for a prime power n, with an
/// optional `mod=<poly in u>` separated by whitespace, ',' or ';'.
inline FieldSpec parse_field_spec(std::string_view text) {
    auto trim = [](std::string_view s) {
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
        return s;
    };
    std::string_view head = trim(text);
    std::string_view mod_text;
    if (auto at = head.find("mod="); at != std::string_view::npos) {
        mod_text = head.substr(at + 4);
        head = head.substr(0, at);
        head = trim(head);
        while (!head.empty() && (head.back() == ',' || head.back() == ';')) head.remove_suffix(1);
        head = trim(head);
    }
    if (head == "Q" || head == "QQ") {
        if (!mod_text.empty()) throw Error(ErrorCode::InvalidField, "mod= is only valid for GF(p^k)");
        return FieldSpec::rationals();
    }
    if (head.size() < 5 || head.substr(0, 3) != "GF(" || head.back() != ')')
        throw SyntaxError(0, "field must be Q, GF(p) or GF(p^k)");
    std::string_view inner = head.substr(3, head.size() - 4);
    auto read_uint = [&](std::string_view s, std::size_t base_offset) {
        s = trim(s);
        if (s.empty()) throw SyntaxError(base_offset, "expected integer");
        std::uint64_t v = 0;
        for (std::size_t i = 0; i < s.size(); ++i) {
            if (!std::isdigit(static_cast<unsigned char>(s[i]))) throw SyntaxError(base_offset + i, "expected digit");
            v = v * 10 + static_cast<std::uint64_t>(s[i] - '0');
            if (v > (std::uint64_t{1} << 40)) throw Error(ErrorCode::UnsupportedField, "field too large");
        }
        return v;
    };
    std::uint64_t p = 0;
    unsigned k = 1;
    if (auto caret = inner.find('^'); caret != std::string_view::npos) {
        p = read_uint(inner.substr(0, caret), 3);
        k = static_cast<unsigned>(read_uint(inner.substr(caret + 1), 4 + caret));
    } else {
        std::uint64_t n = read_uint(inner, 3);
        auto factors = detail::prime_factors(n);
        if (factors.size() != 1) throw Error(ErrorCode::InvalidField, "GF(n) requires a prime power n");
        p = factors[0];
        k = 0;
        while (n > 1) {
            n /= p;
            ++k;
        }
    }
    if (!detail::is_prime(p)) throw Error(ErrorCode::InvalidField, std::to_string(p) + " is not prime");
    if (k == 0) throw Error(ErrorCode::InvalidField, "extension degree must be positive");
    FieldSpec spec = FieldSpec::extension(p, k);
    if (!mod_text.empty()) {
        if (k == 1) throw Error(ErrorCode::InvalidField, "mod= is only valid for GF(p^k), k > 1");
        spec.modulus = detail::parse_mod_poly(mod_text, p, 'u');
    }
    return spec;
}

// ---------------------------------------------------------------------------
// Rationals
// ---------------------------------------------------------------------------

class RationalField;

/// Exact rational; canonical because mpq_class keeps fractions reduced.
class Rational {
   public:
    Rational() = default;
    Rational(long v) : v_(v) {}
    explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }
    Rational(const mpz_class& num, const mpz_class& den) : v_(num, den) {
        if (den == 0) throw Error(ErrorCode::DivisionByZero, "zero denominator");
        v_.canonicalize();
    }

    const mpq_class& value() const noexcept { return v_; }
    bool is_zero() const noexcept { return sgn(v_) == 0; }
    bool is_one() const noexcept { return v_ == 1; }

    Rational inverse() const {
        if (is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of 0");
        return Rational(mpq_class(1) / v_);
    }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw Error(ErrorCode::DivisionByZero, "division by 0");
        v_ /= o.v_;
        return *this;
    }
    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    Rational operator-() const { return Rational(mpq_class(-v_)); }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
    }

    std::string to_string() const { return v_.get_str(); }

   private:
    mpq_class v_;
};

class RationalField {
   public:
    using Element = Rational;

    Element zero() const { return Rational(0); }
    Element one() const { return Rational(1); }
    Element from_int(long v) const { return Rational(v); }

    bool is_finite() const noexcept { return false; }
    std::uint64_t characteristic() const noexcept { return 0; }
    std::uint64_t size() const noexcept { return 0; }
    FieldSpec spec() const { return FieldSpec::rationals(); }

    std::string format(const Element& e) const { return e.to_string(); }
    /// Rationals have no generator symbol.
    bool has_generator() const noexcept { return false; }
    Element generator() const { throw Error(ErrorCode::UnsupportedField, "Q has no generator u"); }
};

// ---------------------------------------------------------------------------
// Finite fields
// ---------------------------------------------------------------------------

class GaloisField;

/// Element of GF(p^k). The value packs the coefficients of the residue
/// polynomial in u as base-p digits, least significant first. A default
/// constructed element is an unbound zero that adopts the field of the
/// other operand.
class GF {
   public:
    GF() = default;
    GF(const GaloisField* field, std::uint32_t value) : field_(field), v_(value) {}

    const GaloisField* field() const noexcept { return field_; }
    std::uint32_t index() const noexcept { return v_; }
    bool is_zero() const noexcept { return v_ == 0; }
    bool is_one() const noexcept { return v_ == 1; }

    GF inverse() const;
    GF& operator+=(const GF& o);
    GF& operator-=(const GF& o);
    GF& operator*=(const GF& o);
    GF& operator/=(const GF& o);
    friend GF operator+(GF a, const GF& b) { return a += b; }
    friend GF operator-(GF a, const GF& b) { return a -= b; }
    friend GF operator*(GF a, const GF& b) { return a *= b; }
    friend GF operator/(GF a, const GF& b) { return a /= b; }
    GF operator-() const;

    friend bool operator==(const GF& a, const GF& b) noexcept { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const GF& a, const GF& b) noexcept { return a.v_ <=> b.v_; }

    std::string to_string() const;

   private:
    const GaloisField* bind(const GF& o) const;

    const GaloisField* field_ = nullptr;
    std::uint32_t v_ = 0;
};

/// GF(p^k) context. Prime fields use modular arithmetic directly; proper
/// extensions multiply through discrete log tables.
class GaloisField {
   public:
    using Element = GF;

    static constexpr std::uint64_t kMaxSize = std::uint64_t{1} << 22;

    explicit GaloisField(const FieldSpec& spec, unsigned extension_bound = kDefaultExtensionBound)
        : p_(spec.characteristic), k_(spec.degree), modulus_(spec.modulus) {
        if (!spec.is_finite()) throw Error(ErrorCode::InvalidField, "GaloisField needs a finite field spec");
        if (!detail::is_prime(p_)) throw Error(ErrorCode::InvalidField, std::to_string(p_) + " is not prime");
        if (k_ == 0) throw Error(ErrorCode::InvalidField, "extension degree must be positive");
        if (k_ > extension_bound)
            throw Error(ErrorCode::ExtensionBoundExceeded,
                        "degree " + std::to_string(k_) + " exceeds extension bound " + std::to_string(extension_bound));
        if (k_ == 1) {
            if (p_ >= (std::uint64_t{1} << 31)) throw Error(ErrorCode::UnsupportedField, "prime too large");
            size_ = p_;
            modulus_.clear();
            return;
        }
        size_ = 1;
        for (unsigned i = 0; i < k_; ++i) {
            size_ *= p_;
            if (size_ > kMaxSize) throw Error(ErrorCode::UnsupportedField, "field has more than 2^22 elements");
        }
        if (modulus_.empty()) {
            modulus_ = find_modulus();
        } else {
            if (modulus_.size() != k_ + 1 || modulus_.back() != 1)
                throw Error(ErrorCode::InvalidField, "modulus must be monic of degree " + std::to_string(k_));
            if (!detail::mp_irreducible(modulus_, p_))
                throw Error(ErrorCode::InvalidField, "modulus is reducible over GF(" + std::to_string(p_) + ")");
        }
        build_tables();
    }

    GaloisField(const GaloisField&) = delete;
    GaloisField& operator=(const GaloisField&) = delete;

    Element zero() const { return GF(this, 0); }
    Element one() const { return GF(this, 1); }
    Element from_int(long v) const {
        long r = v % static_cast<long>(p_);
        if (r < 0) r += static_cast<long>(p_);
        return GF(this, static_cast<std::uint32_t>(r));
    }
    Element element_at(std::uint64_t index) const { return GF(this, static_cast<std::uint32_t>(index)); }

    bool is_finite() const noexcept { return true; }
    std::uint64_t characteristic() const noexcept { return p_; }
    unsigned degree() const noexcept { return k_; }
    std::uint64_t size() const noexcept { return size_; }
    const std::vector<std::uint64_t>& modulus() const noexcept { return modulus_; }
    FieldSpec spec() const { return FieldSpec::extension(p_, k_, k_ == 1 ? std::vector<std::uint64_t>{} : modulus_); }

    bool has_generator() const noexcept { return k_ > 1; }
    /// The class of u in GF(p)[u]/(modulus).
    Element generator() const {
        if (k_ == 1) throw Error(ErrorCode::UnsupportedField, "prime field has no generator u");
        return GF(this, static_cast<std::uint32_t>(p_));
    }

    std::string format(const Element& e) const {
        if (k_ == 1) return std::to_string(e.index());
        return detail::format_mod_poly(digits(e.index()), 'u');
    }

    // Raw arithmetic on packed values.
    std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
        if (k_ == 1) return static_cast<std::uint32_t>((std::uint64_t{a} + b) % p_);
        std::uint64_t r = 0, scale = 1;
        for (unsigned i = 0; i < k_; ++i) {
            r += ((a % p_ + b % p_) % p_) * scale;
            a = static_cast<std::uint32_t>(a / p_);
            b = static_cast<std::uint32_t>(b / p_);
            scale *= p_;
        }
        return static_cast<std::uint32_t>(r);
    }
    std::uint32_t neg(std::uint32_t a) const {
        if (k_ == 1) return static_cast<std::uint32_t>((p_ - a) % p_);
        std::uint64_t r = 0, scale = 1;
        for (unsigned i = 0; i < k_; ++i) {
            r += ((p_ - a % p_) % p_) * scale;
            a = static_cast<std::uint32_t>(a / p_);
            scale *= p_;
        }
        return static_cast<std::uint32_t>(r);
    }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
        if (a == 0 || b == 0) return 0;
        if (k_ == 1) return static_cast<std::uint32_t>(detail::mul_mod(a, b, p_));
        std::uint64_t l = std::uint64_t{log_[a]} + log_[b];
        if (l >= size_ - 1) l -= size_ - 1;
        return exp_[l];
    }
    std::uint32_t inv(std::uint32_t a) const {
        if (a == 0) throw Error(ErrorCode::DivisionByZero, "inverse of 0");
        if (k_ == 1) return static_cast<std::uint32_t>(detail::pow_mod(a, p_ - 2, p_));
        return exp_[(size_ - 1 - log_[a]) % (size_ - 1)];
    }

   private:
    detail::ModPoly digits(std::uint64_t v) const {
        detail::ModPoly d;
        for (unsigned i = 0; i < k_; ++i) {
            d.push_back(v % p_);
            v /= p_;
        }
        detail::mp_trim(d);
        return d;
    }
    std::uint64_t pack(const detail::ModPoly& d) const {
        std::uint64_t r = 0;
        for (std::size_t i = d.size(); i-- > 0;) r = r * p_ + d[i];
        return r;
    }

    /// First monic irreducible of degree k in the order of packed coefficients.
    detail::ModPoly find_modulus() const {
        const std::uint64_t count = detail::ipow(p_, k_);
        for (std::uint64_t low = 0; low < count; ++low) {
            detail::ModPoly m = digits(low);
            m.resize(k_ + 1, 0);
            m[k_] = 1;
            if (m[0] == 0) continue;
            if (detail::mp_irreducible(m, p_)) return m;
        }
        throw Error(ErrorCode::InvalidField, "no irreducible modulus found");
    }

    void build_tables() {
        const std::uint64_t order = size_ - 1;
        const auto factors = detail::prime_factors(order);
        detail::ModPoly gen;
        for (std::uint64_t cand = 2; cand < size_; ++cand) {
            detail::ModPoly c = digits(cand);
            bool primitive = true;
            for (std::uint64_t r : factors) {
                if (detail::mp_powmod(c, order / r, modulus_, p_) == detail::ModPoly{1}) {
                    primitive = false;
                    break;
                }
            }
            if (primitive) {
                gen = c;
                break;
            }
        }
        exp_.assign(order, 0);
        log_.assign(size_, 0);
        detail::ModPoly cur{1};
        for (std::uint64_t i = 0; i < order; ++i) {
            const auto v = static_cast<std::uint32_t>(pack(cur));
            exp_[i] = v;
            log_[v] = static_cast<std::uint32_t>(i);
            cur = detail::mp_mod(detail::mp_mul(cur, gen, p_), modulus_, p_);
        }
    }

    std::uint64_t p_;
    unsigned k_;
    std::uint64_t size_ = 0;
    std::vector<std::uint64_t> modulus_;
    std::vector<std::uint32_t> exp_;
    std::vector<std::uint32_t> log_;
};

inline const GaloisField* GF::bind(const GF& o) const {
    if (field_ && o.field_ && field_ != o.field_) {
        if (!(field_->spec() == o.field_->spec()))
            throw Error(ErrorCode::FieldMismatch, "operands live in different fields");
    }
    return field_ ? field_ : o.field_;
}

inline GF& GF::operator+=(const GF& o) {
    field_ = bind(o);
    if (field_) v_ = field_->add(v_, o.v_);
    return *this;
}
inline GF& GF::operator-=(const GF& o) {
    field_ = bind(o);
    if (field_) v_ = field_->add(v_, field_->neg(o.v_));
    return *this;
}
inline GF& GF::operator*=(const GF& o) {
    field_ = bind(o);
    if (field_) v_ = field_->mul(v_, o.v_);
    return *this;
}
inline GF& GF::operator/=(const GF& o) {
    field_ = bind(o);
    if (o.v_ == 0) throw Error(ErrorCode::DivisionByZero, "division by 0");
    v_ = field_->mul(v_, field_->inv(o.v_));
    return *this;
}
inline GF GF::operator-() const { return field_ ? GF(field_, field_->neg(v_)) : *this; }
inline GF GF::inverse() const {
    if (v_ == 0) throw Error(ErrorCode::DivisionByZero, "inverse of 0");
    return GF(field_, field_->inv(v_));
}
inline std::string GF::to_string() const { return field_ ? field_->format(*this) : "0"; }

// ---------------------------------------------------------------------------
// Generic scalar operations
// ---------------------------------------------------------------------------

/// A field context: hands out constants and formats its elements.
template <class F>
concept Field = requires(const F& f, const typename F::Element& a, long n) {
    { f.zero() } -> std::same_as<typename F::Element>;
    { f.one() } -> std::same_as<typename F::Element>;
    { f.from_int(n) } -> std::same_as<typename F::Element>;
    { f.is_finite() } -> std::convertible_to<bool>;
    { f.characteristic() } -> std::convertible_to<std::uint64_t>;
    { f.format(a) } -> std::convertible_to<std::string>;
    { a + a } -> std::same_as<typename F::Element>;
    { a * a } -> std::same_as<typename F::Element>;
    { a.is_zero() } -> std::convertible_to<bool>;
    { a.inverse() } -> std::same_as<typename F::Element>;
};

template <class F>
using Elem = typename F::Element;

template <Field F>
Elem<F> power(const F& field, Elem<F> base, long long e) {
    if (e < 0) {
        base = base.inverse();
        e = -e;
    }
    Elem<F> r = field.one();
    while (e) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

/// Every element of a finite field, in canonical order.
inline std::vector<GF> all_elements(const GaloisField& field) {
    std::vector<GF> out;
    out.reserve(field.size());
    for (std::uint64_t i = 0; i < field.size(); ++i) out.push_back(field.element_at(i));
    return out;
}

/// Least l >= 1 with a^l = 1, or 0 when a has infinite order.
inline std::uint64_t multiplicative_order(const RationalField&, const Rational& a) {
    if (a.is_zero()) throw Error(ErrorCode::ZeroArgument, "order of 0");
    if (a.value() == 1) return 1;
    if (a.value() == -1) return 2;
    return 0;
}

inline std::uint64_t multiplicative_order(const GaloisField& field, const GF& a) {
    if (a.is_zero()) throw Error(ErrorCode::ZeroArgument, "order of 0");
    std::uint64_t order = field.size() - 1;
    for (std::uint64_t r : detail::prime_factors(order)) {
        while (order % r == 0 && power(field, a, static_cast<long long>(order / r)).is_one()) order /= r;
    }
    return order;
}

}  // namespace qgha

#endif
