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

#ifndef QGHA_REPCORE_HPP
#define QGHA_REPCORE_HPP

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <type_traits>
#include <vector>

#include "algebra.hpp"
#include "linalg.hpp"
#include "spectra.hpp"

namespace qgha {

enum class Family { A, B, C };

inline const char* to_string(Family f) {
    switch (f) {
        case Family::A: return "A";
        case Family::B: return "B";
        case Family::C: return "C";
    }
    return "?";
}

/// Data of one finite-dimensional simple module. Families A and B use mu
/// (with its lambda orbit) and gamma; family C uses alpha and n.
template <Field F>
struct ModuleSpec {
    Family family = Family::A;
    std::optional<MuSeq<F>> mu;
    Elem<F> gamma{};
    Elem<F> alpha{};
    std::size_t n = 0;

    std::size_t dim() const {
        if (family == Family::C) return n;
        return mu->orbit.period() * static_cast<std::size_t>(mu->period);
    }
};

template <Field F>
struct MatrixRep {
    Matrix<F> X, Y, H;
    std::size_t dim() const { return X.rows(); }
};

template <Field F>
struct RelationReport {
    Matrix<F> hx, yh, yx;  // HX - X f(H), YH - f(H) Y, YX - qXY - g(H)
    bool ok() const { return hx.is_zero() && yh.is_zero() && yx.is_zero(); }
};

struct SimplicityCertificate {
    bool simple = true;
    std::optional<std::size_t> vanishing_index;  // family C: first i with nu_alpha(i) = 0
    std::string reason;
};

enum class IsoVerdict { Isomorphic, NotIsomorphic, Inconclusive };

inline const char* to_string(IsoVerdict v) {
    switch (v) {
        case IsoVerdict::Isomorphic: return "isomorphic";
        case IsoVerdict::NotIsomorphic: return "not-isomorphic";
        case IsoVerdict::Inconclusive: return "inconclusive";
    }
    return "?";
}

inline constexpr std::uint64_t kDefaultSearchBound = 1000000;
inline constexpr std::uint64_t kDefaultScanBound = 10000;

/// The f-trajectory starting at alpha, if it returns to alpha.
template <Field F>
LambdaOrbit<F> orbit_from(const Algebra<F>& alg, const Elem<F>& alpha, std::size_t max_period = 4096) {
    std::vector<Elem<F>> values{alpha};
    Elem<F> v = alg.f()(alpha);
    while (!(v == alpha)) {
        if (values.size() >= max_period)
            throw Error(ErrorCode::InvalidSpec, "f-trajectory of " + alg.field().format(alpha) + " is not periodic");
        values.push_back(v);
        v = alg.f()(v);
    }
    return {std::move(values)};
}

template <Field F>
ModuleSpec<F> make_ab_spec(const Algebra<F>& alg, Family family, const Elem<F>& alpha, const Elem<F>& beta,
                           const Elem<F>& gamma) {
    ModuleSpec<F> s;
    s.family = family;
    s.mu = make_mu(alg, orbit_from(alg, alpha), beta);
    s.gamma = gamma;
    return s;
}

template <Field F>
ModuleSpec<F> make_c_spec(const Elem<F>& alpha, std::size_t n) {
    ModuleSpec<F> s;
    s.family = Family::C;
    s.alpha = alpha;
    s.n = n;
    return s;
}

template <Field F>
void validate_spec(const Algebra<F>& alg, const ModuleSpec<F>& s) {
    if (s.family == Family::C) {
        if (s.n == 0) throw Error(ErrorCode::InvalidSpec, "family C needs n >= 1");
        if (!nu_table(alg, s.alpha, s.n)[s.n].is_zero())
            throw Error(ErrorCode::InvalidSpec, "family C needs nu_alpha(n) = 0");
        return;
    }
    if (!s.mu) throw Error(ErrorCode::InvalidSpec, "families A and B need mu data");
    const auto& orbit = s.mu->orbit;
    if (orbit.period() == 0) throw Error(ErrorCode::InvalidSpec, "empty lambda orbit");
    for (std::size_t i = 0; i < orbit.period(); ++i)
        if (!(alg.f()(orbit.values[i]) == orbit.at(static_cast<long long>(i) + 1)))
            throw Error(ErrorCode::InvalidSpec, "lambda is not an f-trajectory");
    if (s.mu->period == 0) throw Error(ErrorCode::InvalidSpec, "mu has infinite period");
    if (s.mu->period != mu_period(alg, orbit, s.mu->anchor))
        throw Error(ErrorCode::InvalidSpec, "stored mu period is wrong");
    if (s.gamma.is_zero()) throw Error(ErrorCode::InvalidSpec, "gamma must be nonzero");
}

template <Field F>
MatrixRep<F> build_matrix_rep(const Algebra<F>& alg, const ModuleSpec<F>& s) {
    validate_spec(alg, s);
    const F& field = alg.field();
    const std::size_t n = s.dim();
    MatrixRep<F> r{Matrix<F>(field, n, n), Matrix<F>(field, n, n), Matrix<F>(field, n, n)};
    if (s.family == Family::C) {
        const auto nu = nu_table(alg, s.alpha, n);
        Elem<F> point = s.alpha;
        for (std::size_t i = 0; i < n; ++i) {
            if (i + 1 < n) r.X(i + 1, i) = field.one();
            if (i > 0) r.Y(i - 1, i) = nu[i];
            r.H(i, i) = point;
            point = alg.f()(point);
        }
        return r;
    }
    std::vector<Elem<F>> mu;
    for (std::size_t j = 0; j < n; ++j) mu.push_back(mu_value(alg, *s.mu, static_cast<long long>(j)));
    const Elem<F> ginv = s.gamma.inverse();
    for (std::size_t j = 0; j < n; ++j) r.H(j, j) = s.mu->orbit.at(static_cast<long long>(j));
    if (s.family == Family::A) {
        for (std::size_t j = 0; j + 1 < n; ++j) r.X(j + 1, j) = field.one();
        r.X(0, n - 1) += s.gamma;
        for (std::size_t j = 1; j < n; ++j) r.Y(j - 1, j) = mu[j];
        r.Y(n - 1, 0) += mu[0] * ginv;
    } else {
        for (std::size_t j = 0; j + 1 < n; ++j) r.X(j + 1, j) = mu[j + 1];
        r.X(0, n - 1) += mu[0] * s.gamma;
        for (std::size_t j = 1; j < n; ++j) r.Y(j - 1, j) = field.one();
        r.Y(n - 1, 0) += ginv;
    }
    return r;
}

template <Field F>
RelationReport<F> verify_relations(const Algebra<F>& alg, const MatrixRep<F>& r) {
    const Matrix<F> fH = evaluate(alg.f(), r.H);
    return {r.H * r.X - r.X * fH, r.Y * r.H - fH * r.Y, r.Y * r.X - (r.X * r.Y) * alg.q() - evaluate(alg.g(), r.H)};
}

template <Field F>
SimplicityCertificate is_simple_structural(const Algebra<F>& alg, const ModuleSpec<F>& s) {
    validate_spec(alg, s);
    if (s.family != Family::C)
        return {true, std::nullopt, "lambda and mu periodic with gamma nonzero"};
    const auto nu = nu_table(alg, s.alpha, s.n);
    for (std::size_t i = 1; i < s.n; ++i)
        if (nu[i].is_zero())
            return {false, i, "nu_alpha(" + std::to_string(i) + ") = 0 spans a proper submodule"};
    return {true, std::nullopt, "nu_alpha(i) != 0 for 0 < i < n"};
}

namespace detail {

template <Field F>
std::size_t closure_dim(const MatrixRep<F>& r, std::vector<Elem<F>> v) {
    const std::size_t n = r.dim();
    Matrix<F> span(r.X.field(), 0, n);
    std::vector<std::vector<Elem<F>>> basis, queue{std::move(v)};
    while (!queue.empty() && basis.size() < n) {
        auto w = std::move(queue.back());
        queue.pop_back();
        Matrix<F> m(r.X.field(), basis.size() + 1, n);
        for (std::size_t i = 0; i < basis.size(); ++i)
            for (std::size_t c = 0; c < n; ++c) m(i, c) = basis[i][c];
        for (std::size_t c = 0; c < n; ++c) m(basis.size(), c) = w[c];
        if (rank(m) == basis.size()) continue;
        basis.push_back(w);
        queue.push_back(r.X.apply(w));
        queue.push_back(r.Y.apply(w));
        queue.push_back(r.H.apply(w));
    }
    return basis.size();
}

}  // namespace detail

/// Closes every projective point under X, Y, H.
inline bool is_simple_bruteforce(const MatrixRep<GaloisField>& r, std::uint64_t bound = kDefaultSearchBound) {
    const GaloisField& field = r.X.field();
    const std::size_t n = r.dim();
    if (n == 0) return false;
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < n; ++i) {
        total *= field.size();
        if (total > bound)
            throw Error(ErrorCode::SearchSpaceTooLarge,
                        "|F|^n exceeds the search bound " + std::to_string(bound));
    }
    const std::uint64_t q = field.size();
    for (std::size_t lead = 0; lead < n; ++lead) {
        std::uint64_t tail = 1;
        for (std::size_t i = lead + 1; i < n; ++i) tail *= q;
        for (std::uint64_t code = 0; code < tail; ++code) {
            std::vector<GF> v(n, field.zero());
            v[lead] = field.one();
            std::uint64_t c = code;
            for (std::size_t i = lead + 1; i < n; ++i, c /= q) v[i] = field.element_at(c % q);
            if (detail::closure_dim(r, std::move(v)) < n) return false;
        }
    }
    return true;
}

template <Field F>
bool iso_structural(const Algebra<F>& alg, const ModuleSpec<F>& s1, const ModuleSpec<F>& s2) {
    if (s1.dim() != s2.dim()) return false;
    if (s1.family == Family::C || s2.family == Family::C)
        return s1.family == s2.family && s1.alpha == s2.alpha;
    const auto& m1 = *s1.mu;
    const auto& m2 = *s2.mu;
    if (m1.orbit.period() != m2.orbit.period() || m1.period != m2.period) return false;
    const std::size_t n = s1.dim();

    if (s1.family != s2.family) {
        // x^n acts on A by gamma_A and on B by gamma_B * prod mu(j)
        const ModuleSpec<F>& b = s1.family == Family::B ? s1 : s2;
        const ModuleSpec<F>& a = s1.family == Family::B ? s2 : s1;
        Elem<F> prod = alg.field().one();
        for (std::size_t j = 0; j < n; ++j) prod *= mu_value(alg, *b.mu, static_cast<long long>(j));
        if (!(a.gamma == b.gamma * prod)) return false;
    } else if (!(s1.gamma == s2.gamma)) {
        return false;
    }

    std::vector<Elem<F>> mu1, mu2;
    for (std::size_t j = 0; j < 2 * n; ++j) mu1.push_back(mu_value(alg, m1, static_cast<long long>(j)));
    for (std::size_t j = 0; j < n; ++j) mu2.push_back(mu_value(alg, m2, static_cast<long long>(j)));
    for (std::size_t s = 0; s < n; ++s) {
        bool match = true;
        for (std::size_t k = 0; k < n && match; ++k)
            match = m2.orbit.at(static_cast<long long>(k)) == m1.orbit.at(static_cast<long long>(k + s)) &&
                    mu2[k] == mu1[k + s];
        if (match) return true;
    }
    return false;
}

namespace detail {

/// Basis of {T : T X1 = X2 T, T Y1 = Y2 T, T H1 = H2 T}, each as an n x n matrix.
template <Field F>
std::vector<Matrix<F>> intertwiners(const MatrixRep<F>& r1, const MatrixRep<F>& r2) {
    const F& field = r1.X.field();
    const std::size_t n = r1.dim();
    Matrix<F> m(field, 3 * n * n, n * n);
    const Matrix<F>* left[3] = {&r1.X, &r1.Y, &r1.H};
    const Matrix<F>* right[3] = {&r2.X, &r2.Y, &r2.H};
    // (T A)(i,j) - (B T)(i,j) with T(a,b) at column a*n+b
    for (std::size_t g = 0; g < 3; ++g)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                const std::size_t row = g * n * n + i * n + j;
                for (std::size_t k = 0; k < n; ++k) {
                    m(row, i * n + k) += (*left[g])(k, j);
                    m(row, k * n + j) -= (*right[g])(i, k);
                }
            }
    std::vector<Matrix<F>> out;
    for (const auto& v : nullspace(m)) {
        Matrix<F> t(field, n, n);
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b) t(a, b) = v[a * n + b];
        out.push_back(std::move(t));
    }
    return out;
}

template <Field F>
Matrix<F> combine(const std::vector<Matrix<F>>& basis, const std::vector<Elem<F>>& c) {
    Matrix<F> t = basis[0] * c[0];
    for (std::size_t i = 1; i < basis.size(); ++i) t += basis[i] * c[i];
    return t;
}

inline GF random_element(const GaloisField& field, std::mt19937_64& rng) {
    return field.element_at(std::uniform_int_distribution<std::uint64_t>(0, field.size() - 1)(rng));
}

inline Rational random_element(const RationalField&, std::mt19937_64& rng) {
    return Rational(std::uniform_int_distribution<long>(-50, 50)(rng));
}

}  // namespace detail

/// Searches the intertwiner space for an invertible element. Small spaces
/// over finite fields are scanned completely; otherwise random combinations
/// are tried and a miss is reported as Inconclusive.
template <Field F>
IsoVerdict iso_bruteforce(const MatrixRep<F>& r1, const MatrixRep<F>& r2, std::uint64_t scan_bound = kDefaultScanBound,
                          std::size_t samples = 2000, std::uint64_t seed = 1) {
    if (r1.dim() != r2.dim()) return IsoVerdict::NotIsomorphic;
    const F& field = r1.X.field();
    const auto basis = detail::intertwiners(r1, r2);
    const std::size_t d = basis.size();
    if (d == 0) return IsoVerdict::NotIsomorphic;
    if (d == 1) return is_invertible(basis[0]) ? IsoVerdict::Isomorphic : IsoVerdict::NotIsomorphic;

    if constexpr (std::is_same_v<F, GaloisField>) {
        std::uint64_t total = 1;
        bool small = true;
        for (std::size_t i = 0; i < d && small; ++i) {
            total *= field.size();
            small = total <= scan_bound;
        }
        if (small) {
            const std::uint64_t q = field.size();
            for (std::uint64_t code = 1; code < total; ++code) {
                std::vector<GF> c(d);
                std::uint64_t x = code;
                for (std::size_t i = 0; i < d; ++i, x /= q) c[i] = field.element_at(x % q);
                if (is_invertible(detail::combine(basis, c))) return IsoVerdict::Isomorphic;
            }
            return IsoVerdict::NotIsomorphic;
        }
    }
    std::mt19937_64 rng(seed);
    for (std::size_t s = 0; s < samples; ++s) {
        std::vector<Elem<F>> c;
        for (std::size_t i = 0; i < d; ++i) c.push_back(detail::random_element(field, rng));
        if (is_invertible(detail::combine(basis, c))) return IsoVerdict::Isomorphic;
    }
    return IsoVerdict::Inconclusive;
}

/// One representative per isomorphism class of n-dimensional simple modules
/// whose eigen-data lies in the field: A, then B, then C.
inline std::vector<ModuleSpec<GaloisField>> enumerate_simples(const Algebra<GaloisField>& alg, std::size_t n) {
    using F = GaloisField;
    if (alg.q().is_zero()) throw Error(ErrorCode::QZero, "classification needs q != 0");
    if (n == 0) throw Error(ErrorCode::InvalidSpec, "dimension must be positive");
    const F& field = alg.field();
    const auto elements = all_elements(field);

    std::vector<ModuleSpec<F>> fam_a, fam_b, fam_c;
    for (const auto& orbit : enumerate_lambda_orbits(field, alg.f(), n)) {
        const std::size_t l = orbit.period();
        if (n % l != 0) continue;
        const std::uint64_t m = n / l;
        for (const GF& beta : elements) {
            if (mu_period(alg, orbit, beta) != m) continue;
            MuSeq<F> mu{orbit, beta, m};
            // shifts by multiples of l keep lambda fixed; keep the least anchor
            bool least = true, has_zero = false;
            for (std::uint64_t j = 0; j < n; ++j) {
                const GF v = mu_value(alg, mu, static_cast<long long>(j));
                if (j % l == 0 && v < beta) least = false;
                if (v.is_zero()) has_zero = true;
            }
            if (!least) continue;
            for (const GF& gamma : elements) {
                if (gamma.is_zero()) continue;
                ModuleSpec<F> s;
                s.family = Family::A;
                s.mu = mu;
                s.gamma = gamma;
                fam_a.push_back(s);
                if (has_zero) {
                    s.family = Family::B;
                    fam_b.push_back(s);
                }
            }
        }
    }
    for (const GF& alpha : elements) {
        const auto nu = nu_table(alg, alpha, n);
        bool ok = nu[n].is_zero();
        for (std::size_t i = 1; i < n && ok; ++i) ok = !nu[i].is_zero();
        if (ok) fam_c.push_back(make_c_spec<F>(alpha, n));
    }
    std::vector<ModuleSpec<F>> out = std::move(fam_a);
    out.insert(out.end(), fam_b.begin(), fam_b.end());
    out.insert(out.end(), fam_c.begin(), fam_c.end());
    return out;
}

}  // namespace qgha

#endif
