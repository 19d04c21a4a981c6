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

#ifndef QGHA_SPECTRA_HPP
#define QGHA_SPECTRA_HPP

#include <algorithm>
#include <cstdint>
#include <utility>
#include <vector>

#include "algebra.hpp"

namespace qgha {

/// A periodic f-trajectory, stored as one period in canonical rotation.
template <Field F>
struct LambdaOrbit {
    std::vector<Elem<F>> values;

    std::size_t period() const noexcept { return values.size(); }
    const Elem<F>& at(long long i) const {
        const long long l = static_cast<long long>(values.size());
        return values[static_cast<std::size_t>(((i % l) + l) % l)];
    }
    friend bool operator==(const LambdaOrbit&, const LambdaOrbit&) = default;
};

/// mu with mu(i+1) = q mu(i) + g(lambda(i)) and mu(0) = anchor; period 0 means infinite.
template <Field F>
struct MuSeq {
    LambdaOrbit<F> orbit;
    Elem<F> anchor;
    std::uint64_t period = 0;
};

template <Field F>
LambdaOrbit<F> canonical_rotation(std::vector<Elem<F>> values) {
    std::vector<Elem<F>> best = values;
    for (std::size_t s = 1; s < values.size(); ++s) {
        std::rotate(values.begin(), values.begin() + 1, values.end());
        if (values < best) best = values;
    }
    return {std::move(best)};
}

namespace detail {

template <Field F>
void sort_orbits(std::vector<LambdaOrbit<F>>& orbits) {
    std::sort(orbits.begin(), orbits.end(), [](const LambdaOrbit<F>& a, const LambdaOrbit<F>& b) {
        if (a.period() != b.period()) return a.period() < b.period();
        return a.values < b.values;
    });
}

}  // namespace detail

/// Cycles of alpha -> f(alpha) of length at most max_period.
inline std::vector<LambdaOrbit<GaloisField>> enumerate_lambda_orbits(const GaloisField& field,
                                                                     const Poly<GaloisField>& f,
                                                                     std::size_t max_period) {
    const std::size_t n = field.size();
    std::vector<std::uint32_t> next(n);
    for (std::size_t i = 0; i < n; ++i) next[i] = f(field.element_at(i)).index();

    // 0 = unvisited, 1 = on the current path, 2 = done
    std::vector<std::uint8_t> state(n, 0);
    std::vector<LambdaOrbit<GaloisField>> out;
    std::vector<std::uint32_t> path;
    for (std::size_t start = 0; start < n; ++start) {
        if (state[start]) continue;
        path.clear();
        std::uint32_t v = static_cast<std::uint32_t>(start);
        while (state[v] == 0) {
            state[v] = 1;
            path.push_back(v);
            v = next[v];
        }
        if (state[v] == 1) {
            auto it = std::find(path.begin(), path.end(), v);
            const std::size_t len = static_cast<std::size_t>(path.end() - it);
            if (len <= max_period) {
                std::vector<GF> cyc;
                for (; it != path.end(); ++it) cyc.push_back(field.element_at(*it));
                out.push_back(canonical_rotation<GaloisField>(std::move(cyc)));
            }
        }
        for (std::uint32_t p : path) state[p] = 2;
    }
    detail::sort_orbits(out);
    return out;
}

/// Over Q only fixed points (rational roots of f - h) are available.
inline std::vector<LambdaOrbit<RationalField>> enumerate_lambda_orbits(const RationalField& field,
                                                                       const Poly<RationalField>& f,
                                                                       std::size_t max_period) {
    if (max_period != 1)
        throw Error(ErrorCode::UnsupportedField, "over Q only period-1 orbits (rational fixed points) are supported");
    const Poly<RationalField> fixed = f - Poly<RationalField>::variable(field);
    if (fixed.is_zero()) throw Error(ErrorCode::UnsupportedField, "f = h fixes every rational");
    std::vector<LambdaOrbit<RationalField>> out;
    for (const Rational& r : roots_in_field(fixed, field)) out.push_back({{r}});
    return out;
}

/// nu_alpha(0..n): nu(0) = 0, nu(i+1) = q nu(i) + g(f^[i](alpha)).
template <Field F>
std::vector<Elem<F>> nu_table(const Algebra<F>& alg, const Elem<F>& alpha, std::size_t n) {
    std::vector<Elem<F>> out{alg.field().zero()};
    Elem<F> point = alpha;
    for (std::size_t i = 0; i < n; ++i) {
        out.push_back(alg.q() * out.back() + alg.g()(point));
        point = alg.f()(point);
    }
    return out;
}

/// (h-eigenvalue, xy-eigenvalue) of x^k v for a weight vector v with data (alpha, beta).
template <Field F>
std::pair<Elem<F>, Elem<F>> weight_propagation(const Algebra<F>& alg, const Elem<F>& alpha, const Elem<F>& beta,
                                               std::size_t k) {
    Elem<F> point = alpha;
    for (std::size_t i = 0; i < k; ++i) point = alg.f()(point);
    const auto nu = nu_table(alg, alpha, k);
    return {point, power(alg.field(), alg.q(), static_cast<long long>(k)) * beta + nu[k]};
}

/// Sum_{i<l} q^i g(lambda(l-1-i)), which equals nu_{lambda(0)}(l).
template <Field F>
Elem<F> orbit_xi(const Algebra<F>& alg, const LambdaOrbit<F>& orbit) {
    const long long l = static_cast<long long>(orbit.period());
    Elem<F> xi = alg.field().zero();
    Elem<F> qi = alg.field().one();
    for (long long i = 0; i < l; ++i) {
        xi += qi * alg.g()(orbit.at(l - 1 - i));
        qi *= alg.q();
    }
    return xi;
}

template <Field F>
std::uint64_t mu_period(const Algebra<F>& alg, const LambdaOrbit<F>& orbit, const Elem<F>& beta) {
    if (alg.q().is_zero()) throw Error(ErrorCode::QZero, "mu period needs q != 0");
    const F& field = alg.field();
    const Elem<F> Q = power(field, alg.q(), static_cast<long long>(orbit.period()));
    const Elem<F> xi = orbit_xi(alg, orbit);
    if (Q.is_one()) {
        if (xi.is_zero()) return 1;
        return field.characteristic();
    }
    if (beta == xi / (field.one() - Q)) return 1;
    return multiplicative_order(field, Q);
}

template <Field F>
MuSeq<F> make_mu(const Algebra<F>& alg, LambdaOrbit<F> orbit, Elem<F> beta) {
    const std::uint64_t m = mu_period(alg, orbit, beta);
    return {std::move(orbit), std::move(beta), m};
}

/// mu(i) for any integer i; negative indices need q != 0.
template <Field F>
Elem<F> mu_value(const Algebra<F>& alg, const MuSeq<F>& mu, long long i) {
    Elem<F> v = mu.anchor;
    if (i >= 0) {
        for (long long j = 0; j < i; ++j) v = alg.q() * v + alg.g()(mu.orbit.at(j));
        return v;
    }
    if (alg.q().is_zero()) throw Error(ErrorCode::QZero, "mu at a negative index needs q != 0");
    const Elem<F> qinv = alg.q().inverse();
    for (long long j = -1; j >= i; --j) v = qinv * (v - alg.g()(mu.orbit.at(j)));
    return v;
}

}  // namespace qgha

#endif
