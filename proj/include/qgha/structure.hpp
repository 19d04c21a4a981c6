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

#ifndef QGHA_STRUCTURE_HPP
#define QGHA_STRUCTURE_HPP

#include <algorithm>
#include <optional>
#include <vector>

#include "algebra.hpp"
#include "linalg.hpp"

namespace qgha {

/// g = sigma(a) - q a together with the normal element Z = q(xy - a).
template <Field F>
struct ConformalWitness {
    Poly<F> a;
    PBWElement<F> Z;
};

/// Residuals of hZ = Zh, Zx = qxZ, yZ = qZy; all zero for a genuine witness.
template <Field F>
struct ZRelationReport {
    PBWElement<F> h_residual;
    PBWElement<F> x_residual;
    PBWElement<F> y_residual;

    bool ok() const { return h_residual.is_zero() && x_residual.is_zero() && y_residual.is_zero(); }
};

template <Field F>
struct ZeroDivisorWitness {
    PBWElement<F> left;
    PBWElement<F> right;
};

template <Field F>
struct DomainReport {
    bool is_domain;
    std::optional<ZeroDivisorWitness<F>> witness;
};

/// Z = q(xy - a).
template <Field F>
PBWElement<F> normal_element(const Algebra<F>& alg, const Poly<F>& a) {
    return (alg.x() * alg.y() - alg.poly(a)) * alg.q();
}

/// Solves sigma(a) - q a = g over polynomials of bounded degree; nullopt
/// when no solution exists. Free coefficients are set to zero, so the
/// returned a has the lowest-degree support the solver allows.
template <Field F>
std::optional<ConformalWitness<F>> conformal_witness(const Algebra<F>& alg) {
    const F& field = alg.field();
    const int dg = std::max(alg.g().degree(), 0);
    const int df = alg.f().degree();
    const int bound = std::max(dg, df > 0 ? dg / df + 1 : 0) + 2;

    std::vector<Poly<F>> images;
    int rows = dg + 1;
    for (int d = 0; d <= bound; ++d) {
        const Poly<F> hd = Poly<F>::monomial(field, field.one(), d);
        images.push_back(alg.sigma(hd, 1) - hd * alg.q());
        rows = std::max(rows, images.back().degree() + 1);
    }
    Matrix<F> m(field, static_cast<std::size_t>(rows), images.size());
    for (std::size_t c = 0; c < images.size(); ++c)
        for (int r = 0; r <= images[c].degree(); ++r) m(static_cast<std::size_t>(r), c) = images[c].coeff(r);
    std::vector<Elem<F>> rhs(static_cast<std::size_t>(rows), field.zero());
    for (int r = 0; r <= alg.g().degree(); ++r) rhs[static_cast<std::size_t>(r)] = alg.g().coeff(r);

    auto sol = solve(m, rhs);
    if (!sol) return std::nullopt;
    Poly<F> a(field, *sol);
    return ConformalWitness<F>{a, normal_element(alg, a)};
}

template <Field F>
ZRelationReport<F> verify_Z_relations(const ConformalWitness<F>& w) {
    const Algebra<F>& alg = w.Z.algebra();
    const auto x = alg.x(), y = alg.y(), h = alg.h();
    return {h * w.Z - w.Z * h, w.Z * x - (x * w.Z) * alg.q(), y * w.Z - (w.Z * y) * alg.q()};
}

/// Whether u commutes with h.
template <Field F>
bool centralizer_of_h_check(const PBWElement<F>& u) {
    const Algebra<F>& alg = u.algebra();
    return commutator(alg.h(), u).is_zero();
}

/// Basis of the central elements inside sum_{i<=max_xy} x^i F[h]_{<=max_h} y^i.
///
/// The center lies in weight 0 when deg f > 1. For z = sum x^i p_i y^i,
/// zx = xz and zy = yz both reduce (x on the left and y on the right act
/// injectively on normal forms) to the level equations
///     q^j sigma(p_j) - p_j + theta_{j+1} p_{j+1} = 0,   0 <= j <= max_xy,
/// with p_{max_xy+1} = 0. The basis is returned in reduced echelon form
/// with unknowns ordered from the top level down, each element scaled so
/// its leading coefficient is 1.
template <Field F>
std::vector<PBWElement<F>> center_basis_truncated(const Algebra<F>& alg, unsigned max_xy, unsigned max_h) {
    if (alg.f().degree() <= 1)
        throw Error(ErrorCode::UnsupportedDegF,
                    "center search needs deg f > 1; deg f <= 1 gives a generalized down-up algebra");
    const F& field = alg.field();
    const unsigned levels = max_xy + 1;
    const unsigned per_level = max_h + 1;
    auto column = [&](unsigned level, unsigned d) { return (max_xy - level) * per_level + (max_h - d); };

    std::vector<Poly<F>> thetas;
    for (unsigned k = 0; k <= max_xy; ++k) thetas.push_back(alg.theta(k));

    // Contribution of unknown (level i, degree d) to equation level j.
    struct Piece {
        unsigned eq_level;
        std::size_t col;
        Poly<F> poly;
    };
    std::vector<Piece> pieces;
    std::vector<int> eq_degree(levels, -1);
    Elem<F> qi = field.one();
    for (unsigned i = 0; i < levels; ++i) {
        for (unsigned d = 0; d <= max_h; ++d) {
            const Poly<F> hd = Poly<F>::monomial(field, field.one(), static_cast<int>(d));
            Poly<F> own = alg.sigma(hd, 1) * qi - hd;
            eq_degree[i] = std::max(eq_degree[i], own.degree());
            pieces.push_back({i, column(i, d), std::move(own)});
            if (i > 0) {
                Poly<F> down = thetas[i] * hd;
                eq_degree[i - 1] = std::max(eq_degree[i - 1], down.degree());
                pieces.push_back({i - 1, column(i, d), std::move(down)});
            }
        }
        qi *= alg.q();
    }
    std::vector<std::size_t> row_offset(levels, 0);
    std::size_t rows = 0;
    for (unsigned j = 0; j < levels; ++j) {
        row_offset[j] = rows;
        rows += static_cast<std::size_t>(eq_degree[j] + 1);
    }
    const std::size_t cols = static_cast<std::size_t>(levels) * per_level;
    Matrix<F> m(field, rows, cols);
    for (const Piece& pc : pieces)
        for (int r = 0; r <= pc.poly.degree(); ++r)
            m(row_offset[pc.eq_level] + static_cast<std::size_t>(r), pc.col) += pc.poly.coeff(r);

    const auto kernel = nullspace(m);
    Matrix<F> basis(field, kernel.size(), cols);
    for (std::size_t r = 0; r < kernel.size(); ++r)
        for (std::size_t c = 0; c < cols; ++c) basis(r, c) = kernel[r][c];
    rref(basis);

    std::vector<PBWElement<F>> out;
    for (std::size_t r = 0; r < kernel.size(); ++r) {
        PBWElement<F> z(alg);
        for (unsigned i = 0; i < levels; ++i) {
            std::vector<Elem<F>> coeffs(per_level, field.zero());
            for (unsigned d = 0; d <= max_h; ++d) coeffs[d] = basis(r, column(i, d));
            z.add_term(i, Poly<F>(field, std::move(coeffs)), i);
        }
        out.push_back(std::move(z));
    }
    return out;
}

/// The algebra is a domain iff q != 0 and deg f >= 1; otherwise a pair of
/// nonzero elements with zero product is produced.
template <Field F>
DomainReport<F> domain_check(const Algebra<F>& alg) {
    const F& field = alg.field();
    if (alg.f().degree() <= 0) {
        // (h - f) x = x f - f x = 0
        const Poly<F> hf = Poly<F>::variable(field) - alg.f();
        return {false, ZeroDivisorWitness<F>{alg.poly(hf), alg.x()}};
    }
    if (!alg.q().is_zero()) return {true, std::nullopt};
    if (alg.g().is_zero()) return {false, ZeroDivisorWitness<F>{alg.y(), alg.x()}};

    // Find P0 != 0 with sigma(P0) in (g); then y (x P1 y - P0) = 0 for P1 = sigma(P0)/g.
    const int dg = alg.g().degree();
    for (int bound = 0; bound <= dg; ++bound) {
        Matrix<F> m(field, static_cast<std::size_t>(std::max(dg, 1)), static_cast<std::size_t>(bound) + 1);
        for (int d = 0; d <= bound; ++d) {
            const Poly<F> rem = divmod(alg.sigma(Poly<F>::monomial(field, field.one(), d), 1), alg.g()).second;
            for (int r = 0; r <= rem.degree(); ++r)
                m(static_cast<std::size_t>(r), static_cast<std::size_t>(d)) = rem.coeff(r);
        }
        const auto kernel = nullspace(m);
        if (kernel.empty()) continue;
        Poly<F> p0(field, kernel.back());
        p0 *= p0.leading().inverse();
        const Poly<F> p1 = divmod(alg.sigma(p0, 1), alg.g()).first;
        const PBWElement<F> right = alg.monomial(1, p1, 1) - alg.poly(p0);
        return {false, ZeroDivisorWitness<F>{alg.y(), right}};
    }
    throw Error(ErrorCode::InvalidSpec, "no zero-divisor witness found");
}

}  // namespace qgha

#endif
