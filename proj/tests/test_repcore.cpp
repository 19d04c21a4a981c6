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

#include <gtest/gtest.h>

#include <random>
#include <set>

#include "support.hpp"

using namespace qgha;

namespace {

MatrixRep<GaloisField> direct_sum(const MatrixRep<GaloisField>& a, const MatrixRep<GaloisField>& b) {
    const GaloisField& F = a.X.field();
    const std::size_t n = a.dim() + b.dim();
    MatrixRep<GaloisField> r{Matrix<GaloisField>(F, n, n), Matrix<GaloisField>(F, n, n), Matrix<GaloisField>(F, n, n)};
    auto place = [&](Matrix<GaloisField>& dst, const Matrix<GaloisField>& src, std::size_t off) {
        for (std::size_t i = 0; i < src.rows(); ++i)
            for (std::size_t j = 0; j < src.cols(); ++j) dst(off + i, off + j) = src(i, j);
    };
    place(r.X, a.X, 0), place(r.Y, a.Y, 0), place(r.H, a.H, 0);
    place(r.X, b.X, a.dim()), place(r.Y, b.Y, a.dim()), place(r.H, b.H, a.dim());
    return r;
}

}  // namespace

TEST(Modules, TrivialModule) {
    auto I = check::galois_instance("GF(5)", "2", "h^3", "h^2");
    const auto s = make_c_spec<GaloisField>(I.field->zero(), 1);
    const auto r = build_matrix_rep(*I.alg, s);
    EXPECT_TRUE(r.X.is_zero());
    EXPECT_TRUE(r.Y.is_zero());
    EXPECT_TRUE(r.H.is_zero());
    EXPECT_TRUE(verify_relations(*I.alg, r).ok());
    EXPECT_TRUE(is_simple_structural(*I.alg, s).simple);
    EXPECT_TRUE(is_simple_bruteforce(r));
}

TEST(Modules, FamilyAAndBOverFive) {
    auto I = check::galois_instance("GF(5)", "2", "h^2", "h");
    const auto& alg = *I.alg;
    const auto& F = *I.field;
    for (Family fam : {Family::A, Family::B}) {
        const auto s = make_ab_spec(alg, fam, F.one(), F.from_int(3), F.one());
        EXPECT_EQ(s.dim(), 4u);
        const auto r = build_matrix_rep(alg, s);
        EXPECT_TRUE(verify_relations(alg, r).ok());
        EXPECT_TRUE(is_simple_bruteforce(r));
    }
}

TEST(Modules, PerturbationIsDetected) {
    auto I = check::galois_instance("GF(5)", "2", "h^2", "h");
    const auto& F = *I.field;
    auto r = build_matrix_rep(*I.alg, make_ab_spec(*I.alg, Family::A, F.one(), F.from_int(3), F.one()));
    r.H(2, 2) += F.one();
    EXPECT_FALSE(verify_relations(*I.alg, r).ok());
}

TEST(Modules, OneDimensionalFixedPointRep) {
    auto I = check::rational_instance("3", "h^2", "h + 2");
    const auto& Q = *I.field;
    MatrixRep<RationalField> r{Matrix<RationalField>::scalar(Q, 1, Q.one()),
                               Matrix<RationalField>::scalar(Q, 1, I.alg->g()(Q.one()) / (Q.one() - I.alg->q())),
                               Matrix<RationalField>::scalar(Q, 1, Q.one())};
    EXPECT_TRUE(verify_relations(*I.alg, r).ok());
}

TEST(Modules, InvalidSpecsAreRejected) {
    auto I = check::galois_instance("GF(5)", "2", "h^2", "h");
    const auto& F = *I.field;
    EXPECT_THROW(build_matrix_rep(*I.alg, make_ab_spec(*I.alg, Family::A, F.one(), F.one(), F.zero())), Error);
    EXPECT_THROW(build_matrix_rep(*I.alg, make_c_spec<GaloisField>(F.one(), 2)), Error);
    EXPECT_THROW(make_ab_spec(*I.alg, Family::A, F.from_int(2), F.one(), F.one()), Error);  // 2 is not periodic
}

TEST(Simplicity, FamilyCCertificate) {
    // f = h, g = h^2 - 1: nu_1(i) = 0 for every i, so C(1, n) has a submodule
    auto I = check::galois_instance("GF(5)", "1", "h", "h^2 - 1");
    const auto& F = *I.field;
    const auto s = make_c_spec<GaloisField>(F.one(), 3);
    const auto cert = is_simple_structural(*I.alg, s);
    EXPECT_FALSE(cert.simple);
    ASSERT_TRUE(cert.vanishing_index);
    EXPECT_EQ(*cert.vanishing_index, 1u);
    EXPECT_FALSE(is_simple_bruteforce(build_matrix_rep(*I.alg, s)));
}

TEST(Simplicity, DirectSumIsNotSimple) {
    auto I = check::galois_instance("GF(5)", "2", "h^3", "h^2");
    const auto r = build_matrix_rep(*I.alg, make_c_spec<GaloisField>(I.field->zero(), 1));
    EXPECT_FALSE(is_simple_bruteforce(direct_sum(r, r)));
}

TEST(Simplicity, SearchBound) {
    auto I = check::galois_instance("GF(5)", "2", "h^2", "h");
    const auto& F = *I.field;
    const auto r = build_matrix_rep(*I.alg, make_ab_spec(*I.alg, Family::A, F.one(), F.from_int(3), F.one()));
    try {
        (void)is_simple_bruteforce(r, 100);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::SearchSpaceTooLarge);
    }
}

TEST(Simplicity, StructuralAgreesWithBruteForceOnFamilyC) {
    for (const char* g : {"h", "h^2 - 1", "h + 1", "h^2 + h"})
        for (const char* q : {"1", "2", "4"}) {
            auto I = check::galois_instance("GF(5)", q, "h^2", g);
            for (std::size_t n = 1; n <= 4; ++n)
                for (const GF& a : all_elements(*I.field)) {
                    if (!nu_table(*I.alg, a, n)[n].is_zero()) continue;
                    const auto s = make_c_spec<GaloisField>(a, n);
                    const auto r = build_matrix_rep(*I.alg, s);
                    ASSERT_TRUE(verify_relations(*I.alg, r).ok());
                    ASSERT_EQ(is_simple_structural(*I.alg, s).simple, is_simple_bruteforce(r)) << I.label;
                }
        }
}

TEST(Iso, Examples) {
    auto I = check::galois_instance("GF(5)", "2", "h^2", "h");
    const auto& alg = *I.alg;
    const auto& F = *I.field;
    const auto a = make_ab_spec(alg, Family::A, F.one(), F.from_int(3), F.one());
    const auto shifted = make_ab_spec(alg, Family::A, F.one(), mu_value(alg, *a.mu, 1), F.one());
    EXPECT_TRUE(iso_structural(alg, a, shifted));
    EXPECT_EQ(iso_bruteforce(build_matrix_rep(alg, a), build_matrix_rep(alg, shifted)), IsoVerdict::Isomorphic);
    const auto other_gamma = make_ab_spec(alg, Family::A, F.one(), F.from_int(3), F.from_int(2));
    EXPECT_FALSE(iso_structural(alg, a, other_gamma));
    EXPECT_EQ(iso_bruteforce(build_matrix_rep(alg, a), build_matrix_rep(alg, other_gamma)),
              IsoVerdict::NotIsomorphic);
    const auto r = build_matrix_rep(alg, a);
    EXPECT_EQ(iso_bruteforce(r, r), IsoVerdict::Isomorphic);
    const auto c = build_matrix_rep(alg, make_c_spec<GaloisField>(F.zero(), 1));
    EXPECT_EQ(iso_bruteforce(r, c), IsoVerdict::NotIsomorphic);
}

TEST(Iso, CFamiliesDependOnAlpha) {
    auto I = check::galois_instance("GF(5)", "2", "h^2", "h^2 - h");
    const auto& F = *I.field;
    const auto c0 = make_c_spec<GaloisField>(F.zero(), 1), c1 = make_c_spec<GaloisField>(F.one(), 1);
    EXPECT_FALSE(iso_structural(*I.alg, c0, c1));
    EXPECT_TRUE(iso_structural(*I.alg, c0, c0));
}

TEST(Iso, AWithZeroMuIsNeverB) {
    auto I = check::galois_instance("GF(5)", "2", "h^2", "h");
    const auto& alg = *I.alg;
    const auto& F = *I.field;
    const auto a = make_ab_spec(alg, Family::A, F.zero(), F.zero(), F.one());
    for (const GF& gamma : all_elements(F)) {
        if (gamma.is_zero()) continue;
        const auto b = make_ab_spec(alg, Family::B, F.zero(), F.zero(), gamma);
        EXPECT_FALSE(iso_structural(alg, a, b));
        EXPECT_EQ(iso_bruteforce(build_matrix_rep(alg, a), build_matrix_rep(alg, b)), IsoVerdict::NotIsomorphic);
    }
}

TEST(Iso, AAndBWithInvertibleMu) {
    auto I = check::galois_instance("GF(5)", "2", "h^2", "h");
    const auto& alg = *I.alg;
    const auto& F = *I.field;
    // mu = (3, 2, 0, 1): contains a zero; use beta = 4 at lambda = 1 instead, the fixed sequence
    const auto b = make_ab_spec(alg, Family::B, F.one(), F.from_int(4), F.from_int(2));
    ASSERT_EQ(b.dim(), 1u);
    const GF prod = mu_value(alg, *b.mu, 0);
    const auto a = make_ab_spec(alg, Family::A, F.one(), F.from_int(4), F.from_int(2) * prod);
    EXPECT_TRUE(iso_structural(alg, a, b));
    EXPECT_TRUE(iso_structural(alg, b, a));
    EXPECT_EQ(iso_bruteforce(build_matrix_rep(alg, a), build_matrix_rep(alg, b)), IsoVerdict::Isomorphic);
}

TEST(Iso, RationalOneDimensional) {
    auto I = check::rational_instance("2", "h^2", "h");
    const auto& alg = *I.alg;
    const auto& Q = *I.field;
    const auto a = make_ab_spec(alg, Family::A, Q.one(), Rational(-1), Rational(3));
    const auto b = make_ab_spec(alg, Family::A, Q.one(), Rational(-1), Rational(5));
    EXPECT_EQ(iso_bruteforce(build_matrix_rep(alg, a), build_matrix_rep(alg, a)), IsoVerdict::Isomorphic);
    EXPECT_EQ(iso_bruteforce(build_matrix_rep(alg, a), build_matrix_rep(alg, b)), IsoVerdict::NotIsomorphic);
    EXPECT_FALSE(iso_structural(alg, a, b));
}

TEST(Enumerate, OneDimensionalMatchesScalarTriples) {
    auto I = check::galois_instance("GF(5)", "2", "h^2", "h");
    std::set<check::Triple> from_specs;
    for (const auto& s : enumerate_simples(*I.alg, 1)) {
        const auto r = build_matrix_rep(*I.alg, s);
        ASSERT_TRUE(from_specs.insert({r.H(0, 0), r.X(0, 0), r.Y(0, 0)}).second);
    }
    const auto triples = check::one_dim_reps(*I.alg);
    EXPECT_EQ(from_specs, std::set<check::Triple>(triples.begin(), triples.end()));
}

TEST(Enumerate, TrivialModuleAppearsOnce) {
    for (const char* f : {"h^2", "h^3"})
        for (const char* g : {"h", "h^2", "h^3"}) {
            auto I = check::galois_instance("GF(7)", "3", f, g);
            std::size_t trivial = 0;
            for (const auto& s : enumerate_simples(*I.alg, 1)) {
                const auto r = build_matrix_rep(*I.alg, s);
                if (r.X.is_zero() && r.Y.is_zero() && r.H.is_zero()) ++trivial;
            }
            EXPECT_EQ(trivial, 1u) << I.label;
        }
}

TEST(Enumerate, QZeroIsRefused) {
    auto I = check::galois_instance("GF(5)", "0", "h^2", "h");
    try {
        (void)enumerate_simples(*I.alg, 1);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::QZero);
    }
}

TEST(Enumerate, EmptyWhenNothingFits) {
    // f = h + 1 over GF(5): the only orbit has period 5 and nu_a(1) = g(a) = 1
    auto I = check::galois_instance("GF(5)", "2", "h + 1", "1");
    EXPECT_TRUE(enumerate_simples(*I.alg, 1).empty());
    EXPECT_TRUE(enumerate_simples(*I.alg, 3).empty());
}

TEST(Enumerate, RepresentativesAreSimpleAndDistinct) {
    auto I = check::galois_instance("GF(5)", "4", "h^2", "h^2");
    const auto& alg = *I.alg;
    for (std::size_t n = 1; n <= 3; ++n) {
        const auto specs = enumerate_simples(alg, n);
        std::vector<MatrixRep<GaloisField>> reps;
        for (const auto& s : specs) {
            reps.push_back(build_matrix_rep(alg, s));
            ASSERT_TRUE(verify_relations(alg, reps.back()).ok());
            ASSERT_TRUE(is_simple_bruteforce(reps.back()));
        }
        for (std::size_t i = 0; i < specs.size(); ++i)
            for (std::size_t j = i + 1; j < specs.size(); ++j) {
                ASSERT_FALSE(iso_structural(alg, specs[i], specs[j]));
                ASSERT_EQ(iso_bruteforce(reps[i], reps[j]), IsoVerdict::NotIsomorphic);
            }
    }
}
