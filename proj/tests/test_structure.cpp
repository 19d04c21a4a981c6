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

#include "support.hpp"

using namespace qgha;

namespace {

// True when every element of `small` lies in the span of `big`.
template <Field F>
bool spans(const Algebra<F>& alg, const std::vector<PBWElement<F>>& big, const std::vector<PBWElement<F>>& small) {
    std::map<std::pair<std::pair<unsigned, unsigned>, int>, std::size_t> index;
    auto coords = [&](const std::vector<PBWElement<F>>& els) {
        for (const auto& e : els)
            for (const auto& [key, p] : e.terms())
                for (int d = 0; d <= p.degree(); ++d) index.emplace(std::make_pair(key, d), index.size());
    };
    coords(big);
    coords(small);
    auto rank_of = [&](const std::vector<PBWElement<F>>& els) {
        Matrix<F> m(alg.field(), els.size(), index.size());
        for (std::size_t r = 0; r < els.size(); ++r)
            for (const auto& [key, p] : els[r].terms())
                for (int d = 0; d <= p.degree(); ++d) m(r, index[{key, d}]) = p.coeff(d);
        return rank(m);
    };
    auto both = big;
    both.insert(both.end(), small.begin(), small.end());
    return rank_of(both) == rank_of(big);
}

}  // namespace

TEST(Conformal, SolvesForA) {
    auto I = check::rational_instance("1", "h^2", "h^2 - h");
    const auto w = conformal_witness(*I.alg);
    ASSERT_TRUE(w);
    EXPECT_EQ(w->a, parse_poly("h", *I.field));
    EXPECT_EQ(w->Z, parse_element("x*y - h", *I.alg));
    EXPECT_TRUE(verify_Z_relations(*w).ok());
}

TEST(Conformal, HeisenbergShapeUsesAEqualsH) {
    auto I = check::rational_instance("1", "h^3 + 2*h", "h^3 + h");
    const auto w = conformal_witness(*I.alg);
    ASSERT_TRUE(w);
    EXPECT_EQ(w->a, parse_poly("h", *I.field));
}

TEST(Conformal, ConstantGWithFSquaredIsNotConformal) {
    auto I = check::rational_instance("1", "h^2", "1");
    EXPECT_FALSE(conformal_witness(*I.alg));
    auto J = check::rational_instance("1", "h", "h");
    EXPECT_FALSE(conformal_witness(*J.alg));
}

TEST(Conformal, TamperedWitnessIsFlagged) {
    auto I = check::rational_instance("1", "h^2", "h^2 - h");
    auto w = *conformal_witness(*I.alg);
    w.a = parse_poly("h^2 + h", *I.field);
    w.Z = normal_element(*I.alg, w.a);
    EXPECT_FALSE(verify_Z_relations(w).ok());
}

// Pick a random a, set g = sigma(a) - q a, and the solver must recover a
// witness whose relations hold.
TEST(Conformal, RandomConformalParametersAreRecognized) {
    std::mt19937_64 rng(31);
    GaloisField F7(FieldSpec::prime(7));
    RationalField Q;
    for (int t = 0; t < 40; ++t) {
        const auto f = check::random_poly(F7, 1 + static_cast<int>(rng() % 3), rng);
        const auto a = check::random_poly(F7, static_cast<int>(rng() % 3), rng);
        const GF q = check::random_scalar(F7, rng);
        if (f.degree() < 1) continue;
        Algebra<GaloisField> alg(F7, q, f, compose(a, f) - a * q);
        const auto w = conformal_witness(alg);
        ASSERT_TRUE(w) << to_string(f) << " " << to_string(a);
        ASSERT_EQ(alg.sigma(w->a, 1) - w->a * q, alg.g());
        ASSERT_TRUE(verify_Z_relations(*w).ok());
    }
    for (int t = 0; t < 20; ++t) {
        const auto f = check::random_poly(Q, 2, rng);
        const auto a = check::random_poly(Q, 2, rng);
        const Rational q = check::random_scalar(Q, rng);
        if (f.degree() < 1) continue;
        Algebra<RationalField> alg(Q, q, f, compose(a, f) - a * q);
        const auto w = conformal_witness(alg);
        ASSERT_TRUE(w);
        ASSERT_TRUE(verify_Z_relations(*w).ok());
    }
}

TEST(Centralizer, ExamplesAndWeightCharacterization) {
    auto I = check::rational_instance("3", "h^2", "h");
    const auto& alg = *I.alg;
    EXPECT_TRUE(centralizer_of_h_check(parse_element("x*h*y", alg)));
    EXPECT_FALSE(centralizer_of_h_check(alg.x()));
    auto J = check::rational_instance("3", "h", "h");
    EXPECT_TRUE(centralizer_of_h_check(J.alg->x()));

    std::mt19937_64 rng(37);
    for (int t = 0; t < 200; ++t) {
        auto u = check::random_element(alg, 2, 2, 3, rng);
        if (t % 2) {
            PBWElement<RationalField> w0(alg);
            for (const auto& [key, p] : u.terms()) w0.add_term(key.first, p, key.first);
            u = w0;
        }
        const auto parts = weight_decompose(u);
        const bool weight_zero = parts.empty() || (parts.size() == 1 && parts.begin()->first == 0);
        ASSERT_EQ(centralizer_of_h_check(u), weight_zero) << to_string(u);
    }
}

TEST(Center, NonRootOfUnityIsTrivial) {
    auto I = check::rational_instance("2", "h^2", "h");
    const auto basis = center_basis_truncated(*I.alg, 4, 6);
    ASSERT_EQ(basis.size(), 1u);
    EXPECT_EQ(basis[0], I.alg->one());
}

TEST(Center, RootOfUnityConformalCase) {
    auto I = check::galois_instance("GF(5)", "2", "h^2", "h^2 - 2*h");
    const auto& alg = *I.alg;
    const auto w = conformal_witness(alg);
    ASSERT_TRUE(w);
    const auto Z4 = power(w->Z, 4);
    const auto basis = center_basis_truncated(alg, 4, 16);
    ASSERT_EQ(basis.size(), 2u);
    EXPECT_TRUE(spans(alg, basis, {alg.one(), Z4}));
    EXPECT_TRUE(spans(alg, {alg.one(), Z4}, basis));
    for (const auto& z : basis) {
        EXPECT_TRUE(commutator(z, alg.x()).is_zero());
        EXPECT_TRUE(commutator(z, alg.y()).is_zero());
        EXPECT_TRUE(commutator(z, alg.h()).is_zero());
    }
}

TEST(Center, ScalarsOnlyAtLevelZero) {
    auto I = check::galois_instance("GF(5)", "2", "h^2", "h^2 - 2*h");
    const auto basis = center_basis_truncated(*I.alg, 0, 5);
    ASSERT_EQ(basis.size(), 1u);
    EXPECT_EQ(basis[0], I.alg->one());
}

TEST(Center, EnlargingBoundsKeepsElements) {
    auto I = check::galois_instance("GF(5)", "2", "h^2", "h^2 - 2*h");
    const auto& alg = *I.alg;
    std::vector<PBWElement<GaloisField>> previous;
    for (unsigned m = 0; m <= 4; ++m) {
        const auto basis = center_basis_truncated(alg, m, 4 * m + 1);
        EXPECT_TRUE(spans(alg, basis, previous)) << "max_xy=" << m;
        for (const auto& z : basis) ASSERT_TRUE(commutator(z, alg.x()).is_zero());
        previous = basis;
    }
}

TEST(Center, LinearFIsRejected) {
    auto I = check::rational_instance("2", "h + 1", "h");
    try {
        (void)center_basis_truncated(*I.alg, 2, 2);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::UnsupportedDegF);
    }
}

TEST(Domain, Criterion) {
    auto D = check::rational_instance("2", "h^2", "h");
    EXPECT_TRUE(domain_check(*D.alg).is_domain);

    auto C = check::rational_instance("2", "3", "h");
    const auto c = domain_check(*C.alg);
    ASSERT_FALSE(c.is_domain);
    EXPECT_EQ(c.witness->left, parse_element("h - 3", *C.alg));
    EXPECT_EQ(c.witness->right, C.alg->x());

    auto Z = check::rational_instance("0", "h^2", "h");
    const auto z = domain_check(*Z.alg);
    ASSERT_FALSE(z.is_domain);
    EXPECT_EQ(z.witness->left, Z.alg->y());
    EXPECT_EQ(z.witness->right, parse_element("x*h*y - h", *Z.alg));
}

TEST(Domain, WitnessesAreZeroDivisors) {
    const char* fs[] = {"3", "0", "h", "h^2", "h^2 + h + 1", "2*h^3 - h"};
    const char* gs[] = {"0", "1", "h", "h^2 - 1", "h^3 + h"};
    const char* qs[] = {"0", "1", "2"};
    for (const char* q : qs)
        for (const char* f : fs)
            for (const char* g : gs) {
                auto I = check::rational_instance(q, f, g);
                const auto d = domain_check(*I.alg);
                const bool expected = std::string(q) != "0" && I.alg->f().degree() >= 1;
                ASSERT_EQ(d.is_domain, expected) << I.label;
                if (d.is_domain) continue;
                ASSERT_FALSE(d.witness->left.is_zero());
                ASSERT_FALSE(d.witness->right.is_zero());
                ASSERT_TRUE((d.witness->left * d.witness->right).is_zero()) << I.label;
            }
}
