// Copyright 2026 The pairweight Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <random>
#include <set>
#include <vector>

#include "pairweight/paircode.hpp"
#include "support/poly_oracle.hpp"

namespace {

using namespace pairweight;
using oracle::NaiveCode;
using oracle::PolyField;

struct Params {
    std::uint32_t p, s, m, h, e;
};

std::ostream& operator<<(std::ostream& os, const Params& c) {
    return os << "(" << c.p << "," << c.s << "," << c.m << "," << c.h << "," << c.e << ")";
}

CodeParams make(const Params& c) { return CodeParams(c.p, c.s, c.m, c.h, c.e); }

TEST(CodeParams, DerivedQuantitiesAndRegimes) {
    const CodeParams ex1 = make({3, 1, 3, 2, 2});
    EXPECT_EQ(ex1.q(), 3u);
    EXPECT_EQ(ex1.r(), 27u);
    EXPECT_EQ(ex1.n(), 26u);
    EXPECT_EQ(ex1.regime(), Regime::coprime);
    EXPECT_EQ(ex1.label(), "C(q=3,m=3,h=2,e=2)");

    const CodeParams ex2 = make({2, 2, 4, 3, 3});
    EXPECT_EQ(ex2.q(), 4u);
    EXPECT_EQ(ex2.r(), 256u);
    EXPECT_EQ(ex2.n(), 255u);
    EXPECT_EQ(ex2.regime(), Regime::coprime);

    const CodeParams m2 = make({3, 1, 2, 2, 2});
    EXPECT_EQ(m2.n(), 8u);
    EXPECT_EQ(m2.regime(), Regime::gcd_two_odd);
    EXPECT_EQ(make({5, 1, 2, 2, 2}).regime(), Regime::gcd_two_even);
    EXPECT_EQ(make({3, 2, 2, 4, 2}).regime(), Regime::gcd_two_even);
    EXPECT_EQ(make({2, 2, 2, 3, 3}).regime(), Regime::other);
    EXPECT_EQ(make({3, 1, 4, 2, 2}).regime(), Regime::gcd_two_odd);
    EXPECT_EQ(make({5, 1, 3, 4, 2}).regime(), Regime::coprime);
    EXPECT_EQ(make({7, 1, 2, 6, 3}).regime(), Regime::other);

    const FieldCtx& f = ex1.field();
    EXPECT_EQ(f.pow(ex1.g(), ex1.n()), f.one());
    EXPECT_EQ(f.pow(ex1.beta(), ex1.e()), f.one());
    EXPECT_NE(ex1.beta(), f.one());
}

TEST(CodeParams, RejectsInvalidParameters) {
    EXPECT_THROW(CodeParams(4, 1, 2, 2, 2), ParameterError);
    EXPECT_THROW(CodeParams(3, 0, 2, 2, 2), ParameterError);
    EXPECT_THROW(CodeParams(3, 1, 0, 2, 2), ParameterError);
    EXPECT_THROW(CodeParams(3, 1, 2, 2, 1), ParameterError);
    EXPECT_THROW(CodeParams(5, 1, 2, 4, 3), ParameterError);
    EXPECT_THROW(CodeParams(5, 1, 2, 3, 3), ParameterError);
    EXPECT_THROW(CodeParams(3, 1, 30, 2, 2), ParameterError);
}

class CodewordOracle : public ::testing::TestWithParam<Params> {};

TEST_P(CodewordOracle, MatchesPolynomialBasisEvaluation) {
    const CodeParams c = make(GetParam());
    const FieldCtx& f = c.field();
    const PolyField poly(f.characteristic(), f.modulus());
    const NaiveCode naive(poly, c.q(), c.r(), c.h(), c.e());
    ASSERT_EQ(naive.length(), c.n());
    std::mt19937 rng(c.r());
    std::uniform_int_distribution<std::uint32_t> pick(0, c.r() - 1);
    for (int t = 0; t < 40; ++t) {
        const FieldElement a = f.from_packed(pick(rng)), b = f.from_packed(pick(rng));
        const Codeword got = codeword(c, a, b);
        const auto want = naive.codeword(f.to_coefficients(a), f.to_coefficients(b));
        ASSERT_EQ(got.symbols.size(), want.size());
        for (std::size_t i = 0; i < want.size(); ++i) {
            ASSERT_EQ(f.to_coefficients(got.symbols[i]), want[i]) << "position " << i;
            ASSERT_TRUE(f.in_subfield(got.symbols[i], c.s()));
        }
        EXPECT_EQ(symbol_pair_weight(got), oracle::naive_pair_weight(want));
    }
}

TEST_P(CodewordOracle, CyclicShiftClosure) {
    const CodeParams c = make(GetParam());
    const FieldCtx& f = c.field();
    std::mt19937 rng(c.r() + 1);
    std::uniform_int_distribution<std::uint32_t> pick(0, c.r() - 1);
    for (int t = 0; t < 20; ++t) {
        const FieldElement a = element_at(pick(rng)), b = element_at(pick(rng));
        const Codeword base = codeword(c, a, b);
        const Codeword shifted = codeword(c, f.mul(a, c.g()), f.mul(b, c.beta_g()));
        for (std::uint32_t i = 0; i < c.n(); ++i) ASSERT_EQ(shifted.symbols[i], base.symbols[(i + 1) % c.n()]);
    }
}

TEST_P(CodewordOracle, PairWeightEqualsLengthMinusT) {
    const CodeParams c = make(GetParam());
    std::mt19937 rng(c.r() + 2);
    std::uniform_int_distribution<std::uint32_t> pick(0, c.r() - 1);
    for (int t = 0; t < 40; ++t) {
        const FieldElement a = element_at(pick(rng)), b = element_at(pick(rng));
        EXPECT_EQ(symbol_pair_weight(codeword(c, a, b)), c.n() - t_count(c, a, b));
    }
}

INSTANTIATE_TEST_SUITE_P(Small, CodewordOracle,
                         ::testing::Values(Params{3, 1, 3, 2, 2}, Params{3, 1, 2, 2, 2}, Params{2, 2, 2, 3, 3},
                                           Params{5, 1, 2, 4, 2}, Params{3, 2, 2, 4, 2}, Params{2, 2, 3, 3, 3},
                                           Params{7, 1, 2, 6, 3}, Params{3, 1, 4, 2, 2}));

TEST(Weights, SyntheticWords) {
    const FieldElement z = FieldElement::zero(), u = FieldElement::from_exponent(0);
    const std::vector<FieldElement> zero(7, z), full(7, u);
    std::vector<FieldElement> one = zero;
    one[3] = u;
    EXPECT_EQ(symbol_pair_weight(zero), 0u);
    EXPECT_EQ(hamming_weight(zero), 0u);
    EXPECT_EQ(symbol_pair_weight(one), 2u);
    EXPECT_EQ(hamming_weight(one), 1u);
    EXPECT_EQ(symbol_pair_weight(full), 7u);
    std::vector<FieldElement> edge = zero;
    edge[6] = u;
    EXPECT_EQ(symbol_pair_weight(edge), 2u);  // wraps to position 0
}

TEST(Codeword, ExamplesOnTwentySeven) {
    const CodeParams c = make({3, 1, 3, 2, 2});
    const FieldCtx& f = c.field();
    EXPECT_EQ(hamming_weight(codeword(c, f.zero(), f.zero())), 0u);
    EXPECT_EQ(hamming_weight(codeword(c, f.one(), f.zero())), 18u);
    EXPECT_EQ(t_count(c, f.zero(), f.zero()), 26u);
    EXPECT_EQ(t_count(c, f.one(), f.zero()), 2u);
    for (std::uint32_t k = 0; k < f.order(); ++k) {
        const FieldElement a = f.alpha_pow(k);
        EXPECT_EQ(t_count(c, a, f.neg(a)), 8u);
    }
}

// Exhaustive histograms straight from the polynomial-basis oracle.
struct NaiveStats {
    WeightDistribution pair, hamming;
    std::size_t distinct = 0;
};

NaiveStats naive_stats(const CodeParams& c, std::uint32_t length = 0) {
    const FieldCtx& f = c.field();
    const PolyField poly(f.characteristic(), f.modulus());
    const NaiveCode naive(poly, c.q(), c.r(), c.h(), c.e());
    NaiveStats out;
    std::set<std::vector<PolyField::Poly>> words;
    for (std::uint32_t i = 0; i < c.r(); ++i) {
        for (std::uint32_t j = 0; j < c.r(); ++j) {
            auto w = naive.codeword(f.to_coefficients(f.from_packed(i)), f.to_coefficients(f.from_packed(j)));
            if (length) w.resize(length);
            std::uint32_t hw = 0;
            for (const auto& s : w) hw += !oracle::is_zero_poly(s);
            out.pair.add(oracle::naive_pair_weight(w));
            out.hamming.add(hw);
            words.insert(std::move(w));
        }
    }
    out.distinct = words.size();
    return out;
}

std::uint32_t log_q(std::size_t v, std::uint32_t q) {
    std::uint32_t k = 0;
    for (std::size_t t = 1; t < v; t *= q) ++k;
    return k;
}

class EnumerationOracle : public ::testing::TestWithParam<Params> {};

TEST_P(EnumerationOracle, HistogramsAndDimensionMatchNaive) {
    const CodeParams c = make(GetParam());
    const CodeStatistics st = enumerate_code(c, {1, std::uint64_t{1} << 32});
    const NaiveStats want = naive_stats(c);
    EXPECT_EQ(st.pair, want.pair);
    EXPECT_EQ(st.hamming, want.hamming);
    EXPECT_EQ(st.length, c.n());
    EXPECT_EQ(st.pair.total(), std::uint64_t{c.r()} * c.r());
    EXPECT_EQ(st.sandwich_violations, 0u);
    EXPECT_EQ(dimension_from_kernel(c, st.kernel_size), log_q(want.distinct, c.q()));
    WeightDistribution shifted;
    for (auto [t, k] : st.t_values.counts()) shifted.add(static_cast<std::int64_t>(c.n()) - t, k);
    EXPECT_EQ(shifted, st.pair);
}

INSTANTIATE_TEST_SUITE_P(Small, EnumerationOracle,
                         ::testing::Values(Params{3, 1, 3, 2, 2}, Params{3, 1, 2, 2, 2}, Params{2, 2, 2, 3, 3},
                                           Params{5, 1, 2, 4, 2}, Params{5, 1, 2, 2, 2}, Params{7, 1, 2, 6, 2},
                                           Params{2, 3, 2, 7, 7}, Params{3, 1, 2, 2, 2}));

TEST(Enumeration, QuotedDistributions) {
    EXPECT_EQ(pair_weight_distribution(make({3, 1, 3, 2, 2})),
              (WeightDistribution{{0, 1}, {18, 52}, {21, 104}, {24, 572}}));
    EXPECT_EQ(t_value_distribution(make({3, 1, 3, 2, 2})),
              (WeightDistribution{{26, 1}, {8, 52}, {5, 104}, {2, 572}}));
    EXPECT_EQ(pair_weight_distribution(make({3, 1, 2, 2, 2})), (WeightDistribution{{0, 1}, {4, 8}, {6, 16}, {8, 56}}));
    // hq^(m-1)(e-1)/e = 9
    EXPECT_EQ(hamming_weight_distribution(make({3, 1, 3, 2, 2})).min_nonzero_weight(), 9);
    EXPECT_EQ(pair_weight_distribution(make({13, 1, 2, 4, 2})),
              (WeightDistribution{{0, 1}, {48, 168}, {52, 2016}, {56, 26376}}));
}

TEST(Enumeration, Dimensions) {
    EXPECT_EQ(dimension(make({3, 1, 3, 2, 2})), 6u);
    EXPECT_EQ(dimension(make({5, 1, 3, 4, 4})), 6u);
    EXPECT_EQ(dimension(make({3, 1, 2, 2, 2})), 4u);
}

TEST(Enumeration, WorkerCountInvariance) {
    const CodeParams c = make({5, 1, 3, 4, 4});
    const CodeStatistics one = enumerate_code(c, {1, std::uint64_t{1} << 32});
    for (unsigned w : {2u, 3u, 7u}) {
        const CodeStatistics many = enumerate_code(c, {w, std::uint64_t{1} << 32});
        EXPECT_EQ(many.pair, one.pair);
        EXPECT_EQ(many.hamming, one.hamming);
        EXPECT_EQ(many.t_values, one.t_values);
        EXPECT_EQ(many.kernel_size, one.kernel_size);
        EXPECT_EQ(many.sandwich_violations, one.sandwich_violations);
    }
}

TEST(Enumeration, BudgetGuard) {
    const CodeParams c = make({3, 1, 3, 2, 2});
    EXPECT_EQ(required_work(c), 27u * 27u * 26u);
    try {
        enumerate_code(c, {1, 1000});
        FAIL() << "expected BudgetError";
    } catch (const BudgetError& e) {
        EXPECT_EQ(e.required(), 27u * 27u * 26u);
        EXPECT_EQ(e.budget(), 1000u);
    }
    EXPECT_NO_THROW(enumerate_code(c, {1, 27u * 27u * 26u}));
}

TEST(Puncturing, QuotedExamples) {
    const PuncturedCode q9 = puncture_half(make({3, 2, 2, 4, 2}));
    EXPECT_EQ(q9.length(), 20u);
    const CodeStatistics s9 = q9.enumerate();
    EXPECT_EQ(s9.pair, (WeightDistribution{{0, 1}, {16, 80}, {18, 640}, {20, 5840}}));
    EXPECT_EQ(dimension_from_kernel(q9.parent(), s9.kernel_size), 4u);

    const PuncturedCode q17 = puncture_half(make({17, 1, 2, 2, 2}));
    EXPECT_EQ(q17.length(), 18u);
    const CodeStatistics s17 = q17.enumerate();
    EXPECT_EQ(s17.pair, (WeightDistribution{{0, 1}, {16, 288}, {17, 4608}, {18, 78624}}));
    EXPECT_TRUE(is_mds_symbol_pair(18, dimension_from_kernel(q17.parent(), s17.kernel_size), 16, 17));

    const PuncturedCode q5 = puncture_half(make({5, 1, 2, 2, 2}));
    EXPECT_EQ(q5.length(), 6u);
    const CodeStatistics s5 = q5.enumerate();
    EXPECT_EQ(s5.pair.min_nonzero_weight(), 4);
    EXPECT_TRUE(is_mds_symbol_pair(6, dimension_from_kernel(q5.parent(), s5.kernel_size), 4, 5));
}

TEST(Puncturing, MatchesNaivePrefix) {
    const CodeParams c = make({5, 1, 2, 2, 2});
    const PuncturedCode pc = puncture_half(c);
    const CodeStatistics st = pc.enumerate();
    const NaiveStats want = naive_stats(c, pc.length());
    EXPECT_EQ(st.pair, want.pair);
    EXPECT_EQ(st.hamming, want.hamming);
    EXPECT_EQ(dimension_from_kernel(c, st.kernel_size), log_q(want.distinct, c.q()));
}

TEST(Puncturing, RejectsUnsupportedCodes) {
    EXPECT_THROW(puncture_half(make({2, 2, 4, 3, 3})), ParameterError);
    EXPECT_THROW(puncture_half(make({3, 1, 3, 2, 2})), ParameterError);  // n = 26
    EXPECT_THROW(puncture_half(make({7, 1, 2, 6, 3})), ParameterError);
}

TEST(Mds, SingletonTypeBound) {
    EXPECT_TRUE(is_mds_symbol_pair(18, 4, 16, 17));
    for (std::int64_t h : {2, 3, 4, 6}) EXPECT_TRUE(is_mds_symbol_pair(h, 2, h, 7));
    EXPECT_FALSE(is_mds_symbol_pair(26, 6, 18, 3));
    EXPECT_THROW(is_mds_symbol_pair(10, 2, 1, 3), ParameterError);
    EXPECT_THROW(is_mds_symbol_pair(10, 2, 11, 3), ParameterError);
}

TEST(Mds, ConstantWeightCodeForMEqualsOne) {
    const CodeParams c = make({7, 1, 1, 6, 2});
    const CodeStatistics st = enumerate_code(c);
    EXPECT_EQ(st.pair.support(), (std::vector<std::int64_t>{0, 6}));
    EXPECT_EQ(dimension_from_kernel(c, st.kernel_size), 2u);
    EXPECT_TRUE(is_mds_symbol_pair(6, 2, 6, 7));
}

TEST(RatioMap, InjectiveForLargerExtensionsAtMostTwoToOneForMTwo) {
    for (Params p : {Params{3, 1, 3, 2, 2}, Params{2, 2, 4, 3, 3}, Params{5, 1, 3, 4, 4}, Params{3, 1, 5, 2, 2}})
        EXPECT_EQ(ratio_max_multiplicity(make(p)), 1u) << p;
    for (Params p : {Params{3, 1, 2, 2, 2}, Params{13, 1, 2, 4, 2}, Params{3, 2, 2, 4, 2}, Params{17, 1, 2, 2, 2}})
        EXPECT_LE(ratio_max_multiplicity(make(p)), 2u) << p;
    EXPECT_THROW(ratio_max_multiplicity(make({7, 1, 1, 6, 2})), ParameterError);
}

}  // namespace
