#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "turyn/correlation.hpp"

namespace turyn {
namespace {

const BinarySequence kBarker13 = parse_literal("+++++--++-+-+");

TEST(Autocorrelation, ConstantSequence) {
    EXPECT_EQ(autocorrelation(BinarySequence::constant(5), 2), 3);
}

TEST(Autocorrelation, SmallDirectSum) {
    // x_1 x_3 + x_2 x_4 = 1 - 1
    EXPECT_EQ(autocorrelation(parse_literal("+++-"), 2), 0);
}

TEST(Autocorrelation, Barker13OffPeakValues) {
    for (std::size_t k = 1; k <= 12; ++k) {
        const int c = autocorrelation(kBarker13, k);
        EXPECT_EQ(c, oracle::autocorrelation(oracle::to_seq(kBarker13), k));
        EXPECT_TRUE(c == 0 || c == 1) << "k=" << k << " c=" << c;
    }
}

TEST(Autocorrelation, ShiftOutOfRange) {
    const auto x = parse_literal("+-+");
    EXPECT_THROW(autocorrelation(x, 3), DomainError);
    EXPECT_THROW(PackedSequence(x).autocorrelation(3), DomainError);
    EXPECT_THROW(autocorrelation(BinarySequence{}, 0), DomainError);
}

TEST(Autocorrelation, PeakAndLastLag) {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 200; ++trial) {
        const auto x = oracle::to_binary(oracle::random_seq(rng, oracle::random_length(rng, 1, 90)));
        EXPECT_EQ(autocorrelation(x, 0), static_cast<int>(x.size()));
        EXPECT_EQ(autocorrelation(x, x.size() - 1), x.at(1) * x.at(x.size()));
    }
}

TEST(Autocorrelation, SymmetryLaws) {
    std::mt19937_64 rng(4);
    for (int trial = 0; trial < 1000; ++trial) {
        const auto x = oracle::to_binary(oracle::random_seq(rng, oracle::random_length(rng, 1, 40)));
        const auto neg = negated(x);
        const auto rev = reversed(x);
        const auto alt = alternated(x);
        for (std::size_t k = 0; k < x.size(); ++k) {
            const int c = autocorrelation(x, k);
            ASSERT_EQ(autocorrelation(neg, k), c);
            ASSERT_EQ(autocorrelation(rev, k), c);
            ASSERT_EQ(autocorrelation(alt, k), k % 2 ? -c : c);
        }
    }
}

TEST(PackedSequence, AgreesWithNaiveUpTo64) {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 1000; ++trial) {
        const auto raw = oracle::random_seq(rng, oracle::random_length(rng, 1, 64));
        const auto x = oracle::to_binary(raw);
        const PackedSequence packed(x);
        std::uint64_t word = 0;
        for (std::size_t s = 0; s < raw.size(); ++s) {
            if (raw[s] == -1) word |= std::uint64_t{1} << s;
        }
        for (std::size_t k = 0; k < x.size(); ++k) {
            const int expected = oracle::autocorrelation(raw, k);
            ASSERT_EQ(autocorrelation(x, k), expected);
            ASSERT_EQ(packed.autocorrelation(k), expected) << "n=" << x.size() << " k=" << k;
            ASSERT_EQ(autocorrelation_word(word, x.size(), k), expected);
        }
    }
}

TEST(PackedSequence, AgreesWithNaiveAcrossWords) {
    std::mt19937_64 rng(6);
    for (std::size_t n : {63u, 64u, 65u, 127u, 128u, 129u, 200u}) {
        const auto raw = oracle::random_seq(rng, n);
        const PackedSequence packed(oracle::to_binary(raw));
        for (std::size_t k = 0; k < n; ++k) {
            ASSERT_EQ(packed.autocorrelation(k), oracle::autocorrelation(raw, k)) << n << " " << k;
        }
    }
}

TEST(IsBarker, Examples) {
    EXPECT_TRUE(is_barker(kBarker13));
    EXPECT_FALSE(is_barker(BinarySequence::constant(4)));
    EXPECT_TRUE(is_barker(parse_literal("+++-")));
    EXPECT_THROW(is_barker(BinarySequence{1}), DomainError);
}

TEST(IsBarker, PreservedByAlternation) {
    for (const char* lit : {"++", "++-", "+++-", "+++-+", "+++--+-", "+++---+--+-", "+++++--++-+-+"}) {
        const auto x = parse_literal(lit);
        EXPECT_TRUE(is_barker(x)) << lit;
        EXPECT_TRUE(is_barker(alternated(x))) << lit;
        EXPECT_TRUE(is_barker(negated(x))) << lit;
        EXPECT_TRUE(is_barker(reversed(x))) << lit;
    }
}

}  // namespace
}  // namespace turyn
