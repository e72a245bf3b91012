#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "turyn/sequence.hpp"

namespace turyn {
namespace {

TEST(BinarySequence, RejectsValuesOtherThanPlusMinusOne) {
    EXPECT_THROW(BinarySequence({1, 0, -1}), ValidationError);
    EXPECT_THROW(BinarySequence({2}), ValidationError);
}

TEST(BinarySequence, AtIsOneBased) {
    const BinarySequence x{1, -1, -1};
    EXPECT_EQ(x.at(1), 1);
    EXPECT_EQ(x.at(3), -1);
    EXPECT_THROW(x.at(0), DomainError);
    EXPECT_THROW(x.at(4), DomainError);
}

TEST(BinarySequence, LexOrderPutsPlusFirst) {
    EXPECT_TRUE(lex_less(parse_literal("++-"), parse_literal("+-+")));
    EXPECT_FALSE(lex_less(parse_literal("+-+"), parse_literal("++-")));
    EXPECT_TRUE(lex_less(parse_literal("++"), parse_literal("++-")));
    EXPECT_FALSE(lex_less(parse_literal("+-"), parse_literal("+-")));
}

TEST(BinarySequence, Transforms) {
    const auto x = parse_literal("++-+");
    EXPECT_EQ(to_literal(negated(x)), "--+-");
    EXPECT_EQ(to_literal(reversed(x)), "+-++");
    // (-1)^i x_i: positions 1 and 3 flip.
    EXPECT_EQ(to_literal(alternated(x)), "-+++");
    EXPECT_EQ(to_literal(padded(x, 6)), "++-+++");
    EXPECT_EQ(padded(x, 2), x);
}

TEST(RleDecode, PublishedPrefix) {
    const auto x = rle_decode({Sign::plus, {3, 3, 6, 3, 2, 2}});
    ASSERT_EQ(x.size(), 19u);
    EXPECT_EQ(to_literal(x), "+++---++++++---++--");
    for (std::size_t i : {1, 2, 3, 7, 8, 12, 16, 17}) EXPECT_EQ(x.at(i), 1) << i;
    for (std::size_t i : {4, 5, 6, 13, 14, 15, 18, 19}) EXPECT_EQ(x.at(i), -1) << i;
}

TEST(RleDecode, SmallCases) {
    EXPECT_EQ(rle_decode({Sign::plus, {1}}), BinarySequence({1}));
    EXPECT_EQ(rle_decode({Sign::minus, {2, 1}}), BinarySequence({-1, -1, 1}));
}

TEST(RleDecode, RejectsZeroRunAndEmpty) {
    EXPECT_THROW(rle_decode({Sign::plus, {3, 0, 2}}), ValidationError);
    EXPECT_THROW(rle_decode({Sign::plus, {}}), ValidationError);
}

TEST(RleEncode, Examples) {
    EXPECT_EQ(rle_encode(BinarySequence::constant(5)), (RunLengthEncoding{Sign::plus, {5}}));
    EXPECT_EQ(rle_encode(parse_literal("+++---++++++---++--")),
              (RunLengthEncoding{Sign::plus, {3, 3, 6, 3, 2, 2}}));
    EXPECT_EQ(rle_encode(BinarySequence({-1, 1, -1})), (RunLengthEncoding{Sign::minus, {1, 1, 1}}));
    EXPECT_THROW(rle_encode(BinarySequence{}), ValidationError);
}

TEST(RleCodec, RoundTripsRandomSequences) {
    std::mt19937_64 rng(1);
    for (int trial = 0; trial < 1000; ++trial) {
        const auto x = oracle::to_binary(oracle::random_seq(rng, oracle::random_length(rng, 1, 80)));
        const auto rle = rle_encode(x);
        EXPECT_EQ(rle_decode(rle), x);
        EXPECT_EQ(rle.total_length(), x.size());
        // Maximal runs: re-encoding a decode of the encoding is stable.
        EXPECT_EQ(rle_encode(rle_decode(rle)), rle);
    }
}

TEST(RleCodec, RoundTripsRandomEncodings) {
    std::mt19937_64 rng(2);
    std::uniform_int_distribution<std::size_t> run(1, 9);
    for (int trial = 0; trial < 1000; ++trial) {
        RunLengthEncoding rle{trial % 2 ? Sign::plus : Sign::minus, {}};
        const auto count = oracle::random_length(rng, 1, 12);
        for (std::size_t i = 0; i < count; ++i) rle.runs.push_back(run(rng));
        EXPECT_EQ(rle_encode(rle_decode(rle)), rle);
        EXPECT_EQ(parse_rle(to_text(rle)), rle);
    }
}

TEST(TextFormat, Literal) {
    EXPECT_EQ(to_literal(parse_literal("+-+--")), "+-+--");
    EXPECT_THROW(parse_literal(""), ParseError);
    try {
        parse_literal("++x-");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.position(), 2u);
        EXPECT_NE(std::string(e.what()).find("'x'"), std::string::npos);
    }
}

TEST(TextFormat, RleSignIsExplicitUnlessDefaulted) {
    EXPECT_EQ(parse_rle("+3,3,6,3,2,2"), (RunLengthEncoding{Sign::plus, {3, 3, 6, 3, 2, 2}}));
    EXPECT_EQ(parse_rle("-2,1"), (RunLengthEncoding{Sign::minus, {2, 1}}));
    EXPECT_THROW(parse_rle("3,3"), ParseError);
    EXPECT_EQ(parse_rle("3,3", Sign::plus), (RunLengthEncoding{Sign::plus, {3, 3}}));
    EXPECT_EQ(to_text({Sign::minus, {1, 12}}), "-1,12");
}

TEST(TextFormat, RleErrorsNameThePosition) {
    auto position_of = [](const char* text) -> std::size_t {
        try {
            parse_rle(text);
        } catch (const ParseError& e) {
            return e.position();
        }
        return 999;
    };
    EXPECT_EQ(position_of("+0,3"), 1u);
    EXPECT_EQ(position_of("+3,,3"), 3u);
    EXPECT_EQ(position_of("+3,"), 3u);
    EXPECT_EQ(position_of("+3;2"), 2u);
    EXPECT_EQ(position_of("+3,-2"), 3u);
    EXPECT_EQ(position_of(""), 0u);
    EXPECT_EQ(position_of("+"), 1u);
}

}  // namespace
}  // namespace turyn
