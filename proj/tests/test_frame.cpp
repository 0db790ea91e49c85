#include <random>

#include <gtest/gtest.h>

#include "cbel/frame.hpp"
#include "support.hpp"

using cbel::Frame;
using cbel::Proposition;
using cbel::test::make_frame;

namespace {

TEST(Frame, ParseProposition) {
    const Frame frame = make_frame(3);
    const std::vector<std::string> ac = {"a", "c"};
    EXPECT_EQ(frame.parse(ac).bits(), 0b101u);
    EXPECT_EQ(frame.parse({}).bits(), 0u);
    const std::vector<std::string> dup = {"b", "b", "b"};
    EXPECT_EQ(frame.parse(dup).bits(), 0b010u);

    const Frame two = make_frame(2);
    const std::vector<std::string> unknown = {"x"};
    try {
        two.parse(unknown);
        FAIL() << "expected UnknownLabel";
    } catch (const cbel::UnknownLabel& e) {
        EXPECT_EQ(e.label(), "x");
    }
}

TEST(Frame, Complement) {
    const Frame frame = make_frame(3);
    EXPECT_EQ(frame.complement(Proposition{0b001}).bits(), 0b110u);
    EXPECT_EQ(frame.complement(Proposition{0b101}).bits(), 0b010u);
    const Frame two = make_frame(2);
    EXPECT_EQ(two.complement(two.universe()), cbel::empty_set);
}

TEST(Frame, SetAlgebra) {
    const Proposition ab{0b011};
    const Proposition bc{0b110};
    EXPECT_EQ((ab & bc).bits(), 0b010u);
    EXPECT_EQ((Proposition{0b001} & Proposition{0b010}), cbel::empty_set);
    EXPECT_EQ((Proposition{0b001} | Proposition{0b010}).bits(), 0b011u);
    EXPECT_EQ((ab | cbel::empty_set), ab);

    EXPECT_TRUE(Proposition{0b001}.is_subset_of(ab));
    EXPECT_FALSE(ab.is_subset_of(Proposition{0b001}));
    EXPECT_TRUE(cbel::empty_set.is_subset_of(cbel::empty_set));
    EXPECT_TRUE(cbel::empty_set.is_subset_of(bc));

    EXPECT_EQ(cbel::empty_set.cardinality(), 0);
    EXPECT_EQ(make_frame(3).universe().cardinality(), 3);
    EXPECT_EQ(Proposition{0b101}.cardinality(), 2);
}

TEST(Frame, IdentitiesWithUniverse) {
    const Frame frame = make_frame(4);
    const Proposition a{0b0110};
    EXPECT_EQ(a & frame.universe(), a);
    EXPECT_EQ(a | frame.universe(), frame.universe());
}

TEST(Frame, Powerset) {
    const auto single = make_frame(1).powerset();
    ASSERT_EQ(single.size(), 2u);
    EXPECT_EQ(single.front(), cbel::empty_set);
    EXPECT_EQ(single.back().bits(), 1u);

    const auto two = make_frame(2).powerset();
    ASSERT_EQ(two.size(), 4u);
    for (std::uint32_t mask = 0; mask < 4; ++mask) EXPECT_EQ(two[mask].bits(), mask);

    const Frame big = make_frame(20);
    EXPECT_EQ(big.proposition_count(), 1u << 20);
    const auto all = big.powerset();
    EXPECT_EQ(all.size(), 1u << 20);
    EXPECT_EQ(all.front(), cbel::empty_set);
    EXPECT_EQ(all.back(), big.universe());
    // ascending order makes the 2^N values trivially distinct
    for (std::size_t i = 1; i < all.size(); i += 4999)
        EXPECT_LT(all[i - 1], all[i]);
}

TEST(Frame, ConstructionRules) {
    EXPECT_THROW(Frame({}), cbel::InvalidFrame);
    EXPECT_THROW(Frame({"a", ""}), cbel::InvalidFrame);
    EXPECT_THROW(Frame({"a", "b", "a"}), cbel::InvalidFrame);
    EXPECT_THROW(Frame({"a|b"}), cbel::InvalidFrame);
    EXPECT_THROW(Frame({"a,b"}), cbel::InvalidFrame);
    EXPECT_NO_THROW(make_frame(24));
    try {
        make_frame(25);
        FAIL() << "expected FrameTooLarge";
    } catch (const cbel::FrameTooLarge& e) {
        EXPECT_EQ(e.size(), 25);
        EXPECT_EQ(e.limit(), 24);
    }
}

TEST(Frame, LabelRendering) {
    const Frame frame = make_frame(3);
    EXPECT_EQ(frame.join(Proposition{0b101}, "|"), "a|c");
    EXPECT_EQ(frame.join(cbel::empty_set, "|"), "");
    EXPECT_EQ(frame.format(Proposition{0b011}), "{a,b}");
    EXPECT_EQ(frame.format(cbel::empty_set), "{}");
    const auto labels = frame.labels_of(Proposition{0b110});
    EXPECT_EQ(labels, (std::vector<std::string>{"b", "c"}));
}

TEST(Frame, AlgebraProperties) {
    const Frame frame = make_frame(8);
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 2000; ++trial) {
        const Proposition a{static_cast<std::uint32_t>(rng() & frame.universe().bits())};
        const Proposition b{static_cast<std::uint32_t>(rng() & frame.universe().bits())};

        EXPECT_EQ(frame.complement(frame.complement(a)), a);
        EXPECT_EQ(a.cardinality() + frame.complement(a).cardinality(), frame.size());

        const bool subset = a.is_subset_of(b);
        EXPECT_EQ(subset, (a | b) == b);
        EXPECT_EQ(subset, (a & b) == a);
    }
}

} // namespace
