/*
   Copyright 2026 The tpinv Authors

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

#include "support/random.hpp"
#include "tpinv/ring.hpp"

using namespace tpinv;

namespace {

const RingSpec Z = RingSpec::integers();
const RingSpec Z6 = RingSpec::integers_mod(6);

RingElement z(long v) { return {Z, v}; }
RingElement z6(long v) { return {Z6, v}; }

}  // namespace

template <class T>
concept Divisible = requires(T a) { a / a; };
static_assert(!Divisible<RingElement>, "rings expose no division");

TEST(Ring, Add) {
    EXPECT_EQ(z(2) + z(3), z(5));
    EXPECT_EQ((z6(4) + z6(5)).value(), 3);
    std::mt19937_64 rng(1);
    for (int i = 0; i < 50; ++i) {
        auto a = gen::random_element(rng, Z);
        EXPECT_EQ(a + RingElement::zero(Z), a);
    }
}

TEST(Ring, Mul) {
    EXPECT_TRUE((z6(4) * z6(3)).is_zero());
    EXPECT_EQ(z(-2) * z(3), z(-6));
    std::mt19937_64 rng(2);
    for (int i = 0; i < 50; ++i) {
        auto a = gen::random_element(rng, Z);
        EXPECT_EQ(RingElement::one(Z) * a, a);
    }
}

TEST(Ring, Neg) {
    EXPECT_EQ(-z(5), z(-5));
    EXPECT_EQ((-z6(2)).value(), 4);
    for (const auto& r : gen::standard_rings()) EXPECT_TRUE((-RingElement::zero(r)).is_zero());
}

TEST(Ring, MismatchedSpecsThrow) {
    EXPECT_THROW(z(1) + z6(1), SpecMismatch);
    EXPECT_THROW(z(1) * z6(1), SpecMismatch);
    EXPECT_THROW(z6(1) - RingElement(RingSpec::integers_mod(7), 1), SpecMismatch);
}

TEST(Ring, SpecEquality) {
    EXPECT_EQ(RingSpec::integers_mod(6), Z6);
    EXPECT_FALSE(RingSpec::integers_mod(6) == RingSpec::integers_mod(8));
    EXPECT_FALSE(Z == Z6);
    EXPECT_THROW(RingSpec::integers_mod(1), RangeError);
    EXPECT_THROW(RingSpec::integers_mod(-4), RangeError);
}

TEST(Ring, SpecStrings) {
    EXPECT_EQ(RingSpec::parse("z"), Z);
    EXPECT_EQ(RingSpec::parse("zmod:6"), Z6);
    EXPECT_EQ(RingSpec::parse("zmod:123456789012345678901234567890").modulus().str(), "123456789012345678901234567890");
    EXPECT_EQ(Z6.to_string(), "zmod:6");
    EXPECT_EQ(Z.to_string(), "z");
    EXPECT_THROW(RingSpec::parse("q"), ParseError);
    EXPECT_THROW(RingSpec::parse("zmod:"), ParseError);
    EXPECT_THROW(RingSpec::parse("zmod:-6"), ParseError);
    EXPECT_THROW(RingSpec::parse("zmod:6x"), ParseError);
    EXPECT_THROW(RingSpec::parse("zmod:1"), RangeError);
}

TEST(Ring, ParseAndFormat) {
    EXPECT_EQ(RingElement::parse(Z6, "10").value(), 4);
    EXPECT_EQ(RingElement::parse(Z6, "-1").value(), 5);
    EXPECT_EQ(RingElement::parse(Z, "-3"), z(-3));
    EXPECT_EQ(RingElement::parse(Z, "+0007").to_string(), "7");
    EXPECT_EQ(RingElement::parse(Z, "010").to_string(), "10");
    EXPECT_EQ(RingElement::parse(Z, "-0").to_string(), "0");
    EXPECT_THROW(RingElement::parse(Z, ""), ParseError);
    EXPECT_THROW(RingElement::parse(Z, "-"), ParseError);
    EXPECT_THROW(RingElement::parse(Z, "1e3"), ParseError);
    EXPECT_THROW(RingElement::parse(Z, " 3"), ParseError);
    try {
        RingElement::parse(Z, "12a");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.position(), 2u);
    }
}

TEST(Ring, NoOverflow) {
    const RingElement big = RingElement::parse(Z, "9223372036854775807");
    EXPECT_EQ((big * big).to_string(), "85070591730234615847396907784232501249");
    EXPECT_EQ((big + big).to_string(), "18446744073709551614");
}

class RingAxioms : public ::testing::TestWithParam<RingSpec> {};

TEST_P(RingAxioms, HoldOnRandomTriples) {
    const RingSpec ring = GetParam();
    std::mt19937_64 rng(17);
    const auto zero = RingElement::zero(ring), one = RingElement::one(ring);
    for (int i = 0; i < 1000; ++i) {
        const auto a = gen::random_element(rng, ring), b = gen::random_element(rng, ring),
                   c = gen::random_element(rng, ring);
        ASSERT_EQ((a + b) + c, a + (b + c));
        ASSERT_EQ((a * b) * c, a * (b * c));
        ASSERT_EQ(a + b, b + a);
        ASSERT_EQ(a * b, b * a);
        ASSERT_EQ(a * (b + c), a * b + a * c);
        ASSERT_EQ(a + zero, a);
        ASSERT_EQ(a * one, a);
        ASSERT_TRUE((a * zero).is_zero());
        ASSERT_TRUE((a + -a).is_zero());
        ASSERT_EQ(RingElement::parse(ring, a.to_string()), a);
    }
}

TEST_P(RingAxioms, CanonicalFormIsIdempotent) {
    const RingSpec ring = GetParam();
    std::mt19937_64 rng(23);
    std::uniform_int_distribution<long> d(-1000000, 1000000);
    for (int i = 0; i < 1000; ++i) {
        const Integer v = d(rng);
        const Integer once = ring.canonical(v);
        ASSERT_EQ(ring.canonical(once), once);
        if (ring.kind() == RingSpec::Kind::IntegersMod) {
            ASSERT_GE(once, 0);
            ASSERT_LT(once, ring.modulus());
        }
    }
}

INSTANTIATE_TEST_SUITE_P(StandardRings, RingAxioms, ::testing::ValuesIn(gen::standard_rings()),
                         [](const auto& info) {
                             auto s = info.param.to_string();
                             return s == "z" ? std::string("Z") : "Zmod" + info.param.modulus().str();
                         });
