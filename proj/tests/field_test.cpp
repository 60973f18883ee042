// Copyright 2026 The gbeta Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "gbeta/field.hpp"
#include "gbeta/literal.hpp"

#include "oracle.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace gbeta;

namespace {

FieldElem fe(const char* text) { return parse_field_elem(text); }

FieldElem random_elem(std::mt19937_64& rng, int bound, int max_den)
{
    auto draw = [&](int lo, int hi) { return lo + static_cast<int>(rng() % static_cast<unsigned>(hi - lo + 1)); };
    return FieldElem(draw(-bound, bound), draw(-bound, bound), draw(1, max_den));
}

} // namespace

// =============================================================================
// Params
// =============================================================================

TEST(ParamsTest, OddK1) {
    const Params p = make_params(1, Parity::odd);
    EXPECT_EQ(p.max_digit(), 3);
    EXPECT_EQ(p.discriminant(), 12);
    EXPECT_EQ(p.beta(), FieldElem(1, 0, 1));
    EXPECT_EQ(p.interval_bound(), fe("(-1+1*b)"));
}

TEST(ParamsTest, OddK2) {
    const Params p = make_params(2, Parity::odd);
    EXPECT_EQ(p.max_digit(), 5);
    EXPECT_EQ(p.discriminant(), 21);
    // beta = (3 + sqrt 21)/2
    const auto o = oracle::Field::make(2, true);
    EXPECT_EQ(o.from(p.beta()), (oracle::Surd{oracle::Q(3, 2), oracle::Q(1, 2)}));
}

TEST(ParamsTest, EvenK1) {
    const Params p = make_params(1, Parity::even);
    EXPECT_EQ(p.max_digit(), 2);
    EXPECT_EQ(p.beta(), FieldElem::integer(2));
    EXPECT_EQ(p.interval_bound(), FieldElem::integer(2));
}

TEST(ParamsTest, RejectsNonPositiveK) {
    EXPECT_THROW(make_params(0, Parity::odd), invalid_parameter);
    EXPECT_THROW(make_params(-3, Parity::even), invalid_parameter);
    EXPECT_THROW(parse_parity("both"), invalid_parameter);
}

TEST(ParamsTest, MinimalPolynomial) {
    for (int k = 1; k <= 5; ++k) {
        const Params p = make_params(k, Parity::odd);
        const FieldElem b = p.beta();
        EXPECT_EQ(p.mul(b, b), b * BigInt(k + 1) + FieldElem::integer(k + 1));
        // (k+1)/beta + (k+1)/beta^2 = 1
        const FieldElem ib = p.inverse(b);
        EXPECT_EQ(ib * BigInt(k + 1) + p.mul(ib, ib) * BigInt(k + 1), p.one());
    }
}

TEST(ParamsTest, IntervalBoundIsMOverBetaMinusOne) {
    for (int k = 1; k <= 4; ++k)
        for (Parity parity : {Parity::odd, Parity::even}) {
            const Params p = make_params(k, parity);
            const FieldElem expected = p.div(FieldElem::integer(p.max_digit()), p.beta() - p.one());
            EXPECT_EQ(p.interval_bound(), expected) << "k=" << k;
        }
}

TEST(ParamsTest, DigitClassesPartition) {
    for (int k = 1; k <= 4; ++k) {
        const Params p = make_params(k, Parity::odd);
        for (int d = 0; d <= p.max_digit(); ++d) {
            EXPECT_NE(p.is_small(d), p.is_big(d));
            EXPECT_EQ(p.in_S_minus(d), p.is_small(d) && d != k);
            EXPECT_EQ(p.in_S_lower(d), p.is_small(d) && d != 0);
            EXPECT_EQ(p.in_B_minus(d), p.is_big(d) && d != p.max_digit());
            EXPECT_EQ(p.in_B_lower(d), p.is_big(d) && d != k + 1);
        }
        EXPECT_EQ(p.small_digits().size() + p.big_digits().size(), static_cast<std::size_t>(p.max_digit() + 1));
    }
}

// =============================================================================
// Arithmetic
// =============================================================================

TEST(FieldElemTest, CanonicalForm) {
    const FieldElem x(2, 4, -6);
    EXPECT_EQ(x.beta_coeff(), -1);
    EXPECT_EQ(x.rational_part(), -2);
    EXPECT_EQ(x.denominator(), 3);
    EXPECT_EQ(FieldElem(0, 0, 17).denominator(), 1);
    EXPECT_EQ(FieldElem(x.beta_coeff(), x.rational_part(), x.denominator()), x);
    EXPECT_THROW(FieldElem(1, 1, 0), domain_error);
}

TEST(FieldElemTest, EvenParityFoldsBeta) {
    const Params p = make_params(1, Parity::even);
    const FieldElem x = p.canonical(FieldElem(1, 1, 4));
    EXPECT_EQ(x.beta_coeff(), 0);
    EXPECT_EQ(x, FieldElem::rational(3, 4));
}

TEST(FieldElemTest, AddSubNeg) {
    EXPECT_EQ(fe("1") + fe("(-1+1*b)/2"), fe("(1+1*b)/2"));
    EXPECT_TRUE((fe("(1+1*b)/2") - fe("(1+1*b)/2")).is_zero());
    EXPECT_EQ(fe("(0+1*b)/2") + fe("(0+1*b)/2"), fe("(0+1*b)"));
    EXPECT_EQ(-fe("(1-2*b)/3"), fe("(-1+2*b)/3"));
}

TEST(FieldElemTest, MulBeta) {
    const Params p = make_params(1, Parity::odd);
    EXPECT_EQ(p.mul_beta(p.beta()), fe("(2+2*b)"));
    EXPECT_EQ(p.mul_beta(fe("1/2")), fe("(0+1*b)/2"));
    EXPECT_EQ(p.mul_beta(fe("(-2+1*b)")), fe("2"));
    const Params e = make_params(2, Parity::even);
    EXPECT_EQ(e.mul_beta(fe("1/3")), fe("1"));
}

TEST(FieldElemTest, MinimalPolynomialOnRandomElements) {
    std::mt19937_64 rng(7);
    for (int k = 1; k <= 3; ++k) {
        const Params p = make_params(k, Parity::odd);
        for (int i = 0; i < 1000; ++i) {
            const FieldElem x = random_elem(rng, 50, 30);
            const FieldElem bx = p.mul_beta(x);
            EXPECT_EQ(p.mul_beta(bx), bx * BigInt(k + 1) + x * BigInt(k + 1));
            EXPECT_EQ(p.div_beta(bx), x);
        }
    }
}

TEST(FieldElemTest, ProductsMatchOracle) {
    std::mt19937_64 rng(11);
    for (int k = 1; k <= 3; ++k) {
        const Params p = make_params(k, Parity::odd);
        const auto o = oracle::Field::make(k, true);
        for (int i = 0; i < 300; ++i) {
            const FieldElem x = random_elem(rng, 40, 20), y = random_elem(rng, 40, 20);
            EXPECT_EQ(o.from(p.mul(x, y)), o.mul(o.from(x), o.from(y)));
            if (!y.is_zero()) {
                EXPECT_EQ(o.from(p.div(x, y)), o.div(o.from(x), o.from(y)));
            }
        }
    }
}

TEST(FieldElemTest, PowBeta) {
    const Params p = make_params(1, Parity::odd);
    FieldElem acc = p.one();
    for (unsigned n = 0; n < 12; ++n) {
        EXPECT_EQ(p.pow_beta(n), acc);
        acc = p.mul_beta(acc);
    }
}

// =============================================================================
// Ordering
// =============================================================================

TEST(FieldElemTest, CompareExamples) {
    const Params p = make_params(1, Parity::odd);
    EXPECT_EQ(p.compare(fe("1"), fe("(-2+1*b)")), std::strong_ordering::greater);
    EXPECT_EQ(p.compare(fe("(-1+1*b)"), fe("1")), std::strong_ordering::greater);
    EXPECT_EQ(p.compare(fe("(3+5*b)/7"), fe("(3+5*b)/7")), std::strong_ordering::equal);
}

TEST(FieldElemTest, CompareAgreesWithHighPrecisionEvaluation) {
    std::mt19937_64 rng(13);
    for (int k = 1; k <= 3; ++k) {
        const Params p = make_params(k, Parity::odd);
        const auto o = oracle::Field::make(k, true);
        for (int i = 0; i < 10000 / 3; ++i) {
            const FieldElem a = random_elem(rng, 1000, 100), b = random_elem(rng, 1000, 100);
            const oracle::Float diff = o.approx(o.from(a)) - o.approx(o.from(b));
            const int expected = diff > 0 ? 1 : (diff < 0 ? -1 : 0);
            EXPECT_EQ(p.sign(a - b), expected) << format_field_elem(a) << " vs " << format_field_elem(b);
        }
    }
}

TEST(FieldElemTest, SignOfNearCancellation) {
    // 7 - 4 sqrt 3 > 0 but tiny; 2*beta - 2 - 2 sqrt 3 = 0 for k=1.
    const Params p = make_params(1, Parity::odd);
    // sqrt 3 = beta - 1, so 7 - 4 sqrt 3 = 11 - 4 beta.
    EXPECT_EQ(p.sign(fe("(11-4*b)")), 1);
    EXPECT_EQ(p.sign(fe("(-11+4*b)")), -1);
    // 97 - 56 sqrt 3 = 153 - 56 beta, about 0.0052.
    EXPECT_EQ(p.sign(fe("(153-56*b)")), 1);
    EXPECT_EQ(p.sign(fe("(152-56*b)")), -1);
}

TEST(FieldElemTest, Intervals) {
    const Params p = make_params(1, Parity::odd);
    EXPECT_TRUE(p.in_closed_interval(p.zero()));
    EXPECT_TRUE(p.in_closed_interval(p.interval_bound()));
    EXPECT_FALSE(p.in_open_interval(p.zero()));
    EXPECT_FALSE(p.in_open_interval(p.interval_bound()));
    EXPECT_TRUE(p.in_open_interval(p.one()));
    EXPECT_FALSE(p.in_closed_interval(fe("2")));
}

// =============================================================================
// Membership
// =============================================================================

TEST(MembershipTest, Examples) {
    const Params odd = make_params(1, Parity::odd);
    EXPECT_EQ(odd.membership(fe("1")), Membership::in_S);
    EXPECT_EQ(odd.membership(fe("(1+1*b)/6")), Membership::not_in_S);
    const Params even = make_params(1, Parity::even);
    EXPECT_EQ(even.membership(fe("3/4")), Membership::in_F);
    EXPECT_EQ(even.membership(fe("1/3")), Membership::not_in_F);
    EXPECT_EQ(to_string(Membership::in_S), "InS");
    EXPECT_EQ(to_string(Membership::not_in_F), "NotInF");
}

TEST(MembershipTest, RadicalCriterion) {
    // k=5: k+1 = 6, so denominators built from 2 and 3 are members.
    const Params p = make_params(5, Parity::odd);
    EXPECT_EQ(p.membership(fe("1/12")), Membership::in_S);
    EXPECT_EQ(p.membership(fe("(1+1*b)/18")), Membership::in_S);
    EXPECT_EQ(p.membership(fe("1/10")), Membership::not_in_S);
}

TEST(MembershipTest, OutsideOpenIntervalThrows) {
    const Params p = make_params(1, Parity::odd);
    EXPECT_THROW(p.membership(p.zero()), domain_error);
    EXPECT_THROW(p.membership(fe("2")), domain_error);
}

// =============================================================================
// Literals
// =============================================================================

TEST(LiteralTest, RoundTrip) {
    for (const char* text : {"(1+1*b)/6", "(0+1*b)/2", "3/4", "7", "-2/5", "(3-2*b)/7", "(-1+1*b)"}) {
        const FieldElem x = fe(text);
        EXPECT_EQ(fe(format_field_elem(x).c_str()), x) << text;
    }
    EXPECT_EQ(format_field_elem(fe("(1+1*b)/6")), "(1+1*b)/6");
    EXPECT_EQ(format_field_elem(fe("6/8")), "3/4");
    EXPECT_EQ(format_field_elem(fe("( 2 - 4*b ) / 6")), "(1-2*b)/3");
}

TEST(LiteralTest, Rejects) {
    EXPECT_THROW(fe("1/0"), parse_error);
    EXPECT_THROW(fe("b"), parse_error);
    EXPECT_THROW(fe("(1+b)/2"), parse_error);
    EXPECT_THROW(fe(""), parse_error);
}
