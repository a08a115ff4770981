/*
   Copyright 2026 The coxforge authors

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

#include "coxforge/field.hpp"

#include <gtest/gtest.h>

#include "coxforge/random.hpp"

using namespace coxforge;

namespace {

const FieldChoice kFp = FieldChoice::fp(32003);
const FieldChoice kQQ = FieldChoice::qq();

TEST(Rational, ExactFractionArithmetic) {
    Rat a(2, 4), b(1, 4);
    EXPECT_EQ(a + b, Rat(3, 4));
    // canonical form: lowest terms, positive denominator
    EXPECT_EQ(Rat(2, 4).to_string(), "1/2");
    EXPECT_EQ(Rat(1, -2).to_string(), "-1/2");
    EXPECT_EQ(Rat(-6, -4).to_string(), "3/2");
}

TEST(Rational, ReductionIdempotent) {
    Rat q(36, 48);
    Rat again(q.value());  // re-canonicalizing a canonical value is a no-op
    EXPECT_EQ(q, again);
    EXPECT_EQ(q.to_string(), "3/4");
}

TEST(PrimeField, InverseDefinition) {
    Fp x(32003, 7);
    EXPECT_TRUE((x * x.inv()).is_one());
    EXPECT_TRUE((x / x).is_one());
}

TEST(PrimeField, NegationIsAdditiveInverse) {
    for (std::int64_t v : {0, 1, 7, 31999}) {
        Fp a(32003, v);
        EXPECT_TRUE((Fp(32003, 0) - a == -a));
        EXPECT_TRUE((a + (-a)).is_zero());
    }
}

TEST(PrimeField, Errors) {
    EXPECT_THROW(Fp(32003, 0).inv(), DivisionByZeroError);
    EXPECT_THROW(Rat().inv(), DivisionByZeroError);
    EXPECT_THROW(Fp(32003, 1) + Fp(101, 1), FieldMismatchError);
    EXPECT_THROW(FieldChoice::fp(32004), UsageError);
    EXPECT_THROW(FieldChoice::fp(1ull << 27), UsageError);
}

TEST(FieldChoice, ParseRoundTrip) {
    EXPECT_EQ(FieldChoice::parse("fp:32003"), kFp);
    EXPECT_EQ(FieldChoice::parse("qq"), kQQ);
    EXPECT_EQ(kFp.to_string(), "fp:32003");
    EXPECT_THROW(FieldChoice::parse("f2"), UsageError);
}

template <Scalar K>
void check_axioms(const FieldChoice& fc, std::uint64_t seed) {
    RandomState rng(seed);
    for (int i = 0; i < 300; ++i) {
        K a = random_scalar<K>(rng, fc);
        K b = random_scalar<K>(rng, fc);
        K c = random_scalar<K>(rng, fc);
        EXPECT_EQ((a + b) + c, a + (b + c));
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_EQ(a + b, b + a);
        EXPECT_EQ(a * b, b * a);
        EXPECT_TRUE((a - a).is_zero());
        if (!a.is_zero()) {
            EXPECT_TRUE((a * a.inv()).is_one());
            EXPECT_EQ(b / a * a, b);
        }
    }
}

TEST(FieldAxioms, RandomTriplesFp) { check_axioms<Fp>(kFp, 42); }
TEST(FieldAxioms, RandomTriplesRat) { check_axioms<Rat>(kQQ, 43); }

TEST(Random, SameSeedSameStream) {
    RandomState a(42), b(42);
    for (int i = 0; i < 1000; ++i) {
        EXPECT_EQ(random_scalar<Fp>(a, kFp), random_scalar<Fp>(b, kFp));
    }
}

TEST(Random, AdvancedStreamDiffers) {
    // statistical smoke test: consecutive draws collide only ~ 10^4/p times
    RandomState rng(42);
    int collisions = 0;
    Fp prev = random_scalar<Fp>(rng, kFp);
    for (int i = 0; i < 10000; ++i) {
        Fp next = random_scalar<Fp>(rng, kFp);
        if (next == prev) ++collisions;
        prev = next;
    }
    EXPECT_LT(collisions, 20);
}

TEST(Random, RationalNumeratorWithinDocumentedBound) {
    RandomState rng(7);
    for (int i = 0; i < 1000; ++i) {
        Rat q = random_scalar<Rat>(rng, kQQ);
        EXPECT_LE(abs(q.value().get_num()), kRationalCoeffBound);
        EXPECT_EQ(q.value().get_den(), 1);
    }
}

}  // namespace
