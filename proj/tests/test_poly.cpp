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

#include "coxforge/poly.hpp"

#include <gtest/gtest.h>

#include "coxforge/enumerate.hpp"
#include "coxforge/parse.hpp"
#include "coxforge/random.hpp"

using namespace coxforge;

namespace {

const FieldChoice kFp = FieldChoice::fp(32003);
using P = Poly<Fp>;

TEST(MonomialBasis, AmbientCountAtOneTwo) {
    auto S = make_base_ring(3, kFp);
    auto basis = monomial_basis(*S, {1, 2});
    EXPECT_EQ(basis.size(), 20u);  // 2 * C(5,3)
    for (const auto& m : basis) EXPECT_EQ(m.bidegree(*S), (Bidegree{1, 2}));
    // descending lexicographic on exponent tuples, so x0*y0^2 comes first
    EXPECT_EQ(basis.front().to_string(*S), "x0*y0^2");
    EXPECT_EQ(basis.back().to_string(*S), "x1*y3^2");
}

TEST(MonomialBasis, NegativeFirstDegreeEmptyInAmbient) {
    auto S = make_base_ring(3, kFp);
    EXPECT_TRUE(monomial_basis(*S, {-1, 0}).empty());
    EXPECT_EQ(monomial_count(*S, {-1, 0}), 0);
}

TEST(MonomialBasis, SingleAuxGeneratorPiece) {
    // U for the special CY member: one w of degree (-2,4)
    auto S = make_base_ring(3, kFp);
    auto U = S->extend({{"w", {-2, 4}}});
    auto basis = monomial_basis(*U, {-2, 4});
    ASSERT_EQ(basis.size(), 1u);
    EXPECT_EQ(basis[0].to_string(*U), "w");
}

TEST(MonomialBasis, ClosedFormCountOnAmbient) {
    auto S = make_base_ring(4, kFp);
    RandomState rng(11);
    for (int i = 0; i < 40; ++i) {
        int a = static_cast<int>(rng.int_in(-2, 6));
        int b = static_cast<int>(rng.int_in(-2, 6));
        std::int64_t expect = (a >= 0 && b >= 0) ? (a + 1) * binomial(b + 4, 4) : 0;
        EXPECT_EQ(monomial_count(*S, {a, b}), expect);
        EXPECT_EQ(static_cast<std::int64_t>(monomial_basis(*S, {a, b}).size()), expect);
    }
}

TEST(MonomialBasis, CountMatchesEnumerationWithAux) {
    auto S = make_base_ring(3, kFp);
    auto U = S->extend({{"w1", {-3, 2}}, {"w2", {-2, 2}}});
    RandomState rng(12);
    for (int i = 0; i < 40; ++i) {
        Bidegree d{static_cast<int>(rng.int_in(-6, 6)), static_cast<int>(rng.int_in(0, 7))};
        EXPECT_EQ(monomial_count(*U, d),
                  static_cast<std::int64_t>(monomial_basis(*U, d).size()));
    }
}

TEST(PolyArithmetic, ProductsAndIdentity) {
    auto S = make_base_ring(3, kFp);
    P x0 = P::var(S, 0), x1 = P::var(S, 1);
    P y0 = P::var(S, S->y_index(0)), y1 = P::var(S, S->y_index(1));

    P prod = x0 * x1;
    EXPECT_EQ(prod.bidegree(), (Bidegree{2, 0}));
    EXPECT_EQ(prod.to_string(), "x0*x1");

    P f = parse_poly<Fp>(S, "3*y0^2*y1 - y2*y3^2");
    EXPECT_EQ(f * P::one(S), f);

    EXPECT_EQ((y0 + y1) * (y0 - y1), y0 * y0 - y1 * y1);
}

TEST(PolyArithmetic, HomogeneityTracking) {
    auto S = make_base_ring(3, kFp);
    P f = parse_poly<Fp>(S, "y0^2 + y1*y2");
    ASSERT_TRUE(f.bidegree().has_value());
    EXPECT_EQ(*f.bidegree(), (Bidegree{0, 2}));
    P g = parse_poly<Fp>(S, "y0 + x0");
    EXPECT_FALSE(g.bidegree().has_value());
    EXPECT_TRUE((f - f).is_zero());
}

TEST(PolyParser, RoundTripAndErrors) {
    auto S = make_base_ring(3, kFp);
    P f = parse_poly<Fp>(S, "3*y0^2*y1 - y2*y3^2");
    EXPECT_EQ(f.to_string(), "3*y0^2*y1 - y2*y3^2");
    EXPECT_EQ(parse_poly<Fp>(S, f.to_string()), f);

    try {
        parse_poly<Fp>(S, "y0 + 2*q3", 7);
        FAIL() << "unknown symbol accepted";
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line, 7);
        EXPECT_EQ(e.column, 8);
    }
    EXPECT_THROW(parse_poly<Fp>(S, ""), ParseError);
    EXPECT_THROW(parse_poly<Fp>(S, "y0 + "), ParseError);
    EXPECT_THROW(parse_poly<Fp>(S, "y0^-2"), ParseError);
}

TEST(PolyParser, RationalCoefficients) {
    auto S = make_base_ring(3, FieldChoice::qq());
    Poly<Rat> f = parse_poly<Rat>(S, "1/2*y0 - 3/4*y1");
    EXPECT_EQ(f.to_string(), "1/2*y0 - 3/4*y1");
}

TEST(PolyEmbed, IntoExtendedRing) {
    auto S = make_base_ring(3, kFp);
    auto U = S->extend({{"z1", {-1, 2}}});
    P f = parse_poly<Fp>(S, "y0^2 + x0*x1*y1^2");
    Poly<Fp> g = f.embed(U);
    EXPECT_EQ(g.to_string(), f.to_string());
    Poly<Fp> zpoly = parse_poly<Fp>(U, "z1*y0");
    EXPECT_THROW(zpoly.embed(S), UsageError);
}

TEST(FreeAlgebraDim, SmallClosedForms) {
    // k[x0,x1]: (a,0) piece has dimension a+1
    std::vector<Bidegree> xs{{1, 0}, {1, 0}};
    EXPECT_EQ(free_algebra_dim(xs, {5, 0}), 6);
    EXPECT_EQ(free_algebra_dim(xs, {-1, 0}), 0);
    // generator set of the (4,1) linear example
    std::vector<Bidegree> lin{{1, 0}, {1, 0}, {-2, 1}, {-1, 1}, {-1, 1}};
    EXPECT_EQ(free_algebra_dim(lin, {0, 0}), 1);
    EXPECT_EQ(free_algebra_dim(lin, {-2, 1}), 1);  // just w
    EXPECT_EQ(free_algebra_dim(lin, {-1, 1}), 4);  // z3, z4, x0*w, x1*w
    EXPECT_EQ(free_algebra_dim(lin, {1, 0}), 2);   // x0, x1
}

}  // namespace
