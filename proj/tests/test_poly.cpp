#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"

#include "toricb/poly.hpp"

using namespace toricb;
using oracle::Q;

namespace {

MultiPoly x(std::size_t i) { return MultiPoly::variable(2, i); }
MultiPoly k(long c) { return MultiPoly::constant(2, Rational(c)); }

}  // namespace

TEST(MultiPoly, ArithmeticAndCancellation) {
    MultiPoly p = (x(0) + k(1)) * (x(0) - k(1));
    EXPECT_EQ(p, x(0) * x(0) - k(1));
    EXPECT_EQ(p.total_degree(), 2u);
    EXPECT_TRUE((p - p).is_zero());
    EXPECT_EQ((p - p).size(), 0u);
    EXPECT_EQ(p.coefficient({2, 0}), 1);
    EXPECT_EQ(p.coefficient({1, 0}), 0);
}

TEST(MultiPoly, NoZeroCoefficientsStored) {
    MultiPoly p(2);
    p.add_term({1, 1}, 3);
    p.add_term({1, 1}, -3);
    EXPECT_TRUE(p.is_zero());
    p.add_term({0, 1}, 0);
    EXPECT_TRUE(p.is_zero());
}

TEST(MultiPoly, EvaluateMatchesProduct) {
    std::mt19937 rng(7);
    std::uniform_int_distribution<long> d(-5, 5);
    for (int it = 0; it < 100; ++it) {
        MultiPoly a = MultiPoly::linear({Rational(d(rng)), Rational(d(rng))}, Rational(d(rng)));
        MultiPoly b = MultiPoly::linear({Rational(d(rng)), Rational(d(rng))}, Rational(d(rng)));
        RatVec pt{Q(d(rng), 3), Q(d(rng), 2)};
        EXPECT_EQ((a * b).evaluate(pt), a.evaluate(pt) * b.evaluate(pt));
        EXPECT_EQ((a + b).evaluate(pt), a.evaluate(pt) + b.evaluate(pt));
        EXPECT_EQ(a * b, b * a);
    }
}

TEST(MultiPoly, ToString) {
    MultiPoly p = x(0) * x(0) * Q(1, 2) - x(0) * Q(1, 2);
    EXPECT_EQ(p.to_string({"s1", "s2"}), "1/2*s1^2 - 1/2*s1");
    EXPECT_EQ(MultiPoly(2).to_string(), "0");
    EXPECT_EQ((x(1) + k(3)).to_string(), "x2 + 3");
}

TEST(UniPoly, FromRootsAndEvaluate) {
    UniPoly p = UniPoly::from_roots({Rational(-1), Rational(-1), Q(-2, 3)});
    EXPECT_EQ(p.degree(), 3);
    EXPECT_EQ(p.leading(), 1);
    EXPECT_EQ(p.evaluate(Rational(-1)), 0);
    EXPECT_EQ(p.evaluate(Q(-2, 3)), 0);
    EXPECT_EQ(p.evaluate(Rational(0)), Q(2, 3));
}

TEST(UniPoly, DivModReconstructs) {
    std::mt19937 rng(13);
    std::uniform_int_distribution<long> d(-7, 7);
    for (int it = 0; it < 200; ++it) {
        std::vector<Rational> a(1 + it % 6), b(1 + it % 3);
        for (auto& c : a) c = Q(d(rng), 1 + it % 4);
        for (auto& c : b) c = d(rng);
        b.back() = b.back() == 0 ? Rational(1) : b.back();
        UniPoly p(a), q(b);
        auto [quot, rem] = p.divmod(q);
        EXPECT_EQ(quot * q + rem, p);
        EXPECT_LT(rem.degree(), q.degree());
    }
}

TEST(UniPoly, Divides) {
    UniPoly big = UniPoly::from_roots({Rational(1), Rational(2), Rational(2)});
    EXPECT_TRUE(UniPoly::from_roots({Rational(2)}).divides(big));
    EXPECT_TRUE(UniPoly::from_roots({Rational(2), Rational(2)}).divides(big));
    EXPECT_FALSE(UniPoly::from_roots({Rational(3)}).divides(big));
    EXPECT_THROW(UniPoly().divmod(UniPoly()), std::domain_error);
}

TEST(UniPoly, ReflectAndMonic) {
    UniPoly p({Rational(2), Rational(3)});  // 3t + 2
    EXPECT_EQ(p.reflect(), UniPoly({Rational(2), Rational(-3)}));
    EXPECT_EQ(p.monic(), UniPoly({Q(2, 3), Rational(1)}));
    EXPECT_EQ(UniPoly().degree(), -1);
    EXPECT_EQ(p.to_string(), "3*s + 2");
    EXPECT_EQ(UniPoly({Rational(0), Rational(0), Rational(1)}).to_string("t"), "t^2");
}
