#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "toricb/bsato.hpp"
#include "toricb/groebner.hpp"

using namespace toricb;
using oracle::Q;

namespace {

MultiPoly v(std::size_t n, std::size_t i) { return MultiPoly::variable(n, i); }
MultiPoly k(std::size_t n, long c) { return MultiPoly::constant(n, Rational(c)); }

void expect_sound(const std::vector<MultiPoly>& gens, const std::vector<MultiPoly>& basis, const MonomialOrder& order) {
    GroebnerCheck c = verify_groebner(gens, basis, order);
    EXPECT_TRUE(c.spolys_reduce_to_zero);
    EXPECT_TRUE(c.inputs_reduce_to_zero);
}

}  // namespace

TEST(MonomialOrder, GrevlexAndBlocks) {
    MonomialOrder g = MonomialOrder::grevlex(3);
    EXPECT_GT(g.compare({2, 0, 0}, {1, 0, 0}), 0);  // degree first
    EXPECT_GT(g.compare({1, 1, 0}, {1, 0, 1}), 0);  // smaller last exponent wins
    EXPECT_GT(g.compare({0, 2, 0}, {1, 0, 1}), 0);
    EXPECT_EQ(g.compare({1, 2, 3}, {1, 2, 3}), 0);
    MonomialOrder e = MonomialOrder::elimination(2, 1);
    EXPECT_GT(e.compare({1, 0, 0}, {0, 0, 9}), 0);  // any s beats any power of t
    EXPECT_GT(e.compare({0, 0, 2}, {0, 0, 1}), 0);
}

TEST(Groebner, AlreadyABasis) {
    std::vector<MultiPoly> gens{v(2, 0), v(2, 1)};
    auto basis = groebner_basis(gens, MonomialOrder::grevlex(2));
    ASSERT_EQ(basis.size(), 2u);
    EXPECT_EQ(basis[0], v(2, 1));
    EXPECT_EQ(basis[1], v(2, 0));
    expect_sound(gens, basis, MonomialOrder::grevlex(2));
}

TEST(Groebner, UnitIdeal) {
    // s1 = s1 (s1 s2 + 1) - s2 s1^2, then 1 = (s1 s2 + 1) - s2 s1
    std::vector<MultiPoly> gens{v(2, 0) * v(2, 0), v(2, 0) * v(2, 1) + k(2, 1)};
    auto basis = groebner_basis(gens, MonomialOrder::grevlex(2));
    ASSERT_EQ(basis.size(), 1u);
    EXPECT_EQ(basis[0], k(2, 1));
    expect_sound(gens, basis, MonomialOrder::grevlex(2));
}

TEST(Groebner, EliminationSubstitution) {
    // variables s1, s2, t
    std::vector<MultiPoly> gens{v(3, 2) - v(3, 0) - v(3, 1), v(3, 0) - k(3, 1), v(3, 1) - k(3, 2)};
    MonomialOrder order = MonomialOrder::elimination(2, 1);
    auto basis = groebner_basis(gens, order);
    EXPECT_NE(std::find(basis.begin(), basis.end(), v(3, 2) - k(3, 3)), basis.end());
    expect_sound(gens, basis, order);
}

TEST(Groebner, TwistedCubicImplicitization) {
    // x = t^2, y = t^3 in variables (t, x, y); eliminating t leaves y^2 - x^3
    std::vector<MultiPoly> gens{v(3, 1) - v(3, 0) * v(3, 0), v(3, 2) - v(3, 0) * v(3, 0) * v(3, 0)};
    MonomialOrder order({1, 2});
    auto basis = groebner_basis(gens, order);
    expect_sound(gens, basis, order);
    std::vector<MultiPoly> eliminated;
    for (const auto& g : basis) {
        bool free = std::all_of(g.terms().begin(), g.terms().end(), [](const auto& t) { return t.first[0] == 0; });
        if (free) eliminated.push_back(g);
    }
    ASSERT_EQ(eliminated.size(), 1u);
    MultiPoly expected = v(3, 2) * v(3, 2) - v(3, 1) * v(3, 1) * v(3, 1);
    EXPECT_TRUE(eliminated[0] == expected || eliminated[0] == -expected);
}

TEST(Groebner, ZeroIdealAndZeroInputs) {
    EXPECT_TRUE(groebner_basis({MultiPoly(2)}, MonomialOrder::grevlex(2)).empty());
    auto b = groebner_basis({MultiPoly(2), v(2, 0)}, MonomialOrder::grevlex(2));
    ASSERT_EQ(b.size(), 1u);
    EXPECT_EQ(b[0], v(2, 0));
}

TEST(Groebner, ReducedBasisIsIndependentOfInputOrder) {
    std::mt19937 rng(31);
    std::uniform_int_distribution<long> c(-3, 3);
    std::uniform_int_distribution<unsigned> e(0, 2);
    for (int it = 0; it < 40; ++it) {
        std::vector<MultiPoly> gens;
        for (int g = 0; g < 3; ++g) {
            MultiPoly p(3);
            for (int t = 0; t < 3; ++t) p.add_term({e(rng), e(rng), e(rng)}, Rational(c(rng)));
            if (!p.is_zero()) gens.push_back(p);
        }
        if (gens.empty()) continue;
        MonomialOrder order = it % 2 ? MonomialOrder::grevlex(3) : MonomialOrder::elimination(2, 1);
        GroebnerStats stats;
        auto basis = groebner_basis(gens, order, &stats);
        expect_sound(gens, basis, order);
        std::reverse(gens.begin(), gens.end());
        EXPECT_EQ(groebner_basis(gens, order), basis);
        for (const auto& g : basis) {
            EXPECT_EQ(g.terms().empty() ? Rational(0) : g.coefficient(leading_monomial(g, order)), 1);
            EXPECT_TRUE(normal_form(g, basis, order).is_zero());
        }
        // normal forms are canonical: f and f + (ideal element) agree
        MultiPoly f = v(3, 0) * v(3, 1) + v(3, 2) * Q(1, 2);
        MultiPoly shifted = f + gens.front() * v(3, 1);
        EXPECT_EQ(normal_form(f, basis, order), normal_form(shifted, basis, order));
    }
}

TEST(Eliminate, ToyIdeals) {
    auto t = eliminate_minimal_univariate({v(2, 0), v(2, 1)});
    ASSERT_TRUE(t);
    EXPECT_EQ(*t, UniPoly({Rational(0), Rational(1)}));
    auto t3 = eliminate_minimal_univariate({v(2, 0) - k(2, 1), v(2, 1) - k(2, 2)});
    ASSERT_TRUE(t3);
    EXPECT_EQ(*t3, UniPoly({Rational(-3), Rational(1)}));
    EXPECT_FALSE(eliminate_minimal_univariate({v(2, 0) * v(2, 1)}));
}

TEST(Eliminate, VerifiedRunsAreSound) {
    GroebnerCheck check;
    auto p = eliminate_minimal_univariate({v(2, 0) * v(2, 0) - k(2, 1), v(2, 1) - k(2, 2)}, &check);
    EXPECT_TRUE(check.ok());
    ASSERT_TRUE(p);
    // s1 = +-1, s2 = 2 gives t in {1, 3}
    EXPECT_EQ(*p, UniPoly::from_roots({Rational(1), Rational(3)}));
}
