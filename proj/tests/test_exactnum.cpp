#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "toricb/exactnum.hpp"

using namespace toricb;
using oracle::Q;

TEST(Rational, ParseAndPrint) {
    EXPECT_EQ(parse_rational("2/3"), Q(2, 3));
    EXPECT_EQ(parse_rational("-4/6"), Q(-2, 3));
    EXPECT_EQ(parse_rational("5"), Rational(5));
    EXPECT_EQ(parse_rational(" 7/1 "), Rational(7));
    EXPECT_EQ(to_string(Q(-4, 6)), "-2/3");
    EXPECT_EQ(to_string(Q(6, 3)), "2");
    EXPECT_EQ(to_string(parse_rational("123456789012345678901234567891/7")), "123456789012345678901234567891/7");
}

TEST(Rational, ParseRejectsMalformed) {
    for (const char* bad : {"1/0", "abc", "1.5", "", "1/", "/2", "2//3", "1e3", "0x10"})
        EXPECT_THROW(parse_rational(bad), std::invalid_argument) << bad;
}

TEST(Rational, FloorCeil) {
    EXPECT_EQ(floor(Q(-3, 2)), -2);
    EXPECT_EQ(ceil(Q(-3, 2)), -1);
    EXPECT_EQ(floor(Q(7, 2)), 3);
    EXPECT_EQ(ceil(Q(7, 2)), 4);
    EXPECT_EQ(floor(Rational(4)), 4);
    EXPECT_TRUE(is_integral(Q(8, 4)));
    EXPECT_FALSE(is_integral(Q(1, 3)));
}

TEST(Rational, FieldAxiomsOnRandomTriples) {
    std::mt19937 rng(11);
    std::uniform_int_distribution<long> num(-50, 50), den(1, 30);
    for (int it = 0; it < 500; ++it) {
        Rational a(num(rng), den(rng)), b(num(rng), den(rng)), c(num(rng), den(rng));
        a.canonicalize();
        b.canonicalize();
        c.canonicalize();
        EXPECT_EQ((a + b) + c, a + (b + c));
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_EQ(a + b, b + a);
        if (a != 0) EXPECT_EQ(a * (1 / a), 1);
        EXPECT_GT(a.get_den(), 0);
        EXPECT_EQ(gcd(a.get_num(), a.get_den()), a == 0 ? a.get_den() : Integer(1));
    }
}

TEST(PrimitiveVector, Examples) {
    EXPECT_EQ(primitive_vector(make_intvec({6, -2})), make_intvec({3, -1}));
    EXPECT_EQ(primitive_vector(make_intvec({3, -1})), make_intvec({3, -1}));
    EXPECT_EQ(primitive_vector(make_intvec({0, -4, 8})), make_intvec({0, -1, 2}));
}

TEST(PrimitiveVector, ZeroVectorIsAnError) {
    try {
        primitive_vector(make_intvec({0, 0}));
        FAIL();
    } catch (const std::invalid_argument& e) {
        EXPECT_STREQ(e.what(), "zero vector has no primitive form");
    }
}

TEST(PrimitiveVector, IdempotentAndParallel) {
    std::mt19937 rng(3);
    for (int it = 0; it < 300; ++it) {
        IntVec v = oracle::random_vec(rng, 3, -12, 12);
        if (std::all_of(v.begin(), v.end(), [](const Integer& x) { return x == 0; })) continue;
        IntVec p = primitive_vector(v);
        EXPECT_EQ(primitive_vector(p), p);
        Integer g = 0;
        for (const auto& x : p) g = gcd(g, x);
        EXPECT_EQ(g, 1);
        // v = k p with k > 0
        Integer k = 0;
        for (std::size_t i = 0; i < 3; ++i)
            if (p[i] != 0) k = v[i] / p[i];
        EXPECT_GT(k, 0);
        for (std::size_t i = 0; i < 3; ++i) EXPECT_EQ(v[i], k * p[i]);
    }
}

TEST(Hermite, ExampleMatrixIsSaturated) {
    IntMatrix a{{1, 1, 1, 1}, {0, 1, 2, 3}};
    HermiteResult h = hermite_normal_form(a);
    EXPECT_TRUE(h.saturated());
    EXPECT_EQ(h.rank, 2u);
    EXPECT_EQ(a * h.U, h.H);
    EXPECT_EQ(h.H(0, 0), 1);
    EXPECT_EQ(h.H(1, 1), 1);
    EXPECT_EQ(h.H(1, 0), 0);
}

TEST(Hermite, Identity) {
    HermiteResult h = hermite_normal_form(IntMatrix::identity(2));
    EXPECT_EQ(h.H, IntMatrix::identity(2));
    EXPECT_EQ(h.U, IntMatrix::identity(2));
    EXPECT_TRUE(h.saturated());
}

TEST(Hermite, IndexFourSublattice) {
    HermiteResult h = hermite_normal_form(IntMatrix{{2, 0}, {0, 2}});
    EXPECT_EQ(h.H, (IntMatrix{{2, 0}, {0, 2}}));
    EXPECT_FALSE(h.saturated());
}

TEST(Hermite, NotSaturatedByDeterminantThree) {
    EXPECT_FALSE(hermite_normal_form(IntMatrix{{1, 1}, {0, 3}}).saturated());
}

TEST(Hermite, RandomMatricesUnimodularAndEchelon) {
    std::mt19937 rng(5);
    for (int it = 0; it < 200; ++it) {
        std::size_t d = 1 + it % 3, m = d + it % 3;
        IntMatrix a(d, m);
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < m; ++j) a(i, j) = std::uniform_int_distribution<long>(-6, 6)(rng);
        HermiteResult h = hermite_normal_form(a);
        EXPECT_EQ(a * h.U, h.H);
        Integer det = oracle::cofactor_det(h.U);
        EXPECT_TRUE(det == 1 || det == -1);
        EXPECT_EQ(h.rank, rank(a));
        // pivots positive; entries left of a pivot reduced into [0, pivot)
        for (std::size_t k = 0; k < h.rank; ++k) {
            std::size_t r = h.pivot_rows[k];
            EXPECT_GT(h.H(r, k), 0);
            for (std::size_t j = 0; j < k; ++j) {
                EXPECT_GE(h.H(r, j), 0);
                EXPECT_LT(h.H(r, j), h.H(r, k));
            }
            for (std::size_t j = k + 1; j < m; ++j) EXPECT_EQ(h.H(r, j), 0);
        }
        // saturation agrees with the gcd of maximal minors for full-rank input
        if (h.rank == d) {
            Integer g = 0;
            std::vector<std::size_t> idx(d);
            std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t pos, std::size_t start) {
                if (pos == d) {
                    IntMatrix sub(d, d);
                    for (std::size_t i = 0; i < d; ++i)
                        for (std::size_t j = 0; j < d; ++j) sub(i, j) = a(i, idx[j]);
                    g = gcd(g, oracle::cofactor_det(sub));
                    return;
                }
                for (std::size_t j = start; j < m; ++j) {
                    idx[pos] = j;
                    rec(pos + 1, j + 1);
                }
            };
            rec(0, 0);
            EXPECT_EQ(h.saturated(), g == 1);
        }
    }
}

TEST(Determinant, AgreesWithCofactorExpansion) {
    std::mt19937 rng(17);
    for (int it = 0; it < 200; ++it) {
        std::size_t n = 1 + it % 4;
        IntMatrix a(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) a(i, j) = std::uniform_int_distribution<long>(-9, 9)(rng);
        EXPECT_EQ(determinant(a), oracle::cofactor_det(a));
    }
}

TEST(SolveLinear, Examples) {
    RatMatrix f = to_rational(IntMatrix{{3, -1}, {0, 1}});
    auto w = solve_linear(f, {Rational(-1), Rational(-1)}, Domain::rational);
    ASSERT_TRUE(w);
    EXPECT_EQ(*w, (RatVec{Q(-2, 3), Rational(-1)}));
    EXPECT_FALSE(solve_linear(f, {Rational(1), Rational(1)}, Domain::integer));
    auto z = solve_linear(RatMatrix::identity(3), RatVec(3), Domain::integer);
    ASSERT_TRUE(z);
    EXPECT_EQ(*z, RatVec(3));
}

TEST(SolveLinear, InconsistentIsNone) {
    RatMatrix m = to_rational(IntMatrix{{1, 1}, {2, 2}});
    EXPECT_FALSE(solve_linear(m, {Rational(1), Rational(3)}, Domain::rational));
}

TEST(SolveLinear, RandomSystemsSolveExactly) {
    std::mt19937 rng(23);
    for (int it = 0; it < 200; ++it) {
        std::size_t r = 1 + it % 3, c = 1 + (it / 3) % 3;
        IntMatrix a(r, c);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j) a(i, j) = std::uniform_int_distribution<long>(-4, 4)(rng);
        IntVec x0 = oracle::random_vec(rng, c, -5, 5);
        IntVec b = a * x0;
        for (Domain dom : {Domain::rational, Domain::integer}) {
            auto x = solve_linear(to_rational(a), to_rational(b), dom);
            ASSERT_TRUE(x);
            EXPECT_EQ(to_rational(a) * *x, to_rational(b));
            if (dom == Domain::integer)
                for (const auto& v : *x) EXPECT_TRUE(is_integral(v));
        }
    }
}

TEST(FourierMotzkin, Examples) {
    EXPECT_FALSE(fm_feasible({{{Rational(1)}, Rational(1), Relation::ge}, {{Rational(-1)}, Rational(0), Relation::ge}})
                     .feasible);
    std::vector<Inequality> sys{{{Rational(1), Rational(0)}, Rational(0), Relation::gt},
                                {{Rational(0), Rational(1)}, Rational(0), Relation::gt},
                                {{Rational(1), Rational(1)}, Rational(3), Relation::ge}};
    Feasibility f = fm_feasible(sys);
    ASSERT_TRUE(f.feasible);
    for (const auto& q : sys) EXPECT_TRUE(q.satisfied_by(f.witness));
    std::vector<Inequality> pointed;
    for (long k = 0; k <= 3; ++k) pointed.push_back({{Rational(1), Rational(k)}, Rational(1), Relation::ge});
    EXPECT_TRUE(fm_feasible(pointed).feasible);
}

TEST(FourierMotzkin, StrictnessMatters) {
    // x >= 1 and -x >= -1 meet at x = 1; with a strict side they do not
    EXPECT_TRUE(fm_feasible({{{Rational(1)}, Rational(1), Relation::ge}, {{Rational(-1)}, Rational(-1), Relation::ge}})
                    .feasible);
    EXPECT_FALSE(fm_feasible({{{Rational(1)}, Rational(1), Relation::gt}, {{Rational(-1)}, Rational(-1), Relation::ge}})
                     .feasible);
}

TEST(FourierMotzkin, AgreesWithGridSearch) {
    std::mt19937 rng(29);
    std::uniform_int_distribution<long> coef(-3, 3);
    for (int it = 0; it < 300; ++it) {
        std::size_t n = 1 + it % 3;
        std::size_t k = 1 + (it / 3) % 6;
        std::vector<Inequality> sys;
        for (std::size_t i = 0; i < k; ++i) {
            Inequality q;
            for (std::size_t j = 0; j < n; ++j) q.a.push_back(Rational(coef(rng)));
            q.c = coef(rng);
            q.rel = coef(rng) > 0 ? Relation::gt : Relation::ge;
            sys.push_back(q);
        }
        Feasibility f = fm_feasible(sys);
        if (f.feasible)
            for (const auto& q : sys) EXPECT_TRUE(q.satisfied_by(f.witness));
        // grid of step 1/4 on [-6, 6]^n
        bool grid = false;
        RatVec x(n);
        std::function<void(std::size_t)> rec = [&](std::size_t j) {
            if (grid) return;
            if (j == n) {
                grid = std::all_of(sys.begin(), sys.end(), [&](const Inequality& q) { return q.satisfied_by(x); });
                return;
            }
            for (long t = -24; t <= 24 && !grid; ++t) {
                x[j] = Q(t, 4);
                rec(j + 1);
            }
        };
        rec(0);
        if (grid) EXPECT_TRUE(f.feasible);
        if (!f.feasible) EXPECT_FALSE(grid);
    }
}

TEST(FourierMotzkin, ProjectFirst) {
    // 0 <= y <= x, x + y <= 4  =>  x in [0, 4]
    std::vector<Inequality> sys{{{Rational(0), Rational(1)}, Rational(0), Relation::ge},
                                {{Rational(1), Rational(-1)}, Rational(0), Relation::ge},
                                {{Rational(-1), Rational(-1)}, Rational(-4), Relation::ge}};
    Interval iv = fm_project_first(sys);
    ASSERT_FALSE(iv.empty);
    ASSERT_TRUE(iv.lo && iv.hi);
    EXPECT_EQ(*iv.lo, 0);
    EXPECT_EQ(*iv.hi, 4);
    sys.push_back({{Rational(1), Rational(0)}, Rational(5), Relation::gt});
    EXPECT_TRUE(fm_project_first(sys).empty);
}

TEST(Matrix, RankAndTranspose) {
    IntMatrix a{{1, 2, 3}, {2, 4, 6}};
    EXPECT_EQ(rank(a), 1u);
    EXPECT_EQ(a.transpose().transpose(), a);
    EXPECT_EQ(a.col(2), make_intvec({3, 6}));
    EXPECT_THROW((IntMatrix{{1, 2}, {3}}), std::invalid_argument);
}
