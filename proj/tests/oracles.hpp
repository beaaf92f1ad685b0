#pragma once

// Independent reference computations used by the test suites. None of these
// go through the facet map or the polyhedron code of the library.

#include <algorithm>
#include <functional>
#include <optional>
#include <random>
#include <vector>

#include "toricb/exactnum.hpp"
#include "toricb/poly.hpp"

namespace oracle {

using toricb::Integer;
using toricb::IntMatrix;
using toricb::IntVec;
using toricb::Rational;
using toricb::RatVec;

/// Canonical n/d (the two-argument mpq constructor does not reduce).
inline Rational Q(long n, long d = 1) {
    Rational r(n, d);
    r.canonicalize();
    return r;
}

/// v in NA by trying every coefficient vector with entries <= limit.
inline bool in_semigroup(const IntMatrix& a, const IntVec& v, long limit) {
    const std::size_t m = a.cols(), d = a.rows();
    std::vector<long> k(m, 0);
    std::function<bool(std::size_t, IntVec)> rec = [&](std::size_t j, IntVec rest) -> bool {
        if (j == m) return std::all_of(rest.begin(), rest.end(), [](const Integer& x) { return x == 0; });
        for (long t = 0; t <= limit; ++t) {
            if (rec(j + 1, rest)) return true;
            for (std::size_t i = 0; i < d; ++i) rest[i] -= a(i, j);
        }
        return false;
    };
    return rec(0, v);
}

/// p in the real cone spanned by the columns, via feasibility of
/// {lambda >= 0, A lambda = p}.
inline bool in_real_cone(const IntMatrix& a, const IntVec& p) {
    using toricb::Inequality;
    using toricb::Relation;
    const std::size_t m = a.cols(), d = a.rows();
    std::vector<Inequality> sys;
    for (std::size_t j = 0; j < m; ++j) {
        RatVec e(m);
        e[j] = 1;
        sys.push_back({e, Rational(0), Relation::ge});
    }
    for (std::size_t i = 0; i < d; ++i) {
        RatVec row(m), neg(m);
        for (std::size_t j = 0; j < m; ++j) {
            row[j] = a(i, j);
            neg[j] = -row[j];
        }
        sys.push_back({row, Rational(p[i]), Relation::ge});
        sys.push_back({neg, Rational(-p[i]), Relation::ge});
    }
    return toricb::fm_feasible(sys).feasible;
}

/// Howald test in two variables. For q > 0 returns the least r >= 0 such
/// that r * gamma <= q for some gamma in conv(gens); then q lies in the
/// interior of alpha * (conv(gens) + R^2_{>=0}) iff alpha * r < 1.
/// The minimum of max_i gamma_i / q_i over the hull is attained on a segment
/// between two generators, at an endpoint or where the two ratios cross.
inline Rational howald_ratio(const std::vector<IntVec>& gens, const RatVec& q) {
    std::optional<Rational> best;
    auto consider = [&](const Rational& g0, const Rational& g1) {
        Rational r = std::max(g0 / q[0], g1 / q[1]);
        if (!best || r < *best) best = r;
    };
    for (std::size_t i = 0; i < gens.size(); ++i)
        for (std::size_t j = i; j < gens.size(); ++j) {
            Rational a0(gens[i][0]), a1(gens[i][1]), b0(gens[j][0]), b1(gens[j][1]);
            consider(a0, a1);
            consider(b0, b1);
            // (1-l) a + l b with equal ratios
            Rational u = (b0 - a0) / q[0] - (b1 - a1) / q[1];
            if (u != 0) {
                Rational l = (a1 / q[1] - a0 / q[0]) / u;
                if (l > 0 && l < 1) consider(a0 + l * (b0 - a0), a1 + l * (b1 - a1));
            }
        }
    return *best;
}

/// Monic prod_{j=1..a} (s + j/a): the closed form for a single generator
/// with a single facet value a, from binom(a s + a, a).
inline toricb::UniPoly principal_bfunction(long a) {
    std::vector<Rational> roots;
    for (long j = 1; j <= a; ++j) roots.push_back(Rational(-j, a));
    for (auto& r : roots) r.canonicalize();
    return toricb::UniPoly::from_roots(roots);
}

/// Exact determinant by cofactor expansion.
inline Integer cofactor_det(const IntMatrix& m) {
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    if (n == 1) return m(0, 0);
    Integer det = 0;
    for (std::size_t j = 0; j < n; ++j) {
        IntMatrix minor(n - 1, n - 1);
        for (std::size_t r = 1; r < n; ++r)
            for (std::size_t c = 0, cc = 0; c < n; ++c) {
                if (c == j) continue;
                minor(r - 1, cc++) = m(r, c);
            }
        Integer t = m(0, j) * cofactor_det(minor);
        det += (j % 2 == 0) ? t : Integer(-t);
    }
    return det;
}

struct HalfPlane {
    IntVec normal;  // primitive inward normal
    Integer offset;
    bool operator<(const HalfPlane& o) const { return normal != o.normal ? normal < o.normal : offset < o.offset; }
    bool operator==(const HalfPlane& o) const { return normal == o.normal && offset == o.offset; }
};

/// Facets of conv(points) + cone(rays) in the plane: monotone-chain hull of
/// the points together with point + K * ray, dropping edges between two far
/// points.
inline std::vector<HalfPlane> planar_facets(const std::vector<IntVec>& points, const std::vector<IntVec>& rays,
                                            long far = 1000) {
    struct P {
        Integer x, y;
        bool far;
    };
    std::vector<P> pts;
    for (const auto& p : points) {
        pts.push_back({p[0], p[1], false});
        for (const auto& r : rays) pts.push_back({p[0] + far * r[0], p[1] + far * r[1], true});
    }
    std::sort(pts.begin(), pts.end(), [](const P& a, const P& b) {
        return a.x != b.x ? a.x < b.x : a.y != b.y ? a.y < b.y : (!a.far && b.far);
    });
    auto cross = [](const P& o, const P& a, const P& b) {
        return Integer((a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x));
    };
    std::vector<P> hull;
    for (int pass = 0; pass < 2; ++pass) {
        std::size_t start = hull.size();
        for (std::size_t k = 0; k < pts.size(); ++k) {
            const P& p = pass == 0 ? pts[k] : pts[pts.size() - 1 - k];
            while (hull.size() >= start + 2 && cross(hull[hull.size() - 2], hull.back(), p) <= 0) hull.pop_back();
            hull.push_back(p);
        }
        hull.pop_back();
    }
    std::vector<HalfPlane> out;
    for (std::size_t i = 0; i < hull.size(); ++i) {
        const P& a = hull[i];
        const P& b = hull[(i + 1) % hull.size()];
        if (a.far && b.far) continue;
        // counter-clockwise hull: inward normal is the left normal
        IntVec n{Integer(-(b.y - a.y)), Integer(b.x - a.x)};
        n = toricb::primitive_vector(n);
        Integer c = n[0] * a.x + n[1] * a.y;
        HalfPlane h{n, c};
        if (std::find(out.begin(), out.end(), h) == out.end()) out.push_back(h);
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// q in conv(points) + cone(rays) by feasibility of the convex combination.
inline bool in_hull(const std::vector<IntVec>& points, const std::vector<IntVec>& rays, const RatVec& q) {
    const std::size_t k = points.size(), m = k + rays.size(), n = q.size();
    std::vector<toricb::Inequality> sys;
    for (std::size_t j = 0; j < m; ++j) {
        RatVec e(m);
        e[j] = 1;
        sys.push_back({e, Rational(0), toricb::Relation::ge});
    }
    RatVec ones(m), neg_ones(m);
    for (std::size_t j = 0; j < k; ++j) {
        ones[j] = 1;
        neg_ones[j] = -1;
    }
    sys.push_back({ones, Rational(1), toricb::Relation::ge});
    sys.push_back({neg_ones, Rational(-1), toricb::Relation::ge});
    for (std::size_t i = 0; i < n; ++i) {
        RatVec row(m), neg(m);
        for (std::size_t j = 0; j < m; ++j) {
            row[j] = j < k ? Rational(points[j][i]) : Rational(rays[j - k][i]);
            neg[j] = -row[j];
        }
        sys.push_back({row, q[i], toricb::Relation::ge});
        sys.push_back({neg, -q[i], toricb::Relation::ge});
    }
    return toricb::fm_feasible(sys).feasible;
}

inline IntVec random_vec(std::mt19937& rng, std::size_t n, long lo, long hi) {
    std::uniform_int_distribution<long> dist(lo, hi);
    IntVec v(n);
    for (auto& x : v) x = dist(rng);
    return v;
}

}  // namespace oracle
