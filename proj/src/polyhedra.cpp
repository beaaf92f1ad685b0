#include "toricb/polyhedra.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace toricb {

namespace {

bool is_zero(const IntVec& v) {
    return std::all_of(v.begin(), v.end(), [](const Integer& x) { return x == 0; });
}

// Vector orthogonal to the rows of m (k x (k+1)); zero iff rows dependent.
IntVec orthogonal_to_rows(const IntMatrix& m) {
    const std::size_t n = m.cols();
    IntVec out(n);
    for (std::size_t k = 0; k < n; ++k) {
        IntMatrix minor(n - 1, n - 1);
        for (std::size_t i = 0; i + 1 < n; ++i)
            for (std::size_t j = 0, c = 0; j < n; ++j) {
                if (j == k) continue;
                minor(i, c++) = m(i, j);
            }
        Integer det = determinant(minor);
        out[k] = (k % 2 == 0) ? det : Integer(-det);
    }
    return out;
}

}  // namespace

std::vector<IntVec> orthant_rays(std::size_t n) {
    std::vector<IntVec> rays(n, IntVec(n));
    for (std::size_t i = 0; i < n; ++i) rays[i][i] = 1;
    return rays;
}

NewtonPolyhedron newton_polyhedron(std::vector<IntVec> points, std::vector<IntVec> rays) {
    if (points.empty()) throw std::invalid_argument("Newton polyhedron needs at least one point");
    const std::size_t n = points.front().size();
    for (const auto& p : points)
        if (p.size() != n) throw std::invalid_argument("points of mixed dimension");
    for (auto& r : rays) {
        if (r.size() != n) throw std::invalid_argument("ray dimension does not match points");
        r = primitive_vector(r);
    }
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
    std::sort(rays.begin(), rays.end());
    rays.erase(std::unique(rays.begin(), rays.end()), rays.end());

    // homogenized generators (x0, x)
    std::vector<IntVec> gens;
    for (const auto& p : points) {
        IntVec g{Integer(1)};
        g.insert(g.end(), p.begin(), p.end());
        gens.push_back(std::move(g));
    }
    for (const auto& r : rays) {
        IntVec g{Integer(0)};
        g.insert(g.end(), r.begin(), r.end());
        gens.push_back(std::move(g));
    }
    if (rank(IntMatrix::from_rows(gens)) != n + 1)
        throw std::invalid_argument("Newton polyhedron is not full-dimensional");

    std::vector<IntVec> normals;
    std::vector<std::size_t> idx(n);
    for (std::size_t i = 0; i < n; ++i) idx[i] = i;
    const std::size_t total = gens.size();
    while (true) {
        IntMatrix sub(n, n + 1);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j <= n; ++j) sub(i, j) = gens[idx[i]][j];
        IntVec normal = orthogonal_to_rows(sub);
        if (!is_zero(normal)) {
            bool pos = false, neg = false;
            for (const auto& g : gens) {
                Integer v = dot(normal, g);
                pos = pos || v > 0;
                neg = neg || v < 0;
            }
            if (!(pos && neg)) {
                if (neg)
                    for (auto& x : normal) x = -x;
                normal = primitive_vector(normal);
                if (std::find(normals.begin(), normals.end(), normal) == normals.end()) normals.push_back(normal);
            }
        }
        std::size_t i = n;
        while (i > 0 && idx[i - 1] == total - n + i - 1) --i;
        if (i == 0) break;
        ++idx[i - 1];
        for (std::size_t j = i; j < n; ++j) idx[j] = idx[j - 1] + 1;
    }

    NewtonPolyhedron poly;
    poly.dim_ = n;
    poly.rays_ = rays;
    for (const auto& h : normals) {
        IntVec l(h.begin() + 1, h.end());
        if (is_zero(l)) continue;  // the face at infinity x0 >= 0
        l = primitive_vector(l);
        Integer c = dot(l, points.front());
        for (const auto& p : points) c = std::min(c, dot(l, p));
        poly.facets_.push_back({l, c});
    }
    std::sort(poly.facets_.begin(), poly.facets_.end(),
              [](const Facet& a, const Facet& b) { return a.normal != b.normal ? a.normal < b.normal : a.offset < b.offset; });

    for (const auto& p : points) {
        std::vector<std::vector<Rational>> tight;
        for (const auto& f : poly.facets_)
            if (dot(f.normal, p) == f.offset) tight.push_back(to_rational(f.normal));
        if (!tight.empty() && rank(RatMatrix::from_rows(tight)) == n) poly.vertices_.push_back(p);
    }
    return poly;
}

std::string to_string(MembershipMode mode) { return mode == MembershipMode::closed ? "closed" : "relint"; }

MembershipMode parse_membership_mode(const std::string& text) {
    if (text == "closed") return MembershipMode::closed;
    if (text == "relint") return MembershipMode::relint;
    throw std::invalid_argument("unknown membership mode '" + text + "'");
}

bool membership(const NewtonPolyhedron& p, const RatVec& q, const Rational& alpha, MembershipMode mode) {
    if (alpha <= 0) throw std::invalid_argument("dilation factor must be positive");
    if (q.size() != p.ambient_dim()) throw std::invalid_argument("point dimension does not match polyhedron");
    for (const auto& f : p.facets()) {
        Rational lhs = dot(f.normal, q);
        Rational rhs = alpha * Rational(f.offset);
        if (mode == MembershipMode::relint ? !(lhs > rhs) : !(lhs >= rhs)) return false;
    }
    return true;
}

PointThreshold point_threshold(const NewtonPolyhedron& p, const RatVec& q) {
    PointThreshold t;
    bool any_positive = false;
    for (const auto& f : p.facets()) {
        Rational lq = dot(f.normal, q);
        if (f.offset == 0 && lq < 0) {
            t.kind = PointThreshold::Kind::undefined;
            return t;
        }
        if (f.offset > 0) {
            Rational ratio = lq / Rational(f.offset);
            if (!any_positive || ratio < t.value) t.value = ratio;
            any_positive = true;
        }
    }
    if (!any_positive) {
        t.kind = PointThreshold::Kind::infinite;
        return t;
    }
    t.kind = PointThreshold::Kind::finite;
    // Facets with negative offset can exclude q from every dilation up to xi.
    if (t.value > 0 && !membership(p, q, t.value, MembershipMode::closed)) t.kind = PointThreshold::Kind::undefined;
    return t;
}

}  // namespace toricb
