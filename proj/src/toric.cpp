#include "toricb/toric.hpp"

#include <algorithm>
#include <functional>

namespace toricb {

namespace {

void validate_shape(const IntMatrix& a) {
    if (a.rows() == 0 || a.cols() == 0) throw std::invalid_argument("matrix A must be nonempty");
    for (std::size_t j = 0; j < a.cols(); ++j) {
        bool zero = true;
        for (std::size_t i = 0; i < a.rows(); ++i) zero = zero && a(i, j) == 0;
        if (zero) throw std::invalid_argument("matrix A has a zero column");
    }
}

std::optional<IntVec> pointing_vector(const IntMatrix& a) {
    std::vector<Inequality> sys;
    for (std::size_t j = 0; j < a.cols(); ++j) sys.push_back({to_rational(a.col(j)), Rational(1), Relation::ge});
    Feasibility f = fm_feasible(sys);
    if (!f.feasible) return std::nullopt;
    Integer l = 1;
    for (const auto& x : f.witness) l = lcm(l, x.get_den());
    IntVec w(f.witness.size());
    for (std::size_t i = 0; i < w.size(); ++i) w[i] = Integer(Rational(f.witness[i] * l));
    return w;
}

// Generalized cross product: a vector orthogonal to the d-1 columns of m
// (d x (d-1)), zero iff the columns are dependent.
IntVec orthogonal_complement(const IntMatrix& m) {
    const std::size_t d = m.rows();
    IntVec n(d);
    for (std::size_t k = 0; k < d; ++k) {
        IntMatrix minor(d - 1, d - 1);
        for (std::size_t i = 0, r = 0; i < d; ++i) {
            if (i == k) continue;
            for (std::size_t j = 0; j + 1 < d; ++j) minor(r, j) = m(i, j);
            ++r;
        }
        Integer det = determinant(minor);
        n[k] = (k % 2 == 0) ? det : Integer(-det);
    }
    return n;
}

void for_each_subset(std::size_t n, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& fn) {
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    if (k > n) return;
    while (true) {
        fn(idx);
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
        if (i == 0) return;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

bool nonnegative(const IntVec& v) {
    return std::all_of(v.begin(), v.end(), [](const Integer& x) { return x >= 0; });
}

IntVec subtract(const IntVec& a, const IntVec& b) {
    IntVec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
    return out;
}

}  // namespace

StructureReport analyze_structure(const IntMatrix& a) {
    validate_shape(a);
    StructureReport r;
    r.full_dimensional = rank(a) == a.rows();
    r.pointed = pointing_vector(a).has_value();
    r.saturated = hermite_normal_form(a).saturated();
    return r;
}

SemigroupData build_semigroup(const IntMatrix& a) {
    SemigroupData s = detail::cone_data(a);
    if (!hermite_normal_form(a).saturated())
        throw StructuralError(StructuralError::Kind::not_saturated, "ZA != Z^d");
    return s;
}

NormalityVerdict normality(const IntMatrix& a) { return is_normal(detail::cone_data(a)); }

SemigroupData detail::cone_data(const IntMatrix& a) {
    validate_shape(a);
    const std::size_t d = a.rows();
    const std::size_t m = a.cols();
    if (rank(a) != d)
        throw StructuralError(StructuralError::Kind::not_full_dimensional, "cone not full-dimensional");
    auto w = pointing_vector(a);
    if (!w) throw StructuralError(StructuralError::Kind::not_pointed, "cone not strongly convex");

    SemigroupData s;
    s.a_ = a;
    s.pointing_ = *w;

    std::vector<IntVec> facets;
    auto consider = [&](IntVec normal) {
        bool pos = false, neg = false;
        for (std::size_t j = 0; j < m; ++j) {
            Integer v = dot(normal, a.col(j));
            pos = pos || v > 0;
            neg = neg || v < 0;
        }
        if (pos && neg) return;
        if (neg)
            for (auto& x : normal) x = -x;
        normal = primitive_vector(normal);
        if (std::find(facets.begin(), facets.end(), normal) == facets.end()) facets.push_back(normal);
    };
    if (d == 1) {
        consider(make_intvec({1}));
    } else {
        for_each_subset(m, d - 1, [&](const std::vector<std::size_t>& cols) {
            IntMatrix sub(d, d - 1);
            for (std::size_t j = 0; j < cols.size(); ++j)
                for (std::size_t i = 0; i < d; ++i) sub(i, j) = a(i, cols[j]);
            IntVec n = orthogonal_complement(sub);
            if (std::all_of(n.begin(), n.end(), [](const Integer& x) { return x == 0; })) return;
            consider(std::move(n));
        });
    }
    std::sort(facets.begin(), facets.end(), std::greater<>());
    s.facets_ = std::move(facets);

    std::vector<IntVec> rays;
    for (std::size_t j = 0; j < m; ++j) {
        IntVec col = a.col(j);
        std::vector<std::vector<Rational>> tight;
        for (const auto& f : s.facets_)
            if (dot(f, col) == 0) tight.push_back(to_rational(f));
        bool extreme = d == 1 || (!tight.empty() && rank(RatMatrix::from_rows(tight)) == d - 1);
        if (!extreme) continue;
        IntVec r = primitive_vector(col);
        if (std::find(rays.begin(), rays.end(), r) == rays.end()) rays.push_back(r);
    }
    std::sort(rays.begin(), rays.end());
    s.rays_ = std::move(rays);
    return s;
}

IntMatrix SemigroupData::f_matrix() const { return IntMatrix::from_rows(facets_); }

bool in_semigroup_by_search(const SemigroupData& s, const IntVec& v) {
    const IntMatrix& a = s.matrix();
    const IntVec& w = s.pointing_witness();
    const std::size_t m = a.cols();
    std::vector<IntVec> cols(m);
    std::vector<Integer> weight(m);
    for (std::size_t j = 0; j < m; ++j) {
        cols[j] = a.col(j);
        weight[j] = dot(w, cols[j]);
    }
    std::function<bool(std::size_t, const IntVec&)> search = [&](std::size_t j, const IntVec& rest) -> bool {
        if (std::all_of(rest.begin(), rest.end(), [](const Integer& x) { return x == 0; })) return true;
        if (j == m) return false;
        // rest must stay inside the real cone
        if (!nonnegative(f_map(s, rest))) return false;
        Integer budget = dot(w, rest);
        IntVec cur = rest;
        for (Integer k = 0; k * weight[j] <= budget; ++k) {
            if (search(j + 1, cur)) return true;
            cur = subtract(cur, cols[j]);
        }
        return false;
    };
    return search(0, v);
}

NormalityVerdict is_normal(const SemigroupData& s) {
    const IntMatrix& a = s.matrix();
    const std::size_t d = s.dim();
    IntVec lo(d), hi(d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (a(i, j) < 0) lo[i] += a(i, j);
            else hi[i] += a(i, j);
        }
    NormalityVerdict verdict;
    IntVec p = lo;
    while (true) {
        if (nonnegative(f_map(s, p)) && !in_semigroup_by_search(s, p)) {
            verdict.normal = false;
            verdict.witness = p;
            return verdict;
        }
        std::size_t i = d;
        bool advanced = false;
        while (i > 0) {
            --i;
            if (p[i] < hi[i]) {
                ++p[i];
                for (std::size_t j = i + 1; j < d; ++j) p[j] = lo[j];
                advanced = true;
                break;
            }
        }
        if (!advanced) return verdict;
    }
}

bool contains(const SemigroupData& s, const IntVec& v) { return nonnegative(f_map(s, v)); }

IntVec f_map(const SemigroupData& s, const IntVec& v) {
    if (v.size() != s.dim()) throw std::invalid_argument("vector dimension does not match the semigroup");
    IntVec q(s.facet_count());
    for (std::size_t k = 0; k < q.size(); ++k) q[k] = dot(s.facets()[k], v);
    return q;
}

RatVec f_map(const SemigroupData& s, const RatVec& v) {
    if (v.size() != s.dim()) throw std::invalid_argument("vector dimension does not match the semigroup");
    RatVec q(s.facet_count());
    for (std::size_t k = 0; k < q.size(); ++k) q[k] = dot(s.facets()[k], v);
    return q;
}

std::optional<IntVec> f_section(const SemigroupData& s, const IntVec& q) {
    if (q.size() != s.facet_count()) throw std::invalid_argument("vector dimension does not match the facet count");
    auto x = solve_linear(to_rational(s.f_matrix()), to_rational(q), Domain::integer);
    if (!x) return std::nullopt;
    IntVec v(x->size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = (*x)[i].get_num();
    return v;
}

MultiPoly theta_generator(const SemigroupData& s, const IntVec& u) {
    const std::size_t d = s.dim();
    MultiPoly out = MultiPoly::constant(d, 1);
    IntVec fu = f_map(s, u);
    for (std::size_t k = 0; k < fu.size(); ++k) {
        if (fu[k] <= 0) continue;
        MultiPoly form = MultiPoly::linear(to_rational(s.facets()[k]));
        for (Integer j = 0; j < fu[k]; ++j) out = out * (form - MultiPoly::constant(d, Rational(j)));
    }
    return out;
}

bool MonomialIdeal::is_unit() const {
    return std::any_of(gens_.begin(), gens_.end(), [](const IntVec& v) {
        return std::all_of(v.begin(), v.end(), [](const Integer& x) { return x == 0; });
    });
}

std::vector<IntVec> minimal_elements(const SemigroupData& s, std::vector<IntVec> points) {
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
    std::vector<IntVec> images;
    images.reserve(points.size());
    for (const auto& p : points) images.push_back(f_map(s, p));
    std::vector<IntVec> out;
    for (std::size_t i = 0; i < points.size(); ++i) {
        bool minimal = true;
        for (std::size_t j = 0; j < points.size() && minimal; ++j)
            if (j != i && nonnegative(subtract(images[i], images[j]))) minimal = false;
        if (minimal) out.push_back(points[i]);
    }
    return out;
}

MonomialIdeal make_monomial_ideal(const SemigroupData& s, std::vector<IntVec> gens) {
    if (gens.empty()) throw std::invalid_argument("monomial ideal needs at least one generator");
    for (const auto& g : gens) {
        if (g.size() != s.dim()) throw std::invalid_argument("exponent " + to_string(g) + " has wrong dimension");
        if (!contains(s, g)) throw std::invalid_argument("exponent " + to_string(g) + " lies outside NA");
    }
    MonomialIdeal ideal;
    ideal.gens_ = minimal_elements(s, std::move(gens));
    return ideal;
}

namespace detail {

std::pair<IntVec, IntVec> f_box_bounds(const SemigroupData& s, const IntVec& bound) {
    const std::size_t d = s.dim();
    // pick d independent facet rows
    std::vector<std::size_t> chosen;
    std::vector<std::vector<Rational>> rows;
    for (std::size_t k = 0; k < s.facet_count() && chosen.size() < d; ++k) {
        rows.push_back(to_rational(s.facets()[k]));
        if (rank(RatMatrix::from_rows(rows)) == rows.size()) chosen.push_back(k);
        else rows.pop_back();
    }
    if (chosen.size() != d) throw std::logic_error("facet normals do not span");
    RatMatrix g = RatMatrix::from_rows(rows);
    // invert g column by column
    RatMatrix inv(d, d);
    for (std::size_t j = 0; j < d; ++j) {
        RatVec ej(d);
        ej[j] = 1;
        auto x = solve_linear(g, ej, Domain::rational);
        for (std::size_t i = 0; i < d; ++i) inv(i, j) = (*x)[i];
    }
    IntVec lo(d), hi(d);
    for (std::size_t i = 0; i < d; ++i) {
        Rational mn = 0, mx = 0;
        for (std::size_t j = 0; j < d; ++j) {
            Rational t = inv(i, j) * Rational(bound[chosen[j]]);
            if (t < 0) mn += t;
            else mx += t;
        }
        lo[i] = ceil(mn);
        hi[i] = floor(mx);
    }
    return {lo, hi};
}

}  // namespace detail

}  // namespace toricb
