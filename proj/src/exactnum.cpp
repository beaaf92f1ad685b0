#include "toricb/exactnum.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>
#include <utility>

namespace toricb {

namespace {

bool valid_integer_literal(std::string_view s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    return std::all_of(s.begin() + static_cast<std::ptrdiff_t>(i), s.end(),
                       [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)) != 0; });
}

}  // namespace

Rational parse_rational(std::string_view text) {
    std::string s(text);
    s.erase(std::remove_if(s.begin(), s.end(), [](char ch) { return std::isspace(static_cast<unsigned char>(ch)); }),
            s.end());
    auto slash = s.find('/');
    std::string num = s.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!valid_integer_literal(num) || !valid_integer_literal(den) || den[0] == '-' || den[0] == '+')
        throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
    if (num[0] == '+') num.erase(0, 1);
    Integer n(num), d(den);
    if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    Rational r(n, d);
    r.canonicalize();
    return r;
}

std::string to_string(const Integer& x) { return x.get_str(); }

std::string to_string(const Rational& x) {
    if (x.get_den() == 1) return x.get_num().get_str();
    return x.get_num().get_str() + "/" + x.get_den().get_str();
}

std::string to_string(const IntVec& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ",";
        out += v[i].get_str();
    }
    return out + ")";
}

std::string to_string(const RatVec& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ",";
        out += to_string(v[i]);
    }
    return out + ")";
}

Integer floor(const Rational& x) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    return q;
}

Integer ceil(const Rational& x) {
    Integer q;
    mpz_cdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    return q;
}

bool is_integral(const Rational& x) { return x.get_den() == 1; }

IntVec make_intvec(std::initializer_list<long> values) {
    IntVec v;
    v.reserve(values.size());
    for (long x : values) v.emplace_back(x);
    return v;
}

RatVec to_rational(const IntVec& v) {
    RatVec out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i];
    return out;
}

Integer dot(const IntVec& a, const IntVec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dot: dimension mismatch");
    Integer s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

Rational dot(const IntVec& a, const RatVec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dot: dimension mismatch");
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += Rational(a[i]) * b[i];
    return s;
}

Rational dot(const RatVec& a, const RatVec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dot: dimension mismatch");
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("matrix product: dimension mismatch");
    IntMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a(i, k) == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
        }
    return c;
}

IntVec operator*(const IntMatrix& m, const IntVec& v) {
    if (m.cols() != v.size()) throw std::invalid_argument("matrix-vector product: dimension mismatch");
    IntVec out(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out[i] += m(i, j) * v[j];
    return out;
}

RatVec operator*(const RatMatrix& m, const RatVec& v) {
    if (m.cols() != v.size()) throw std::invalid_argument("matrix-vector product: dimension mismatch");
    RatVec out(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out[i] += m(i, j) * v[j];
    return out;
}

RatMatrix to_rational(const IntMatrix& m) {
    RatMatrix r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = m(i, j);
    return r;
}

std::ostream& operator<<(std::ostream& os, const IntMatrix& m) {
    os << "[";
    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (i) os << ",";
        os << to_string(m.row(i));
    }
    return os << "]";
}

Integer determinant(const IntMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    IntMatrix a = m;
    Integer prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && a(p, k) == 0) ++p;
            if (p == n) return 0;
            for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(p, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Integer t = a(i, j) * a(k, k) - a(i, k) * a(k, j);
                mpz_divexact(a(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            a(i, k) = 0;
        }
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

namespace {

// In-place reduced row echelon form; returns pivot columns.
std::vector<std::size_t> rref(RatMatrix& a, RatVec* rhs) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
        std::size_t p = r;
        while (p < a.rows() && a(p, c) == 0) ++p;
        if (p == a.rows()) continue;
        if (p != r) {
            for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(p, j), a(r, j));
            if (rhs) std::swap((*rhs)[p], (*rhs)[r]);
        }
        Rational inv = 1 / a(r, c);
        for (std::size_t j = 0; j < a.cols(); ++j) a(r, j) *= inv;
        if (rhs) (*rhs)[r] *= inv;
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i == r || a(i, c) == 0) continue;
            Rational f = a(i, c);
            for (std::size_t j = 0; j < a.cols(); ++j) a(i, j) -= f * a(r, j);
            if (rhs) (*rhs)[i] -= f * (*rhs)[r];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

void column_combine(IntMatrix& m, std::size_t k, std::size_t j, const Integer& p, const Integer& q,
                    const Integer& r, const Integer& s) {
    // (col_k, col_j) <- (p col_k + q col_j, r col_k + s col_j)
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Integer a = m(i, k), b = m(i, j);
        m(i, k) = p * a + q * b;
        m(i, j) = r * a + s * b;
    }
}

}  // namespace

std::size_t rank(const RatMatrix& m) {
    RatMatrix a = m;
    return rref(a, nullptr).size();
}

std::size_t rank(const IntMatrix& m) { return rank(to_rational(m)); }

bool HermiteResult::saturated() const {
    if (rank != H.rows()) return false;
    for (std::size_t i = 0; i < rank; ++i)
        if (H(pivot_rows[i], i) != 1) return false;
    return true;
}

HermiteResult hermite_normal_form(const IntMatrix& m) {
    HermiteResult res;
    res.H = m;
    res.U = IntMatrix::identity(m.cols());
    IntMatrix& H = res.H;
    IntMatrix& U = res.U;
    std::size_t k = 0;
    for (std::size_t i = 0; i < H.rows() && k < H.cols(); ++i) {
        for (std::size_t j = k + 1; j < H.cols(); ++j) {
            if (H(i, j) == 0) continue;
            Integer a = H(i, k), b = H(i, j), g, p, q;
            mpz_gcdext(g.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
            Integer ag = a / g, bg = b / g;
            column_combine(H, k, j, p, q, -bg, ag);
            column_combine(U, k, j, p, q, -bg, ag);
        }
        if (H(i, k) == 0) continue;
        if (H(i, k) < 0) {
            for (std::size_t r = 0; r < H.rows(); ++r) H(r, k) = -H(r, k);
            for (std::size_t r = 0; r < U.rows(); ++r) U(r, k) = -U(r, k);
        }
        for (std::size_t j = 0; j < k; ++j) {
            Integer q;
            mpz_fdiv_q(q.get_mpz_t(), H(i, j).get_mpz_t(), H(i, k).get_mpz_t());
            if (q == 0) continue;
            for (std::size_t r = 0; r < H.rows(); ++r) H(r, j) -= q * H(r, k);
            for (std::size_t r = 0; r < U.rows(); ++r) U(r, j) -= q * U(r, k);
        }
        res.pivot_rows.push_back(i);
        ++k;
    }
    res.rank = k;
    return res;
}

IntVec primitive_vector(const IntVec& v) {
    Integer g = 0;
    for (const auto& x : v) g = gcd(g, x);
    if (g == 0) throw std::invalid_argument("zero vector has no primitive form");
    IntVec out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] / g;
    return out;
}

std::optional<RatVec> solve_linear(const RatMatrix& m, const RatVec& b, Domain domain) {
    if (m.rows() != b.size()) throw std::invalid_argument("solve_linear: dimension mismatch");
    if (domain == Domain::rational) {
        RatMatrix a = m;
        RatVec rhs = b;
        auto pivots = rref(a, &rhs);
        for (std::size_t i = pivots.size(); i < a.rows(); ++i)
            if (rhs[i] != 0) return std::nullopt;
        RatVec x(m.cols());
        for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = rhs[i];
        return x;
    }

    // Integer domain: clear denominators row by row, then back-substitute
    // through the column Hermite form M U = H.
    IntMatrix mi(m.rows(), m.cols());
    IntVec bi(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Integer l = b[i].get_den();
        for (std::size_t j = 0; j < m.cols(); ++j) l = lcm(l, m(i, j).get_den());
        for (std::size_t j = 0; j < m.cols(); ++j) mi(i, j) = Integer(m(i, j) * l);
        bi[i] = Integer(b[i] * l);
    }
    HermiteResult h = hermite_normal_form(mi);
    IntVec y(m.cols());
    std::size_t k = 0;
    for (std::size_t i = 0; i < mi.rows(); ++i) {
        Integer acc = bi[i];
        for (std::size_t j = 0; j < k; ++j) acc -= h.H(i, j) * y[j];
        if (k < h.rank && h.pivot_rows[k] == i) {
            if (!mpz_divisible_p(acc.get_mpz_t(), h.H(i, k).get_mpz_t())) return std::nullopt;
            y[k] = acc / h.H(i, k);
            ++k;
        } else if (acc != 0) {
            return std::nullopt;
        }
    }
    return to_rational(h.U * y);
}

bool Inequality::satisfied_by(const RatVec& x) const {
    Rational lhs = dot(a, x);
    return rel == Relation::gt ? lhs > c : lhs >= c;
}

namespace {

using System = std::vector<Inequality>;

Inequality normalized(Inequality q) {
    Rational scale = 0;
    for (const auto& x : q.a)
        if (x != 0) {
            scale = abs(x);
            break;
        }
    if (scale != 0) {
        for (auto& x : q.a) x /= scale;
        q.c /= scale;
    }
    return q;
}

struct InequalityLess {
    bool operator()(const Inequality& x, const Inequality& y) const {
        if (x.a != y.a) return x.a < y.a;
        if (x.c != y.c) return x.c < y.c;
        return x.rel < y.rel;
    }
};

System eliminate(const System& sys, std::size_t var) {
    System pos, neg;
    std::set<Inequality, InequalityLess> out;
    for (const auto& q : sys) {
        if (q.a[var] > 0) pos.push_back(q);
        else if (q.a[var] < 0) neg.push_back(q);
        else out.insert(normalized(q));
    }
    for (const auto& p : pos)
        for (const auto& n : neg) {
            Rational mp = -n.a[var], mn = p.a[var];
            Inequality comb;
            comb.a.resize(p.a.size());
            for (std::size_t i = 0; i < p.a.size(); ++i) comb.a[i] = mp * p.a[i] + mn * n.a[i];
            comb.a[var] = 0;
            comb.c = mp * p.c + mn * n.c;
            comb.rel = (p.rel == Relation::gt || n.rel == Relation::gt) ? Relation::gt : Relation::ge;
            out.insert(normalized(comb));
        }
    return System(out.begin(), out.end());
}

bool constants_consistent(const System& sys) {
    for (const auto& q : sys) {
        if (std::any_of(q.a.begin(), q.a.end(), [](const Rational& x) { return x != 0; })) continue;
        if (q.rel == Relation::gt ? !(0 > q.c) : !(0 >= q.c)) return false;
    }
    return true;
}

// Interval for variable `var` once every other variable with nonzero
// coefficient has been fixed in `x`.
Interval bounds_for(const System& sys, std::size_t var, const RatVec& x) {
    Interval iv;
    for (const auto& q : sys) {
        Rational coef = q.a[var];
        Rational rest = q.c;
        for (std::size_t i = 0; i < q.a.size(); ++i)
            if (i != var) rest -= q.a[i] * x[i];
        bool strict = q.rel == Relation::gt;
        if (coef == 0) {
            if (strict ? !(0 > rest) : !(0 >= rest)) iv.empty = true;
            continue;
        }
        Rational bound = rest / coef;
        if (coef > 0) {
            if (!iv.lo || bound > *iv.lo || (bound == *iv.lo && strict)) {
                iv.lo = bound;
                iv.lo_strict = strict;
            }
        } else {
            if (!iv.hi || bound < *iv.hi || (bound == *iv.hi && strict)) {
                iv.hi = bound;
                iv.hi_strict = strict;
            }
        }
    }
    if (iv.lo && iv.hi) {
        if (*iv.lo > *iv.hi) iv.empty = true;
        if (*iv.lo == *iv.hi && (iv.lo_strict || iv.hi_strict)) iv.empty = true;
    }
    return iv;
}

bool inside(const Interval& iv, const Rational& x) {
    if (iv.lo && (iv.lo_strict ? !(x > *iv.lo) : !(x >= *iv.lo))) return false;
    if (iv.hi && (iv.hi_strict ? !(x < *iv.hi) : !(x <= *iv.hi))) return false;
    return true;
}

// Prefer small integers, then the midpoint.
Rational pick(const Interval& iv) {
    if (inside(iv, 0)) return 0;
    if (iv.lo && iv.hi) {
        Rational c = ceil(*iv.lo);
        if (inside(iv, c)) return c;
        Rational f = floor(*iv.hi);
        if (inside(iv, f)) return f;
        return (*iv.lo + *iv.hi) / 2;
    }
    if (iv.lo) return Rational(floor(*iv.lo) + 1);
    return Rational(ceil(*iv.hi) - 1);
}

}  // namespace

Feasibility fm_feasible(const std::vector<Inequality>& system) {
    Feasibility res;
    if (system.empty()) {
        res.feasible = true;
        return res;
    }
    const std::size_t n = system.front().a.size();
    for (const auto& q : system)
        if (q.a.size() != n) throw std::invalid_argument("fm_feasible: inconsistent dimensions");

    std::vector<System> levels;  // levels[k] involves variables 0..k-1
    levels.resize(n + 1);
    levels[n] = system;
    for (std::size_t k = n; k > 0; --k) levels[k - 1] = eliminate(levels[k], k - 1);
    if (!constants_consistent(levels[0])) return res;

    RatVec x(n);
    for (std::size_t k = 1; k <= n; ++k) {
        Interval iv = bounds_for(levels[k], k - 1, x);
        if (iv.empty) return res;  // unreachable for a consistent projection
        x[k - 1] = pick(iv);
    }
    res.feasible = true;
    res.witness = std::move(x);
    return res;
}

Interval fm_project_first(const std::vector<Inequality>& system) {
    Interval iv;
    if (system.empty()) return iv;
    const std::size_t n = system.front().a.size();
    System cur = system;
    for (std::size_t k = n; k > 1; --k) cur = eliminate(cur, k - 1);
    if (!constants_consistent(cur)) {
        iv.empty = true;
        return iv;
    }
    RatVec x(n);
    return bounds_for(cur, 0, x);
}

}  // namespace toricb
