#include "toricb/groebner.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <set>
#include <stdexcept>
#include <iterator>
#include <utility>

namespace toricb {

MonomialOrder::MonomialOrder(std::vector<std::size_t> blocks) : blocks_(std::move(blocks)) {
    nvars_ = std::accumulate(blocks_.begin(), blocks_.end(), std::size_t{0});
}

int MonomialOrder::compare(const Exponent& a, const Exponent& b) const {
    std::size_t start = 0;
    for (std::size_t len : blocks_) {
        long da = 0, db = 0;
        for (std::size_t i = start; i < start + len; ++i) {
            da += a[i];
            db += b[i];
        }
        if (da != db) return da < db ? -1 : 1;
        for (std::size_t i = start + len; i-- > start;)
            if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
        start += len;
    }
    return 0;
}

namespace {

constexpr std::size_t kMaxVars = 16;

struct Mono {
    std::array<std::uint16_t, kMaxVars> e{};
};

struct Term {
    Mono m;
    Integer c;
};

using IPoly = std::vector<Term>;  // descending in the order, primitive

class Engine {
public:
    explicit Engine(const MonomialOrder& order) : order_(order), n_(order.nvars()) {
        if (n_ > kMaxVars) throw std::invalid_argument("too many variables for the Groebner engine");
        std::size_t start = 0;
        for (std::size_t len : order.blocks()) {
            ranges_.emplace_back(start, start + len);
            start += len;
        }
    }

    int cmp(const Mono& a, const Mono& b) const {
        for (auto [lo, hi] : ranges_) {
            unsigned da = 0, db = 0;
            for (std::size_t i = lo; i < hi; ++i) {
                da += a.e[i];
                db += b.e[i];
            }
            if (da != db) return da < db ? -1 : 1;
            for (std::size_t i = hi; i-- > lo;)
                if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? -1 : 1;
        }
        return 0;
    }

    bool divides(const Mono& a, const Mono& b) const {
        for (std::size_t i = 0; i < n_; ++i)
            if (a.e[i] > b.e[i]) return false;
        return true;
    }

    Mono quotient(const Mono& b, const Mono& a) const {
        Mono q;
        for (std::size_t i = 0; i < n_; ++i) q.e[i] = static_cast<std::uint16_t>(b.e[i] - a.e[i]);
        return q;
    }

    Mono lcm(const Mono& a, const Mono& b) const {
        Mono l;
        for (std::size_t i = 0; i < n_; ++i) l.e[i] = std::max(a.e[i], b.e[i]);
        return l;
    }

    bool coprime(const Mono& a, const Mono& b) const {
        for (std::size_t i = 0; i < n_; ++i)
            if (a.e[i] && b.e[i]) return false;
        return true;
    }

    unsigned degree(const Mono& a) const {
        unsigned d = 0;
        for (std::size_t i = 0; i < n_; ++i) d += a.e[i];
        return d;
    }

    Mono times(const Mono& a, const Mono& b) const {
        Mono p;
        for (std::size_t i = 0; i < n_; ++i) {
            unsigned s = unsigned(a.e[i]) + b.e[i];
            if (s > 0xFFFFu) throw std::overflow_error("exponent overflow in Groebner engine");
            p.e[i] = static_cast<std::uint16_t>(s);
        }
        return p;
    }

    IPoly from_multi(const MultiPoly& f) const {
        if (f.nvars() != n_) throw std::invalid_argument("polynomial ring does not match the monomial order");
        Integer den = 1;
        for (const auto& [e, c] : f.terms()) den = toricb_lcm(den, c.get_den());
        IPoly p;
        p.reserve(f.size());
        for (const auto& [e, c] : f.terms()) {
            Term t;
            for (std::size_t i = 0; i < n_; ++i) {
                if (e[i] > 0xFFFFu) throw std::overflow_error("exponent overflow in Groebner engine");
                t.m.e[i] = static_cast<std::uint16_t>(e[i]);
            }
            Rational scaled = c * Rational(den);
            t.c = scaled.get_num();
            p.push_back(std::move(t));
        }
        std::sort(p.begin(), p.end(), [this](const Term& a, const Term& b) { return cmp(a.m, b.m) > 0; });
        make_primitive(p);
        return p;
    }

    MultiPoly to_multi(const IPoly& p) const {
        MultiPoly f(n_);
        if (p.empty()) return f;
        Rational inv = Rational(1) / Rational(p.front().c);
        for (const auto& t : p) {
            Exponent e(t.m.e.begin(), t.m.e.begin() + static_cast<std::ptrdiff_t>(n_));
            f.add_term(e, Rational(t.c) * inv);
        }
        return f;
    }

    static Integer toricb_lcm(const Integer& a, const Integer& b) {
        Integer l;
        mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        return l;
    }

    static void make_primitive(IPoly& p) {
        if (p.empty()) return;
        Integer g = 0;
        for (const auto& t : p) {
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.c.get_mpz_t());
            if (g == 1) break;
        }
        if (p.front().c < 0) g = -g;
        if (g != 1)
            for (auto& t : p) mpz_divexact(t.c.get_mpz_t(), t.c.get_mpz_t(), g.get_mpz_t());
    }

    // a*h - b*x^u*g, where the leading terms are known to cancel.
    IPoly combine(const IPoly& h, const Integer& a, const IPoly& g, const Integer& b, const Mono& u) const {
        IPoly out;
        out.reserve(h.size() + g.size());
        std::size_t i = 1, j = 1;
        while (i < h.size() || j < g.size()) {
            if (j >= g.size()) {
                out.push_back({h[i].m, a * h[i].c});
                ++i;
                continue;
            }
            Mono gm = times(g[j].m, u);
            int c = i < h.size() ? cmp(h[i].m, gm) : -1;
            if (c > 0) {
                out.push_back({h[i].m, a * h[i].c});
                ++i;
            } else if (c < 0) {
                out.push_back({gm, -b * g[j].c});
                ++j;
            } else {
                Integer v = a * h[i].c - b * g[j].c;
                if (v != 0) out.push_back({gm, std::move(v)});
                ++i;
                ++j;
            }
        }
        return out;
    }

    const IPoly* find_reducer(const Mono& m, const std::vector<IPoly>& basis, std::size_t skip) const {
        for (std::size_t k = 0; k < basis.size(); ++k) {
            if (k == skip || basis[k].empty()) continue;
            if (divides(basis[k].front().m, m)) return &basis[k];
        }
        return nullptr;
    }

    // Full reduction; `skip` excludes one basis index (for interreduction).
    IPoly reduce(IPoly h, const std::vector<IPoly>& basis, std::size_t skip = SIZE_MAX) const {
        IPoly rem;
        while (!h.empty()) {
            const IPoly* g = find_reducer(h.front().m, basis, skip);
            if (!g) {
                // move the irreducible prefix over in one go
                std::size_t k = 1;
                while (k < h.size() && !find_reducer(h[k].m, basis, skip)) ++k;
                std::move(h.begin(), h.begin() + static_cast<std::ptrdiff_t>(k), std::back_inserter(rem));
                h.erase(h.begin(), h.begin() + static_cast<std::ptrdiff_t>(k));
                continue;
            }
            Integer gg = gcd(g->front().c, h.front().c);
            Integer a = g->front().c / gg;
            Integer b = h.front().c / gg;
            Mono u = quotient(h.front().m, g->front().m);
            if (a < 0) {
                a = -a;
                b = -b;
            }
            h = combine(h, a, *g, b, u);
            if (a != 1)
                for (auto& t : rem) t.c *= a;
            shrink(rem, h);
        }
        make_primitive(rem);
        return rem;
    }

    // Divide the common content of rem and h out of both.
    static void shrink(IPoly& rem, IPoly& h) {
        Integer g = 0;
        for (const auto* part : {&rem, &h})
            for (const auto& t : *part) {
                mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.c.get_mpz_t());
                if (g == 1) return;
            }
        if (g == 0 || g == 1) return;
        for (auto* part : {&rem, &h})
            for (auto& t : *part) mpz_divexact(t.c.get_mpz_t(), t.c.get_mpz_t(), g.get_mpz_t());
    }

    IPoly spoly(const IPoly& f, const IPoly& g) const {
        Mono l = lcm(f.front().m, g.front().m);
        Mono uf = quotient(l, f.front().m);
        Mono ug = quotient(l, g.front().m);
        Integer gg = gcd(f.front().c, g.front().c);
        Integer a = g.front().c / gg;  // multiplies f
        Integer b = f.front().c / gg;  // multiplies g
        IPoly fs;
        fs.reserve(f.size());
        for (const auto& t : f) fs.push_back({times(t.m, uf), t.c});
        IPoly out = combine(fs, a, g, b, ug);
        make_primitive(out);
        return out;
    }

    std::vector<IPoly> buchberger(std::vector<IPoly> basis, GroebnerStats* stats) const {
        struct Pair {
            std::size_t i, j;
            unsigned deg;
        };
        std::vector<Pair> queue;
        std::set<std::pair<std::size_t, std::size_t>> pending;
        auto add_pairs_for = [&](std::size_t t) {
            for (std::size_t k = 0; k < t; ++k) {
                queue.push_back({k, t, degree(lcm(basis[k].front().m, basis[t].front().m))});
                pending.insert({k, t});
            }
        };
        for (std::size_t t = 0; t < basis.size(); ++t) add_pairs_for(t);

        while (!queue.empty()) {
            auto best = std::min_element(queue.begin(), queue.end(), [](const Pair& x, const Pair& y) {
                if (x.deg != y.deg) return x.deg < y.deg;
                if (x.i != y.i) return x.i < y.i;
                return x.j < y.j;
            });
            Pair p = *best;
            queue.erase(best);
            pending.erase({p.i, p.j});
            if (stats) ++stats->pairs_considered;

            const Mono& mi = basis[p.i].front().m;
            const Mono& mj = basis[p.j].front().m;
            if (coprime(mi, mj)) {
                if (stats) ++stats->product_criterion;
                continue;
            }
            Mono l = lcm(mi, mj);
            bool chain = false;
            for (std::size_t k = 0; k < basis.size() && !chain; ++k) {
                if (k == p.i || k == p.j) continue;
                if (!divides(basis[k].front().m, l)) continue;
                auto key = [](std::size_t x, std::size_t y) { return std::make_pair(std::min(x, y), std::max(x, y)); };
                if (!pending.count(key(p.i, k)) && !pending.count(key(p.j, k))) chain = true;
            }
            if (chain) {
                if (stats) ++stats->chain_criterion;
                continue;
            }
            if (stats) ++stats->pairs_reduced;
            IPoly h = reduce(spoly(basis[p.i], basis[p.j]), basis);
            if (h.empty()) continue;
            if (degree(h.front().m) == 0) return {h};  // unit ideal
            basis.push_back(std::move(h));
            add_pairs_for(basis.size() - 1);
        }
        return basis;
    }

    std::vector<IPoly> reduced(std::vector<IPoly> basis) const {
        // minimal basis
        std::vector<IPoly> minimal;
        for (std::size_t i = 0; i < basis.size(); ++i) {
            bool redundant = false;
            for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
                if (i == j) continue;
                const Mono& a = basis[j].front().m;
                const Mono& b = basis[i].front().m;
                if (divides(a, b) && (cmp(a, b) != 0 || j < i)) redundant = true;
            }
            if (!redundant) minimal.push_back(basis[i]);
        }
        for (std::size_t i = 0; i < minimal.size(); ++i) minimal[i] = reduce(minimal[i], minimal, i);
        std::sort(minimal.begin(), minimal.end(),
                  [this](const IPoly& a, const IPoly& b) { return cmp(a.front().m, b.front().m) < 0; });
        return minimal;
    }

private:
    const MonomialOrder& order_;
    std::size_t n_;
    std::vector<std::pair<std::size_t, std::size_t>> ranges_;
};

}  // namespace

std::vector<MultiPoly> groebner_basis(const std::vector<MultiPoly>& gens, const MonomialOrder& order,
                                      GroebnerStats* stats) {
    Engine eng(order);
    std::vector<IPoly> basis;
    for (const auto& g : gens) {
        IPoly p = eng.from_multi(g);
        if (!p.empty()) basis.push_back(std::move(p));
    }
    if (basis.empty()) return {};
    basis = eng.reduced(eng.buchberger(std::move(basis), stats));
    std::vector<MultiPoly> out;
    out.reserve(basis.size());
    for (const auto& p : basis) out.push_back(eng.to_multi(p));
    return out;
}

MultiPoly normal_form(const MultiPoly& f, const std::vector<MultiPoly>& basis, const MonomialOrder& order) {
    Engine eng(order);
    std::vector<IPoly> b;
    for (const auto& g : basis) {
        IPoly p = eng.from_multi(g);
        if (!p.empty()) b.push_back(std::move(p));
    }
    return eng.to_multi(eng.reduce(eng.from_multi(f), b));
}

Exponent leading_monomial(const MultiPoly& f, const MonomialOrder& order) {
    if (f.is_zero()) throw std::invalid_argument("zero polynomial has no leading monomial");
    const Exponent* best = nullptr;
    for (const auto& [e, c] : f.terms())
        if (!best || order.compare(e, *best) > 0) best = &e;
    return *best;
}

GroebnerCheck verify_groebner(const std::vector<MultiPoly>& gens, const std::vector<MultiPoly>& basis,
                              const MonomialOrder& order) {
    Engine eng(order);
    std::vector<IPoly> b;
    for (const auto& g : basis) b.push_back(eng.from_multi(g));
    GroebnerCheck check;
    check.spolys_reduce_to_zero = true;
    for (std::size_t i = 0; i < b.size() && check.spolys_reduce_to_zero; ++i)
        for (std::size_t j = i + 1; j < b.size(); ++j)
            if (!eng.reduce(eng.spoly(b[i], b[j]), b).empty()) {
                check.spolys_reduce_to_zero = false;
                break;
            }
    check.inputs_reduce_to_zero = true;
    for (const auto& g : gens)
        if (!eng.reduce(eng.from_multi(g), b).empty()) {
            check.inputs_reduce_to_zero = false;
            break;
        }
    return check;
}

}  // namespace toricb
