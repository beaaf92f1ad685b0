#include "toricb/multiplier.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace toricb {

std::vector<IntVec> transport(const SemigroupData& s, const MonomialIdeal& ideal) {
    std::vector<IntVec> out;
    out.reserve(ideal.size());
    for (const auto& g : ideal.generators()) out.push_back(f_map(s, g));
    return out;
}

std::vector<SemigroupPolynomial> transport(const SemigroupData& s, const std::vector<SemigroupPolynomial>& gens) {
    std::vector<SemigroupPolynomial> out;
    for (const auto& f : gens) {
        SemigroupPolynomial g;
        for (const auto& t : f) {
            if (t.exponent.size() != s.dim())
                throw std::invalid_argument("exponent " + to_string(t.exponent) + " has wrong dimension");
            if (!contains(s, t.exponent))
                throw std::invalid_argument("exponent " + to_string(t.exponent) + " lies outside NA");
            if (t.coeff == 0) continue;
            g.push_back({t.coeff, f_map(s, t.exponent)});
        }
        // F is injective, so distinct exponents stay distinct; merge repeats
        std::sort(g.begin(), g.end(),
                  [](const SemigroupTerm& a, const SemigroupTerm& b) { return a.exponent > b.exponent; });
        SemigroupPolynomial merged;
        for (auto& t : g) {
            if (!merged.empty() && merged.back().exponent == t.exponent) merged.back().coeff += t.coeff;
            else merged.push_back(std::move(t));
        }
        std::erase_if(merged, [](const SemigroupTerm& t) { return t.coeff == 0; });
        out.push_back(std::move(merged));
    }
    return out;
}

NewtonPolyhedron transported_polyhedron(const SemigroupData& s, const MonomialIdeal& ideal) {
    return newton_polyhedron(transport(s, ideal), orthant_rays(s.facet_count()));
}

NewtonPolyhedron semigroup_polyhedron(const SemigroupData& s, const MonomialIdeal& ideal) {
    return newton_polyhedron(ideal.generators(), s.extreme_rays());
}

bool MultiplierIdealResult::is_unit() const {
    return generators.size() == 1 &&
           std::all_of(generators.front().begin(), generators.front().end(), [](const Integer& x) { return x == 0; });
}

namespace {

IntVec base_box(const SemigroupData& s, const NewtonPolyhedron& pj, const Rational& alpha, long extra) {
    const std::size_t nf = s.facet_count();
    IntVec box(nf);
    for (std::size_t k = 0; k < nf; ++k) {
        Integer m = 0;
        for (const auto& vx : pj.vertices()) m = std::max(m, vx[k]);
        Integer big = 0;
        for (std::size_t i = 0; i < s.generator_count(); ++i)
            big = std::max(big, Integer(dot(s.facets()[k], s.matrix().col(i))));
        box[k] = ceil(alpha * Rational(m)) + big + extra;
    }
    return box;
}

template <class Pred>
MultiplierIdealResult enumerate_ideal(const SemigroupData& s, const IntVec& box, Pred member) {
    auto collect = [&](const IntVec& bound) {
        std::vector<IntVec> pts;
        for_each_point_in_f_box(s, bound, [&](const IntVec& v, const IntVec&) {
            if (member(v)) pts.push_back(v);
        });
        return minimal_elements(s, std::move(pts));
    };
    MultiplierIdealResult res;
    IntVec doubled = box;
    for (auto& x : doubled) x *= 2;
    std::vector<IntVec> first = collect(box);
    res.generators = collect(doubled);
    res.box_used = doubled;
    res.stabilized = first == res.generators;
    return res;
}

}  // namespace

MultiplierIdealResult multiplier_ideal(const SemigroupData& s, const MonomialIdeal& ideal, const Rational& alpha,
                                       MembershipMode mode) {
    if (alpha <= 0) throw std::invalid_argument("dilation factor must be positive");
    NewtonPolyhedron pj = transported_polyhedron(s, ideal);
    const IntVec e = s.e();
    auto member = [&](const IntVec& v) {
        IntVec q = f_map(s, v);
        for (std::size_t k = 0; k < q.size(); ++k) q[k] += e[k];
        return membership(pj, to_rational(q), alpha, mode);
    };
    MultiplierIdealResult res = enumerate_ideal(s, base_box(s, pj, alpha, 0), member);
    res.alpha = alpha;
    res.mode = mode;
    return res;
}

MultiplierIdealResult multiplier_ideal_with_boundary(const SemigroupData& s, const MonomialIdeal& ideal,
                                                     const RatVec& w, const Rational& alpha) {
    if (alpha <= 0) throw std::invalid_argument("dilation factor must be positive");
    if (w.size() != s.dim()) throw std::invalid_argument("boundary vector has wrong dimension");
    RatVec fw = f_map(s, w);
    for (const auto& x : fw)
        if (x < -1) throw std::invalid_argument("boundary divisor not effective");
    NewtonPolyhedron pi = semigroup_polyhedron(s, ideal);
    NewtonPolyhedron pj = transported_polyhedron(s, ideal);
    auto member = [&](const IntVec& v) {
        RatVec q = to_rational(v);
        for (std::size_t i = 0; i < q.size(); ++i) q[i] -= w[i];
        return membership(pi, q, alpha, MembershipMode::relint);
    };
    MultiplierIdealResult res = enumerate_ideal(s, base_box(s, pj, alpha, 1), member);
    res.alpha = alpha;
    res.mode = MembershipMode::relint;
    return res;
}

Rational log_canonical_threshold(const SemigroupData& s, const MonomialIdeal& ideal) {
    if (ideal.is_unit()) throw std::invalid_argument("the unit ideal has no log-canonical threshold");
    PointThreshold t = point_threshold(transported_polyhedron(s, ideal), to_rational(s.e()));
    if (!t.finite()) throw std::logic_error("threshold of e is not finite");
    return t.value;
}

std::string to_string(SearchMode mode) { return mode == SearchMode::exact ? "exact" : "windowed"; }

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::pass: return "PASS";
        case Verdict::fail: return "FAIL";
        case Verdict::inconclusive: return "INCONCLUSIVE";
    }
    return "";
}

bool is_boundary_witness(const SemigroupData& s, const NewtonPolyhedron& pj, const IntVec& v, const Rational& alpha) {
    IntVec q = f_map(s, v);
    for (const auto& x : q)
        if (x < 0) return false;
    RatVec qe = to_rational(q);
    for (auto& x : qe) x += 1;
    return membership(pj, qe, alpha, MembershipMode::closed) && !membership(pj, qe, alpha, MembershipMode::relint);
}

namespace {

struct SearchOutcome {
    std::optional<RatVec> point;
    bool clipped = false;
};

// Integer t with a_k . t >= c_k for all k. The last coordinate is chosen
// exactly from its interval; outer coordinates are scanned over their integer
// range, clipped to [lo, lo + 2w] or [-w, w] when a side is unbounded.
SearchOutcome integer_point(const std::vector<Inequality>& system, std::size_t p, const Integer& w) {
    SearchOutcome out;
    if (p == 0) {
        RatVec empty;
        if (std::all_of(system.begin(), system.end(), [&](const Inequality& q) { return q.satisfied_by(empty); }))
            out.point = RatVec{};
        return out;
    }
    Interval iv = fm_project_first(system);
    if (iv.empty) return out;
    std::optional<Integer> lo, hi;
    if (iv.lo) lo = iv.lo_strict ? Integer(floor(*iv.lo) + 1) : ceil(*iv.lo);
    if (iv.hi) hi = iv.hi_strict ? Integer(ceil(*iv.hi) - 1) : floor(*iv.hi);
    if (lo && hi && *lo > *hi) return out;

    auto fix = [&](const Integer& t) {
        std::vector<Inequality> sub;
        sub.reserve(system.size());
        for (const auto& q : system) {
            Inequality r;
            r.a.assign(q.a.begin() + 1, q.a.end());
            r.c = q.c - q.a.front() * Rational(t);
            r.rel = q.rel;
            sub.push_back(std::move(r));
        }
        return sub;
    };

    if (p == 1) {
        Integer t = lo ? *lo : hi ? *hi : Integer(0);
        if (integer_point(fix(t), 0, w).point) out.point = RatVec{Rational(t)};
        return out;
    }
    Integer from = lo ? *lo : hi ? Integer(*hi - 2 * w) : Integer(-w);
    Integer to = hi ? *hi : Integer(from + 2 * w);
    if (!lo || !hi) out.clipped = true;
    if (hi && lo && *hi - *lo > 2 * w) {
        to = *lo + 2 * w;
        out.clipped = true;
    }
    for (Integer t = from; t <= to; ++t) {
        SearchOutcome inner = integer_point(fix(t), p - 1, w);
        out.clipped = out.clipped || inner.clipped;
        if (inner.point) {
            RatVec pt{Rational(t)};
            pt.insert(pt.end(), inner.point->begin(), inner.point->end());
            out.point = std::move(pt);
            return out;
        }
    }
    return out;
}

}  // namespace

JumpingReport jumping_coefficients(const SemigroupData& s, const MonomialIdeal& ideal, const Rational& bound,
                                   const JumpingOptions& options) {
    JumpingReport rep;
    rep.lct = log_canonical_threshold(s, ideal);
    if (bound < rep.lct) throw std::invalid_argument("bound " + to_string(bound) + " is below the lct");
    rep.bound = bound;
    rep.kappa = options.kappa;
    if (options.kappa < 2) throw std::invalid_argument("window factor must be at least 2");

    NewtonPolyhedron pj = transported_polyhedron(s, ideal);
    const IntMatrix fm = s.f_matrix();
    const std::size_t d = s.dim();
    const std::size_t nf = s.facet_count();

    std::vector<Rational> candidates;
    for (const auto& f : pj.facets()) {
        if (f.offset <= 0) continue;
        Integer top = floor(bound * Rational(f.offset));
        for (Integer n = 1; n <= top; ++n) {
            Rational a(n, f.offset);
            a.canonicalize();
            candidates.push_back(a);
        }
    }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

    // l_j^T F as a functional on Z^d
    std::vector<IntVec> pulled;
    std::vector<Integer> le;
    for (const auto& f : pj.facets()) {
        IntVec g(d);
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t k = 0; k < nf; ++k) g[i] += f.normal[k] * fm(k, i);
        pulled.push_back(std::move(g));
        Integer sum = 0;
        for (const auto& x : f.normal) sum += x;
        le.push_back(sum);
    }

    for (const auto& alpha : candidates) {
        std::optional<IntVec> witness;
        bool incomplete = false;
        for (std::size_t k = 0; k < pj.facets().size() && !witness; ++k) {
            const Facet& fk = pj.facets()[k];
            if (fk.offset <= 0) continue;
            Rational ac = alpha * Rational(fk.offset);
            if (!is_integral(ac)) continue;
            Integer rhs = ac.get_num() - le[k];
            if (std::all_of(pulled[k].begin(), pulled[k].end(), [](const Integer& x) { return x == 0; })) continue;

            // pulled[k] . v = rhs  <=>  v = U (rhs/h, t)
            IntMatrix row(1, d);
            for (std::size_t i = 0; i < d; ++i) row(0, i) = pulled[k][i];
            HermiteResult hr = hermite_normal_form(row);
            const Integer h = hr.H(0, 0);
            if (!mpz_divisible_p(rhs.get_mpz_t(), h.get_mpz_t())) continue;
            const Integer x0 = rhs / h;
            IntVec v0(d);
            for (std::size_t i = 0; i < d; ++i) v0[i] = hr.U(i, 0) * x0;
            const std::size_t p = d - 1;

            std::vector<Inequality> system;
            auto add = [&](const IntVec& g, const Rational& c) {
                Inequality q;
                q.a.resize(p);
                for (std::size_t j = 0; j < p; ++j)
                    for (std::size_t i = 0; i < d; ++i) q.a[j] += Rational(g[i] * hr.U(i, j + 1));
                q.c = c - Rational(dot(g, v0));
                system.push_back(std::move(q));
            };
            for (std::size_t sg = 0; sg < nf; ++sg) add(s.facets()[sg], 0);
            for (std::size_t j = 0; j < pj.facets().size(); ++j)
                add(pulled[j], alpha * Rational(pj.facets()[j].offset) - Rational(le[j]));

            Integer w = options.window;
            for (unsigned round = 0; round <= options.rounds; ++round) {
                SearchOutcome o = integer_point(system, p, w);
                if (o.point) {
                    IntVec v = v0;
                    for (std::size_t j = 0; j < p; ++j)
                        for (std::size_t i = 0; i < d; ++i) v[i] += hr.U(i, j + 1) * (*o.point)[j].get_num();
                    witness = v;
                    break;
                }
                if (!o.clipped) break;
                if (round == options.rounds) incomplete = true;
                w *= options.kappa;
            }
        }
        if (witness) {
            if (!is_boundary_witness(s, pj, *witness, alpha))
                throw std::logic_error("jumping witness failed verification at " + to_string(alpha));
            rep.entries.push_back({alpha, *witness});
        } else if (incomplete) {
            rep.mode = SearchMode::windowed;
        }
    }
    return rep;
}

CorrespondenceReport verify_correspondence(const SemigroupData& s, const MonomialIdeal& ideal,
                                           const BFunctionOptions& boptions, const JumpingOptions& joptions) {
    CorrespondenceReport rep;
    rep.bfunction = bfunction(s, ideal, boptions);
    const Rational lct = log_canonical_threshold(s, ideal);
    rep.jumping = jumping_coefficients(s, ideal, lct + 1, joptions);
    std::vector<Rational> roots = rep.bfunction.reflected_roots();
    rep.lct_is_smallest_root = !roots.empty() && roots.front() == lct;
    for (const auto& entry : rep.jumping.entries) {
        if (entry.alpha >= lct + 1) continue;
        if (!std::binary_search(roots.begin(), roots.end(), entry.alpha)) rep.missing.push_back(entry.alpha);
    }
    if (!rep.bfunction.stabilized) rep.verdict = Verdict::inconclusive;
    else rep.verdict = rep.lct_is_smallest_root && rep.missing.empty() ? Verdict::pass : Verdict::fail;
    return rep;
}

}  // namespace toricb
