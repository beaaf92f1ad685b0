#include "toricb/bsato.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "toricb/multiplier.hpp"

namespace toricb {

MultiPoly binom_poly(const MultiPoly& e, unsigned m) {
    const std::size_t n = e.nvars();
    MultiPoly out = MultiPoly::constant(n, 1);
    Integer fact = 1;
    for (unsigned j = 0; j < m; ++j) {
        out = out * (e - MultiPoly::constant(n, Rational(j)));
        fact *= j + 1;
    }
    return out * (Rational(1) / Rational(fact));
}

namespace {

void check_coefficient_vector(std::size_t r, const IntVec& c) {
    if (c.size() != r) throw std::invalid_argument("coefficient vector length differs from generator count");
    Integer sum = 0;
    for (const auto& x : c) sum += x;
    if (sum != 1) throw std::invalid_argument("coefficient vector must sum to 1, got " + to_string(c));
}

unsigned small(const Integer& x) {
    if (x < 0 || !x.fits_uint_p()) throw std::overflow_error("binomial order out of range");
    return static_cast<unsigned>(x.get_ui());
}

MultiPoly negative_part(const IntVec& c) {
    const std::size_t r = c.size();
    MultiPoly out = MultiPoly::constant(r, 1);
    for (std::size_t i = 0; i < r; ++i)
        if (c[i] < 0) out = out * binom_poly(MultiPoly::variable(r, i), small(-c[i]));
    return out;
}

}  // namespace

MultiPoly build_generator(const SemigroupData& s, const std::vector<IntVec>& exponents, const IntVec& c) {
    const std::size_t r = exponents.size();
    check_coefficient_vector(r, c);
    const std::size_t d = s.dim();

    IntVec lc(d);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t k = 0; k < d; ++k) lc[k] += c[i] * exponents[i][k];
    IntVec flc = f_map(s, lc);

    // l_beta(s) coordinatewise, as linear forms in s
    std::vector<MultiPoly> ls(d, MultiPoly(r));
    for (std::size_t k = 0; k < d; ++k) {
        RatVec coeffs(r);
        for (std::size_t i = 0; i < r; ++i) coeffs[i] = exponents[i][k];
        ls[k] = MultiPoly::linear(coeffs);
    }

    MultiPoly out = negative_part(c);
    for (std::size_t sigma = 0; sigma < s.facet_count(); ++sigma) {
        if (flc[sigma] <= 0) continue;
        MultiPoly form(r);
        for (std::size_t k = 0; k < d; ++k) form += ls[k] * Rational(s.facets()[sigma][k]);
        form += MultiPoly::constant(r, Rational(flc[sigma]));
        out = out * binom_poly(form, small(flc[sigma]));
    }
    return out;
}

MultiPoly build_generator_polynomial_ring(const std::vector<IntVec>& alphas, const IntVec& c) {
    const std::size_t r = alphas.size();
    check_coefficient_vector(r, c);
    if (r == 0) throw std::invalid_argument("need at least one monomial");
    const std::size_t n = alphas.front().size();

    MultiPoly out = negative_part(c);
    for (std::size_t i = 0; i < n; ++i) {
        Integer li = 0;
        for (std::size_t j = 0; j < r; ++j) li += c[j] * alphas[j][i];
        if (li <= 0) continue;
        RatVec coeffs(r);
        for (std::size_t j = 0; j < r; ++j) coeffs[j] = alphas[j][i];
        out = out * binom_poly(MultiPoly::linear(coeffs, Rational(li)), small(li));
    }
    return out;
}

std::vector<IntVec> box_vectors(std::size_t r, unsigned bound) {
    std::vector<IntVec> out;
    if (r == 0) return out;
    const long b = static_cast<long>(bound);
    std::vector<long> cur(r);
    std::function<void(std::size_t, long)> rec = [&](std::size_t i, long sum) {
        if (i + 1 == r) {
            long last = 1 - sum;
            if (last >= -b && last <= b) {
                cur[i] = last;
                IntVec v(r);
                for (std::size_t k = 0; k < r; ++k) v[k] = cur[k];
                out.push_back(std::move(v));
            }
            return;
        }
        for (long x = -b; x <= b; ++x) {
            cur[i] = x;
            rec(i + 1, sum + x);
        }
    };
    rec(0, 0);
    return out;
}

namespace {

MultiPoly lift(const MultiPoly& f, std::size_t nvars) {
    MultiPoly out(nvars);
    for (const auto& [e, c] : f.terms()) {
        Exponent x = e;
        x.resize(nvars, 0);
        out.add_term(x, c);
    }
    return out;
}

}  // namespace

std::optional<UniPoly> eliminate_minimal_univariate(const std::vector<MultiPoly>& gens, GroebnerCheck* check) {
    if (gens.empty()) return std::nullopt;
    const std::size_t r = gens.front().nvars();
    const std::size_t n = r + 1;
    std::vector<MultiPoly> lifted;
    lifted.reserve(gens.size() + 1);
    for (const auto& g : gens) {
        if (g.nvars() != r) throw std::invalid_argument("generators live in different rings");
        lifted.push_back(lift(g, n));
    }
    MultiPoly link = MultiPoly::variable(n, r);
    for (std::size_t i = 0; i < r; ++i) link -= MultiPoly::variable(n, i);
    lifted.push_back(link);

    MonomialOrder order = MonomialOrder::elimination(r, 1);
    std::vector<MultiPoly> basis = groebner_basis(lifted, order);
    if (check) *check = verify_groebner(lifted, basis, order);

    for (const auto& g : basis) {
        bool univariate = true;
        for (const auto& [e, c] : g.terms())
            for (std::size_t i = 0; i < r && univariate; ++i) univariate = e[i] == 0;
        if (!univariate) continue;
        std::vector<Rational> coeffs;
        for (const auto& [e, c] : g.terms()) {
            if (coeffs.size() <= e[r]) coeffs.resize(e[r] + 1);
            coeffs[e[r]] = c;
        }
        return UniPoly(std::move(coeffs)).monic();
    }
    return std::nullopt;
}

namespace {

// Trial division stops at 10^6; a larger leftover cofactor is kept whole, so
// roots whose numerator or denominator needs its factors end up in the
// unfactored remainder instead of being reported.
std::vector<Integer> positive_divisors(Integer n) {
    if (n < 0) n = -n;
    std::vector<std::pair<Integer, unsigned>> factors;
    for (Integer p = 2; p * p <= n && p <= 1000000; ++p) {
        unsigned k = 0;
        while (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) {
            n /= p;
            ++k;
        }
        if (k) factors.emplace_back(p, k);
    }
    if (n > 1) factors.emplace_back(n, 1);
    std::vector<Integer> divs{Integer(1)};
    for (const auto& [p, k] : factors) {
        std::size_t sz = divs.size();
        Integer pk = 1;
        for (unsigned e = 1; e <= k; ++e) {
            pk *= p;
            for (std::size_t i = 0; i < sz; ++i) divs.push_back(divs[i] * pk);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

}  // namespace

RootFactorization rational_roots(const UniPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("rational_roots of the zero polynomial");
    RootFactorization res;
    UniPoly rest = p;
    auto deflate = [&](const Rational& root) {
        unsigned mult = 0;
        UniPoly lin({-root, Rational(1)});
        while (rest.degree() > 0 && rest.evaluate(root) == 0) {
            rest = rest.divmod(lin).quotient;
            ++mult;
        }
        if (mult) res.roots.push_back({root, mult});
    };
    deflate(0);
    if (rest.degree() > 0) {
        Integer den = 1;
        for (const auto& c : rest.coeffs()) den = lcm(den, c.get_den());
        Integer a0 = Integer(Rational(rest.coeffs().front() * den));
        Integer an = Integer(Rational(rest.coeffs().back() * den));
        std::vector<Rational> candidates;
        for (const auto& num : positive_divisors(a0))
            for (const auto& q : positive_divisors(an)) {
                Rational x(num, q);
                x.canonicalize();
                candidates.push_back(x);
                candidates.push_back(-x);
            }
        std::sort(candidates.begin(), candidates.end());
        candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
        for (const auto& x : candidates) {
            if (rest.degree() <= 0) break;
            deflate(x);
        }
    }
    std::sort(res.roots.begin(), res.roots.end(),
              [](const RootMultiplicity& a, const RootMultiplicity& b) { return a.root < b.root; });
    res.remainder = rest;
    return res;
}

std::vector<Rational> BFunctionResult::reflected_roots() const {
    std::vector<Rational> out;
    for (const auto& rm : roots)
        for (unsigned k = 0; k < rm.multiplicity; ++k) out.push_back(-rm.root);
    std::sort(out.begin(), out.end());
    return out;
}

BFunctionResult bfunction(const SemigroupData& s, const MonomialIdeal& ideal, const BFunctionOptions& options) {
    return bfunction(s, ideal.generators(), options);
}

BFunctionResult bfunction(const SemigroupData& s, const std::vector<IntVec>& exponents,
                          const BFunctionOptions& options) {
    MonomialIdeal ideal = make_monomial_ideal(s, exponents);
    BFunctionResult res;
    if (!ideal.is_unit()) res.lct = log_canonical_threshold(s, ideal);

    std::vector<unsigned> boxes;
    for (unsigned b : options.schedule)
        if (b <= options.cap && (boxes.empty() || b > boxes.back())) boxes.push_back(b);
    for (unsigned b = boxes.empty() ? 1 : boxes.back() + 1; b <= options.cap; ++b) boxes.push_back(b);

    std::optional<UniPoly> prev;
    for (unsigned box : boxes) {
        BoxStep step;
        step.box = box;
        std::vector<MultiPoly> gens;
        for (const auto& c : box_vectors(exponents.size(), box)) gens.push_back(build_generator(s, exponents, c));
        step.generator_count = gens.size();
        GroebnerCheck check;
        step.minimal = eliminate_minimal_univariate(gens, options.verify_groebner ? &check : nullptr);
        if (options.verify_groebner) step.groebner_verified = check.ok();
        res.history.push_back(step);
        res.box_used = box;
        res.generator_count = step.generator_count;

        if (step.minimal && prev && !step.minimal->divides(*prev)) res.truncation_divisibility = false;
        if (step.minimal) {
            res.b = *step.minimal;
            auto fact = rational_roots(res.b);
            res.roots = fact.roots;
            res.unfactored_remainder = fact.remainder;
            auto reflected = res.reflected_roots();
            if (res.lct) res.lct_check = !reflected.empty() && reflected.front() == *res.lct;
            else res.lct_check = true;
        }
        if (step.minimal && prev && *step.minimal == *prev && res.lct_check) {
            res.stabilized = true;
            break;
        }
        prev = step.minimal;
    }
    return res;
}

}  // namespace toricb
