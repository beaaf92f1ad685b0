#pragma once

// Bernstein-Sato polynomials of monomial ideals in normal semigroup rings,
// computed from the ideal of Q[s_1..s_r] generated by the g_c polynomials.

#include <cstddef>
#include <optional>
#include <vector>

#include "toricb/exactnum.hpp"
#include "toricb/groebner.hpp"
#include "toricb/poly.hpp"
#include "toricb/toric.hpp"

namespace toricb {

/// E(E-1)...(E-m+1)/m!
MultiPoly binom_poly(const MultiPoly& e, unsigned m);

/// g_c for the monomials y^beta_1..y^beta_r of NA:
///   prod_{c_i<0} binom(s_i, -c_i)
///   * prod_{F_sigma(l(c))>0} binom(F_sigma(l(s)) + F_sigma(l(c)), F_sigma(l(c)))
/// with l(x) = sum x_i beta_i. Polynomial in s_1..s_r. Requires sum c_i = 1.
MultiPoly build_generator(const SemigroupData& s, const std::vector<IntVec>& exponents, const IntVec& c);

/// The same family for monomials x^alpha_1..x^alpha_r of a polynomial ring,
/// with products over the positive coordinates of l_alpha(c).
MultiPoly build_generator_polynomial_ring(const std::vector<IntVec>& alphas, const IntVec& c);

/// All c in Z^r with sum 1 and |c_i| <= bound, ascending lex.
std::vector<IntVec> box_vectors(std::size_t r, unsigned bound);

/// Monic generator of (<gens> + <t - sum s_i>) ∩ Q[t], or nullopt when that
/// intersection is zero. If `check` is given, the Groebner run is verified.
std::optional<UniPoly> eliminate_minimal_univariate(const std::vector<MultiPoly>& gens,
                                                    GroebnerCheck* check = nullptr);

struct RootMultiplicity {
    Rational root;
    unsigned multiplicity = 0;

    friend bool operator==(const RootMultiplicity&, const RootMultiplicity&) = default;
};

struct RootFactorization {
    std::vector<RootMultiplicity> roots;  // ascending
    UniPoly remainder;
};

/// Rational roots by candidate testing (divisors of the cleared constant and
/// leading coefficients) with deflation. prod (s - root)^mult * remainder = p.
RootFactorization rational_roots(const UniPoly& p);

struct BFunctionOptions {
    std::vector<unsigned> schedule{1, 2, 3, 4};
    unsigned cap = 6;
    /// Run verify_groebner on every elimination (slow; for test suites).
    bool verify_groebner = false;
};

struct BoxStep {
    unsigned box = 0;
    std::size_t generator_count = 0;
    std::optional<UniPoly> minimal;
    std::optional<bool> groebner_verified;
};

struct BFunctionResult {
    UniPoly b;  // monic; zero if no box produced a univariate element
    std::vector<RootMultiplicity> roots;
    UniPoly unfactored_remainder;
    unsigned box_used = 0;
    bool stabilized = false;
    std::size_t generator_count = 0;
    std::vector<BoxStep> history;
    /// p_{B'} divides p_B for every pair of consecutive boxes where both exist.
    bool truncation_divisibility = true;
    std::optional<Rational> lct;
    /// smallest root of b(-s) equals the log-canonical threshold
    bool lct_check = false;

    bool certified() const { return stabilized; }
    /// Roots of b(-s), each repeated by multiplicity, ascending.
    std::vector<Rational> reflected_roots() const;
};

/// Runs the box schedule (then B+1 up to the cap) until two consecutive
/// minimal polynomials agree and the smallest root of b(-s) equals the lct.
BFunctionResult bfunction(const SemigroupData& s, const MonomialIdeal& ideal, const BFunctionOptions& options = {});

/// Same, for an explicit (possibly redundant) list of exponents in NA.
BFunctionResult bfunction(const SemigroupData& s, const std::vector<IntVec>& exponents,
                          const BFunctionOptions& options = {});

}  // namespace toricb
