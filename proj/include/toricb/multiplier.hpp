#pragma once

// Multiplier ideals, log-canonical thresholds and jumping coefficients of
// monomial ideals of NA via the Newton polyhedron of the transported ideal
// J = <x^F(beta)> in k[N^facets].

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "toricb/bsato.hpp"
#include "toricb/exactnum.hpp"
#include "toricb/polyhedra.hpp"
#include "toricb/toric.hpp"

namespace toricb {

struct SemigroupTerm {
    Rational coeff;
    IntVec exponent;

    friend bool operator==(const SemigroupTerm&, const SemigroupTerm&) = default;
};
using SemigroupPolynomial = std::vector<SemigroupTerm>;

/// Minimal generators of <F(I)>: the F-images of the minimal generators of I.
std::vector<IntVec> transport(const SemigroupData& s, const MonomialIdeal& ideal);

/// Termwise y^beta -> x^F(beta). Zero coefficients are dropped and terms are
/// sorted by descending exponent. Throws for an exponent outside NA.
std::vector<SemigroupPolynomial> transport(const SemigroupData& s, const std::vector<SemigroupPolynomial>& gens);

/// Newton polyhedron of J in R^facets (orthant recession).
NewtonPolyhedron transported_polyhedron(const SemigroupData& s, const MonomialIdeal& ideal);

/// Newton polyhedron of I in R^d (recession cone C).
NewtonPolyhedron semigroup_polyhedron(const SemigroupData& s, const MonomialIdeal& ideal);

struct MultiplierIdealResult {
    Rational alpha;
    MembershipMode mode = MembershipMode::relint;
    std::vector<IntVec> generators;  // minimal, ascending lex
    IntVec box_used;                 // bound on F(v), per facet
    bool stabilized = false;

    bool is_unit() const;
};

/// {v in NA : F(v) + e in alpha*P_J} (interior for relint, closed otherwise),
/// by enumeration over an F-box that is doubled once to check stability.
MultiplierIdealResult multiplier_ideal(const SemigroupData& s, const MonomialIdeal& ideal, const Rational& alpha,
                                       MembershipMode mode = MembershipMode::relint);

/// {v in NA : v - w in relint(alpha*P_I)}. Requires F_sigma(w) >= -1.
MultiplierIdealResult multiplier_ideal_with_boundary(const SemigroupData& s, const MonomialIdeal& ideal,
                                                     const RatVec& w, const Rational& alpha);

/// Point threshold of e against P_J. Throws for the unit ideal.
Rational log_canonical_threshold(const SemigroupData& s, const MonomialIdeal& ideal);

enum class SearchMode { exact, windowed };
std::string to_string(SearchMode mode);

struct JumpingOptions {
    unsigned kappa = 3;
    /// Initial half-width of the parameter window for unbounded directions.
    unsigned window = 4;
    /// Number of window enlargements by kappa.
    unsigned rounds = 3;
};

struct JumpingEntry {
    Rational alpha;
    IntVec witness;  // v in NA with F(v) + e on the boundary of alpha*P_J
};

struct JumpingReport {
    Rational lct;
    Rational bound;
    std::vector<JumpingEntry> entries;  // strictly increasing alpha
    SearchMode mode = SearchMode::exact;
    unsigned kappa = 3;
};

/// Jumping coefficients in (0, bound]. Throws if bound < lct.
JumpingReport jumping_coefficients(const SemigroupData& s, const MonomialIdeal& ideal, const Rational& bound,
                                   const JumpingOptions& options = {});

/// closed membership holds and relint membership fails at alpha.
bool is_boundary_witness(const SemigroupData& s, const NewtonPolyhedron& pj, const IntVec& v, const Rational& alpha);

enum class Verdict { pass, fail, inconclusive };
std::string to_string(Verdict v);

struct CorrespondenceReport {
    Verdict verdict = Verdict::inconclusive;
    BFunctionResult bfunction;
    JumpingReport jumping;
    bool lct_is_smallest_root = false;
    /// jumping coefficients in [lct, lct+1) that are not roots of b(-s)
    std::vector<Rational> missing;
};

CorrespondenceReport verify_correspondence(const SemigroupData& s, const MonomialIdeal& ideal,
                                           const BFunctionOptions& boptions = {},
                                           const JumpingOptions& joptions = {});

}  // namespace toricb
