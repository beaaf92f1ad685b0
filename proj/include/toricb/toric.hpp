#pragma once

// Normal affine toric semigroups NA: facets, primitive support functions, the
// facet map F : Z^d -> Z^facets and the weight-space generators of D_A.

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "toricb/exactnum.hpp"
#include "toricb/poly.hpp"

namespace toricb {

/// A violated structural assumption on A (rank, pointedness, saturation,
/// normality).
class StructuralError : public std::runtime_error {
public:
    enum class Kind { not_full_dimensional, not_pointed, not_saturated, not_normal };
    StructuralError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    Kind kind() const { return kind_; }

private:
    Kind kind_;
};

struct NormalityVerdict {
    bool normal = true;
    std::optional<IntVec> witness;  // a point of C ∩ Z^d outside NA
};

class SemigroupData;
namespace detail {
/// Cone data without the saturation check.
SemigroupData cone_data(const IntMatrix& a);
}  // namespace detail

/// The semigroup NA generated by the columns of A together with its facet
/// support functions. Facets are ordered by descending lex order of their
/// support vectors.
class SemigroupData {
public:
    const IntMatrix& matrix() const { return a_; }
    std::size_t dim() const { return a_.rows(); }
    std::size_t generator_count() const { return a_.cols(); }
    std::size_t facet_count() const { return facets_.size(); }
    const std::vector<IntVec>& facets() const { return facets_; }
    /// Rows are the support vectors f_sigma, so F(v) = F_matrix * v.
    IntMatrix f_matrix() const;
    /// The all-ones vector of Z^facets.
    IntVec e() const { return IntVec(facets_.size(), Integer(1)); }
    /// Primitive generators of the extreme rays of C, ascending lex.
    const std::vector<IntVec>& extreme_rays() const { return rays_; }
    /// w with w . a_i >= 1 for every column (certifies pointedness).
    const IntVec& pointing_witness() const { return pointing_; }

    bool pointed() const { return true; }
    bool saturated() const { return true; }
    std::optional<bool> normal() const { return normal_; }
    void set_normal(bool verified) { normal_ = verified; }

private:
    friend SemigroupData detail::cone_data(const IntMatrix& a);
    IntMatrix a_;
    std::vector<IntVec> facets_;
    std::vector<IntVec> rays_;
    IntVec pointing_;
    std::optional<bool> normal_;
};

/// Independent verdicts on the three structural assumptions, without
/// throwing. Used by diagnostics that report every failure at once.
struct StructureReport {
    bool full_dimensional = false;
    bool pointed = false;
    bool saturated = false;
};
StructureReport analyze_structure(const IntMatrix& a);

/// Validates A (full rank, pointed, ZA = Z^d) and enumerates the facets of
/// the cone by scanning (d-1)-subsets of columns. Cost is O(C(m, d-1)), which
/// is fine for d <= 4, m <= 12. Throws StructuralError.
SemigroupData build_semigroup(const IntMatrix& a);

/// Exhaustive normality test over the bounding box of the zonotope
/// sum [0,1] a_i. Exponential in m.
NormalityVerdict is_normal(const SemigroupData& s);

/// C ∩ Z^d = NA for a full-rank pointed A, saturated or not. A lattice
/// point outside ZA is reported as a witness too. Throws StructuralError if A
/// is not full rank or not pointed.
NormalityVerdict normality(const IntMatrix& a);

/// v in NA by bounded search over nonnegative combinations of the columns.
/// Independent of normality; used for verification.
bool in_semigroup_by_search(const SemigroupData& s, const IntVec& v);

/// v in NA, decided by F(v) >= 0. Only valid for normal semigroups.
bool contains(const SemigroupData& s, const IntVec& v);

IntVec f_map(const SemigroupData& s, const IntVec& v);
RatVec f_map(const SemigroupData& s, const RatVec& v);

/// The unique v in Z^d with F(v) = q, if any.
std::optional<IntVec> f_section(const SemigroupData& s, const IntVec& q);

/// prod_{sigma: F_sigma(u) > 0} prod_{j < F_sigma(u)} (F_sigma(theta) - j)
/// as a polynomial in theta_1..theta_d.
MultiPoly theta_generator(const SemigroupData& s, const IntVec& u);

/// Minimal generators of a monomial ideal of NA, sorted ascending lex.
class MonomialIdeal {
public:
    const std::vector<IntVec>& generators() const { return gens_; }
    std::size_t size() const { return gens_.size(); }
    bool is_unit() const;

private:
    friend MonomialIdeal make_monomial_ideal(const SemigroupData& s, std::vector<IntVec> gens);
    std::vector<IntVec> gens_;
};

/// Validates membership in NA and minimalizes under NA-divisibility. Throws
/// std::invalid_argument for an exponent outside NA or an empty list.
MonomialIdeal make_monomial_ideal(const SemigroupData& s, std::vector<IntVec> gens);

/// Antichain of the minimal elements of `points` under the order
/// v <= w  iff  w - v in NA (via F), sorted ascending lex and deduplicated.
std::vector<IntVec> minimal_elements(const SemigroupData& s, std::vector<IntVec> points);

/// Iterate integer points v with 0 <= F_sigma(v) <= bound[sigma]. The callback
/// receives v and F(v). Points are visited in ascending lex order of v.
template <class Fn>
void for_each_point_in_f_box(const SemigroupData& s, const IntVec& bound, Fn&& fn);

namespace detail {
/// Per-coordinate bounds of {v : 0 <= F(v) <= bound}.
std::pair<IntVec, IntVec> f_box_bounds(const SemigroupData& s, const IntVec& bound);
}  // namespace detail

template <class Fn>
void for_each_point_in_f_box(const SemigroupData& s, const IntVec& bound, Fn&& fn) {
    auto [lo, hi] = detail::f_box_bounds(s, bound);
    const std::size_t d = s.dim();
    IntVec v = lo;
    for (std::size_t i = 0; i < d; ++i)
        if (lo[i] > hi[i]) return;
    while (true) {
        IntVec q = f_map(s, v);
        bool ok = true;
        for (std::size_t k = 0; k < q.size() && ok; ++k) ok = q[k] >= 0 && q[k] <= bound[k];
        if (ok) fn(v, q);
        std::size_t i = d;
        while (i > 0) {
            --i;
            if (v[i] < hi[i]) {
                ++v[i];
                for (std::size_t j = i + 1; j < d; ++j) v[j] = lo[j];
                break;
            }
            if (i == 0) return;
        }
        if (d == 0) return;
    }
}

}  // namespace toricb
