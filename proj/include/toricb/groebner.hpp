#pragma once

// Buchberger's algorithm over Q with block (elimination) orders.

#include <cstddef>
#include <vector>

#include "toricb/poly.hpp"

namespace toricb {

/// Block order: blocks are compared left to right, each by graded reverse
/// lex. A single block is plain grevlex; blocks {r, 1} eliminate the first r
/// variables.
class MonomialOrder {
public:
    explicit MonomialOrder(std::vector<std::size_t> blocks);
    static MonomialOrder grevlex(std::size_t nvars) { return MonomialOrder({nvars}); }
    static MonomialOrder elimination(std::size_t eliminated, std::size_t kept) {
        return MonomialOrder({eliminated, kept});
    }

    std::size_t nvars() const { return nvars_; }
    const std::vector<std::size_t>& blocks() const { return blocks_; }

    /// <0, 0, >0 as a is smaller, equal, larger than b.
    int compare(const Exponent& a, const Exponent& b) const;

private:
    std::vector<std::size_t> blocks_;
    std::size_t nvars_ = 0;
};

struct GroebnerStats {
    std::size_t pairs_considered = 0;
    std::size_t pairs_reduced = 0;
    std::size_t product_criterion = 0;
    std::size_t chain_criterion = 0;
};

/// Reduced Groebner basis (monic, sorted by ascending leading monomial).
/// Pair selection: minimal lcm degree, ties broken by pair indices. Inputs are
/// made primitive before the run; reductions are fraction-free. An ideal
/// containing 1 yields {1}; the zero ideal yields {}.
std::vector<MultiPoly> groebner_basis(const std::vector<MultiPoly>& gens, const MonomialOrder& order,
                                      GroebnerStats* stats = nullptr);

/// Remainder of full reduction of f by basis, normalized to be monic (zero
/// stays zero).
MultiPoly normal_form(const MultiPoly& f, const std::vector<MultiPoly>& basis, const MonomialOrder& order);

Exponent leading_monomial(const MultiPoly& f, const MonomialOrder& order);

struct GroebnerCheck {
    bool spolys_reduce_to_zero = false;
    bool inputs_reduce_to_zero = false;
    bool ok() const { return spolys_reduce_to_zero && inputs_reduce_to_zero; }
};

/// Every S-polynomial of `basis` and every element of `gens` reduces to zero.
GroebnerCheck verify_groebner(const std::vector<MultiPoly>& gens, const std::vector<MultiPoly>& basis,
                              const MonomialOrder& order);

}  // namespace toricb
