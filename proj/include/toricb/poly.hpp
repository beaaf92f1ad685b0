#pragma once

// Sparse multivariate and dense univariate polynomials over Q.

#include <cstddef>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "toricb/exactnum.hpp"

namespace toricb {

using Exponent = std::vector<unsigned>;

/// Sparse polynomial in a fixed number of variables. Zero coefficients are
/// never stored; terms are kept in descending lex order of exponents.
class MultiPoly {
public:
    using Terms = std::map<Exponent, Rational, std::greater<>>;

    MultiPoly() = default;
    explicit MultiPoly(std::size_t nvars) : nvars_(nvars) {}

    static MultiPoly constant(std::size_t nvars, const Rational& c);
    static MultiPoly variable(std::size_t nvars, std::size_t i);
    /// sum_i coeffs[i] * x_i + c
    static MultiPoly linear(const RatVec& coeffs, const Rational& c = 0);

    std::size_t nvars() const { return nvars_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    unsigned total_degree() const;
    Rational coefficient(const Exponent& e) const;

    void add_term(const Exponent& e, const Rational& c);

    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    MultiPoly& operator*=(const Rational& c);
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(MultiPoly a, const Rational& c) { return a *= c; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    MultiPoly operator-() const { return *this * Rational(-1); }

    friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
        return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }

    Rational evaluate(const RatVec& point) const;

    /// Human-readable form, e.g. "1/2*s1^2 - 1/2*s1". Names default to x1..xn.
    std::string to_string(const std::vector<std::string>& names = {}) const;

private:
    std::size_t nvars_ = 0;
    Terms terms_;
};

/// Dense univariate polynomial; coeffs[k] multiplies t^k. No trailing zeros.
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Rational> coeffs);
    /// prod (t - r_i)
    static UniPoly from_roots(const std::vector<Rational>& roots);
    static UniPoly monomial(const Rational& c, std::size_t k);

    const std::vector<Rational>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    /// -1 for the zero polynomial.
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    Rational leading() const;

    UniPoly monic() const;
    Rational evaluate(const Rational& x) const;
    /// p(-t)
    UniPoly reflect() const;

    UniPoly& operator+=(const UniPoly& o);
    UniPoly& operator-=(const UniPoly& o);
    friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
    friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator*(UniPoly a, const Rational& c);
    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.coeffs_ == b.coeffs_; }

    struct DivMod;
    DivMod divmod(const UniPoly& divisor) const;
    bool divides(const UniPoly& other) const;

    std::string to_string(const std::string& var = "s") const;

private:
    void trim();
    std::vector<Rational> coeffs_;
};

struct UniPoly::DivMod {
    UniPoly quotient, remainder;
};

}  // namespace toricb
