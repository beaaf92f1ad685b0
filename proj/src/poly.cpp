#include "toricb/poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace toricb {

MultiPoly MultiPoly::constant(std::size_t nvars, const Rational& c) {
    MultiPoly p(nvars);
    p.add_term(Exponent(nvars, 0), c);
    return p;
}

MultiPoly MultiPoly::variable(std::size_t nvars, std::size_t i) {
    if (i >= nvars) throw std::out_of_range("variable index out of range");
    MultiPoly p(nvars);
    Exponent e(nvars, 0);
    e[i] = 1;
    p.add_term(e, 1);
    return p;
}

MultiPoly MultiPoly::linear(const RatVec& coeffs, const Rational& c) {
    MultiPoly p(coeffs.size());
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        Exponent e(coeffs.size(), 0);
        e[i] = 1;
        p.add_term(e, coeffs[i]);
    }
    p.add_term(Exponent(coeffs.size(), 0), c);
    return p;
}

unsigned MultiPoly::total_degree() const {
    unsigned best = 0;
    for (const auto& [e, c] : terms_) {
        unsigned d = 0;
        for (unsigned x : e) d += x;
        best = std::max(best, d);
    }
    return best;
}

Rational MultiPoly::coefficient(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

void MultiPoly::add_term(const Exponent& e, const Rational& c) {
    if (e.size() != nvars_) throw std::invalid_argument("exponent length does not match variable count");
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    if (o.nvars_ != nvars_) throw std::invalid_argument("polynomial rings differ");
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    if (o.nvars_ != nvars_) throw std::invalid_argument("polynomial rings differ");
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

MultiPoly& MultiPoly::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, x] : terms_) x *= c;
    return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    if (a.nvars_ != b.nvars_) throw std::invalid_argument("polynomial rings differ");
    MultiPoly out(a.nvars_);
    Exponent e(a.nvars_);
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            out.add_term(e, ca * cb);
        }
    return out;
}

Rational MultiPoly::evaluate(const RatVec& point) const {
    if (point.size() != nvars_) throw std::invalid_argument("evaluation point has wrong dimension");
    Rational total = 0;
    for (const auto& [e, c] : terms_) {
        Rational t = c;
        for (std::size_t i = 0; i < e.size(); ++i)
            for (unsigned k = 0; k < e[i]; ++k) t *= point[i];
        total += t;
    }
    return total;
}

std::string MultiPoly::to_string(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        Rational mag = abs(c);
        if (first) {
            if (c < 0) out += "-";
        } else {
            out += c < 0 ? " - " : " + ";
        }
        first = false;
        std::string mono;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += i < names.size() ? names[i] : "x" + std::to_string(i + 1);
            if (e[i] > 1) mono += "^" + std::to_string(e[i]);
        }
        if (mono.empty()) out += toricb::to_string(mag);
        else if (mag == 1) out += mono;
        else out += toricb::to_string(mag) + "*" + mono;
    }
    return out;
}

// ---------------------------------------------------------------------------

UniPoly::UniPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void UniPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

UniPoly UniPoly::from_roots(const std::vector<Rational>& roots) {
    UniPoly p({Rational(1)});
    for (const auto& r : roots) p = p * UniPoly({-r, Rational(1)});
    return p;
}

UniPoly UniPoly::monomial(const Rational& c, std::size_t k) {
    std::vector<Rational> v(k + 1);
    v[k] = c;
    return UniPoly(std::move(v));
}

Rational UniPoly::leading() const { return coeffs_.empty() ? Rational(0) : coeffs_.back(); }

UniPoly UniPoly::monic() const {
    if (is_zero()) return *this;
    Rational inv = 1 / leading();
    return *this * inv;
}

Rational UniPoly::evaluate(const Rational& x) const {
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

UniPoly UniPoly::reflect() const {
    std::vector<Rational> v = coeffs_;
    for (std::size_t k = 1; k < v.size(); k += 2) v[k] = -v[k];
    return UniPoly(std::move(v));
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
    trim();
    return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
    trim();
    return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> v(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return UniPoly(std::move(v));
}

UniPoly operator*(UniPoly a, const Rational& c) {
    for (auto& x : a.coeffs_) x *= c;
    a.trim();
    return a;
}

UniPoly::DivMod UniPoly::divmod(const UniPoly& divisor) const {
    if (divisor.is_zero()) throw std::domain_error("polynomial division by zero");
    std::vector<Rational> rem = coeffs_;
    const std::size_t dd = divisor.coeffs_.size();
    if (rem.size() < dd) return {UniPoly(), *this};
    std::vector<Rational> quot(rem.size() - dd + 1);
    const Rational inv = 1 / divisor.leading();
    for (std::size_t k = rem.size() - 1;; --k) {
        Rational q = rem[k] * inv;
        quot[k + 1 - dd] = q;
        if (q != 0)
            for (std::size_t j = 0; j < dd; ++j) rem[k + 1 - dd + j] -= q * divisor.coeffs_[j];
        if (k + 1 == dd) break;
    }
    rem.resize(dd - 1);
    return {UniPoly(std::move(quot)), UniPoly(std::move(rem))};
}

bool UniPoly::divides(const UniPoly& other) const {
    if (is_zero()) return other.is_zero();
    return other.divmod(*this).remainder.is_zero();
}

std::string UniPoly::to_string(const std::string& var) const {
    if (coeffs_.empty()) return "0";
    std::string out;
    bool first = true;
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
        const Rational& c = coeffs_[k];
        if (c == 0) continue;
        Rational mag = abs(c);
        if (first) {
            if (c < 0) out += "-";
        } else {
            out += c < 0 ? " - " : " + ";
        }
        first = false;
        std::string mono = k == 0 ? "" : (k == 1 ? var : var + "^" + std::to_string(k));
        if (mono.empty()) out += toricb::to_string(mag);
        else if (mag == 1) out += mono;
        else out += toricb::to_string(mag) + "*" + mono;
    }
    return out;
}

}  // namespace toricb
