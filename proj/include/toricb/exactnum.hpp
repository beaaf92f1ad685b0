#pragma once

// Exact integer/rational arithmetic, integer matrices, lattice normal forms
// and exact linear feasibility.

#include <cstddef>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace toricb {

using Integer = mpz_class;
using Rational = mpq_class;

using IntVec = std::vector<Integer>;
using RatVec = std::vector<Rational>;

Rational parse_rational(std::string_view text);
std::string to_string(const Integer& x);
std::string to_string(const Rational& x);
std::string to_string(const IntVec& v);
std::string to_string(const RatVec& v);

Integer floor(const Rational& x);
Integer ceil(const Rational& x);
bool is_integral(const Rational& x);

IntVec make_intvec(std::initializer_list<long> values);
RatVec to_rational(const IntVec& v);

Integer dot(const IntVec& a, const IntVec& b);
Rational dot(const IntVec& a, const RatVec& b);
Rational dot(const RatVec& a, const RatVec& b);

/// Dense row-major matrix over an exact ring.
template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    Matrix(std::initializer_list<std::initializer_list<long>> rows);
    static Matrix from_rows(const std::vector<std::vector<T>>& rows);
    static Matrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::vector<T> row(std::size_t i) const;
    std::vector<T> col(std::size_t j) const;
    Matrix transpose() const;

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

using IntMatrix = Matrix<Integer>;
using RatMatrix = Matrix<Rational>;

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
IntVec operator*(const IntMatrix& m, const IntVec& v);
RatVec operator*(const RatMatrix& m, const RatVec& v);
RatMatrix to_rational(const IntMatrix& m);
std::ostream& operator<<(std::ostream& os, const IntMatrix& m);

/// Exact determinant (Bareiss fraction-free elimination). Square input only.
Integer determinant(const IntMatrix& m);
std::size_t rank(const IntMatrix& m);
std::size_t rank(const RatMatrix& m);

struct HermiteResult {
    IntMatrix H;  // M * U, lower echelon with positive pivots
    IntMatrix U;  // unimodular column transform
    std::vector<std::size_t> pivot_rows;
    std::size_t rank = 0;

    /// True iff the columns of M span Z^rows (pivot block is the identity).
    bool saturated() const;
};

/// Column-style Hermite normal form: M * U = H. Entries of a pivot row left of
/// the pivot are reduced into [0, pivot).
HermiteResult hermite_normal_form(const IntMatrix& m);

/// v / gcd(v). Throws std::invalid_argument on the zero vector.
IntVec primitive_vector(const IntVec& v);

enum class Domain { rational, integer };

/// A solution of M x = b over the requested domain, or nullopt. Free variables
/// are set to zero for rational solutions; integer solutions go through the
/// Hermite form of M.
std::optional<RatVec> solve_linear(const RatMatrix& m, const RatVec& b, Domain domain);

enum class Relation { ge, gt };

struct Inequality {
    RatVec a;
    Rational c;
    Relation rel = Relation::ge;

    bool satisfied_by(const RatVec& x) const;
};

struct Feasibility {
    bool feasible = false;
    RatVec witness;
};

/// Fourier-Motzkin decision of {x : a_k . x rel_k c_k}. A feasible answer
/// carries a witness satisfying every constraint exactly.
Feasibility fm_feasible(const std::vector<Inequality>& system);

/// Bounds on x_0 implied by the system (projection of all other variables).
struct Interval {
    std::optional<Rational> lo, hi;
    bool lo_strict = false, hi_strict = false;
    bool empty = false;
};
Interval fm_project_first(const std::vector<Inequality>& system);

// ---------------------------------------------------------------------------

template <class T>
Matrix<T>::Matrix(std::initializer_list<std::initializer_list<long>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw std::invalid_argument("ragged matrix literal");
        for (long x : r) data_.emplace_back(x);
    }
}

template <class T>
Matrix<T> Matrix<T>::from_rows(const std::vector<std::vector<T>>& rows) {
    Matrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
    for (std::size_t i = 0; i < m.rows_; ++i) {
        if (rows[i].size() != m.cols_) throw std::invalid_argument("ragged matrix rows");
        for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

template <class T>
Matrix<T> Matrix<T>::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

template <class T>
std::vector<T> Matrix<T>::row(std::size_t i) const {
    return std::vector<T>(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                          data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

template <class T>
std::vector<T> Matrix<T>::col(std::size_t j) const {
    std::vector<T> out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out[i] = (*this)(i, j);
    return out;
}

template <class T>
Matrix<T> Matrix<T>::transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

}  // namespace toricb
