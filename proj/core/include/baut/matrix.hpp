#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "baut/errors.hpp"

namespace baut {

using Int = mpz_class;
using Rat = mpq_class;
using IntVector = std::vector<Int>;

/// Dense matrix over Z with arbitrary-precision entries. Entries of the
/// forms handled here are small, but Smith-normal-form transforms are not,
/// so everything stays exact.
class IntMatrix {
public:
    IntMatrix() = default; // 0x0, used only for "not yet set" members
    IntMatrix(std::size_t rows, std::size_t cols);

    static IntMatrix identity(std::size_t n);
    static IntMatrix from_rows(std::initializer_list<std::initializer_list<long>> rows);
    static IntMatrix from_rows(const std::vector<std::vector<Int>>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    Int& operator()(std::size_t i, std::size_t j) { return ent_[i * cols_ + j]; }
    const Int& operator()(std::size_t i, std::size_t j) const { return ent_[i * cols_ + j]; }

    IntMatrix transposed() const;
    bool is_symmetric() const;
    bool is_antisymmetric() const;
    bool is_zero() const;

    void swap_rows(std::size_t i, std::size_t j);
    void swap_cols(std::size_t i, std::size_t j);
    /// row i += c * row j
    void add_row(std::size_t i, std::size_t j, const Int& c);
    /// col i += c * col j
    void add_col(std::size_t i, std::size_t j, const Int& c);
    void negate_row(std::size_t i);

    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
    friend IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
    friend IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
    IntMatrix operator-() const;
    bool operator==(const IntMatrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && ent_ == o.ent_; }
    bool operator!=(const IntMatrix& o) const { return !(*this == o); }
    /// Lexicographic on (rows, cols, flattened entries); the canonical order
    /// used for deterministic set output.
    bool lex_less(const IntMatrix& o) const;

    IntVector apply(const IntVector& x) const; // this * x

    std::string to_string() const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Int> ent_;
};

/// Dense matrix over Q. mpq keeps every entry canonical (lowest terms,
/// positive denominator).
class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(std::size_t rows, std::size_t cols);

    static RationalMatrix identity(std::size_t n);
    static RationalMatrix from(const IntMatrix& m);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rat& operator()(std::size_t i, std::size_t j) { return ent_[i * cols_ + j]; }
    const Rat& operator()(std::size_t i, std::size_t j) const { return ent_[i * cols_ + j]; }

    RationalMatrix transposed() const;
    bool is_symmetric() const;
    /// True when every entry is integral (denominator 1).
    bool is_integral() const;
    IntMatrix to_int_matrix() const; // requires is_integral()

    friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
    bool operator==(const RationalMatrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && ent_ == o.ent_; }
    bool operator!=(const RationalMatrix& o) const { return !(*this == o); }

    /// Entry-wise representative in [0,1). For integer arguments x,y the
    /// value x^T M y mod 1 is unchanged by this reduction.
    RationalMatrix reduced_mod_1() const;

    std::string to_string() const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Rat> ent_;
};

/// Exact determinant (fraction-free Bareiss elimination).
Int determinant(const IntMatrix& m);

/// det m == +-1
bool is_unimodular(const IntMatrix& m);

/// Exact inverse over Q; throws singular_matrix when det m == 0.
RationalMatrix rational_inverse(const IntMatrix& m);

/// Inverse of a unimodular matrix, which is again integral.
IntMatrix unimodular_inverse(const IntMatrix& m);

/// Representative of q in [0,1).
Rat frac_mod1(const Rat& q);

} // namespace baut
