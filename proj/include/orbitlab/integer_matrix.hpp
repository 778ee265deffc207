// Copyright (C) 2026 orbitlab authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace orbitlab {

using Integer = mpz_class;
using Rational = mpq_class;

/// Exact integer coordinate vector in some lattice basis.
class LatticeVector {
public:
    LatticeVector() = default;
    explicit LatticeVector(std::size_t n) : coords_(n, 0) {}
    explicit LatticeVector(std::vector<Integer> coords) : coords_(std::move(coords)) {}
    LatticeVector(std::initializer_list<long> coords);

    std::size_t size() const noexcept { return coords_.size(); }
    bool empty() const noexcept { return coords_.empty(); }

    Integer& operator[](std::size_t i) { return coords_[i]; }
    const Integer& operator[](std::size_t i) const { return coords_[i]; }

    auto begin() const { return coords_.begin(); }
    auto end() const { return coords_.end(); }
    const std::vector<Integer>& coords() const noexcept { return coords_; }

    bool is_zero() const;
    /// Max absolute coordinate.
    Integer height() const;
    /// Non-negative gcd of the coordinates (0 for the zero vector).
    Integer content() const;

    LatticeVector& operator+=(const LatticeVector& other);
    LatticeVector& operator-=(const LatticeVector& other);
    LatticeVector& operator*=(const Integer& scalar);

    friend LatticeVector operator+(LatticeVector a, const LatticeVector& b) { return a += b; }
    friend LatticeVector operator-(LatticeVector a, const LatticeVector& b) { return a -= b; }
    friend LatticeVector operator*(const Integer& s, LatticeVector v) { return v *= s; }
    friend LatticeVector operator-(LatticeVector v) { return v *= Integer(-1); }

    friend bool operator==(const LatticeVector& a, const LatticeVector& b) { return a.coords_ == b.coords_; }
    friend bool operator<(const LatticeVector& a, const LatticeVector& b) { return a.coords_ < b.coords_; }

    std::string to_string() const;

private:
    std::vector<Integer> coords_;
};

std::ostream& operator<<(std::ostream& os, const LatticeVector& v);

LatticeVector unit_vector(std::size_t n, std::size_t i);

/// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}
    IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

    static IntMatrix identity(std::size_t n);
    static IntMatrix from_rows(std::span<const LatticeVector> rows, std::size_t cols);
    static IntMatrix from_columns(std::span<const LatticeVector> cols, std::size_t rows);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }

    Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Integer& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    LatticeVector row(std::size_t i) const;
    LatticeVector col(std::size_t j) const;
    void set_row(std::size_t i, const LatticeVector& v);
    void set_col(std::size_t j, const LatticeVector& v);

    IntMatrix transpose() const;
    bool is_symmetric() const;

    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
    friend LatticeVector operator*(const IntMatrix& a, const LatticeVector& v);
    friend IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
    friend IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
    friend IntMatrix operator-(const IntMatrix& a);
    friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    std::string to_string() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Integer> data_;
};

std::ostream& operator<<(std::ostream& os, const IntMatrix& m);

/// Dense matrix of exact rationals, stored as rows.
using RatMatrix = std::vector<std::vector<Rational>>;

RatMatrix to_rational(const IntMatrix& m);

/// Determinant by fraction-free (Bareiss) elimination.
Integer determinant(const IntMatrix& m);

/// Row Hermite normal form of the lattice spanned by the rows of `m`:
/// echelon, positive pivots, entries above each pivot reduced into [0, pivot).
/// Zero rows are dropped, so the result has exactly rank(m) rows.
IntMatrix hermite_form(const IntMatrix& m);

/// Integral basis of {v in Z^n : m v = 0}, returned as rows in Hermite form.
/// The kernel lattice is saturated by construction.
std::vector<LatticeVector> integer_kernel(const IntMatrix& m);

/// Smith normal form U * m * V = D with U, V unimodular.
/// `divisors` holds the nonzero elementary divisors d_1 | d_2 | ... (all > 0).
struct SmithForm {
    IntMatrix U;
    IntMatrix V;
    IntMatrix V_inverse;
    std::vector<Integer> divisors;
};

SmithForm smith_form(const IntMatrix& m);

std::size_t rank_over_q(const RatMatrix& m);
std::size_t rank_over_q(const IntMatrix& m);

/// Exact inverse over Q; throws SingularMatrix when det == 0.
RatMatrix inverse_over_q(const RatMatrix& m);

/// Integer inverse of a matrix with det = +-1.
IntMatrix inverse_unimodular(const IntMatrix& m);

/// Coefficients c with sum c_i * values_i = gcd(values) >= 0.
/// Entries are consumed left to right and skipped once they are divisible by
/// the running gcd, so the first coordinate achieving gcd 1 is preferred.
std::vector<Integer> gcd_combination(std::span<const Integer> values, Integer* gcd_out = nullptr);

/// Floor division for integers (rounds toward negative infinity).
Integer floor_div(const Integer& a, const Integer& b);

}  // namespace orbitlab
