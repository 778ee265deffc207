// Copyright (C) 2026 orbitlab authors
// SPDX-License-Identifier: Apache-2.0

#include "orbitlab/integer_matrix.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "orbitlab/error.hpp"

namespace orbitlab {

// ---------------------------------------------------------------------------
// LatticeVector

LatticeVector::LatticeVector(std::initializer_list<long> coords) {
    coords_.reserve(coords.size());
    for (long c : coords) coords_.emplace_back(c);
}

bool LatticeVector::is_zero() const {
    return std::all_of(coords_.begin(), coords_.end(), [](const Integer& c) { return c == 0; });
}

Integer LatticeVector::height() const {
    Integer h = 0;
    for (const auto& c : coords_) {
        Integer a = abs(c);
        if (a > h) h = a;
    }
    return h;
}

Integer LatticeVector::content() const {
    Integer g = 0;
    for (const auto& c : coords_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    return g;
}

LatticeVector& LatticeVector::operator+=(const LatticeVector& other) {
    if (other.size() != size()) throw DimensionMismatch("vector addition: length mismatch");
    for (std::size_t i = 0; i < size(); ++i) coords_[i] += other.coords_[i];
    return *this;
}

LatticeVector& LatticeVector::operator-=(const LatticeVector& other) {
    if (other.size() != size()) throw DimensionMismatch("vector subtraction: length mismatch");
    for (std::size_t i = 0; i < size(); ++i) coords_[i] -= other.coords_[i];
    return *this;
}

LatticeVector& LatticeVector::operator*=(const Integer& scalar) {
    for (auto& c : coords_) c *= scalar;
    return *this;
}

std::string LatticeVector::to_string() const {
    std::ostringstream os;
    os << *this;
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const LatticeVector& v) {
    os << '[';
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i].get_str();
    return os << ']';
}

LatticeVector unit_vector(std::size_t n, std::size_t i) {
    LatticeVector v(n);
    v[i] = 1;
    return v;
}

// ---------------------------------------------------------------------------
// IntMatrix

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw DimensionMismatch("ragged matrix literal");
        for (long x : r) data_.emplace_back(x);
    }
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(std::span<const LatticeVector> rows, std::size_t cols) {
    IntMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) m.set_row(i, rows[i]);
    return m;
}

IntMatrix IntMatrix::from_columns(std::span<const LatticeVector> cols, std::size_t rows) {
    IntMatrix m(rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) m.set_col(j, cols[j]);
    return m;
}

LatticeVector IntMatrix::row(std::size_t i) const {
    std::vector<Integer> r(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                           data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
    return LatticeVector(std::move(r));
}

LatticeVector IntMatrix::col(std::size_t j) const {
    LatticeVector c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
}

void IntMatrix::set_row(std::size_t i, const LatticeVector& v) {
    if (v.size() != cols_) throw DimensionMismatch("set_row: length mismatch");
    for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = v[j];
}

void IntMatrix::set_col(std::size_t j, const LatticeVector& v) {
    if (v.size() != rows_) throw DimensionMismatch("set_col: length mismatch");
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

bool IntMatrix::is_symmetric() const {
    if (!is_square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = i + 1; j < cols_; ++j)
            if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols_ != b.rows_) throw DimensionMismatch("matrix product: inner dimensions differ");
    IntMatrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Integer& aik = a(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
        }
    return c;
}

LatticeVector operator*(const IntMatrix& a, const LatticeVector& v) {
    if (a.cols_ != v.size()) throw DimensionMismatch("matrix-vector product: dimensions differ");
    LatticeVector r(a.rows_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) r[i] += a(i, k) * v[k];
    return r;
}

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionMismatch("matrix sum: shapes differ");
    IntMatrix c = a;
    for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] += b.data_[i];
    return c;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionMismatch("matrix difference: shapes differ");
    IntMatrix c = a;
    for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] -= b.data_[i];
    return c;
}

IntMatrix operator-(const IntMatrix& a) {
    IntMatrix c = a;
    for (auto& x : c.data_) x = -x;
    return c;
}

std::string IntMatrix::to_string() const {
    std::ostringstream os;
    os << *this;
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const IntMatrix& m) {
    os << '[';
    for (std::size_t i = 0; i < m.rows(); ++i) os << (i ? "," : "") << m.row(i);
    return os << ']';
}

RatMatrix to_rational(const IntMatrix& m) {
    RatMatrix r(m.rows(), std::vector<Rational>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r[i][j] = m(i, j);
    return r;
}

// ---------------------------------------------------------------------------
// Exact algorithms

Integer floor_div(const Integer& a, const Integer& b) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

Integer determinant(const IntMatrix& m) {
    if (!m.is_square()) throw DimensionMismatch("determinant of a non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    IntMatrix a = m;
    Integer sign = 1;
    Integer prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && a(p, k) == 0) ++p;
            if (p == n) return 0;
            for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(p, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Integer t = a(i, j) * a(k, k) - a(i, k) * a(k, j);
                mpz_divexact(a(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
        }
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

namespace {

void swap_rows(IntMatrix& a, std::size_t r1, std::size_t r2) {
    if (r1 == r2) return;
    for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(r1, j), a(r2, j));
}

// row_dst += q * row_src
void add_row(IntMatrix& a, std::size_t dst, std::size_t src, const Integer& q) {
    if (q == 0) return;
    for (std::size_t j = 0; j < a.cols(); ++j) a(dst, j) += q * a(src, j);
}

void negate_row(IntMatrix& a, std::size_t r) {
    for (std::size_t j = 0; j < a.cols(); ++j) a(r, j) = -a(r, j);
}

void swap_cols(IntMatrix& a, std::size_t c1, std::size_t c2) {
    if (c1 == c2) return;
    for (std::size_t i = 0; i < a.rows(); ++i) std::swap(a(i, c1), a(i, c2));
}

// col_dst += q * col_src
void add_col(IntMatrix& a, std::size_t dst, std::size_t src, const Integer& q) {
    if (q == 0) return;
    for (std::size_t i = 0; i < a.rows(); ++i) a(i, dst) += q * a(i, src);
}

void negate_col(IntMatrix& a, std::size_t c) {
    for (std::size_t i = 0; i < a.rows(); ++i) a(i, c) = -a(i, c);
}

// Row-echelonizes the first `ncols` columns of `a` with unimodular row
// operations (Euclid on each pivot column). Returns the pivot columns.
std::vector<std::size_t> echelonize(IntMatrix& a, std::size_t ncols, bool reduce_above) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < ncols && r < a.rows(); ++c) {
        while (true) {
            // smallest nonzero |entry| in column c at rows >= r
            std::size_t best = a.rows();
            for (std::size_t i = r; i < a.rows(); ++i) {
                if (a(i, c) == 0) continue;
                if (best == a.rows() || abs(a(i, c)) < abs(a(best, c))) best = i;
            }
            if (best == a.rows()) break;
            swap_rows(a, r, best);
            bool done = true;
            for (std::size_t i = r + 1; i < a.rows(); ++i) {
                if (a(i, c) == 0) continue;
                Integer q = floor_div(a(i, c), a(r, c));
                add_row(a, i, r, -q);
                if (a(i, c) != 0) done = false;
            }
            if (done) break;
        }
        if (r < a.rows() && a(r, c) != 0) {
            if (a(r, c) < 0) negate_row(a, r);
            if (reduce_above) {
                for (std::size_t i = 0; i < r; ++i) {
                    Integer q = floor_div(a(i, c), a(r, c));
                    add_row(a, i, r, -q);
                }
            }
            pivots.push_back(c);
            ++r;
        }
    }
    return pivots;
}

}  // namespace

IntMatrix hermite_form(const IntMatrix& m) {
    IntMatrix a = m;
    auto pivots = echelonize(a, a.cols(), true);
    IntMatrix h(pivots.size(), a.cols());
    for (std::size_t i = 0; i < pivots.size(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) h(i, j) = a(i, j);
    return h;
}

std::vector<LatticeVector> integer_kernel(const IntMatrix& m) {
    const std::size_t n = m.cols();
    const std::size_t r = m.rows();
    // [m^T | I]: row operations track a unimodular U with U m^T = echelon.
    IntMatrix aug(n, r + n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < r; ++j) aug(i, j) = m(j, i);
        aug(i, r + i) = 1;
    }
    auto pivots = echelonize(aug, r, false);
    const std::size_t rank = pivots.size();
    if (rank == n) return {};
    IntMatrix k(n - rank, n);
    for (std::size_t i = rank; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) k(i - rank, j) = aug(i, r + j);
    IntMatrix h = hermite_form(k);
    std::vector<LatticeVector> out;
    out.reserve(h.rows());
    for (std::size_t i = 0; i < h.rows(); ++i) out.push_back(h.row(i));
    return out;
}

SmithForm smith_form(const IntMatrix& m) {
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    IntMatrix d = m;
    IntMatrix U = IntMatrix::identity(rows);
    IntMatrix V = IntMatrix::identity(cols);
    IntMatrix Vinv = IntMatrix::identity(cols);

    // Column operations update V (right) and V^{-1} (left, inverse op).
    auto col_swap = [&](std::size_t a, std::size_t b) {
        swap_cols(d, a, b);
        swap_cols(V, a, b);
        swap_rows(Vinv, a, b);
    };
    auto col_add = [&](std::size_t dst, std::size_t src, const Integer& q) {
        add_col(d, dst, src, q);
        add_col(V, dst, src, q);
        add_row(Vinv, src, dst, -q);
    };
    auto col_neg = [&](std::size_t c) {
        negate_col(d, c);
        negate_col(V, c);
        negate_row(Vinv, c);
    };
    auto row_swap = [&](std::size_t a, std::size_t b) {
        swap_rows(d, a, b);
        swap_rows(U, a, b);
    };
    auto row_add = [&](std::size_t dst, std::size_t src, const Integer& q) {
        add_row(d, dst, src, q);
        add_row(U, dst, src, q);
    };

    std::vector<Integer> divisors;
    const std::size_t tmax = std::min(rows, cols);
    for (std::size_t t = 0; t < tmax; ++t) {
        while (true) {
            // pivot: smallest nonzero |entry| in the trailing block
            std::size_t pi = rows, pj = cols;
            for (std::size_t i = t; i < rows; ++i)
                for (std::size_t j = t; j < cols; ++j) {
                    if (d(i, j) == 0) continue;
                    if (pi == rows || abs(d(i, j)) < abs(d(pi, pj))) {
                        pi = i;
                        pj = j;
                    }
                }
            if (pi == rows) break;
            row_swap(t, pi);
            col_swap(t, pj);

            bool clean = true;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (d(i, t) == 0) continue;
                row_add(i, t, -floor_div(d(i, t), d(t, t)));
                if (d(i, t) != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (d(t, j) == 0) continue;
                col_add(j, t, -floor_div(d(t, j), d(t, t)));
                if (d(t, j) != 0) clean = false;
            }
            if (!clean) continue;

            // divisibility of the trailing block by the pivot
            std::size_t bad = rows;
            for (std::size_t i = t + 1; i < rows && bad == rows; ++i)
                for (std::size_t j = t + 1; j < cols; ++j)
                    if (d(i, j) % d(t, t) != 0) {
                        bad = i;
                        break;
                    }
            if (bad == rows) break;
            row_add(t, bad, Integer(1));
        }
        if (d(t, t) == 0) break;
        if (d(t, t) < 0) col_neg(t);
        divisors.push_back(d(t, t));
    }
    return SmithForm{std::move(U), std::move(V), std::move(Vinv), std::move(divisors)};
}

std::size_t rank_over_q(const RatMatrix& m) {
    RatMatrix a = m;
    std::size_t rank = 0;
    const std::size_t rows = a.size();
    const std::size_t cols = rows ? a[0].size() : 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t p = rank;
        while (p < rows && a[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(a[p], a[rank]);
        for (std::size_t i = rank + 1; i < rows; ++i) {
            if (a[i][c] == 0) continue;
            Rational f = a[i][c] / a[rank][c];
            for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[rank][j];
        }
        ++rank;
    }
    return rank;
}

std::size_t rank_over_q(const IntMatrix& m) { return rank_over_q(to_rational(m)); }

RatMatrix inverse_over_q(const RatMatrix& m) {
    const std::size_t n = m.size();
    RatMatrix a = m;
    RatMatrix inv(n, std::vector<Rational>(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i].size() != n) throw DimensionMismatch("inverse of a non-square matrix");
        inv[i][i] = 1;
    }
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && a[p][c] == 0) ++p;
        if (p == n) throw SingularMatrix("matrix is singular over Q");
        std::swap(a[p], a[c]);
        std::swap(inv[p], inv[c]);
        Rational piv = a[c][c];
        for (std::size_t j = 0; j < n; ++j) {
            a[c][j] /= piv;
            inv[c][j] /= piv;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || a[i][c] == 0) continue;
            Rational f = a[i][c];
            for (std::size_t j = 0; j < n; ++j) {
                a[i][j] -= f * a[c][j];
                inv[i][j] -= f * inv[c][j];
            }
        }
    }
    return inv;
}

IntMatrix inverse_unimodular(const IntMatrix& m) {
    if (!m.is_square()) throw DimensionMismatch("inverse of a non-square matrix");
    Integer det = determinant(m);
    if (det != 1 && det != -1) throw SingularMatrix("matrix is not unimodular (det = " + det.get_str() + ")");
    RatMatrix inv = inverse_over_q(to_rational(m));
    IntMatrix out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            inv[i][j].canonicalize();
            out(i, j) = inv[i][j].get_num();
        }
    return out;
}

std::vector<Integer> gcd_combination(std::span<const Integer> values, Integer* gcd_out) {
    std::vector<Integer> coeffs(values.size(), 0);
    Integer g = 0;
    for (std::size_t i = 0; i < values.size(); ++i) {
        const Integer& v = values[i];
        if (v == 0) continue;
        if (g != 0 && v % g == 0) continue;
        if (g == 0) {
            g = abs(v);
            coeffs[i] = sgn(v);
            continue;
        }
        Integer ng, s, t;
        mpz_gcdext(ng.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        for (std::size_t j = 0; j < i; ++j) coeffs[j] *= s;
        coeffs[i] = t;
        g = ng;
        if (g == 1) break;
    }
    if (gcd_out) *gcd_out = g;
    return coeffs;
}

}  // namespace orbitlab
