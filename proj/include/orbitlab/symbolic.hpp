// Copyright (C) 2026 orbitlab authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Dense>

#include <string>
#include <vector>

#include "orbitlab/integer_matrix.hpp"

namespace orbitlab {

/// A real number known only through a tag and a floating approximation.
/// `radius` bounds |true value - approx|; a negative radius means "one ulp
/// of a double", which covers decimal-to-binary conversion of `approx`.
struct Symbol {
    std::string tag;
    double approx = 0.0;
    double radius = -1.0;
};

/// Real vector whose coordinates are Q-linear combinations of symbols.
///
/// Symbol 0 is always the rational unit "1". Coordinate i equals
/// sum_j coeffs[i][j] * symbol_j. The non-unit symbols are assumed to be
/// linearly independent over Q together with 1; this is a caller contract
/// and is never verified.
class SymbolicRealVector {
public:
    SymbolicRealVector() = default;
    /// `symbols` lists the non-unit symbols; `coeffs` is dim x (1 + symbols.size()).
    SymbolicRealVector(std::vector<Symbol> symbols, RatMatrix coeffs);

    static SymbolicRealVector rational(const LatticeVector& v);
    /// y = parts[0] + sum_{j>=1} symbols[j-1] * parts[j]
    static SymbolicRealVector combination(std::vector<Symbol> symbols, const std::vector<LatticeVector>& parts);

    std::size_t dim() const noexcept { return coeffs_.size(); }
    /// Number of symbols including the unit.
    std::size_t symbol_count() const noexcept { return symbols_.size(); }
    const std::vector<Symbol>& symbols() const noexcept { return symbols_; }
    const RatMatrix& coeffs() const noexcept { return coeffs_; }
    std::vector<Rational> component(std::size_t symbol) const;

    Eigen::VectorXd approx() const;

    /// Exact image under an integer matrix acting on coordinates.
    SymbolicRealVector transformed(const IntMatrix& m) const;
    SymbolicRealVector scaled(const Rational& s) const;

    friend bool operator==(const SymbolicRealVector& a, const SymbolicRealVector& b);

private:
    std::vector<Symbol> symbols_;
    RatMatrix coeffs_;
};

}  // namespace orbitlab
