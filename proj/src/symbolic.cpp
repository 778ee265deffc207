// Copyright (C) 2026 orbitlab authors
// SPDX-License-Identifier: Apache-2.0

#include "orbitlab/symbolic.hpp"

#include <cmath>
#include <set>

#include "orbitlab/error.hpp"

namespace orbitlab {

SymbolicRealVector::SymbolicRealVector(std::vector<Symbol> symbols, RatMatrix coeffs) : coeffs_(std::move(coeffs)) {
    std::set<std::string> tags{"1"};
    symbols_.push_back(Symbol{"1", 1.0, 0.0});
    for (auto& s : symbols) {
        if (!std::isfinite(s.approx)) throw InvalidSymbolicVector("symbol '" + s.tag + "' has a non-finite approximation");
        if (!tags.insert(s.tag).second) throw InvalidSymbolicVector("duplicate symbol tag '" + s.tag + "'");
        symbols_.push_back(std::move(s));
    }
    for (auto& row : coeffs_) {
        if (row.size() != symbols_.size())
            throw InvalidSymbolicVector("coefficient row length does not match the number of symbols");
        for (auto& c : row) c.canonicalize();
    }
}

SymbolicRealVector SymbolicRealVector::rational(const LatticeVector& v) {
    RatMatrix c(v.size(), std::vector<Rational>(1));
    for (std::size_t i = 0; i < v.size(); ++i) c[i][0] = v[i];
    return SymbolicRealVector({}, std::move(c));
}

SymbolicRealVector SymbolicRealVector::combination(std::vector<Symbol> symbols, const std::vector<LatticeVector>& parts) {
    if (parts.size() != symbols.size() + 1) throw InvalidSymbolicVector("need one part per symbol plus the rational part");
    const std::size_t n = parts[0].size();
    RatMatrix c(n, std::vector<Rational>(parts.size()));
    for (std::size_t j = 0; j < parts.size(); ++j) {
        if (parts[j].size() != n) throw DimensionMismatch("symbolic parts have different lengths");
        for (std::size_t i = 0; i < n; ++i) c[i][j] = parts[j][i];
    }
    return SymbolicRealVector(std::move(symbols), std::move(c));
}

std::vector<Rational> SymbolicRealVector::component(std::size_t symbol) const {
    std::vector<Rational> out(dim());
    for (std::size_t i = 0; i < dim(); ++i) out[i] = coeffs_[i][symbol];
    return out;
}

Eigen::VectorXd SymbolicRealVector::approx() const {
    Eigen::VectorXd v = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(dim()));
    for (std::size_t i = 0; i < dim(); ++i) {
        double s = 0.0;
        for (std::size_t j = 0; j < symbols_.size(); ++j)
            if (coeffs_[i][j] != 0) s += coeffs_[i][j].get_d() * symbols_[j].approx;
        v[static_cast<Eigen::Index>(i)] = s;
    }
    return v;
}

SymbolicRealVector SymbolicRealVector::transformed(const IntMatrix& m) const {
    if (m.cols() != dim()) throw DimensionMismatch("matrix does not match symbolic vector length");
    SymbolicRealVector out = *this;
    out.coeffs_.assign(m.rows(), std::vector<Rational>(symbols_.size(), 0));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t k = 0; k < dim(); ++k) {
            if (m(i, k) == 0) continue;
            for (std::size_t j = 0; j < symbols_.size(); ++j) out.coeffs_[i][j] += m(i, k) * coeffs_[k][j];
        }
    return out;
}

SymbolicRealVector SymbolicRealVector::scaled(const Rational& s) const {
    SymbolicRealVector out = *this;
    for (auto& row : out.coeffs_)
        for (auto& c : row) c *= s;
    return out;
}

bool operator==(const SymbolicRealVector& a, const SymbolicRealVector& b) {
    if (a.symbols_.size() != b.symbols_.size()) return false;
    for (std::size_t j = 0; j < a.symbols_.size(); ++j)
        if (a.symbols_[j].tag != b.symbols_[j].tag) return false;
    return a.coeffs_ == b.coeffs_;
}

}  // namespace orbitlab
