// Copyright (C) 2026 orbitlab authors
// SPDX-License-Identifier: Apache-2.0

#include "orbitlab/irrationality.hpp"

#include "orbitlab/error.hpp"
#include "orbitlab/interval.hpp"

namespace orbitlab {

namespace {

void check_dim(const QuadLattice& L, const SymbolicRealVector& y) {
    if (y.dim() != L.rank()) throw DimensionMismatch("symbolic vector length does not match lattice rank");
}

// P[j][k] = (c_j, c_k) for the per-symbol components c_j of y.
RatMatrix component_pairings(const QuadLattice& L, const SymbolicRealVector& y) {
    const std::size_t n = L.rank(), m = y.symbol_count();
    RatMatrix Gc(n, std::vector<Rational>(m, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            if (L.gram()(i, k) == 0) continue;
            for (std::size_t j = 0; j < m; ++j) Gc[i][j] += L.gram()(i, k) * y.coeffs()[k][j];
        }
    RatMatrix P(m, std::vector<Rational>(m, 0));
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b)
            for (std::size_t i = 0; i < n; ++i) P[a][b] += y.coeffs()[i][a] * Gc[i][b];
    return P;
}

}  // namespace

std::vector<Rational> symbolic_inner(const QuadLattice& L, const SymbolicRealVector& y, const LatticeVector& v) {
    check_dim(L, y);
    if (v.size() != L.rank()) throw DimensionMismatch("vector length does not match lattice rank");
    LatticeVector gv = pairing_row(L, v);
    std::vector<Rational> out(y.symbol_count(), 0);
    for (std::size_t i = 0; i < L.rank(); ++i) {
        if (gv[i] == 0) continue;
        for (std::size_t j = 0; j < y.symbol_count(); ++j) out[j] += y.coeffs()[i][j] * gv[i];
    }
    return out;
}

Sublattice rational_constraint_lattice(const QuadLattice& L, const SymbolicRealVector& y) {
    check_dim(L, y);
    const std::size_t n = L.rank(), m = y.symbol_count();
    // Row j: c_j^T G, scaled to integers.
    IntMatrix A(m, n);
    for (std::size_t j = 0; j < m; ++j) {
        std::vector<Rational> row(n, 0);
        for (std::size_t i = 0; i < n; ++i) {
            if (y.coeffs()[i][j] == 0) continue;
            for (std::size_t k = 0; k < n; ++k) row[k] += y.coeffs()[i][j] * L.gram()(i, k);
        }
        Integer den = 1;
        for (auto& x : row) {
            x.canonicalize();
            mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
        }
        for (std::size_t k = 0; k < n; ++k) {
            Rational t = row[k] * den;
            t.canonicalize();
            A(j, k) = t.get_num();
        }
    }
    return Sublattice(n, integer_kernel(A));
}

NormBounds symbolic_norm_bounds(const QuadLattice& L, const SymbolicRealVector& y, long precision_bits) {
    check_dim(L, y);
    const auto prec = static_cast<mpfr_prec_t>(precision_bits);
    RatMatrix P = component_pairings(L, y);
    const std::size_t m = y.symbol_count();
    std::vector<Interval> s;
    s.reserve(m);
    s.push_back(Interval::exact(Rational(1), prec));
    for (std::size_t j = 1; j < m; ++j) s.push_back(Interval::around(y.symbols()[j].approx, y.symbols()[j].radius, prec));
    Interval acc(prec);
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b) {
            if (P[a][b] == 0) continue;
            acc = acc + Interval::exact(P[a][b], prec) * s[a] * s[b];
        }
    return {acc.lower(), acc.upper()};
}

void require_positive_norm(const QuadLattice& L, const SymbolicRealVector& y, long precision_bits) {
    NormBounds b = symbolic_norm_bounds(L, y, precision_bits);
    if (b.lower > 0) return;
    if (b.upper <= 0) throw NonPositiveNorm("(y, y) is not positive");
    throw PrecisionError("interval enclosure of (y, y) contains 0");
}

bool is_u_orthoirrational(const QuadLattice& L, const LatticeVector& u, const SymbolicRealVector& y,
                          long precision_bits) {
    check_dim(L, y);
    for (const auto& c : symbolic_inner(L, y, u))
        if (c != 0) throw NotInPerp("y is not orthogonal to u");
    require_positive_norm(L, y, precision_bits);
    auto split = split_hyperbolic(L, u);
    const auto& W = split.lprime.basis();
    const std::size_t k = W.size(), m = y.symbol_count();
    if (k == 0) return false;

    // Coordinates of each component in the complement basis: G'^{-1} (w_i, c_j).
    IntMatrix Gp(k, k);
    for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = 0; b < k; ++b) Gp(a, b) = inner(L, W[a], W[b]);
    RatMatrix Gpinv = inverse_over_q(to_rational(Gp));
    RatMatrix pair(k, std::vector<Rational>(m));
    for (std::size_t a = 0; a < k; ++a) pair[a] = symbolic_inner(L, y, W[a]);
    RatMatrix coords(k, std::vector<Rational>(m, 0));
    for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = 0; b < k; ++b) {
            if (Gpinv[a][b] == 0) continue;
            for (std::size_t j = 0; j < m; ++j) coords[a][j] += Gpinv[a][b] * pair[b][j];
        }
    return rank_over_q(coords) >= 2;
}

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::Certified: return "Certified";
        case Verdict::RefutedWithWitness: return "RefutedWithWitness";
        case Verdict::Inconclusive: return "Inconclusive";
    }
    return "Inconclusive";
}

IrrationalityCertificate certify_orthoisotropic_irrational(const QuadLattice& L, const SymbolicRealVector& y,
                                                           long height, long precision_bits) {
    require_positive_norm(L, y, precision_bits);
    IrrationalityCertificate cert;
    cert.height_bound_used = height;
    cert.perp_rank = rational_constraint_lattice(L, y).rank();

    auto found = find_isotropic_orthogonal(L, y, height);
    cert.isotropic_found = found.size();
    if (found.empty()) return cert;

    if (cert.perp_rank + 3 <= L.rank()) {
        cert.verdict = Verdict::Certified;
        cert.witness_u = found.front();
        return cert;
    }
    for (const auto& u : found) {
        if (!is_u_orthoirrational(L, u, y, precision_bits)) {
            cert.verdict = Verdict::RefutedWithWitness;
            cert.witness_u = u;
            return cert;
        }
    }
    return cert;
}

// ---------------------------------------------------------------------------

namespace detail {

IsotropicSearch make_isotropic_search(const QuadLattice& L, const SymbolicRealVector& y, long height) {
    IsotropicSearch s;
    s.lattice = &L;
    s.height = height;
    s.basis = rational_constraint_lattice(L, y).basis();
    for (const auto& b : s.basis) {
        std::size_t p = 0;
        while (b[p] == 0) ++p;
        s.pivots.push_back(p);
    }
    return s;
}

std::pair<long, long> first_coefficient_range(const IsotropicSearch& s) {
    if (s.height < 1 || s.basis.empty()) return {0, -1};
    Integer hi = Integer(s.height) / s.basis[0][s.pivots[0]];
    return {0, hi.get_si()};
}

namespace {

struct Walker {
    const IsotropicSearch& s;
    std::vector<LatticeVector>& out;
    const std::size_t r;
    const std::size_t n;
    const Integer H;

    // Coordinates [from, to) are final once levels <= i are fixed.
    bool columns_ok(const LatticeVector& v, std::size_t from, std::size_t to) const {
        for (std::size_t j = from; j < to; ++j)
            if (abs(v[j]) > H) return false;
        return true;
    }

    std::size_t frozen_end(std::size_t level) const { return level + 1 < r ? s.pivots[level + 1] : n; }

    void leaf(const LatticeVector& v) {
        if (v.is_zero()) return;
        if (norm(*s.lattice, v) != 0) return;
        if (v.content() != 1) return;
        out.push_back(v);
    }

    void descend(std::size_t level, LatticeVector& v, bool zero_so_far) {
        if (level == r) {
            leaf(v);
            return;
        }
        const LatticeVector& b = s.basis[level];
        const std::size_t p = s.pivots[level];
        const Integer& piv = b[p];
        Integer lo = -floor_div(H + v[p], piv);  // ceil((-H - v_p) / piv)
        Integer hi = floor_div(H - v[p], piv);
        if (zero_so_far && lo < 0) lo = 0;
        for (long t = lo.get_si(); t <= hi.get_si(); ++t) {
            LatticeVector w = v;
            if (t != 0) w += Integer(t) * b;
            if (!columns_ok(w, p, frozen_end(level))) continue;
            descend(level + 1, w, zero_so_far && t == 0);
        }
    }
};

}  // namespace

void enumerate_subtree(const IsotropicSearch& s, long t0, std::vector<LatticeVector>& out) {
    if (s.basis.empty()) return;
    const std::size_t n = s.lattice->rank();
    Walker w{s, out, s.basis.size(), n, Integer(s.height)};
    LatticeVector v(n);
    if (t0 != 0) v += Integer(t0) * s.basis[0];
    if (!w.columns_ok(v, 0, w.frozen_end(0))) return;
    w.descend(1, v, t0 == 0);
}

}  // namespace detail

}  // namespace orbitlab
