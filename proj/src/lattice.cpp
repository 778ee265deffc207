// Copyright (C) 2026 orbitlab authors
// SPDX-License-Identifier: Apache-2.0

#include "orbitlab/lattice.hpp"

#include <algorithm>
#include <array>
#include <utility>

#include "orbitlab/error.hpp"

namespace orbitlab {

QuadLattice::QuadLattice(IntMatrix gram) : gram_(std::move(gram)) {
    if (!gram_.is_square()) throw InvalidLattice("Gram matrix must be square");
    if (!gram_.is_symmetric()) throw InvalidLattice("Gram matrix must be symmetric");
    det_ = orbitlab::determinant(gram_);
    if (det_ == 0) throw DegenerateGram("Gram matrix is degenerate (determinant 0)");
}

// ---------------------------------------------------------------------------

Sublattice::Sublattice(std::size_t ambient_dim, std::vector<LatticeVector> basis)
    : ambient_dim_(ambient_dim), basis_(std::move(basis)) {
    for (const auto& b : basis_)
        if (b.size() != ambient_dim_) throw DimensionMismatch("sublattice basis vector has wrong length");
    if (!basis_.empty() && rank_over_q(basis_matrix()) != basis_.size())
        throw DependentBasis("sublattice basis is linearly dependent over Q");
}

Sublattice Sublattice::full(std::size_t ambient_dim) {
    std::vector<LatticeVector> b;
    for (std::size_t i = 0; i < ambient_dim; ++i) b.push_back(unit_vector(ambient_dim, i));
    return Sublattice(ambient_dim, std::move(b));
}

IntMatrix Sublattice::basis_matrix() const { return IntMatrix::from_rows(basis_, ambient_dim_); }

bool Sublattice::is_saturated() const {
    if (basis_.empty()) return true;
    auto snf = smith_form(basis_matrix());
    return std::all_of(snf.divisors.begin(), snf.divisors.end(), [](const Integer& d) { return d == 1; });
}

IntMatrix Sublattice::hermite() const { return hermite_form(basis_matrix()); }

bool Sublattice::same_lattice(const Sublattice& other) const {
    return ambient_dim_ == other.ambient_dim_ && hermite() == other.hermite();
}

bool Sublattice::contains(const LatticeVector& v) const {
    if (v.size() != ambient_dim_) throw DimensionMismatch("contains: vector length mismatch");
    auto rows = basis_;
    rows.push_back(v);
    return hermite_form(IntMatrix::from_rows(rows, ambient_dim_)) == hermite();
}

// ---------------------------------------------------------------------------

namespace {

void check_dim(const QuadLattice& L, const LatticeVector& v, const char* what) {
    if (v.size() != L.rank())
        throw DimensionMismatch(std::string(what) + ": vector of length " + std::to_string(v.size()) +
                                " used with a lattice of rank " + std::to_string(L.rank()));
}

}  // namespace

LatticeVector pairing_row(const QuadLattice& L, const LatticeVector& v) {
    check_dim(L, v, "pairing");
    return L.gram() * v;
}

Integer inner(const QuadLattice& L, const LatticeVector& v, const LatticeVector& w) {
    check_dim(L, v, "inner");
    check_dim(L, w, "inner");
    const auto& G = L.gram();
    Integer s = 0;
    for (std::size_t i = 0; i < L.rank(); ++i) {
        if (v[i] == 0) continue;
        for (std::size_t j = 0; j < L.rank(); ++j) s += v[i] * G(i, j) * w[j];
    }
    return s;
}

Integer norm(const QuadLattice& L, const LatticeVector& v) { return inner(L, v, v); }

Signature signature(const QuadLattice& L) {
    const std::size_t n = L.rank();
    RatMatrix a = to_rational(L.gram());
    std::vector<bool> active(n, true);
    std::size_t remaining = n;
    Signature sig;

    while (remaining > 0) {
        std::size_t piv = n;
        for (std::size_t i = 0; i < n; ++i)
            if (active[i] && a[i][i] != 0) {
                piv = i;
                break;
            }
        if (piv != n) {
            (a[piv][piv] > 0 ? sig.p : sig.q) += 1;
            active[piv] = false;
            --remaining;
            for (std::size_t j = 0; j < n; ++j) {
                if (!active[j] || a[j][piv] == 0) continue;
                Rational f = a[j][piv] / a[piv][piv];
                for (std::size_t k = 0; k < n; ++k)
                    if (active[k]) a[j][k] -= f * a[piv][k];
            }
            continue;
        }
        // All active diagonal entries vanish: eliminate a hyperbolic 2x2 block.
        std::size_t bi = n, bj = n;
        for (std::size_t i = 0; i < n && bi == n; ++i) {
            if (!active[i]) continue;
            for (std::size_t j = i + 1; j < n; ++j)
                if (active[j] && a[i][j] != 0) {
                    bi = i;
                    bj = j;
                    break;
                }
        }
        if (bi == n) throw DegenerateGram("form is degenerate");
        const Rational b = a[bi][bj];
        active[bi] = active[bj] = false;
        remaining -= 2;
        sig.p += 1;
        sig.q += 1;
        std::vector<std::size_t> rest;
        for (std::size_t k = 0; k < n; ++k)
            if (active[k]) rest.push_back(k);
        RatMatrix upd(rest.size(), std::vector<Rational>(rest.size()));
        for (std::size_t x = 0; x < rest.size(); ++x)
            for (std::size_t y = 0; y < rest.size(); ++y) {
                std::size_t k = rest[x], l = rest[y];
                upd[x][y] = a[k][l] - (a[k][bi] * a[bj][l] + a[k][bj] * a[bi][l]) / b;
            }
        for (std::size_t x = 0; x < rest.size(); ++x)
            for (std::size_t y = 0; y < rest.size(); ++y) a[rest[x]][rest[y]] = upd[x][y];
    }
    return sig;
}

bool is_even(const QuadLattice& L) {
    for (std::size_t i = 0; i < L.rank(); ++i)
        if (!mpz_even_p(L.gram()(i, i).get_mpz_t())) return false;
    return true;
}

bool is_unimodular(const QuadLattice& L) { return abs(L.determinant()) == 1; }

bool is_primitive(const QuadLattice& L, const LatticeVector& v) {
    check_dim(L, v, "is_primitive");
    if (v.is_zero()) throw ZeroVector("is_primitive: zero vector");
    return v.content() == 1;
}

bool is_isotropic(const QuadLattice& L, const LatticeVector& v) { return norm(L, v) == 0; }

Integer divisor(const QuadLattice& L, const LatticeVector& u) {
    check_dim(L, u, "divisor");
    if (u.is_zero()) throw ZeroVector("divisor: zero vector");
    return pairing_row(L, u).content();
}

// ---------------------------------------------------------------------------

Sublattice orthogonal_sublattice(const QuadLattice& L, const std::vector<LatticeVector>& S) {
    if (S.empty()) return Sublattice::full(L.rank());
    std::vector<LatticeVector> rows;
    rows.reserve(S.size());
    for (const auto& s : S) rows.push_back(pairing_row(L, s));
    return Sublattice(L.rank(), integer_kernel(IntMatrix::from_rows(rows, L.rank())));
}

Sublattice saturation(const QuadLattice& L, const Sublattice& S) {
    if (S.ambient_dim() != L.rank()) throw DimensionMismatch("saturation: sublattice not in this lattice");
    if (S.rank() == 0) return S;
    auto snf = smith_form(S.basis_matrix());
    IntMatrix top(S.rank(), S.ambient_dim());
    for (std::size_t i = 0; i < S.rank(); ++i)
        for (std::size_t j = 0; j < S.ambient_dim(); ++j) top(i, j) = snf.V_inverse(i, j);
    IntMatrix h = hermite_form(top);
    std::vector<LatticeVector> basis;
    for (std::size_t i = 0; i < h.rows(); ++i) basis.push_back(h.row(i));
    return Sublattice(S.ambient_dim(), std::move(basis));
}

IntMatrix extend_to_unimodular_basis(const Sublattice& S) {
    const std::size_t m = S.ambient_dim();
    const std::size_t k = S.rank();
    if (!S.is_saturated()) throw NotSaturated("extend_to_unimodular_basis: Z^m / S has torsion");

    IntMatrix rows(m, m);
    for (std::size_t i = 0; i < k; ++i) rows.set_row(i, S.basis()[i]);
    if (k == m) return rows.transpose();

    // Complement rows: rows k.. of V^{-1} from U B V = [I 0].
    IntMatrix complement(m - k, m);
    if (k == 0) {
        complement = IntMatrix::identity(m);
    } else {
        auto snf = smith_form(S.basis_matrix());
        for (std::size_t i = k; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j) complement(i - k, j) = snf.V_inverse(i, j);
    }

    // Deterministic normalization: reduce against the Hermite form of S,
    // bring the complement into Hermite form, fix det to +1, reduce again.
    IntMatrix h = k ? S.hermite() : IntMatrix(0, m);
    auto reduce = [&](IntMatrix& c) {
        for (std::size_t r = 0; r < c.rows(); ++r)
            for (std::size_t i = 0; i < h.rows(); ++i) {
                std::size_t p = 0;
                while (h(i, p) == 0) ++p;
                Integer q = floor_div(c(r, p), h(i, p));
                if (q == 0) continue;
                for (std::size_t j = 0; j < m; ++j) c(r, j) -= q * h(i, j);
            }
    };
    reduce(complement);
    complement = hermite_form(complement);
    for (std::size_t i = 0; i < m - k; ++i) rows.set_row(k + i, complement.row(i));
    if (determinant(rows) < 0) {
        for (std::size_t j = 0; j < m; ++j) complement(m - k - 1, j) = -complement(m - k - 1, j);
    }
    reduce(complement);
    for (std::size_t i = 0; i < m - k; ++i) rows.set_row(k + i, complement.row(i));
    return rows.transpose();
}

QuadLattice induced_lattice(const QuadLattice& L, const Sublattice& S) {
    if (S.ambient_dim() != L.rank()) throw DimensionMismatch("induced_lattice: sublattice not in this lattice");
    IntMatrix B = S.basis_matrix();
    return QuadLattice(B * L.gram() * B.transpose());
}

QuadLattice direct_sum(const QuadLattice& a, const QuadLattice& b) {
    const std::size_t n = a.rank() + b.rank();
    IntMatrix g(n, n);
    for (std::size_t i = 0; i < a.rank(); ++i)
        for (std::size_t j = 0; j < a.rank(); ++j) g(i, j) = a.gram()(i, j);
    for (std::size_t i = 0; i < b.rank(); ++i)
        for (std::size_t j = 0; j < b.rank(); ++j) g(a.rank() + i, a.rank() + j) = b.gram()(i, j);
    return QuadLattice(std::move(g));
}

// ---------------------------------------------------------------------------

QuadLattice hyperbolic() { return QuadLattice(IntMatrix{{0, 1}, {1, 0}}); }

QuadLattice e8_minus() {
    // Dynkin edges of E8 (Bourbaki numbering, 0-based).
    constexpr std::array<std::pair<int, int>, 7> edges{{{0, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {1, 3}}};
    IntMatrix g(8, 8);
    for (std::size_t i = 0; i < 8; ++i) g(i, i) = -2;
    for (auto [i, j] : edges) {
        g(i, j) = 1;
        g(j, i) = 1;
    }
    return QuadLattice(std::move(g));
}

QuadLattice span4() { return QuadLattice(IntMatrix{{4}}); }

QuadLattice t4_model() { return direct_sum(direct_sum(hyperbolic(), hyperbolic()), hyperbolic()); }

QuadLattice k3_model() { return direct_sum(direct_sum(t4_model(), e8_minus()), e8_minus()); }

// ---------------------------------------------------------------------------

HyperbolicSplit split_hyperbolic(const QuadLattice& L, const LatticeVector& u) {
    check_dim(L, u, "split_hyperbolic");
    if (!is_even(L) || !is_unimodular(L)) throw NotEvenUnimodular("split_hyperbolic: lattice must be even and unimodular");
    if (u.is_zero()) throw ZeroVector("split_hyperbolic: zero vector");
    if (norm(L, u) != 0) throw NotIsotropic("split_hyperbolic: u is not isotropic");
    if (u.content() != 1) throw NotPrimitive("split_hyperbolic: u is not primitive");

    LatticeVector w = pairing_row(L, u);
    Integer g;
    LatticeVector s(gcd_combination(w.coords(), &g));
    // unimodular + primitive => (u, L) = Z
    Integer half = norm(L, s) / 2;
    LatticeVector z = s - half * u;
    return HyperbolicSplit{z, orthogonal_sublattice(L, {u, z})};
}

}  // namespace orbitlab
