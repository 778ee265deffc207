// Copyright (C) 2026 orbitlab authors
// SPDX-License-Identifier: Apache-2.0

#include "orbitlab/isometry.hpp"

#include <optional>
#include <stdexcept>
#include <utility>

#include "orbitlab/error.hpp"

namespace orbitlab {

namespace {

void check_dim(const QuadLattice& L, const LatticeVector& v, const char* what) {
    if (v.size() != L.rank()) throw DimensionMismatch(std::string(what) + ": vector length does not match lattice rank");
}

bool same_lattice(const LatticePtr& a, const LatticePtr& b) { return a == b || *a == *b; }

// Row vector (G x)^T N, i.e. the pairings of x with the columns of N.
LatticeVector pairing_with_columns(const QuadLattice& L, const LatticeVector& x, const IntMatrix& N) {
    LatticeVector gx = pairing_row(L, x);
    LatticeVector r(N.cols());
    for (std::size_t i = 0; i < N.rows(); ++i) {
        if (gx[i] == 0) continue;
        for (std::size_t j = 0; j < N.cols(); ++j) r[j] += gx[i] * N(i, j);
    }
    return r;
}

// N <- E_{e,a} N without forming E.
void transvect_left(const QuadLattice& L, IntMatrix& N, const LatticeVector& e, const LatticeVector& a) {
    const Integer half = norm(L, a) / 2;
    LatticeVector re = pairing_with_columns(L, e, N);
    LatticeVector ra = pairing_with_columns(L, a, N);
    for (std::size_t i = 0; i < N.rows(); ++i) {
        if (a[i] == 0 && e[i] == 0) continue;
        for (std::size_t j = 0; j < N.cols(); ++j) N(i, j) += a[i] * re[j] - e[i] * ra[j] - half * e[i] * re[j];
    }
}

LatticeVector transvect_vector(const QuadLattice& L, const LatticeVector& x, const LatticeVector& e, const LatticeVector& a) {
    Integer xe = inner(L, x, e);
    Integer xa = inner(L, x, a);
    Integer half = norm(L, a) / 2;
    return x + xe * a - xa * e - (half * xe) * e;
}

// Basis of a maximal positive definite subspace, scaled to integers.
std::vector<LatticeVector> positive_subspace_basis(const QuadLattice& L) {
    const std::size_t n = L.rank();
    const RatMatrix G = to_rational(L.gram());
    std::vector<std::vector<Rational>> b(n, std::vector<Rational>(n, 0));
    for (std::size_t i = 0; i < n; ++i) b[i][i] = 1;
    auto pair = [&](const std::vector<Rational>& x, const std::vector<Rational>& y) {
        Rational s = 0;
        for (std::size_t i = 0; i < n; ++i) {
            if (x[i] == 0) continue;
            for (std::size_t j = 0; j < n; ++j) s += x[i] * G[i][j] * y[j];
        }
        return s;
    };
    std::vector<std::vector<Rational>> positives;
    std::vector<bool> active(n, true);
    std::size_t remaining = n;
    while (remaining > 0) {
        std::size_t piv = n;
        Rational pn;
        for (std::size_t i = 0; i < n; ++i) {
            if (!active[i]) continue;
            pn = pair(b[i], b[i]);
            if (pn != 0) {
                piv = i;
                break;
            }
        }
        if (piv != n) {
            if (pn > 0) positives.push_back(b[piv]);
            active[piv] = false;
            --remaining;
            for (std::size_t k = 0; k < n; ++k) {
                if (!active[k]) continue;
                Rational f = pair(b[k], b[piv]) / pn;
                if (f == 0) continue;
                for (std::size_t j = 0; j < n; ++j) b[k][j] -= f * b[piv][j];
            }
            continue;
        }
        std::size_t bi = n, bj = n;
        Rational hb;
        for (std::size_t i = 0; i < n && bi == n; ++i) {
            if (!active[i]) continue;
            for (std::size_t j = i + 1; j < n; ++j) {
                if (!active[j]) continue;
                hb = pair(b[i], b[j]);
                if (hb != 0) {
                    bi = i;
                    bj = j;
                    break;
                }
            }
        }
        if (bi == n) throw DegenerateGram("form is degenerate");
        std::vector<Rational> pos(n);
        const int s = sgn(hb);
        for (std::size_t j = 0; j < n; ++j) pos[j] = b[bi][j] + s * b[bj][j];
        positives.push_back(pos);
        active[bi] = active[bj] = false;
        remaining -= 2;
        for (std::size_t k = 0; k < n; ++k) {
            if (!active[k]) continue;
            Rational alpha = pair(b[k], b[bj]) / hb;
            Rational beta = pair(b[k], b[bi]) / hb;
            for (std::size_t j = 0; j < n; ++j) b[k][j] -= alpha * b[bi][j] + beta * b[bj][j];
        }
    }
    std::vector<LatticeVector> out;
    for (auto& v : positives) {
        Integer den = 1;
        for (auto& x : v) {
            x.canonicalize();
            mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
        }
        LatticeVector iv(n);
        for (std::size_t j = 0; j < n; ++j) {
            Rational t = v[j] * den;
            t.canonicalize();
            iv[j] = t.get_num();
        }
        out.push_back(std::move(iv));
    }
    return out;
}

// Searches basis vectors, then e_i +- e_j, for a primitive isotropic vector.
std::optional<LatticeVector> short_isotropic(const QuadLattice& L) {
    const std::size_t n = L.rank();
    const auto& G = L.gram();
    for (std::size_t i = 0; i < n; ++i)
        if (G(i, i) == 0) return unit_vector(n, i);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (int s : {1, -1}) {
                if (G(i, i) + G(j, j) + 2 * s * G(i, j) == 0) {
                    LatticeVector v = unit_vector(n, i);
                    v[j] = s;
                    return v;
                }
            }
    return std::nullopt;
}

LatticeVector to_ambient(const Sublattice& S, const LatticeVector& coords) {
    LatticeVector v(S.ambient_dim());
    for (std::size_t i = 0; i < S.rank(); ++i) v += coords[i] * S.basis()[i];
    return v;
}

}  // namespace

// ---------------------------------------------------------------------------

Isometry::Isometry(LatticePtr lattice, IntMatrix matrix) : lattice_(std::move(lattice)), matrix_(std::move(matrix)) {
    if (!lattice_) throw InvalidLattice("isometry without a lattice");
    if (matrix_.rows() != lattice_->rank() || matrix_.cols() != lattice_->rank())
        throw DimensionMismatch("isometry matrix has the wrong shape");
    if (!preserves_gram(*lattice_, matrix_)) throw NotIsometry("matrix does not preserve the Gram form");
}

Isometry::Isometry(LatticePtr lattice, IntMatrix matrix, Unchecked)
    : lattice_(std::move(lattice)), matrix_(std::move(matrix)) {}

Isometry Isometry::identity(LatticePtr lattice) {
    const std::size_t n = lattice->rank();
    return Isometry(std::move(lattice), IntMatrix::identity(n), Unchecked{});
}

Integer Isometry::determinant() const { return orbitlab::determinant(matrix_); }

bool Isometry::is_identity() const { return matrix_ == IntMatrix::identity(matrix_.rows()); }

bool preserves_gram(const QuadLattice& L, const IntMatrix& m) {
    if (m.rows() != L.rank() || m.cols() != L.rank()) return false;
    return m.transpose() * L.gram() * m == L.gram();
}

Isometry compose(const Isometry& g, const Isometry& h) {
    if (!same_lattice(g.lattice_, h.lattice_)) throw LatticeMismatch("compose: isometries act on different lattices");
    return Isometry(g.lattice_, g.matrix_ * h.matrix_, Isometry::Unchecked{});
}

Isometry invert(const Isometry& g) {
    // g^{-1} = G^{-1} g^T G
    const QuadLattice& L = *g.lattice_;
    RatMatrix Ginv = inverse_over_q(to_rational(L.gram()));
    IntMatrix right = g.matrix_.transpose() * L.gram();
    const std::size_t n = L.rank();
    IntMatrix out(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Rational s = 0;
            for (std::size_t k = 0; k < n; ++k) s += Ginv[i][k] * right(k, j);
            s.canonicalize();
            if (s.get_den() != 1) throw NotIsometry("invert: inverse is not integral");
            out(i, j) = s.get_num();
        }
    return Isometry(g.lattice_, std::move(out), Isometry::Unchecked{});
}

LatticeVector apply(const Isometry& g, const LatticeVector& v) {
    check_dim(*g.lattice(), v, "apply");
    return g.matrix() * v;
}

bool is_in_so_plus(const QuadLattice& L, const IntMatrix& m) {
    if (determinant(m) != 1) throw NegativeDeterminant("is_in_so_plus: determinant must be +1");
    auto P = positive_subspace_basis(L);
    if (P.empty()) return true;
    IntMatrix Pm = IntMatrix::from_columns(P, L.rank());
    // pairings (p_i, g p_j); positive det <=> orientation preserved
    IntMatrix Q = Pm.transpose() * L.gram() * m * Pm;
    return determinant(Q) > 0;
}

bool is_in_so_plus(const Isometry& g) { return is_in_so_plus(*g.lattice(), g.matrix()); }

Isometry eichler_transvection(const LatticePtr& L, const LatticeVector& e, const LatticeVector& a) {
    check_dim(*L, e, "eichler_transvection");
    check_dim(*L, a, "eichler_transvection");
    if (e.is_zero()) throw ZeroVector("eichler_transvection: e must be nonzero");
    if (norm(*L, e) != 0) throw NotIsotropic("eichler_transvection: e is not isotropic");
    if (inner(*L, e, a) != 0) throw NotOrthogonal("eichler_transvection: a is not orthogonal to e");
    if (!is_even(*L)) throw NotEvenUnimodular("eichler_transvection: lattice must be even");
    IntMatrix N = IntMatrix::identity(L->rank());
    transvect_left(*L, N, e, a);
    return Isometry(L, std::move(N), Isometry::Unchecked{});
}

// ---------------------------------------------------------------------------

HyperbolicFrame find_hyperbolic_frame(const QuadLattice& L) {
    if (!is_even(L) || !is_unimodular(L)) throw NotEvenUnimodular("hyperbolic frame: lattice must be even unimodular");
    auto e = short_isotropic(L);
    if (!e) throw NoHyperbolicSplit("no isotropic vector found for a first hyperbolic plane");
    auto s1 = split_hyperbolic(L, *e);
    if (s1.lprime.rank() < 2) throw NoHyperbolicSplit("complement of the first hyperbolic plane is too small");
    QuadLattice L1 = induced_lattice(L, s1.lprime);
    auto e1 = short_isotropic(L1);
    if (!e1) throw NoHyperbolicSplit("no isotropic vector found for a second hyperbolic plane");
    auto s2 = split_hyperbolic(L1, *e1);

    HyperbolicFrame fr;
    fr.e = *e;
    fr.f = s1.z;
    fr.e2 = to_ambient(s1.lprime, *e1);
    fr.f2 = to_ambient(s1.lprime, s2.z);
    for (const auto& w : s2.lprime.basis()) fr.rest.push_back(to_ambient(s1.lprime, w));
    std::vector<LatticeVector> cols{fr.e, fr.f, fr.e2, fr.f2};
    cols.insert(cols.end(), fr.rest.begin(), fr.rest.end());
    fr.basis = IntMatrix::from_columns(cols, L.rank());
    fr.basis_inverse = inverse_unimodular(fr.basis);
    return fr;
}

namespace {

// Accumulates transvections g = E_k ... E_1 together with g^{-1}, tracking g(u).
class TransvectionWord {
public:
    TransvectionWord(const QuadLattice& L, LatticeVector start)
        : L_(L), g_(IntMatrix::identity(L.rank())), ginv_(IntMatrix::identity(L.rank())), cur_(std::move(start)) {}

    void push(const LatticeVector& e, const LatticeVector& a) {
        transvect_left(L_, g_, e, a);
        // g^{-1} <- g^{-1} E^{-1}, and E_{e,a}^{-1} = E_{e,-a}; transpose trick:
        // (g^{-1} E')^T = E'^T g^{-T}, so update via the transpose is avoided by
        // right-multiplying directly.
        transvect_right(ginv_, e, -a);
        cur_ = transvect_vector(L_, cur_, e, a);
    }

    const LatticeVector& current() const { return cur_; }
    IntMatrix& matrix() { return g_; }
    IntMatrix& inverse() { return ginv_; }

private:
    // N <- N E_{e,a}: N + (N a)(Ge)^T - (N e)(Ga)^T - half (N e)(Ge)^T
    void transvect_right(IntMatrix& N, const LatticeVector& e, const LatticeVector& a) {
        const Integer half = norm(L_, a) / 2;
        LatticeVector Na = N * a;
        LatticeVector Ne = N * e;
        LatticeVector ge = pairing_row(L_, e);
        LatticeVector ga = pairing_row(L_, a);
        for (std::size_t i = 0; i < N.rows(); ++i)
            for (std::size_t j = 0; j < N.cols(); ++j) {
                if (ge[j] == 0 && ga[j] == 0) continue;
                N(i, j) += Na[i] * ge[j] - Ne[i] * ga[j] - half * Ne[i] * ge[j];
            }
    }

    const QuadLattice& L_;
    IntMatrix g_;
    IntMatrix ginv_;
    LatticeVector cur_;
};

// Drives a primitive isotropic u to the frame vector e using transvections.
//
// In frame coordinates u = a e + b f + c e2 + d f2 + w, the 2x2 matrix
// X = [[a, c], [-d, b]] has det X = ab + cd, and the four transvections
// E_{e,t e2}, E_{f2,t f}, E_{f,t e2}, E_{f2,t e} act on X as elementary
// row/column operations. Smith reduction of X, a pairing move that folds the
// content of w into the hyperbolic part, and a final E_{f,-w} bring u to e.
void reduce_to_frame_vector(const QuadLattice& L, const HyperbolicFrame& fr, TransvectionWord& word) {
    const std::size_t n = L.rank();
    auto coords = [&] { return fr.basis_inverse * word.current(); };
    auto scaled = [](const Integer& t, const LatticeVector& v) { return t * v; };

    auto row1_plus_row2 = [&](const Integer& t) { word.push(fr.e, scaled(t, fr.e2)); };
    auto row2_plus_row1 = [&](const Integer& t) { word.push(fr.f2, scaled(t, fr.f)); };
    auto col2_plus_col1 = [&](const Integer& t) { word.push(fr.f, scaled(t, fr.e2)); };
    auto col1_plus_col2 = [&](const Integer& t) { word.push(fr.f2, scaled(t, fr.e)); };
    // (r1, r2) -> (r2, -r1) and (c1, c2) -> (-c2, c1)
    auto swap_rows = [&] {
        row1_plus_row2(1);
        row2_plus_row1(-1);
        row1_plus_row2(1);
    };
    auto swap_cols = [&] {
        col2_plus_col1(1);
        col1_plus_col2(-1);
        col2_plus_col1(1);
    };

    auto smith_2x2 = [&] {
        // |x11| strictly decreases at every swap, so this terminates.
        for (;;) {
            LatticeVector c = coords();
            Integer x11 = c[0], x12 = c[2], x21 = -c[3], x22 = c[1];
            if (x11 == 0) {
                if (x21 != 0) swap_rows();
                else if (x12 != 0) swap_cols();
                else if (x22 != 0) {
                    col1_plus_col2(1);
                    swap_rows();
                } else return;
                continue;
            }
            if (x21 != 0) {
                Integer q;
                mpz_tdiv_q(q.get_mpz_t(), x21.get_mpz_t(), x11.get_mpz_t());
                if (q != 0) row2_plus_row1(-q);
                if (x21 - q * x11 != 0) swap_rows();
                continue;
            }
            if (x12 != 0) {
                Integer q;
                mpz_tdiv_q(q.get_mpz_t(), x12.get_mpz_t(), x11.get_mpz_t());
                if (q != 0) col2_plus_col1(-q);
                if (x12 - q * x11 != 0) swap_cols();
                continue;
            }
            if (x22 % x11 != 0) {
                row1_plus_row2(1);
                continue;
            }
            if (x11 < 0) {
                swap_rows();
                swap_rows();
            }
            return;
        }
    };

    smith_2x2();

    LatticeVector c = coords();
    LatticeVector w(n);
    for (std::size_t i = 4; i < n; ++i) w += c[i] * fr.rest[i - 4];
    if (!w.is_zero()) {
        // s in the complement with (w, s) = content(w): exists because the
        // complement is unimodular.
        std::vector<Integer> pairings;
        for (const auto& r : fr.rest) pairings.push_back(inner(L, w, r));
        Integer h;
        auto comb = gcd_combination(pairings, &h);
        LatticeVector s(n);
        for (std::size_t i = 0; i < comb.size(); ++i) s += comb[i] * fr.rest[i];
        // d == 0 here, so E_{e2, -s} adds h * e2
        word.push(fr.e2, -s);
        smith_2x2();
    }

    c = coords();
    if (c[0] != 1 || c[2] != 0 || c[3] != 0) throw std::logic_error("isotropic reduction failed to reach a unit coefficient");
    w = LatticeVector(n);
    for (std::size_t i = 4; i < n; ++i) w += c[i] * fr.rest[i - 4];
    if (!w.is_zero()) word.push(fr.f, -w);
    if (!(word.current() == fr.e)) throw std::logic_error("isotropic reduction did not reach the frame vector");
}

void check_primitive_isotropic(const QuadLattice& L, const LatticeVector& v, const char* what) {
    check_dim(L, v, what);
    if (v.is_zero()) throw ZeroVector(std::string(what) + ": zero vector");
    if (norm(L, v) != 0) throw NotIsotropic(std::string(what) + ": vector is not isotropic");
    if (v.content() != 1) throw NotPrimitive(std::string(what) + ": vector is not primitive");
}

}  // namespace

Isometry map_isotropic(const LatticePtr& L, const LatticeVector& u, const LatticeVector& v) {
    check_primitive_isotropic(*L, u, "map_isotropic");
    check_primitive_isotropic(*L, v, "map_isotropic");
    if (u == v) return Isometry::identity(L);
    HyperbolicFrame fr = find_hyperbolic_frame(*L);

    TransvectionWord wu(*L, u);
    reduce_to_frame_vector(*L, fr, wu);
    TransvectionWord wv(*L, v);
    reduce_to_frame_vector(*L, fr, wv);

    Isometry g(L, wv.inverse() * wu.matrix(), Isometry::Unchecked{});
    // Products of transvections are unipotent-generated, hence in SO+.
    if (!is_in_so_plus(g)) throw NoOrientationFix("map_isotropic: result left the identity component");
    if (!(apply(g, u) == v)) throw std::logic_error("map_isotropic: composite does not map u to v");
    return g;
}

// ---------------------------------------------------------------------------

AdaptedBasis adapted_integral_basis(const QuadLattice& L, const LatticeVector& u) {
    auto split = split_hyperbolic(L, u);
    AdaptedBasis B;
    B.vectors = split.lprime.basis();
    B.vectors.push_back(u);
    return B;
}

RatMatrix restricted_matrix(const Isometry& g, const AdaptedBasis& B) {
    const std::size_t n = g.lattice()->rank();
    const std::size_t k = B.vectors.size();
    // Solve B R = g B column by column via elimination on [B | gB].
    RatMatrix aug(n, std::vector<Rational>(2 * k));
    for (std::size_t j = 0; j < k; ++j) {
        check_dim(*g.lattice(), B.vectors[j], "restricted_matrix");
        LatticeVector img = apply(g, B.vectors[j]);
        for (std::size_t i = 0; i < n; ++i) {
            aug[i][j] = B.vectors[j][i];
            aug[i][k + j] = img[i];
        }
    }
    std::size_t row = 0;
    std::vector<std::size_t> pivots;
    for (std::size_t c = 0; c < k; ++c) {
        std::size_t p = row;
        while (p < n && aug[p][c] == 0) ++p;
        if (p == n) throw DependentBasis("adapted basis is linearly dependent");
        std::swap(aug[p], aug[row]);
        Rational piv = aug[row][c];
        for (auto& x : aug[row]) x /= piv;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == row || aug[i][c] == 0) continue;
            Rational f = aug[i][c];
            for (std::size_t j = 0; j < 2 * k; ++j) aug[i][j] -= f * aug[row][j];
        }
        ++row;
    }
    for (std::size_t i = k; i < n; ++i)
        for (std::size_t j = k; j < 2 * k; ++j)
            if (aug[i][j] != 0) throw NotInPerp("isometry does not preserve the span of the adapted basis");
    RatMatrix R(k, std::vector<Rational>(k));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) R[i][j] = aug[i][k + j];
    return R;
}

bool is_in_Gu(const Isometry& g, const LatticeVector& u) {
    check_dim(*g.lattice(), u, "is_in_Gu");
    if (!(apply(g, u) == u)) return false;
    if (g.determinant() != 1) return false;
    return is_in_so_plus(g);
}

namespace {

bool column_in_span_of(const std::vector<Rational>& col, const LatticeVector& u) {
    // col == lambda * u for some rational lambda
    std::optional<Rational> lambda;
    for (std::size_t i = 0; i < col.size(); ++i) {
        if (u[i] == 0) {
            if (col[i] != 0) return false;
            continue;
        }
        Rational l = col[i] / Rational(u[i]);
        if (!lambda) lambda = l;
        else if (*lambda != l) return false;
    }
    return true;
}

bool difference_in_span(const SymbolicRealVector& a, const SymbolicRealVector& b, const LatticeVector& u) {
    for (std::size_t j = 0; j < a.symbol_count(); ++j) {
        auto ca = a.component(j);
        auto cb = b.component(j);
        for (std::size_t i = 0; i < ca.size(); ++i) ca[i] -= cb[i];
        if (!column_in_span_of(ca, u)) return false;
    }
    return true;
}

void check_symbolic(const Isometry& g, const SymbolicRealVector& y) {
    if (y.dim() != g.lattice()->rank()) throw DimensionMismatch("symbolic vector length does not match lattice rank");
}

}  // namespace

bool is_in_Hy(const Isometry& g, const LatticeVector& u, const SymbolicRealVector& y) {
    check_symbolic(g, y);
    if (!is_in_Gu(g, u)) return false;
    return y.transformed(g.matrix()) == y;
}

bool is_in_Ky(const Isometry& g, const LatticeVector& u, const SymbolicRealVector& y) {
    check_symbolic(g, y);
    if (!is_in_Gu(g, u)) return false;
    if (!difference_in_span(y.transformed(g.matrix()), y, u)) return false;
    // g preserves y^perp within u^perp  <=>  g^{-1} y in +-y + R u
    SymbolicRealVector back = y.transformed(invert(g).matrix());
    return difference_in_span(back, y, u) || difference_in_span(back, y.scaled(Rational(-1)), u);
}

bool is_in_unipotent_radical(const Isometry& g, const AdaptedBasis& B) {
    if (B.vectors.empty()) throw DimensionMismatch("empty adapted basis");
    if (!(apply(g, B.u()) == B.u())) return false;
    RatMatrix R;
    try {
        R = restricted_matrix(g, B);
    } catch (const NotInPerp&) {
        return false;
    }
    const std::size_t k = R.size();
    for (std::size_t i = 0; i + 1 < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
            if (R[i][j] != (i == j ? 1 : 0)) return false;
    return R[k - 1][k - 1] == 1;
}

// ---------------------------------------------------------------------------

std::vector<Isometry> gu_lattice_generators(const LatticePtr& L, const LatticeVector& u) {
    check_primitive_isotropic(*L, u, "gu_lattice_generators");
    std::vector<Isometry> gens;
    auto add = [&](Isometry g) {
        if (g.is_identity()) return;
        for (const auto& h : gens)
            if (h == g) return;
        gens.push_back(std::move(g));
    };

    // (i) translations along u: E_{u,a} for a in a basis of u^perp
    Sublattice uperp = orthogonal_sublattice(*L, {u});
    for (const auto& a : uperp.basis()) add(eichler_transvection(L, u, a));

    // (ii) transvections internal to the complement of the split plane at u
    auto split = split_hyperbolic(*L, u);
    if (split.lprime.rank() >= 2) {
        QuadLattice L1 = induced_lattice(*L, split.lprime);
        if (auto e1 = short_isotropic(L1)) {
            std::vector<LatticeVector> isotropics{*e1};
            if (is_even(L1) && is_unimodular(L1)) isotropics.push_back(split_hyperbolic(L1, *e1).z);
            for (const auto& iso : isotropics) {
                LatticeVector e = to_ambient(split.lprime, iso);
                Sublattice eperp = orthogonal_sublattice(L1, {iso});
                for (const auto& a : eperp.basis()) add(eichler_transvection(L, e, to_ambient(split.lprime, a)));
            }
        }
    }
    return gens;
}

}  // namespace orbitlab
