// Copyright (C) 2026 orbitlab authors
// SPDX-License-Identifier: Apache-2.0

#include "orbitlab/torus_forms.hpp"

#include <cmath>
#include <numeric>

#include "orbitlab/lll.hpp"

namespace orbitlab {

namespace {

void check_skew(const Eigen::MatrixXd& omega) {
    if (omega.rows() != omega.cols() || omega.rows() % 2 != 0)
        throw InvalidForm("form must be a square matrix of even size");
    if ((omega + omega.transpose()).cwiseAbs().maxCoeff() > 0.0) throw InvalidForm("form is not skew-symmetric");
}

Eigen::MatrixXd to_double(const IntMatrix& m) {
    Eigen::MatrixXd out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j).get_d();
    return out;
}

double pf_expand(const Eigen::MatrixXd& a) {
    const auto n = a.rows();
    if (n == 0) return 1.0;
    if (n == 2) return a(0, 1);
    double s = 0.0;
    for (Eigen::Index j = 1; j < n; ++j) {
        if (a(0, j) == 0.0) continue;
        std::vector<Eigen::Index> keep;
        for (Eigen::Index k = 1; k < n; ++k)
            if (k != j) keep.push_back(k);
        Eigen::MatrixXd minor(n - 2, n - 2);
        for (std::size_t r = 0; r < keep.size(); ++r)
            for (std::size_t c = 0; c < keep.size(); ++c) minor(r, c) = a(keep[r], keep[c]);
        const double sign = (j % 2 == 1) ? 1.0 : -1.0;
        s += sign * a(0, j) * pf_expand(minor);
    }
    return s;
}

// Skew LTL^T reduction with pivoting (Parlett-Reid).
double pf_parlett_reid(Eigen::MatrixXd a) {
    const auto n = a.rows();
    double pf = 1.0;
    for (Eigen::Index k = 0; k + 1 < n; k += 2) {
        Eigen::Index kp;
        a.col(k).tail(n - k - 1).cwiseAbs().maxCoeff(&kp);
        kp += k + 1;
        if (kp != k + 1) {
            a.row(k + 1).swap(a.row(kp));
            a.col(k + 1).swap(a.col(kp));
            pf = -pf;
        }
        if (a(k + 1, k) == 0.0) return 0.0;
        pf *= a(k, k + 1);
        if (k + 2 < n) {
            const auto m = n - k - 2;
            Eigen::VectorXd tau = a.row(k).tail(m).transpose() / a(k, k + 1);
            Eigen::VectorXd v = a.col(k + 1).tail(m);
            a.bottomRightCorner(m, m) += tau * v.transpose() - v * tau.transpose();
        }
    }
    return pf;
}

double orientation_sign(Eigen::Index n) {
    // (-1)^{n(n+1)/2}
    return ((n * (n + 1) / 2) % 2 == 0) ? 1.0 : -1.0;
}

Eigen::MatrixXd stacked_basis(const Sublattice& l, const Sublattice& lprime, std::size_t dim) {
    if (l.ambient_dim() != dim || lprime.ambient_dim() != dim || l.rank() * 2 != dim || lprime.rank() * 2 != dim)
        throw DimensionMismatch("l and l' must both have rank n in R^{2n}");
    std::vector<LatticeVector> cols = l.basis();
    cols.insert(cols.end(), lprime.basis().begin(), lprime.basis().end());
    IntMatrix P = IntMatrix::from_columns(cols, dim);
    Integer det = determinant(P);
    if (det != 1 && det != -1) throw NotComplementary("l and l' do not span the integer lattice (index |det| != 1)");
    return to_double(P);
}

}  // namespace

Eigen::MatrixXd darboux(std::size_t n) {
    const auto m = static_cast<Eigen::Index>(n);
    Eigen::MatrixXd w = Eigen::MatrixXd::Zero(2 * m, 2 * m);
    w.topRightCorner(m, m) = -Eigen::MatrixXd::Identity(m, m);
    w.bottomLeftCorner(m, m) = Eigen::MatrixXd::Identity(m, m);
    return w;
}

double pfaffian_expansion(const Eigen::MatrixXd& omega) {
    check_skew(omega);
    return pf_expand(omega);
}

double pfaffian_standard(const Eigen::MatrixXd& omega) {
    check_skew(omega);
    return omega.rows() <= 8 ? pf_expand(omega) : pf_parlett_reid(omega);
}

double pfaffian(const Eigen::MatrixXd& omega) { return orientation_sign(omega.rows() / 2) * pfaffian_standard(omega); }

Eigen::MatrixXd normalize_volume(const Eigen::MatrixXd& omega) {
    const double pf = pfaffian(omega);
    const auto n = omega.rows() / 2;
    if (pf == 0.0) throw InvalidForm("form is degenerate (Pfaffian 0)");
    if (pf < 0 && n % 2 == 0) throw InvalidForm("negative Pfaffian cannot be rescaled to +1 in even half-dimension");
    const double c = pf > 0 ? std::pow(pf, -1.0 / static_cast<double>(n)) : -std::pow(-pf, -1.0 / static_cast<double>(n));
    return c * omega;
}

bool is_lagrangian_subspace(const Eigen::MatrixXd& omega, const Sublattice& l, double tol) {
    check_skew(omega);
    const auto dim = static_cast<std::size_t>(omega.rows());
    if (l.ambient_dim() != dim || 2 * l.rank() != dim) throw DimensionMismatch("l must have rank n in R^{2n}");
    Eigen::MatrixXd P(dim, l.rank());
    for (std::size_t j = 0; j < l.rank(); ++j)
        for (std::size_t i = 0; i < dim; ++i) P(i, j) = l.basis()[j][i].get_d();
    return (P.transpose() * omega * P).cwiseAbs().maxCoeff() <= tol;
}

void validate(const SplitBlockForm& f) {
    if (f.C.rows() != f.C.cols() || f.D.rows() != f.C.rows() || f.D.cols() != f.C.rows())
        throw DimensionMismatch("C and D must be n x n");
    if (std::abs(f.C.determinant() - 1.0) > 1e-10) throw InvalidForm("det C must be 1 (normalize the volume first)");
    if ((f.D + f.D.transpose()).cwiseAbs().maxCoeff() > 1e-12) throw InvalidForm("D must be skew-symmetric");
}

Eigen::MatrixXd from_blocks(const SplitBlockForm& f) {
    const auto n = f.C.rows();
    Eigen::MatrixXd w = Eigen::MatrixXd::Zero(2 * n, 2 * n);
    w.topRightCorner(n, n) = -f.C.transpose();
    w.bottomLeftCorner(n, n) = f.C;
    w.bottomRightCorner(n, n) = f.D;
    return w;
}

SplitBlockForm to_blocks(const Eigen::MatrixXd& omega, const Sublattice& l, const Sublattice& lprime) {
    check_skew(omega);
    const auto dim = static_cast<std::size_t>(omega.rows());
    const auto n = omega.rows() / 2;
    Eigen::MatrixXd P = stacked_basis(l, lprime, dim);
    Eigen::MatrixXd W = P.transpose() * omega * P;
    const double scale = std::max(1.0, omega.cwiseAbs().maxCoeff());
    if (W.topLeftCorner(n, n).cwiseAbs().maxCoeff() > 1e-12 * scale) throw NotVanishingOnL("form does not vanish on l");
    SplitBlockForm f{W.bottomLeftCorner(n, n), W.bottomRightCorner(n, n)};
    f.D = 0.5 * (f.D - f.D.transpose());
    const double det = f.C.determinant();
    if (det <= 0) throw InvalidForm("form has negative orientation on (l, l')");
    if (std::abs(det - 1.0) > 1e-10) throw InvalidForm("form is not volume-normalized (det C != 1)");
    return f;
}

IntegralShear IntegralShear::translation(IntMatrix B) {
    const std::size_t n = B.rows();
    return IntegralShear{std::move(B), IntMatrix::identity(n)};
}

IntMatrix IntegralShear::assembled() const {
    const std::size_t m = n();
    IntMatrix g(2 * m, 2 * m);
    for (std::size_t i = 0; i < m; ++i) {
        g(i, i) = 1;
        for (std::size_t j = 0; j < m; ++j) {
            g(i, m + j) = B(i, j);
            g(m + i, m + j) = A(i, j);
        }
    }
    return g;
}

IntegralShear compose(const IntegralShear& g, const IntegralShear& h) {
    if (g.n() != h.n()) throw DimensionMismatch("shears of different sizes");
    return IntegralShear{h.B + g.B * h.A, g.A * h.A};
}

SplitBlockForm act(const IntegralShear& g, const SplitBlockForm& f) {
    if (g.n() != f.n() || g.A.rows() != f.n()) throw DimensionMismatch("shear and form sizes differ");
    const Eigen::MatrixXd B = to_double(g.B), A = to_double(g.A);
    const Eigen::MatrixXd AtC = A.transpose() * f.C;
    SplitBlockForm out;
    out.C = AtC;
    // X - X^T with X = A^T C B + (A^T D A)/2 keeps D' exactly skew in floating point.
    const Eigen::MatrixXd X = AtC * B + 0.5 * (A.transpose() * f.D * A);
    out.D = X - X.transpose();
    return out;
}

Eigen::MatrixXd congruence(const IntegralShear& g, const Eigen::MatrixXd& omega) {
    const Eigen::MatrixXd G = to_double(g.assembled());
    return G.transpose() * omega * G;
}

GenericityReport genericity_score(const Eigen::MatrixXd& C, long bound) {
    GenericityReport rep;
    rep.bound = bound;
    if (bound <= 0) return rep;
    if (C.rows() != C.cols()) throw DimensionMismatch("C must be square");
    Eigen::Matrix<long double, Eigen::Dynamic, Eigen::Dynamic> Cl = C.cast<long double>();
    Eigen::FullPivLU<decltype(Cl)> lu(Cl);
    if (!lu.isInvertible()) throw SingularMatrix("C is singular");
    const auto inv = lu.inverse();
    const auto k = inv.size();
    LdVector x(k);
    for (Eigen::Index i = 0; i < inv.rows(); ++i)
        for (Eigen::Index j = 0; j < inv.cols(); ++j) x(i * inv.cols() + j) = inv(i, j);
    const long double scale = std::max(1.0L, x.cwiseAbs().maxCoeff());
    const long double weight = 1e13L / scale;
    LdMatrix rows = LdMatrix::Zero(k, k + 1);
    for (Eigen::Index i = 0; i < k; ++i) {
        rows(i, i) = 1;
        rows(i, k) = weight * x(i);
    }
    rep.searched = true;
    LllResult red = lll_reduce(rows);
    const long double tol = 1e-13L * scale;
    for (Eigen::Index r = 0; r < k; ++r) {
        const auto m = red.transform.row(r);
        const long double height = m.cwiseAbs().maxCoeff();
        if (height == 0 || height > bound) continue;
        const long double res = std::fabs(m.dot(x.transpose()));
        if (res > tol) continue;
        if (rep.relation_found && res >= rep.residual) continue;
        rep.relation_found = true;
        rep.residual = static_cast<double>(res);
        rep.relation.assign(static_cast<std::size_t>(k), 0);
        for (Eigen::Index i = 0; i < k; ++i) rep.relation[static_cast<std::size_t>(i)] = std::lround(m(i));
    }
    return rep;
}

double split_orbit_error(const Eigen::MatrixXd& Cprime, const IntMatrix& B, const Eigen::MatrixXd& D) {
    const Eigen::MatrixXd CB = Cprime * to_double(B);
    return (CB - CB.transpose() - D).cwiseAbs().maxCoeff();
}

// ---------------------------------------------------------------------------

namespace {

// index pairs for e12, e13, e14, e23, e24, e34 (0-based)
constexpr int kPairs[6][2] = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};

int perm_sign4(int a, int b, int c, int d) {
    int p[4] = {a, b, c, d};
    int inv = 0;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (p[i] > p[j]) ++inv;
    return inv % 2 == 0 ? 1 : -1;
}

}  // namespace

QuadLattice wedge_gram() {
    IntMatrix G(6, 6);
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) {
            const int a = kPairs[i][0], b = kPairs[i][1], c = kPairs[j][0], d = kPairs[j][1];
            if (a == c || a == d || b == c || b == d) continue;
            G(i, j) = perm_sign4(a, b, c, d);
        }
    return QuadLattice(std::move(G));
}

LatticePtr wedge_lattice() {
    static const LatticePtr L = std::make_shared<const QuadLattice>(wedge_gram());
    return L;
}

Isometry wedge_square_action(const IntMatrix& g) {
    if (g.rows() != 4 || g.cols() != 4) throw DimensionMismatch("wedge square action needs a 4x4 matrix");
    if (determinant(g) != 1) throw NegativeDeterminant("wedge square action needs det g = 1");
    IntMatrix W(6, 6);
    for (int r = 0; r < 6; ++r)
        for (int c = 0; c < 6; ++c) {
            const int k = kPairs[r][0], l = kPairs[r][1], i = kPairs[c][0], j = kPairs[c][1];
            W(r, c) = g(k, i) * g(l, j) - g(l, i) * g(k, j);
        }
    return Isometry(wedge_lattice(), std::move(W));
}

IntMatrix wedge_hyperbolic_basis() {
    // e12, e34, e13, -e24, e14, e23
    IntMatrix P(6, 6);
    P(0, 0) = 1;
    P(5, 1) = 1;
    P(1, 2) = 1;
    P(4, 3) = -1;
    P(2, 4) = 1;
    P(3, 5) = 1;
    return P;
}

}  // namespace orbitlab
