// Copyright (C) 2026 orbitlab authors
// SPDX-License-Identifier: Apache-2.0

#include "orbitlab/lll.hpp"

#include <cmath>

namespace orbitlab {

namespace {

struct GramSchmidt {
    LdMatrix star;  // orthogonalized rows
    LdMatrix mu;
    LdVector norms;
};

GramSchmidt gram_schmidt(const LdMatrix& b) {
    const auto k = b.rows();
    GramSchmidt gs{b, LdMatrix::Zero(k, k), LdVector::Zero(k)};
    for (Eigen::Index i = 0; i < k; ++i) {
        for (Eigen::Index j = 0; j < i; ++j) {
            gs.mu(i, j) = gs.norms(j) > 0 ? b.row(i).dot(gs.star.row(j)) / gs.norms(j) : 0.0L;
            gs.star.row(i) -= gs.mu(i, j) * gs.star.row(j);
        }
        gs.norms(i) = gs.star.row(i).squaredNorm();
    }
    return gs;
}

}  // namespace

LllResult lll_reduce(const LdMatrix& rows, long double delta) {
    const auto k = rows.rows();
    LllResult r{rows, LdMatrix::Identity(k, k)};
    if (k < 2) return r;
    GramSchmidt gs = gram_schmidt(r.basis);
    Eigen::Index i = 1;
    int guard = 0;
    while (i < k && guard++ < 100000) {
        for (Eigen::Index j = i - 1; j >= 0; --j) {
            long double q = std::round(gs.mu(i, j));
            if (q == 0) continue;
            r.basis.row(i) -= q * r.basis.row(j);
            r.transform.row(i) -= q * r.transform.row(j);
            for (Eigen::Index l = 0; l <= j; ++l) gs.mu(i, l) -= q * (l == j ? 1.0L : gs.mu(j, l));
        }
        if (gs.norms(i) >= (delta - gs.mu(i, i - 1) * gs.mu(i, i - 1)) * gs.norms(i - 1)) {
            ++i;
        } else {
            r.basis.row(i).swap(r.basis.row(i - 1));
            r.transform.row(i).swap(r.transform.row(i - 1));
            gs = gram_schmidt(r.basis);
            i = std::max<Eigen::Index>(i - 1, 1);
        }
    }
    return r;
}

LdVector babai_nearest_plane(const LdMatrix& basis, const LdVector& target) {
    const auto k = basis.rows();
    GramSchmidt gs = gram_schmidt(basis);
    LdVector residual = target;
    LdVector coeffs = LdVector::Zero(k);
    for (Eigen::Index i = k - 1; i >= 0; --i) {
        if (gs.norms(i) == 0) continue;
        long double c = std::round(residual.dot(gs.star.row(i).transpose()) / gs.norms(i));
        coeffs(i) = c;
        residual -= c * basis.row(i).transpose();
    }
    return coeffs;
}

}  // namespace orbitlab
