// Copyright (C) 2026 orbitlab authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

#include "orbitlab/lattice.hpp"
#include "orbitlab/symbolic.hpp"

namespace orbitlab {

/// Integral isometry of a quadratic lattice, acting on column coordinates:
/// apply(g, v) = matrix * v, and matrix^T * gram * matrix == gram.
class Isometry {
public:
    /// Validates the Gram identity; throws NotIsometry otherwise.
    Isometry(LatticePtr lattice, IntMatrix matrix);

    static Isometry identity(LatticePtr lattice);

    const IntMatrix& matrix() const noexcept { return matrix_; }
    const LatticePtr& lattice() const noexcept { return lattice_; }
    Integer determinant() const;
    bool is_identity() const;

    friend bool operator==(const Isometry& a, const Isometry& b) { return a.matrix_ == b.matrix_; }

private:
    struct Unchecked {};
    Isometry(LatticePtr lattice, IntMatrix matrix, Unchecked);

    LatticePtr lattice_;
    IntMatrix matrix_;

    friend Isometry compose(const Isometry& g, const Isometry& h);
    friend Isometry invert(const Isometry& g);
    friend Isometry eichler_transvection(const LatticePtr& L, const LatticeVector& e, const LatticeVector& a);
    friend Isometry map_isotropic(const LatticePtr& L, const LatticeVector& u, const LatticeVector& v);
};

/// g after h.
Isometry compose(const Isometry& g, const Isometry& h);
Isometry invert(const Isometry& g);
LatticeVector apply(const Isometry& g, const LatticeVector& v);

/// True iff matrix^T * gram * matrix == gram.
bool preserves_gram(const QuadLattice& L, const IntMatrix& m);

/// Membership of a det +1 isometry in the identity component SO+(V):
/// whether it preserves the orientation of a maximal positive definite
/// subspace. Throws NegativeDeterminant for det -1 input.
bool is_in_so_plus(const Isometry& g);
bool is_in_so_plus(const QuadLattice& L, const IntMatrix& m);

/// x -> x + (x,e) a - (x,a) e - (a,a)/2 (x,e) e, for isotropic e and a orthogonal to e.
Isometry eichler_transvection(const LatticePtr& L, const LatticeVector& e, const LatticeVector& a);

/// Element of SO+(L) mapping one primitive isotropic vector to another.
/// Requires two orthogonal hyperbolic planes to be findable in L.
Isometry map_isotropic(const LatticePtr& L, const LatticeVector& u, const LatticeVector& v);

/// Ordered basis {w_1, ..., w_{k-1}, u} of u^perp with u last.
struct AdaptedBasis {
    std::vector<LatticeVector> vectors;
    const LatticeVector& u() const { return vectors.back(); }
};

/// Integral adapted basis: Lprime basis from split_hyperbolic followed by u.
AdaptedBasis adapted_integral_basis(const QuadLattice& L, const LatticeVector& u);

/// Matrix of g restricted to span(B) in the basis B; throws NotInPerp if g
/// does not preserve that span.
RatMatrix restricted_matrix(const Isometry& g, const AdaptedBasis& B);

bool is_in_Gu(const Isometry& g, const LatticeVector& u);
bool is_in_Hy(const Isometry& g, const LatticeVector& u, const SymbolicRealVector& y);
bool is_in_Ky(const Isometry& g, const LatticeVector& u, const SymbolicRealVector& y);
bool is_in_unipotent_radical(const Isometry& g, const AdaptedBasis& B);

/// Finite subset of G_u intersected with SO+(L): transvections E_{u,a} over a
/// basis of u^perp, plus transvections internal to the split complement.
/// Non-exhaustive; the subgroup it generates may be proper.
std::vector<Isometry> gu_lattice_generators(const LatticePtr& L, const LatticeVector& u);

/// Two orthogonal hyperbolic planes (e,f), (e2,f2) and the complement,
/// assembled into a unimodular change of basis.
struct HyperbolicFrame {
    LatticeVector e, f, e2, f2;
    std::vector<LatticeVector> rest;
    IntMatrix basis;          ///< columns e, f, e2, f2, rest...
    IntMatrix basis_inverse;
};

/// Throws NoHyperbolicSplit when no two hyperbolic planes are found by the
/// short-vector search (basis vectors and e_i +- e_j).
HyperbolicFrame find_hyperbolic_frame(const QuadLattice& L);

}  // namespace orbitlab
