// Copyright (C) 2026 orbitlab authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <memory>
#include <vector>

#include "orbitlab/integer_matrix.hpp"

namespace orbitlab {

/// Inertia (p, q) of a nondegenerate symmetric form.
struct Signature {
    std::size_t p = 0;
    std::size_t q = 0;
    friend bool operator==(const Signature&, const Signature&) = default;
};

/// Free Z-module of finite rank with an integral symmetric bilinear form,
/// given by its Gram matrix in a fixed basis.
///
/// Construction validates symmetry and nondegeneracy, so every QuadLattice
/// in circulation has a well-defined signature. The rank-0 lattice is
/// allowed; it shows up as the complement of a split hyperbolic plane.
class QuadLattice {
public:
    explicit QuadLattice(IntMatrix gram);

    std::size_t rank() const noexcept { return gram_.rows(); }
    const IntMatrix& gram() const noexcept { return gram_; }
    const Integer& determinant() const noexcept { return det_; }

    friend bool operator==(const QuadLattice& a, const QuadLattice& b) { return a.gram_ == b.gram_; }

private:
    IntMatrix gram_;
    Integer det_;
};

using LatticePtr = std::shared_ptr<const QuadLattice>;

/// Sublattice of Z^n (ambient coordinates) given by a Q-independent basis.
class Sublattice {
public:
    Sublattice() = default;
    /// Throws DependentBasis if the rows are not linearly independent over Q.
    Sublattice(std::size_t ambient_dim, std::vector<LatticeVector> basis);

    static Sublattice full(std::size_t ambient_dim);

    std::size_t ambient_dim() const noexcept { return ambient_dim_; }
    std::size_t rank() const noexcept { return basis_.size(); }
    const std::vector<LatticeVector>& basis() const noexcept { return basis_; }
    /// Basis vectors as the rows of a rank x ambient_dim matrix.
    IntMatrix basis_matrix() const;

    /// True iff the quotient Z^n / S is torsion free (all elementary divisors 1).
    bool is_saturated() const;
    /// Hermite form of the basis; equal for equal sublattices.
    IntMatrix hermite() const;
    bool same_lattice(const Sublattice& other) const;
    bool contains(const LatticeVector& v) const;

private:
    std::size_t ambient_dim_ = 0;
    std::vector<LatticeVector> basis_;
};

// -- pairing and invariants -------------------------------------------------

Integer inner(const QuadLattice& L, const LatticeVector& v, const LatticeVector& w);
Integer norm(const QuadLattice& L, const LatticeVector& v);
/// Vector of pairings (v, e_i) with the basis vectors, i.e. gram * v.
LatticeVector pairing_row(const QuadLattice& L, const LatticeVector& v);

Signature signature(const QuadLattice& L);
bool is_even(const QuadLattice& L);
bool is_unimodular(const QuadLattice& L);
bool is_primitive(const QuadLattice& L, const LatticeVector& v);
bool is_isotropic(const QuadLattice& L, const LatticeVector& v);

/// Positive generator of the ideal {(u, x) : x in L}.
Integer divisor(const QuadLattice& L, const LatticeVector& u);

// -- sublattices --------------------------------------------------------------

/// Integral basis (Hermite form) of {v in L : (v, s) = 0 for all s in S}.
Sublattice orthogonal_sublattice(const QuadLattice& L, const std::vector<LatticeVector>& S);

/// Smallest saturated sublattice containing S, i.e. (S tensor Q) intersected with Z^n.
Sublattice saturation(const QuadLattice& L, const Sublattice& S);

/// Unimodular m x m matrix whose first rank(S) columns are S's basis vectors.
/// Throws NotSaturated if Z^m / S has torsion.
IntMatrix extend_to_unimodular_basis(const Sublattice& S);

/// Restriction of the form to S, as a lattice in S's basis.
QuadLattice induced_lattice(const QuadLattice& L, const Sublattice& S);

QuadLattice direct_sum(const QuadLattice& a, const QuadLattice& b);

// -- standard models ----------------------------------------------------------

QuadLattice hyperbolic();
/// Negative-definite even unimodular lattice of rank 8 (negated E8 Cartan Gram).
QuadLattice e8_minus();
/// Z with (1,1) = 4.
QuadLattice span4();
/// U + U + U: the second cohomology lattice of the 4-torus.
QuadLattice t4_model();
/// U + U + U + E8(-1) + E8(-1): rank 22, signature (3,19).
QuadLattice k3_model();

// -- hyperbolic splitting ---------------------------------------------------

struct HyperbolicSplit {
    LatticeVector z;     ///< isotropic, (u, z) = 1
    Sublattice lprime;   ///< {u, z}^perp, even unimodular of signature (p-1, q-1)
};

/// Splits off the hyperbolic plane spanned by a primitive isotropic u and a
/// partner z. Requires L even unimodular.
HyperbolicSplit split_hyperbolic(const QuadLattice& L, const LatticeVector& u);

}  // namespace orbitlab
