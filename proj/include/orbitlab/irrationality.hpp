// Copyright (C) 2026 orbitlab authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "orbitlab/lattice.hpp"
#include "orbitlab/symbolic.hpp"

namespace orbitlab {

/// Exact coefficient of each symbol (unit first) in the pairing (y, v).
std::vector<Rational> symbolic_inner(const QuadLattice& L, const SymbolicRealVector& y, const LatticeVector& v);

/// {v in L : (y, v) = 0}, exact under the symbol independence contract.
Sublattice rational_constraint_lattice(const QuadLattice& L, const SymbolicRealVector& y);

/// Enclosure of (y, y) at the given MPFR precision.
struct NormBounds {
    double lower;
    double upper;
};
NormBounds symbolic_norm_bounds(const QuadLattice& L, const SymbolicRealVector& y, long precision_bits = 128);

/// Throws PrecisionError if the enclosure of (y, y) contains 0 and
/// NonPositiveNorm if it is certainly negative.
void require_positive_norm(const QuadLattice& L, const SymbolicRealVector& y, long precision_bits = 128);

/// True iff y lies in no plane spanned by u and a lattice vector of u^perp.
/// Decided by the rank of the per-symbol coordinates of y in u^perp / Ru.
bool is_u_orthoirrational(const QuadLattice& L, const LatticeVector& u, const SymbolicRealVector& y,
                          long precision_bits = 128);

/// All primitive isotropic v in y^perp with max |v_i| <= height, one per
/// +-pair (first nonzero coordinate positive), in lexicographic order.
/// Exhaustive but exponential in the rank of y^perp.
std::vector<LatticeVector> find_isotropic_orthogonal(const QuadLattice& L, const SymbolicRealVector& y, long height);
std::vector<LatticeVector> find_isotropic_orthogonal_serial(const QuadLattice& L, const SymbolicRealVector& y,
                                                            long height);

enum class Verdict { Certified, RefutedWithWitness, Inconclusive };

std::string to_string(Verdict v);

struct IrrationalityCertificate {
    Verdict verdict = Verdict::Inconclusive;
    /// Refuted: a u for which y is not u-orthoirrational. Certified: the isotropic u found.
    std::optional<LatticeVector> witness_u;
    std::size_t perp_rank = 0;
    long height_bound_used = 0;
    std::size_t isotropic_found = 0;
};

/// Three-step decision: find an isotropic u in y^perp up to `height`; if
/// rank(y^perp) <= rank(L) - 3 no plane through any isotropic u can meet the
/// lattice in rank 2, so the verdict is Certified; otherwise test each u found.
IrrationalityCertificate certify_orthoisotropic_irrational(const QuadLattice& L, const SymbolicRealVector& y,
                                                           long height, long precision_bits = 128);

namespace detail {

/// Echelon basis and enumeration bounds shared by the serial and OpenMP kernels.
struct IsotropicSearch {
    const QuadLattice* lattice;
    std::vector<LatticeVector> basis;  // Hermite form rows
    std::vector<std::size_t> pivots;
    long height;
};

IsotropicSearch make_isotropic_search(const QuadLattice& L, const SymbolicRealVector& y, long height);

/// Range of the first coefficient; subtrees for distinct values are disjoint.
std::pair<long, long> first_coefficient_range(const IsotropicSearch& s);

/// Enumerates the subtree whose first coefficient is `t0`, appending hits.
void enumerate_subtree(const IsotropicSearch& s, long t0, std::vector<LatticeVector>& out);

}  // namespace detail

}  // namespace orbitlab
