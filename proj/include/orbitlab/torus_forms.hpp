// Copyright (C) 2026 orbitlab authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <vector>

#include "orbitlab/error.hpp"
#include "orbitlab/isometry.hpp"
#include "orbitlab/lattice.hpp"

namespace orbitlab {

// Coordinates on R^{2n}: the first n basis vectors span l, the last n span l'.
// A form is stored as its skew Gram matrix; the Darboux form is [[0,-I],[I,0]].

Eigen::MatrixXd darboux(std::size_t n);

/// Pfaffian normalized so that the Darboux form has Pfaffian +1. For the
/// block form [[0,-C^T],[C,D]] this equals det C.
double pfaffian(const Eigen::MatrixXd& omega);

/// Pfaffian in the usual convention (a12 a34 - a13 a24 + a14 a23 for 4x4).
double pfaffian_standard(const Eigen::MatrixXd& omega);
/// Same, by cofactor expansion along the first row; for testing small sizes.
double pfaffian_expansion(const Eigen::MatrixXd& omega);

/// Rescales omega so its (normalized) Pfaffian is 1. Throws InvalidForm when
/// the Pfaffian is zero or no real rescaling reaches +1.
Eigen::MatrixXd normalize_volume(const Eigen::MatrixXd& omega);

/// True iff omega vanishes on the real span of l (pairings below `tol`).
bool is_lagrangian_subspace(const Eigen::MatrixXd& omega, const Sublattice& l, double tol = 1e-12);

struct SplitBlockForm {
    Eigen::MatrixXd C;  ///< det 1
    Eigen::MatrixXd D;  ///< skew
    std::size_t n() const { return static_cast<std::size_t>(C.rows()); }
};

/// Checks det C = 1 within 1e-10 and D skew.
void validate(const SplitBlockForm& f);

/// Dense matrix [[0,-C^T],[C,D]].
Eigen::MatrixXd from_blocks(const SplitBlockForm& f);

/// Block decomposition of omega in the basis (l basis, l' basis). Throws
/// NotComplementary, NotVanishingOnL, or InvalidForm (det C not 1; forms of
/// Pfaffian -1 are rejected, not re-oriented).
SplitBlockForm to_blocks(const Eigen::MatrixXd& omega, const Sublattice& l, const Sublattice& lprime);

/// Integral shear [[I,B],[0,A]] with det A = 1.
struct IntegralShear {
    IntMatrix B;
    IntMatrix A;

    static IntegralShear translation(IntMatrix B);
    std::size_t n() const { return B.rows(); }
    IntMatrix assembled() const;
};

/// g * h as 2n x 2n matrices.
IntegralShear compose(const IntegralShear& g, const IntegralShear& h);

/// Pullback g^T omega g, in blocks: C' = A^T C, D' = A^T C B - B^T C^T A + A^T D A.
/// This is a right action: act(g*h, f) == act(h, act(g, f)).
SplitBlockForm act(const IntegralShear& g, const SplitBlockForm& f);

/// Dense g^T omega g, independent of the block formulas.
Eigen::MatrixXd congruence(const IntegralShear& g, const Eigen::MatrixXd& omega);

struct GenericityReport {
    bool searched = false;
    bool relation_found = false;
    std::vector<long> relation;  ///< coefficients on the row-major entries of C^{-1}
    double residual = 0.0;
    long bound = 0;
};

/// Searches for an integer relation sum m_k x_k ~ 0 among the entries x of
/// C^{-1} with |m_k| <= bound. A hit means C is not generic; no hit is only
/// heuristic evidence of genericity, and is meaningful only while
/// n^2 * log10(bound) stays well below the ~15 digits carried by doubles.
GenericityReport genericity_score(const Eigen::MatrixXd& C, long bound);

struct ApproxOptions {
    double eps = 1e-2;
    double delta = 0.1;
    int budget = 16;           ///< perturbation rounds
    std::uint64_t seed = 1;
    double mu_min = 1e-7;      ///< smallest embedding weight tried per round
    double stop_err = 1e-12;   ///< early exit once an incumbent is this good
};

struct ApproxResult {
    Eigen::MatrixXd Cprime;
    IntMatrix B;
    double err = 0.0;
    int rounds = 0;
};

/// Thrown when no incumbent reaches eps; carries the best one found.
class DidNotConverge : public DomainError {
public:
    DidNotConverge(const std::string& message, ApproxResult best)
        : DomainError("DidNotConverge", message), best_(std::move(best)) {}
    const ApproxResult& best() const noexcept { return best_; }

private:
    ApproxResult best_;
};

/// ||skew(C B) - D||_inf with skew(M) = M - M^T.
double split_orbit_error(const Eigen::MatrixXd& Cprime, const IntMatrix& B, const Eigen::MatrixXd& D);

/// Finds Cprime (det 1, ||Cprime - C||_inf <= delta) and integer B with
/// split_orbit_error <= eps by scaled-embedding CVP over perturbation rounds.
/// Rounds run concurrently; the serial variant is the reference.
ApproxResult approx_by_split_orbit(const SplitBlockForm& target, const ApproxOptions& opts);
ApproxResult approx_by_split_orbit_serial(const SplitBlockForm& target, const ApproxOptions& opts);

/// Lattice (Lambda^2 Z^4, wedge pairing) on e12, e13, e14, e23, e24, e34.
LatticePtr wedge_lattice();
QuadLattice wedge_gram();
/// Induced action of g in SL(4, Z) on Lambda^2 Z^4 (2x2 minors).
Isometry wedge_square_action(const IntMatrix& g);
/// Columns e12, e34, e13, -e24, e14, e23: pulls wedge_gram back to U + U + U.
IntMatrix wedge_hyperbolic_basis();

namespace detail {

/// One solver round; deterministic in (target, opts, round).
ApproxResult approx_round(const SplitBlockForm& target, const ApproxOptions& opts, int round);
/// Strict "better" order: smaller err, then lexicographically smaller B.
bool better(const ApproxResult& a, const ApproxResult& b);
void check_options(const ApproxOptions& opts);
ApproxResult finish(ApproxResult best, const ApproxOptions& opts, int rounds);

}  // namespace detail

}  // namespace orbitlab
