// Copyright (C) 2026 orbitlab authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include "orbitlab/error.hpp"
#include "orbitlab/lattice.hpp"
#include "support/oracles.hpp"

using namespace orbitlab;

namespace {

QuadLattice uu() { return direct_sum(hyperbolic(), hyperbolic()); }

// Inertia by an independent route: count sign changes of the characteristic
// polynomial via Eigen's symmetric eigensolver (fine for these small integer Grams).
Signature float_signature(const QuadLattice& L) {
    const auto n = static_cast<Eigen::Index>(L.rank());
    Eigen::MatrixXd G(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j) G(i, j) = L.gram()(std::size_t(i), std::size_t(j)).get_d();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(G);
    Signature s;
    for (Eigen::Index i = 0; i < n; ++i) (es.eigenvalues()(i) > 0 ? s.p : s.q)++;
    return s;
}

}  // namespace

TEST_CASE("inner products in U and E8(-1)") {
    QuadLattice U = hyperbolic();
    CHECK(inner(U, {1, 0}, {0, 1}) == 1);
    CHECK(inner(U, {1, 0}, {1, 0}) == 0);
    CHECK(norm(e8_minus(), unit_vector(8, 0)) == -2);
    CHECK_THROWS_AS(inner(U, {1, 0, 0}, {1, 0}), DimensionMismatch);
}

TEST_CASE("lattice construction rejects bad Gram matrices") {
    CHECK_THROWS_AS(QuadLattice(IntMatrix{{0, 1}, {2, 0}}), InvalidLattice);
    CHECK_THROWS_AS(QuadLattice(IntMatrix{{1, 1}, {1, 1}}), DegenerateGram);
}

TEST_CASE("signatures of the standard models") {
    CHECK(signature(hyperbolic()) == Signature{1, 1});
    CHECK(signature(t4_model()) == Signature{3, 3});
    CHECK(signature(k3_model()) == Signature{3, 19});
    CHECK(signature(e8_minus()) == Signature{0, 8});
    CHECK(signature(span4()) == Signature{1, 0});
    for (const auto& L : {hyperbolic(), t4_model(), k3_model(), e8_minus(), uu()}) {
        CHECK(signature(L) == float_signature(L));
        CHECK(signature(L).p + signature(L).q == L.rank());
    }
}

TEST_CASE("signature handles zero diagonals and non-even forms") {
    QuadLattice L(IntMatrix{{0, 3, 1}, {3, 0, 1}, {1, 1, 0}});
    CHECK(signature(L) == float_signature(L));
    QuadLattice M(IntMatrix{{1, 2, 0}, {2, -3, 1}, {0, 1, 5}});
    CHECK(signature(M) == float_signature(M));
}

TEST_CASE("parity and unimodularity") {
    CHECK(is_even(hyperbolic()));
    CHECK(is_unimodular(hyperbolic()));
    CHECK(is_even(span4()));
    CHECK_FALSE(is_unimodular(span4()));
    CHECK(is_even(e8_minus()));
    CHECK(is_unimodular(e8_minus()));
    CHECK(e8_minus().determinant() == 1);
    CHECK(is_even(k3_model()));
    CHECK(is_unimodular(k3_model()));
    CHECK(k3_model().rank() == 22);
    CHECK(t4_model().rank() == 6);
}

TEST_CASE("primitivity and divisor") {
    QuadLattice U = hyperbolic();
    CHECK(is_primitive(U, {1, 0}));
    CHECK_FALSE(is_primitive(U, {2, 4}));
    CHECK(is_primitive(U, {2, 3}));
    CHECK_THROWS_AS(is_primitive(U, {0, 0}), ZeroVector);
    CHECK(divisor(U, {1, 0}) == 1);
    CHECK(divisor(U, {2, 0}) == 2);
    CHECK_THROWS_AS(divisor(U, {0, 0}), ZeroVector);
    CHECK(divisor(span4(), {1}) == 4);
}

TEST_CASE("unimodular lattices: primitive vectors have divisor 1") {
    testing::Rng rng(11);
    for (const auto& L : {t4_model(), k3_model()}) {
        for (int k = 0; k < 40; ++k) {
            LatticeVector v(L.rank());
            for (std::size_t i = 0; i < L.rank(); ++i) v[i] = testing::uniform(rng, -4, 4);
            if (v.is_zero() || v.content() != 1) continue;
            CHECK(divisor(L, v) == 1);
        }
    }
}

TEST_CASE("orthogonal sublattice") {
    QuadLattice L = uu();
    // x1 + y2 and y1 in coordinates (x1, y1, x2, y2)
    Sublattice P = orthogonal_sublattice(L, {{1, 0, 0, 1}, {0, 1, 0, 0}});
    CHECK(P.rank() == 2);
    CHECK(P.is_saturated());
    CHECK(P.same_lattice(Sublattice(4, {{0, 1, -1, 0}, {0, 0, 0, 1}})));
    CHECK(induced_lattice(L, Sublattice(4, {{0, 1, -1, 0}, {0, 0, 0, 1}})).gram() == IntMatrix{{0, -1}, {-1, 0}});
    CHECK(orthogonal_sublattice(L, {}).same_lattice(Sublattice::full(4)));
    for (const auto& v : P.basis()) {
        CHECK(inner(L, v, {1, 0, 0, 1}) == 0);
        CHECK(inner(L, v, {0, 1, 0, 0}) == 0);
    }
}

TEST_CASE("orthogonal of an isotropic u and x in u^perp has rank rank-2 in K3") {
    QuadLattice K = k3_model();
    testing::Rng rng(5);
    for (int k = 0; k < 10; ++k) {
        LatticeVector u = testing::random_primitive_isotropic(K, rng, 5, 3);
        LatticeVector x = testing::random_orthogonal(K, u, rng, 2);
        if (rank_over_q(IntMatrix::from_rows(std::vector{u, x}, 22)) < 2) continue;
        CHECK(orthogonal_sublattice(K, {u, x}).rank() == 20);
    }
}

TEST_CASE("saturation") {
    QuadLattice Z2(IntMatrix::identity(2));
    CHECK(saturation(Z2, Sublattice(2, {{2, 0}})).same_lattice(Sublattice(2, {{1, 0}})));
    Sublattice s(2, {{1, 1}});
    CHECK(saturation(Z2, s).same_lattice(s));
    CHECK(saturation(Z2, Sublattice(2, {{2, 4}, {0, 3}})).same_lattice(Sublattice::full(2)));
    Sublattice t(3, {{2, 4, 6}, {0, 3, 3}});
    Sublattice sat = saturation(QuadLattice(IntMatrix::identity(3)), t);
    CHECK(sat.rank() == 2);
    CHECK(sat.is_saturated());
    CHECK(saturation(QuadLattice(IntMatrix::identity(3)), sat).same_lattice(sat));
    CHECK_THROWS_AS(Sublattice(2, {{1, 2}, {2, 4}}), DependentBasis);
}

TEST_CASE("extension to a unimodular basis") {
    CHECK(extend_to_unimodular_basis(Sublattice(4, {{1, 0, 0, 0}})) == IntMatrix::identity(4));
    IntMatrix M = extend_to_unimodular_basis(Sublattice(2, {{2, 3}}));
    CHECK(M == IntMatrix{{2, 1}, {3, 2}});
    CHECK_THROWS_AS(extend_to_unimodular_basis(Sublattice(2, {{2, 4}})), NotSaturated);
    Sublattice S(5, {{1, 2, 3, 4, 5}, {0, 1, 1, 2, 7}});
    IntMatrix E = extend_to_unimodular_basis(S);
    CHECK(abs(determinant(E)) == 1);
    CHECK(E.col(0) == S.basis()[0]);
    CHECK(E.col(1) == S.basis()[1]);
}

TEST_CASE("direct sums") {
    QuadLattice L = uu();
    CHECK(L.rank() == 4);
    CHECK(signature(L) == Signature{2, 2});
    CHECK(direct_sum(hyperbolic(), span4()).determinant() == -4);
    CHECK(signature(direct_sum(e8_minus(), e8_minus())) == Signature{0, 16});
}

TEST_CASE("hyperbolic splitting") {
    HyperbolicSplit s = split_hyperbolic(hyperbolic(), {1, 0});
    CHECK(s.z == LatticeVector{0, 1});
    CHECK(s.lprime.rank() == 0);

    QuadLattice L = uu();
    HyperbolicSplit t = split_hyperbolic(L, {1, 0, 0, 1});
    CHECK(inner(L, {1, 0, 0, 1}, t.z) == 1);
    CHECK(norm(L, t.z) == 0);
    QuadLattice Lp = induced_lattice(L, t.lprime);
    CHECK(is_even(Lp));
    CHECK(is_unimodular(Lp));
    CHECK(signature(Lp) == Signature{1, 1});

    CHECK_THROWS_AS(split_hyperbolic(L, {1, 1, 0, 0}), NotIsotropic);
    CHECK_THROWS_AS(split_hyperbolic(L, {2, 0, 0, 0}), NotPrimitive);
    CHECK_THROWS_AS(split_hyperbolic(span4(), {1}), NotEvenUnimodular);
}

TEST_CASE("hyperbolic splitting in K3 at random isotropic vectors") {
    QuadLattice K = k3_model();
    testing::Rng rng(3);
    for (int k = 0; k < 20; ++k) {
        LatticeVector u = testing::random_primitive_isotropic(K, rng, 5, 3);
        HyperbolicSplit s = split_hyperbolic(K, u);
        CHECK(inner(K, u, s.z) == 1);
        CHECK(norm(K, s.z) == 0);
        QuadLattice Lp = induced_lattice(K, s.lprime);
        CHECK(signature(Lp) == Signature{2, 18});
        CHECK(is_even(Lp));
        CHECK(is_unimodular(Lp));
        std::vector<LatticeVector> all{u, s.z};
        all.insert(all.end(), s.lprime.basis().begin(), s.lprime.basis().end());
        CHECK(abs(determinant(IntMatrix::from_columns(all, 22))) == 1);
    }
}

TEST_CASE("normal forms") {
    IntMatrix m{{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}};
    SmithForm s = smith_form(m);
    CHECK(s.divisors == std::vector<Integer>{2, 6, 12});
    CHECK(s.U * m * s.V == IntMatrix{{2, 0, 0}, {0, 6, 0}, {0, 0, 12}});
    CHECK(hermite_form(IntMatrix{{2, 4}, {0, 3}}) == hermite_form(IntMatrix{{2, 1}, {0, 3}}));
    IntMatrix k{{1, 2, 3}, {2, 4, 6}};
    CHECK(integer_kernel(k).size() == 2);
    CHECK(rank_over_q(k) == 1);
}
