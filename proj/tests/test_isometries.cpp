// Copyright (C) 2026 orbitlab authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include "orbitlab/error.hpp"
#include "orbitlab/isometry.hpp"
#include "support/oracles.hpp"

using namespace orbitlab;

namespace {

LatticePtr share(QuadLattice L) { return std::make_shared<const QuadLattice>(std::move(L)); }

LatticePtr uu() { return share(direct_sum(hyperbolic(), hyperbolic())); }

IntMatrix cube(const IntMatrix& m) { return m * m * m; }

}  // namespace

TEST_CASE("group laws") {
    LatticePtr L = share(t4_model());
    Isometry g = compose(eichler_transvection(L, unit_vector(6, 0), unit_vector(6, 2)),
                         eichler_transvection(L, unit_vector(6, 3), unit_vector(6, 5)));
    CHECK(preserves_gram(*L, g.matrix()));
    CHECK(compose(g, invert(g)).is_identity());
    CHECK(compose(invert(g), g).is_identity());
    LatticeVector v{1, -2, 3, 0, 5, 7};
    CHECK(apply(Isometry::identity(L), v) == v);
    CHECK(apply(invert(g), apply(g, v)) == v);
    LatticePtr other = share(k3_model());
    CHECK_THROWS_AS(compose(g, Isometry::identity(other)), LatticeMismatch);
    CHECK_THROWS_AS(Isometry(L, IntMatrix::identity(6) + IntMatrix::identity(6)), NotIsometry);
}

TEST_CASE("identity component membership") {
    LatticePtr U = share(hyperbolic());
    CHECK(is_in_so_plus(Isometry::identity(U)));
    CHECK_FALSE(is_in_so_plus(Isometry(U, IntMatrix{{-1, 0}, {0, -1}})));
    CHECK_THROWS_AS(is_in_so_plus(Isometry(U, IntMatrix{{0, 1}, {1, 0}})), NegativeDeterminant);
    // -I on U (+) U has det +1 and reverses both positive lines: stays in SO+ overall.
    LatticePtr L = uu();
    CHECK(is_in_so_plus(Isometry(L, -IntMatrix::identity(4))));
}

TEST_CASE("so_plus is a homomorphism to Z/2") {
    LatticePtr L = share(t4_model());
    testing::Rng rng(21);
    // -I on one hyperbolic plane: det +1, outside SO+.
    IntMatrix flip = IntMatrix::identity(6);
    flip(0, 0) = -1;
    flip(1, 1) = -1;
    Isometry s(L, flip);
    CHECK_FALSE(is_in_so_plus(s));
    for (int k = 0; k < 30; ++k) {
        LatticeVector e = testing::random_primitive_isotropic(*L, rng, 2, 3);
        Isometry t = eichler_transvection(L, e, testing::random_orthogonal(*L, e, rng, 1));
        Isometry g = testing::uniform(rng, 0, 1) ? compose(s, t) : t;
        Isometry h = testing::uniform(rng, 0, 1) ? compose(t, s) : invert(t);
        CHECK(is_in_so_plus(compose(g, h)) == (is_in_so_plus(g) == is_in_so_plus(h)));
    }
}

TEST_CASE("Eichler transvection formula") {
    LatticePtr L = uu();
    // basis x1, y1, x2, y2; e = x1, a = x2
    Isometry g = eichler_transvection(L, {1, 0, 0, 0}, {0, 0, 1, 0});
    CHECK(apply(g, {1, 0, 0, 0}) == LatticeVector{1, 0, 0, 0});
    CHECK(apply(g, {0, 0, 1, 0}) == LatticeVector{0, 0, 1, 0});
    CHECK(apply(g, {0, 1, 0, 0}) == LatticeVector{0, 1, 1, 0});
    CHECK(apply(g, {0, 0, 0, 1}) == LatticeVector{-1, 0, 0, 1});
    CHECK(is_in_so_plus(g));
    CHECK(eichler_transvection(L, {1, 0, 0, 0}, {0, 0, 0, 0}).is_identity());
    CHECK_THROWS_AS(eichler_transvection(L, {1, 1, 0, 0}, {0, 0, 1, 0}), NotIsotropic);
    CHECK_THROWS_AS(eichler_transvection(L, {1, 0, 0, 0}, {0, 1, 0, 0}), NotOrthogonal);
}

TEST_CASE("random transvections are unipotent isometries fixing e") {
    testing::Rng rng(8);
    for (LatticePtr L : {share(t4_model()), share(k3_model())}) {
        const std::size_t n = L->rank();
        for (int k = 0; k < 25; ++k) {
            LatticeVector e = testing::random_primitive_isotropic(*L, rng, 5, 3);
            Isometry g = eichler_transvection(L, e, testing::random_orthogonal(*L, e, rng, 2));
            const IntMatrix& M = g.matrix();
            CHECK(M.transpose() * L->gram() * M == L->gram());
            CHECK(determinant(M) == 1);
            CHECK(cube(M - IntMatrix::identity(n)) == IntMatrix(n, n));
            CHECK(apply(g, e) == e);
            CHECK(is_in_so_plus(g));
        }
    }
}

TEST_CASE("map_isotropic on small examples") {
    LatticePtr L = uu();
    LatticeVector x1{1, 0, 0, 0}, y1{0, 1, 0, 0};
    Isometry g = map_isotropic(L, x1, y1);
    CHECK(apply(g, x1) == y1);
    CHECK(is_in_so_plus(g));
    CHECK(map_isotropic(L, x1, x1).is_identity());
    CHECK_THROWS_AS(map_isotropic(L, x1, {1, 1, 0, 0}), NotIsotropic);
    CHECK_THROWS_AS(map_isotropic(L, x1, {2, 0, 0, 0}), NotPrimitive);
    CHECK_THROWS_AS(map_isotropic(share(hyperbolic()), {1, 0}, {0, 1}), NoHyperbolicSplit);

    auto w = testing::bfs_transvection_word(L, x1, y1, 6, 2);
    REQUIRE(w.has_value());
    CHECK(apply(*w, x1) == y1);
    CHECK(is_in_Gu(compose(invert(g), *w), x1));
}

TEST_CASE("map_isotropic in K3 with an E8 component") {
    LatticePtr K = share(k3_model());
    LatticeVector u = unit_vector(22, 0);
    LatticeVector v = unit_vector(22, 0) + unit_vector(22, 1) + unit_vector(22, 6);
    REQUIRE(norm(*K, unit_vector(22, 6)) == -2);
    REQUIRE(norm(*K, v) == 0);
    Isometry g = map_isotropic(K, u, v);
    CHECK(apply(g, u) == v);
    CHECK(is_in_so_plus(g));
    Isometry back = map_isotropic(K, v, u);
    CHECK(apply(compose(back, g), u) == u);
}

TEST_CASE("map_isotropic on random pairs") {
    testing::Rng rng(4);
    LatticePtr L = share(t4_model());
    for (int k = 0; k < 10; ++k) {
        LatticeVector u = testing::random_primitive_isotropic(*L, rng, 3, 3);
        LatticeVector v = testing::random_primitive_isotropic(*L, rng, 3, 3);
        Isometry g = map_isotropic(L, u, v);
        CHECK(apply(g, u) == v);
        CHECK(is_in_so_plus(g));
    }
}

TEST_CASE("stabilizer predicates") {
    LatticePtr L = share(t4_model());
    LatticeVector u = unit_vector(6, 0);
    // y = x2 + sqrt2 y2 lies in u^perp
    SymbolicRealVector y = SymbolicRealVector::combination({{"sqrt2", std::sqrt(2.0)}},
                                                           {unit_vector(6, 2), unit_vector(6, 3)});
    Isometry id = Isometry::identity(L);
    AdaptedBasis B = adapted_integral_basis(*L, u);
    CHECK(B.u() == u);
    CHECK(is_in_Gu(id, u));
    CHECK(is_in_Hy(id, u, y));
    CHECK(is_in_Ky(id, u, y));
    CHECK(is_in_unipotent_radical(id, B));

    // E_{u,a} with (a, y) != 0 moves y along u.
    Isometry t = eichler_transvection(L, u, unit_vector(6, 2));
    CHECK(is_in_Gu(t, u));
    CHECK_FALSE(is_in_Hy(t, u, y));
    CHECK(is_in_Ky(t, u, y));
    CHECK(is_in_unipotent_radical(t, B));

    // E_{u,a} with a in y^perp fixes y.
    Isometry f = eichler_transvection(L, u, unit_vector(6, 4));
    CHECK(is_in_Hy(f, u, y));

    // Transvection internal to the complement fixes u but is not unipotent-radical shaped.
    Isometry inner_t = eichler_transvection(L, unit_vector(6, 2), unit_vector(6, 4));
    CHECK(is_in_Gu(inner_t, u));
    CHECK_FALSE(is_in_unipotent_radical(inner_t, B));
    CHECK_FALSE(is_in_Ky(inner_t, u, y));

    Isometry moving = map_isotropic(L, u, unit_vector(6, 1));
    CHECK_FALSE(is_in_Gu(moving, u));
}

TEST_CASE("stabilizer predicates are nested") {
    LatticePtr L = share(t4_model());
    LatticeVector u = unit_vector(6, 0);
    SymbolicRealVector y = SymbolicRealVector::combination({{"sqrt2", std::sqrt(2.0)}},
                                                           {unit_vector(6, 2), unit_vector(6, 3)});
    auto gens = gu_lattice_generators(L, u);
    testing::Rng rng(2);
    for (int k = 0; k < 40; ++k) {
        Isometry g = Isometry::identity(L);
        for (int j = 0; j < 3; ++j) g = compose(g, gens[std::size_t(testing::uniform(rng, 0, long(gens.size()) - 1))]);
        if (is_in_Hy(g, u, y)) CHECK(is_in_Ky(g, u, y));
        if (is_in_Ky(g, u, y)) CHECK(is_in_Gu(g, u));
    }
}

TEST_CASE("generators of the stabilizer") {
    for (LatticePtr L : {share(t4_model()), share(k3_model())}) {
        LatticeVector u = unit_vector(L->rank(), 0);
        auto gens = gu_lattice_generators(L, u);
        std::size_t nonidentity = 0;
        for (const auto& g : gens) {
            CHECK(g.matrix().transpose() * L->gram() * g.matrix() == L->gram());
            CHECK(is_in_Gu(g, u));
            nonidentity += !g.is_identity();
        }
        CHECK(nonidentity >= 5);
        testing::Rng rng(1);
        Isometry w = Isometry::identity(L);
        for (int j = 0; j < 4; ++j) w = compose(w, gens[std::size_t(testing::uniform(rng, 0, long(gens.size()) - 1))]);
        CHECK(is_in_Gu(w, u));
    }
    CHECK_THROWS_AS(gu_lattice_generators(share(t4_model()), {1, 1, 0, 0, 0, 0}), NotIsotropic);
}
