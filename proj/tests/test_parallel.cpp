// Copyright (C) 2026 orbitlab authors
// SPDX-License-Identifier: Apache-2.0

// OpenMP kernels against their serial references.

#include <doctest.h>
#include <omp.h>

#include "orbitlab/explorer.hpp"
#include "orbitlab/irrationality.hpp"
#include "orbitlab/torus_forms.hpp"
#include "support/oracles.hpp"

using namespace orbitlab;

TEST_CASE("isotropic enumeration: OpenMP equals serial") {
    omp_set_num_threads(4);
    QuadLattice K = k3_model();
    SymbolicRealVector y = testing::engineered_rank7_y(K);
    for (long h : {1, 2}) CHECK(find_isotropic_orthogonal(K, y, h) == find_isotropic_orthogonal_serial(K, y, h));
    QuadLattice T = t4_model();
    SymbolicRealVector r = SymbolicRealVector::rational({1, 1, 0, 0, 0, 0});
    CHECK(find_isotropic_orthogonal(T, r, 3) == find_isotropic_orthogonal_serial(T, r, 3));
}

TEST_CASE("solver: OpenMP equals serial") {
    omp_set_num_threads(4);
    testing::Rng rng(5);
    std::uniform_real_distribution<double> U(-1, 1);
    for (int k = 0; k < 6; ++k) {
        Eigen::MatrixXd C(2, 2);
        C << 1 + 0.3 * U(rng), 0.3 * U(rng), 0.3 * U(rng), 1 + 0.3 * U(rng);
        C /= std::sqrt(C.determinant());
        Eigen::MatrixXd D = Eigen::MatrixXd::Zero(2, 2);
        D(0, 1) = U(rng);
        D(1, 0) = -D(0, 1);
        ApproxOptions o;
        o.seed = std::uint64_t(k + 1);
        o.stop_err = 0.0;  // run every round so scheduling has a chance to matter
        o.budget = 6;
        ApproxResult a = approx_by_split_orbit({C, D}, o), b = approx_by_split_orbit_serial({C, D}, o);
        CHECK(a.err == b.err);
        CHECK(a.B == b.B);
        CHECK(a.Cprime == b.Cprime);
        CHECK(a.rounds == b.rounds);
    }
}

TEST_CASE("frontier expansion: OpenMP equals serial") {
    omp_set_num_threads(4);
    using detail::LdMat;
    using detail::LdVec;
    testing::Rng rng(8);
    std::normal_distribution<double> nd;
    std::vector<LdMat> gens(7, LdMat(6, 6));
    for (auto& g : gens)
        for (int i = 0; i < 6; ++i)
            for (int j = 0; j < 6; ++j) g(i, j) = nd(rng);
    std::vector<LdVec> frontier(200, LdVec(6));
    for (auto& v : frontier)
        for (int i = 0; i < 6; ++i) v(i) = nd(rng);
    auto a = detail::expand_frontier_serial(frontier, gens);
    auto b = detail::expand_frontier_omp(frontier, gens);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i] == b[i]);
}

TEST_CASE("exploration: OpenMP equals serial") {
    omp_set_num_threads(4);
    QuadLattice L = t4_model();
    LatticeVector u = unit_vector(6, 0);
    testing::Rng rng(3);
    HyperboloidPoint y0 = testing::random_hyperboloid_point(L, u, rng);
    std::vector<HyperboloidPoint> ts{testing::random_hyperboloid_point(L, u, rng),
                                     testing::random_hyperboloid_point(L, u, rng)};
    ExploreOptions o;
    o.depth = 5;
    o.max_frontier = 3000;
    o.parallel = false;
    ExploreResult a = explore(L, u, y0, ts, o);
    o.parallel = true;
    ExploreResult b = explore(L, u, y0, ts, o);
    REQUIRE(a.records.size() == b.records.size());
    for (std::size_t i = 0; i < a.records.size(); ++i) {
        CHECK(a.records[i].min_dist == b.records[i].min_dist);
        CHECK(a.records[i].orbit_size == b.records[i].orbit_size);
    }
    CHECK(a.visited == b.visited);
}
