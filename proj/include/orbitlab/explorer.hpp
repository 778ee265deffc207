// Copyright (C) 2026 orbitlab authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "orbitlab/lattice.hpp"

namespace orbitlab {

/// Point of the hyperboloid {v : (v,v) = 1, (v,u) = 0}. For u = 0 only the
/// norm condition applies.
struct HyperboloidPoint {
    Eigen::VectorXd coords;
};

/// Throws NonPositiveNorm / NotInPerp / DimensionMismatch unless v satisfies
/// the hyperboloid conditions within tol.
HyperboloidPoint make_hyperboloid_point(const QuadLattice& L, const LatticeVector& u, const Eigen::VectorXd& v,
                                        double tol = 1e-9);

/// Removes the u-pairing of v along a vector t with (t, u) != 0 and rescales
/// to unit norm.
HyperboloidPoint project_to_hyperboloid(const QuadLattice& L, const LatticeVector& u, const Eigen::VectorXd& v);

/// Real isometry g with g u = u and g y = yprime, as a product of two
/// reflections in vectors of u^perp of equal norm sign (so g lies in SO+).
Eigen::MatrixXd gu_real_transitive_move(const QuadLattice& L, const LatticeVector& u, const Eigen::VectorXd& y,
                                        const Eigen::VectorXd& yprime, double tol = 1e-9);

struct DensityRecord {
    int depth = 0;
    int target_id = 0;
    double min_dist = 0.0;
    std::size_t orbit_size = 0;
};

struct ExploreOptions {
    int depth = 4;
    std::uint64_t seed = 1;
    double dedup_tol = 1e-7;
    double norm_cap = 1e6;          ///< max |coordinate| of a kept point
    std::size_t max_frontier = 20000;
    bool parallel = true;
};

struct ExploreResult {
    std::vector<DensityRecord> records;  ///< ordered by depth, then target
    std::size_t visited = 0;
    double max_norm_defect = 0.0;        ///< max |(v,v) - 1| over visited points
    double max_perp_defect = 0.0;        ///< max |(v,u)|
    double max_coordinate = 0.0;
};

/// Breadth-first orbit of y0 under gu_lattice_generators(L, u) and their
/// inverses, with nearest-approach records per (depth, target). Distances
/// are coordinate-Euclidean, which is not isometry-invariant.
ExploreResult explore(const QuadLattice& L, const LatticeVector& u, const HyperboloidPoint& y0,
                      const std::vector<HyperboloidPoint>& targets, const ExploreOptions& opts);

/// Same walk with caller-supplied real generators (inverses are added).
ExploreResult explore_with_generators(const QuadLattice& L, const LatticeVector& u,
                                      const std::vector<Eigen::MatrixXd>& generators, const HyperboloidPoint& y0,
                                      const std::vector<HyperboloidPoint>& targets, const ExploreOptions& opts);

/// Header comment lines (prefixed "# ") stating the caveats of the statistic.
std::vector<std::string> density_caveats();

/// CSV: caveat lines, then depth,target_id,min_dist,orbit_size with %.17g floats.
void write_density_csv(std::ostream& os, const std::vector<DensityRecord>& records);

namespace detail {

using LdMat = Eigen::Matrix<long double, Eigen::Dynamic, Eigen::Dynamic>;
using LdVec = Eigen::Matrix<long double, Eigen::Dynamic, 1>;

/// Images of every frontier point under every generator, in
/// (point, generator) order.
std::vector<LdVec> expand_frontier_serial(const std::vector<LdVec>& frontier, const std::vector<LdMat>& gens);
std::vector<LdVec> expand_frontier_omp(const std::vector<LdVec>& frontier, const std::vector<LdMat>& gens);

}  // namespace detail

}  // namespace orbitlab
