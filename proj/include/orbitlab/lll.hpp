// Copyright (C) 2026 orbitlab authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Dense>

namespace orbitlab {

using LdMatrix = Eigen::Matrix<long double, Eigen::Dynamic, Eigen::Dynamic>;
using LdVector = Eigen::Matrix<long double, Eigen::Dynamic, 1>;

/// LLL-reduced row basis together with the integral transform
/// (transform * input == basis, entries of transform are integers stored
/// as long double).
struct LllResult {
    LdMatrix basis;
    LdMatrix transform;
};

/// Floating-point LLL on the rows of `rows` (assumed linearly independent).
LllResult lll_reduce(const LdMatrix& rows, long double delta = 0.99L);

/// Babai nearest-plane: integer coefficients c (as long double) with
/// c^T * basis close to target. `basis` should be LLL-reduced.
LdVector babai_nearest_plane(const LdMatrix& basis, const LdVector& target);

}  // namespace orbitlab
