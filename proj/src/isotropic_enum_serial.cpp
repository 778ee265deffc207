// Copyright (C) 2026 orbitlab authors
// SPDX-License-Identifier: Apache-2.0

#include <algorithm>

#include "orbitlab/irrationality.hpp"

namespace orbitlab {

std::vector<LatticeVector> find_isotropic_orthogonal_serial(const QuadLattice& L, const SymbolicRealVector& y,
                                                            long height) {
    auto s = detail::make_isotropic_search(L, y, height);
    auto [lo, hi] = detail::first_coefficient_range(s);
    std::vector<LatticeVector> out;
    for (long t = lo; t <= hi; ++t) detail::enumerate_subtree(s, t, out);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace orbitlab
