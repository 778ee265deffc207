// Copyright (C) 2026 orbitlab authors
// SPDX-License-Identifier: Apache-2.0

#include <omp.h>

#include <algorithm>

#include "orbitlab/irrationality.hpp"

namespace orbitlab {

// Subtrees keyed by the first coefficient are independent; per-subtree
// results are concatenated and then sorted, so the output is schedule-free.
std::vector<LatticeVector> find_isotropic_orthogonal(const QuadLattice& L, const SymbolicRealVector& y, long height) {
    auto s = detail::make_isotropic_search(L, y, height);
    auto [lo, hi] = detail::first_coefficient_range(s);
    const long count = hi - lo + 1;
    if (count <= 0) return {};
    std::vector<std::vector<LatticeVector>> parts(static_cast<std::size_t>(count));
#pragma omp parallel for schedule(dynamic, 1)
    for (long k = 0; k < count; ++k) detail::enumerate_subtree(s, lo + k, parts[static_cast<std::size_t>(k)]);
    std::vector<LatticeVector> out;
    for (auto& p : parts) out.insert(out.end(), std::make_move_iterator(p.begin()), std::make_move_iterator(p.end()));
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace orbitlab
