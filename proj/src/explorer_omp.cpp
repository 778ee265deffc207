// Copyright (C) 2026 orbitlab authors
// SPDX-License-Identifier: Apache-2.0

#include <omp.h>

#include "orbitlab/explorer.hpp"

namespace orbitlab::detail {

// Each image has a fixed slot, so the output matches the serial order.
std::vector<LdVec> expand_frontier_omp(const std::vector<LdVec>& frontier, const std::vector<LdMat>& gens) {
    const std::size_t ng = gens.size();
    std::vector<LdVec> out(frontier.size() * ng);
    const auto np = static_cast<long>(frontier.size());
#pragma omp parallel for schedule(static)
    for (long i = 0; i < np; ++i)
        for (std::size_t j = 0; j < ng; ++j) out[static_cast<std::size_t>(i) * ng + j] = gens[j] * frontier[static_cast<std::size_t>(i)];
    return out;
}

}  // namespace orbitlab::detail
