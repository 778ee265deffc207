// Copyright (C) 2026 orbitlab authors
// SPDX-License-Identifier: Apache-2.0

#include "orbitlab/explorer.hpp"

namespace orbitlab::detail {

std::vector<LdVec> expand_frontier_serial(const std::vector<LdVec>& frontier, const std::vector<LdMat>& gens) {
    std::vector<LdVec> out;
    out.reserve(frontier.size() * gens.size());
    for (const auto& p : frontier)
        for (const auto& g : gens) out.push_back(g * p);
    return out;
}

}  // namespace orbitlab::detail
