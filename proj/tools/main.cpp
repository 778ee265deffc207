// Copyright (C) 2026 orbitlab authors
// SPDX-License-Identifier: Apache-2.0

#include <iostream>

#include "orbitlab/cli.hpp"

int main(int argc, char** argv) {
    return orbitlab::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
