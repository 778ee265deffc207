// Copyright (C) 2026 orbitlab authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace orbitlab::cli {

/// Runs one command line (without the program name). Returns 0 on success,
/// 2 on domain errors (JSON error object on `err`), 1 on I/O or parse errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace orbitlab::cli
