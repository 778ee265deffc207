// Copyright (C) 2026 orbitlab authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Dense>

#include <json.hpp>
#include <string>

#include "orbitlab/irrationality.hpp"
#include "orbitlab/isometry.hpp"
#include "orbitlab/lattice.hpp"
#include "orbitlab/symbolic.hpp"
#include "orbitlab/torus_forms.hpp"

namespace orbitlab::io {

using nlohmann::json;

/// Thrown for malformed input documents (exit code 1 in the CLI).
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Parses `arg` as inline JSON when it starts with '[' or '{', otherwise
/// reads it as a file path.
json load(const std::string& arg);

// Integers beyond 64 bits are written as decimal strings.
json to_json(const Integer& z);
json to_json(const Rational& q);
json to_json(const LatticeVector& v);
json to_json(const IntMatrix& m);
json to_json(const QuadLattice& L);
json to_json(const Sublattice& S);
json to_json(const Isometry& g);
json to_json(const SymbolicRealVector& y);
json to_json(const IrrationalityCertificate& c);
json to_json(const Eigen::MatrixXd& m);
json to_json(const Eigen::VectorXd& v);
json to_json(const SplitBlockForm& f);
json to_json(const ApproxResult& r);
json to_json(const GenericityReport& r);

Integer integer_from(const json& j);
Rational rational_from(const json& j);
LatticeVector vector_from(const json& j);
std::vector<LatticeVector> vectors_from(const json& j);
IntMatrix matrix_from(const json& j);
/// Accepts {"rank", "gram"} or a bare Gram matrix.
QuadLattice lattice_from(const json& j);
/// Accepts {"basis": [...]} or a bare list of rows.
Sublattice sublattice_from(const json& j, std::size_t ambient_dim);
/// Accepts {"matrix": [...]} or a bare matrix.
IntMatrix isometry_matrix_from(const json& j);
SymbolicRealVector symbolic_from(const json& j);
Eigen::MatrixXd real_matrix_from(const json& j);
Eigen::VectorXd real_vector_from(const json& j);
SplitBlockForm split_form_from(const json& j);
IntegralShear shear_from(const json& j);

}  // namespace orbitlab::io
