// Copyright (C) 2026 orbitlab authors
// SPDX-License-Identifier: Apache-2.0

#include "orbitlab/json_io.hpp"

#include <fstream>
#include <sstream>

namespace orbitlab::io {

namespace {

const json& require(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing key '") + key + "'");
    return j.at(key);
}

void require_array(const json& j, const char* what) {
    if (!j.is_array()) throw ParseError(std::string(what) + " must be a JSON array");
}

}  // namespace

json load(const std::string& arg) {
    std::size_t i = arg.find_first_not_of(" \t\r\n");
    std::string text;
    if (i != std::string::npos && (arg[i] == '[' || arg[i] == '{')) {
        text = arg;
    } else {
        std::ifstream in(arg);
        if (!in) throw ParseError("cannot open '" + arg + "'");
        std::stringstream ss;
        ss << in.rdbuf();
        text = ss.str();
    }
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
}

json to_json(const Integer& z) {
    if (z.fits_slong_p()) return json(z.get_si());
    return json(z.get_str());
}

json to_json(const Rational& q) {
    if (q.get_den() == 1) return to_json(Integer(q.get_num()));
    return json(q.get_str());
}

json to_json(const LatticeVector& v) {
    json a = json::array();
    for (const auto& x : v) a.push_back(to_json(x));
    return a;
}

json to_json(const IntMatrix& m) {
    json a = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) a.push_back(to_json(m.row(i)));
    return a;
}

json to_json(const QuadLattice& L) { return json{{"rank", L.rank()}, {"gram", to_json(L.gram())}}; }

json to_json(const Sublattice& S) {
    json b = json::array();
    for (const auto& v : S.basis()) b.push_back(to_json(v));
    return json{{"basis", b}};
}

json to_json(const Isometry& g) { return json{{"matrix", to_json(g.matrix())}}; }

json to_json(const SymbolicRealVector& y) {
    json syms = json::array();
    for (std::size_t j = 1; j < y.symbol_count(); ++j) {
        const auto& s = y.symbols()[j];
        json o{{"tag", s.tag}, {"approx", s.approx}};
        if (s.radius >= 0) o["radius"] = s.radius;
        syms.push_back(o);
    }
    json rows = json::array();
    for (const auto& r : y.coeffs()) {
        json row = json::array();
        for (const auto& c : r) row.push_back(c.get_str());
        rows.push_back(row);
    }
    return json{{"symbols", syms}, {"coeffs", rows}};
}

json to_json(const IrrationalityCertificate& c) {
    json o{{"verdict", to_string(c.verdict)},
           {"perp_rank", c.perp_rank},
           {"height_bound_used", c.height_bound_used},
           {"isotropic_found", c.isotropic_found}};
    o["witness_u"] = c.witness_u ? to_json(*c.witness_u) : json(nullptr);
    return o;
}

json to_json(const Eigen::MatrixXd& m) {
    json a = json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
        a.push_back(row);
    }
    return a;
}

json to_json(const Eigen::VectorXd& v) {
    json a = json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(v(i));
    return a;
}

json to_json(const SplitBlockForm& f) { return json{{"C", to_json(f.C)}, {"D", to_json(f.D)}}; }

json to_json(const ApproxResult& r) {
    return json{{"Cprime", to_json(r.Cprime)}, {"B", to_json(r.B)}, {"err", r.err}, {"rounds", r.rounds}};
}

json to_json(const GenericityReport& r) {
    json o{{"searched", r.searched}, {"relation_found", r.relation_found}, {"bound", r.bound}};
    if (r.relation_found) {
        o["relation"] = r.relation;
        o["residual"] = r.residual;
    }
    return o;
}

// ---------------------------------------------------------------------------

Integer integer_from(const json& j) {
    if (j.is_number_integer()) return j.is_number_unsigned() ? Integer(j.get<unsigned long>()) : Integer(j.get<long>());
    if (j.is_string()) {
        Integer z;
        if (z.set_str(j.get<std::string>(), 10) != 0) throw ParseError("invalid integer '" + j.get<std::string>() + "'");
        return z;
    }
    throw ParseError("expected an integer, got " + j.dump());
}

Rational rational_from(const json& j) {
    if (j.is_number_integer()) return Rational(integer_from(j));
    if (j.is_string()) {
        Rational q;
        if (q.set_str(j.get<std::string>(), 10) != 0) throw ParseError("invalid rational '" + j.get<std::string>() + "'");
        if (q.get_den() == 0) throw ParseError("zero denominator in '" + j.get<std::string>() + "'");
        q.canonicalize();
        return q;
    }
    throw ParseError("expected a rational as integer or \"p/q\" string, got " + j.dump());
}

LatticeVector vector_from(const json& j) {
    require_array(j, "vector");
    std::vector<Integer> c;
    for (const auto& x : j) c.push_back(integer_from(x));
    return LatticeVector(std::move(c));
}

std::vector<LatticeVector> vectors_from(const json& j) {
    require_array(j, "vector list");
    std::vector<LatticeVector> out;
    for (const auto& r : j) out.push_back(vector_from(r));
    return out;
}

IntMatrix matrix_from(const json& j) {
    auto rows = vectors_from(j);
    const std::size_t cols = rows.empty() ? 0 : rows[0].size();
    for (const auto& r : rows)
        if (r.size() != cols) throw ParseError("matrix rows have different lengths");
    return IntMatrix::from_rows(rows, cols);
}

QuadLattice lattice_from(const json& j) {
    IntMatrix G = j.is_object() ? matrix_from(require(j, "gram")) : matrix_from(j);
    if (j.is_object() && j.contains("rank") && j.at("rank").get<std::size_t>() != G.rows())
        throw ParseError("'rank' does not match the Gram matrix");
    return QuadLattice(std::move(G));
}

Sublattice sublattice_from(const json& j, std::size_t ambient_dim) {
    auto rows = vectors_from(j.is_object() ? require(j, "basis") : j);
    return Sublattice(ambient_dim, std::move(rows));
}

IntMatrix isometry_matrix_from(const json& j) { return matrix_from(j.is_object() ? require(j, "matrix") : j); }

SymbolicRealVector symbolic_from(const json& j) {
    std::vector<Symbol> syms;
    if (j.contains("symbols")) {
        require_array(j.at("symbols"), "symbols");
        for (const auto& s : j.at("symbols")) {
            Symbol sym;
            sym.tag = require(s, "tag").get<std::string>();
            sym.approx = require(s, "approx").get<double>();
            if (s.contains("radius")) sym.radius = s.at("radius").get<double>();
            syms.push_back(std::move(sym));
        }
    }
    const json& rows = require(j, "coeffs");
    require_array(rows, "coeffs");
    RatMatrix c;
    for (const auto& r : rows) {
        require_array(r, "coeff row");
        std::vector<Rational> row;
        for (const auto& x : r) row.push_back(rational_from(x));
        c.push_back(std::move(row));
    }
    return SymbolicRealVector(std::move(syms), std::move(c));
}

Eigen::MatrixXd real_matrix_from(const json& j) {
    require_array(j, "matrix");
    const auto rows = static_cast<Eigen::Index>(j.size());
    const auto cols = rows ? static_cast<Eigen::Index>(j[0].size()) : 0;
    Eigen::MatrixXd m(rows, cols);
    for (Eigen::Index i = 0; i < rows; ++i) {
        const auto& r = j[static_cast<std::size_t>(i)];
        require_array(r, "matrix row");
        if (static_cast<Eigen::Index>(r.size()) != cols) throw ParseError("matrix rows have different lengths");
        for (Eigen::Index k = 0; k < cols; ++k) {
            const auto& x = r[static_cast<std::size_t>(k)];
            if (!x.is_number()) throw ParseError("matrix entries must be numbers");
            m(i, k) = x.get<double>();
        }
    }
    return m;
}

Eigen::VectorXd real_vector_from(const json& j) {
    require_array(j, "vector");
    Eigen::VectorXd v(static_cast<Eigen::Index>(j.size()));
    for (std::size_t i = 0; i < j.size(); ++i) {
        if (!j[i].is_number()) throw ParseError("vector entries must be numbers");
        v(static_cast<Eigen::Index>(i)) = j[i].get<double>();
    }
    return v;
}

SplitBlockForm split_form_from(const json& j) {
    SplitBlockForm f{real_matrix_from(require(j, "C")), Eigen::MatrixXd()};
    f.D = j.contains("D") ? real_matrix_from(j.at("D")) : Eigen::MatrixXd::Zero(f.C.rows(), f.C.cols());
    return f;
}

IntegralShear shear_from(const json& j) {
    IntMatrix B = matrix_from(require(j, "B"));
    IntMatrix A = j.contains("A") ? matrix_from(j.at("A")) : IntMatrix::identity(B.rows());
    if (A.rows() != B.rows() || A.cols() != B.rows() || B.cols() != B.rows())
        throw DimensionMismatch("shear blocks must be n x n");
    if (determinant(A) != 1) throw NegativeDeterminant("shear block A must have det 1");
    return IntegralShear{std::move(B), std::move(A)};
}

}  // namespace orbitlab::io
