// Copyright (C) 2026 orbitlab authors
// SPDX-License-Identifier: Apache-2.0

// Acceptance criteria AC1-AC10. One PASS/FAIL line per criterion; the exit
// status is nonzero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

#include "orbitlab/error.hpp"
#include "orbitlab/explorer.hpp"
#include "orbitlab/irrationality.hpp"
#include "orbitlab/isometry.hpp"
#include "orbitlab/torus_forms.hpp"
#include "support/oracles.hpp"

using namespace orbitlab;
namespace t = orbitlab::testing;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;

    void require(bool ok, const std::string& what) {
        if (!ok && pass) detail = what;
        pass = pass && ok;
    }
};

LatticePtr share(QuadLattice L) { return std::make_shared<const QuadLattice>(std::move(L)); }

struct Model {
    const char* name;
    LatticePtr L;
};

std::vector<Model> models() { return {{"t4", share(t4_model())}, {"k3", share(k3_model())}}; }

// 1. Lattice invariants of the two models.
Outcome ac1() {
    Outcome o;
    QuadLattice T = t4_model(), K = k3_model();
    o.require(T.rank() == 6 && is_even(T) && is_unimodular(T) && signature(T) == Signature{3, 3}, "t4 invariants");
    o.require(K.rank() == 22 && is_even(K) && is_unimodular(K) && signature(K) == Signature{3, 19}, "k3 invariants");
    return o;
}

// 2. Hyperbolic splitting at 200 random primitive isotropic vectors of height <= 5 per model.
Outcome ac2() {
    Outcome o;
    t::Rng rng(2002);
    for (const auto& [name, L] : models()) {
        const Signature sig = signature(*L);
        for (int k = 0; k < 200; ++k) {
            LatticeVector u = t::random_primitive_isotropic(*L, rng, 5, 3);
            HyperbolicSplit s = split_hyperbolic(*L, u);
            const bool plane = norm(*L, u) == 0 && inner(*L, u, s.z) == 1 && norm(*L, s.z) == 0;
            QuadLattice Lp = induced_lattice(*L, s.lprime);
            std::vector<LatticeVector> all{u, s.z};
            all.insert(all.end(), s.lprime.basis().begin(), s.lprime.basis().end());
            const bool basis = all.size() == L->rank() && abs(determinant(IntMatrix::from_columns(all, L->rank()))) == 1;
            o.require(plane && is_even(Lp) && is_unimodular(Lp) && signature(Lp) == Signature{sig.p - 1, sig.q - 1} && basis,
                      std::string(name) + ": split failed at " + u.to_string());
        }
    }
    return o;
}

// 3. Rank drop on 200 random pairs per model, and the rank-7 certificate in K3.
Outcome ac3() {
    Outcome o;
    t::Rng rng(3003);
    for (const auto& [name, L] : models()) {
        int done = 0;
        while (done < 200) {
            LatticeVector u = t::random_primitive_isotropic(*L, rng, 5, 3);
            LatticeVector x = t::random_orthogonal(*L, u, rng, 2);
            if (rank_over_q(IntMatrix::from_rows(std::vector{u, x}, L->rank())) < 2) continue;
            ++done;
            o.require(orthogonal_sublattice(*L, {u, x}).rank() == L->rank() - 2, std::string(name) + ": rank drop");
        }
    }
    QuadLattice K = k3_model();
    auto cert = certify_orthoisotropic_irrational(K, t::engineered_rank7_y(K), 1);
    o.require(cert.perp_rank == 7, "engineered y: perp rank " + std::to_string(cert.perp_rank));
    o.require(cert.verdict == Verdict::Certified, "engineered y: verdict " + to_string(cert.verdict));
    return o;
}

// 4. 500 random transvections per model.
Outcome ac4() {
    Outcome o;
    t::Rng rng(4004);
    for (const auto& [name, L] : models()) {
        const std::size_t n = L->rank();
        const IntMatrix I = IntMatrix::identity(n);
        for (int k = 0; k < 500; ++k) {
            LatticeVector e = t::random_primitive_isotropic(*L, rng, 5, 3);
            Isometry g = eichler_transvection(L, e, t::random_orthogonal(*L, e, rng, 2));
            const IntMatrix& M = g.matrix();
            const IntMatrix N = M - I;
            o.require(M.transpose() * L->gram() * M == L->gram() && determinant(M) == 1 && N * N * N == IntMatrix(n, n) &&
                          M * e == e,
                      std::string(name) + ": transvection check");
        }
    }
    return o;
}

// 5. Isotropic transitivity: 50 pairs in t4, 20 in k3, 10 BFS cross-checks.
Outcome ac5() {
    Outcome o;
    t::Rng rng(5005);
    auto ms = models();
    for (int m = 0; m < 2; ++m) {
        const auto& [name, L] = ms[std::size_t(m)];
        const int pairs = m == 0 ? 50 : 20;
        for (int k = 0; k < pairs; ++k) {
            LatticeVector u = t::random_primitive_isotropic(*L, rng, 3, 3);
            LatticeVector v = t::random_primitive_isotropic(*L, rng, 3, 3);
            Isometry g = map_isotropic(L, u, v);
            o.require(apply(g, u) == v && is_in_so_plus(g), std::string(name) + ": map_isotropic " + u.to_string());
        }
    }
    // Small pairs: the word found by BFS and the constructed g differ by an element fixing u.
    const LatticePtr& T = ms[0].L;
    int checked = 0;
    while (checked < 10) {
        LatticeVector u = t::random_primitive_isotropic(*T, rng, 1, 3);
        LatticeVector v = t::random_primitive_isotropic(*T, rng, 1, 3);
        auto w = t::bfs_transvection_word(T, u, v, 6, 2);
        if (!w) continue;
        ++checked;
        Isometry g = map_isotropic(T, u, v);
        o.require(apply(*w, u) == v && apply(g, u) == v && is_in_so_plus(*w) == is_in_so_plus(g) &&
                      apply(compose(invert(g), *w), u) == u,
                  "BFS cross-check at " + u.to_string() + " -> " + v.to_string());
    }
    return o;
}

// 6. Solver vs exhaustive oracle on 25 targets (n = 2), and the D = 0 case.
Outcome ac6() {
    Outcome o;
    t::Rng rng(6006);
    std::uniform_real_distribution<double> U(-1, 1);
    const double eps = 1e-2, delta = 0.1;
    double worst_ratio = 0;
    for (int k = 0; k < 25; ++k) {
        Eigen::MatrixXd C(2, 2);
        do C << 1 + 0.5 * U(rng), 0.5 * U(rng), 0.5 * U(rng), 1 + 0.5 * U(rng);
        while (C.determinant() < 0.2);
        C /= std::sqrt(C.determinant());
        Eigen::MatrixXd D = Eigen::MatrixXd::Zero(2, 2);
        D(0, 1) = U(rng);
        D(1, 0) = -D(0, 1);
        SplitBlockForm target{C, D};
        ApproxOptions opts;
        opts.eps = eps;
        opts.delta = delta;
        opts.seed = std::uint64_t(k + 1);
        ApproxResult r = approx_by_split_orbit(target, opts);
        const double best = t::torus_oracle(target, delta, 6);
        worst_ratio = std::max(worst_ratio, best > 0 ? r.err / best : (r.err > 0 ? 1e300 : 0));
        o.require(r.err <= eps, "err above eps");
        o.require(r.err <= 2 * best, "err above twice the oracle optimum");
        o.require(std::abs(r.Cprime.determinant() - 1) <= 1e-10 && (r.Cprime - C).cwiseAbs().maxCoeff() <= delta,
                  "Cprime constraint");
    }
    SplitBlockForm zero{Eigen::MatrixXd::Identity(2, 2), Eigen::MatrixXd::Zero(2, 2)};
    ApproxResult z = approx_by_split_orbit(zero, ApproxOptions{});
    o.require(z.err == 0.0 && z.B == IntMatrix(2, 2), "D = 0 case");
    if (o.pass) {
        std::ostringstream s;
        s << "worst err/oracle ratio " << worst_ratio;
        o.detail = s.str();
    }
    return o;
}

// 7. Block action vs dense congruence on 1000 random instances.
Outcome ac7() {
    Outcome o;
    t::Rng rng(7007);
    std::uniform_real_distribution<double> U(-1, 1);
    double worst = 0, worst_pf = 0;
    for (int k = 0; k < 1000; ++k) {
        const std::size_t n = std::size_t(t::uniform(rng, 1, 4));
        const auto ni = Eigen::Index(n);
        Eigen::MatrixXd C;
        do C = Eigen::MatrixXd::Identity(ni, ni) + 0.4 * Eigen::MatrixXd::NullaryExpr(ni, ni, [&] { return U(rng); });
        while (C.determinant() < 0.1);
        C /= std::pow(C.determinant(), 1.0 / double(n));
        Eigen::MatrixXd D = Eigen::MatrixXd::NullaryExpr(ni, ni, [&] { return U(rng); });
        D = (D - D.transpose()).eval();
        IntMatrix B(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) B(i, j) = t::uniform(rng, -5, 5);
        IntegralShear g{B, t::random_elementary_product(n, rng, 4)};
        SplitBlockForm f{C, D};
        SplitBlockForm a = act(g, f);
        worst = std::max(worst, (from_blocks(a) - congruence(g, from_blocks(f))).cwiseAbs().maxCoeff());
        worst_pf = std::max(worst_pf, std::abs(pfaffian(from_blocks(a)) - pfaffian(from_blocks(f))));
    }
    o.require(worst <= 1e-12, "block vs dense deviation too large");
    o.require(worst_pf <= 1e-10, "Pfaffian drift too large");
    std::ostringstream s;
    s << "max deviation " << worst << ", max Pfaffian drift " << worst_pf;
    if (o.pass) o.detail = s.str();
    else o.detail += " (" + s.str() + ")";
    return o;
}

// 8. Exterior square: homomorphism, isometries of the wedge lattice, base change to U^3.
Outcome ac8() {
    Outcome o;
    t::Rng rng(8008);
    const QuadLattice W = wedge_gram();
    for (int k = 0; k < 200; ++k) {
        IntMatrix a = t::random_sl(4, rng, 3), b = t::random_sl(4, rng, 3);
        Isometry wa = wedge_square_action(a), wb = wedge_square_action(b);
        o.require(wedge_square_action(a * b).matrix() == wa.matrix() * wb.matrix(), "not a homomorphism");
        o.require(preserves_gram(W, wa.matrix()) && preserves_gram(W, wb.matrix()), "not an isometry");
    }
    const IntMatrix P = wedge_hyperbolic_basis();
    o.require(abs(determinant(P)) == 1 && P.transpose() * W.gram() * P == t4_model().gram(), "base change to U^3");
    return o;
}

// 9. Irrationality decisions in t4.
Outcome ac9() {
    Outcome o;
    auto L = share(t4_model());
    const LatticeVector u = unit_vector(6, 0);
    const Symbol sqrt2{"sqrt2", std::sqrt(2.0)};
    const SymbolicRealVector two = t::t4_two_symbol_y();
    const LatticeVector x2y2 = unit_vector(6, 2) + unit_vector(6, 3);
    // (1 + sqrt2) x2 has (y, y) = 0, outside the positive-norm domain; the
    // rank-1 case is exercised on (1 + sqrt2)(x2 + y2).
    const SymbolicRealVector one = SymbolicRealVector::combination({sqrt2}, {x2y2, x2y2});
    o.require(is_u_orthoirrational(*L, u, two), "rank-2 symbol matrix should be u-orthoirrational");
    o.require(!is_u_orthoirrational(*L, u, one), "rank-1 symbol matrix should not be u-orthoirrational");
    bool rejected = false;
    try {
        is_u_orthoirrational(*L, u, SymbolicRealVector::combination({sqrt2}, {unit_vector(6, 2), unit_vector(6, 2)}));
    } catch (const NonPositiveNorm&) {
        rejected = true;
    }
    o.require(rejected, "(1 + sqrt2) x2 should be rejected for nonpositive norm");

    const SymbolicRealVector rat = SymbolicRealVector::rational(x2y2);
    auto cert = certify_orthoisotropic_irrational(*L, rat, 1);
    o.require(cert.verdict == Verdict::RefutedWithWitness && cert.witness_u &&
                  !is_u_orthoirrational(*L, *cert.witness_u, rat),
              "rational y should be refuted with a checkable witness");

    auto gens = gu_lattice_generators(L, u);
    t::Rng rng(9009);
    for (int k = 0; k < 20; ++k) {
        Isometry g = Isometry::identity(L);
        for (int j = 0; j < 4; ++j) g = compose(g, gens[std::size_t(t::uniform(rng, 0, long(gens.size()) - 1))]);
        if (t::uniform(rng, 0, 1)) g = invert(g);
        o.require(apply(g, u) == u, "stabilizer element moved u");
        o.require(is_u_orthoirrational(*L, u, two.transformed(g.matrix())) &&
                      !is_u_orthoirrational(*L, u, one.transformed(g.matrix())),
                  "verdict changed under a stabilizer element");
        auto moved = certify_orthoisotropic_irrational(*L, rat.transformed(g.matrix()), 1);
        o.require(moved.verdict == Verdict::RefutedWithWitness ||
                      (moved.verdict == Verdict::Inconclusive && moved.isotropic_found == 0),
                  "rational verdict changed under a stabilizer element");
    }
    return o;
}

std::string explore_csv(const QuadLattice& L, const LatticeVector& u, const HyperboloidPoint& y0,
                        const std::vector<HyperboloidPoint>& ts, const ExploreOptions& opts, ExploreResult* keep) {
    ExploreResult r = explore(L, u, y0, ts, opts);
    std::ostringstream os;
    write_density_csv(os, r.records);
    if (keep) *keep = std::move(r);
    return os.str();
}

// 10. Explorer properties at depth 8 in t4 with u = x1.
Outcome ac10() {
    Outcome o;
    const QuadLattice L = t4_model();
    const LatticeVector u = unit_vector(6, 0);
    const SymbolicRealVector y = t::t4_two_symbol_y();
    const HyperboloidPoint y0 = project_to_hyperboloid(L, u, y.approx());
    t::Rng rng(10010);
    std::vector<HyperboloidPoint> ts;
    for (int k = 0; k < 10; ++k) ts.push_back(t::random_hyperboloid_point(L, u, rng));
    ExploreOptions opts;
    opts.depth = 8;
    opts.seed = 1;
    opts.parallel = false;
    ExploreResult r;
    const std::string first = explore_csv(L, u, y0, ts, opts, &r);
    const std::string second = explore_csv(L, u, y0, ts, opts, nullptr);
    o.require(first == second, "single-thread reruns differ");
    const std::size_t nt = ts.size();
    for (std::size_t i = nt; i < r.records.size(); ++i)
        o.require(r.records[i].min_dist <= r.records[i - nt].min_dist, "min_dist increased");
    o.require(r.max_norm_defect <= 1e-8 && r.max_perp_defect <= 1e-8, "hyperboloid invariant violated");
    auto median_at = [&](int depth) {
        std::vector<double> v;
        for (const auto& rec : r.records)
            if (rec.depth == depth) v.push_back(rec.min_dist);
        std::sort(v.begin(), v.end());
        return (v[nt / 2 - 1] + v[nt / 2]) / 2;
    };
    const double m2 = median_at(2), m8 = median_at(8);
    o.require(m8 < m2, "no improvement from depth 2 to depth 8");
    std::ostringstream s;
    s << "median min_dist depth 2: " << m2 << ", depth 8: " << m8 << ", visited " << r.visited;
    if (o.pass) o.detail = s.str();
    return o;
}

}  // namespace

int main() {
    struct Criterion {
        const char* id;
        const char* title;
        double budget_s;
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> criteria{
        {"AC1", "lattice invariants of t4_model and k3_model", 1, ac1},
        {"AC2", "hyperbolic splitting suite", 30, ac2},
        {"AC3", "rank drop and rank-7 certificate", 30, ac3},
        {"AC4", "transvection suite", 10, ac4},
        {"AC5", "isotropic transitivity", 300, ac5},
        {"AC6", "torus solver vs exhaustive oracle", 300, ac6},
        {"AC7", "block action vs dense congruence", 10, ac7},
        {"AC8", "exterior-square bridge", 10, ac8},
        {"AC9", "irrationality decisions", 30, ac9},
        {"AC10", "explorer properties", 300, ac10},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail = std::string("exception: ") + e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (o.pass && secs > c.budget_s) {
            o.pass = false;
            o.detail = "time budget exceeded";
        }
        failed += !o.pass;
        std::printf("%s %s: %s (%.2fs / %.0fs)%s%s\n", o.pass ? "PASS" : "FAIL", c.id, c.title, secs, c.budget_s,
                    o.detail.empty() ? "" : " - ", o.detail.c_str());
        std::fflush(stdout);
    }
    return failed == 0 ? 0 : 1;
}
