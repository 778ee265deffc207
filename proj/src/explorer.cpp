// Copyright (C) 2026 orbitlab authors
// SPDX-License-Identifier: Apache-2.0

#include "orbitlab/explorer.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <set>

#include "orbitlab/error.hpp"
#include "orbitlab/isometry.hpp"

namespace orbitlab {

namespace {

Eigen::MatrixXd gram_d(const QuadLattice& L) {
    Eigen::MatrixXd G(L.rank(), L.rank());
    for (std::size_t i = 0; i < L.rank(); ++i)
        for (std::size_t j = 0; j < L.rank(); ++j) G(i, j) = L.gram()(i, j).get_d();
    return G;
}

Eigen::VectorXd vec_d(const LatticeVector& v) {
    Eigen::VectorXd out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out(i) = v[i].get_d();
    return out;
}

Eigen::MatrixXd mat_d(const IntMatrix& m) {
    Eigen::MatrixXd out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j).get_d();
    return out;
}

void check_size(const QuadLattice& L, const Eigen::VectorXd& v) {
    if (static_cast<std::size_t>(v.size()) != L.rank()) throw DimensionMismatch("point length does not match lattice rank");
}

// Householder-style reflection x -> x - 2 (x,a)/(a,a) a as a matrix.
Eigen::MatrixXd reflection(const Eigen::MatrixXd& G, const Eigen::VectorXd& a) {
    const double aa = a.dot(G * a);
    return Eigen::MatrixXd::Identity(a.size(), a.size()) - (2.0 / aa) * a * (G * a).transpose();
}

// Vector b with (b,u) = (b,w) = 0 and sign((b,b)) == sign, scaled to |(b,b)| = 1.
bool orthogonal_of_sign(const Eigen::MatrixXd& G, const Eigen::VectorXd& u, const Eigen::VectorXd& w, double sign,
                        Eigen::VectorXd& b) {
    Eigen::MatrixXd cons(2, G.rows());
    cons.row(0) = (G * u).transpose();
    cons.row(1) = (G * w).transpose();
    Eigen::FullPivLU<Eigen::MatrixXd> lu(cons);
    Eigen::MatrixXd K = lu.kernel();
    if (K.cols() == 0) return false;
    Eigen::HouseholderQR<Eigen::MatrixXd> qr(K);
    K = qr.householderQ() * Eigen::MatrixXd::Identity(K.rows(), K.cols());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(K.transpose() * G * K);
    const auto& ev = es.eigenvalues();
    Eigen::Index best = -1;
    for (Eigen::Index i = 0; i < ev.size(); ++i)
        if (sign * ev(i) > 1e-9 && (best < 0 || sign * ev(i) > sign * ev(best))) best = i;
    if (best < 0) return false;
    b = K * es.eigenvectors().col(best);
    b /= std::sqrt(std::abs(b.dot(G * b)));
    return true;
}

}  // namespace

HyperboloidPoint make_hyperboloid_point(const QuadLattice& L, const LatticeVector& u, const Eigen::VectorXd& v,
                                        double tol) {
    check_size(L, v);
    if (u.size() != L.rank()) throw DimensionMismatch("u length does not match lattice rank");
    const Eigen::MatrixXd G = gram_d(L);
    const double nn = v.dot(G * v);
    if (std::abs(nn - 1.0) > tol) throw NonPositiveNorm("point does not have unit norm");
    if (std::abs(v.dot(G * vec_d(u))) > tol) throw NotInPerp("point is not orthogonal to u");
    return HyperboloidPoint{v};
}

HyperboloidPoint project_to_hyperboloid(const QuadLattice& L, const LatticeVector& u, const Eigen::VectorXd& v) {
    check_size(L, v);
    if (u.size() != L.rank()) throw DimensionMismatch("u length does not match lattice rank");
    const Eigen::MatrixXd G = gram_d(L);
    Eigen::VectorXd w = v;
    if (!u.is_zero()) {
        const Eigen::VectorXd gu = G * vec_d(u);
        Eigen::Index i;
        gu.cwiseAbs().maxCoeff(&i);
        if (gu(i) == 0.0) throw DegenerateGram("u pairs trivially with every basis vector");
        // t = e_i, (t, u) = gu(i)
        w(i) -= v.dot(gu) / gu(i);
    }
    const double nn = w.dot(G * w);
    if (!(nn > 0.0)) throw NonPositiveNorm("component in u^perp has nonpositive norm");
    return HyperboloidPoint{w / std::sqrt(nn)};
}

Eigen::MatrixXd gu_real_transitive_move(const QuadLattice& L, const LatticeVector& u, const Eigen::VectorXd& y,
                                        const Eigen::VectorXd& yprime, double tol) {
    check_size(L, y);
    check_size(L, yprime);
    const Eigen::MatrixXd G = gram_d(L);
    const Eigen::VectorXd ud = vec_d(u);
    const double ny = y.dot(G * y), nyp = yprime.dot(G * yprime);
    if (std::abs(ny - nyp) > tol) throw LengthMismatch("y and y' have different norms");
    if (!(ny > tol)) throw NonPositiveNorm("y must be positive");
    if (std::abs(y.dot(G * ud)) > tol || std::abs(yprime.dot(G * ud)) > tol) throw NotInPerp("points must lie in u^perp");
    const std::size_t n = L.rank();
    if ((y - yprime).cwiseAbs().maxCoeff() == 0.0) return Eigen::MatrixXd::Identity(n, n);

    auto direct = [&](const Eigen::VectorXd& from, const Eigen::VectorXd& to, Eigen::MatrixXd& g) {
        const Eigen::VectorXd a = from - to;
        const double aa = a.dot(G * a);
        if (std::abs(aa) <= 1e-9 * std::max(1.0, a.squaredNorm())) return false;
        Eigen::VectorXd b;
        if (!orthogonal_of_sign(G, ud, to, aa > 0 ? 1.0 : -1.0, b)) return false;
        g = reflection(G, b) * reflection(G, a);
        return true;
    };

    Eigen::MatrixXd g;
    if (direct(y, yprime, g)) return g;
    // a = y - y' is isotropic: route through an intermediate unit point.
    Eigen::VectorXd c;
    for (double sign : {1.0, -1.0}) {
        if (!orthogonal_of_sign(G, ud, y, sign, c)) continue;
        for (double t : {0.5, 1.0, 2.0}) {
            Eigen::VectorXd mid = y + t * c;
            const double nm = mid.dot(G * mid);
            if (!(nm > 0)) continue;
            mid *= std::sqrt(ny / nm);
            Eigen::MatrixXd g1, g2;
            if (direct(y, mid, g1) && direct(mid, yprime, g2)) return g2 * g1;
        }
    }
    throw DegenerateConfiguration("could not find reflection pair for the transitive move");
}

// ---------------------------------------------------------------------------

namespace {

using detail::LdMat;
using detail::LdVec;

using Key = std::vector<long long>;

Key key_of(const LdVec& v, long double tol) {
    Key k(static_cast<std::size_t>(v.size()));
    for (Eigen::Index i = 0; i < v.size(); ++i) k[static_cast<std::size_t>(i)] = std::llround(v(i) / tol);
    return k;
}

std::uint64_t splitmix(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

std::uint64_t seeded_hash(const Key& k, std::uint64_t seed) {
    std::uint64_t h = splitmix(seed);
    for (long long c : k) h = splitmix(h ^ static_cast<std::uint64_t>(c));
    return h;
}

ExploreResult run(const QuadLattice& L, const LatticeVector& u, std::vector<LdMat> gens, const HyperboloidPoint& y0,
                  const std::vector<HyperboloidPoint>& targets, const ExploreOptions& opts) {
    if (gens.empty()) throw EmptyGeneratorSet("no generators to explore with");
    if (opts.depth < 0) throw InvalidTolerance("depth must be nonnegative");
    if (!(opts.dedup_tol > 0)) throw InvalidTolerance("dedup_tol must be positive");
    if (!(opts.norm_cap > 0)) throw InvalidTolerance("norm_cap must be positive");
    if (opts.max_frontier == 0) throw InvalidTolerance("max_frontier must be positive");

    const LdMat G = gram_d(L).cast<long double>();
    const LdVec ud = vec_d(u).cast<long double>();
    std::vector<LdVec> tgt;
    for (const auto& t : targets) tgt.push_back(t.coords.cast<long double>());

    ExploreResult res;
    std::set<Key> seen;
    std::vector<long double> best(tgt.size(), std::numeric_limits<long double>::infinity());

    auto visit = [&](const LdVec& p) {
        res.max_norm_defect = std::max(res.max_norm_defect, static_cast<double>(std::fabs(p.dot(G * p) - 1.0L)));
        res.max_perp_defect = std::max(res.max_perp_defect, static_cast<double>(std::fabs(p.dot(G * ud))));
        res.max_coordinate = std::max(res.max_coordinate, static_cast<double>(p.cwiseAbs().maxCoeff()));
        for (std::size_t t = 0; t < tgt.size(); ++t) best[t] = std::min(best[t], (p - tgt[t]).norm());
    };
    auto emit = [&](int depth) {
        for (std::size_t t = 0; t < tgt.size(); ++t)
            res.records.push_back(DensityRecord{depth, static_cast<int>(t), static_cast<double>(best[t]), seen.size()});
    };

    std::vector<LdVec> frontier{y0.coords.cast<long double>()};
    seen.insert(key_of(frontier[0], opts.dedup_tol));
    visit(frontier[0]);
    emit(0);

    for (int d = 1; d <= opts.depth; ++d) {
        std::vector<LdVec> images = opts.parallel ? detail::expand_frontier_omp(frontier, gens)
                                                  : detail::expand_frontier_serial(frontier, gens);
        struct Cand {
            long double height;
            std::uint64_t tie;
            std::size_t index;
            Key key;
        };
        std::vector<Cand> cands;
        for (std::size_t i = 0; i < images.size(); ++i) {
            const long double h = images[i].cwiseAbs().maxCoeff();
            if (!(h <= opts.norm_cap)) continue;
            Key k = key_of(images[i], opts.dedup_tol);
            if (!seen.insert(k).second) continue;
            cands.push_back(Cand{h, 0, i, std::move(k)});
        }
        if (cands.size() > opts.max_frontier) {
            for (auto& c : cands) c.tie = seeded_hash(c.key, opts.seed);
            std::sort(cands.begin(), cands.end(), [](const Cand& a, const Cand& b) {
                if (a.height != b.height) return a.height < b.height;
                if (a.tie != b.tie) return a.tie < b.tie;
                return a.key < b.key;
            });
            cands.resize(opts.max_frontier);
            std::sort(cands.begin(), cands.end(), [](const Cand& a, const Cand& b) { return a.index < b.index; });
        }
        std::vector<LdVec> next;
        next.reserve(cands.size());
        for (const auto& c : cands) {
            visit(images[c.index]);
            next.push_back(std::move(images[c.index]));
        }
        frontier = std::move(next);
        emit(d);
    }
    res.visited = seen.size();
    return res;
}

}  // namespace

ExploreResult explore(const QuadLattice& L, const LatticeVector& u, const HyperboloidPoint& y0,
                      const std::vector<HyperboloidPoint>& targets, const ExploreOptions& opts) {
    auto Lp = std::make_shared<const QuadLattice>(L);
    std::vector<Isometry> iso = gu_lattice_generators(Lp, u);
    std::vector<LdMat> gens;
    for (const auto& g : iso) {
        gens.push_back(mat_d(g.matrix()).cast<long double>());
        gens.push_back(mat_d(invert(g).matrix()).cast<long double>());
    }
    return run(L, u, std::move(gens), y0, targets, opts);
}

ExploreResult explore_with_generators(const QuadLattice& L, const LatticeVector& u,
                                      const std::vector<Eigen::MatrixXd>& generators, const HyperboloidPoint& y0,
                                      const std::vector<HyperboloidPoint>& targets, const ExploreOptions& opts) {
    std::vector<LdMat> gens;
    for (const auto& g : generators) {
        if (static_cast<std::size_t>(g.rows()) != L.rank() || g.rows() != g.cols())
            throw DimensionMismatch("generator has the wrong shape");
        LdMat gl = g.cast<long double>();
        gens.push_back(gl);
        gens.push_back(gl.inverse());
    }
    return run(L, u, std::move(gens), y0, targets, opts);
}

std::vector<std::string> density_caveats() {
    return {
        "distances are coordinate-Euclidean and not invariant under the isometry group",
        "generators are a finite non-exhaustive subset of the stabilizer of u; the subgroup they generate may be proper",
        "stagnating min_dist is not evidence against density",
        "points with a coordinate above the norm cap are pruned; frontiers are truncated to the lowest points",
    };
}

void write_density_csv(std::ostream& os, const std::vector<DensityRecord>& records) {
    for (const auto& c : density_caveats()) os << "# " << c << '\n';
    os << "depth,target_id,min_dist,orbit_size\n";
    char buf[64];
    for (const auto& r : records) {
        std::snprintf(buf, sizeof buf, "%.17g", r.min_dist);
        os << r.depth << ',' << r.target_id << ',' << buf << ',' << r.orbit_size << '\n';
    }
}

}  // namespace orbitlab
