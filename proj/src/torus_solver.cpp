// Copyright (C) 2026 orbitlab authors
// SPDX-License-Identifier: Apache-2.0

#include <omp.h>

#include <cmath>
#include <random>

#include "orbitlab/lll.hpp"
#include "orbitlab/torus_forms.hpp"

namespace orbitlab {

namespace detail {

namespace {

Eigen::MatrixXd perturbed(const Eigen::MatrixXd& C, double delta, std::uint64_t seed, int round) {
    if (round == 0 || delta == 0.0) return C;
    std::mt19937_64 rng(seed * 0x9E3779B97F4A7C15ULL + static_cast<std::uint64_t>(round));
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    const auto n = C.rows();
    Eigen::MatrixXd E(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j) E(i, j) = dist(rng);
    double mag = delta;
    for (int attempt = 0; attempt < 60; ++attempt, mag *= 0.5) {
        Eigen::MatrixXd Cp = C + mag * E;
        const double det = Cp.determinant();
        if (det <= 0) continue;
        Cp *= std::pow(det, -1.0 / static_cast<double>(n));
        if ((Cp - C).cwiseAbs().maxCoeff() <= delta) return Cp;
    }
    return C;
}

// Strict upper entries of a skew matrix, row-major.
std::vector<std::pair<Eigen::Index, Eigen::Index>> upper_pairs(Eigen::Index n) {
    std::vector<std::pair<Eigen::Index, Eigen::Index>> p;
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = i + 1; j < n; ++j) p.emplace_back(i, j);
    return p;
}

IntMatrix closest_shear(const Eigen::MatrixXd& Cp, const Eigen::MatrixXd& D, long double mu) {
    const auto n = Cp.rows();
    const auto N = n * n;
    const auto pairs = upper_pairs(n);
    const auto m = static_cast<Eigen::Index>(pairs.size());
    LdMatrix rows = LdMatrix::Zero(N, N + m);
    for (Eigen::Index a = 0; a < n; ++a)
        for (Eigen::Index b = 0; b < n; ++b) {
            const Eigen::Index k = a * n + b;
            rows(k, k) = mu;
            // skew(C E_ab) at (i, j) = C_ia [j == b] - C_ja [i == b]
            for (Eigen::Index p = 0; p < m; ++p) {
                const auto [i, j] = pairs[static_cast<std::size_t>(p)];
                long double v = 0;
                if (j == b) v += Cp(i, a);
                if (i == b) v -= Cp(j, a);
                rows(k, N + p) = v / mu;
            }
        }
    LdVector target = LdVector::Zero(N + m);
    for (Eigen::Index p = 0; p < m; ++p) {
        const auto [i, j] = pairs[static_cast<std::size_t>(p)];
        target(N + p) = static_cast<long double>(D(i, j)) / mu;
    }
    LllResult red = lll_reduce(rows);
    LdVector c = babai_nearest_plane(red.basis, target);
    LdVector coeffs = red.transform.transpose() * c;
    IntMatrix B(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
    for (Eigen::Index a = 0; a < n; ++a)
        for (Eigen::Index b = 0; b < n; ++b)
            B(static_cast<std::size_t>(a), static_cast<std::size_t>(b)) = static_cast<long>(std::llround(coeffs(a * n + b)));
    return B;
}

bool lex_less(const IntMatrix& a, const IntMatrix& b) {
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (a(i, j) != b(i, j)) return a(i, j) < b(i, j);
    return false;
}

}  // namespace

bool better(const ApproxResult& a, const ApproxResult& b) {
    if (a.err != b.err) return a.err < b.err;
    return lex_less(a.B, b.B);
}

void check_options(const ApproxOptions& opts) {
    if (!(opts.eps > 0) || !std::isfinite(opts.eps)) throw InvalidTolerance("eps must be positive and finite");
    if (!(opts.delta >= 0) || !std::isfinite(opts.delta)) throw InvalidTolerance("delta must be nonnegative and finite");
    if (opts.budget < 1) throw InvalidTolerance("budget must be at least 1");
    if (!(opts.mu_min > 0) || opts.mu_min > 1) throw InvalidTolerance("mu_min must lie in (0, 1]");
}

ApproxResult approx_round(const SplitBlockForm& target, const ApproxOptions& opts, int round) {
    ApproxResult best;
    best.Cprime = perturbed(target.C, opts.delta, opts.seed, round);
    const auto n = static_cast<std::size_t>(target.C.rows());
    best.B = IntMatrix(n, n);
    best.err = split_orbit_error(best.Cprime, best.B, target.D);
    for (long double mu = 1.0L; mu >= opts.mu_min && best.err > opts.stop_err; mu *= 0.5L) {
        ApproxResult cand{best.Cprime, closest_shear(best.Cprime, target.D, mu), 0.0, 0};
        cand.err = split_orbit_error(cand.Cprime, cand.B, target.D);
        if (better(cand, best)) best = std::move(cand);
    }
    return best;
}

ApproxResult finish(ApproxResult best, const ApproxOptions& opts, int rounds) {
    best.rounds = rounds;
    if (!(best.err <= opts.eps)) throw DidNotConverge("no split-orbit approximation within eps", std::move(best));
    return best;
}

namespace {

bool is_trivial(const SplitBlockForm& target) { return target.D.cwiseAbs().maxCoeff() == 0.0; }

ApproxResult trivial(const SplitBlockForm& target) {
    const auto n = static_cast<std::size_t>(target.C.rows());
    return ApproxResult{target.C, IntMatrix(n, n), 0.0, 0};
}

int effective_budget(const ApproxOptions& opts) { return opts.delta > 0 ? opts.budget : 1; }

}  // namespace

}  // namespace detail

ApproxResult approx_by_split_orbit_serial(const SplitBlockForm& target, const ApproxOptions& opts) {
    detail::check_options(opts);
    validate(target);
    if (detail::is_trivial(target)) return detail::trivial(target);
    const int budget = detail::effective_budget(opts);
    ApproxResult best;
    int r = 0;
    for (; r < budget; ++r) {
        ApproxResult cand = detail::approx_round(target, opts, r);
        if (r == 0 || detail::better(cand, best)) best = std::move(cand);
        if (best.err <= opts.stop_err) {
            ++r;
            break;
        }
    }
    return detail::finish(std::move(best), opts, r);
}

// All rounds are evaluated concurrently; the reduction replays the serial
// loop, including its early exit, so both variants return the same result.
ApproxResult approx_by_split_orbit(const SplitBlockForm& target, const ApproxOptions& opts) {
    detail::check_options(opts);
    validate(target);
    if (detail::is_trivial(target)) return detail::trivial(target);
    const int budget = detail::effective_budget(opts);
    std::vector<ApproxResult> results(static_cast<std::size_t>(budget));
#pragma omp parallel for schedule(dynamic, 1)
    for (int r = 0; r < budget; ++r) results[static_cast<std::size_t>(r)] = detail::approx_round(target, opts, r);
    ApproxResult best;
    int r = 0;
    for (; r < budget; ++r) {
        auto& cand = results[static_cast<std::size_t>(r)];
        if (r == 0 || detail::better(cand, best)) best = std::move(cand);
        if (best.err <= opts.stop_err) {
            ++r;
            break;
        }
    }
    return detail::finish(std::move(best), opts, r);
}

}  // namespace orbitlab
