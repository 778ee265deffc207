// Copyright (C) 2026 orbitlab authors
// SPDX-License-Identifier: Apache-2.0

#include "orbitlab/cli.hpp"

#include <omp.h>

#include <CLI11.hpp>
#include <functional>
#include <ostream>
#include <random>

#include "orbitlab/error.hpp"
#include "orbitlab/explorer.hpp"
#include "orbitlab/irrationality.hpp"
#include "orbitlab/isometry.hpp"
#include "orbitlab/json_io.hpp"
#include "orbitlab/torus_forms.hpp"

namespace orbitlab::cli {

namespace {

using io::json;

const char* kIndependenceAssumption =
    "non-unit symbols are assumed linearly independent over Q together with 1; this is not verified";

struct LatticeSource {
    std::string model;
    std::string lattice;

    void attach(CLI::App* app) {
        app->add_option("--model", model, "Standard lattice: k3, t4, u, e8, span4, wedge");
        app->add_option("--lattice", lattice, "Lattice JSON {\"rank\",\"gram\"} (inline or file)");
    }

    QuadLattice get() const {
        if (!lattice.empty()) return io::lattice_from(io::load(lattice));
        if (model == "k3") return k3_model();
        if (model == "t4") return t4_model();
        if (model == "u") return hyperbolic();
        if (model == "e8") return e8_minus();
        if (model == "span4") return span4();
        if (model == "wedge") return wedge_gram();
        if (model.empty()) throw io::ParseError("one of --model or --lattice is required");
        throw io::ParseError("unknown model '" + model + "'");
    }

    LatticePtr ptr() const { return std::make_shared<const QuadLattice>(get()); }
};

void check_vector(const QuadLattice& L, const LatticeVector& v, const char* name) {
    if (v.size() != L.rank()) throw DimensionMismatch(std::string(name) + " length does not match lattice rank");
}

class Runner {
public:
    Runner(std::ostream& out) : out_(out) {}

    void emit(const json& j) { out_ << j.dump(2) << '\n'; }

    void build(CLI::App& app) {
        build_lattice(app);
        build_isom(app);
        build_irr(app);
        build_torus(app);
        build_explore(app);
    }

    bool single_thread = false;

private:
    std::ostream& out_;
    std::vector<std::unique_ptr<LatticeSource>> sources_;

    LatticeSource* source(CLI::App* app) {
        sources_.push_back(std::make_unique<LatticeSource>());
        sources_.back()->attach(app);
        return sources_.back().get();
    }

    // -- lattice ------------------------------------------------------------

    void build_lattice(CLI::App& app) {
        auto* grp = app.add_subcommand("lattice", "Quadratic lattice algebra");
        grp->require_subcommand(1);

        auto* info = grp->add_subcommand("info", "Rank, signature, parity and unimodularity");
        auto* s_info = source(info);
        info->callback([this, s_info] {
            QuadLattice L = s_info->get();
            Signature sg = signature(L);
            emit(json{{"rank", L.rank()},
                      {"signature", {sg.p, sg.q}},
                      {"even", is_even(L)},
                      {"unimodular", is_unimodular(L)}});
        });

        auto* inner_cmd = grp->add_subcommand("inner", "Pairing (v, w)");
        auto* s_inner = source(inner_cmd);
        auto* v_arg = new std::string;
        auto* w_arg = new std::string;
        hold(v_arg);
        hold(w_arg);
        inner_cmd->add_option("--v", *v_arg, "Vector JSON")->required();
        inner_cmd->add_option("--w", *w_arg, "Vector JSON")->required();
        inner_cmd->callback([this, s_inner, v_arg, w_arg] {
            QuadLattice L = s_inner->get();
            LatticeVector v = io::vector_from(io::load(*v_arg)), w = io::vector_from(io::load(*w_arg));
            check_vector(L, v, "v");
            check_vector(L, w, "w");
            emit(json{{"inner", io::to_json(inner(L, v, w))}});
        });

        auto* split = grp->add_subcommand("split", "Split off the hyperbolic plane at a primitive isotropic u");
        auto* s_split = source(split);
        auto* u_split = str();
        split->add_option("--u", *u_split, "Primitive isotropic vector JSON")->required();
        split->callback([this, s_split, u_split] {
            QuadLattice L = s_split->get();
            LatticeVector u = io::vector_from(io::load(*u_split));
            check_vector(L, u, "u");
            HyperbolicSplit hs = split_hyperbolic(L, u);
            QuadLattice Lp = induced_lattice(L, hs.lprime);
            Signature sg = signature(Lp);
            json o{{"z", io::to_json(hs.z)}, {"Lprime", io::to_json(hs.lprime)}};
            o["Lprime"]["gram"] = io::to_json(Lp.gram());
            o["Lprime"]["signature"] = {sg.p, sg.q};
            emit(o);
        });

        auto* ortho = grp->add_subcommand("ortho", "Orthogonal complement of a set of vectors");
        auto* s_ortho = source(ortho);
        auto* vecs = str();
        ortho->add_option("--vectors", *vecs, "List of vectors JSON")->required();
        ortho->callback([this, s_ortho, vecs] {
            QuadLattice L = s_ortho->get();
            auto S = io::vectors_from(io::load(*vecs));
            for (const auto& v : S) check_vector(L, v, "vector");
            Sublattice P = orthogonal_sublattice(L, S);
            json o = io::to_json(P);
            o["rank"] = P.rank();
            emit(o);
        });

        auto* sat = grp->add_subcommand("saturate", "Saturation of a sublattice of Z^n");
        auto* sub_sat = str();
        auto* dim_sat = new std::size_t(0);
        hold(dim_sat);
        sat->add_option("--sublattice", *sub_sat, "Sublattice JSON {\"basis\": [...]}")->required();
        sat->add_option("--dim", *dim_sat, "Ambient dimension (default: length of the basis vectors)");
        sat->callback([this, sub_sat, dim_sat] {
            Sublattice S = parse_sublattice(*sub_sat, *dim_sat);
            emit(io::to_json(saturation(QuadLattice(IntMatrix::identity(S.ambient_dim())), S)));
        });

        auto* ext = grp->add_subcommand("extend", "Extend a saturated basis to a unimodular matrix");
        auto* sub_ext = str();
        auto* dim_ext = new std::size_t(0);
        hold(dim_ext);
        ext->add_option("--sublattice", *sub_ext, "Sublattice JSON {\"basis\": [...]}")->required();
        ext->add_option("--dim", *dim_ext, "Ambient dimension (default: length of the basis vectors)");
        ext->callback([this, sub_ext, dim_ext] {
            IntMatrix M = extend_to_unimodular_basis(parse_sublattice(*sub_ext, *dim_ext));
            emit(json{{"matrix", io::to_json(M)}, {"determinant", io::to_json(determinant(M))}});
        });
    }

    Sublattice parse_sublattice(const std::string& arg, std::size_t dim) {
        json j = io::load(arg);
        auto rows = io::vectors_from(j.is_object() ? j.at("basis") : j);
        if (dim == 0) {
            if (rows.empty()) throw io::ParseError("--dim is required for an empty basis");
            dim = rows[0].size();
        }
        for (const auto& r : rows)
            if (r.size() != dim) throw DimensionMismatch("basis vector length does not match the ambient dimension");
        return Sublattice(dim, std::move(rows));
    }

    // -- isom -----------------------------------------------------------------

    void build_isom(CLI::App& app) {
        auto* grp = app.add_subcommand("isom", "Lattice isometries");
        grp->require_subcommand(1);

        auto* tv = grp->add_subcommand("transvect", "Eichler transvection E_{e,a}");
        auto* s_tv = source(tv);
        auto* e_arg = str();
        auto* a_arg = str();
        tv->add_option("--e", *e_arg, "Isotropic vector JSON")->required();
        tv->add_option("--a", *a_arg, "Vector orthogonal to e")->required();
        tv->callback([this, s_tv, e_arg, a_arg] {
            LatticePtr L = s_tv->ptr();
            Isometry g = eichler_transvection(L, io::vector_from(io::load(*e_arg)), io::vector_from(io::load(*a_arg)));
            json o = io::to_json(g);
            o["so_plus"] = is_in_so_plus(g);
            emit(o);
        });

        auto* mi = grp->add_subcommand("map-isotropic", "Element of SO+(L) mapping u to v");
        auto* s_mi = source(mi);
        auto* u_mi = str();
        auto* v_mi = str();
        mi->add_option("--u", *u_mi, "Primitive isotropic vector JSON")->required();
        mi->add_option("--v", *v_mi, "Primitive isotropic vector JSON")->required();
        mi->callback([this, s_mi, u_mi, v_mi] {
            LatticePtr L = s_mi->ptr();
            Isometry g = map_isotropic(L, io::vector_from(io::load(*u_mi)), io::vector_from(io::load(*v_mi)));
            json o = io::to_json(g);
            o["so_plus"] = is_in_so_plus(g);
            emit(o);
        });

        auto* chk = grp->add_subcommand("check", "Isometry and stabilizer-shape predicates");
        auto* s_chk = source(chk);
        auto* m_chk = str();
        auto* u_chk = str();
        auto* y_chk = str();
        chk->add_option("--isometry", *m_chk, "Isometry JSON {\"matrix\": [...]}")->required();
        chk->add_option("--u", *u_chk, "Primitive isotropic vector for G_u / radical predicates");
        chk->add_option("--y", *y_chk, "Symbolic vector for H_y / K_y predicates (needs --u)");
        chk->callback([this, s_chk, m_chk, u_chk, y_chk] {
            LatticePtr L = s_chk->ptr();
            IntMatrix M = io::isometry_matrix_from(io::load(*m_chk));
            json o{{"preserves_gram", preserves_gram(*L, M)}};
            if (!o["preserves_gram"].get<bool>()) {
                emit(o);
                return;
            }
            Isometry g(L, M);
            Integer det = g.determinant();
            o["determinant"] = io::to_json(det);
            o["so_plus"] = det == 1 ? json(is_in_so_plus(g)) : json(nullptr);
            if (!u_chk->empty()) {
                LatticeVector u = io::vector_from(io::load(*u_chk));
                check_vector(*L, u, "u");
                o["in_Gu"] = is_in_Gu(g, u);
                o["in_unipotent_radical"] = is_in_unipotent_radical(g, adapted_integral_basis(*L, u));
                if (!y_chk->empty()) {
                    SymbolicRealVector y = io::symbolic_from(io::load(*y_chk));
                    o["in_Hy"] = is_in_Hy(g, u, y);
                    o["in_Ky"] = is_in_Ky(g, u, y);
                }
            } else if (!y_chk->empty()) {
                throw io::ParseError("--y requires --u");
            }
            emit(o);
        });

        auto* gen = grp->add_subcommand("generators", "Finite generator subset of the stabilizer of u");
        auto* s_gen = source(gen);
        auto* u_gen = str();
        gen->add_option("--u", *u_gen, "Primitive isotropic vector JSON")->required();
        gen->callback([this, s_gen, u_gen] {
            LatticePtr L = s_gen->ptr();
            auto gens = gu_lattice_generators(L, io::vector_from(io::load(*u_gen)));
            json arr = json::array();
            for (const auto& g : gens) arr.push_back(io::to_json(g));
            emit(json{{"count", gens.size()}, {"generators", arr}});
        });
    }

    // -- irr ----------------------------------------------------------------

    void build_irr(CLI::App& app) {
        auto* grp = app.add_subcommand("irr", "Orthoirrationality decisions for symbolic vectors");
        grp->require_subcommand(1);

        auto* cu = grp->add_subcommand("check-u", "Is y u-orthoirrational?");
        auto* s_cu = source(cu);
        auto* u_cu = str();
        auto* y_cu = str();
        auto* prec_cu = num<long>(128);
        cu->add_option("--u", *u_cu, "Primitive isotropic vector JSON")->required();
        cu->add_option("--y", *y_cu, "Symbolic vector JSON")->required();
        cu->add_option("--precision", *prec_cu, "Interval precision in bits");
        cu->callback([this, s_cu, u_cu, y_cu, prec_cu] {
            QuadLattice L = s_cu->get();
            LatticeVector u = io::vector_from(io::load(*u_cu));
            check_vector(L, u, "u");
            bool r = is_u_orthoirrational(L, u, io::symbolic_from(io::load(*y_cu)), *prec_cu);
            emit(json{{"u_orthoirrational", r}, {"assumption", kIndependenceAssumption}});
        });

        auto* ce = grp->add_subcommand("certify", "Orthoisotropic irrationality certificate");
        auto* s_ce = source(ce);
        auto* y_ce = str();
        auto* h_ce = num<long>(1);
        auto* prec_ce = num<long>(128);
        ce->add_option("--y", *y_ce, "Symbolic vector JSON")->required();
        ce->add_option("--height", *h_ce, "Height bound for the isotropic search");
        ce->add_option("--precision", *prec_ce, "Interval precision in bits");
        ce->callback([this, s_ce, y_ce, h_ce, prec_ce] {
            QuadLattice L = s_ce->get();
            auto cert = certify_orthoisotropic_irrational(L, io::symbolic_from(io::load(*y_ce)), *h_ce, *prec_ce);
            json o = io::to_json(cert);
            o["assumption"] = kIndependenceAssumption;
            emit(o);
        });

        auto* fi = grp->add_subcommand("find-isotropic", "Primitive isotropic vectors of y^perp up to a height");
        auto* s_fi = source(fi);
        auto* y_fi = str();
        auto* h_fi = num<long>(1);
        fi->add_option("--y", *y_fi, "Symbolic vector JSON")->required();
        fi->add_option("--height", *h_fi, "Height bound");
        fi->callback([this, s_fi, y_fi, h_fi] {
            QuadLattice L = s_fi->get();
            SymbolicRealVector y = io::symbolic_from(io::load(*y_fi));
            auto found = single_thread ? find_isotropic_orthogonal_serial(L, y, *h_fi) : find_isotropic_orthogonal(L, y, *h_fi);
            json arr = json::array();
            for (const auto& v : found) arr.push_back(io::to_json(v));
            emit(json{{"height", *h_fi}, {"count", found.size()}, {"vectors", arr}});
        });
    }

    // -- torus --------------------------------------------------------------

    void build_torus(CLI::App& app) {
        auto* grp = app.add_subcommand("torus", "Linear symplectic forms on tori");
        grp->require_subcommand(1);

        auto* bl = grp->add_subcommand("blocks", "Block decomposition [[0,-C^T],[C,D]] along (l, l')");
        auto* f_bl = str();
        auto* l_bl = str();
        auto* lp_bl = str();
        auto* norm_bl = num<bool>(false);
        auto* gb_bl = num<long>(0);
        bl->add_option("--form", *f_bl, "Skew matrix JSON")->required();
        bl->add_option("--l", *l_bl, "Basis of l (default: first n coordinates)");
        bl->add_option("--lprime", *lp_bl, "Basis of l' (default: last n coordinates)");
        bl->add_flag("--normalize", *norm_bl, "Rescale to Pfaffian 1 first");
        bl->add_option("--genericity-bound", *gb_bl, "Also search integer relations among entries of C^{-1}");
        bl->callback([this, f_bl, l_bl, lp_bl, norm_bl, gb_bl] {
            Eigen::MatrixXd w = io::real_matrix_from(io::load(*f_bl));
            if (w.rows() != w.cols() || w.rows() % 2) throw InvalidForm("form must be square of even size");
            if (*norm_bl) w = normalize_volume(w);
            const auto dim = static_cast<std::size_t>(w.rows()), n = dim / 2;
            Sublattice l = l_bl->empty() ? coordinate_block(dim, 0, n) : parse_sublattice(*l_bl, dim);
            Sublattice lp = lp_bl->empty() ? coordinate_block(dim, n, n) : parse_sublattice(*lp_bl, dim);
            SplitBlockForm f = to_blocks(w, l, lp);
            json o = io::to_json(f);
            o["pfaffian"] = pfaffian(w);
            o["split"] = f.D.cwiseAbs().maxCoeff() == 0.0;
            if (*gb_bl != 0) o["genericity"] = io::to_json(genericity_score(f.C, *gb_bl));
            emit(o);
        });

        auto* ac = grp->add_subcommand("act", "Pullback of a block form by an integral shear [[I,B],[0,A]]");
        auto* sh_ac = str();
        auto* t_ac = str();
        ac->add_option("--shear", *sh_ac, "Shear JSON {\"B\": [...], \"A\": [...]}")->required();
        ac->add_option("--target", *t_ac, "Block form JSON {\"C\": [...], \"D\": [...]}")->required();
        ac->callback([this, sh_ac, t_ac] {
            SplitBlockForm f = io::split_form_from(io::load(*t_ac));
            validate(f);
            SplitBlockForm r = act(io::shear_from(io::load(*sh_ac)), f);
            json o = io::to_json(r);
            o["pfaffian"] = r.C.determinant();
            emit(o);
        });

        auto* ap = grp->add_subcommand("approx", "Approximate a block form by a shear image of a split form");
        auto* t_ap = str();
        auto* opts = new ApproxOptions;
        hold(opts);
        ap->add_option("--target", *t_ap, "Block form JSON {\"C\": [...], \"D\": [...]}")->required();
        ap->add_option("--eps", opts->eps, "Target accuracy");
        ap->add_option("--delta", opts->delta, "Allowed perturbation of C");
        ap->add_option("--budget", opts->budget, "Perturbation rounds");
        ap->add_option("--seed", opts->seed, "Perturbation seed");
        ap->callback([this, t_ap, opts] {
            SplitBlockForm f = io::split_form_from(io::load(*t_ap));
            ApproxResult r = single_thread ? approx_by_split_orbit_serial(f, *opts) : approx_by_split_orbit(f, *opts);
            emit(io::to_json(r));
        });

        auto* wd = grp->add_subcommand("wedge", "Exterior square of SL(4,Z) acting on the wedge lattice");
        auto* g_wd = str();
        wd->add_option("--g", *g_wd, "4x4 integer matrix of det 1");
        wd->callback([this, g_wd] {
            json o{{"gram", io::to_json(wedge_gram().gram())}, {"basis", {"e12", "e13", "e14", "e23", "e24", "e34"}}};
            IntMatrix P = wedge_hyperbolic_basis();
            o["hyperbolic_basis"] = io::to_json(P);
            o["hyperbolic_gram"] = io::to_json(P.transpose() * wedge_gram().gram() * P);
            if (!g_wd->empty()) {
                Isometry W = wedge_square_action(io::matrix_from(io::load(*g_wd)));
                o["matrix"] = io::to_json(W.matrix());
                o["so_plus"] = is_in_so_plus(W);
            }
            emit(o);
        });
    }

    static Sublattice coordinate_block(std::size_t dim, std::size_t from, std::size_t count) {
        std::vector<LatticeVector> b;
        for (std::size_t i = 0; i < count; ++i) b.push_back(unit_vector(dim, from + i));
        return Sublattice(dim, std::move(b));
    }

    // -- explore ------------------------------------------------------------

    void build_explore(CLI::App& app) {
        auto* ex = app.add_subcommand("explore", "Nearest-approach statistics of an orbit on the hyperboloid u^perp,1");
        auto* s_ex = source(ex);
        auto* u_ex = str();
        auto* y0_ex = str();
        auto* tg_ex = str();
        auto* ntg_ex = num<int>(10);
        auto* fmt_ex = new std::string("csv");
        hold(fmt_ex);
        auto* project_ex = num<bool>(false);
        auto* opts = new ExploreOptions;
        hold(opts);
        ex->add_option("--u", *u_ex, "Primitive isotropic vector JSON (default: first basis vector)");
        ex->add_option("--y0", *y0_ex, "Start point: float list or symbolic vector JSON (default: seeded random)");
        ex->add_option("--targets", *tg_ex, "List of float vectors (default: seeded random)");
        ex->add_option("--random-targets", *ntg_ex, "Number of seeded random targets when --targets is absent");
        ex->add_option("--depth", opts->depth, "Breadth-first depth");
        ex->add_option("--seed", opts->seed, "Seed for random points and pruning tie-breaks");
        ex->add_option("--dedup-tol", opts->dedup_tol, "Deduplication grid");
        ex->add_option("--norm-cap", opts->norm_cap, "Prune points with a larger coordinate");
        ex->add_option("--max-frontier", opts->max_frontier, "Frontier size cap");
        ex->add_flag("--project", *project_ex, "Project inputs onto the hyperboloid instead of validating");
        ex->add_option("--format", *fmt_ex, "csv or json")->check(CLI::IsMember({"csv", "json"}));
        ex->callback([=, this] {
            if (s_ex->model.empty() && s_ex->lattice.empty()) s_ex->model = "t4";
            QuadLattice L = s_ex->get();
            LatticeVector u = u_ex->empty() ? unit_vector(L.rank(), 0) : io::vector_from(io::load(*u_ex));
            check_vector(L, u, "u");
            std::mt19937_64 rng(opts->seed);
            auto random_point = [&] {
                std::normal_distribution<double> nd;
                for (int attempt = 0; attempt < 1000; ++attempt) {
                    Eigen::VectorXd v(static_cast<Eigen::Index>(L.rank()));
                    for (Eigen::Index i = 0; i < v.size(); ++i) v(i) = nd(rng);
                    try {
                        return project_to_hyperboloid(L, u, v);
                    } catch (const NonPositiveNorm&) {
                    }
                }
                throw DegenerateConfiguration("could not sample a point of positive norm");
            };
            auto point = [&](const Eigen::VectorXd& v) {
                return *project_ex ? project_to_hyperboloid(L, u, v) : make_hyperboloid_point(L, u, v);
            };
            HyperboloidPoint y0 = random_point();
            if (!y0_ex->empty()) {
                json j = io::load(*y0_ex);
                y0 = point(j.is_object() ? io::symbolic_from(j).approx() : io::real_vector_from(j));
            }
            std::vector<HyperboloidPoint> targets;
            if (!tg_ex->empty()) {
                json j = io::load(*tg_ex);
                if (!j.is_array()) throw io::ParseError("--targets must be a list of vectors");
                for (const auto& t : j) targets.push_back(point(io::real_vector_from(t)));
            } else {
                for (int i = 0; i < *ntg_ex; ++i) targets.push_back(random_point());
            }
            ExploreOptions o = *opts;
            o.parallel = !single_thread;
            ExploreResult r = explore(L, u, y0, targets, o);
            if (*fmt_ex == "csv") {
                write_density_csv(out_, r.records);
                return;
            }
            json recs = json::array();
            for (const auto& d : r.records)
                recs.push_back({{"depth", d.depth}, {"target_id", d.target_id}, {"min_dist", d.min_dist}, {"orbit_size", d.orbit_size}});
            emit(json{{"caveats", density_caveats()},
                      {"records", recs},
                      {"visited", r.visited},
                      {"max_norm_defect", r.max_norm_defect},
                      {"max_perp_defect", r.max_perp_defect}});
        });
    }

    // Option storage must outlive parsing; CLI11 binds by reference.
    std::vector<std::shared_ptr<void>> storage_;

    template <class T>
    void hold(T* p) {
        storage_.emplace_back(p, [](void* q) { delete static_cast<T*>(q); });
    }
    std::string* str() {
        auto* s = new std::string;
        hold(s);
        return s;
    }
    template <class T>
    T* num(T init) {
        auto* p = new T(init);
        hold(p);
        return p;
    }
};

json error_json(const std::string& kind, const std::string& message) {
    return json{{"error", kind}, {"message", message}};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"orbitlab: integral lattices, isometries, and symplectic forms on tori"};
    app.require_subcommand(1);
    app.fallthrough();
    int threads = 0;
    Runner runner(out);
    app.add_option("--threads", threads, "OpenMP thread count");
    app.add_flag("--single-thread", runner.single_thread, "Serial kernels; bit-identical reruns");
    runner.build(app);
    app.parse_complete_callback([&] {
        if (runner.single_thread) omp_set_num_threads(1);
        else if (threads > 0) omp_set_num_threads(threads);
    });

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp& e) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << error_json("ParseError", e.what()).dump() << '\n';
        return 1;
    } catch (const DidNotConverge& e) {
        json j = error_json(e.kind(), e.what());
        j["incumbent"] = io::to_json(e.best());
        err << j.dump() << '\n';
        return 2;
    } catch (const DomainError& e) {
        err << error_json(e.kind(), e.what()).dump() << '\n';
        return 2;
    } catch (const io::ParseError& e) {
        err << error_json("ParseError", e.what()).dump() << '\n';
        return 1;
    } catch (const nlohmann::json::exception& e) {
        err << error_json("ParseError", e.what()).dump() << '\n';
        return 1;
    } catch (const std::exception& e) {
        err << error_json("InternalError", e.what()).dump() << '\n';
        return 1;
    }
    return 0;
}

}  // namespace orbitlab::cli
