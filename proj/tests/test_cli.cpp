// Copyright (C) 2026 orbitlab authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <fstream>
#include <json.hpp>
#include <sstream>

#include "orbitlab/cli.hpp"

using nlohmann::json;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
    json parsed() const { return json::parse(out); }
    json error() const { return json::parse(err); }
};

Outcome run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = orbitlab::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("lattice info") {
    Outcome r = run({"lattice", "info", "--model", "k3"});
    REQUIRE(r.code == 0);
    json j = r.parsed();
    CHECK(j["rank"] == 22);
    CHECK(j["signature"] == json::array({3, 19}));
    CHECK(j["even"] == true);
    CHECK(j["unimodular"] == true);
    json s4 = run({"lattice", "info", "--lattice", R"({"rank":1,"gram":[[4]]})"}).parsed();
    CHECK(s4["unimodular"] == false);
}

TEST_CASE("lattice split and friends") {
    Outcome r = run({"lattice", "split", "--model", "t4", "--u", "[1,0,0,1,0,0]"});
    REQUIRE(r.code == 0);
    json j = r.parsed();
    CHECK(j["z"].size() == 6);
    CHECK(j["Lprime"]["basis"].size() == 4);
    CHECK(j["Lprime"]["signature"] == json::array({2, 2}));

    json in = run({"lattice", "inner", "--model", "u", "--v", "[1,0]", "--w", "[0,1]"}).parsed();
    CHECK(in["inner"] == 1);
    json o = run({"lattice", "ortho", "--model", "t4", "--vectors", "[[1,0,0,0,0,0]]"}).parsed();
    CHECK(o["rank"] == 5);
    json s = run({"lattice", "saturate", "--sublattice", R"({"basis":[[2,4],[0,3]]})"}).parsed();
    CHECK(s["basis"].size() == 2);
    json e = run({"lattice", "extend", "--sublattice", "[[2,3]]"}).parsed();
    CHECK(e["matrix"] == json::parse("[[2,1],[3,2]]"));
}

TEST_CASE("isometry verbs") {
    json t = run({"isom", "transvect", "--model", "t4", "--e", "[1,0,0,0,0,0]", "--a", "[0,0,1,0,0,0]"}).parsed();
    CHECK(t["so_plus"] == true);
    Outcome m = run({"isom", "map-isotropic", "--model", "t4", "--u", "[1,0,0,0,0,0]", "--v", "[0,1,0,0,0,0]"});
    REQUIRE(m.code == 0);
    json c = run({"isom", "check", "--model", "t4", "--isometry", m.parsed().dump(), "--u", "[1,0,0,0,0,0]"}).parsed();
    CHECK(c["preserves_gram"] == true);
    CHECK(c["so_plus"] == true);
    CHECK(c["in_Gu"] == false);
    json g = run({"isom", "generators", "--model", "t4", "--u", "[1,0,0,0,0,0]"}).parsed();
    CHECK(g["count"].get<int>() >= 5);
}

TEST_CASE("irrationality verbs") {
    const std::string y = R"({"symbols":[{"tag":"sqrt2","approx":1.4142135623730951}],
                              "coeffs":[[0,0],[0,0],[1,0],[0,1],[0,0],[0,0]]})";
    json u = run({"irr", "check-u", "--model", "t4", "--u", "[1,0,0,0,0,0]", "--y", y}).parsed();
    CHECK(u["u_orthoirrational"] == true);
    json c = run({"irr", "certify", "--model", "t4", "--y", y, "--height", "1"}).parsed();
    CHECK(c["verdict"] == "Inconclusive");
    CHECK(c["assumption"].get<std::string>().find("independent") != std::string::npos);
    json f = run({"irr", "find-isotropic", "--model", "t4", "--y", y, "--height", "1"}).parsed();
    CHECK(f["count"] == f["vectors"].size());
}

TEST_CASE("torus verbs") {
    json a = run({"torus", "approx", "--target", R"({"C":[[1,0],[0,1]],"D":[[0,0],[0,0]]})", "--eps", "1e-2"}).parsed();
    CHECK(a["err"] == 0.0);
    CHECK(a["B"] == json::parse("[[0,0],[0,0]]"));
    json b = run({"torus", "blocks", "--form", "[[0,0,-2,0],[0,0,0,-2],[2,0,0,0],[0,2,0,0]]", "--normalize",
                  "--genericity-bound", "10"})
                 .parsed();
    CHECK(b["split"] == true);
    CHECK(b["genericity"]["relation_found"] == true);
    json act = run({"torus", "act", "--shear", R"({"B":[[0,1],[0,0]]})", "--target", R"({"C":[[1,0],[0,1]]})"}).parsed();
    CHECK(act["D"] == json::parse("[[0.0,1.0],[-1.0,0.0]]"));
    json w = run({"torus", "wedge", "--g", "[[1,1,0,0],[0,1,0,0],[0,0,1,0],[0,0,0,1]]"}).parsed();
    CHECK(w["so_plus"] == true);
}

TEST_CASE("explore is reproducible in single-thread mode") {
    std::vector<std::string> args{"--single-thread", "explore", "--model", "t4", "--depth", "3", "--random-targets", "3"};
    Outcome a = run(args), b = run(args);
    REQUIRE(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out.find("depth,target_id,min_dist,orbit_size") != std::string::npos);
    Outcome j = run({"explore", "--depth", "1", "--format", "json", "--y0", "[0,0,0.7071067811865476,0.7071067811865476,0,0]",
                     "--targets", "[[0,0,0.7071067811865476,0.7071067811865476,0,0]]"});
    REQUIRE(j.code == 0);
    CHECK(j.parsed()["records"][0]["min_dist"] == 0.0);
}

TEST_CASE("exit codes") {
    CHECK(run({"--help"}).code == 0);
    Outcome dom = run({"lattice", "split", "--model", "t4", "--u", "[1,1,0,0,0,0]"});
    CHECK(dom.code == 2);
    CHECK(dom.error()["error"] == "NotIsotropic");
    Outcome conv = run({"torus", "approx", "--target", R"({"C":[[1,0],[0,1]],"D":[[0,0.5],[-0.5,0]]})", "--eps", "1e-9",
                        "--delta", "0", "--budget", "1"});
    CHECK(conv.code == 2);
    CHECK(conv.error()["error"] == "DidNotConverge");
    CHECK(conv.error().contains("incumbent"));
    CHECK(run({"lattice", "info", "--model", "k3", "--bogus"}).code == 1);
    CHECK(run({"lattice", "info", "--lattice", "/nonexistent/file.json"}).code == 1);
    CHECK(run({"lattice", "inner", "--model", "u", "--v", "[1,", "--w", "[0,1]"}).code == 1);
    CHECK(run({"lattice", "info", "--model", "nope"}).code == 1);
    CHECK(run({}).code == 1);
}

TEST_CASE("inputs from files") {
    const std::string path = "cli_test_lattice.json";
    std::ofstream(path) << R"({"rank":2,"gram":[[0,1],[1,0]]})";
    json j = run({"lattice", "info", "--lattice", path}).parsed();
    CHECK(j["signature"] == json::array({1, 1}));
    std::remove(path.c_str());
}
