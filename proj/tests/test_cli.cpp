#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "ramsey/cli.hpp"

#include <json.hpp>

using nlohmann::json;

namespace {

struct RunResult {
    int code;
    std::string out;
    json cert;
};

RunResult run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = ramsey::run_cli(args, out, err);
    RunResult r{code, out.str(), json()};
    if (!r.out.empty()) {
        try {
            r.cert = json::parse(r.out);
        } catch (...) {
        }
    }
    return r;
}

std::string write_temp(const std::string& name, const std::string& content) {
    std::string path = "cli_input_" + name + ".json";
    std::ofstream f(path);
    f << content;
    return path;
}

bool all_checks_pass(const json& cert) {
    if (!cert.contains("verification")) return false;
    for (const auto& v : cert.at("verification"))
        if (!v.at("pass").get<bool>()) return false;
    return true;
}

} // namespace

TEST_CASE("validate: exit codes split by classification") {
    std::string ultra = write_temp(
        "ultra", R"({"dist": [[0, 1], [1, 0]]})");
    RunResult r = run({"validate", "--input", ultra});
    CHECK(r.code == 0);
    CHECK(r.cert.at("payload").at("classification") == "ultrametric");

    std::string bad = write_temp(
        "bad", R"({"dist": [[0, 5, 1], [5, 0, 1], [1, 1, 0]]})");
    RunResult rb = run({"validate", "--input", bad});
    CHECK(rb.code == 1);
    CHECK(rb.cert.at("payload").at("classification") == "not-a-metric");
    CHECK(rb.cert.at("status") == "negative");

    std::string junk = write_temp("junk", "{not json");
    CHECK(run({"validate", "--input", junk}).code == 2);

    std::string neg = write_temp("neg", R"({"dist": [[0, -1], [-1, 0]]})");
    CHECK(run({"validate", "--input", neg}).code == 2);
}

TEST_CASE("scale, partition and equidist run end to end") {
    std::string cls = write_temp("cls", R"({
      "points": ["a", "b", "c", "d"],
      "dist": [[0,1,2,2],[1,0,2,2],[2,2,0,1],[2,2,1,0]]})");
    RunResult sc = run({"scale", "--input", cls});
    CHECK(sc.code == 0);
    CHECK(sc.cert.at("payload").at("scale") == json::array({1, 2}));

    RunResult p1 = run({"partition", "--input", cls, "--r", "1"});
    CHECK(p1.code == 0);
    CHECK(p1.cert.at("payload").at("blocks") ==
          json::array({{"a", "b"}, {"c", "d"}}));
    RunResult ph = run({"partition", "--input", cls, "--r", "1/2"});
    CHECK(ph.cert.at("payload").at("blocks").size() == 4);

    std::string line = write_temp("line", R"({
      "dist": [[0,1,3],[1,0,2],[3,2,0]]})");
    RunResult pl = run({"partition", "--input", line, "--r", "1"});
    CHECK(pl.code == 1); // not ultrametric: verified negative with witness
    CHECK(pl.cert.at("status") == "negative");

    RunResult eq = run({"equidist", "--input", cls});
    CHECK(eq.code == 0);
    CHECK(eq.cert.at("payload").at("subset").size() == 2);
    CHECK(all_checks_pass(eq.cert));

    RunResult cs = run({"canon-seq", "--input", cls});
    CHECK(cs.code == 0);
    CHECK(all_checks_pass(cs.cert));
}

TEST_CASE("color subcommands") {
    std::string in = write_temp("induce", R"({
      "space": {"dist": [[0,1,2],[1,0,1],[2,1,0]]},
      "scale_map": {"scale": [1, 2], "colors": [0, 1]}})");
    RunResult ind = run({"color", "induce", "--input", in});
    CHECK(ind.code == 0);
    CHECK(ind.cert.at("payload").at("coloring") ==
          json::array({{0, 1, 0}, {0, 2, 1}, {1, 2, 0}}));

    std::string rec = write_temp("recognize", R"({
      "space": {"dist": [[0,1,2],[1,0,1],[2,1,0]]},
      "coloring": [[0,1,0],[0,2,1],[1,2,0]]})");
    RunResult r = run({"color", "recognize", "--input", rec});
    CHECK(r.code == 0);
    CHECK(r.cert.at("payload").at("scale_map").at("colors") ==
          json::array({0, 1}));

    std::string viol = write_temp("violation", R"({
      "space": {"dist": [[0,1,2],[1,0,1],[2,1,0]]},
      "coloring": [[0,1,0],[0,2,1],[1,2,1]]})");
    RunResult rv = run({"color", "recognize", "--input", viol});
    CHECK(rv.code == 1);
    CHECK(rv.cert.at("payload").contains("violation"));

    std::string mm = write_temp("maxmono", R"({
      "space": {"dist": [[0,1,2],[1,0,1],[2,1,0]]},
      "coloring": [[0,1,0],[0,2,1],[1,2,0]]})");
    RunResult m = run({"color", "max-mono", "--input", mm});
    CHECK(m.code == 0);
    CHECK(m.cert.at("payload").at("size") == 2);
    CHECK(all_checks_pass(m.cert));

    RunResult om = run({"oracle", "max-mono", "--input", mm});
    CHECK(om.code == 0);
    CHECK(om.cert.at("payload") == m.cert.at("payload"));
}

TEST_CASE("family subcommands") {
    std::string fam = write_temp("family", R"({
      "space": {"points": [1,2,10,20,100,200],
        "dist": [[0,1,9,19,99,199],[1,0,8,18,98,198],[9,8,0,10,90,190],
                 [19,18,10,0,80,180],[99,98,90,80,0,100],[199,198,190,180,100,0]]},
      "cells": [["1","2"],["10","20"],["100","200"]],
      "idx_coloring": [[0,1,1],[0,2,0],[1,2,1]]})");
    RunResult chk = run({"family", "check", "--input", fam});
    CHECK(chk.code == 0);
    CHECK(chk.cert.at("payload").at("level") == "strong");

    RunResult col = run({"family", "color", "--input", fam});
    CHECK(col.code == 0);
    CHECK(all_checks_pass(col.cert));

    RunResult lift = run({"family", "lift", "--input", fam});
    CHECK(lift.code == 0);
    CHECK(all_checks_pass(lift.cert));

    std::string none = write_temp("famnone", R"({
      "space": {"points": [1,2,3,4],
        "dist": [[0,1,2,3],[1,0,1,2],[2,1,0,1],[3,2,1,0]]},
      "cells": [["1","2"],["3","4"]]})");
    RunResult bad = run({"family", "check", "--input", none});
    CHECK(bad.code == 1);
    CHECK(bad.cert.at("payload").at("level") == "none");
    CHECK(run({"family", "color", "--input", none}).code == 1);
}

TEST_CASE("tree subcommands") {
    std::string universal = write_temp("tuniv", R"({
      "levels": [2, 1],
      "root": {"groups": [{"shape": {"leaf": "omega"}, "mult": 2},
                          {"shape": {"leaf": 5}, "mult": 1}]}})");
    RunResult dec = run({"tree", "decide", "--input", universal});
    CHECK(dec.code == 0);
    CHECK(dec.cert.at("payload").at("universal") == true);
    CHECK(all_checks_pass(dec.cert));

    std::string oo = write_temp("too", R"({
      "levels": [2, 1],
      "root": {"groups": [{"shape": {"leaf": "omega"}, "mult": "omega"}]}})");
    RunResult dec2 = run({"tree", "decide", "--input", oo});
    CHECK(dec2.code == 0);
    CHECK(dec2.cert.at("payload").at("universal") == false);
    CHECK(dec2.cert.at("payload").at("obstruction").at("clause") ==
          "infinitely-many-infinite-classes");

    RunResult mat = run({"tree", "materialize", "--input", oo, "--budget", "9"});
    CHECK(mat.code == 0);
    CHECK(mat.cert.at("payload").at("space").at("points").size() == 9);
    CHECK(all_checks_pass(mat.cert));

    RunResult wit = run({"tree", "witness", "--input", oo, "--k", "4"});
    CHECK(wit.code == 0);
    CHECK(all_checks_pass(wit.cert));

    RunResult obs = run({"tree", "obstruct", "--input", oo});
    CHECK(obs.code == 0);
    CHECK(all_checks_pass(obs.cert));

    // obstruction on a universal tree is a verified negative
    CHECK(run({"tree", "obstruct", "--input", universal}).code == 1);

    std::string part = write_temp("tpart", R"({
      "points": ["a", "b", "c"], "partition": [["a", "b"], ["c"]]})");
    RunResult fp = run({"tree", "from-partition", "--input", part});
    CHECK(fp.code == 0);
    CHECK(all_checks_pass(fp.cert));
}

TEST_CASE("int subcommands") {
    RunResult forest = run({"int", "forest", "--f", "double", "--n", "10"});
    CHECK(forest.code == 0);
    CHECK(forest.cert.at("payload").at("a1") ==
          json::array({1, 3, 4, 5, 7, 9}));

    std::string seta = write_temp("seta", R"({"set": [1, 2, 5]})");
    CHECK(run({"int", "pattern-check", "--input", seta, "--f", "double",
               "--n", "10"})
              .code == 0);
    std::string setb = write_temp("setb", R"({"set": [1, 2, 3]})");
    RunResult pv = run({"int", "pattern-check", "--input", setb, "--f",
                        "double", "--n", "10"});
    CHECK(pv.code == 1);
    CHECK(pv.cert.at("payload").at("violation").at("a") == 1);

    RunResult pm =
        run({"int", "pattern-member", "--f", "double", "--n", "30"});
    CHECK(pm.code == 0);
    CHECK(all_checks_pass(pm.cert));

    std::string sq = write_temp("squares", R"({"set": [1, 4, 9, 16, 25]})");
    CHECK(run({"int", "thin", "--input", sq}).code == 0);
    std::string run5 = write_temp("run5", R"({"set": [1, 2, 3, 4, 5]})");
    CHECK(run({"int", "thin", "--input", run5}).code == 1);

    RunResult blocks = run(
        {"int", "blocks", "--t", "powers2", "--count", "3", "--window", "1024"});
    CHECK(blocks.code == 0);
    CHECK(blocks.cert.at("payload").at("blocks") ==
          json::array({{1, 2}, {8, 32}, {128, 512}}));

    RunResult vb = run({"int", "verify-blocks", "--t", "powers2", "--count",
                        "3", "--window", "1024"});
    CHECK(vb.code == 0);
    CHECK(all_checks_pass(vb.cert));

    RunResult q = run({"int", "quotient", "--t", "powers2", "--count", "3",
                       "--side", "A", "--window", "512"});
    CHECK(q.code == 0);
    CHECK(q.cert.at("payload").at("cells") ==
          json::array({{"1"}, {"8", "16"}, {"128", "256"}}));
    RunResult qb = run({"int", "quotient", "--t", "powers2", "--count", "3",
                        "--side", "B", "--window", "512"});
    CHECK(qb.cert.at("payload").at("cells") ==
          json::array({{"2", "4"}, {"32", "64"}}));

    std::string sidon = write_temp("sidon", R"({"set": [1, 2, 5, 11]})");
    CHECK(run({"int", "sidon", "--input", sidon}).code == 0);
    std::string notsidon = write_temp("notsidon", R"({"set": [1, 2, 3]})");
    CHECK(run({"int", "sidon", "--input", notsidon}).code == 1);

    std::string ext = write_temp("extend", R"({
      "set": [1, 2, 5, 11],
      "coloring": [[0,1,1],[0,2,0],[0,3,1],[1,2,1],[1,3,0],[2,3,0]]})");
    RunResult er = run({"int", "extend", "--input", ext});
    CHECK(er.code == 0);
    CHECK(all_checks_pass(er.cert));
    std::string extbad = write_temp("extendbad", R"({
      "set": [1, 2, 3], "coloring": [[0,1,0],[0,2,0],[1,2,0]]})");
    CHECK(run({"int", "extend", "--input", extbad}).code == 1);
}

TEST_CASE("bgroup subcommands") {
    RunResult d = run({"bgroup", "dist", "--x", "0110", "--y", "0100"});
    CHECK(d.code == 0);
    CHECK(d.cert.at("payload").at("distance") == 3);
    CHECK(run({"bgroup", "dist", "--x", "01", "--y", "0100"}).code == 2);

    RunResult sp = run({"bgroup", "space", "--L", "2"});
    CHECK(sp.code == 0);
    CHECK(sp.cert.at("payload").at("space").at("points").size() == 4);

    std::string ps = write_temp("ps", R"([
      ["00","10",0],["00","01",1],["00","11",1],
      ["10","01",1],["10","11",1],["01","11",0]])");
    RunResult psr = run({"bgroup", "ps-check", "--L", "2", "--input", ps});
    CHECK(psr.code == 0);
    CHECK(psr.cert.at("payload").at("ps") == true);
    RunResult inv = run({"bgroup", "inv-check", "--L", "2", "--input", ps});
    CHECK(inv.code == 0);

    std::string bad = write_temp("psbad", R"([
      ["00","10",0],["00","01",1],["00","11",1],
      ["10","01",0],["10","11",1],["01","11",0]])");
    RunResult badr = run({"bgroup", "ps-check", "--L", "2", "--input", bad});
    CHECK(badr.code == 1);
    CHECK(badr.cert.at("payload").contains("violation"));
    CHECK(run({"bgroup", "inv-check", "--L", "2", "--input", bad}).code == 1);
}

TEST_CASE("oracle equi-guarantee") {
    RunResult yes = run({"oracle", "equi-guarantee", "--n", "6", "--k", "3"});
    CHECK(yes.code == 0);
    CHECK(yes.cert.at("payload").at("guaranteed") == true);
    RunResult no = run({"oracle", "equi-guarantee", "--n", "5", "--k", "3"});
    CHECK(no.code == 1);
    CHECK(no.cert.at("payload").at("guaranteed") == false);
    CHECK(run({"oracle", "equi-guarantee", "--n", "9", "--k", "3"}).code == 2);
}

TEST_CASE("recheck reruns and certificates stay identical") {
    RunResult a = run({"int", "forest", "--f", "double", "--n", "64",
                       "--recheck", "--seed", "7"});
    CHECK(a.code == 0);
    CHECK(a.cert.at("recheck") == "identical");
    CHECK(a.cert.at("seed") == 7);
    RunResult b = run({"int", "forest", "--f", "double", "--n", "64",
                       "--recheck", "--seed", "7"});
    CHECK(a.out == b.out);
}

TEST_CASE("input errors are distinguished from negatives") {
    CHECK(run({"int", "thin"}).code == 2);              // no input at all
    CHECK(run({"int", "blocks", "--t", "nope", "--count", "2"}).code == 2);
    CHECK(run({"int", "forest", "--f", "double"}).code == 2); // missing --n
    CHECK(run({"nonexistent"}).code == 2);
    std::string fbad = write_temp("fbad", R"({"f": [1, 3, 4]})");
    CHECK(run({"int", "forest", "--input", fbad}).code == 2); // f(1)=1
}
