// Exercises the qdg binary end to end: flags, formats, exit codes, stdin
// streams. The binary path comes in through QDG_CLI_PATH.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include <json.hpp>

using nlohmann::json;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run(const std::string& args, const std::string& stdin_text = "") {
    const std::string dir = "/tmp/qdg_cli_test";
    std::system(("mkdir -p " + dir).c_str());
    const std::string in_path = dir + "/stdin.txt";
    const std::string out_path = dir + "/stdout.txt";
    {
        std::ofstream in(in_path);
        in << stdin_text;
    }
    const std::string cmd = std::string(QDG_CLI_PATH) + " " + args + " < " + in_path + " > " +
                            out_path + " 2> " + dir + "/stderr.txt";
    const int status = std::system(cmd.c_str());
    RunResult r;
    r.exit_code = WEXITSTATUS(status);
    std::ifstream out(out_path);
    r.out.assign(std::istreambuf_iterator<char>(out), std::istreambuf_iterator<char>());
    return r;
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream f(path);
    f << text;
}

} // namespace

TEST_CASE("compute on a family, json output") {
    RunResult r = run("compute --family separable_two_qubit --sign l");
    REQUIRE(r.exit_code == 0);
    json doc = json::parse(r.out);
    REQUIRE(doc.is_array());
    REQUIRE(doc.size() == 1);
    CHECK(doc[0]["qd"] == 8);
    CHECK(doc[0]["prop4"] == 8);
    CHECK(doc[0]["zero_discord"] == false);
    CHECK(doc[0]["s"] == -1);
}

TEST_CASE("compute default emits both signs") {
    RunResult r = run("compute --family complete_bipartite --params 3");
    REQUIRE(r.exit_code == 0);
    json doc = json::parse(r.out);
    REQUIRE(doc.size() == 2);
    CHECK(doc[0]["s"] == -1);
    CHECK(doc[1]["s"] == 1);
    CHECK(doc[0]["zero_discord"] == true);
    CHECK(doc[1]["zero_discord"] == true);
}

TEST_CASE("compute csv and plain formats") {
    RunResult csv = run("compute --family k33_twisted --format csv");
    REQUIRE(csv.exit_code == 0);
    CHECK(csv.out.find("graph_id,m,n,s,prop2,prop3,prop4,prop5,qd,zero_discord") == 0);
    CHECK(csv.out.find("k33_twisted,2,3,-1,20,20,28,12,80,false") != std::string::npos);

    RunResult plain = run("compute --family k33_twisted --format plain --sign q");
    REQUIRE(plain.exit_code == 0);
    CHECK(plain.out.find("QD=80") != std::string::npos);
}

TEST_CASE("compute from an edge-list file honours its labeling line") {
    const std::string path = "/tmp/qdg_cli_test/h.txt";
    write_file(path, "6 2 3\nperm: 1 4 5 2 3 6\n1 4\n1 5\n2 4\n2 5\n3 4\n3 5\n1 6\n2 6\n3 6\n");
    RunResult r = run("compute --input " + path + " --sign l");
    REQUIRE(r.exit_code == 0);
    json doc = json::parse(r.out);
    CHECK(doc[0]["qd"] == 80);

    RunResult natural = run("compute --input " + path + " --sign l --labeling natural");
    json nat = json::parse(natural.out);
    CHECK(nat[0]["qd"] == 0);
}

TEST_CASE("generate then compute round trip through a file") {
    const std::string path = "/tmp/qdg_cli_test/gen.txt";
    RunResult g = run("generate --family werner --params 4 --output " + path);
    REQUIRE(g.exit_code == 0);
    RunResult c = run("compute --input " + path + " --sign q");
    REQUIRE(c.exit_code == 0);
    json doc = json::parse(c.out);
    CHECK(doc[0]["qd"] == 120);
    CHECK(doc[0]["m"] == 4);
}

TEST_CASE("exit code 2 for unreadable or malformed input") {
    CHECK(run("compute --input /does/not/exist").exit_code == 2);

    const std::string path = "/tmp/qdg_cli_test/garbage.txt";
    write_file(path, "pure nonsense\n");
    CHECK(run("compute --input " + path).exit_code == 2);

    CHECK(run("compute").exit_code == 2);               // neither input nor family
    CHECK(run("compute --family no_such").exit_code == 2);
    CHECK(run("nonexistent_subcommand").exit_code == 2);
}

TEST_CASE("exit code 3 for dimension errors and empty graphs") {
    const std::string path = "/tmp/qdg_cli_test/dim.txt";
    write_file(path, "4 2 3\n1 2\n");
    CHECK(run("compute --input " + path).exit_code == 3);

    const std::string empty = "/tmp/qdg_cli_test/empty.txt";
    write_file(empty, "4 2 2\n");
    CHECK(run("compute --input " + empty).exit_code == 3);
    CHECK(run("classify --input " + empty + " --m 2 --n 2").exit_code == 3);
}

TEST_CASE("classify finds the labeling spread of K33") {
    const std::string path = "/tmp/qdg_cli_test/k33.txt";
    RunResult g = run("generate --family complete_bipartite --params 3 --output " + path);
    REQUIRE(g.exit_code == 0);
    RunResult r = run("classify --input " + path + " --m 2 --n 3 --sign l");
    REQUIRE(r.exit_code == 0);
    json doc = json::parse(r.out);
    CHECK(doc["per_sign"][0]["min_qd"] == 0);
    CHECK(doc["per_sign"][0]["max_qd"] == 80);
    CHECK(doc["per_sign"][0]["zero_discord_found"] == true);
    CHECK(doc["per_sign"][0]["searched"] == 720);
    CHECK(doc["per_sign"][0]["mode"] == "exhaustive");

    // K4 is labeling-independent.
    RunResult k4 = run("classify --family complete --m 2 --n 2 --sign q");
    json k4doc = json::parse(k4.out);
    CHECK(k4doc["per_sign"][0]["min_qd"] == 0);
    CHECK(k4doc["per_sign"][0]["max_qd"] == 0);
}

TEST_CASE("classify random sampling agrees with exhaustive on a zero minimum") {
    const std::string path = "/tmp/qdg_cli_test/k33.txt";
    run("generate --family complete_bipartite --params 3 --output " + path);
    RunResult r =
        run("classify --input " + path + " --m 2 --n 3 --sign l --labeling random --trials 50");
    REQUIRE(r.exit_code == 0);
    json doc = json::parse(r.out);
    CHECK(doc["per_sign"][0]["mode"] == "random");
    CHECK(doc["per_sign"][0]["min_qd"] == 0); // identity labeling is always sampled
}

TEST_CASE("classify exhaustive above the cap is rejected") {
    CHECK(run("classify --family complete --m 3 --n 3 --labeling exhaustive").exit_code == 3);
}

TEST_CASE("verify runs clean and is seeded") {
    RunResult r = run("verify --order 2 --trials 200 --graphs 20 --seed 7");
    REQUIRE(r.exit_code == 0);
    json doc = json::parse(r.out);
    REQUIRE(doc.is_array());
    REQUIRE(doc.size() == 2);
    for (const auto& suite : doc) {
        CHECK(suite["mismatches"] == 0);
        CHECK(suite.contains("checked"));
        CHECK(suite.contains("mode"));
        CHECK(suite.contains("seed"));
    }
}

TEST_CASE("enumerate reads graph6 from stdin and keeps input order") {
    RunResult r = run("enumerate --m 2 --n 2 --format csv", "C~\nCh\nC?\nnot_graph6_x\n");
    REQUIRE(r.exit_code == 0);
    std::istringstream lines(r.out);
    std::string header, l1, l2, l3, l4, l5, l6;
    std::getline(lines, header);
    std::getline(lines, l1);
    std::getline(lines, l2);
    std::getline(lines, l3);
    std::getline(lines, l4);
    std::getline(lines, l5);
    std::getline(lines, l6);
    CHECK(header == "graph_id,m,n,s,prop2,prop3,prop4,prop5,qd,zero_discord");
    CHECK(l1 == "C~,2,2,-1,0,0,0,0,0,true"); // K4 is zero-discord
    CHECK(l2 == "C~,2,2,1,0,0,0,0,0,true");
    CHECK(l3.rfind("Ch,2,2,-1,", 0) == 0); // P4 = the separable example, qd 8
    CHECK(l3.find(",8,false") != std::string::npos);
    CHECK(l5 == "C?,2,2,-1,0,0,0,0,0,"); // edgeless: no state, blank verdict
}

TEST_CASE("enumerate json rows and the per-labeling minimum") {
    RunResult r = run("enumerate --m 2 --n 2 --sign l --min-labeling", "Ch\n");
    REQUIRE(r.exit_code == 0);
    json row = json::parse(r.out);
    CHECK(row["graph_id"] == "Ch");
    CHECK(row["qd"] == 8);
    CHECK(row["zero_discord"] == false);
    // Some labeling of P4 reads it as C4-free bipartite alignment with
    // nonzero discord everywhere; the exhaustive minimum is pinned by a
    // library-level check in the acceptance suite instead. Here: present and
    // consistent.
    REQUIRE(row.contains("min_qd_over_labelings"));
    CHECK(row["min_qd_over_labelings"].get<long long>() <= 8);
    CHECK(row["min_qd_over_labelings"].get<long long>() >= 0);
}

TEST_CASE("enumerate empty stream exits 0") {
    RunResult r = run("enumerate --m 2 --n 2", "");
    CHECK(r.exit_code == 0);
    CHECK(r.out.empty());
}
