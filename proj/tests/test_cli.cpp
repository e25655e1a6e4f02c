#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "zf/generators.hpp"
#include "zf/graph6.hpp"

namespace {

namespace fs = std::filesystem;

struct CmdResult {
    int code = -1;
    std::string out;
    std::string err;
};

fs::path temp_path(const std::string& name) {
    return fs::temp_directory_path() / ("zf_cli_" + name);
}

CmdResult run_cli(const std::string& args) {
    const fs::path errfile = temp_path("stderr.txt");
    const std::string cmd = std::string(ZF_CLI_PATH) + " " + args + " 2>" +
                            errfile.string();
    CmdResult res;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) res.out.append(buf, got);
    const int status = pclose(pipe);
    res.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    std::ifstream err(errfile);
    std::stringstream ss;
    ss << err.rdbuf();
    res.err = ss.str();
    return res;
}

std::string write_file(const std::string& name, const std::string& content) {
    const fs::path p = temp_path(name);
    std::ofstream out(p, std::ios::trunc);
    out << content;
    return p.string();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in.good());
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string desargues_g6() {
    std::vector<zf::Edge> e;
    for (int i = 0; i < 10; ++i) {
        e.push_back({i, (i + 1) % 10});
        e.push_back({i, 10 + i});
        e.push_back({10 + i, 10 + (i + 3) % 10});
    }
    return zf::write_graph6(zf::Graph::from_edge_list(20, e));
}

}  // namespace

TEST_CASE("compute: plain, witness and json output") {
    const CmdResult plain = run_cli("compute --gen petersen");
    CHECK(plain.code == 0);
    CHECK(plain.out == "z = 5\n");

    const CmdResult wit = run_cli("compute --g6 Dhc --witness");
    CHECK(wit.code == 0);
    CHECK(wit.out == "z = 2\nwitness = {0,1}\n");

    const CmdResult js = run_cli("compute --gen petersen --json");
    CHECK(js.code == 0);
    const auto j = nlohmann::json::parse(js.out);
    CHECK(j["n"] == 10);
    CHECK(j["m"] == 15);
    CHECK(j["z"] == 5);
    CHECK(j["witness"].size() == 5);
    CHECK(j.contains("elapsed_ms"));
    CHECK(j.contains("subsets_tested"));
}

TEST_CASE("compute: input sources and errors") {
    const std::string file = write_file("one.g6", "Dhc\nC~\n");
    const CmdResult from_file = run_cli("compute --file " + file);
    CHECK(from_file.code == 0);
    CHECK(from_file.out == "z = 2\n");  // only the first line is read

    const CmdResult bad = run_cli("compute --g6 'D?'");
    CHECK(bad.code == 2);
    CHECK(bad.err.find("error:") != std::string::npos);

    const CmdResult none = run_cli("compute");
    CHECK(none.code == 2);

    const CmdResult both = run_cli("compute --g6 Dhc --gen petersen");
    CHECK(both.code == 2);
}

TEST_CASE("compute: exhausted time budget exits 3 with a bracket") {
    const CmdResult r =
        run_cli("compute --g6 '" + desargues_g6() + "' --time-limit 0.001");
    CHECK(r.code == 3);
    CHECK(r.err.find("timeout:") != std::string::npos);
    CHECK(r.err.find("<= Z(G) <=") != std::string::npos);
}

TEST_CASE("simulate: full trace and verdict") {
    const CmdResult r = run_cli("simulate --gen path:4 --set 3");
    CHECK(r.code == 0);
    CHECK(r.out.find("n=4 m=3") != std::string::npos);
    CHECK(r.out.find("S_0 = {3}") != std::string::npos);
    CHECK(r.out.find("round 1: 3->2") != std::string::npos);
    CHECK(r.out.find("round 3: 1->0") != std::string::npos);
    CHECK(r.out.find("zero forcing set: yes") != std::string::npos);

    const CmdResult stall = run_cli("simulate --gen cycle:5 --set 0");
    CHECK(stall.code == 0);
    CHECK(stall.out.find("zero forcing set: no") != std::string::npos);

    const CmdResult bad = run_cli("simulate --gen path:4 --set 9");
    CHECK(bad.code == 2);
    CHECK(bad.err.find("error:") != std::string::npos);
}

TEST_CASE("bounds: table output") {
    const CmdResult r = run_cli("bounds --gen path:3");
    CHECK(r.code == 0);
    CHECK(r.out.find("n=3 m=2 delta=1 Delta=2 girth=inf") != std::string::npos);
    CHECK(r.out.find("acyclic") != std::string::npos);
    CHECK(r.out.find("lb_min_degree") != std::string::npos);
    CHECK(r.out.find("conj_girth") != std::string::npos);
    CHECK(r.out.find("proven") != std::string::npos);
    CHECK(r.out.find("conjecture") != std::string::npos);

    const CmdResult pet = run_cli("bounds --gen petersen --kmax 1");
    CHECK(pet.code == 0);
    CHECK(pet.out.find("girth=5") != std::string::npos);
}

TEST_CASE("gen: single graphs and stepped families") {
    const CmdResult one = run_cli("gen complete:2");
    CHECK(one.code == 0);
    CHECK(one.out == "A_\n");

    const CmdResult four = run_cli("gen cycle:3 --count 4");
    CHECK(four.code == 0);
    std::stringstream ss(four.out);
    std::string line;
    int k = 3;
    while (std::getline(ss, line)) {
        CHECK(zf::parse_graph6(line) == zf::make_cycle(k));
        ++k;
    }
    CHECK(k == 7);

    const CmdResult unparam = run_cli("gen petersen --count 2");
    CHECK(unparam.code == 2);

    const CmdResult unknown = run_cli("gen moebius");
    CHECK(unknown.code == 2);
    CHECK(unknown.err.find("known:") != std::string::npos);
}

TEST_CASE("verify: records, reports and parse isolation") {
    const std::string corpus = write_file("mix.g6", "Dhc\nD??\nC~\nD?\n");
    const std::string csv = temp_path("mix.csv").string();
    const std::string json_path = temp_path("mix.json").string();

    const CmdResult r = run_cli("verify " + corpus + " --csv " + csv +
                                " --json " + json_path);
    CHECK(r.code == 0);
    CHECK(r.err.find("parse error at entry 3") != std::string::npos);
    CHECK(r.out.find("graphs: 3 parsed, 1 parse error(s)") != std::string::npos);
    CHECK(r.out.find("solved: 3 exact, 0 skipped, 0 timed out") !=
          std::string::npos);
    CHECK(r.out.find("proven bound violations: 0") != std::string::npos);
    CHECK(r.out.find("VIOLATION") == std::string::npos);

    const std::string table = read_file(csv);
    std::stringstream lines(table);
    std::string header, row0, row1, row2, tail;
    std::getline(lines, header);
    std::getline(lines, row0);
    std::getline(lines, row1);
    std::getline(lines, row2);
    CHECK_FALSE(std::getline(lines, tail));
    CHECK(header ==
          "index,n,m,delta,Delta,girth,z,witness,lb_min_degree,ub_max_degree,"
          "ub_not_complete,ub_girth,lb_triangle_free,lb_girth5,lb_cut_vertex,"
          "lb_cut_edge,lb_vertex_deletion,lb_tw_girth,conj_girth,"
          "conj_triangle_free,conj_sharp,violations");
    CHECK(row0 == "0,5,5,2,2,5,2,0 1,2,3,3,2,na,2,na,na,2,1,2,2,1,");
    CHECK(row1 == "1,5,0,0,0,inf,5,0 1 2 3 4,0,na,na,na,na,na,na,na,na,na,na,na,na,");
    CHECK(row2 == "2,4,6,3,3,3,3,0 1 2,3,3,na,3,na,na,na,na,na,1,3,na,1,");

    const auto j = nlohmann::json::parse(read_file(json_path));
    CHECK(j["schema"] == 1);
    CHECK(j["records"].size() == 3);
    CHECK(j["records"][0]["girth"] == 5);
    CHECK(j["records"][1]["girth"] == "inf");
    CHECK(j["records"][1]["bounds"]["lb_tw_girth"].is_null());
    CHECK(j["records"][0]["conj_sharp"] == true);
    CHECK(j["records"][1]["conj_sharp"].is_null());
    CHECK(j["parse_failures"].size() == 1);
    CHECK(j["parse_failures"][0]["index"] == 3);
    CHECK(j["summary"]["graphs_total"] == 3);
    CHECK(j["summary"]["parse_errors"] == 1);
    CHECK(j["summary"]["proven_bound_violations"] == 0);
    CHECK(j["summary"]["sharp_fraction"] == "1.0000");
}

TEST_CASE("verify: output is independent of the job count") {
    std::string corpus_text;
    for (int n = 3; n <= 12; ++n)
        corpus_text += zf::write_graph6(zf::make_cycle(n)) + "\n";
    for (int n = 2; n <= 11; ++n)
        corpus_text += zf::write_graph6(zf::make_path(n)) + "\n";
    for (int n = 2; n <= 8; ++n)
        corpus_text += zf::write_graph6(zf::make_complete(n)) + "\n";
    for (int b = 2; b <= 4; ++b)
        corpus_text += zf::write_graph6(zf::make_complete_bipartite(2, b)) + "\n";
    corpus_text += zf::write_graph6(zf::make_petersen()) + "\n";

    const std::string corpus = write_file("jobs.g6", corpus_text);
    const std::string csv1 = temp_path("jobs1.csv").string();
    const std::string csv8 = temp_path("jobs8.csv").string();
    const std::string js1 = temp_path("jobs1.json").string();
    const std::string js8 = temp_path("jobs8.json").string();

    const CmdResult a =
        run_cli("verify " + corpus + " --jobs 1 --csv " + csv1 + " --json " + js1);
    const CmdResult b =
        run_cli("verify " + corpus + " --jobs 8 --csv " + csv8 + " --json " + js8);
    CHECK(a.code == 0);
    CHECK(b.code == 0);
    CHECK(a.out == b.out);
    CHECK(read_file(csv1) == read_file(csv8));
    CHECK(read_file(js1) == read_file(js8));
}

TEST_CASE("verify: timeouts are findings unless --strict") {
    const std::string corpus = write_file("slow.g6", desargues_g6() + "\n");
    const std::string base =
        "verify " + corpus + " --max-n 20 --time-limit 0.001";

    const CmdResult lax = run_cli(base);
    CHECK(lax.code == 0);
    CHECK(lax.out.find("0 skipped, 1 timed out") != std::string::npos);

    const CmdResult strict = run_cli(base + " --strict");
    CHECK(strict.code == 3);

    const std::string csv = temp_path("slow.csv").string();
    run_cli(base + " --csv " + csv);
    const std::string table = read_file(csv);
    CHECK(table.find(",timeout,") != std::string::npos);
}

TEST_CASE("verify: oversized graphs are skipped, not solved") {
    const std::string corpus = write_file("skip.g6", desargues_g6() + "\n");
    const CmdResult r = run_cli("verify " + corpus + " --max-n 14");
    CHECK(r.code == 0);
    CHECK(r.out.find("solved: 0 exact, 1 skipped, 0 timed out") !=
          std::string::npos);
}
