// End-to-end checks of the command-line tool: exit-code contract, JSON
// output determinism, and the build -> file -> detect/report round trip.

#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <unistd.h>

#include <json.hpp>

#ifndef GRIDFREE_CLI
#error "GRIDFREE_CLI must point at the gridfree binary"
#endif

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct Run {
    int exit_code = -1;
    std::string out;
};

fs::path scratch_dir() {
    static fs::path dir = [] {
        fs::path d = fs::temp_directory_path() /
                     ("gridfree_cli_" + std::to_string(::getpid()));
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

Run run_cli(const std::string& args) {
    static int seq = 0;
    fs::path out_file = scratch_dir() / ("out_" + std::to_string(seq++) + ".txt");
    std::string cmd = std::string(GRIDFREE_CLI) + " " + args + " > " +
                      out_file.string() + " 2>/dev/null";
    int rc = std::system(cmd.c_str());
    Run r;
    r.exit_code = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    std::ifstream in(out_file);
    std::stringstream ss;
    ss << in.rdbuf();
    r.out = ss.str();
    return r;
}

std::string path_of(const std::string& name) {
    return (scratch_dir() / name).string();
}

}  // namespace

TEST_CASE("build writes a file and reports density; bad p exits 2") {
    auto r = run_cli("build --construction qr --p 13 --out " + path_of("qr13.json"));
    REQUIRE(r.exit_code == 0);
    json j = json::parse(r.out);
    CHECK(j["report"]["edges"] == 36);
    CHECK(j["report"]["linear"] == true);
    CHECK(fs::exists(path_of("qr13.json")));

    json file = json::parse(std::ifstream(path_of("qr13.json")));
    CHECK(file["format"] == "trihyper-v1");
    CHECK(file["edges"].size() == 36);

    CHECK(run_cli("build --construction mult --p 4 --out " + path_of("x.json"))
              .exit_code == 2);
    CHECK(run_cli("build --construction ap --p 7 --out " + path_of("ap7.json"))
              .exit_code == 0);
}

TEST_CASE("detect exit codes: found, expect-free, budget") {
    run_cli("build --construction qr --p 13 --out " + path_of("qr13.json"));
    run_cli("build --construction ap --p 7 --out " + path_of("ap7.json"));

    CHECK(run_cli("detect --pattern grid --in " + path_of("qr13.json") +
                  " --expect-free")
              .exit_code == 0);

    auto found = run_cli("detect --pattern grid --in " + path_of("ap7.json") +
                         " --mode count");
    CHECK(found.exit_code == 0);
    CHECK(json::parse(found.out)["copies"].get<int>() > 0);

    CHECK(run_cli("detect --pattern grid --in " + path_of("ap7.json") +
                  " --expect-free")
              .exit_code == 1);

    CHECK(run_cli("detect --pattern grid --in " + path_of("qr13.json") +
                  " --budget 3")
              .exit_code == 3);

    CHECK(run_cli("detect --pattern grid --in " + path_of("nope.json"))
              .exit_code == 2);
}

TEST_CASE("deterministic output: identical runs and thread counts") {
    run_cli("build --construction ap --p 7 --out " + path_of("ap7.json"));
    std::string cmd = "detect --pattern triangle --in " + path_of("ap7.json") +
                      " --mode all";
    auto a = run_cli(cmd);
    auto b = run_cli(cmd);
    CHECK(a.out == b.out);
    auto c = run_cli("--threads 2 " + cmd);
    CHECK(a.out == c.out);

    auto s1 = run_cli("search-sets --equation quad-triangle --p 31 "
                      "--strategy randomized-greedy --seed 7");
    auto s2 = run_cli("search-sets --equation quad-triangle --p 31 "
                      "--strategy randomized-greedy --seed 7");
    CHECK(s1.out == s2.out);
}

TEST_CASE("solve-obstruction and report round trip") {
    auto r = run_cli("solve-obstruction --equation quad-grid --p 41 "
                     "--x-set interval:1..5 --a-set interval:1..5");
    REQUIRE(r.exit_code == 0);
    json j = json::parse(r.out);
    CHECK(j["count"] == 0);
    CHECK(j["exhaustive"] == true);

    run_cli("build --construction quadratic --p 41 --x-set interval:1..5 "
            "--a-set interval:1..5 --out " + path_of("quad41.json"));
    CHECK(run_cli("detect --pattern grid --in " + path_of("quad41.json") +
                  " --expect-free")
              .exit_code == 0);

    auto rep = run_cli("report --in " + path_of("quad41.json"));
    REQUIRE(rep.exit_code == 0);
    CHECK(json::parse(rep.out)["report"]["edges"] == 25);
}

TEST_CASE("linearize pipeline via files") {
    run_cli("build --construction mult --p 13 --out " + path_of("m13.json"));
    auto r = run_cli("linearize --in " + path_of("m13.json") + " --out " +
                     path_of("m13lin.json"));
    REQUIRE(r.exit_code == 0);
    json j = json::parse(r.out);
    CHECK(j["edges_before"] == 144);
    CHECK(j["linear"] == true);
    CHECK(j["edges_after"].get<int>() >= 72);

    auto rep = run_cli("report --in " + path_of("m13lin.json"));
    CHECK(json::parse(rep.out)["report"]["linear"] == true);
}

TEST_CASE("core catalog commands") {
    auto r = run_cli("enumerate-cores --max-vertices 6 --out " + path_of("cat6"));
    REQUIRE(r.exit_code == 0);
    json j = json::parse(r.out);
    CHECK(j["count"] == 1);
    CHECK(j["grid_present"] == false);
    CHECK(fs::exists(path_of("cat6") + "/index.json"));

    // qr(13) does contain Pasch copies; the scan must report the verified hit.
    run_cli("build --construction qr --p 13 --out " + path_of("qr13.json"));
    auto s = run_cli("scan-cores --in " + path_of("qr13.json") + " --catalog " +
                     path_of("cat6"));
    REQUIRE(s.exit_code == 0);
    json sj = json::parse(s.out);
    CHECK(sj["summary"]["found"] == 1);
    CHECK(sj["summary"]["not_found"] == 0);
    CHECK(sj["verdicts"][0]["outcome"] == "found");
    CHECK(sj["verdicts"][0].contains("witness"));

    auto ind = run_cli("scan-cores --in " + path_of("qr13.json") + " --catalog " +
                       path_of("cat6") + " --budget 1");
    CHECK(ind.exit_code == 3);
}

TEST_CASE("pattern files, text format, env-var threads, usage errors") {
    // Custom pattern file: the Pasch configuration, present in qr(13).
    std::ofstream pf(path_of("pasch.json"));
    pf << R"({"format":"pattern-v1","name":"pasch","vertices":6,)"
       << R"("edges":[[0,1,2],[0,3,4],[5,1,3],[5,2,4]]})" << "\n";
    pf.close();
    run_cli("build --construction qr --p 13 --out " + path_of("qr13.json"));
    auto r = run_cli("detect --pattern " + path_of("pasch.json") + " --in " +
                     path_of("qr13.json") + " --mode count");
    REQUIRE(r.exit_code == 0);
    CHECK(json::parse(r.out)["copies"] == 3);
    CHECK(run_cli("detect --pattern " + path_of("pasch.json") + " --in " +
                  path_of("qr13.json") + " --expect-free")
              .exit_code == 1);

    // Text output format is read back transparently.
    run_cli("build --construction qr --p 13 --text --out " + path_of("qr13.txt"));
    auto rep = run_cli("report --in " + path_of("qr13.txt"));
    REQUIRE(rep.exit_code == 0);
    CHECK(json::parse(rep.out)["report"]["edges"] == 36);

    // GRIDFREE_THREADS default must not change output.
    std::string cmd = "detect --pattern triangle --in " + path_of("qr13.json") +
                      " --mode count";
    auto plain = run_cli(cmd);
    fs::path out_file = scratch_dir() / "env_out.txt";
    std::string env_cmd = "GRIDFREE_THREADS=2 " + std::string(GRIDFREE_CLI) +
                          " " + cmd + " > " + out_file.string() + " 2>/dev/null";
    REQUIRE(std::system(env_cmd.c_str()) == 0);
    std::stringstream ss;
    ss << std::ifstream(out_file).rdbuf();
    CHECK(ss.str() == plain.out);

    // Usage errors exit 2.
    CHECK(run_cli("enumerate-cores --max-vertices 5 --out " + path_of("cat5"))
              .exit_code == 2);
    CHECK(run_cli("build --construction qr --p 13 --x-set bogus --out " +
                  path_of("x.json"))
              .exit_code == 2);
    CHECK(run_cli("solve-obstruction --equation quad-grid --p 41 "
                  "--x-set interval:0..5 --a-set interval:1..5")
              .exit_code == 2);
}

TEST_CASE("partitions command") {
    auto r = run_cli("partitions --pattern grid");
    REQUIRE(r.exit_code == 0);
    json j = json::parse(r.out);
    CHECK(j["count"] == 2);
    CHECK(j["all_equivalent"] == true);
    CHECK(j["automorphism_group_order"] == 72);
}
