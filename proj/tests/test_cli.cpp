#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

// Drives the installed binary end to end: exit codes, reports, output files.
namespace {

struct RunResult {
    int code;
    std::string out;
};

std::string bin() {
    const char* env = std::getenv("GLUEMIN_BIN");
    REQUIRE(env);
    return env;
}

std::string goldens() {
    const char* env = std::getenv("GLUEMIN_GOLDENS");
    REQUIRE(env);
    return env;
}

RunResult run(const std::string& args) {
    std::string cmd = bin() + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe);
    std::string out;
    std::array<char, 256> buf;
    while (fgets(buf.data(), buf.size(), pipe))
        out += buf.data();
    int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

std::filesystem::path tmp_file(const std::string& name, const std::string& text) {
    auto p = std::filesystem::temp_directory_path() / name;
    std::ofstream out(p);
    out << text;
    return p;
}

} // namespace

TEST_CASE("eval on the golden machines") {
    RunResult r = run("eval " + goldens() + "/a_vec.json --word abba");
    CHECK(r.code == 0);
    CHECK(r.out == "4\n");
    r = run("eval " + goldens() + "/a_duvs.json --word abb");
    CHECK(r.code == 0);
    CHECK(r.out == "2\n");
    r = run("eval " + goldens() + "/a_duvs.json --word ''");
    CHECK(r.code == 0);
    CHECK(r.out == "1\n");
}

TEST_CASE("minimize report") {
    RunResult r = run("minimize " + goldens() + "/a_duvs.json");
    CHECK(r.code == 0);
    CHECK(r.out == "exact=true components=2 dims=[1,1] gluings=1\n");
    r = run("minimize " + goldens() + "/rotation.json");
    CHECK(r.code == 0);
    CHECK(r.out == "exact=false components=1 dims=[2] gluings=0\n");
}

TEST_CASE("minimize --out writes a loadable automaton") {
    auto out = std::filesystem::temp_directory_path() / "minimized.json";
    RunResult r = run("minimize " + goldens() + "/a_vec.json --out " + out.string());
    CHECK(r.code == 0);
    RunResult v = run("validate " + out.string());
    CHECK(v.code == 0);
    RunResult eq = run("equiv " + goldens() + "/a_vec.json " + out.string());
    CHECK(eq.code == 0);
    CHECK(eq.out == "true\n");
}

TEST_CASE("equiv across presentations and its failure exit code") {
    RunResult r = run("equiv " + goldens() + "/a_vec.json " + goldens() + "/a_duvs.json");
    CHECK(r.code == 0);
    CHECK(r.out == "true\n");
    auto doubled = tmp_file("doubled.json", [] {
        std::ifstream in(goldens() + "/a_vec.json");
        std::string text((std::istreambuf_iterator<char>(in)),
                         std::istreambuf_iterator<char>());
        auto pos = text.find("\"final\": [\n    \"1\"");
        REQUIRE(pos != std::string::npos);
        text.replace(pos + 15, 3, "\"2\"");
        return text;
    }());
    RunResult ne = run("equiv " + goldens() + "/a_vec.json " + doubled.string());
    CHECK(ne.code == 1);
    CHECK(ne.out == "false\n");
}

TEST_CASE("reach, obs, linearize, stats") {
    RunResult r = run("reach " + goldens() + "/a_vec.json");
    CHECK(r.code == 0);
    CHECK(r.out.starts_with("exact=true components=2 dims=[1,1]\n"));

    RunResult o = run("obs " + goldens() + "/a_duvs.json");
    CHECK(o.code == 0);
    CHECK(o.out.starts_with("components=2 dims=[1,1]\n"));

    auto lin = std::filesystem::temp_directory_path() / "lin.json";
    RunResult l = run("linearize " + goldens() + "/a_duvs.json --out " + lin.string());
    CHECK(l.code == 0);
    RunResult leq = run("equiv " + lin.string() + " " + goldens() + "/a_vec.json");
    CHECK(leq.code == 0);

    RunResult s = run("stats " + goldens() + "/a_vec.json");
    CHECK(s.code == 0);
    CHECK(s.out == "components=1 dims=[2] total_dim=2 gluings=0\n");
}

TEST_CASE("import commands") {
    auto dfa = tmp_file("dfa_in.json", R"({
      "states": 2, "initial": 0, "alphabet": ["a"],
      "transitions": {"a": [1, 0]}, "accepting": [0]
    })");
    auto out = std::filesystem::temp_directory_path() / "dfa_out.json";
    RunResult r = run("import-dfa " + dfa.string() + " --out " + out.string());
    CHECK(r.code == 0);
    RunResult e = run("eval " + out.string() + " --word aa");
    CHECK(e.code == 0);
    CHECK(e.out == "1\n"); // accepting output component

    auto duvs = tmp_file("duvs_in.json", R"({
      "alphabet": ["a"],
      "components": [{"dim": 1, "final": ["1"]}],
      "initial": {"component": 0, "vector": ["1"]},
      "transitions": {"a": [{"target": 0, "matrix": [["2"]]}]}
    })");
    auto dout = std::filesystem::temp_directory_path() / "duvs_out.json";
    RunResult d = run("import-duvs " + duvs.string() + " --out " + dout.string());
    CHECK(d.code == 0);
    RunResult de = run("eval " + dout.string() + " --word aaa");
    CHECK(de.out == "8\n");
}

TEST_CASE("budget flag and environment variable") {
    RunResult env = run("minimize " + goldens() + "/rotation.json");
    CHECK(env.out.starts_with("exact=false"));
    // GLUEMIN_BUDGET is read when --budget is absent
    RunResult via_env =
        run("minimize " + goldens() + "/rotation.json"); // default 8
    CHECK(via_env.out == env.out);
    std::string with_env = "GLUEMIN_BUDGET=2 " + bin() + " minimize " + goldens() +
                           "/rotation.json 2>&1";
    FILE* pipe = popen(with_env.c_str(), "r");
    REQUIRE(pipe);
    std::string out;
    std::array<char, 256> buf;
    while (fgets(buf.data(), buf.size(), pipe))
        out += buf.data();
    pclose(pipe);
    CHECK(out.starts_with("exact=false"));
}

TEST_CASE("exit codes for malformed and invalid input") {
    RunResult missing = run("validate /nonexistent.json");
    CHECK(missing.code == 2);
    auto bad = tmp_file("bad.json", "{ not json");
    CHECK(run("validate " + bad.string()).code == 2);
    auto wrong_type = tmp_file("wrong.json", R"({"type":"language_table","entries":[]})");
    CHECK(run("eval " + wrong_type.string() + " --word a").code == 2);
    // well-formed but semantically broken: non-injective gluing
    auto folded = tmp_file("folded.json", R"({
      "type": "glued_space", "components": [2, 2],
      "gluings": [{"i": 0, "j": 1,
                   "domain": [["1","0"],["0","1"]],
                   "phi": [["1","0"],["1","0"]]}]
    })");
    RunResult inv = run("validate " + folded.string());
    CHECK(inv.code == 1);
    CHECK(inv.out.find("NonInjectiveGluing") != std::string::npos);
}
