#include <cstdio>
#include <string>

#include "doctest.h"

namespace {

struct RunResult {
    int code = -1;
    std::string out;
};

RunResult run_shell(const std::string& cmd) {
    FILE* pipe = popen((cmd + " 2>/dev/null").c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult result;
    char buffer[4096];
    while (std::size_t n = fread(buffer, 1, sizeof buffer, pipe)) {
        result.out.append(buffer, n);
    }
    int status = pclose(pipe);
    result.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

RunResult run_cli(const std::string& args, const std::string& env = "") {
    return run_shell(env + " " + std::string(ORDCOMPLETE_CLI_PATH) + " " + args);
}

std::string fixture(const std::string& name) {
    return std::string(ORDCOMPLETE_FIXTURE_DIR) + "/" + name;
}

std::string slurp(const std::string& path) {
    FILE* f = fopen(path.c_str(), "rb");
    REQUIRE(f != nullptr);
    std::string out;
    char buffer[4096];
    while (std::size_t n = fread(buffer, 1, sizeof buffer, f)) out.append(buffer, n);
    fclose(f);
    return out;
}

}  // namespace

TEST_SUITE_BEGIN("cli");

TEST_CASE("poset check accepts a valid chain") {
    RunResult r = run_cli("poset check --input " + fixture("chain3.json"));
    CHECK(r.code == 0);
    CHECK(r.out.find("\"ok\": true") != std::string::npos);
    CHECK(r.out.find("\"relation_size\": 6") != std::string::npos);

    RunResult dot = run_cli("poset check --format dot --input " + fixture("chain3.json"));
    CHECK(dot.code == 0);
    CHECK(dot.out.find("\"a\" -> \"b\"") != std::string::npos);
}

TEST_CASE("poset check rejects cycles and duplicates with the input exit code") {
    CHECK(run_cli("poset check --input " + fixture("cyclic.json")).code == 2);
    CHECK(run_cli("poset check --input " + fixture("duplicate.json")).code == 2);
    CHECK(run_cli("poset check --input /nonexistent.json").code == 2);
}

TEST_CASE("malformed documents exit with the input code") {
    REQUIRE(run_shell("printf '{ not json' > /tmp/ordc_bad.json").code == 0);
    CHECK(run_cli("poset check --input /tmp/ordc_bad.json").code == 2);
    REQUIRE(run_shell("printf '{\"elements\": 3}' > /tmp/ordc_bad.json").code == 0);
    CHECK(run_cli("global --input /tmp/ordc_bad.json").code == 2);
}

TEST_CASE("complete emits the lattice in both formats") {
    RunResult r = run_cli("complete --input " + fixture("chain3.json"));
    CHECK(r.code == 0);
    CHECK(r.out.find("\"cuts\"") != std::string::npos);

    RunResult dot = run_cli("complete --format dot --input " + fixture("chain3.json"));
    CHECK(dot.code == 0);
    CHECK(dot.out.find("digraph hasse") != std::string::npos);
    CHECK(dot.out.find("\"{a}\" -> \"{a,b}\"") != std::string::npos);
}

TEST_CASE("complete counts the antichain cuts") {
    std::string cmd = std::string(ORDCOMPLETE_CLI_PATH) + " complete --input " +
                      fixture("antichain3.json") +
                      " | python3 -c \"import json,sys; print(len(json.load(sys.stdin)['cuts']))\"";
    RunResult r = run_shell(cmd);
    CHECK(r.code == 0);
    CHECK(r.out == "5\n");
}

TEST_CASE("solve reproduces the frozen outcomes byte for byte") {
    RunResult solvable = run_cli("solve --oracle --input " + fixture("worked_solvable.json"));
    CHECK(solvable.code == 0);
    CHECK(solvable.out == slurp(fixture("expected/worked_solvable.out.json")));

    RunResult unsolvable = run_cli("solve --input " + fixture("worked_unsolvable.json"));
    CHECK(unsolvable.code == 0);
    CHECK(unsolvable.out == slurp(fixture("expected/worked_unsolvable.out.json")));
}

TEST_CASE("solve handles factored documents") {
    RunResult r = run_cli("solve --oracle --input " + fixture("worked_factored.json"));
    CHECK(r.code == 0);
    CHECK(r.out.find("\"solvable\": true") != std::string::npos);
    // Classes of the re-based problem collapse the two z-points with equal
    // images.
    CHECK(r.out.find("\"z1\"") != std::string::npos);
}

TEST_CASE("global reports the unattained cuts") {
    RunResult r = run_cli("global --input " + fixture("worked_solvable.json"));
    CHECK(r.code == 0);
    CHECK(r.out == slurp(fixture("expected/worked_global.out.json")));
}

TEST_CASE("the pde demo reproduces the frozen outcomes byte for byte") {
    RunResult classical =
        run_cli("demo pde --oracle --input " + fixture("pde_identity_attained.json"));
    CHECK(classical.code == 0);
    CHECK(classical.out == slurp(fixture("expected/pde_identity_attained.out.json")));

    RunResult gap = run_cli("demo pde --oracle --input " + fixture("pde_cube_gap.json"));
    CHECK(gap.code == 0);
    CHECK(gap.out == slurp(fixture("expected/pde_cube_gap.out.json")));

    RunResult generalized =
        run_cli("demo pde --oracle --input " + fixture("pde_generalized.json"));
    CHECK(generalized.code == 0);
    CHECK(generalized.out == slurp(fixture("expected/pde_generalized.out.json")));
}

TEST_CASE("caps map to the dedicated exit code") {
    CHECK(run_cli("poset check --cap-elements 2 --input " + fixture("chain3.json")).code == 3);
    CHECK(run_cli("demo pde --cap-elements 4 --input " +
                  fixture("pde_identity_attained.json")).code == 3);
    CHECK(run_cli("complete --cap-cuts 2 --input " + fixture("chain3.json")).code == 3);
}

TEST_CASE("the element cap can come from the environment") {
    RunResult capped = run_cli("poset check --input " + fixture("chain3.json"),
                               "ORDCOMPLETE_CAP_ELEMENTS=2");
    CHECK(capped.code == 3);
    // An explicit flag wins over the environment.
    RunResult raised = run_cli("poset check --cap-elements 10 --input " + fixture("chain3.json"),
                               "ORDCOMPLETE_CAP_ELEMENTS=2");
    CHECK(raised.code == 0);
}

TEST_CASE("fixture generation is reproducible per seed") {
    RunResult a = run_cli("gen fixtures --seed 7 --count 5");
    RunResult b = run_cli("gen fixtures --seed 7 --count 5");
    RunResult c = run_cli("gen fixtures --seed 8 --count 5");
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out != c.out);
    CHECK(a.out.find("\"problems\"") != std::string::npos);
}

TEST_CASE("generated fixtures are solvable inputs") {
    RunResult gen = run_cli("gen fixtures --seed 3 --count 3 --output /tmp/ordc_gen.json");
    REQUIRE(gen.code == 0);
    std::string script =
        "python3 -c \"import json,subprocess\n"
        "doc = json.load(open('/tmp/ordc_gen.json'))\n"
        "for p in doc['problems']:\n"
        "    open('/tmp/ordc_one.json', 'w').write(json.dumps(p))\n"
        "    r = subprocess.run(['" +
        std::string(ORDCOMPLETE_CLI_PATH) +
        "', 'solve', '--oracle', '--input', '/tmp/ordc_one.json'], capture_output=True)\n"
        "    assert r.returncode == 0, r.returncode\n"
        "print('all-ok')\"";
    RunResult r = run_shell(script);
    CHECK(r.code == 0);
    CHECK(r.out.find("all-ok") != std::string::npos);
}

TEST_SUITE_END();
