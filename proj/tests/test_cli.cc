// End-to-end tests that drive the command-line binary as a subprocess and
// check its JSON line output, exit codes, and determinism guarantees.
#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>
#include <vector>

namespace {

struct CliResult {
    int exit_code = -1;
    std::string output; // stdout and stderr interleaved
};

CliResult run_cli(const std::string& args) {
    const std::string cmd = std::string(SPECCHAIN_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    CliResult res;
    char buf[4096];
    while (true) {
        const size_t n = fread(buf, 1, sizeof buf, pipe);
        if (n == 0) break;
        res.output.append(buf, n);
    }
    const int status = pclose(pipe);
    res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return res;
}

std::string write_problem(const std::string& name, const std::string& text) {
    const auto dir = std::filesystem::temp_directory_path() / "specchain_cli_tests";
    std::filesystem::create_directories(dir);
    const auto path = dir / name;
    std::ofstream out(path);
    out << text;
    REQUIRE(out.good());
    return path.string();
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> lines;
    std::string cur;
    for (char c : text) {
        if (c == '\n') {
            lines.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    if (!cur.empty()) lines.push_back(cur);
    return lines;
}

const char* kCuspProblem = R"({
  "schema": "specchain/1",
  "field": {"kind": "rationals"},
  "algebras": {
    "cusp": {"kind": "base", "vars": ["x", "y"], "relations": ["y^2 - x^3"]}
  },
  "primes": {
    "origin": {"algebra": "cusp", "gens": ["x", "y"]}
  },
  "commands": [
    {"op": "edim", "algebra": "cusp", "prime": "origin"}
  ]
})";

const char* kCubicGbProblem = R"({
  "schema": "specchain/1",
  "field": {"kind": "rationals"},
  "algebras": {
    "cubic": {"kind": "base", "vars": ["x", "y", "z"],
              "relations": ["y - x^2", "z - x^3"]}
  },
  "primes": {},
  "commands": [
    {"op": "gb", "algebra": "cubic"}
  ]
})";

} // namespace

TEST_CASE("run reports local invariants for a problem file") {
    const std::string path = write_problem("cusp.json", kCuspProblem);
    const CliResult res = run_cli("run " + path);
    CHECK(res.exit_code == 0);
    const auto lines = lines_of(res.output);
    REQUIRE(lines.size() == 1);
    CHECK(lines[0] ==
          R"({"command":{"op":"edim","algebra":"cusp","prime":"origin"},)"
          R"("status":"ok","data":{"edim":2,"dim":1,"cdim":1}})");
}

TEST_CASE("run honours --json-indent") {
    const std::string path = write_problem("cusp.json", kCuspProblem);
    const CliResult compact = run_cli("run " + path);
    const CliResult pretty = run_cli("run --json-indent 2 " + path);
    CHECK(pretty.exit_code == 0);
    CHECK(compact.output.find("\n  ") == std::string::npos);
    CHECK(pretty.output.find("\n  \"command\"") != std::string::npos);
}

TEST_CASE("run honours --order for groebner bases") {
    const std::string path = write_problem("cubic.json", kCubicGbProblem);
    const CliResult grevlex = run_cli("run --order grevlex " + path);
    const CliResult lex = run_cli("run --order lex " + path);
    CHECK(grevlex.exit_code == 0);
    CHECK(lex.exit_code == 0);
    CHECK(grevlex.output != lex.output);
    // The degree-order basis of this ideal has three elements, the
    // elimination-order basis four (it picks up y^3 - z^2).
    CHECK(grevlex.output.find("\"order\":\"grevlex\"") != std::string::npos);
    CHECK(lex.output.find("\"order\":\"lex\"") != std::string::npos);
    CHECK(lex.output.find("y^3 - z^2") != std::string::npos);
    CHECK(grevlex.output.find("y^3 - z^2") == std::string::npos);
}

TEST_CASE("run honours --max-steps as a computation budget") {
    // The budget applies process-wide; here it already trips while the
    // problem is loaded (presentations are validated eagerly), which
    // surfaces as a top-level error like any other load failure.
    const std::string path = write_problem("cubic.json", kCubicGbProblem);
    const CliResult res = run_cli("run --max-steps 1 " + path);
    CHECK(res.exit_code == 1);
    CHECK(res.output.find("error:") != std::string::npos);
    CHECK(res.output.find("budget exceeded") != std::string::npos);
}

TEST_CASE("malformed polynomial reports a byte offset and exits 1") {
    const std::string path = write_problem("bad_poly.json", R"({
  "schema": "specchain/1",
  "field": {"kind": "rationals"},
  "algebras": {
    "a": {"kind": "base", "vars": ["x"], "relations": ["x^ + 1"]}
  },
  "primes": {},
  "commands": []
})");
    const CliResult res = run_cli("run " + path);
    CHECK(res.exit_code == 1);
    CHECK(res.output.find("error:") != std::string::npos);
    CHECK(res.output.find("offset") != std::string::npos);
}

TEST_CASE("malformed JSON reports the byte position and exits 1") {
    const std::string path = write_problem("bad_json.json", "{ not json");
    const CliResult res = run_cli("run " + path);
    CHECK(res.exit_code == 1);
    CHECK(res.output.find("not valid JSON at byte") != std::string::npos);
}

TEST_CASE("missing problem file exits 1") {
    const CliResult res = run_cli("run /nonexistent/missing.json");
    CHECK(res.exit_code == 1);
    CHECK(res.output.find("error:") != std::string::npos);
}

TEST_CASE("unknown prime in a command is a per-command error with exit 1") {
    const std::string path = write_problem("bad_prime.json", R"({
  "schema": "specchain/1",
  "field": {"kind": "rationals"},
  "algebras": {
    "cusp": {"kind": "base", "vars": ["x", "y"], "relations": ["y^2 - x^3"]}
  },
  "primes": {
    "origin": {"algebra": "cusp", "gens": ["x", "y"]}
  },
  "commands": [
    {"op": "edim", "algebra": "cusp", "prime": "origin"},
    {"op": "dim", "algebra": "cusp", "prime": "bogus"}
  ]
})");
    const CliResult res = run_cli("run " + path);
    CHECK(res.exit_code == 1);
    const auto lines = lines_of(res.output);
    REQUIRE(lines.size() == 2);
    // The good command still runs; the bad one carries the error report.
    CHECK(lines[0].find("\"status\":\"ok\"") != std::string::npos);
    CHECK(lines[1].find("\"status\":\"error\"") != std::string::npos);
    CHECK(lines[1].find("bogus") != std::string::npos);
}

TEST_CASE("list_corpus names the bundled instances") {
    const CliResult res = run_cli("list_corpus --corpus-dir " SPECCHAIN_CORPUS_DIR);
    CHECK(res.exit_code == 0);
    const auto lines = lines_of(res.output);
    REQUIRE(lines.size() == 1);
    CHECK(lines[0].rfind("{\"corpus\":[", 0) == 0);
    for (const char* name :
         {"\"cusp\"", "\"cusp_tensor_cusp\"", "\"inseparable_char2\"",
          "\"gauss_cusp\"", "\"twisted_cubic\""})
        CHECK(lines[0].find(name) != std::string::npos);
}

TEST_CASE("run_corpus passes with the expected verdict tally") {
    const CliResult res = run_cli("run_corpus --corpus-dir " SPECCHAIN_CORPUS_DIR);
    CHECK(res.exit_code == 0);
    CHECK(res.output.find("\"status\":\"error\"") == std::string::npos);
    CHECK(res.output.find("\"refuted\"") != std::string::npos);
    const auto lines = lines_of(res.output);
    REQUIRE(!lines.empty());
    CHECK(lines.back() ==
          R"({"summary":{"confirmed":59,"hypothesis_not_met":5,"refuted":0}})");
    // Every line is a single JSON object; instance lines carry the instance key.
    for (size_t i = 0; i + 1 < lines.size(); ++i)
        CHECK(lines[i].rfind("{\"instance\":", 0) == 0);
}

TEST_CASE("run_corpus output is byte-identical across runs and modes") {
    const CliResult first = run_cli("run_corpus --corpus-dir " SPECCHAIN_CORPUS_DIR);
    const CliResult second = run_cli("run_corpus --corpus-dir " SPECCHAIN_CORPUS_DIR);
    const CliResult parallel =
        run_cli("run_corpus --parallel --corpus-dir " SPECCHAIN_CORPUS_DIR);
    CHECK(first.exit_code == 0);
    CHECK(first.output == second.output);
    CHECK(first.output == parallel.output);
}

TEST_CASE("run_corpus on an empty directory prints a zero summary") {
    const auto dir =
        std::filesystem::temp_directory_path() / "specchain_cli_tests" / "empty_corpus";
    std::filesystem::create_directories(dir);
    const CliResult res = run_cli("run_corpus --corpus-dir " + dir.string());
    CHECK(res.exit_code == 0);
    const auto lines = lines_of(res.output);
    REQUIRE(lines.size() == 1);
    CHECK(lines[0] ==
          R"({"summary":{"confirmed":0,"hypothesis_not_met":0,"refuted":0}})");
}

TEST_CASE("usage errors exit nonzero") {
    CHECK(run_cli("").exit_code != 0);                  // missing subcommand
    CHECK(run_cli("run").exit_code != 0);               // missing file argument
    CHECK(run_cli("frobnicate").exit_code != 0);        // unknown subcommand
    const std::string path = write_problem("cusp.json", kCuspProblem);
    CHECK(run_cli("run --order bogus " + path).exit_code != 0);
}
