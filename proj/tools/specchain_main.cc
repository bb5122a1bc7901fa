// Command-line driver: runs problem files and the bundled example corpus,
// emitting one JSON report object per command on stdout. Exit codes:
// 0 = all commands succeeded and no verifier was refuted, 1 = input error,
// 2 = a verifier returned "refuted" (which signals a kernel bug).
#include <cstdio>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "specchain/problem.hpp"

#ifndef SPECCHAIN_DEFAULT_CORPUS_DIR
#define SPECCHAIN_DEFAULT_CORPUS_DIR "corpus"
#endif

namespace {

void add_common_flags(CLI::App* app, specchain::RunOptions& options) {
    app->add_option("--order", options.order, "Monomial order for gb commands")
        ->check(CLI::IsMember({"lex", "grevlex"}))
        ->capture_default_str();
    app->add_option("--seed", options.seed, "Seed for primality sanity sampling")
        ->capture_default_str();
    app->add_option("--json-indent", options.json_indent,
                    "Indent width for JSON output (-1 = compact)")
        ->capture_default_str();
    app->add_option("--max-steps", options.max_steps,
                    "Groebner step budget; exceeding it is an error");
    app->add_flag("--parallel", options.parallel,
                  "Evaluate corpus instances in parallel (deterministic merge)");
    app->add_option("--corpus-dir", options.corpus_dir, "Override the bundled corpus directory");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact local invariants of finitely presented algebras"};
    app.require_subcommand(1);

    specchain::RunOptions options;
    options.corpus_dir = SPECCHAIN_DEFAULT_CORPUS_DIR;

    std::string problem_path;
    CLI::App* run = app.add_subcommand("run", "Execute the commands of a problem file");
    run->add_option("file", problem_path, "Problem file (JSON)")->required();
    add_common_flags(run, options);

    CLI::App* list_cmd = app.add_subcommand("list_corpus", "List bundled instance names");
    add_common_flags(list_cmd, options);

    CLI::App* run_corpus_cmd =
        app.add_subcommand("run_corpus", "Run every bundled instance and summarize");
    add_common_flags(run_corpus_cmd, options);

    CLI11_PARSE(app, argc, argv);

    try {
        specchain::apply_global_options(options);
        if (list_cmd->parsed()) {
            specchain::Json names(specchain::list_corpus(options.corpus_dir));
            std::cout << specchain::Json{{"corpus", names}}.dump(options.json_indent)
                      << "\n";
            return 0;
        }
        specchain::RunResult result;
        if (run->parsed()) {
            specchain::Problem prob =
                specchain::load_problem_file(problem_path, options.seed);
            result = specchain::run_problem(prob, options);
        } else {
            result = specchain::run_corpus(options.corpus_dir, options);
        }
        std::cout << specchain::render_reports(result.reports, options);
        return specchain::exit_code(result.summary);
    } catch (const specchain::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
