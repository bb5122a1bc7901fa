#ifndef SPECCHAIN_PROBLEM_HPP
#define SPECCHAIN_PROBLEM_HPP

/// Problem-file model: a JSON document declaring a base field, named algebra
/// presentations, named primes, and a command list; plus the runner that
/// executes commands into JSON report objects and the bundled-corpus driver.
/// All output is exact (integers and coefficient strings, never floats) and
/// byte-deterministic across reruns.

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "specchain/theorems.hpp"

namespace specchain {

using Json = nlohmann::ordered_json;

inline constexpr const char* kProblemSchema = "specchain/1";

struct RunOptions {
    std::string order = "grevlex";  // monomial order for the gb command
    unsigned seed = 12345;          // primality sampling seed
    int json_indent = -1;           // -1: compact single-line objects
    long max_steps = 0;             // >0: process-wide GB step budget
    bool parallel = false;          // corpus-level parallelism
    std::string corpus_dir;         // bundled instances directory
};

struct NamedPrime {
    std::string algebra;
    PrimeSpec prime;
};

struct Problem {
    FieldPtr field;
    std::map<std::string, PresentedAlgebra> algebras;
    std::map<std::string, NamedPrime> primes;
    Json commands = Json::array();
};

namespace probdetail {

[[noreturn]] inline void fail(const std::string& path, const std::string& msg) {
    throw Error(path + ": " + msg);
}

inline const Json& expect(const Json& j, const std::string& key, const std::string& path) {
    auto it = j.find(key);
    if (it == j.end()) fail(path, "missing key \"" + key + "\"");
    return *it;
}

inline std::string expect_string(const Json& j, const std::string& key,
                                 const std::string& path) {
    const Json& v = expect(j, key, path);
    if (!v.is_string()) fail(path + "/" + key, "expected a string");
    return v.get<std::string>();
}

inline std::vector<std::string> string_list(const Json& v, const std::string& path) {
    if (!v.is_array()) fail(path, "expected an array of strings");
    std::vector<std::string> out;
    for (const auto& e : v) {
        if (!e.is_string()) fail(path, "expected an array of strings");
        out.push_back(e.get<std::string>());
    }
    return out;
}

} // namespace probdetail

/// Parses a constant expression ("2", "-1/3", "t^2 + 1") into a field element.
inline FieldElement parse_field_element(const FieldPtr& f, const std::string& text) {
    RingPtr scalars = PolyRing::make(f, {});
    Polynomial p = parse_polynomial(scalars, text);
    if (p.is_zero()) return f->zero();
    return p.terms().front().coeff;
}

/// Field descriptors: {"kind":"rationals"} | {"kind":"prime","p":7} |
/// {"kind":"rational_function","base":...,"parameter":"t"} |
/// {"kind":"extension","base":...,"variable":"z","min_poly":["-2","0","1"]}.
inline FieldPtr parse_field(const Json& j, const std::string& path) {
    using probdetail::expect;
    using probdetail::fail;
    if (!j.is_object()) fail(path, "expected a field object");
    std::string kind = probdetail::expect_string(j, "kind", path);
    if (kind == "rationals") return Field::rationals();
    if (kind == "prime") {
        const Json& p = expect(j, "p", path);
        if (!p.is_number_integer()) fail(path + "/p", "expected an integer");
        return Field::prime_field(p.get<std::int64_t>());
    }
    if (kind == "rational_function") {
        FieldPtr base = parse_field(expect(j, "base", path), path + "/base");
        return Field::rational_function(base, probdetail::expect_string(j, "parameter", path));
    }
    if (kind == "extension") {
        FieldPtr base = parse_field(expect(j, "base", path), path + "/base");
        std::vector<FieldElement> coeffs;
        const Json& mp = expect(j, "min_poly", path);
        for (const auto& c : probdetail::string_list(mp, path + "/min_poly"))
            coeffs.push_back(parse_field_element(base, c));
        return Field::extension(base, probdetail::expect_string(j, "variable", path),
                                std::move(coeffs));
    }
    fail(path, "unknown field kind: " + kind);
}

/// Builds the named algebras in declaration order; tensor / poly_extension
/// entries may reference any earlier name. The seed feeds the randomized
/// primality sanity sampling of declared primes.
inline Problem parse_problem(const Json& j, unsigned seed = 12345) {
    using probdetail::expect;
    using probdetail::fail;
    if (!j.is_object()) fail("/", "expected a problem object");
    if (probdetail::expect_string(j, "schema", "/") != kProblemSchema)
        fail("/schema", std::string("unsupported schema (expected \"") + kProblemSchema +
                            "\")");
    Problem prob;
    prob.field = parse_field(expect(j, "field", "/"), "/field");

    auto algebras = j.find("algebras");
    if (algebras != j.end()) {
        if (!algebras->is_object()) fail("/algebras", "expected an object");
        for (const auto& [name, spec] : algebras->items()) {
            std::string path = "/algebras/" + name;
            if (!spec.is_object()) fail(path, "expected an algebra object");
            std::string kind = spec.contains("kind")
                                   ? probdetail::expect_string(spec, "kind", path)
                                   : std::string("base");
            PresentedAlgebra alg;
            if (kind == "base") {
                std::vector<std::string> vars;
                if (spec.contains("vars"))
                    vars = probdetail::string_list(spec.at("vars"), path + "/vars");
                std::vector<std::string> rels;
                if (spec.contains("relations"))
                    rels = probdetail::string_list(spec.at("relations"), path + "/relations");
                alg = PresentedAlgebra::present(prob.field, vars, rels);
            } else if (kind == "tensor" || kind == "poly_extension") {
                auto resolve = [&](const std::string& key) -> const PresentedAlgebra& {
                    std::string ref = probdetail::expect_string(spec, key, path);
                    auto it = prob.algebras.find(ref);
                    if (it == prob.algebras.end())
                        fail(path + "/" + key, "unknown algebra: " + ref);
                    return it->second;
                };
                if (kind == "tensor") {
                    alg = tensor(resolve("left"), resolve("right"));
                } else {
                    alg = poly_extension(
                        resolve("base_algebra"),
                        probdetail::string_list(expect(spec, "new_vars", path),
                                                path + "/new_vars"));
                }
            } else {
                fail(path, "unknown algebra kind: " + kind);
            }
            if (spec.contains("equidimensional") && spec.at("equidimensional").get<bool>())
                alg = alg.with_equidimensional_relations();
            prob.algebras.emplace(name, std::move(alg));
        }
    }

    auto primes = j.find("primes");
    if (primes != j.end()) {
        if (!primes->is_object()) fail("/primes", "expected an object");
        for (const auto& [name, spec] : primes->items()) {
            std::string path = "/primes/" + name;
            if (!spec.is_object()) fail(path, "expected a prime object");
            std::string ref = probdetail::expect_string(spec, "algebra", path);
            auto it = prob.algebras.find(ref);
            if (it == prob.algebras.end()) fail(path + "/algebra", "unknown algebra: " + ref);
            std::vector<std::string> gens = probdetail::string_list(
                expect(spec, "gens", path), path + "/gens");
            bool equidim = spec.contains("equidimensional") &&
                           spec.at("equidimensional").get<bool>();
            PrimeSpec p = PrimeSpec::assert_prime(
                IdealHandle::parse(it->second.ring(), gens), equidim, seed);
            prob.primes.emplace(name, NamedPrime{ref, std::move(p)});
        }
    }

    auto commands = j.find("commands");
    if (commands != j.end()) {
        if (!commands->is_array()) fail("/commands", "expected an array");
        prob.commands = *commands;
    }
    return prob;
}

inline Problem load_problem_text(const std::string& text, unsigned seed = 12345) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw Error("problem file is not valid JSON at byte " + std::to_string(e.byte) +
                    ": " + e.what());
    }
    return parse_problem(j, seed);
}

inline Problem load_problem_file(const std::string& file, unsigned seed = 12345) {
    std::ifstream in(file);
    if (!in) throw Error("cannot open problem file: " + file);
    std::ostringstream buf;
    buf << in.rdbuf();
    return load_problem_text(buf.str(), seed);
}

/// Applies process-wide knobs (currently the GB step budget).
inline void apply_global_options(const RunOptions& options) {
    if (options.max_steps > 0) default_gb_budget() = options.max_steps;
}

// ---------------------------------------------------------------------------
// Command execution

struct RunSummary {
    int confirmed = 0;
    int hypothesis_not_met = 0;
    int refuted = 0;
    bool input_error = false;

    void absorb(const RunSummary& o) {
        confirmed += o.confirmed;
        hypothesis_not_met += o.hypothesis_not_met;
        refuted += o.refuted;
        input_error = input_error || o.input_error;
    }
    Json json() const {
        return Json{{"confirmed", confirmed},
                    {"hypothesis_not_met", hypothesis_not_met},
                    {"refuted", refuted}};
    }
};

/// Exit policy: refuted (2) outranks input errors (1); clean runs exit 0.
inline int exit_code(const RunSummary& s) {
    if (s.refuted > 0) return 2;
    if (s.input_error) return 1;
    return 0;
}

inline Json verdict_json(const VerdictReport& r) {
    Json components = Json::array();
    for (const auto& c : r.rhs_components)
        components.push_back(Json{{"name", c.first}, {"value", c.second}});
    auto flags = [](const std::vector<HypothesisCheck>& hs) {
        Json out = Json::array();
        for (const auto& h : hs)
            out.push_back(Json{{"name", h.name}, {"passed", h.passed}});
        return out;
    };
    return Json{{"theorem", r.theorem},       {"instance", r.instance},
                {"lhs", r.lhs},               {"rhs_components", components},
                {"rhs_total", r.rhs_total},   {"hypotheses", flags(r.hypotheses)},
                {"checks", flags(r.checks)},  {"verdict", r.verdict}};
}

namespace probdetail {

inline const PresentedAlgebra& named_algebra(const Problem& prob, const Json& cmd,
                                             const std::string& key,
                                             const std::string& path) {
    std::string name = expect_string(cmd, key, path);
    auto it = prob.algebras.find(name);
    if (it == prob.algebras.end()) fail(path + "/" + key, "unknown algebra: " + name);
    return it->second;
}

inline const NamedPrime& named_prime(const Problem& prob, const Json& cmd,
                                     const std::string& path,
                                     const std::string& key = "prime") {
    std::string name = expect_string(cmd, key, path);
    auto it = prob.primes.find(name);
    if (it == prob.primes.end()) fail(path + "/" + key, "unknown prime: " + name);
    return it->second;
}

/// Resolves {"algebra": A, "prime": P} pairs, enforcing that P was declared
/// for A's ambient.
inline std::pair<const PresentedAlgebra*, const PrimeSpec*> algebra_prime(
    const Problem& prob, const Json& cmd, const std::string& path,
    const std::string& algebra_key = "algebra") {
    const PresentedAlgebra& alg = named_algebra(prob, cmd, algebra_key, path);
    const NamedPrime& np = named_prime(prob, cmd, path);
    if (np.algebra != expect_string(cmd, algebra_key, path))
        fail(path, "prime \"" + expect_string(cmd, "prime", path) +
                       "\" was declared for algebra \"" + np.algebra + "\"");
    return {&alg, &np.prime};
}

inline ContractionTarget parse_embedding(const std::string& s, const std::string& path) {
    if (s == "left_factor") return ContractionTarget::left_factor;
    if (s == "right_factor") return ContractionTarget::right_factor;
    if (s == "base") return ContractionTarget::base;
    fail(path, "unknown embedding: " + s);
}

/// Reads the scalar-extension presentation off a tensor whose left factor is
/// a one-variable algebra with a single relation.
inline SimpleExtension extension_of(const PresentedAlgebra& C, const std::string& path) {
    const PresentedAlgebra& K = C.left_factor();
    if (K.ring()->nvars() != 1 || K.relations().gens().size() != 1)
        fail(path, "scalar extension factor must be univariate with one relation");
    IdealHandle rels = K.relations();
    return SimpleExtension{K.ring()->vars()[0], rels.gens()[0].str()};
}

inline VerdictReport run_verifier(const Problem& prob, const Json& cmd,
                                  const std::string& path) {
    std::string tag = expect_string(cmd, "tag", path);
    if (tag == "prop_n1") {
        auto [alg, prime] = algebra_prime(prob, cmd, path);
        LocalMapDescriptor map;
        if (cmd.contains("embedding"))
            map = canonical_map(*alg, *prime,
                                parse_embedding(expect_string(cmd, "embedding", path), path));
        else
            map = identity_local_map(*alg, *prime);
        std::vector<std::string> gens = string_list(expect(cmd, "ideal_gens", path),
                                                    path + "/ideal_gens");
        return verify_prop_n1(map, IdealHandle::parse(map.source.ring(), gens));
    }
    if (tag == "gd_corollaries") {
        auto [alg, prime] = algebra_prime(prob, cmd, path);
        if (cmd.contains("embedding"))
            return verify_gd_corollaries(canonical_map(
                *alg, *prime, parse_embedding(expect_string(cmd, "embedding", path), path)));
        return verify_gd_corollaries(identity_local_map(*alg, *prime));
    }
    if (tag == "chain_dim_polynomial" || tag == "chain_dim_tensor_fibre" ||
        tag == "chain_dim_tensor_extended") {
        auto [alg, prime] = algebra_prime(prob, cmd, path);
        ChainKind kind = tag == "chain_dim_polynomial" ? ChainKind::polynomial
                         : tag == "chain_dim_tensor_fibre" ? ChainKind::tensor_fibre
                                                           : ChainKind::tensor_extended;
        return verify_special_chain_dim(kind, *alg, *prime);
    }
    if (tag == "thm_p1" || tag == "cor_p2") {
        auto [alg, prime] = algebra_prime(prob, cmd, path, "extension");
        const PresentedAlgebra& R = alg->parent();
        if (tag == "thm_p1") return verify_thm_p1(R, alg->new_vars(), *prime);
        return verify_cor_p2(R, alg->new_vars(), *prime);
    }
    if (tag == "localized_regularity") {
        const PresentedAlgebra& C = named_algebra(prob, cmd, "extension", path);
        std::string set = expect_string(cmd, "set", path);
        MultiplicativeSetDescriptor S;
        if (set == "nagata") {
            S = MultiplicativeSetDescriptor::nagata();
        } else if (set == "serre") {
            S = MultiplicativeSetDescriptor::serre();
        } else if (set == "explicit") {
            std::vector<PrimeSpec> avoided;
            for (const auto& name :
                 string_list(expect(cmd, "avoided", path), path + "/avoided")) {
                auto it = prob.primes.find(name);
                if (it == prob.primes.end()) fail(path + "/avoided", "unknown prime: " + name);
                avoided.push_back(it->second.prime);
            }
            S = MultiplicativeSetDescriptor::explicit_list(std::move(avoided));
        } else {
            fail(path + "/set", "unknown multiplicative set kind: " + set);
        }
        std::vector<PrimeSpec> primes;
        for (const auto& name : string_list(expect(cmd, "primes", path), path + "/primes")) {
            auto it = prob.primes.find(name);
            if (it == prob.primes.end()) fail(path + "/primes", "unknown prime: " + name);
            primes.push_back(it->second.prime);
        }
        return check_localized_regularity(C.parent(), C.new_vars(), S, primes);
    }
    if (tag == "prop_f1" || tag == "lemma_s11" || tag == "thm_r1" || tag == "cor_r2" ||
        tag == "edim_inequalities") {
        auto [alg, prime] = algebra_prime(prob, cmd, path, "tensor");
        const PresentedAlgebra& A = alg->left_factor();
        const PresentedAlgebra& B = alg->right_factor();
        if (tag == "prop_f1") return verify_prop_f1(A, B, *prime);
        if (tag == "lemma_s11") return verify_lemma_s11(A, B, *prime);
        if (tag == "edim_inequalities") return verify_edim_inequalities(A, B, *prime);
        if (tag == "thm_r1") {
            bool asserted = cmd.contains("separability_asserted") &&
                            cmd.at("separability_asserted").get<bool>();
            return verify_thm_r1(A, B, *prime, asserted);
        }
        R2Profile profile = R2Profile::check_separability;
        if (cmd.contains("profile")) {
            std::string p = expect_string(cmd, "profile", path);
            if (p == "check_separability") profile = R2Profile::check_separability;
            else if (p == "residually_separable") profile = R2Profile::residually_separable;
            else if (p == "algebraically_closed") profile = R2Profile::algebraically_closed;
            else fail(path + "/profile", "unknown profile: " + p);
        }
        return verify_cor_r2(A, B, *prime, profile);
    }
    if (tag == "thm_s1" || tag == "cor_s2") {
        auto [alg, prime] = algebra_prime(prob, cmd, path, "tensor");
        SimpleExtension K = extension_of(*alg, path);
        const PresentedAlgebra& A = alg->right_factor();
        if (tag == "thm_s1") return verify_thm_s1(K, A, *prime);
        return verify_cor_s2(K, A, *prime);
    }
    fail(path + "/tag", "unknown verifier tag: " + tag);
}

} // namespace probdetail

struct RunResult {
    std::vector<Json> reports;
    RunSummary summary;
};

inline RunResult run_corpus(const std::string& dir, const RunOptions& options);

/// Executes one command record; errors become {"status":"error"} reports.
inline Json execute_command(const Problem& prob, const Json& cmd, const RunOptions& options,
                            RunSummary& summary, bool in_corpus = false) {
    Json report{{"command", cmd}};
    try {
        if (!cmd.is_object()) probdetail::fail("command", "expected an object");
        std::string op = probdetail::expect_string(cmd, "op", "command");
        Json data;
        if (op == "gb") {
            const IdealHandle* handle = nullptr;
            IdealHandle storage;
            if (cmd.contains("prime")) {
                storage = probdetail::named_prime(prob, cmd, "command").prime.ideal();
                handle = &storage;
            } else {
                storage = probdetail::named_algebra(prob, cmd, "algebra", "command")
                              .relations();
                handle = &storage;
            }
            MonomialOrder ord = options.order == "lex" ? MonomialOrder::lex()
                                                       : MonomialOrder::grevlex();
            const GroebnerBasis& gb = handle->groebner(ord);
            Json basis = Json::array();
            for (const auto& p : gb.polys) basis.push_back(p.str());
            data = Json{{"order", options.order}, {"basis", basis}};
        } else if (op == "dim") {
            auto [alg, prime] = probdetail::algebra_prime(prob, cmd, "command");
            data = Json{{"dim", local_dim(*alg, *prime)}};
        } else if (op == "height") {
            const NamedPrime& np = probdetail::named_prime(prob, cmd, "command");
            data = Json{{"height", height(np.prime)}};
        } else if (op == "edim") {
            auto [alg, prime] = probdetail::algebra_prime(prob, cmd, "command");
            LocalReport rep = local_report(*alg, *prime);
            data = Json{{"edim", rep.edim}, {"dim", rep.dim_local}, {"cdim", rep.cdim}};
        } else if (op == "cdim") {
            auto [alg, prime] = probdetail::algebra_prime(prob, cmd, "command");
            data = Json{{"cdim", cdim_local(*alg, *prime)}};
        } else if (op == "mu") {
            auto [alg, prime] = probdetail::algebra_prime(prob, cmd, "command");
            LocalReport rep = local_report(*alg, *prime);
            data = Json{{"mu", rep.mu}, {"path", rep.mu_path}};
        } else if (op == "verify") {
            VerdictReport v = probdetail::run_verifier(prob, cmd, "command");
            if (v.verdict == "confirmed") summary.confirmed += 1;
            else if (v.verdict == "hypothesis-not-met") summary.hypothesis_not_met += 1;
            else summary.refuted += 1;
            data = verdict_json(v);
        } else if (op == "corpus") {
            if (in_corpus)
                probdetail::fail("command", "corpus command not allowed inside corpus instances");
            RunResult res = run_corpus(options.corpus_dir, options);
            summary.absorb(res.summary);
            data = Json{{"summary", res.summary.json()}};
        } else {
            probdetail::fail("command/op", "unknown command: " + op);
        }
        report["status"] = "ok";
        report["data"] = std::move(data);
    } catch (const Error& e) {
        summary.input_error = true;
        report["status"] = "error";
        report["error"] = e.what();
    }
    return report;
}

inline RunResult run_problem(const Problem& prob, const RunOptions& options,
                             bool in_corpus = false) {
    RunResult res;
    for (const auto& cmd : prob.commands)
        res.reports.push_back(execute_command(prob, cmd, options, res.summary, in_corpus));
    return res;
}

// ---------------------------------------------------------------------------
// Bundled corpus

inline std::vector<std::string> list_corpus(const std::string& dir) {
    std::vector<std::string> names;
    std::error_code ec;
    for (const auto& entry : std::filesystem::directory_iterator(dir, ec)) {
        if (entry.path().extension() == ".json")
            names.push_back(entry.path().stem().string());
    }
    std::sort(names.begin(), names.end());
    return names;
}

/// Runs every bundled instance (optionally in parallel) and appends the
/// verdict-count summary; reports are merged in instance-name order, so the
/// output is deterministic either way.
inline RunResult run_corpus(const std::string& dir, const RunOptions& options) {
    std::vector<std::string> names = list_corpus(dir);
    std::vector<RunResult> partial(names.size());

    auto run_one = [&](std::size_t i) {
        try {
            Problem prob =
                load_problem_file(dir + "/" + names[i] + ".json", options.seed);
            partial[i] = run_problem(prob, options, /*in_corpus=*/true);
        } catch (const Error& e) {
            partial[i].summary.input_error = true;
            partial[i].reports.push_back(
                Json{{"command", Json{{"op", "load"}}}, {"status", "error"},
                     {"error", e.what()}});
        }
        for (auto& rep : partial[i].reports) {
            Json tagged{{"instance", names[i]}};
            for (auto& [k, v] : rep.items()) tagged[k] = v;
            rep = std::move(tagged);
        }
    };

    if (options.parallel && names.size() > 1) {
        std::vector<std::thread> pool;
        pool.reserve(names.size());
        for (std::size_t i = 0; i < names.size(); ++i)
            pool.emplace_back(run_one, i);
        for (auto& t : pool) t.join();
    } else {
        for (std::size_t i = 0; i < names.size(); ++i) run_one(i);
    }

    RunResult merged;
    for (auto& part : partial) {
        merged.summary.absorb(part.summary);
        for (auto& rep : part.reports) merged.reports.push_back(std::move(rep));
    }
    merged.reports.push_back(Json{{"summary", merged.summary.json()}});
    return merged;
}

/// One JSON object per line (or per indent block when json_indent >= 0).
inline std::string render_reports(const std::vector<Json>& reports, const RunOptions& options) {
    std::string out;
    for (const auto& rep : reports) {
        out += rep.dump(options.json_indent);
        out += '\n';
    }
    return out;
}

} // namespace specchain

#endif
