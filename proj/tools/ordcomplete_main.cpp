#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "ordcomplete/dot_export.hpp"
#include "ordcomplete/fixtures.hpp"
#include "ordcomplete/json_io.hpp"

namespace {

using json = nlohmann::json;
using namespace ordcomplete;

constexpr int kExitInput = 2;
constexpr int kExitCap = 3;
constexpr int kExitInternal = 4;

int exit_code_for(const Error& e) {
    switch (e.code()) {
        case ErrorCode::SizeCapExceeded:
            return kExitCap;
        case ErrorCode::InternalInconsistency:
            return kExitInternal;
        default:
            return kExitInput;
    }
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in.is_open()) throw InvalidInputError("cannot open input file '" + path + "'");
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw InvalidInputError("invalid JSON in '" + path + "': " + e.what());
    }
    return j;
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out.is_open()) throw InvalidInputError("cannot open output file '" + path + "'");
    out << text;
}

struct Options {
    std::string input;
    std::string output;
    std::string format = "json";
    bool oracle = false;
    Caps caps;
};

Caps caps_from_env() {
    Caps caps;
    if (const char* env = std::getenv("ORDCOMPLETE_CAP_ELEMENTS")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) caps.max_elements = static_cast<std::size_t>(v);
    }
    return caps;
}

int run_poset_check(const Options& opt) {
    FinitePoset p = io::parse_poset(read_json_file(opt.input), opt.caps);
    if (opt.format == "dot") {
        write_output(opt.output, poset_to_dot(p));
        return 0;
    }
    json report;
    report["ok"] = true;
    report["elements"] = p.size();
    report["relation_size"] = p.relation_pairs().size();
    report["covers"] = p.cover_pairs().size();
    report["minimum"] = p.minimum() ? json(p.label(*p.minimum())) : json();
    report["maximum"] = p.maximum() ? json(p.label(*p.maximum())) : json();
    write_output(opt.output, io::dump_canonical(report));
    return 0;
}

int run_complete(const Options& opt) {
    FinitePoset p = io::parse_poset(read_json_file(opt.input), opt.caps);
    CompletionLattice lattice = CompletionLattice::enumerate(p, opt.caps);
    if (opt.format == "dot") {
        write_output(opt.output, completion_to_dot(lattice));
    } else {
        write_output(opt.output, io::dump_canonical(io::lattice_to_json(lattice)));
    }
    return 0;
}

int run_solve(const Options& opt) {
    json doc = read_json_file(opt.input);
    EquationProblem problem = io::parse_problem(doc, opt.caps);

    // A document may re-base the equation on a set Z covering the quotient.
    if (auto factor = io::parse_factor_spec(doc)) {
        QuotientSpace quotient = quotient_by_kernel(problem);
        FactoredProblem factored = factor_problem(quotient, factor->z, factor->lambda);
        problem = EquationProblem::from_map(
            factored.t_lambda, TargetSpec::cut(problem.y().labels_of(problem.f().bits())));
    }

    SolverContext context = SolverContext::build(problem, opt.caps);
    SolveOutcome outcome = solve(context, problem.f());
    json out = io::outcome_to_json(context, outcome);

    if (opt.oracle) {
        auto scanned = oracle_solve(context, problem.f());
        bool agrees = outcome.solvable == scanned.has_value() &&
                      (!scanned || *scanned == *outcome.solution);
        out["oracle_agrees"] = agrees;
        if (!agrees) {
            write_output(opt.output, io::dump_canonical(out));
            std::cerr << "oracle disagrees with the solver\n";
            return kExitInternal;
        }
    }
    write_output(opt.output, io::dump_canonical(out));
    return 0;
}

int run_global(const Options& opt) {
    EquationProblem problem = io::parse_problem(read_json_file(opt.input), opt.caps);
    SolverContext context = SolverContext::build(problem, opt.caps);
    GlobalReport report = global_solvability(context);
    write_output(opt.output, io::dump_canonical(io::global_report_to_json(report)));
    return 0;
}

int run_demo_pde(const Options& opt) {
    GridProblem gp = io::parse_grid_problem(read_json_file(opt.input));
    EquationProblem problem = build_grid_problem(gp, opt.caps);
    SolverContext context = SolverContext::build(problem, opt.caps);
    SolveOutcome outcome = solve(context, problem.f());
    Classification classification = classify_solution(context, outcome);

    json out;
    out["outcome"] = io::outcome_to_json(context, outcome);
    out["classification"] = io::classification_to_json(classification);
    if (opt.oracle) {
        auto scanned = oracle_solve(context, problem.f());
        bool agrees = outcome.solvable == scanned.has_value() &&
                      (!scanned || *scanned == *outcome.solution);
        out["oracle_agrees"] = agrees;
        if (!agrees) {
            write_output(opt.output, io::dump_canonical(out));
            std::cerr << "oracle disagrees with the solver\n";
            return kExitInternal;
        }
    }
    write_output(opt.output, io::dump_canonical(out));
    return 0;
}

int run_gen_fixtures(const Options& opt, std::uint64_t seed, std::size_t count) {
    std::mt19937_64 rng(seed);
    json out;
    out["seed"] = seed;
    out["count"] = count;
    json problems = json::array();
    for (std::size_t i = 0; i < count; ++i) {
        problems.push_back(io::problem_to_json(fixtures::random_problem(rng, 6, 8)));
    }
    out["problems"] = std::move(problems);
    write_output(opt.output, io::dump_canonical(out));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"order-completion toolkit for finite posets"};
    app.require_subcommand(1);

    Options opt;
    opt.caps = caps_from_env();
    std::uint64_t seed = 0;
    std::size_t count = 10;

    auto add_io = [&](CLI::App* cmd, bool needs_input) {
        auto* in = cmd->add_option("--input,-i", opt.input, "input JSON file");
        if (needs_input) in->required();
        cmd->add_option("--output,-o", opt.output, "output file (stdout when omitted)");
        cmd->add_option("--cap-elements", opt.caps.max_elements, "largest allowed ground set")
            ->check(CLI::PositiveNumber);
        cmd->add_option("--cap-cuts", opt.caps.max_cuts, "largest allowed completion")
            ->check(CLI::PositiveNumber);
    };

    CLI::App* poset_cmd = app.add_subcommand("poset", "poset utilities");
    poset_cmd->require_subcommand(1);
    CLI::App* check_cmd = poset_cmd->add_subcommand("check", "validate a poset document");
    add_io(check_cmd, true);
    check_cmd->add_option("--format", opt.format, "json report or dot Hasse diagram")
        ->check(CLI::IsMember({"json", "dot"}));

    CLI::App* complete_cmd = app.add_subcommand("complete", "enumerate the cut lattice");
    add_io(complete_cmd, true);
    complete_cmd->add_option("--format", opt.format, "json or dot")
        ->check(CLI::IsMember({"json", "dot"}));

    CLI::App* solve_cmd = app.add_subcommand("solve", "solve an equation through the completion");
    add_io(solve_cmd, true);
    solve_cmd->add_flag("--oracle", opt.oracle, "cross-check against the exhaustive scan");

    CLI::App* global_cmd = app.add_subcommand("global", "check solvability for every target");
    add_io(global_cmd, true);

    CLI::App* demo_cmd = app.add_subcommand("demo", "worked demonstrations");
    demo_cmd->require_subcommand(1);
    CLI::App* pde_cmd = demo_cmd->add_subcommand("pde", "grid-discretized operator equation");
    add_io(pde_cmd, true);
    pde_cmd->add_flag("--oracle", opt.oracle, "cross-check against the exhaustive scan");

    CLI::App* gen_cmd = app.add_subcommand("gen", "generators");
    gen_cmd->require_subcommand(1);
    CLI::App* fixtures_cmd = gen_cmd->add_subcommand("fixtures", "emit random problem documents");
    add_io(fixtures_cmd, false);
    fixtures_cmd->add_option("--seed", seed, "generator seed");
    fixtures_cmd->add_option("--count", count, "number of problems");

    CLI11_PARSE(app, argc, argv);

    try {
        if (check_cmd->parsed()) return run_poset_check(opt);
        if (complete_cmd->parsed()) return run_complete(opt);
        if (solve_cmd->parsed()) return run_solve(opt);
        if (global_cmd->parsed()) return run_global(opt);
        if (pde_cmd->parsed()) return run_demo_pde(opt);
        if (fixtures_cmd->parsed()) return run_gen_fixtures(opt, seed, count);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code_for(e);
    } catch (const json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
    return 0;
}
