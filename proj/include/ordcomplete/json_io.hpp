#pragma once

#include <nlohmann/json.hpp>
#include <optional>
#include <string>

#include "ordcomplete/mapping_ext.hpp"
#include "ordcomplete/pde_demo.hpp"
#include "ordcomplete/solver.hpp"

namespace ordcomplete::io {

using json = nlohmann::json;

/// {"elements": [...], "leq": [["a","b"], ...]} — pairs are generators, the
/// closure is implied.
FinitePoset parse_poset(const json& j, const Caps& caps = {});
json poset_to_json(const FinitePoset& p);

/// {"domain": <poset-or-label-array>, "codomain": <poset>, "pairs": [...]}.
GroundMap parse_map(const json& j, const Caps& caps = {});
json map_to_json(const GroundMap& f);

/// {"base": ..., "cuts": [["a"],...], "covers": [[i,j],...]} with indices
/// into the canonical cut order.
json lattice_to_json(const CompletionLattice& l);

/// {"X": [...], "Y": <poset>, "T": [["u","y"],...],
///  "F": {"element": "y"} | {"cut": [...]}}.
EquationProblem parse_problem(const json& j, const Caps& caps = {});
json problem_to_json(const EquationProblem& p);

struct FactorSpec {
    std::vector<std::string> z;
    std::vector<std::pair<std::string, std::string>> lambda;
};

/// Reads the optional "Z"/"lambda" keys of a problem document.
std::optional<FactorSpec> parse_factor_spec(const json& j);

json outcome_to_json(const SolverContext& context, const SolveOutcome& outcome);
json global_report_to_json(const GlobalReport& r);
json prop_a1_to_json(const PropA1Report& r);
json sandwich_to_json(const SandwichResult& r);

/// {"grid": {"lo":0,"hi":1,"n":3}, "operator": {"m":1,"stencil":"central",
///  "form": <expression>}, "alphabet": [...], "rhs": [...]} plus an optional
/// explicit "candidates" list.
GridProblem parse_grid_problem(const json& j);
json classification_to_json(const Classification& c);

/// Integers may be plain JSON numbers; anything else is a string such as
/// "1/2" or "0.25". Floating-point literals are rejected: a parsed double
/// would not be the rational it looks like.
Rational parse_rational(const json& j);
json rational_to_json(const Rational& r);

Expr parse_expr(const json& j);
json expr_to_json(const Expr& e);

/// Two-space indentation and a trailing newline; keys are emitted sorted, so
/// equal documents serialize to equal bytes.
std::string dump_canonical(const json& j);

}  // namespace ordcomplete::io
