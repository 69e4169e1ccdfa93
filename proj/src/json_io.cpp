#include "ordcomplete/json_io.hpp"

#include <algorithm>

namespace ordcomplete::io {

namespace {

const json& require_key(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) {
        throw InvalidInputError(std::string("missing key '") + key + "'");
    }
    return j.at(key);
}

std::vector<std::string> parse_label_array(const json& j, const char* what) {
    if (!j.is_array()) throw InvalidInputError(std::string(what) + " must be an array");
    std::vector<std::string> out;
    out.reserve(j.size());
    for (const auto& item : j) {
        if (!item.is_string()) {
            throw InvalidInputError(std::string(what) + " entries must be strings");
        }
        out.push_back(item.get<std::string>());
    }
    return out;
}

std::vector<std::pair<std::string, std::string>> parse_pair_array(const json& j,
                                                                  const char* what) {
    if (!j.is_array()) throw InvalidInputError(std::string(what) + " must be an array");
    std::vector<std::pair<std::string, std::string>> out;
    out.reserve(j.size());
    for (const auto& item : j) {
        if (!item.is_array() || item.size() != 2 || !item[0].is_string() ||
            !item[1].is_string()) {
            throw InvalidInputError(std::string(what) + " entries must be [string, string]");
        }
        out.emplace_back(item[0].get<std::string>(), item[1].get<std::string>());
    }
    return out;
}

json labels_array(const FinitePoset& p, const Bitset& bits) {
    json out = json::array();
    for (const auto& l : p.labels_of(bits)) out.push_back(l);
    return out;
}

}  // namespace

FinitePoset parse_poset(const json& j, const Caps& caps) {
    auto elements = parse_label_array(require_key(j, "elements"), "elements");
    std::vector<std::pair<std::string, std::string>> pairs;
    if (j.contains("leq")) pairs = parse_pair_array(j.at("leq"), "leq");
    return FinitePoset::validate(std::move(elements), pairs, caps);
}

json poset_to_json(const FinitePoset& p) {
    json out;
    out["elements"] = p.labels();
    json leq = json::array();
    for (const auto& [a, b] : p.cover_pairs()) {
        leq.push_back(json::array({p.label(a), p.label(b)}));
    }
    out["leq"] = std::move(leq);
    return out;
}

GroundMap parse_map(const json& j, const Caps& caps) {
    const json& dom = require_key(j, "domain");
    FinitePoset domain = dom.is_array()
                             ? FinitePoset::discrete(parse_label_array(dom, "domain"), caps)
                             : parse_poset(dom, caps);
    FinitePoset codomain = parse_poset(require_key(j, "codomain"), caps);
    auto pairs = parse_pair_array(require_key(j, "pairs"), "pairs");
    return GroundMap::validate(std::move(domain), std::move(codomain), pairs);
}

json map_to_json(const GroundMap& f) {
    json out;
    out["domain"] = poset_to_json(f.domain());
    out["codomain"] = poset_to_json(f.codomain());
    json pairs = json::array();
    for (std::size_t i = 0; i < f.domain().size(); ++i) {
        pairs.push_back(json::array({f.domain().label(i), f.codomain().label(f.image_of(i))}));
    }
    out["pairs"] = std::move(pairs);
    return out;
}

json lattice_to_json(const CompletionLattice& l) {
    json out;
    out["base"] = poset_to_json(l.base());
    json cuts = json::array();
    for (const auto& c : l.cuts()) cuts.push_back(labels_array(l.base(), c.bits()));
    out["cuts"] = std::move(cuts);
    json covers = json::array();
    for (const auto& [a, b] : l.as_poset().cover_pairs()) {
        covers.push_back(json::array({a, b}));
    }
    out["covers"] = std::move(covers);
    return out;
}

EquationProblem parse_problem(const json& j, const Caps& caps) {
    FinitePoset x = FinitePoset::discrete(parse_label_array(require_key(j, "X"), "X"), caps);
    FinitePoset y = parse_poset(require_key(j, "Y"), caps);
    auto t_pairs = parse_pair_array(require_key(j, "T"), "T");

    const json& f = require_key(j, "F");
    TargetSpec target;
    if (f.is_object() && f.contains("element") && f.at("element").is_string()) {
        target = TargetSpec::element(f.at("element").get<std::string>());
    } else if (f.is_object() && f.contains("cut")) {
        target = TargetSpec::cut(parse_label_array(f.at("cut"), "F.cut"));
    } else {
        throw InvalidInputError("F must be {\"element\": ...} or {\"cut\": [...]}");
    }
    return EquationProblem::make(std::move(x), std::move(y), t_pairs, target);
}

json problem_to_json(const EquationProblem& p) {
    json out;
    out["X"] = p.x().labels();
    out["Y"] = poset_to_json(p.y());
    json t = json::array();
    for (std::size_t i = 0; i < p.x().size(); ++i) {
        t.push_back(json::array({p.x().label(i), p.y().label(p.t().image_of(i))}));
    }
    out["T"] = std::move(t);
    out["F"] = json{{"cut", labels_array(p.y(), p.f().bits())}};
    return out;
}

std::optional<FactorSpec> parse_factor_spec(const json& j) {
    if (!j.is_object() || !j.contains("Z")) return std::nullopt;
    FactorSpec spec;
    spec.z = parse_label_array(j.at("Z"), "Z");
    spec.lambda = parse_pair_array(require_key(j, "lambda"), "lambda");
    return spec;
}

namespace {

json cut_of_classes(const SolverContext& context, const Cut& cut) {
    json out = json::array();
    const QuotientSpace& q = context.quotient();
    for (std::size_t c : cut.bits().indices()) {
        json members = json::array();
        for (const auto& l : q.member_labels(c)) members.push_back(l);
        out.push_back(std::move(members));
    }
    return out;
}

json cut_of_y(const SolverContext& context, const Cut& cut) {
    return labels_array(context.problem().y(), cut.bits());
}

}  // namespace

json outcome_to_json(const SolverContext& context, const SolveOutcome& outcome) {
    json out;
    out["solvable"] = outcome.solvable;
    out["solution"] = outcome.solution ? cut_of_classes(context, *outcome.solution) : json();
    out["lower_aggregate"] = cut_of_y(context, outcome.lower_aggregate);
    out["upper_aggregate"] = cut_of_y(context, outcome.upper_aggregate);
    json lower = json::array();
    for (std::size_t i : outcome.lower_witnesses) {
        lower.push_back(cut_of_classes(context, context.xt_completion().cut_at(i)));
    }
    out["lower_witnesses"] = std::move(lower);
    json upper = json::array();
    for (std::size_t i : outcome.upper_witnesses) {
        upper.push_back(cut_of_classes(context, context.xt_completion().cut_at(i)));
    }
    out["upper_witnesses"] = std::move(upper);
    out["chain"] = json{{"sup_lower_images", cut_of_y(context, outcome.chain.sup_lower_images)},
                        {"image_of_sup", cut_of_y(context, outcome.chain.image_of_sup)},
                        {"image_of_inf", cut_of_y(context, outcome.chain.image_of_inf)},
                        {"inf_upper_images", cut_of_y(context, outcome.chain.inf_upper_images)},
                        {"target", cut_of_y(context, outcome.chain.target)}};
    return out;
}

json global_report_to_json(const GlobalReport& r) {
    json out;
    out["principal_cuts_attained"] = r.principal_cuts_attained;
    out["all_cuts_attained"] = r.all_cuts_attained;
    out["order_isomorphism"] = r.order_isomorphism;
    out["unattained"] = r.unattained;
    return out;
}

json prop_a1_to_json(const PropA1Report& r) {
    json out;
    out["subset_monotone"] = r.subset_monotone;
    out["diagram_commutes"] = r.diagram_commutes ? json(*r.diagram_commutes) : json("n/a");
    out["oie_preserved"] = r.oie_preserved ? json(*r.oie_preserved) : json("n/a");
    return out;
}

json sandwich_to_json(const SandwichResult& r) {
    json out;
    out["mu_of_inf"] = r.mu_of_inf;
    out["inf_of_image"] = r.inf_of_image;
    out["sup_of_image"] = r.sup_of_image;
    out["mu_of_sup"] = r.mu_of_sup;
    out["holds"] = r.holds;
    return out;
}

Rational parse_rational(const json& j) {
    if (j.is_number_integer()) return Rational(j.get<long long>());
    if (j.is_string()) return Rational::parse(j.get<std::string>());
    if (j.is_number_float()) {
        throw InvalidInputError(
            "floating-point literals are not accepted; write fractions as strings like \"1/2\"");
    }
    throw InvalidInputError("expected an integer or a rational string");
}

json rational_to_json(const Rational& r) {
    if (r.is_integer()) return json(r.num());
    return json(r.str());
}

Expr parse_expr(const json& j) {
    if (!j.is_object()) throw InvalidInputError("expression nodes must be objects");
    if (j.contains("const")) return Expr::constant_of(parse_rational(j.at("const")));
    if (j.contains("var")) {
        std::string var = j.at("var").get<std::string>();
        if (var == "x") return Expr::coordinate();
        if (var == "u") return Expr::value();
        throw InvalidInputError("unknown variable '" + var + "', expected \"x\" or \"u\"");
    }
    if (j.contains("deriv")) {
        if (!j.at("deriv").is_number_unsigned()) {
            throw InvalidInputError("deriv must be a positive integer");
        }
        return Expr::derivative(j.at("deriv").get<unsigned>());
    }
    if (!j.contains("op")) {
        throw InvalidInputError("expression node needs one of const/var/deriv/op");
    }

    std::string op = j.at("op").get<std::string>();
    std::vector<Expr> args;
    if (j.contains("args")) {
        for (const auto& a : j.at("args")) args.push_back(parse_expr(a));
    }
    if (op == "+") return Expr::add(std::move(args));
    if (op == "*") return Expr::mul(std::move(args));
    if (op == "min") return Expr::min_of(std::move(args));
    if (op == "max") return Expr::max_of(std::move(args));
    if (op == "-") {
        if (args.size() == 1) return Expr::neg(std::move(args[0]));
        if (args.size() == 2) return Expr::sub(std::move(args[0]), std::move(args[1]));
        throw InvalidInputError("'-' takes one or two arguments");
    }
    if (op == "abs") {
        if (args.size() != 1) throw InvalidInputError("'abs' takes one argument");
        return Expr::abs(std::move(args[0]));
    }
    if (op == "pow") {
        if (args.size() != 1 || !j.contains("exp") || !j.at("exp").is_number_unsigned()) {
            throw InvalidInputError("'pow' takes one argument and a nonnegative integer 'exp'");
        }
        return Expr::pow(std::move(args[0]), j.at("exp").get<unsigned>());
    }
    throw InvalidInputError("unknown operation '" + op + "'");
}

json expr_to_json(const Expr& e) {
    switch (e.kind) {
        case Expr::Kind::Constant:
            return json{{"const", rational_to_json(e.constant)}};
        case Expr::Kind::Coordinate:
            return json{{"var", "x"}};
        case Expr::Kind::Value:
            return json{{"var", "u"}};
        case Expr::Kind::Derivative:
            return json{{"deriv", e.derivative_order}};
        default:
            break;
    }
    json args = json::array();
    for (const auto& a : e.args) args.push_back(expr_to_json(a));
    switch (e.kind) {
        case Expr::Kind::Add:
            return json{{"op", "+"}, {"args", std::move(args)}};
        case Expr::Kind::Sub:
        case Expr::Kind::Neg:
            return json{{"op", "-"}, {"args", std::move(args)}};
        case Expr::Kind::Mul:
            return json{{"op", "*"}, {"args", std::move(args)}};
        case Expr::Kind::Pow:
            return json{{"op", "pow"}, {"args", std::move(args)}, {"exp", e.exponent}};
        case Expr::Kind::Abs:
            return json{{"op", "abs"}, {"args", std::move(args)}};
        case Expr::Kind::Min:
            return json{{"op", "min"}, {"args", std::move(args)}};
        case Expr::Kind::Max:
            return json{{"op", "max"}, {"args", std::move(args)}};
        default:
            throw InternalError("unhandled expression node in serialization");
    }
}

GridProblem parse_grid_problem(const json& j) {
    const json& grid_spec = require_key(j, "grid");
    if (!require_key(grid_spec, "n").is_number_unsigned()) {
        throw InvalidInputError("grid.n must be a nonnegative integer");
    }
    Grid grid(parse_rational(require_key(grid_spec, "lo")),
              parse_rational(require_key(grid_spec, "hi")),
              grid_spec.at("n").get<std::size_t>());

    const json& op_spec = require_key(j, "operator");
    if (!require_key(op_spec, "m").is_number_unsigned()) {
        throw InvalidInputError("operator.m must be a nonnegative integer");
    }
    unsigned order = op_spec.at("m").get<unsigned>();
    std::string stencil_name =
        op_spec.contains("stencil") ? op_spec.at("stencil").get<std::string>() : "central";
    StencilKind stencil;
    if (stencil_name == "central") {
        stencil = StencilKind::Central;
    } else if (stencil_name == "forward") {
        stencil = StencilKind::Forward;
    } else if (stencil_name == "backward") {
        stencil = StencilKind::Backward;
    } else {
        throw InvalidInputError("unknown stencil '" + stencil_name + "'");
    }
    DifferenceOperator op(order, stencil, parse_expr(require_key(op_spec, "form")));

    std::vector<Rational> alphabet;
    for (const auto& v : require_key(j, "alphabet")) alphabet.push_back(parse_rational(v));

    CandidateSpace space = CandidateSpace::all_functions(alphabet);
    if (j.contains("candidates")) {
        std::vector<GridFunction> candidates;
        for (const auto& c : j.at("candidates")) {
            GridFunction f;
            for (const auto& v : c) f.push_back(parse_rational(v));
            candidates.push_back(std::move(f));
        }
        space = CandidateSpace::explicit_list(alphabet, std::move(candidates));
    }

    GridFunction rhs;
    for (const auto& v : require_key(j, "rhs")) rhs.push_back(parse_rational(v));

    return GridProblem{grid, std::move(op), std::move(space), std::move(rhs)};
}

json classification_to_json(const Classification& c) {
    json out;
    out["kind"] = classification_name(c.kind);
    if (c.kind == Classification::Kind::Classical) {
        out["candidates"] = c.candidates;
    } else if (c.kind == Classification::Kind::Generalized) {
        out["generated_by"] = c.description.below;
        out["dominated_by"] = c.description.above;
    }
    return out;
}

std::string dump_canonical(const json& j) {
    return j.dump(2) + "\n";
}

}  // namespace ordcomplete::io
