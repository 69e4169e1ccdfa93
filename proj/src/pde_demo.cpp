#include "ordcomplete/pde_demo.hpp"

#include <algorithm>
#include <set>

namespace ordcomplete {

Grid::Grid(Rational lo, Rational hi, std::size_t n) : lo_(lo), hi_(hi), n_(n) {
    if (n < 3) throw InvalidInputError("grid needs at least 3 nodes");
    if (!(lo < hi)) throw InvalidInputError("grid bounds must satisfy lo < hi");
    h_ = (hi - lo) * Rational(1, static_cast<long long>(n - 1));
}

std::string grid_function_label(const GridFunction& values) {
    std::string out = "(";
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i > 0) out += ",";
        out += values[i].str();
    }
    out += ")";
    return out;
}

Expr Expr::constant_of(Rational v) {
    Expr e;
    e.kind = Kind::Constant;
    e.constant = v;
    return e;
}

Expr Expr::coordinate() {
    Expr e;
    e.kind = Kind::Coordinate;
    return e;
}

Expr Expr::value() {
    Expr e;
    e.kind = Kind::Value;
    return e;
}

Expr Expr::derivative(unsigned order) {
    if (order == 0) throw InvalidInputError("derivative slots start at order 1");
    Expr e;
    e.kind = Kind::Derivative;
    e.derivative_order = order;
    return e;
}

namespace {

Expr nary(Expr::Kind kind, std::vector<Expr> args, std::size_t min_arity) {
    if (args.size() < min_arity) throw InvalidInputError("operation needs more arguments");
    Expr e;
    e.kind = kind;
    e.args = std::move(args);
    return e;
}

}  // namespace

Expr Expr::add(std::vector<Expr> args) { return nary(Kind::Add, std::move(args), 2); }
Expr Expr::mul(std::vector<Expr> args) { return nary(Kind::Mul, std::move(args), 2); }
Expr Expr::min_of(std::vector<Expr> args) { return nary(Kind::Min, std::move(args), 1); }
Expr Expr::max_of(std::vector<Expr> args) { return nary(Kind::Max, std::move(args), 1); }

Expr Expr::sub(Expr lhs, Expr rhs) {
    Expr e;
    e.kind = Kind::Sub;
    e.args.push_back(std::move(lhs));
    e.args.push_back(std::move(rhs));
    return e;
}

Expr Expr::neg(Expr arg) {
    Expr e;
    e.kind = Kind::Neg;
    e.args.push_back(std::move(arg));
    return e;
}

Expr Expr::pow(Expr base, unsigned exponent) {
    Expr e;
    e.kind = Kind::Pow;
    e.exponent = exponent;
    e.args.push_back(std::move(base));
    return e;
}

Expr Expr::abs(Expr arg) {
    Expr e;
    e.kind = Kind::Abs;
    e.args.push_back(std::move(arg));
    return e;
}

Rational Expr::eval(const Rational& x, const Rational& u, std::span<const Rational> derivs) const {
    switch (kind) {
        case Kind::Constant:
            return constant;
        case Kind::Coordinate:
            return x;
        case Kind::Value:
            return u;
        case Kind::Derivative:
            if (derivative_order > derivs.size()) {
                throw InternalError("derivative slot above the operator order");
            }
            return derivs[derivative_order - 1];
        case Kind::Add: {
            Rational acc{0};
            for (const auto& a : args) acc += a.eval(x, u, derivs);
            return acc;
        }
        case Kind::Sub:
            return args[0].eval(x, u, derivs) - args[1].eval(x, u, derivs);
        case Kind::Neg:
            return -args[0].eval(x, u, derivs);
        case Kind::Mul: {
            Rational acc{1};
            for (const auto& a : args) acc *= a.eval(x, u, derivs);
            return acc;
        }
        case Kind::Pow:
            return args[0].eval(x, u, derivs).pow(exponent);
        case Kind::Abs:
            return args[0].eval(x, u, derivs).abs();
        case Kind::Min: {
            Rational acc = args[0].eval(x, u, derivs);
            for (std::size_t i = 1; i < args.size(); ++i) {
                acc = min(acc, args[i].eval(x, u, derivs));
            }
            return acc;
        }
        case Kind::Max: {
            Rational acc = args[0].eval(x, u, derivs);
            for (std::size_t i = 1; i < args.size(); ++i) {
                acc = max(acc, args[i].eval(x, u, derivs));
            }
            return acc;
        }
    }
    throw InternalError("unhandled expression node");
}

unsigned Expr::max_derivative_order() const {
    unsigned order = kind == Kind::Derivative ? derivative_order : 0;
    for (const auto& a : args) order = std::max(order, a.max_derivative_order());
    return order;
}

DifferenceOperator::DifferenceOperator(unsigned order, StencilKind stencil, Expr form)
    : order_(order), stencil_(stencil), form_(std::move(form)) {
    if (form_.max_derivative_order() > order_) {
        throw InvalidInputError("expression uses a derivative slot above the operator order");
    }
}

namespace {

long long binomial(unsigned n, unsigned k) {
    long long out = 1;
    for (unsigned i = 0; i < k; ++i) out = out * (n - i) / (i + 1);
    return out;
}

struct StencilWindow {
    long long lo_offset = 0;
    std::vector<long long> weights;  // weight per offset, before the 1/h^k factor
    long long scale = 1;             // weights are divided by this
};

StencilWindow forward_window(unsigned k) {
    StencilWindow w;
    w.lo_offset = 0;
    w.weights.resize(k + 1);
    for (unsigned j = 0; j <= k; ++j) {
        w.weights[j] = ((k - j) % 2 == 0 ? 1 : -1) * binomial(k, j);
    }
    return w;
}

StencilWindow backward_window(unsigned k) {
    // The backward difference at i is the forward difference taken at i-k.
    StencilWindow w = forward_window(k);
    w.lo_offset = -static_cast<long long>(k);
    return w;
}

StencilWindow central_window(unsigned k) {
    if (k % 2 == 0) {
        StencilWindow w = forward_window(k);
        w.lo_offset = -static_cast<long long>(k / 2);
        return w;
    }
    // Odd order: the mean of the two one-sided quotients, shifted to the
    // symmetric window of half-width (k+1)/2.
    StencilWindow fwd = forward_window(k);
    StencilWindow bwd = backward_window(k);
    long long half = static_cast<long long>((k + 1) / 2);
    StencilWindow w;
    w.lo_offset = -half;
    w.weights.assign(2 * half + 1, 0);
    for (unsigned j = 0; j < fwd.weights.size(); ++j) {
        long long off = static_cast<long long>(j) - (half - 1);
        w.weights[off + half] += fwd.weights[j];
        off = bwd.lo_offset + static_cast<long long>(j) + (half - 1);
        w.weights[off + half] += bwd.weights[j];
    }
    w.scale = 2;
    return w;
}

bool window_fits(const StencilWindow& w, std::size_t node, std::size_t node_count) {
    long long lo = static_cast<long long>(node) + w.lo_offset;
    long long hi = lo + static_cast<long long>(w.weights.size()) - 1;
    return lo >= 0 && hi < static_cast<long long>(node_count);
}

}  // namespace

Rational DifferenceOperator::derivative_at(const Grid& grid, const GridFunction& u,
                                           std::size_t node, unsigned order) const {
    StencilWindow window;
    switch (stencil_) {
        case StencilKind::Central:
            window = central_window(order);
            break;
        case StencilKind::Forward:
            window = forward_window(order);
            break;
        case StencilKind::Backward:
            window = backward_window(order);
            break;
    }
    if (!window_fits(window, node, grid.node_count())) {
        StencilWindow fwd = forward_window(order);
        StencilWindow bwd = backward_window(order);
        if (window_fits(fwd, node, grid.node_count())) {
            window = fwd;
        } else if (window_fits(bwd, node, grid.node_count())) {
            window = bwd;
        } else {
            throw StencilUnderflowError("no order-" + std::to_string(order) +
                                        " stencil fits at node " + std::to_string(node) +
                                        " of " + std::to_string(grid.node_count()));
        }
    }

    Rational acc{0};
    for (std::size_t j = 0; j < window.weights.size(); ++j) {
        if (window.weights[j] == 0) continue;
        auto idx = static_cast<std::size_t>(static_cast<long long>(node) + window.lo_offset +
                                            static_cast<long long>(j));
        acc += Rational(window.weights[j]) * u[idx];
    }
    return acc * Rational(1, window.scale) * grid.spacing().pow(order).reciprocal();
}

GridFunction DifferenceOperator::apply(const Grid& grid, const GridFunction& u) const {
    if (u.size() != grid.node_count()) {
        throw InvalidInputError("grid function length does not match the grid");
    }
    GridFunction out(grid.node_count());
    std::vector<Rational> derivs(order_);
    for (std::size_t i = 0; i < grid.node_count(); ++i) {
        for (unsigned k = 1; k <= order_; ++k) derivs[k - 1] = derivative_at(grid, u, i, k);
        out[i] = form_.eval(grid.node(i), u[i], derivs);
    }
    return out;
}

CandidateSpace CandidateSpace::all_functions(std::vector<Rational> alphabet) {
    CandidateSpace s;
    std::sort(alphabet.begin(), alphabet.end());
    alphabet.erase(std::unique(alphabet.begin(), alphabet.end()), alphabet.end());
    if (alphabet.empty()) throw InvalidInputError("alphabet must not be empty");
    s.alphabet_ = std::move(alphabet);
    return s;
}

CandidateSpace CandidateSpace::explicit_list(std::vector<Rational> alphabet,
                                             std::vector<GridFunction> candidates) {
    CandidateSpace s = all_functions(std::move(alphabet));
    for (const auto& c : candidates) {
        for (const auto& v : c) {
            if (!std::binary_search(s.alphabet_.begin(), s.alphabet_.end(), v)) {
                throw InvalidInputError("candidate value " + v.str() +
                                        " is outside the alphabet");
            }
        }
    }
    std::sort(candidates.begin(), candidates.end());
    if (std::adjacent_find(candidates.begin(), candidates.end()) != candidates.end()) {
        throw InvalidInputError("duplicate candidate grid function");
    }
    if (candidates.empty()) throw InvalidInputError("candidate list must not be empty");
    s.explicit_ = std::move(candidates);
    return s;
}

std::vector<GridFunction> CandidateSpace::enumerate(std::size_t node_count,
                                                    const Caps& caps) const {
    if (explicit_) {
        for (const auto& c : *explicit_) {
            if (c.size() != node_count) {
                throw InvalidInputError("candidate length does not match the grid");
            }
        }
        if (explicit_->size() > caps.max_elements) {
            throw SizeCapError("candidate list exceeds the element cap");
        }
        return *explicit_;
    }

    std::size_t total = 1;
    for (std::size_t i = 0; i < node_count; ++i) {
        if (total > caps.max_elements / alphabet_.size()) {
            throw SizeCapError("candidate space exceeds the element cap");
        }
        total *= alphabet_.size();
    }

    std::vector<GridFunction> out;
    out.reserve(total);
    std::vector<std::size_t> digits(node_count, 0);
    for (;;) {
        GridFunction current(node_count);
        for (std::size_t i = 0; i < node_count; ++i) current[i] = alphabet_[digits[i]];
        out.push_back(std::move(current));
        std::size_t pos = node_count;
        while (pos > 0 && ++digits[pos - 1] == alphabet_.size()) {
            digits[pos - 1] = 0;
            --pos;
        }
        if (pos == 0) break;
    }
    return out;
}

EquationProblem build_grid_problem(const GridProblem& gp, const Caps& caps) {
    if (gp.rhs.size() != gp.grid.node_count()) {
        throw InvalidInputError("right-hand side length does not match the grid");
    }
    std::vector<GridFunction> candidates = gp.space.enumerate(gp.grid.node_count(), caps);

    std::vector<GridFunction> images;
    images.reserve(candidates.size());
    for (const auto& c : candidates) images.push_back(gp.op.apply(gp.grid, c));

    std::set<GridFunction> codomain(images.begin(), images.end());
    codomain.insert(gp.rhs);

    std::vector<GridFunction> y_values(codomain.begin(), codomain.end());
    std::vector<std::string> y_labels;
    y_labels.reserve(y_values.size());
    for (const auto& v : y_values) y_labels.push_back(grid_function_label(v));

    const std::size_t m = y_values.size();
    std::vector<Bitset> ups(m, Bitset(m));
    for (std::size_t a = 0; a < m; ++a) {
        for (std::size_t b = 0; b < m; ++b) {
            bool leq = true;
            for (std::size_t i = 0; i < gp.rhs.size() && leq; ++i) {
                leq = y_values[a][i] <= y_values[b][i];
            }
            if (leq) ups[a].set(b);
        }
    }
    FinitePoset y = FinitePoset::from_up_sets(std::move(y_labels), std::move(ups), caps);

    std::vector<std::string> x_labels;
    x_labels.reserve(candidates.size());
    for (const auto& c : candidates) x_labels.push_back(grid_function_label(c));
    FinitePoset x = FinitePoset::discrete(x_labels, caps);

    std::vector<std::pair<std::string, std::string>> t_pairs;
    t_pairs.reserve(candidates.size());
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        t_pairs.emplace_back(x_labels[i], grid_function_label(images[i]));
    }

    return EquationProblem::make(std::move(x), std::move(y), t_pairs,
                                 TargetSpec::element(grid_function_label(gp.rhs)));
}

Classification classify_solution(const SolverContext& context, const SolveOutcome& outcome) {
    Classification out;
    if (!outcome.solvable) {
        out.kind = Classification::Kind::Unsolvable;
        return out;
    }
    const Cut& solution = *outcome.solution;
    const QuotientSpace& q = context.quotient();
    for (std::size_t u = 0; u < q.class_count(); ++u) {
        if (context.xt_completion().embed(u) == solution) {
            out.kind = Classification::Kind::Classical;
            out.candidates = q.member_labels(u);
            return out;
        }
    }
    out.kind = Classification::Kind::Generalized;
    out.description = context.xt_completion().density_decomposition(solution);
    return out;
}

const char* classification_name(Classification::Kind kind) {
    switch (kind) {
        case Classification::Kind::Classical:
            return "classical";
        case Classification::Kind::Generalized:
            return "generalized";
        case Classification::Kind::Unsolvable:
            return "unsolvable";
    }
    return "unknown";
}

}  // namespace ordcomplete
