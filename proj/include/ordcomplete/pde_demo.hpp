#pragma once

#include <optional>
#include <span>
#include <vector>

#include "ordcomplete/rational.hpp"
#include "ordcomplete/solver.hpp"

namespace ordcomplete {

/// Uniform one-dimensional grid with at least three nodes.
class Grid {
public:
    Grid(Rational lo, Rational hi, std::size_t n);

    std::size_t node_count() const { return n_; }
    Rational lo() const { return lo_; }
    Rational hi() const { return hi_; }
    Rational spacing() const { return h_; }
    Rational node(std::size_t i) const { return lo_ + h_ * Rational(static_cast<long long>(i)); }

private:
    Rational lo_;
    Rational hi_;
    Rational h_;
    std::size_t n_ = 0;
};

/// One value per grid node.
using GridFunction = std::vector<Rational>;

/// "(v1,v2,v3)" with canonical rational formatting; used as element labels.
std::string grid_function_label(const GridFunction& values);

/// Pointwise expression built from a fixed vocabulary: constants, the node
/// coordinate, the candidate value, derivative slots and the operations
/// +, -, *, integer powers, absolute value, min and max.
struct Expr {
    enum class Kind { Constant, Coordinate, Value, Derivative, Add, Sub, Neg, Mul, Pow, Abs, Min, Max };

    Kind kind = Kind::Constant;
    Rational constant;
    unsigned derivative_order = 0;
    unsigned exponent = 0;
    std::vector<Expr> args;

    static Expr constant_of(Rational v);
    static Expr coordinate();
    static Expr value();
    static Expr derivative(unsigned order);
    static Expr add(std::vector<Expr> args);
    static Expr sub(Expr lhs, Expr rhs);
    static Expr neg(Expr arg);
    static Expr mul(std::vector<Expr> args);
    static Expr pow(Expr base, unsigned exponent);
    static Expr abs(Expr arg);
    static Expr min_of(std::vector<Expr> args);
    static Expr max_of(std::vector<Expr> args);

    Rational eval(const Rational& x, const Rational& u, std::span<const Rational> derivs) const;
    unsigned max_derivative_order() const;
};

enum class StencilKind { Central, Forward, Backward };

/// Finite-difference realization of a pointwise operator of order m. The
/// declared scheme is used wherever its window fits; nodes too close to an
/// end fall back to the one-sided scheme that fits there.
class DifferenceOperator {
public:
    DifferenceOperator(unsigned order, StencilKind stencil, Expr form);

    unsigned order() const { return order_; }
    StencilKind stencil() const { return stencil_; }
    const Expr& form() const { return form_; }

    GridFunction apply(const Grid& grid, const GridFunction& u) const;

    /// The raw difference quotient of the given order at one node.
    Rational derivative_at(const Grid& grid, const GridFunction& u, std::size_t node,
                           unsigned order) const;

private:
    unsigned order_ = 0;
    StencilKind stencil_ = StencilKind::Central;
    Expr form_;
};

/// The finite pool of grid functions an equation is solved over: either
/// every function with values drawn from the alphabet, or an explicit list.
class CandidateSpace {
public:
    static CandidateSpace all_functions(std::vector<Rational> alphabet);
    static CandidateSpace explicit_list(std::vector<Rational> alphabet,
                                        std::vector<GridFunction> candidates);

    const std::vector<Rational>& alphabet() const { return alphabet_; }

    /// Candidates in canonical (valuewise lexicographic) order.
    std::vector<GridFunction> enumerate(std::size_t node_count, const Caps& caps) const;

private:
    CandidateSpace() = default;

    std::vector<Rational> alphabet_;
    std::optional<std::vector<GridFunction>> explicit_;
};

struct GridProblem {
    Grid grid;
    DifferenceOperator op;
    CandidateSpace space;
    GridFunction rhs;
};

/// Assembles the equation: the candidates form the unordered ground set, the
/// attained operator images together with the right-hand side form the
/// codomain under the pointwise order, and the target is the principal cut
/// of the right-hand side.
EquationProblem build_grid_problem(const GridProblem& gp, const Caps& caps = {});

struct Classification {
    enum class Kind { Classical, Generalized, Unsolvable };

    Kind kind = Kind::Unsolvable;
    /// Classical: the candidates of the witnessing class.
    std::vector<std::string> candidates;
    /// Generalized: the solution cut described through the candidates that
    /// generate and dominate it.
    DensitySplit description;
};

/// Classical when the solution is a principal cut, generalized when it is a
/// proper cut, unsolvable otherwise.
Classification classify_solution(const SolverContext& context, const SolveOutcome& outcome);

const char* classification_name(Classification::Kind kind);

}  // namespace ordcomplete
