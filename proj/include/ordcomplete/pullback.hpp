#pragma once

#include <string>
#include <variant>
#include <vector>

#include "ordcomplete/completion.hpp"

namespace ordcomplete {

/// Right-hand side of an equation: either a single codomain element, which
/// stands for its principal cut, or an explicit cut carrier.
struct TargetSpec {
    std::variant<std::string, std::vector<std::string>> value;

    static TargetSpec element(std::string label) { return {std::move(label)}; }
    static TargetSpec cut(std::vector<std::string> labels) { return {std::move(labels)}; }
};

/// The data of an equation T(A) = F: an unordered ground set X, an ordered
/// codomain Y, a total map T and a target cut F of Y.
class EquationProblem {
public:
    static EquationProblem make(FinitePoset x, FinitePoset y,
                                const std::vector<std::pair<std::string, std::string>>& t_pairs,
                                const TargetSpec& f);
    static EquationProblem from_map(GroundMap t, const TargetSpec& f);

    const FinitePoset& x() const { return t_.domain(); }
    const FinitePoset& y() const { return t_.codomain(); }
    const GroundMap& t() const { return t_; }
    const Cut& f() const { return f_; }

private:
    EquationProblem(GroundMap t, Cut f) : t_(std::move(t)), f_(std::move(f)) {}

    GroundMap t_;
    Cut f_;
};

/// The kernel quotient of a problem: classes of same-image elements, ordered
/// by comparing their images.
class QuotientSpace {
public:
    std::size_t class_count() const { return classes_.size(); }

    /// Member indices (into X) per class; members sorted by label, classes
    /// sorted by representative label.
    const std::vector<std::vector<std::size_t>>& classes() const { return classes_; }
    std::size_t class_of(std::size_t x_index) const { return class_of_[x_index]; }
    const std::string& representative(std::size_t class_index) const;
    std::vector<std::string> member_labels(std::size_t class_index) const;

    /// The classes under the pulled-back order; elements carry the
    /// representatives' labels.
    const FinitePoset& class_poset() const { return class_poset_; }

    /// The injection sending a class to the common image of its members.
    const GroundMap& induced_injection() const { return injection_; }

    const FinitePoset& ground_set() const { return ground_; }

private:
    friend QuotientSpace quotient_by_kernel(const EquationProblem&);

    QuotientSpace(FinitePoset ground, std::vector<std::vector<std::size_t>> classes,
                  std::vector<std::size_t> class_of, FinitePoset class_poset,
                  GroundMap injection)
        : ground_(std::move(ground)),
          classes_(std::move(classes)),
          class_of_(std::move(class_of)),
          class_poset_(std::move(class_poset)),
          injection_(std::move(injection)) {}

    FinitePoset ground_;
    std::vector<std::vector<std::size_t>> classes_;
    std::vector<std::size_t> class_of_;
    FinitePoset class_poset_;
    GroundMap injection_;
};

/// Partitions X by equality of images under T, picks label-least
/// representatives and pulls the codomain order back onto the classes.
QuotientSpace quotient_by_kernel(const EquationProblem& problem);

/// The order whose only comparabilities are z = z' or a strictly smaller
/// image: antisymmetry survives even when the map is not injective.
FinitePoset generalized_pullback_order(const GroundMap& t_lambda);

/// A problem re-based on a set Z that covers the quotient through a
/// surjection lambda.
struct FactoredProblem {
    FinitePoset z;        // carries the strict-image order
    GroundMap lambda;     // z -> class poset
    GroundMap t_lambda;   // z -> Y, the composite through the injection
};

/// Composes T through lambda, builds the strict-image order on Z and checks
/// that the injection is an order isomorphic embedding while lambda and the
/// composite are increasing. NotSurjectiveError when lambda misses a class.
FactoredProblem factor_problem(const QuotientSpace& quotient,
                               const std::vector<std::string>& z_labels,
                               const std::vector<std::pair<std::string, std::string>>& lambda_pairs);

}  // namespace ordcomplete
