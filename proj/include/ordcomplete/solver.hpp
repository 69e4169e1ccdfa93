#pragma once

#include <optional>

#include "ordcomplete/mapping_ext.hpp"
#include "ordcomplete/pullback.hpp"

namespace ordcomplete {

/// Everything solve needs, built once per problem: the kernel quotient, both
/// completions and the extension of the class injection, with its value on
/// every cut of the quotient completion precomputed. Immutable afterwards;
/// solves for different targets may share one context freely.
class SolverContext {
public:
    static SolverContext build(const EquationProblem& problem, const Caps& caps = {});

    const EquationProblem& problem() const { return problem_; }
    const QuotientSpace& quotient() const { return quotient_; }
    const CompletionLattice& xt_completion() const { return extension_.domain_completion(); }
    const CompletionLattice& y_completion() const { return extension_.codomain_completion(); }
    const ExtendedMap& extension() const { return extension_; }

    /// Extension value for the cut with the given canonical index.
    const Cut& image_of_cut(std::size_t cut_index) const { return images_[cut_index]; }
    Cut apply_extension(const Cut& a) const;

    /// Interprets a target given over Y as a member of the enumerated
    /// codomain completion.
    Cut target_cut(const TargetSpec& f) const;

private:
    SolverContext(EquationProblem problem, QuotientSpace quotient, ExtendedMap extension,
                  std::vector<Cut> images)
        : problem_(std::move(problem)),
          quotient_(std::move(quotient)),
          extension_(std::move(extension)),
          images_(std::move(images)) {}

    EquationProblem problem_;
    QuotientSpace quotient_;
    ExtendedMap extension_;
    std::vector<Cut> images_;
};

struct AggregateResult {
    Cut aggregate;
    /// Canonical indices of the qualifying cuts of the quotient completion.
    std::vector<std::size_t> witnesses;
};

/// sup of the extension values below the target, with the qualifying cuts.
AggregateResult lower_aggregate(const SolverContext& context, const Cut& target);

/// inf of the extension values above the target; an empty family yields the
/// codomain top.
AggregateResult upper_aggregate(const SolverContext& context, const Cut& target);

/// The four nested terms bounding a target: sup of images below it, images
/// of the sup and of the inf of the witness families, inf of images above.
struct ChainReport {
    Cut sup_lower_images;
    Cut image_of_sup;
    Cut image_of_inf;
    Cut inf_upper_images;
    Cut target;
};

/// Computes the four terms and verifies both the chain and the target's
/// position inside it; a violated inclusion is a bug, not a data error.
ChainReport check_chain(const SolverContext& context, const Cut& target);

struct SolveOutcome {
    bool solvable = false;
    std::optional<Cut> solution;
    std::vector<std::size_t> lower_witnesses;
    std::vector<std::size_t> upper_witnesses;
    Cut lower_aggregate;
    Cut upper_aggregate;
    ChainReport chain;
};

/// Decides solvability by comparing the two aggregates; when they agree the
/// solution is computed by both witness formulas, cross-checked against a
/// direct scan and verified to map onto the target exactly.
SolveOutcome solve(const SolverContext& context, const Cut& target);

/// Scans every cut of the quotient completion for an exact match; the
/// reference answer the fast path must agree with.
std::optional<Cut> oracle_solve(const SolverContext& context, const Cut& target);

struct GlobalReport {
    /// Every principal cut of the codomain is attained.
    bool principal_cuts_attained = false;
    /// Every cut of the codomain is attained.
    bool all_cuts_attained = false;
    /// The extension is a bijective order isomorphism (set when attained).
    bool order_isomorphism = false;
    /// Canonical labels of the codomain cuts with no preimage.
    std::vector<std::string> unattained;
};

/// Checks the two global solvability conditions, asserts their equivalence
/// and, when they hold, verifies the extension is an order isomorphism.
GlobalReport global_solvability(const SolverContext& context);

}  // namespace ordcomplete
