#pragma once

#include <optional>
#include <string>

#include "ordcomplete/completion.hpp"

namespace ordcomplete {

struct PropA1Report {
    /// Subset extension is monotone for set inclusion.
    bool subset_monotone = false;
    /// Principal cuts commute with the ground map; empty when the ground map
    /// is not increasing.
    std::optional<bool> diagram_commutes;
    /// The cut-level extension is an order isomorphic embedding; empty when
    /// the ground map is not one.
    std::optional<bool> oie_preserved;
};

/// A ground map together with the completions of its domain and codomain,
/// giving the extension that sends a subset A to the cut generated by its
/// image.
class ExtendedMap {
public:
    ExtendedMap(GroundMap ground, CompletionLattice domain_completion,
                CompletionLattice codomain_completion);

    const GroundMap& ground() const { return ground_; }
    const CompletionLattice& domain_completion() const { return domain_completion_; }
    const CompletionLattice& codomain_completion() const { return codomain_completion_; }

    /// (image of A) closed to a cut of the codomain.
    Cut extend_on_subset(const Subset& a) const;

    /// Restriction of extend_on_subset to cuts of the domain.
    Cut extend_on_cut(const Cut& a) const;

    /// Exhaustive verification of the three extension laws on this map.
    PropA1Report check_prop_a1() const;

private:
    GroundMap ground_;
    CompletionLattice domain_completion_;
    CompletionLattice codomain_completion_;
};

struct SandwichResult {
    std::string mu_of_inf;
    std::string inf_of_image;
    std::string sup_of_image;
    std::string mu_of_sup;
    bool holds = false;
};

/// For an increasing map between two complete lattices and a nonempty subset
/// E of the domain, returns mu(inf E), inf mu(E), sup mu(E), mu(sup E) and
/// whether they form an ascending chain. Completeness of both sides is
/// verified by brute force; a finite poset in which every pair has a join and
/// a meet is complete.
SandwichResult monotone_sandwich(const GroundMap& mu, const Subset& e);

}  // namespace ordcomplete
