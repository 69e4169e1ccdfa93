#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "ordcomplete/poset.hpp"

namespace ordcomplete {

/// A subset A with A^{ul} = A.
class Cut {
public:
    Cut() = default;

    /// Wraps a carrier after verifying it is a cut; InvalidInputError otherwise.
    static Cut checked(const FinitePoset& p, const Subset& carrier);

    const Subset& carrier() const { return carrier_; }
    const Bitset& bits() const { return carrier_.bits(); }
    std::size_t count() const { return carrier_.count(); }
    bool contains(const Cut& other) const { return other.bits().is_subset_of(bits()); }

    bool operator==(const Cut&) const = default;

private:
    friend class CompletionLattice;
    friend Cut cut_closure(const FinitePoset&, const Subset&);
    explicit Cut(Subset carrier) : carrier_(std::move(carrier)) {}

    Subset carrier_;
};

/// A^{ul}: the least cut containing A.
Cut cut_closure(const FinitePoset& p, const Subset& a);

/// True iff A^{ul} = A.
bool is_cut(const FinitePoset& p, const Subset& a);

struct DensitySplit {
    /// Elements x with <x] contained in the cut (this is the carrier itself).
    std::vector<std::string> below;
    /// Elements x whose principal down-set contains the cut.
    std::vector<std::string> above;
};

/// The lattice of all cuts of a finite poset, ordered by inclusion.
///
/// Cuts are enumerated as a closure system: the whole ground set is always a
/// cut, intersections of cuts are cuts, and every cut is an intersection of
/// principal down-sets. The canonical order is by carrier cardinality, then
/// lexicographically by sorted labels; all outputs follow it.
class CompletionLattice {
public:
    static CompletionLattice enumerate(const FinitePoset& base, const Caps& caps = {});

    const FinitePoset& base() const { return base_; }
    std::size_t cut_count() const { return cuts_.size(); }
    const Cut& cut_at(std::size_t i) const { return cuts_[i]; }
    const std::vector<Cut>& cuts() const { return cuts_; }

    bool contains(const Cut& c) const;
    std::size_t index_of(const Cut& c) const;

    /// The canonical embedding x -> <x].
    Cut embed(std::size_t element_index) const;
    Cut embed_label(const std::string& label) const;

    /// Least upper bound: the closure of the union. Empty family yields the
    /// lattice bottom.
    Cut sup(std::span<const Cut> family) const;

    /// Greatest lower bound: the plain intersection. Empty family yields the
    /// lattice top (the whole ground set).
    Cut inf(std::span<const Cut> family) const;

    Cut bottom() const { return cuts_.front(); }
    Cut top() const { return cuts_.back(); }

    bool has_empty_cut() const { return cuts_.front().count() == 0; }
    bool has_full_cut() const { return cuts_.back().count() == base_.size(); }

    DensitySplit density_decomposition(const Cut& a) const;

    /// The closure of A, computed both directly and as the sup of the
    /// principal cuts of A's members; InternalError if the routes disagree.
    Cut generated_cut(const Subset& a) const;

    /// Canonical display name of a cut: "{a,b}" with labels sorted.
    std::string cut_label(const Cut& c) const;

    /// The lattice itself as a labelled poset (elements are cut labels,
    /// order is inclusion).
    const FinitePoset& as_poset() const { return lattice_poset_; }

    /// The embedding x -> <x] as a map from the base into as_poset().
    GroundMap embedding_map() const;

    void require_member(const Cut& c) const;

private:
    CompletionLattice() = default;

    FinitePoset base_;
    std::vector<Cut> cuts_;
    std::unordered_map<Bitset, std::size_t, BitsetHash> index_;
    FinitePoset lattice_poset_;
};

}  // namespace ordcomplete
