#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "ordcomplete/bitset.hpp"
#include "ordcomplete/errors.hpp"

namespace ordcomplete {

/// Enumeration guards for constructions whose output can grow exponentially.
struct Caps {
    std::size_t max_elements = 4096;
    std::size_t max_cuts = 20000;
};

class FinitePoset;

/// A subset of one particular poset's ground set.
///
/// Carries the identity tag of the poset it was created from; operations
/// reject subsets bound to a different poset.
class Subset {
public:
    Subset() = default;

    const Bitset& bits() const { return bits_; }
    std::uint64_t poset_id() const { return poset_id_; }
    std::size_t count() const { return bits_.count(); }
    bool empty() const { return bits_.none(); }
    bool test(std::size_t i) const { return bits_.test(i); }
    bool is_subset_of(const Subset& other) const {
        return poset_id_ == other.poset_id_ && bits_.is_subset_of(other.bits_);
    }

    bool operator==(const Subset&) const = default;

private:
    friend class FinitePoset;
    Subset(std::uint64_t poset_id, Bitset bits) : poset_id_(poset_id), bits_(std::move(bits)) {}

    std::uint64_t poset_id_ = 0;
    Bitset bits_;
};

/// Finite partially ordered set over labelled elements.
///
/// The order is stored densely: one up-set and one down-set bitset per
/// element. Instances are immutable after construction; the unique identity
/// tag is preserved by copies, so copies remain compatible with subsets of
/// the original.
class FinitePoset {
public:
    /// Empty poset; a usable instance comes from one of the factories.
    FinitePoset() = default;

    /// Builds a poset whose order is the reflexive-transitive closure of the
    /// generator pairs. Throws CycleError when the closure is not
    /// antisymmetric, DuplicateLabelError / UnknownElementError on bad input,
    /// SizeCapError above caps.max_elements.
    static FinitePoset validate(std::vector<std::string> elements,
                                const std::vector<std::pair<std::string, std::string>>& leq_pairs,
                                const Caps& caps = {});

    /// A poset with no comparabilities besides x <= x. Plain finite sets are
    /// modelled this way.
    static FinitePoset discrete(std::vector<std::string> elements, const Caps& caps = {});

    /// Builds a poset from an already-closed relation given as up-sets
    /// (up_sets[i] = all j with i <= j); the axioms are still verified.
    static FinitePoset from_up_sets(std::vector<std::string> elements,
                                    std::vector<Bitset> up_sets, const Caps& caps = {});

    /// Same, but trusts the caller that the rows already form a partial
    /// order. Reserved for relations that are orders by construction, such
    /// as set inclusion; axioms are only checked via assertions.
    static FinitePoset from_up_sets_unchecked(std::vector<std::string> elements,
                                              std::vector<Bitset> up_sets);

    std::uint64_t id() const { return id_; }
    std::size_t size() const { return labels_.size(); }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(std::size_t i) const { return labels_[i]; }
    bool has(const std::string& label) const { return index_.count(label) != 0; }
    std::size_t index_of(const std::string& label) const;

    bool leq(std::size_t a, std::size_t b) const { return up_[a].test(b); }
    bool less(std::size_t a, std::size_t b) const { return a != b && leq(a, b); }

    /// [a> as a bitset.
    const Bitset& up_set(std::size_t a) const { return up_[a]; }
    /// <a] as a bitset.
    const Bitset& down_set(std::size_t a) const { return down_[a]; }

    Subset subset(Bitset bits) const;
    Subset subset_of(const std::vector<std::string>& labels) const;
    Subset empty_subset() const { return Subset(id_, Bitset(size())); }
    Subset full_subset() const { return Subset(id_, Bitset(size(), true)); }

    /// <a] = { x : x <= a }.
    Subset principal_down(const std::string& a) const;
    /// [a> = { x : x >= a }.
    Subset principal_up(const std::string& a) const;

    /// A^u: common upper bounds of A; the empty subset yields the whole set.
    Subset upper_bounds(const Subset& a) const;
    /// A^l: common lower bounds of A; the empty subset yields the whole set.
    Subset lower_bounds(const Subset& a) const;

    std::optional<std::size_t> minimum() const;
    std::optional<std::size_t> maximum() const;

    /// Least element of `candidates` when one exists.
    std::optional<std::size_t> least_of(const Bitset& candidates) const;
    std::optional<std::size_t> greatest_of(const Bitset& candidates) const;

    /// Least upper bound of `a` inside the poset, when it exists.
    std::optional<std::size_t> supremum(const Bitset& a) const;
    std::optional<std::size_t> infimum(const Bitset& a) const;

    /// Every pair (x, y) with x <= y, in index order.
    std::vector<std::pair<std::string, std::string>> relation_pairs() const;

    /// Transitive reduction: the pairs x < y with nothing strictly between.
    std::vector<std::pair<std::size_t, std::size_t>> cover_pairs() const;

    /// Same labels in the same positions and the same order relation;
    /// identity tags may differ.
    bool same_order_as(const FinitePoset& other) const;

    /// Labels of the members of `bits`, sorted lexicographically.
    std::vector<std::string> labels_of(const Bitset& bits) const;

    void require_bound(const Subset& a) const;

private:
    std::uint64_t id_ = 0;
    std::vector<std::string> labels_;
    std::unordered_map<std::string, std::size_t> index_;
    std::vector<Bitset> up_;
    std::vector<Bitset> down_;
};

/// Total mapping between the ground sets of two posets.
class GroundMap {
public:
    static GroundMap validate(FinitePoset domain, FinitePoset codomain,
                              const std::vector<std::pair<std::string, std::string>>& pairs);
    static GroundMap from_images(FinitePoset domain, FinitePoset codomain,
                                 std::vector<std::size_t> images);

    const FinitePoset& domain() const { return domain_; }
    const FinitePoset& codomain() const { return codomain_; }
    std::size_t image_of(std::size_t i) const { return images_[i]; }
    const std::vector<std::size_t>& images() const { return images_; }

    /// Forward image of a domain subset, as a codomain subset.
    Subset image_subset(const Subset& a) const;

    bool is_injective() const;
    bool is_surjective() const;

private:
    GroundMap(FinitePoset domain, FinitePoset codomain, std::vector<std::size_t> images)
        : domain_(std::move(domain)), codomain_(std::move(codomain)), images_(std::move(images)) {}

    FinitePoset domain_;
    FinitePoset codomain_;
    std::vector<std::size_t> images_;
};

/// x <= y implies f(x) <= f(y) for all pairs.
bool is_increasing(const GroundMap& f);

/// Order isomorphic embedding: injective with a <= b iff f(a) <= f(b).
bool is_oie(const GroundMap& f);

/// g after f; f's codomain and g's domain must be the same poset.
GroundMap compose(const GroundMap& g, const GroundMap& f);

}  // namespace ordcomplete
