#include "ordcomplete/poset.hpp"

#include <algorithm>
#include <atomic>

namespace ordcomplete {

namespace {

std::uint64_t next_poset_id() {
    static std::atomic<std::uint64_t> counter{1};
    return counter.fetch_add(1);
}

}  // namespace

FinitePoset FinitePoset::validate(std::vector<std::string> elements,
                                  const std::vector<std::pair<std::string, std::string>>& leq_pairs,
                                  const Caps& caps) {
    if (elements.size() > caps.max_elements) {
        throw SizeCapError("poset has " + std::to_string(elements.size()) +
                           " elements, cap is " + std::to_string(caps.max_elements));
    }

    FinitePoset p;
    p.labels_ = std::move(elements);
    for (std::size_t i = 0; i < p.labels_.size(); ++i) {
        auto [it, inserted] = p.index_.emplace(p.labels_[i], i);
        if (!inserted) throw DuplicateLabelError("duplicate element label '" + p.labels_[i] + "'");
    }

    const std::size_t n = p.labels_.size();
    p.up_.assign(n, Bitset(n));
    for (std::size_t i = 0; i < n; ++i) p.up_[i].set(i);
    for (const auto& [lo, hi] : leq_pairs) {
        p.up_[p.index_of(lo)].set(p.index_of(hi));
    }

    // Reflexive-transitive closure on up-set rows.
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t i = 0; i < n; ++i) {
            if (p.up_[i].test(k)) p.up_[i] |= p.up_[k];
        }
    }

    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (p.up_[i].test(j) && p.up_[j].test(i)) {
                throw CycleError("elements '" + p.labels_[i] + "' and '" + p.labels_[j] +
                                 "' are below each other");
            }
        }
    }

    p.down_.assign(n, Bitset(n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (p.up_[i].test(j)) p.down_[j].set(i);
        }
    }

    p.id_ = next_poset_id();
    return p;
}

FinitePoset FinitePoset::discrete(std::vector<std::string> elements, const Caps& caps) {
    return validate(std::move(elements), {}, caps);
}

namespace {

void index_labels(const std::vector<std::string>& labels,
                  std::unordered_map<std::string, std::size_t>& index) {
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (!index.emplace(labels[i], i).second) {
            throw DuplicateLabelError("duplicate element label '" + labels[i] + "'");
        }
    }
}

void fill_down_sets(const std::vector<Bitset>& up, std::vector<Bitset>& down) {
    const std::size_t n = up.size();
    down.assign(n, Bitset(n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j : up[i].indices()) down[j].set(i);
    }
}

}  // namespace

FinitePoset FinitePoset::from_up_sets(std::vector<std::string> elements,
                                      std::vector<Bitset> up_sets, const Caps& caps) {
    if (elements.size() > caps.max_elements) {
        throw SizeCapError("poset has " + std::to_string(elements.size()) +
                           " elements, cap is " + std::to_string(caps.max_elements));
    }
    if (up_sets.size() != elements.size()) {
        throw InvalidInputError("relation row count does not match element count");
    }
    const std::size_t n = elements.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (up_sets[i].universe() != n) {
            throw InvalidInputError("relation row width does not match element count");
        }
        if (!up_sets[i].test(i)) {
            throw InvalidInputError("relation is not reflexive at '" + elements[i] + "'");
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (up_sets[i].test(j) && up_sets[j].test(i)) {
                throw CycleError("elements '" + elements[i] + "' and '" + elements[j] +
                                 "' are below each other");
            }
        }
    }
    // A transitive relation is a fixpoint of its own closure.
    std::vector<Bitset> closed = up_sets;
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t i = 0; i < n; ++i) {
            if (closed[i].test(k)) closed[i] |= closed[k];
        }
    }
    if (closed != up_sets) {
        throw InvalidInputError("relation rows are not transitively closed");
    }

    FinitePoset p;
    p.labels_ = std::move(elements);
    index_labels(p.labels_, p.index_);
    p.up_ = std::move(up_sets);
    fill_down_sets(p.up_, p.down_);
    p.id_ = next_poset_id();
    return p;
}

FinitePoset FinitePoset::from_up_sets_unchecked(std::vector<std::string> elements,
                                                std::vector<Bitset> up_sets) {
    FinitePoset p;
    p.labels_ = std::move(elements);
    index_labels(p.labels_, p.index_);
    assert(up_sets.size() == p.labels_.size());
    p.up_ = std::move(up_sets);
    fill_down_sets(p.up_, p.down_);
    p.id_ = next_poset_id();
    return p;
}

std::size_t FinitePoset::index_of(const std::string& label) const {
    auto it = index_.find(label);
    if (it == index_.end()) throw UnknownElementError("unknown element '" + label + "'");
    return it->second;
}

Subset FinitePoset::subset(Bitset bits) const {
    if (bits.universe() != size()) {
        throw PosetMismatchError("bitset universe does not match poset size");
    }
    return Subset(id_, std::move(bits));
}

Subset FinitePoset::subset_of(const std::vector<std::string>& labels) const {
    Bitset bits(size());
    for (const auto& l : labels) bits.set(index_of(l));
    return Subset(id_, std::move(bits));
}

Subset FinitePoset::principal_down(const std::string& a) const {
    return Subset(id_, down_[index_of(a)]);
}

Subset FinitePoset::principal_up(const std::string& a) const {
    return Subset(id_, up_[index_of(a)]);
}

Subset FinitePoset::upper_bounds(const Subset& a) const {
    require_bound(a);
    Bitset out(size(), true);
    for (std::size_t i : a.bits().indices()) out &= up_[i];
    return Subset(id_, std::move(out));
}

Subset FinitePoset::lower_bounds(const Subset& a) const {
    require_bound(a);
    Bitset out(size(), true);
    for (std::size_t i : a.bits().indices()) out &= down_[i];
    return Subset(id_, std::move(out));
}

std::optional<std::size_t> FinitePoset::minimum() const {
    return least_of(Bitset(size(), true));
}

std::optional<std::size_t> FinitePoset::maximum() const {
    return greatest_of(Bitset(size(), true));
}

std::optional<std::size_t> FinitePoset::least_of(const Bitset& candidates) const {
    for (std::size_t i : candidates.indices()) {
        if (candidates.is_subset_of(up_[i])) return i;
    }
    return std::nullopt;
}

std::optional<std::size_t> FinitePoset::greatest_of(const Bitset& candidates) const {
    for (std::size_t i : candidates.indices()) {
        if (candidates.is_subset_of(down_[i])) return i;
    }
    return std::nullopt;
}

std::optional<std::size_t> FinitePoset::supremum(const Bitset& a) const {
    return least_of(upper_bounds(subset(a)).bits());
}

std::optional<std::size_t> FinitePoset::infimum(const Bitset& a) const {
    return greatest_of(lower_bounds(subset(a)).bits());
}

std::vector<std::pair<std::string, std::string>> FinitePoset::relation_pairs() const {
    std::vector<std::pair<std::string, std::string>> out;
    for (std::size_t i = 0; i < size(); ++i) {
        for (std::size_t j : up_[i].indices()) out.emplace_back(labels_[i], labels_[j]);
    }
    return out;
}

std::vector<std::pair<std::size_t, std::size_t>> FinitePoset::cover_pairs() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t i = 0; i < size(); ++i) {
        for (std::size_t j : up_[i].indices()) {
            if (i == j) continue;
            bool covered = true;
            for (std::size_t k : up_[i].indices()) {
                if (k != i && k != j && up_[k].test(j)) {
                    covered = false;
                    break;
                }
            }
            if (covered) out.emplace_back(i, j);
        }
    }
    return out;
}

bool FinitePoset::same_order_as(const FinitePoset& other) const {
    return labels_ == other.labels_ && up_ == other.up_;
}

std::vector<std::string> FinitePoset::labels_of(const Bitset& bits) const {
    std::vector<std::string> out;
    out.reserve(bits.count());
    for (std::size_t i : bits.indices()) out.push_back(labels_[i]);
    std::sort(out.begin(), out.end());
    return out;
}

void FinitePoset::require_bound(const Subset& a) const {
    if (a.poset_id() != id_) {
        throw PosetMismatchError("subset is bound to a different poset");
    }
}

GroundMap GroundMap::validate(FinitePoset domain, FinitePoset codomain,
                              const std::vector<std::pair<std::string, std::string>>& pairs) {
    std::vector<std::optional<std::size_t>> images(domain.size());
    for (const auto& [from, to] : pairs) {
        std::size_t i = domain.index_of(from);
        std::size_t j = codomain.index_of(to);
        if (images[i] && *images[i] != j) {
            throw InvalidInputError("element '" + from + "' is mapped twice");
        }
        images[i] = j;
    }
    std::vector<std::size_t> total;
    total.reserve(images.size());
    for (std::size_t i = 0; i < images.size(); ++i) {
        if (!images[i]) {
            throw InvalidInputError("element '" + domain.label(i) + "' has no image");
        }
        total.push_back(*images[i]);
    }
    return GroundMap(std::move(domain), std::move(codomain), std::move(total));
}

GroundMap GroundMap::from_images(FinitePoset domain, FinitePoset codomain,
                                 std::vector<std::size_t> images) {
    if (images.size() != domain.size()) {
        throw InvalidInputError("image count does not match domain size");
    }
    for (std::size_t j : images) {
        if (j >= codomain.size()) throw UnknownElementError("image index out of range");
    }
    return GroundMap(std::move(domain), std::move(codomain), std::move(images));
}

Subset GroundMap::image_subset(const Subset& a) const {
    domain_.require_bound(a);
    Bitset out(codomain_.size());
    for (std::size_t i : a.bits().indices()) out.set(images_[i]);
    return codomain_.subset(std::move(out));
}

bool GroundMap::is_injective() const {
    Bitset seen(codomain_.size());
    for (std::size_t j : images_) {
        if (seen.test(j)) return false;
        seen.set(j);
    }
    return true;
}

bool GroundMap::is_surjective() const {
    Bitset seen(codomain_.size());
    for (std::size_t j : images_) seen.set(j);
    return seen.count() == codomain_.size();
}

bool is_increasing(const GroundMap& f) {
    const auto& d = f.domain();
    const auto& c = f.codomain();
    for (std::size_t a = 0; a < d.size(); ++a) {
        for (std::size_t b : d.up_set(a).indices()) {
            if (!c.leq(f.image_of(a), f.image_of(b))) return false;
        }
    }
    return true;
}

bool is_oie(const GroundMap& f) {
    if (!f.is_injective()) return false;
    const auto& d = f.domain();
    const auto& c = f.codomain();
    for (std::size_t a = 0; a < d.size(); ++a) {
        for (std::size_t b = 0; b < d.size(); ++b) {
            if (d.leq(a, b) != c.leq(f.image_of(a), f.image_of(b))) return false;
        }
    }
    return true;
}

GroundMap compose(const GroundMap& g, const GroundMap& f) {
    if (f.codomain().id() != g.domain().id()) {
        throw PosetMismatchError("composition: inner codomain differs from outer domain");
    }
    std::vector<std::size_t> images;
    images.reserve(f.domain().size());
    for (std::size_t i = 0; i < f.domain().size(); ++i) {
        images.push_back(g.image_of(f.image_of(i)));
    }
    return GroundMap::from_images(f.domain(), g.codomain(), std::move(images));
}

}  // namespace ordcomplete
