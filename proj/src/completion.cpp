#include "ordcomplete/completion.hpp"

#include <algorithm>
#include <deque>

namespace ordcomplete {

Cut Cut::checked(const FinitePoset& p, const Subset& carrier) {
    if (!is_cut(p, carrier)) {
        std::string body;
        for (const auto& l : p.labels_of(carrier.bits())) {
            if (!body.empty()) body += ",";
            body += l;
        }
        throw InvalidInputError("carrier {" + body + "} is not a cut");
    }
    return Cut(carrier);
}

Cut cut_closure(const FinitePoset& p, const Subset& a) {
    return Cut(p.lower_bounds(p.upper_bounds(a)));
}

bool is_cut(const FinitePoset& p, const Subset& a) {
    return cut_closure(p, a).carrier() == a;
}

CompletionLattice CompletionLattice::enumerate(const FinitePoset& base, const Caps& caps) {
    CompletionLattice lat;
    lat.base_ = base;
    const std::size_t n = base.size();

    // Closure system: every cut is an intersection of principal down-sets,
    // with the empty intersection giving the full ground set. Start from the
    // full set and close under intersection with each <x].
    std::unordered_map<Bitset, std::size_t, BitsetHash> seen;
    std::deque<Bitset> work;
    Bitset full(n, true);
    seen.emplace(full, 0);
    work.push_back(full);
    while (!work.empty()) {
        Bitset current = std::move(work.front());
        work.pop_front();
        for (std::size_t x = 0; x < n; ++x) {
            Bitset next = current & base.down_set(x);
            if (seen.emplace(next, seen.size()).second) {
                if (seen.size() > caps.max_cuts) {
                    throw SizeCapError("completion exceeds the cut cap of " +
                                       std::to_string(caps.max_cuts));
                }
                work.push_back(next);
            }
        }
    }

    std::vector<Bitset> carriers;
    carriers.reserve(seen.size());
    for (const auto& [bits, _] : seen) carriers.push_back(bits);

    std::vector<std::vector<std::string>> sorted_labels(carriers.size());
    for (std::size_t i = 0; i < carriers.size(); ++i) {
        sorted_labels[i] = base.labels_of(carriers[i]);
    }
    std::vector<std::size_t> order(carriers.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (carriers[a].count() != carriers[b].count()) {
            return carriers[a].count() < carriers[b].count();
        }
        return sorted_labels[a] < sorted_labels[b];
    });

    lat.cuts_.reserve(carriers.size());
    for (std::size_t rank = 0; rank < order.size(); ++rank) {
        const Bitset& bits = carriers[order[rank]];
        lat.cuts_.push_back(Cut(base.subset(bits)));
        lat.index_.emplace(bits, rank);
    }

    // The lattice as a poset in its own right, ordered by inclusion. The
    // inclusion order among distinct sets is a partial order by construction.
    std::vector<std::string> names;
    std::vector<Bitset> ups(lat.cuts_.size(), Bitset(lat.cuts_.size()));
    names.reserve(lat.cuts_.size());
    for (std::size_t i = 0; i < lat.cuts_.size(); ++i) {
        names.push_back(lat.cut_label(lat.cuts_[i]));
        for (std::size_t j = 0; j < lat.cuts_.size(); ++j) {
            if (lat.cuts_[i].bits().is_subset_of(lat.cuts_[j].bits())) ups[i].set(j);
        }
    }
    lat.lattice_poset_ = FinitePoset::from_up_sets_unchecked(std::move(names), std::move(ups));
    return lat;
}

bool CompletionLattice::contains(const Cut& c) const {
    return c.carrier().poset_id() == base_.id() && index_.count(c.bits()) != 0;
}

std::size_t CompletionLattice::index_of(const Cut& c) const {
    require_member(c);
    return index_.at(c.bits());
}

Cut CompletionLattice::embed(std::size_t element_index) const {
    return Cut(base_.subset(base_.down_set(element_index)));
}

Cut CompletionLattice::embed_label(const std::string& label) const {
    return embed(base_.index_of(label));
}

Cut CompletionLattice::sup(std::span<const Cut> family) const {
    Bitset acc(base_.size());
    for (const auto& c : family) {
        require_member(c);
        acc |= c.bits();
    }
    return cut_closure(base_, base_.subset(std::move(acc)));
}

Cut CompletionLattice::inf(std::span<const Cut> family) const {
    Bitset acc(base_.size(), true);
    for (const auto& c : family) {
        require_member(c);
        acc &= c.bits();
    }
    Subset carrier = base_.subset(std::move(acc));
    if (!is_cut(base_, carrier)) {
        throw InternalError("intersection of cuts is not a cut");
    }
    return Cut(std::move(carrier));
}

DensitySplit CompletionLattice::density_decomposition(const Cut& a) const {
    require_member(a);
    DensitySplit split;
    for (std::size_t x = 0; x < base_.size(); ++x) {
        if (base_.down_set(x).is_subset_of(a.bits())) split.below.push_back(base_.label(x));
        if (a.bits().is_subset_of(base_.down_set(x))) split.above.push_back(base_.label(x));
    }
    std::sort(split.below.begin(), split.below.end());
    std::sort(split.above.begin(), split.above.end());
    return split;
}

Cut CompletionLattice::generated_cut(const Subset& a) const {
    base_.require_bound(a);
    Cut direct = cut_closure(base_, a);
    std::vector<Cut> principals;
    principals.reserve(a.count());
    for (std::size_t x : a.bits().indices()) principals.push_back(embed(x));
    Cut via_sup = sup(principals);
    if (!(direct == via_sup)) {
        throw InternalError("closure and principal-sup routes disagree for a generated cut");
    }
    return direct;
}

std::string CompletionLattice::cut_label(const Cut& c) const {
    std::string out = "{";
    bool first = true;
    for (const auto& l : base_.labels_of(c.bits())) {
        if (!first) out += ",";
        out += l;
        first = false;
    }
    out += "}";
    return out;
}

GroundMap CompletionLattice::embedding_map() const {
    std::vector<std::size_t> images;
    images.reserve(base_.size());
    for (std::size_t x = 0; x < base_.size(); ++x) {
        images.push_back(index_.at(base_.down_set(x)));
    }
    return GroundMap::from_images(base_, lattice_poset_, std::move(images));
}

void CompletionLattice::require_member(const Cut& c) const {
    if (c.carrier().poset_id() != base_.id()) {
        throw PosetMismatchError("cut is bound to a different poset");
    }
    if (index_.count(c.bits()) == 0) {
        throw InternalError("carrier is not among the enumerated cuts");
    }
}

}  // namespace ordcomplete
