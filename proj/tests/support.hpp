#pragma once

#include <cstdint>
#include <vector>

#include "ordcomplete/completion.hpp"
#include "ordcomplete/fixtures.hpp"

namespace testsupport {

using namespace ordcomplete;

/// Builds the subset for a bitmask over the poset's elements.
inline Subset mask_subset(const FinitePoset& p, std::uint64_t mask) {
    Bitset bits(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) {
        if ((mask >> i) & 1u) bits.set(i);
    }
    return p.subset(std::move(bits));
}

/// Independent oracle: scans all 2^n subsets and keeps those equal to their
/// own upper-lower closure. Only usable for small posets.
inline std::vector<Bitset> brute_force_cuts(const FinitePoset& p) {
    std::vector<Bitset> out;
    const std::uint64_t limit = std::uint64_t{1} << p.size();
    for (std::uint64_t mask = 0; mask < limit; ++mask) {
        Subset a = mask_subset(p, mask);
        if (is_cut(p, a)) out.push_back(a.bits());
    }
    return out;
}

/// True when the two collections contain the same carriers, regardless of
/// order.
inline bool same_carriers(const std::vector<Bitset>& oracle, const CompletionLattice& lattice) {
    if (oracle.size() != lattice.cut_count()) return false;
    for (const auto& bits : oracle) {
        bool found = false;
        for (const auto& cut : lattice.cuts()) {
            if (cut.bits() == bits) {
                found = true;
                break;
            }
        }
        if (!found) return false;
    }
    return true;
}

}  // namespace testsupport
