#include "ordcomplete/mapping_ext.hpp"

namespace ordcomplete {

ExtendedMap::ExtendedMap(GroundMap ground, CompletionLattice domain_completion,
                         CompletionLattice codomain_completion)
    : ground_(std::move(ground)),
      domain_completion_(std::move(domain_completion)),
      codomain_completion_(std::move(codomain_completion)) {
    if (ground_.domain().id() != domain_completion_.base().id()) {
        throw PosetMismatchError("domain completion is over a different poset");
    }
    if (ground_.codomain().id() != codomain_completion_.base().id()) {
        throw PosetMismatchError("codomain completion is over a different poset");
    }
}

Cut ExtendedMap::extend_on_subset(const Subset& a) const {
    ground_.domain().require_bound(a);
    return cut_closure(ground_.codomain(), ground_.image_subset(a));
}

Cut ExtendedMap::extend_on_cut(const Cut& a) const {
    domain_completion_.require_member(a);
    return extend_on_subset(a.carrier());
}

PropA1Report ExtendedMap::check_prop_a1() const {
    PropA1Report report;
    const FinitePoset& x = ground_.domain();

    // Monotonicity over every pair A within B, walking submasks of each B.
    report.subset_monotone = true;
    const std::size_t n = x.size();
    if (n <= 12) {
        for (std::uint64_t b = 0; b < (std::uint64_t{1} << n) && report.subset_monotone; ++b) {
            Bitset b_bits(n);
            for (std::size_t i = 0; i < n; ++i) {
                if ((b >> i) & 1) b_bits.set(i);
            }
            Cut big = extend_on_subset(x.subset(b_bits));
            for (std::uint64_t a = b;; a = (a - 1) & b) {
                Bitset a_bits(n);
                for (std::size_t i = 0; i < n; ++i) {
                    if ((a >> i) & 1) a_bits.set(i);
                }
                if (!extend_on_subset(x.subset(a_bits)).bits().is_subset_of(big.bits())) {
                    report.subset_monotone = false;
                    break;
                }
                if (a == 0) break;
            }
        }
    } else {
        // Exhaustive subset pairs are unreasonable here; fall back to the
        // enumerated cuts, which is what downstream code relies on.
        for (std::size_t i = 0; i < domain_completion_.cut_count() && report.subset_monotone;
             ++i) {
            for (std::size_t j = 0; j < domain_completion_.cut_count(); ++j) {
                const Cut& a = domain_completion_.cut_at(i);
                const Cut& b = domain_completion_.cut_at(j);
                if (a.bits().is_subset_of(b.bits()) &&
                    !extend_on_cut(a).bits().is_subset_of(extend_on_cut(b).bits())) {
                    report.subset_monotone = false;
                    break;
                }
            }
        }
    }

    if (is_increasing(ground_)) {
        bool commutes = true;
        for (std::size_t i = 0; i < x.size(); ++i) {
            Cut lhs = extend_on_cut(domain_completion_.embed(i));
            Cut rhs = codomain_completion_.embed(ground_.image_of(i));
            if (!(lhs == rhs)) {
                commutes = false;
                break;
            }
        }
        report.diagram_commutes = commutes;
    }

    if (is_oie(ground_)) {
        bool oie = true;
        const std::size_t cuts = domain_completion_.cut_count();
        std::vector<Cut> images;
        images.reserve(cuts);
        for (std::size_t i = 0; i < cuts; ++i) {
            images.push_back(extend_on_cut(domain_completion_.cut_at(i)));
        }
        for (std::size_t i = 0; i < cuts && oie; ++i) {
            for (std::size_t j = 0; j < cuts; ++j) {
                if (i != j && images[i] == images[j]) {
                    oie = false;
                    break;
                }
                bool dom = domain_completion_.cut_at(i).bits().is_subset_of(
                    domain_completion_.cut_at(j).bits());
                bool cod = images[i].bits().is_subset_of(images[j].bits());
                if (dom != cod) {
                    oie = false;
                    break;
                }
            }
        }
        report.oie_preserved = oie;
    }

    return report;
}

namespace {

/// Every pair must have a least upper bound and a greatest lower bound; for
/// finite nonempty posets that already implies completeness.
void require_complete_lattice(const FinitePoset& p, const char* side) {
    if (p.size() == 0) {
        throw NotCompleteLatticeError(std::string(side) + " is empty");
    }
    for (std::size_t i = 0; i < p.size(); ++i) {
        for (std::size_t j = i; j < p.size(); ++j) {
            Bitset pair(p.size());
            pair.set(i);
            pair.set(j);
            if (!p.supremum(pair) || !p.infimum(pair)) {
                throw NotCompleteLatticeError(std::string(side) + " has a pair ('" +
                                              p.label(i) + "', '" + p.label(j) +
                                              "') without a join or meet");
            }
        }
    }
}

}  // namespace

SandwichResult monotone_sandwich(const GroundMap& mu, const Subset& e) {
    mu.domain().require_bound(e);
    if (e.empty()) throw EmptySubsetError("the sandwich needs a nonempty subset");
    require_complete_lattice(mu.domain(), "domain");
    require_complete_lattice(mu.codomain(), "codomain");
    if (!is_increasing(mu)) throw NotIncreasingError("map is not increasing");

    const FinitePoset& m = mu.domain();
    const FinitePoset& c = mu.codomain();
    std::size_t inf_e = *m.infimum(e.bits());
    std::size_t sup_e = *m.supremum(e.bits());
    Bitset image = mu.image_subset(e).bits();
    std::size_t inf_img = *c.infimum(image);
    std::size_t sup_img = *c.supremum(image);

    SandwichResult out;
    out.mu_of_inf = c.label(mu.image_of(inf_e));
    out.inf_of_image = c.label(inf_img);
    out.sup_of_image = c.label(sup_img);
    out.mu_of_sup = c.label(mu.image_of(sup_e));
    out.holds = c.leq(mu.image_of(inf_e), inf_img) && c.leq(inf_img, sup_img) &&
                c.leq(sup_img, mu.image_of(sup_e));
    return out;
}

}  // namespace ordcomplete
