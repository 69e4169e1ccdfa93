#include "ordcomplete/solver.hpp"

#include <algorithm>

namespace ordcomplete {

SolverContext SolverContext::build(const EquationProblem& problem, const Caps& caps) {
    QuotientSpace quotient = quotient_by_kernel(problem);
    CompletionLattice xt = CompletionLattice::enumerate(quotient.class_poset(), caps);
    CompletionLattice yc = CompletionLattice::enumerate(problem.y(), caps);
    ExtendedMap extension(quotient.induced_injection(), std::move(xt), std::move(yc));

    std::vector<Cut> images;
    images.reserve(extension.domain_completion().cut_count());
    for (std::size_t i = 0; i < extension.domain_completion().cut_count(); ++i) {
        images.push_back(extension.extend_on_cut(extension.domain_completion().cut_at(i)));
    }

    // Principal cuts must commute with the embedding of the class image.
    for (std::size_t u = 0; u < quotient.class_count(); ++u) {
        Cut through_extension =
            images[extension.domain_completion().index_of(extension.domain_completion().embed(u))];
        Cut directly = extension.codomain_completion().embed(
            quotient.induced_injection().image_of(u));
        if (!(through_extension == directly)) {
            throw InternalError("extension disagrees with the embedding on a principal cut");
        }
    }

    return SolverContext(problem, std::move(quotient), std::move(extension), std::move(images));
}

Cut SolverContext::apply_extension(const Cut& a) const {
    return images_[xt_completion().index_of(a)];
}

Cut SolverContext::target_cut(const TargetSpec& f) const {
    const FinitePoset& y = problem_.y();
    if (const auto* label = std::get_if<std::string>(&f.value)) {
        return y_completion().embed_label(*label);
    }
    const auto& labels = std::get<std::vector<std::string>>(f.value);
    return Cut::checked(y, y.subset_of(labels));
}

AggregateResult lower_aggregate(const SolverContext& context, const Cut& target) {
    const CompletionLattice& yc = context.y_completion();
    yc.require_member(target);
    AggregateResult out;
    std::vector<Cut> family;
    for (std::size_t i = 0; i < context.xt_completion().cut_count(); ++i) {
        if (context.image_of_cut(i).bits().is_subset_of(target.bits())) {
            out.witnesses.push_back(i);
            family.push_back(context.image_of_cut(i));
        }
    }
    out.aggregate = yc.sup(family);
    return out;
}

AggregateResult upper_aggregate(const SolverContext& context, const Cut& target) {
    const CompletionLattice& yc = context.y_completion();
    yc.require_member(target);
    AggregateResult out;
    std::vector<Cut> family;
    for (std::size_t i = 0; i < context.xt_completion().cut_count(); ++i) {
        if (target.bits().is_subset_of(context.image_of_cut(i).bits())) {
            out.witnesses.push_back(i);
            family.push_back(context.image_of_cut(i));
        }
    }
    out.aggregate = yc.inf(family);
    return out;
}

namespace {

Cut sup_of_indices(const SolverContext& context, const std::vector<std::size_t>& indices) {
    std::vector<Cut> cuts;
    cuts.reserve(indices.size());
    for (std::size_t i : indices) cuts.push_back(context.xt_completion().cut_at(i));
    return context.xt_completion().sup(cuts);
}

Cut inf_of_indices(const SolverContext& context, const std::vector<std::size_t>& indices) {
    std::vector<Cut> cuts;
    cuts.reserve(indices.size());
    for (std::size_t i : indices) cuts.push_back(context.xt_completion().cut_at(i));
    return context.xt_completion().inf(cuts);
}

}  // namespace

ChainReport check_chain(const SolverContext& context, const Cut& target) {
    AggregateResult lower = lower_aggregate(context, target);
    AggregateResult upper = upper_aggregate(context, target);

    ChainReport report;
    report.sup_lower_images = lower.aggregate;
    report.image_of_sup = context.apply_extension(sup_of_indices(context, lower.witnesses));
    report.image_of_inf = context.apply_extension(inf_of_indices(context, upper.witnesses));
    report.inf_upper_images = upper.aggregate;
    report.target = target;

    bool ok = report.sup_lower_images.bits().is_subset_of(report.image_of_sup.bits()) &&
              report.image_of_sup.bits().is_subset_of(report.image_of_inf.bits()) &&
              report.image_of_inf.bits().is_subset_of(report.inf_upper_images.bits()) &&
              report.sup_lower_images.bits().is_subset_of(target.bits()) &&
              target.bits().is_subset_of(report.inf_upper_images.bits());
    if (!ok) throw InternalError("an inclusion of the bounding chain failed");
    return report;
}

SolveOutcome solve(const SolverContext& context, const Cut& target) {
    SolveOutcome out;
    AggregateResult lower = lower_aggregate(context, target);
    AggregateResult upper = upper_aggregate(context, target);
    out.lower_witnesses = lower.witnesses;
    out.upper_witnesses = upper.witnesses;
    out.lower_aggregate = lower.aggregate;
    out.upper_aggregate = upper.aggregate;
    out.chain = check_chain(context, target);
    out.solvable = lower.aggregate == upper.aggregate;

    if (out.solvable) {
        Cut by_sup = sup_of_indices(context, lower.witnesses);
        Cut by_inf = inf_of_indices(context, upper.witnesses);
        if (!(by_sup == by_inf)) {
            throw InternalError("the sup and inf solution formulas disagree");
        }
        if (!(context.apply_extension(by_sup) == target)) {
            throw InternalError("the computed solution does not map onto the target");
        }
        std::optional<Cut> scanned = oracle_solve(context, target);
        if (!scanned || !(*scanned == by_sup)) {
            throw InternalError("the solution formulas disagree with the direct scan");
        }
        if (out.upper_witnesses.empty() || out.lower_witnesses.empty()) {
            throw InternalError("a solvable target must witness itself in both families");
        }
        out.solution = by_sup;
    }
    return out;
}

std::optional<Cut> oracle_solve(const SolverContext& context, const Cut& target) {
    context.y_completion().require_member(target);
    std::optional<Cut> found;
    for (std::size_t i = 0; i < context.xt_completion().cut_count(); ++i) {
        if (context.image_of_cut(i) == target) {
            if (found) throw InternalError("two distinct cuts map onto the same target");
            found = context.xt_completion().cut_at(i);
        }
    }
    return found;
}

GlobalReport global_solvability(const SolverContext& context) {
    const CompletionLattice& yc = context.y_completion();
    const CompletionLattice& xtc = context.xt_completion();

    std::vector<bool> attained(yc.cut_count(), false);
    for (std::size_t i = 0; i < xtc.cut_count(); ++i) {
        attained[yc.index_of(context.image_of_cut(i))] = true;
    }

    GlobalReport report;
    report.principal_cuts_attained = true;
    for (std::size_t y = 0; y < yc.base().size(); ++y) {
        if (!attained[yc.index_of(yc.embed(y))]) {
            report.principal_cuts_attained = false;
            break;
        }
    }
    report.all_cuts_attained = true;
    for (std::size_t i = 0; i < yc.cut_count(); ++i) {
        if (!attained[i]) {
            report.all_cuts_attained = false;
            report.unattained.push_back(yc.cut_label(yc.cut_at(i)));
        }
    }

    if (report.principal_cuts_attained != report.all_cuts_attained) {
        throw InternalError("the two global solvability conditions disagree");
    }

    if (report.all_cuts_attained) {
        // Surjective plus order isomorphic embedding means isomorphism; the
        // biconditional is re-verified pairwise on the lattice posets.
        std::vector<std::size_t> images;
        images.reserve(xtc.cut_count());
        for (std::size_t i = 0; i < xtc.cut_count(); ++i) {
            images.push_back(yc.index_of(context.image_of_cut(i)));
        }
        GroundMap lifted =
            GroundMap::from_images(xtc.as_poset(), yc.as_poset(), std::move(images));
        report.order_isomorphism =
            lifted.is_injective() && lifted.is_surjective() && is_oie(lifted);
        if (!report.order_isomorphism) {
            throw InternalError("a surjective extension failed the isomorphism check");
        }
    }
    return report;
}

}  // namespace ordcomplete
