#include "ordcomplete/pullback.hpp"

#include <algorithm>
#include <map>

namespace ordcomplete {

EquationProblem EquationProblem::make(FinitePoset x, FinitePoset y,
                                      const std::vector<std::pair<std::string, std::string>>& t_pairs,
                                      const TargetSpec& f) {
    return from_map(GroundMap::validate(std::move(x), std::move(y), t_pairs), f);
}

EquationProblem EquationProblem::from_map(GroundMap t, const TargetSpec& f) {
    const FinitePoset& y = t.codomain();
    Cut target;
    if (const auto* label = std::get_if<std::string>(&f.value)) {
        target = cut_closure(y, y.principal_down(*label));
    } else {
        const auto& labels = std::get<std::vector<std::string>>(f.value);
        target = Cut::checked(y, y.subset_of(labels));
    }
    return EquationProblem(std::move(t), std::move(target));
}

QuotientSpace quotient_by_kernel(const EquationProblem& problem) {
    const GroundMap& t = problem.t();
    const FinitePoset& x = problem.x();
    const FinitePoset& y = problem.y();

    // Group by image; order classes by their label-least member.
    std::map<std::size_t, std::vector<std::size_t>> by_image;
    for (std::size_t i = 0; i < x.size(); ++i) by_image[t.image_of(i)].push_back(i);

    std::vector<std::vector<std::size_t>> classes;
    classes.reserve(by_image.size());
    for (auto& [_, members] : by_image) {
        std::sort(members.begin(), members.end(),
                  [&](std::size_t a, std::size_t b) { return x.label(a) < x.label(b); });
        classes.push_back(std::move(members));
    }
    std::sort(classes.begin(), classes.end(),
              [&](const auto& a, const auto& b) { return x.label(a[0]) < x.label(b[0]); });

    std::vector<std::size_t> class_of(x.size());
    std::vector<std::string> rep_labels;
    std::vector<std::size_t> class_images;
    rep_labels.reserve(classes.size());
    class_images.reserve(classes.size());
    for (std::size_t c = 0; c < classes.size(); ++c) {
        for (std::size_t member : classes[c]) {
            class_of[member] = c;
            if (t.image_of(member) != t.image_of(classes[c][0])) {
                throw InternalError("class members map to different images");
            }
        }
        rep_labels.push_back(x.label(classes[c][0]));
        class_images.push_back(t.image_of(classes[c][0]));
    }

    // Pull the codomain order back onto the classes; injectivity of the
    // class map makes antisymmetry automatic, but the axioms are validated
    // anyway.
    const std::size_t k = classes.size();
    std::vector<Bitset> ups(k, Bitset(k));
    for (std::size_t a = 0; a < k; ++a) {
        for (std::size_t b = 0; b < k; ++b) {
            if (y.leq(class_images[a], class_images[b])) ups[a].set(b);
        }
    }
    FinitePoset class_poset = FinitePoset::from_up_sets(rep_labels, std::move(ups));
    GroundMap injection = GroundMap::from_images(class_poset, y, class_images);
    if (!injection.is_injective() || !is_oie(injection)) {
        throw InternalError("induced class injection is not an order isomorphic embedding");
    }

    return QuotientSpace(x, std::move(classes), std::move(class_of), std::move(class_poset),
                         std::move(injection));
}

const std::string& QuotientSpace::representative(std::size_t class_index) const {
    return class_poset_.label(class_index);
}

std::vector<std::string> QuotientSpace::member_labels(std::size_t class_index) const {
    std::vector<std::string> out;
    out.reserve(classes_[class_index].size());
    for (std::size_t member : classes_[class_index]) out.push_back(ground_.label(member));
    return out;
}

FinitePoset generalized_pullback_order(const GroundMap& t_lambda) {
    const FinitePoset& z = t_lambda.domain();
    const FinitePoset& y = t_lambda.codomain();
    const std::size_t n = z.size();
    std::vector<Bitset> ups(n, Bitset(n));
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            std::size_t ia = t_lambda.image_of(a);
            std::size_t ib = t_lambda.image_of(b);
            if (a == b || (ia != ib && y.leq(ia, ib))) ups[a].set(b);
        }
    }
    return FinitePoset::from_up_sets(z.labels(), std::move(ups));
}

FactoredProblem factor_problem(const QuotientSpace& quotient,
                               const std::vector<std::string>& z_labels,
                               const std::vector<std::pair<std::string, std::string>>& lambda_pairs) {
    FinitePoset z_set = FinitePoset::discrete(z_labels);
    GroundMap lambda = GroundMap::validate(std::move(z_set), quotient.class_poset(), lambda_pairs);
    if (!lambda.is_surjective()) {
        throw NotSurjectiveError("lambda does not reach every class");
    }

    GroundMap t_lambda = compose(quotient.induced_injection(), lambda);
    FinitePoset z_ordered = generalized_pullback_order(t_lambda);

    // Rebase both maps on the ordered copy of Z so monotonicity is visible.
    GroundMap lambda_ordered =
        GroundMap::from_images(z_ordered, quotient.class_poset(), lambda.images());
    GroundMap t_lambda_ordered =
        GroundMap::from_images(z_ordered, quotient.induced_injection().codomain(),
                               t_lambda.images());

    if (!is_oie(quotient.induced_injection())) {
        throw InternalError("class injection lost the embedding property");
    }
    if (!is_increasing(t_lambda_ordered)) {
        throw InternalError("composite map is not increasing for the strict-image order");
    }
    if (!is_increasing(lambda_ordered)) {
        throw InternalError("lambda is not increasing for the strict-image order");
    }

    return FactoredProblem{std::move(z_ordered), std::move(lambda_ordered),
                           std::move(t_lambda_ordered)};
}

}  // namespace ordcomplete
