#include "ordcomplete/fixtures.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace ordcomplete::fixtures {

std::uint64_t draw(std::mt19937_64& rng, std::uint64_t bound) {
    if (bound == 0) throw InvalidInputError("draw from an empty range");
    const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
    const std::uint64_t limit = max - max % bound;
    for (;;) {
        std::uint64_t v = rng();
        if (v < limit) return v % bound;
    }
}

std::vector<std::string> letter_labels(std::size_t n) {
    std::vector<std::string> out;
    out.reserve(n);
    if (n <= 26) {
        for (std::size_t i = 0; i < n; ++i) out.push_back(std::string(1, char('a' + i)));
    } else {
        for (std::size_t i = 0; i < n; ++i) {
            std::string num = std::to_string(i);
            out.push_back("e" + std::string(4 - std::min<std::size_t>(4, num.size()), '0') + num);
        }
    }
    return out;
}

FinitePoset chain(std::size_t n) {
    auto labels = letter_labels(n);
    std::vector<std::pair<std::string, std::string>> pairs;
    for (std::size_t i = 0; i + 1 < n; ++i) pairs.emplace_back(labels[i], labels[i + 1]);
    return FinitePoset::validate(std::move(labels), pairs);
}

FinitePoset antichain(std::size_t n) {
    return FinitePoset::discrete(letter_labels(n));
}

FinitePoset diamond() {
    return FinitePoset::validate({"0", "a", "b", "1"},
                                 {{"0", "a"}, {"0", "b"}, {"a", "1"}, {"b", "1"}});
}

FinitePoset random_poset(std::mt19937_64& rng, std::size_t size, unsigned density_percent) {
    auto labels = letter_labels(size);
    std::vector<std::size_t> topo(size);
    std::iota(topo.begin(), topo.end(), std::size_t{0});
    for (std::size_t i = size; i > 1; --i) {
        std::swap(topo[i - 1], topo[draw(rng, i)]);
    }
    std::vector<std::pair<std::string, std::string>> pairs;
    for (std::size_t i = 0; i < size; ++i) {
        for (std::size_t j = i + 1; j < size; ++j) {
            if (draw(rng, 100) < density_percent) {
                pairs.emplace_back(labels[topo[i]], labels[topo[j]]);
            }
        }
    }
    return FinitePoset::validate(std::move(labels), pairs);
}

FinitePoset random_poset_up_to(std::mt19937_64& rng, std::size_t max_size) {
    std::size_t size = 1 + draw(rng, max_size);
    unsigned density = static_cast<unsigned>(draw(rng, 101));
    return random_poset(rng, size, density);
}

Subset random_subset(std::mt19937_64& rng, const FinitePoset& p) {
    Bitset bits(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (draw(rng, 2) == 1) bits.set(i);
    }
    return p.subset(std::move(bits));
}

GroundMap random_map(std::mt19937_64& rng, const FinitePoset& domain,
                     const FinitePoset& codomain) {
    std::vector<std::size_t> images;
    images.reserve(domain.size());
    for (std::size_t i = 0; i < domain.size(); ++i) {
        images.push_back(draw(rng, codomain.size()));
    }
    return GroundMap::from_images(domain, codomain, std::move(images));
}

GroundMap random_increasing_map(std::mt19937_64& rng, const FinitePoset& domain,
                                const FinitePoset& codomain, std::size_t attempts) {
    for (std::size_t k = 0; k < attempts; ++k) {
        GroundMap candidate = random_map(rng, domain, codomain);
        if (is_increasing(candidate)) return candidate;
    }
    std::vector<std::size_t> images(domain.size(), draw(rng, codomain.size()));
    return GroundMap::from_images(domain, codomain, std::move(images));
}

EquationProblem random_problem(std::mt19937_64& rng, std::size_t max_x, std::size_t max_y) {
    std::size_t nx = 1 + draw(rng, max_x);
    FinitePoset y = random_poset_up_to(rng, max_y);

    std::vector<std::string> x_labels;
    x_labels.reserve(nx);
    for (std::size_t i = 1; i <= nx; ++i) x_labels.push_back("u" + std::to_string(i));
    FinitePoset x = FinitePoset::discrete(x_labels);

    std::vector<std::pair<std::string, std::string>> t_pairs;
    t_pairs.reserve(nx);
    for (const auto& l : x_labels) {
        t_pairs.emplace_back(l, y.label(draw(rng, y.size())));
    }

    TargetSpec target = TargetSpec::element(y.label(draw(rng, y.size())));
    if (draw(rng, 2) == 1) {
        Cut c = cut_closure(y, random_subset(rng, y));
        target = TargetSpec::cut(y.labels_of(c.bits()));
    }
    return EquationProblem::make(std::move(x), std::move(y), t_pairs, target);
}

GroundMap random_induced_inclusion(std::mt19937_64& rng, const FinitePoset& codomain) {
    std::vector<std::size_t> picked;
    for (std::size_t i = 0; i < codomain.size(); ++i) {
        if (draw(rng, 2) == 1) picked.push_back(i);
    }
    if (picked.empty()) picked.push_back(draw(rng, codomain.size()));

    std::vector<std::string> labels;
    labels.reserve(picked.size());
    for (std::size_t i : picked) labels.push_back(codomain.label(i));
    std::vector<std::pair<std::string, std::string>> pairs;
    for (std::size_t a : picked) {
        for (std::size_t b : picked) {
            if (a != b && codomain.leq(a, b)) {
                pairs.emplace_back(codomain.label(a), codomain.label(b));
            }
        }
    }
    FinitePoset sub = FinitePoset::validate(labels, pairs);
    std::vector<std::size_t> images = picked;
    return GroundMap::from_images(std::move(sub), codomain, std::move(images));
}

}  // namespace ordcomplete::fixtures
