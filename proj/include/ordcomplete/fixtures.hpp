#pragma once

#include <cstdint>
#include <optional>
#include <random>

#include "ordcomplete/pullback.hpp"

namespace ordcomplete::fixtures {

/// Uniform draw from [0, bound); a seed reproduces the same stream on every
/// platform and standard library.
std::uint64_t draw(std::mt19937_64& rng, std::uint64_t bound);

/// Labels "a", "b", ... for small sizes; zero-padded "e007" beyond 26.
std::vector<std::string> letter_labels(std::size_t n);

FinitePoset chain(std::size_t n);
FinitePoset antichain(std::size_t n);
/// 0 < {a,b} < 1.
FinitePoset diamond();

/// Random order of the requested size: random topological order, each
/// admissible pair related with probability density_percent/100, closed.
FinitePoset random_poset(std::mt19937_64& rng, std::size_t size, unsigned density_percent);

/// Size uniform in [1, max_size], density uniform in [0, 100].
FinitePoset random_poset_up_to(std::mt19937_64& rng, std::size_t max_size);

Subset random_subset(std::mt19937_64& rng, const FinitePoset& p);

GroundMap random_map(std::mt19937_64& rng, const FinitePoset& domain,
                     const FinitePoset& codomain);

/// Rejection-samples an increasing map; falls back to a constant map, which
/// is always increasing, so this never fails on a nonempty codomain.
GroundMap random_increasing_map(std::mt19937_64& rng, const FinitePoset& domain,
                                const FinitePoset& codomain, std::size_t attempts = 64);

/// Inclusion of a random nonempty induced subposet; order isomorphic
/// embedding by construction.
GroundMap random_induced_inclusion(std::mt19937_64& rng, const FinitePoset& codomain);

/// A random equation: an unordered ground set "u1..un" of size at most
/// max_x, a random codomain of size at most max_y, a random total map and a
/// random target cut. The same seed always produces the same problems.
EquationProblem random_problem(std::mt19937_64& rng, std::size_t max_x, std::size_t max_y);

}  // namespace ordcomplete::fixtures
