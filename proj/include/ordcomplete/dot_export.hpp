#pragma once

#include <string>

#include "ordcomplete/completion.hpp"

namespace ordcomplete {

/// Hasse diagram (transitive reduction) in DOT form, nodes ordered
/// label-lexicographically, edges drawn upward.
std::string poset_to_dot(const FinitePoset& p);

/// Hasse diagram of the cut lattice, nodes in the canonical cut order.
std::string completion_to_dot(const CompletionLattice& l);

}  // namespace ordcomplete
