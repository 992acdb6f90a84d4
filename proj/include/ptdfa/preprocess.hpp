#pragma once

#include <stdexcept>
#include <vector>

#include "ptdfa/automaton.hpp"

namespace ptdfa {

class InitialNotRetained : public std::invalid_argument {
public:
    InitialNotRetained() : std::invalid_argument("the retained state set must contain the initial state") {}
};

/// Mask of relevant states: the initial state, plus every state that is both
/// reachable from it and able to reach a final state. O(n + m).
std::vector<bool> relevant_states(const PtDfa& dfa);

/// Keeps the states in `keep` (renumbered densely in ascending original order)
/// and the transitions between them.
PtDfa restrict(const PtDfa& dfa, const std::vector<bool>& keep);

/// One non-final initial state and no transitions.
PtDfa empty_dfa(std::uint32_t alphabet);

} // namespace ptdfa
