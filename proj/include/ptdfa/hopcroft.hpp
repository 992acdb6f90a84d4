#pragma once

#include <cstddef>

#include "ptdfa/automaton.hpp"
#include "ptdfa/minimizer.hpp"

namespace ptdfa {

struct HopcroftOptions {
    /// Refuse (with std::bad_alloc) when the completed tables would need more
    /// than this many bytes. 0 means no limit.
    std::size_t memory_limit_bytes = 0;
};

/// Bytes the baseline allocates for its completed tables on an input with
/// this many states (the sink is added on top).
std::size_t hopcroft_table_bytes(std::uint32_t states, std::uint32_t alphabet);

/**
 * Baseline minimizer: completes the transition function with a sink state and
 * runs Hopcroft's algorithm, keeping for every block and symbol the states of
 * the block that have incoming transitions on that symbol. Needs
 * Theta(alpha * n) time per smaller-half round and Theta(alpha * n) memory.
 * The result is stripped of the sink class and unreachable classes and is
 * returned in canonical numbering.
 */
MinimizeResult hopcroft_minimize(const PtDfa& dfa, const HopcroftOptions& options = {});

} // namespace ptdfa
