#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "ptdfa/automaton.hpp"
#include "ptdfa/refinable_partition.hpp"

namespace ptdfa {

/// Counters filled in by the minimizers. Fields an algorithm does not track stay 0.
struct MinimizeStats {
    std::uint32_t states_in = 0;
    std::uint32_t transitions_in = 0;
    std::uint32_t alphabet = 0;
    /// Size of the automaton the refinement actually ran on (after removing
    /// irrelevant states, or after sink completion for the baseline).
    std::uint32_t states_work = 0;
    std::uint32_t transitions_work = 0;
    std::uint32_t states_out = 0;
    std::uint32_t transitions_out = 0;
    /// Successful block splits.
    std::uint64_t block_splits = 0;
    /// Successful splitter splits (new splitters created after initialization).
    std::uint64_t splitter_splits = 0;
    /// Transitions visited while scanning splitters in the main loop.
    std::uint64_t scan_touches = 0;
    /// Input transitions visited while scanning the smaller half of a split block.
    std::uint64_t smaller_half_touches = 0;
    double millis = 0.0;
};

enum class WorklistOrder { lifo, fifo };

/// Read-only view of the refinement state handed to debug hooks.
struct RefinementView {
    /// The automaton being refined: irrelevant states already removed.
    const PtDfa& dfa;
    const RefinablePartition& blocks;
    const RefinablePartition& splitters;
    /// Unprocessed splitter indices (indices into `splitters`).
    std::vector<std::uint32_t> unready;
};

struct MinimizeOptions {
    WorklistOrder order = WorklistOrder::lifo;
    bool collect_stats = true;
    /// Called at the head of every main-loop iteration. Slow; for tests.
    std::function<void(const RefinementView&)> on_iteration;
    /// Called once after refinement, before the quotient is built.
    std::function<void(const RefinementView&)> on_final_partition;
};

struct MinimizeResult {
    PtDfa dfa;
    MinimizeStats stats;
};

/// Minimal automaton for the language of `dfa`, in canonical numbering.
/// Runs in O(m lg n) time and O(n + m + alpha) memory.
MinimizeResult minimize(const PtDfa& dfa, const MinimizeOptions& options = {});

/// Bound on scan_touches: m * (floor(lg n) + 1).
std::uint64_t scan_touch_bound(std::uint32_t states, std::uint32_t transitions);

/// Bound on smaller_half_touches: m * floor(lg n) + m.
std::uint64_t smaller_half_touch_bound(std::uint32_t states, std::uint32_t transitions);

} // namespace ptdfa
