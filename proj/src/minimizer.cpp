#include "ptdfa/minimizer.hpp"

#include <bit>
#include <cassert>
#include <chrono>
#include <optional>
#include <stdexcept>

#include "ptdfa/adjacency.hpp"
#include "ptdfa/preprocess.hpp"
#include "ptdfa/simple_set.hpp"
#include "ptdfa/splitter_init.hpp"

namespace ptdfa {

namespace {

std::uint64_t floor_lg(std::uint32_t n) {
    return n <= 1 ? 0 : static_cast<std::uint64_t>(std::bit_width(n) - 1);
}

/*
 * Block refinement over two refinable partitions:
 *   blocks     - states, one set per block
 *   splitters  - transitions, one set per nonempty splitter (B, a), i.e. the
 *                a-labelled transitions whose head lies in block B
 *   unready    - splitters not yet processed
 *
 * A splitter index outlives the split of its block: the remainder keeps it
 * (and with it membership in `unready`), the marked part gets a fresh index
 * that always enters `unready`.
 */
template <class Worklist, bool Counting>
class Refiner {
public:
    Refiner(const PtDfa& dfa, const MinimizeOptions& options, MinimizeStats& stats)
        : dfa_(dfa),
          tails_(dfa.tails()),
          options_(options),
          stats_(stats),
          blocks_(dfa.num_states()),
          splitters_(init_trp_grouping(dfa.labels(), dfa.alphabet_size())),
          in_trs_(dfa.heads(), dfa.num_states()),
          unready_(dfa.num_transitions()),
          touched_blocks_(dfa.num_states()),
          touched_spls_(dfa.num_transitions()) {}

    void run() {
        const std::uint32_t initial_splitters = splitters_.sets();
        for (std::uint32_t p = 0; p < initial_splitters; ++p) {
            unready_.add(p);
        }
        assert(splitters_.sets() == initial_splitters);

        for (const State q : dfa_.finals()) {
            blocks_.mark(q);
        }
        split_block(0);

        while (!unready_.empty()) {
            assert(touched_blocks_.empty());
            if (options_.on_iteration) {
                options_.on_iteration(view());
            }
            const std::uint32_t p = unready_.remove();
            for (const std::uint32_t t : splitters_.elements(p)) {
                const State q = tails_[t];
                const std::uint32_t b = blocks_.set_of(q);
                if (blocks_.no_marks(b)) {
                    touched_blocks_.add(b);
                }
                blocks_.mark(q);
                if constexpr (Counting) {
                    ++stats_.scan_touches;
                }
            }
            while (!touched_blocks_.empty()) {
                split_block(touched_blocks_.remove());
            }
        }
        if (options_.on_final_partition) {
            options_.on_final_partition(view());
        }
    }

    RefinablePartition take_blocks() && { return std::move(blocks_); }

private:
    void split_block(std::uint32_t b) {
        assert(touched_spls_.empty());
        const auto fresh = blocks_.split(b);
        if (!fresh) {
            return;
        }
        if constexpr (Counting) {
            ++stats_.block_splits;
        }
        // Strict comparison: on a tie the fresh (marked) half is scanned.
        std::uint32_t smaller = *fresh;
        if (blocks_.size(b) < blocks_.size(smaller)) {
            smaller = b;
        }
        for (const State q : blocks_.elements(smaller)) {
            for (const std::uint32_t t : in_trs_.of(q)) {
                const std::uint32_t p = splitters_.set_of(t);
                if (splitters_.no_marks(p)) {
                    touched_spls_.add(p);
                }
                splitters_.mark(t);
                if constexpr (Counting) {
                    ++stats_.smaller_half_touches;
                }
            }
        }
        while (!touched_spls_.empty()) {
            const std::uint32_t p = touched_spls_.remove();
            if (const auto fresh_splitter = splitters_.split(p)) {
                unready_.add(*fresh_splitter);
                if constexpr (Counting) {
                    ++stats_.splitter_splits;
                }
            }
        }
    }

    RefinementView view() const { return RefinementView{dfa_, blocks_, splitters_, unready_.snapshot()}; }

    const PtDfa& dfa_;
    std::span<const State> tails_;
    const MinimizeOptions& options_;
    MinimizeStats& stats_;

    RefinablePartition blocks_;
    RefinablePartition splitters_;
    Adjacency in_trs_;
    Worklist unready_;
    SimpleSet touched_blocks_;
    SimpleSet touched_spls_;
};

// One state per block; transitions copied from the first state of each block.
PtDfa quotient(const PtDfa& dfa, const RefinablePartition& blocks) {
    const std::uint32_t k = blocks.sets();
    std::vector<State> tails;
    std::vector<Label> labels;
    std::vector<State> heads;
    for (std::uint32_t t = 0; t < dfa.num_transitions(); ++t) {
        const State q = dfa.tails()[t];
        const std::uint32_t b = blocks.set_of(q);
        if (blocks.first(b) == q) {
            tails.push_back(b);
            labels.push_back(dfa.labels()[t]);
            heads.push_back(blocks.set_of(dfa.heads()[t]));
        }
    }
    const std::vector<bool> is_final = dfa.final_mask();
    std::vector<State> finals;
    for (std::uint32_t b = 0; b < k; ++b) {
        if (is_final[blocks.first(b)]) {
            finals.push_back(b);
        }
    }
    const PtDfa merged = PtDfa::from_trusted(k, dfa.alphabet_size(), std::move(tails), std::move(labels),
                                             std::move(heads), blocks.set_of(dfa.initial()), std::move(finals));
    return canonicalize(merged);
}

template <class Worklist, bool Counting>
PtDfa refine_and_merge(const PtDfa& dfa, const MinimizeOptions& options, MinimizeStats& stats) {
    std::optional<Refiner<Worklist, Counting>> refiner;
    refiner.emplace(dfa, options, stats);
    refiner->run();
    // Release the splitter structures before the quotient allocates.
    const RefinablePartition blocks = std::move(*refiner).take_blocks();
    refiner.reset();
    return quotient(dfa, blocks);
}

PtDfa minimize_relevant(const PtDfa& dfa, const MinimizeOptions& options, MinimizeStats& stats) {
    if (dfa.num_states() == 1) {
        // A single relevant state is final and already minimal.
        return sorted(dfa);
    }
    const bool fifo = options.order == WorklistOrder::fifo;
    if (options.collect_stats) {
        return fifo ? refine_and_merge<FifoSimpleSet, true>(dfa, options, stats)
                    : refine_and_merge<SimpleSet, true>(dfa, options, stats);
    }
    return fifo ? refine_and_merge<FifoSimpleSet, false>(dfa, options, stats)
                : refine_and_merge<SimpleSet, false>(dfa, options, stats);
}

} // namespace

MinimizeResult minimize(const PtDfa& dfa, const MinimizeOptions& options) {
    const auto start = std::chrono::steady_clock::now();
    MinimizeStats stats;
    stats.states_in = dfa.num_states();
    stats.transitions_in = dfa.num_transitions();
    stats.alphabet = dfa.alphabet_size();

    std::optional<PtDfa> result;
    {
        const std::vector<bool> relevant = relevant_states(dfa);
        std::uint32_t kept = 0;
        for (const bool r : relevant) {
            kept += r ? 1 : 0;
        }
        std::optional<PtDfa> trimmed;
        if (kept != dfa.num_states()) {
            trimmed = restrict(dfa, relevant);
        }
        const PtDfa& work = trimmed ? *trimmed : dfa;
        stats.states_work = work.num_states();
        stats.transitions_work = work.num_transitions();
        if (work.finals().empty()) {
            result = empty_dfa(dfa.alphabet_size());
        } else {
            result = minimize_relevant(work, options, stats);
        }
    }

    stats.states_out = result->num_states();
    stats.transitions_out = result->num_transitions();
    stats.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return MinimizeResult{std::move(*result), stats};
}

std::uint64_t scan_touch_bound(std::uint32_t states, std::uint32_t transitions) {
    return static_cast<std::uint64_t>(transitions) * (floor_lg(states) + 1);
}

std::uint64_t smaller_half_touch_bound(std::uint32_t states, std::uint32_t transitions) {
    return static_cast<std::uint64_t>(transitions) * floor_lg(states) + transitions;
}

} // namespace ptdfa
