#include "ptdfa/hopcroft.hpp"

#include <chrono>
#include <new>
#include <optional>
#include <utility>
#include <vector>

namespace ptdfa {

namespace {

constexpr std::uint32_t none = ~std::uint32_t{0};

class Hopcroft {
public:
    Hopcroft(const PtDfa& dfa, MinimizeStats& stats)
        : dfa_(dfa),
          stats_(stats),
          n_(dfa.num_states() + 1),
          alpha_(dfa.alphabet_size()),
          cells_(static_cast<std::size_t>(n_) * alpha_) {
        build_tables();
        build_partition();
    }

    PtDfa run() {
        // Initial split F | rest. The split pushes the smaller side for every symbol.
        for (const State q : dfa_.finals()) {
            mark(q);
        }
        split_touched();

        while (!waiting_.empty()) {
            const auto [b, a] = waiting_.back();
            waiting_.pop_back();
            in_waiting_[static_cast<std::size_t>(b) * alpha_ + a] = false;

            const std::size_t base = static_cast<std::size_t>(a) * n_;
            const std::size_t key = static_cast<std::size_t>(b) * alpha_ + a;
            for (std::uint32_t i = sym_begin_[key]; i < sym_end_[key]; ++i) {
                const State target = sym_elems_[base + i];
                const std::size_t slot = base + target;
                for (std::uint32_t k = inv_offsets_[slot]; k < inv_offsets_[slot + 1]; ++k) {
                    mark(inv_items_[k]);
                    ++stats_.scan_touches;
                }
            }
            split_touched();
        }
        return quotient();
    }

private:
    void build_tables() {
        const State sink = n_ - 1;
        delta_.assign(cells_, sink);
        for (std::uint32_t t = 0; t < dfa_.num_transitions(); ++t) {
            delta_[static_cast<std::size_t>(dfa_.tails()[t]) * alpha_ + dfa_.labels()[t]] = dfa_.heads()[t];
        }
        // Predecessors keyed by (symbol, target).
        inv_offsets_.assign(cells_ + 1, 0);
        for (State q = 0; q < n_; ++q) {
            for (Label a = 0; a < alpha_; ++a) {
                ++inv_offsets_[static_cast<std::size_t>(a) * n_ + delta_[static_cast<std::size_t>(q) * alpha_ + a] + 1];
            }
        }
        for (std::size_t k = 0; k < cells_; ++k) {
            inv_offsets_[k + 1] += inv_offsets_[k];
        }
        inv_items_.resize(cells_);
        std::vector<std::uint32_t> fill(inv_offsets_.begin(), inv_offsets_.end() - 1);
        for (State q = 0; q < n_; ++q) {
            for (Label a = 0; a < alpha_; ++a) {
                inv_items_[fill[static_cast<std::size_t>(a) * n_ + delta_[static_cast<std::size_t>(q) * alpha_ + a]]++] = q;
            }
        }
    }

    bool has_input(Label a, State q) const {
        const std::size_t slot = static_cast<std::size_t>(a) * n_ + q;
        return inv_offsets_[slot + 1] > inv_offsets_[slot];
    }

    void build_partition() {
        elems_.resize(n_);
        loc_.resize(n_);
        block_.assign(n_, 0);
        begin_.assign(n_, 0);
        end_.assign(n_, 0);
        mid_.assign(n_, 0);
        for (State q = 0; q < n_; ++q) {
            elems_[q] = q;
            loc_[q] = q;
        }
        blocks_ = 1;
        end_[0] = n_;

        sym_elems_.resize(cells_);
        sym_loc_.assign(cells_, none);
        sym_begin_.assign(cells_, 0);
        sym_end_.assign(cells_, 0);
        in_waiting_.assign(cells_, false);
        for (Label a = 0; a < alpha_; ++a) {
            const std::size_t base = static_cast<std::size_t>(a) * n_;
            std::uint32_t count = 0;
            for (State q = 0; q < n_; ++q) {
                if (has_input(a, q)) {
                    sym_elems_[base + count] = q;
                    sym_loc_[base + q] = count;
                    ++count;
                }
            }
            sym_end_[a] = count;
        }
    }

    void mark(State q) {
        const std::uint32_t b = block_[q];
        if (mid_[b] == begin_[b]) {
            touched_.push_back(b);
        }
        const std::uint32_t at = loc_[q];
        const std::uint32_t m = mid_[b];
        if (at >= m) {
            const State other = elems_[m];
            elems_[at] = other;
            loc_[other] = at;
            elems_[m] = q;
            loc_[q] = m;
            mid_[b] = m + 1;
        }
    }

    void split_touched() {
        for (const std::uint32_t b : touched_) {
            split(b);
        }
        touched_.clear();
    }

    // Splits block c into marked and unmarked states. The smaller side gets
    // a fresh index and is queued for every symbol it has inputs on.
    void split(std::uint32_t c) {
        const std::uint32_t marked = mid_[c] - begin_[c];
        const std::uint32_t size = end_[c] - begin_[c];
        if (marked == 0 || marked == size) {
            mid_[c] = begin_[c];
            return;
        }
        const std::uint32_t d = blocks_++;
        ++stats_.block_splits;
        if (marked <= size - marked) {
            begin_[d] = begin_[c];
            end_[d] = mid_[c];
            begin_[c] = mid_[c];
        } else {
            begin_[d] = mid_[c];
            end_[d] = end_[c];
            end_[c] = mid_[c];
        }
        mid_[c] = begin_[c];
        mid_[d] = begin_[d];

        const std::size_t ckey = static_cast<std::size_t>(c) * alpha_;
        const std::size_t dkey = static_cast<std::size_t>(d) * alpha_;
        for (Label a = 0; a < alpha_; ++a) {
            sym_end_[dkey + a] = sym_end_[ckey + a];
        }
        for (std::uint32_t i = begin_[d]; i < end_[d]; ++i) {
            const State q = elems_[i];
            block_[q] = d;
            for (Label a = 0; a < alpha_; ++a) {
                const std::size_t base = static_cast<std::size_t>(a) * n_;
                const std::uint32_t at = sym_loc_[base + q];
                if (at == none) {
                    continue;
                }
                const std::uint32_t last = --sym_end_[ckey + a];
                const State other = sym_elems_[base + last];
                sym_elems_[base + at] = other;
                sym_loc_[base + other] = at;
                sym_elems_[base + last] = q;
                sym_loc_[base + q] = last;
            }
        }
        for (Label a = 0; a < alpha_; ++a) {
            sym_begin_[dkey + a] = sym_end_[ckey + a];
            if (sym_begin_[dkey + a] < sym_end_[dkey + a] && !in_waiting_[dkey + a]) {
                in_waiting_[dkey + a] = true;
                waiting_.emplace_back(d, a);
            }
        }
    }

    PtDfa quotient() const {
        const std::uint32_t dead = block_[n_ - 1];
        const std::uint32_t start = block_[dfa_.initial()];
        if (start == dead) {
            return PtDfa::from_trusted(1, alpha_, {}, {}, {}, 0, {});
        }
        const std::vector<bool> is_final = dfa_.final_mask();
        std::vector<std::uint32_t> renumber(blocks_, none);
        std::vector<std::uint32_t> order{start};
        renumber[start] = 0;
        std::vector<State> tails;
        std::vector<Label> labels;
        std::vector<State> heads;
        std::vector<State> finals;
        for (std::uint32_t i = 0; i < order.size(); ++i) {
            const State rep = elems_[begin_[order[i]]];
            if (rep < dfa_.num_states() && is_final[rep]) {
                finals.push_back(i);
            }
            for (Label a = 0; a < alpha_; ++a) {
                const std::uint32_t target = block_[delta_[static_cast<std::size_t>(rep) * alpha_ + a]];
                if (target == dead) {
                    continue;
                }
                if (renumber[target] == none) {
                    renumber[target] = static_cast<std::uint32_t>(order.size());
                    order.push_back(target);
                }
                tails.push_back(i);
                labels.push_back(a);
                heads.push_back(renumber[target]);
            }
        }
        // Breadth-first with ascending labels is already the canonical numbering.
        return PtDfa::from_trusted(static_cast<std::uint32_t>(order.size()), alpha_, std::move(tails),
                                   std::move(labels), std::move(heads), 0, std::move(finals));
    }

    const PtDfa& dfa_;
    MinimizeStats& stats_;
    std::uint32_t n_;
    std::uint32_t alpha_;
    std::size_t cells_;

    std::vector<State> delta_;
    std::vector<std::uint32_t> inv_offsets_;
    std::vector<State> inv_items_;

    std::vector<State> elems_;
    std::vector<std::uint32_t> loc_;
    std::vector<std::uint32_t> block_;
    std::vector<std::uint32_t> begin_;
    std::vector<std::uint32_t> end_;
    std::vector<std::uint32_t> mid_;
    std::uint32_t blocks_ = 0;
    std::vector<std::uint32_t> touched_;

    // Per (symbol, block): states of the block with an incoming transition on
    // the symbol, kept contiguous in sym_elems_.
    std::vector<State> sym_elems_;
    std::vector<std::uint32_t> sym_loc_;
    std::vector<std::uint32_t> sym_begin_;
    std::vector<std::uint32_t> sym_end_;

    std::vector<bool> in_waiting_;
    std::vector<std::pair<std::uint32_t, Label>> waiting_;
};

} // namespace

std::size_t hopcroft_table_bytes(std::uint32_t states, std::uint32_t alphabet) {
    const std::size_t cells = (static_cast<std::size_t>(states) + 1) * alphabet;
    // delta, inverse offsets and items, four per-symbol arrays, waiting flags
    return cells * 7 * sizeof(std::uint32_t) + cells / 8;
}

MinimizeResult hopcroft_minimize(const PtDfa& dfa, const HopcroftOptions& options) {
    const auto start = std::chrono::steady_clock::now();
    if (options.memory_limit_bytes != 0 &&
        hopcroft_table_bytes(dfa.num_states(), dfa.alphabet_size()) > options.memory_limit_bytes) {
        throw std::bad_alloc();
    }
    MinimizeStats stats;
    stats.states_in = dfa.num_states();
    stats.transitions_in = dfa.num_transitions();
    stats.alphabet = dfa.alphabet_size();
    stats.states_work = dfa.num_states() + 1;
    stats.transitions_work = (dfa.num_states() + 1) * dfa.alphabet_size();

    std::optional<PtDfa> result;
    {
        Hopcroft h(dfa, stats);
        result = h.run();
    }
    stats.states_out = result->num_states();
    stats.transitions_out = result->num_transitions();
    stats.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return MinimizeResult{std::move(*result), stats};
}

} // namespace ptdfa
