#include "support/random_dfa.hpp"

#include <algorithm>
#include <numeric>

namespace ptdfa::testing {

PtDfa from_table(std::uint32_t states, std::uint32_t alpha, const std::vector<int>& table, State initial,
                 const std::vector<bool>& finals) {
    RawDfa raw;
    raw.states = states;
    raw.alphabet = alpha;
    raw.initial = initial;
    for (State q = 0; q < states; ++q) {
        for (Label a = 0; a < alpha; ++a) {
            const int h = table[q * alpha + a];
            if (h >= 0) {
                raw.transitions.push_back({q, a, static_cast<State>(h)});
            }
        }
        if (finals[q]) {
            raw.finals.push_back(q);
        }
    }
    return validate(std::move(raw));
}

PtDfa random_dfa(std::mt19937_64& rng, std::uint32_t states, std::uint32_t alpha, double density,
                 std::uint32_t finals) {
    std::bernoulli_distribution defined(density);
    std::uniform_int_distribution<State> any_state(0, states - 1);
    RawDfa raw;
    raw.states = states;
    raw.alphabet = alpha;
    raw.initial = any_state(rng);
    for (State q = 0; q < states; ++q) {
        for (Label a = 0; a < alpha; ++a) {
            if (defined(rng)) {
                raw.transitions.push_back({q, a, any_state(rng)});
            }
        }
    }
    std::shuffle(raw.transitions.begin(), raw.transitions.end(), rng);
    std::vector<State> all(states);
    std::iota(all.begin(), all.end(), 0);
    std::shuffle(all.begin(), all.end(), rng);
    raw.finals.assign(all.begin(), all.begin() + std::min(finals, states));
    return validate(std::move(raw));
}

PtDfa permuted(const PtDfa& dfa, const std::vector<State>& perm, std::mt19937_64& rng) {
    RawDfa raw = dfa.to_raw();
    for (Transition& t : raw.transitions) {
        t.tail = perm[t.tail];
        t.head = perm[t.head];
    }
    std::shuffle(raw.transitions.begin(), raw.transitions.end(), rng);
    raw.initial = perm[raw.initial];
    for (State& f : raw.finals) {
        f = perm[f];
    }
    return validate(std::move(raw));
}

std::vector<State> random_permutation(std::uint32_t n, std::mt19937_64& rng) {
    std::vector<State> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    return perm;
}

bool run_naive(const PtDfa& dfa, State from, const std::vector<Label>& word) {
    State q = from;
    for (const Label a : word) {
        bool moved = false;
        for (std::uint32_t t = 0; t < dfa.num_transitions(); ++t) {
            if (dfa.tails()[t] == q && dfa.labels()[t] == a) {
                q = dfa.heads()[t];
                moved = true;
                break;
            }
        }
        if (!moved) {
            return false;
        }
    }
    const auto f = dfa.finals();
    return std::find(f.begin(), f.end(), q) != f.end();
}

std::vector<std::vector<Label>> all_words(std::uint32_t alpha, std::uint32_t max_len) {
    std::vector<std::vector<Label>> words{{}};
    std::size_t begin = 0;
    for (std::uint32_t len = 1; len <= max_len; ++len) {
        const std::size_t end = words.size();
        for (std::size_t i = begin; i < end; ++i) {
            for (Label a = 0; a < alpha; ++a) {
                std::vector<Label> w = words[i];
                w.push_back(a);
                words.push_back(std::move(w));
            }
        }
        begin = end;
    }
    return words;
}

} // namespace ptdfa::testing
