#include "ptdfa/preprocess.hpp"

#include "ptdfa/adjacency.hpp"

namespace ptdfa {

namespace {

// Marks everything reachable from the seeds in `seen`, walking transitions
// from `from` endpoints to `to` endpoints.
void sweep(const Adjacency& edges, std::span<const State> to, std::vector<State> stack, std::vector<bool>& seen) {
    while (!stack.empty()) {
        const State q = stack.back();
        stack.pop_back();
        for (const std::uint32_t t : edges.of(q)) {
            const State r = to[t];
            if (!seen[r]) {
                seen[r] = true;
                stack.push_back(r);
            }
        }
    }
}

} // namespace

std::vector<bool> relevant_states(const PtDfa& dfa) {
    const std::uint32_t n = dfa.num_states();

    std::vector<bool> forward(n, false);
    {
        const Adjacency out(dfa.tails(), n);
        forward[dfa.initial()] = true;
        sweep(out, dfa.heads(), {dfa.initial()}, forward);
    }

    std::vector<bool> backward(n, false);
    {
        const Adjacency in(dfa.heads(), n);
        std::vector<State> seeds(dfa.finals().begin(), dfa.finals().end());
        for (const State q : seeds) {
            backward[q] = true;
        }
        sweep(in, dfa.tails(), std::move(seeds), backward);
    }

    std::vector<bool> relevant(n, false);
    for (State q = 0; q < n; ++q) {
        relevant[q] = forward[q] && backward[q];
    }
    relevant[dfa.initial()] = true;
    return relevant;
}

PtDfa restrict(const PtDfa& dfa, const std::vector<bool>& keep) {
    const std::uint32_t n = dfa.num_states();
    if (keep.size() != n) {
        throw std::invalid_argument("state mask size does not match the automaton");
    }
    if (!keep[dfa.initial()]) {
        throw InitialNotRetained();
    }
    constexpr State dropped = ~State{0};
    std::vector<State> renumber(n, dropped);
    State kept = 0;
    for (State q = 0; q < n; ++q) {
        if (keep[q]) {
            renumber[q] = kept++;
        }
    }

    std::vector<State> tails;
    std::vector<Label> labels;
    std::vector<State> heads;
    for (std::uint32_t t = 0; t < dfa.num_transitions(); ++t) {
        const State from = renumber[dfa.tails()[t]];
        const State to = renumber[dfa.heads()[t]];
        if (from != dropped && to != dropped) {
            tails.push_back(from);
            labels.push_back(dfa.labels()[t]);
            heads.push_back(to);
        }
    }
    std::vector<State> finals;
    for (const State q : dfa.finals()) {
        if (renumber[q] != dropped) {
            finals.push_back(renumber[q]);
        }
    }
    return PtDfa::from_trusted(kept, dfa.alphabet_size(), std::move(tails), std::move(labels), std::move(heads),
                               renumber[dfa.initial()], std::move(finals));
}

PtDfa empty_dfa(std::uint32_t alphabet) {
    return PtDfa::from_trusted(1, alphabet, {}, {}, {}, 0, {});
}

} // namespace ptdfa
