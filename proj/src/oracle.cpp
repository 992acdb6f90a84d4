#include "ptdfa/oracle.hpp"

#include <algorithm>
#include <string>

namespace ptdfa {

namespace {

// Total transition function over n + 1 states; state n is the sink.
struct Completed {
    std::uint32_t states;
    std::uint32_t alphabet;
    std::vector<State> next;
    std::vector<bool> accepting;

    explicit Completed(const PtDfa& dfa)
        : states(dfa.num_states() + 1),
          alphabet(dfa.alphabet_size()),
          next(static_cast<std::size_t>(states) * alphabet, dfa.num_states()),
          accepting(states, false) {
        for (std::uint32_t t = 0; t < dfa.num_transitions(); ++t) {
            next[static_cast<std::size_t>(dfa.tails()[t]) * alphabet + dfa.labels()[t]] = dfa.heads()[t];
        }
        for (const State q : dfa.finals()) {
            accepting[q] = true;
        }
    }

    State step(State q, Label a) const { return next[static_cast<std::size_t>(q) * alphabet + a]; }
    State sink() const { return states - 1; }
};

// distinct[p * N + q]: some word separates p and q.
std::vector<bool> fill_table(const Completed& c) {
    const std::size_t n = c.states;
    std::vector<bool> distinct(n * n, false);
    for (State p = 0; p < n; ++p) {
        for (State q = 0; q < n; ++q) {
            distinct[p * n + q] = c.accepting[p] != c.accepting[q];
        }
    }
    bool changed = true;
    while (changed) {
        changed = false;
        for (State p = 0; p < n; ++p) {
            for (State q = p + 1; q < n; ++q) {
                if (distinct[p * n + q]) {
                    continue;
                }
                for (Label a = 0; a < c.alphabet; ++a) {
                    if (distinct[c.step(p, a) * n + c.step(q, a)]) {
                        distinct[p * n + q] = true;
                        distinct[q * n + p] = true;
                        changed = true;
                        break;
                    }
                }
            }
        }
    }
    return distinct;
}

} // namespace

AlphabetMismatch::AlphabetMismatch(std::uint32_t left, std::uint32_t right)
    : std::invalid_argument("alphabet sizes differ: " + std::to_string(left) + " vs " + std::to_string(right)) {}

std::vector<std::vector<bool>> language_equivalence_table(const PtDfa& dfa) {
    const Completed c(dfa);
    const std::vector<bool> distinct = fill_table(c);
    const std::uint32_t n = dfa.num_states();
    std::vector<std::vector<bool>> equal(n, std::vector<bool>(n, false));
    for (State p = 0; p < n; ++p) {
        for (State q = 0; q < n; ++q) {
            equal[p][q] = !distinct[static_cast<std::size_t>(p) * c.states + q];
        }
    }
    return equal;
}

PtDfa oracle_minimize(const PtDfa& dfa) {
    const Completed c(dfa);
    const std::vector<bool> distinct = fill_table(c);
    const std::size_t n = c.states;

    constexpr std::uint32_t none = ~std::uint32_t{0};
    std::vector<std::uint32_t> cls(n, none);
    std::vector<State> representative;
    for (State p = 0; p < n; ++p) {
        if (cls[p] != none) {
            continue;
        }
        const auto id = static_cast<std::uint32_t>(representative.size());
        representative.push_back(p);
        for (State q = p; q < n; ++q) {
            if (!distinct[p * n + q]) {
                cls[q] = id;
            }
        }
    }

    const std::uint32_t dead = cls[c.sink()];
    const std::uint32_t start = cls[dfa.initial()];
    if (start == dead) {
        return PtDfa::from_trusted(1, dfa.alphabet_size(), {}, {}, {}, 0, {});
    }

    // Keep live classes reachable from the start class; number them in visit order.
    std::vector<std::uint32_t> renumber(representative.size(), none);
    std::vector<std::uint32_t> order{start};
    renumber[start] = 0;
    for (std::size_t i = 0; i < order.size(); ++i) {
        const State rep = representative[order[i]];
        for (Label a = 0; a < c.alphabet; ++a) {
            const std::uint32_t target = cls[c.step(rep, a)];
            if (target != dead && renumber[target] == none) {
                renumber[target] = static_cast<std::uint32_t>(order.size());
                order.push_back(target);
            }
        }
    }

    std::vector<State> tails;
    std::vector<Label> labels;
    std::vector<State> heads;
    std::vector<State> finals;
    for (std::uint32_t i = 0; i < order.size(); ++i) {
        const State rep = representative[order[i]];
        if (c.accepting[rep]) {
            finals.push_back(i);
        }
        for (Label a = 0; a < c.alphabet; ++a) {
            const std::uint32_t target = cls[c.step(rep, a)];
            if (target != dead) {
                tails.push_back(i);
                labels.push_back(a);
                heads.push_back(renumber[target]);
            }
        }
    }
    const PtDfa merged =
        PtDfa::from_trusted(static_cast<std::uint32_t>(order.size()), dfa.alphabet_size(), std::move(tails),
                            std::move(labels), std::move(heads), 0, std::move(finals));
    return canonicalize(merged);
}

bool language_equal(const PtDfa& a, const PtDfa& b) {
    if (a.alphabet_size() != b.alphabet_size()) {
        throw AlphabetMismatch(a.alphabet_size(), b.alphabet_size());
    }
    const Completed ca(a);
    const Completed cb(b);
    const std::size_t width = cb.states;
    std::vector<bool> seen(static_cast<std::size_t>(ca.states) * width, false);
    std::vector<std::pair<State, State>> stack{{a.initial(), b.initial()}};
    seen[a.initial() * width + b.initial()] = true;
    while (!stack.empty()) {
        const auto [p, q] = stack.back();
        stack.pop_back();
        if (ca.accepting[p] != cb.accepting[q]) {
            return false;
        }
        for (Label x = 0; x < ca.alphabet; ++x) {
            const State p2 = ca.step(p, x);
            const State q2 = cb.step(q, x);
            if (!seen[p2 * width + q2]) {
                seen[p2 * width + q2] = true;
                stack.emplace_back(p2, q2);
            }
        }
    }
    return true;
}

} // namespace ptdfa
