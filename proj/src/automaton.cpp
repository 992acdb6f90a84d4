#include "ptdfa/automaton.hpp"

#include <algorithm>
#include <cassert>
#include <charconv>
#include <limits>
#include <sstream>

#include "ptdfa/adjacency.hpp"

namespace ptdfa {

namespace {

constexpr std::uint32_t unset = std::numeric_limits<std::uint32_t>::max();

std::string join_messages(const std::vector<Diagnostic>& diagnostics) {
    std::string out = "invalid automaton";
    for (const auto& d : diagnostics) {
        out += "\n  ";
        out += d.message;
    }
    return out;
}

std::string describe(std::size_t index, const Transition& t) {
    std::ostringstream out;
    out << "transition " << index << " (" << t.tail << ' ' << t.label << ' ' << t.head << ")";
    return out.str();
}

// Transition indices ordered by (tail, label). Two stable counting sorts.
std::vector<std::uint32_t> order_by_tail_label(const PtDfa& dfa, std::vector<std::uint32_t>& tail_offsets) {
    const std::uint32_t m = dfa.num_transitions();
    const auto tails = dfa.tails();
    const auto labels = dfa.labels();

    std::vector<std::uint32_t> by_label(m);
    {
        std::vector<std::uint32_t> count(static_cast<std::size_t>(dfa.alphabet_size()) + 1, 0);
        for (const Label a : labels) {
            ++count[a + 1];
        }
        for (std::size_t a = 1; a < count.size(); ++a) {
            count[a] += count[a - 1];
        }
        for (std::uint32_t t = 0; t < m; ++t) {
            by_label[count[labels[t]]++] = t;
        }
    }

    tail_offsets.assign(static_cast<std::size_t>(dfa.num_states()) + 1, 0);
    for (const State q : tails) {
        ++tail_offsets[q + 1];
    }
    for (std::size_t q = 1; q < tail_offsets.size(); ++q) {
        tail_offsets[q] += tail_offsets[q - 1];
    }
    std::vector<std::uint32_t> fill(tail_offsets.begin(), tail_offsets.end() - 1);
    std::vector<std::uint32_t> order(m);
    for (const std::uint32_t t : by_label) {
        order[fill[tails[t]]++] = t;
    }
    return order;
}

class LineReader {
public:
    explicit LineReader(std::string_view text) : text_(text) {}

    // Next line that is neither blank nor a comment.
    bool next(std::vector<std::string_view>& tokens) {
        while (pos_ < text_.size()) {
            const std::size_t end = std::min(text_.find('\n', pos_), text_.size());
            std::string_view line = text_.substr(pos_, end - pos_);
            pos_ = end + 1;
            ++line_no_;
            if (!line.empty() && line.back() == '\r') {
                line.remove_suffix(1);
            }
            if (!line.empty() && line.front() == '#') {
                continue;
            }
            tokens.clear();
            std::size_t at = 0;
            while (at < line.size()) {
                while (at < line.size() && (line[at] == ' ' || line[at] == '\t')) {
                    ++at;
                }
                std::size_t stop = at;
                while (stop < line.size() && line[stop] != ' ' && line[stop] != '\t') {
                    ++stop;
                }
                if (stop > at) {
                    tokens.push_back(line.substr(at, stop - at));
                }
                at = stop;
            }
            if (!tokens.empty()) {
                return true;
            }
        }
        return false;
    }

    std::size_t line() const noexcept { return line_no_; }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
    std::size_t line_no_ = 0;
};

std::uint32_t to_number(std::string_view token, std::size_t line) {
    std::uint32_t value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size()) {
        throw ParseError(line, "expected a non-negative 32-bit integer, got '" + std::string(token) + "'");
    }
    return value;
}

} // namespace

ValidationError::ValidationError(std::vector<Diagnostic> diagnostics)
    : std::runtime_error(join_messages(diagnostics)), diagnostics_(std::move(diagnostics)) {}

ParseError::ParseError(std::size_t line, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

UnreachableState::UnreachableState(State state)
    : std::runtime_error("state " + std::to_string(state) + " is not reachable from the initial state"),
      state_(state) {}

std::vector<Transition> PtDfa::transitions() const {
    std::vector<Transition> out;
    out.reserve(tails_.size());
    for (std::uint32_t t = 0; t < num_transitions(); ++t) {
        out.push_back(transition(t));
    }
    return out;
}

std::vector<bool> PtDfa::final_mask() const {
    std::vector<bool> mask(states_, false);
    for (const State q : finals_) {
        mask[q] = true;
    }
    return mask;
}

RawDfa PtDfa::to_raw() const {
    return RawDfa{states_, alphabet_, transitions(), initial_, finals_};
}

PtDfa PtDfa::from_trusted(std::uint32_t states, std::uint32_t alphabet, std::vector<State> tails,
                          std::vector<Label> labels, std::vector<State> heads, State initial,
                          std::vector<State> finals) {
    assert(tails.size() == labels.size() && labels.size() == heads.size());
    assert(std::is_sorted(finals.begin(), finals.end()));
    assert(std::adjacent_find(finals.begin(), finals.end()) == finals.end());
    PtDfa out;
    out.states_ = states;
    out.alphabet_ = alphabet;
    out.tails_ = std::move(tails);
    out.labels_ = std::move(labels);
    out.heads_ = std::move(heads);
    out.initial_ = initial;
    out.finals_ = std::move(finals);
#ifndef NDEBUG
    (void)validate(out.to_raw());
#endif
    return out;
}

PtDfa validate(RawDfa raw) {
    std::vector<Diagnostic> problems;
    if (raw.states == 0) {
        problems.push_back({ErrorKind::empty_state_set, "the state set is empty (an initial state is required)"});
    } else if (raw.initial >= raw.states) {
        problems.push_back({ErrorKind::index_out_of_range, "initial state " + std::to_string(raw.initial) +
                                                               " is not below " + std::to_string(raw.states)});
    }

    std::vector<std::uint32_t> in_range;
    in_range.reserve(raw.transitions.size());
    for (std::size_t i = 0; i < raw.transitions.size(); ++i) {
        const Transition& t = raw.transitions[i];
        if (t.tail >= raw.states || t.head >= raw.states) {
            problems.push_back({ErrorKind::index_out_of_range, describe(i, t) + ": state out of range"});
        } else if (t.label >= raw.alphabet) {
            problems.push_back({ErrorKind::index_out_of_range, describe(i, t) + ": label out of range"});
        } else {
            in_range.push_back(static_cast<std::uint32_t>(i));
        }
    }
    for (const State q : raw.finals) {
        if (q >= raw.states) {
            problems.push_back(
                {ErrorKind::index_out_of_range, "final state " + std::to_string(q) + " is out of range"});
        }
    }

    // Determinism: group by tail, then detect a repeated label inside a group.
    if (raw.states > 0) {
        const auto key = [&](std::uint32_t i) {
            const Transition& t = raw.transitions[i];
            return (static_cast<std::uint64_t>(t.tail) << 32) | t.label;
        };
        std::sort(in_range.begin(), in_range.end(), [&](std::uint32_t x, std::uint32_t y) {
            return key(x) != key(y) ? key(x) < key(y) : x < y;
        });
        for (std::size_t k = 1; k < in_range.size(); ++k) {
            if (key(in_range[k - 1]) == key(in_range[k])) {
                const Transition& t = raw.transitions[in_range[k]];
                problems.push_back({ErrorKind::duplicate_transition_key,
                                    describe(in_range[k], t) + " repeats (tail " + std::to_string(t.tail) +
                                        ", label " + std::to_string(t.label) + ") of transition " +
                                        std::to_string(in_range[k - 1])});
            }
        }
    }

    if (!problems.empty()) {
        throw ValidationError(std::move(problems));
    }

    PtDfa out;
    out.states_ = raw.states;
    out.alphabet_ = raw.alphabet;
    out.initial_ = raw.initial;
    out.tails_.reserve(raw.transitions.size());
    out.labels_.reserve(raw.transitions.size());
    out.heads_.reserve(raw.transitions.size());
    for (const Transition& t : raw.transitions) {
        out.tails_.push_back(t.tail);
        out.labels_.push_back(t.label);
        out.heads_.push_back(t.head);
    }
    std::sort(raw.finals.begin(), raw.finals.end());
    raw.finals.erase(std::unique(raw.finals.begin(), raw.finals.end()), raw.finals.end());
    out.finals_ = std::move(raw.finals);
    return out;
}

PtDfa parse(std::string_view text) {
    LineReader reader(text);
    std::vector<std::string_view> tokens;
    if (!reader.next(tokens)) {
        throw ParseError(reader.line() == 0 ? 1 : reader.line(), "missing 'dfa' header");
    }
    if (tokens.size() != 6 || tokens[0] != "dfa") {
        throw ParseError(reader.line(), "header must be 'dfa <n> <alpha> <m> <k> <initial>'");
    }
    const std::size_t header_line = reader.line();
    RawDfa raw;
    raw.states = to_number(tokens[1], header_line);
    raw.alphabet = to_number(tokens[2], header_line);
    const std::uint32_t m = to_number(tokens[3], header_line);
    const std::uint32_t k = to_number(tokens[4], header_line);
    raw.initial = to_number(tokens[5], header_line);

    raw.transitions.reserve(m);
    for (std::uint32_t i = 0; i < m; ++i) {
        if (!reader.next(tokens)) {
            throw ParseError(reader.line() + 1, "unexpected end of input: expected " + std::to_string(m) +
                                                    " transitions, got " + std::to_string(i));
        }
        if (tokens.size() != 3) {
            throw ParseError(reader.line(), "transition line must be '<tail> <label> <head>'");
        }
        raw.transitions.push_back({to_number(tokens[0], reader.line()), to_number(tokens[1], reader.line()),
                                   to_number(tokens[2], reader.line())});
    }
    raw.finals.reserve(k);
    for (std::uint32_t i = 0; i < k; ++i) {
        if (!reader.next(tokens)) {
            throw ParseError(reader.line() + 1, "unexpected end of input: expected " + std::to_string(k) +
                                                    " final states, got " + std::to_string(i));
        }
        if (tokens.size() != 1) {
            throw ParseError(reader.line(), "final-state line must hold one state");
        }
        raw.finals.push_back(to_number(tokens[0], reader.line()));
    }
    if (reader.next(tokens)) {
        throw ParseError(reader.line(), "trailing content after the final states");
    }
    return validate(std::move(raw));
}

std::string serialize(const PtDfa& dfa) {
    const PtDfa s = sorted(dfa);
    std::string out;
    out.reserve(32 + static_cast<std::size_t>(s.num_transitions()) * 18 + s.finals().size() * 6);
    const auto put = [&out](std::uint32_t v) {
        char buf[16];
        const auto res = std::to_chars(buf, buf + sizeof buf, v);
        out.append(buf, res.ptr);
    };
    out += "dfa ";
    put(s.num_states());
    out += ' ';
    put(s.alphabet_size());
    out += ' ';
    put(s.num_transitions());
    out += ' ';
    put(static_cast<std::uint32_t>(s.finals().size()));
    out += ' ';
    put(s.initial());
    out += '\n';
    for (std::uint32_t t = 0; t < s.num_transitions(); ++t) {
        put(s.tails()[t]);
        out += ' ';
        put(s.labels()[t]);
        out += ' ';
        put(s.heads()[t]);
        out += '\n';
    }
    for (const State q : s.finals()) {
        put(q);
        out += '\n';
    }
    return out;
}

PtDfa sorted(const PtDfa& dfa) {
    std::vector<std::uint32_t> tail_offsets;
    const std::vector<std::uint32_t> order = order_by_tail_label(dfa, tail_offsets);
    std::vector<State> tails(order.size());
    std::vector<Label> labels(order.size());
    std::vector<State> heads(order.size());
    for (std::size_t i = 0; i < order.size(); ++i) {
        tails[i] = dfa.tails()[order[i]];
        labels[i] = dfa.labels()[order[i]];
        heads[i] = dfa.heads()[order[i]];
    }
    return PtDfa::from_trusted(dfa.num_states(), dfa.alphabet_size(), std::move(tails), std::move(labels),
                               std::move(heads), dfa.initial(), {dfa.finals().begin(), dfa.finals().end()});
}

PtDfa canonicalize(const PtDfa& dfa) {
    const std::uint32_t n = dfa.num_states();
    std::vector<std::uint32_t> tail_offsets;
    const std::vector<std::uint32_t> order = order_by_tail_label(dfa, tail_offsets);

    std::vector<State> renumber(n, unset);
    std::vector<State> visit;
    visit.reserve(n);
    renumber[dfa.initial()] = 0;
    visit.push_back(dfa.initial());
    for (std::size_t i = 0; i < visit.size(); ++i) {
        const State q = visit[i];
        for (std::uint32_t k = tail_offsets[q]; k < tail_offsets[q + 1]; ++k) {
            const State h = dfa.heads()[order[k]];
            if (renumber[h] == unset) {
                renumber[h] = static_cast<State>(visit.size());
                visit.push_back(h);
            }
        }
    }
    if (visit.size() != n) {
        const auto missing = std::find(renumber.begin(), renumber.end(), unset);
        throw UnreachableState(static_cast<State>(missing - renumber.begin()));
    }

    const std::uint32_t m = dfa.num_transitions();
    std::vector<State> tails;
    std::vector<Label> labels;
    std::vector<State> heads;
    tails.reserve(m);
    labels.reserve(m);
    heads.reserve(m);
    for (State fresh = 0; fresh < n; ++fresh) {
        const State q = visit[fresh];
        for (std::uint32_t k = tail_offsets[q]; k < tail_offsets[q + 1]; ++k) {
            const std::uint32_t t = order[k];
            tails.push_back(fresh);
            labels.push_back(dfa.labels()[t]);
            heads.push_back(renumber[dfa.heads()[t]]);
        }
    }
    std::vector<State> finals;
    finals.reserve(dfa.finals().size());
    for (const State q : dfa.finals()) {
        finals.push_back(renumber[q]);
    }
    std::sort(finals.begin(), finals.end());
    return PtDfa::from_trusted(n, dfa.alphabet_size(), std::move(tails), std::move(labels), std::move(heads), 0,
                               std::move(finals));
}

bool is_isomorphic(const PtDfa& a, const PtDfa& b) {
    if (a.alphabet_size() != b.alphabet_size() || a.num_states() != b.num_states() ||
        a.num_transitions() != b.num_transitions() || a.finals().size() != b.finals().size()) {
        // Still canonicalize so unreachable states are reported consistently.
        (void)canonicalize(a);
        (void)canonicalize(b);
        return false;
    }
    return canonicalize(a) == canonicalize(b);
}

bool accepts(const PtDfa& dfa, std::span<const Label> word) {
    for (const Label a : word) {
        if (a >= dfa.alphabet_size()) {
            throw std::out_of_range("symbol " + std::to_string(a) + " is outside the alphabet");
        }
    }
    const Adjacency out(dfa.tails(), dfa.num_states());
    State q = dfa.initial();
    for (const Label a : word) {
        State next = unset;
        for (const std::uint32_t t : out.of(q)) {
            if (dfa.labels()[t] == a) {
                next = dfa.heads()[t];
                break;
            }
        }
        if (next == unset) {
            return false;
        }
        q = next;
    }
    return std::binary_search(dfa.finals().begin(), dfa.finals().end(), q);
}

} // namespace ptdfa
