#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ptdfa/types.hpp"

namespace ptdfa {

enum class ErrorKind {
    duplicate_transition_key,
    index_out_of_range,
    empty_state_set,
};

struct Diagnostic {
    ErrorKind kind;
    std::string message;
};

/// Thrown by validate() with every problem found, not just the first.
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(std::vector<Diagnostic> diagnostics);
    const std::vector<Diagnostic>& diagnostics() const noexcept { return diagnostics_; }

private:
    std::vector<Diagnostic> diagnostics_;
};

/// Syntax error in the text format; line() is 1-based.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what);
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// Raised when an operation needs every state to be reachable from the initial one.
class UnreachableState : public std::runtime_error {
public:
    explicit UnreachableState(State state);
    State state() const noexcept { return state_; }

private:
    State state_;
};

/// Unchecked automaton description, as read from a file or built by hand.
struct RawDfa {
    std::uint32_t states = 0;
    std::uint32_t alphabet = 0;
    std::vector<Transition> transitions;
    State initial = 0;
    std::vector<State> finals;
};

/**
 * Deterministic automaton with a partial transition function. States are
 * 0..num_states()-1 and labels 0..alphabet_size()-1; an undefined
 * transition is simply absent. Instances are immutable and always valid:
 * they come from validate() or from algorithms that build valid results.
 *
 * Transitions are stored as parallel tail/label/head arrays in whatever
 * order they were given. finals() is sorted and duplicate-free.
 */
class PtDfa {
public:
    std::uint32_t num_states() const noexcept { return states_; }
    std::uint32_t alphabet_size() const noexcept { return alphabet_; }
    std::uint32_t num_transitions() const noexcept { return static_cast<std::uint32_t>(tails_.size()); }
    State initial() const noexcept { return initial_; }

    std::span<const State> tails() const noexcept { return tails_; }
    std::span<const Label> labels() const noexcept { return labels_; }
    std::span<const State> heads() const noexcept { return heads_; }
    std::span<const State> finals() const noexcept { return finals_; }

    Transition transition(std::uint32_t t) const { return {tails_[t], labels_[t], heads_[t]}; }
    std::vector<Transition> transitions() const;

    /// Membership mask over states.
    std::vector<bool> final_mask() const;

    RawDfa to_raw() const;

    /// Builds from arrays the caller guarantees to be valid (in range,
    /// deterministic, finals sorted and unique). Checked only in debug builds.
    static PtDfa from_trusted(std::uint32_t states, std::uint32_t alphabet, std::vector<State> tails,
                              std::vector<Label> labels, std::vector<State> heads, State initial,
                              std::vector<State> finals);

    friend bool operator==(const PtDfa&, const PtDfa&) = default;

private:
    PtDfa() = default;
    friend PtDfa validate(RawDfa raw);

    std::uint32_t states_ = 0;
    std::uint32_t alphabet_ = 0;
    std::vector<State> tails_;
    std::vector<Label> labels_;
    std::vector<State> heads_;
    State initial_ = 0;
    std::vector<State> finals_;
};

/// Checks the raw description and returns the automaton, or throws
/// ValidationError listing each offending record. Duplicate final states are
/// merged silently.
PtDfa validate(RawDfa raw);

/// Reads the line-oriented text format:
///
///     dfa <n> <alpha> <m> <k> <initial>
///     <tail> <label> <head>      (m lines)
///     <final-state>              (k lines)
///
/// Lines starting with '#' and blank lines are ignored.
PtDfa parse(std::string_view text);

/// Canonical text: transitions sorted by (tail, label, head), finals ascending.
std::string serialize(const PtDfa& dfa);

/// Same automaton with transitions and finals in canonical order; states are
/// not renumbered. parse(serialize(d)) == sorted(d).
PtDfa sorted(const PtDfa& dfa);

/// Renumbers states breadth-first from the initial state, following labels in
/// ascending order. Throws UnreachableState if some state is not reached.
PtDfa canonicalize(const PtDfa& dfa);

/// Same alphabet size and equal canonical forms.
bool is_isomorphic(const PtDfa& a, const PtDfa& b);

/// Runs the word; an undefined transition rejects. Throws std::out_of_range
/// on a symbol outside the alphabet.
bool accepts(const PtDfa& dfa, std::span<const Label> word);

} // namespace ptdfa
