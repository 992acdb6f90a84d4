#pragma once

#include <stdexcept>
#include <vector>

#include "ptdfa/automaton.hpp"

namespace ptdfa {

class AlphabetMismatch : public std::invalid_argument {
public:
    AlphabetMismatch(std::uint32_t left, std::uint32_t right);
};

/// Pairwise language equality of the states of `dfa`, computed by quadratic
/// table filling on the sink-completed automaton. equal[p][q] is true iff
/// L(p) = L(q).
std::vector<std::vector<bool>> language_equivalence_table(const PtDfa& dfa);

/// Brute-force minimization: sink completion, table filling, merge, then drop
/// the empty-language class and unreachable classes. Quadratic; intended as a
/// reference for small automata.
PtDfa oracle_minimize(const PtDfa& dfa);

/// L(a) == L(b), via a breadth-first search of the product automaton.
/// Throws AlphabetMismatch if the alphabets differ.
bool language_equal(const PtDfa& a, const PtDfa& b);

} // namespace ptdfa
