#pragma once

#include <cstdint>
#include <iosfwd>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "ptdfa/automaton.hpp"

namespace ptdfa {

/// Seedable generator with a fixed algorithm: std::mt19937_64, whose output
/// sequence is pinned by the standard, plus our own bounded draws (the
/// standard distributions differ between library implementations).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform in [0, bound). bound must be positive.
    std::uint64_t below(std::uint64_t bound);

private:
    std::mt19937_64 engine_;
};

struct GenerateParams {
    std::uint32_t states = 1;
    std::uint32_t alphabet = 1;
    /// Fraction of the states x alphabet pairs that get a transition, in (0, 1].
    double density = 1.0;
    std::uint32_t finals = 0;
    std::uint64_t seed = 0;
};

/// Number of transitions generate() produces: round(density * states * alphabet).
std::uint64_t transition_count(const GenerateParams& params);

/// Random automaton: exactly transition_count() distinct (tail, label) pairs
/// drawn uniformly without replacement, uniform heads, a uniform k-subset of
/// finals, initial state 0. Throws std::invalid_argument on bad parameters.
PtDfa generate(const GenerateParams& params);

enum class Algorithm { valmari, hopcroft, oracle };

std::string to_string(Algorithm algo);
/// Throws std::invalid_argument on an unknown name.
Algorithm algorithm_from_string(const std::string& name);

struct BenchCell {
    std::uint32_t states;
    std::uint32_t alphabet;
    double density;
};

/// Parses "n,alpha,p".
BenchCell parse_cell(const std::string& text);

/// Reads a grid file: one "n,alpha,p" cell per line, '#' comments allowed.
std::vector<BenchCell> parse_grid(std::istream& in);

struct BenchConfig {
    std::vector<BenchCell> cells;
    std::vector<Algorithm> algorithms{Algorithm::valmari, Algorithm::hopcroft};
    /// Finals per run are states / 2 + d for each offset d.
    std::vector<int> final_offsets{-1, 0, 1};
    std::uint32_t seeds = 1;
    std::uint64_t first_seed = 1;
    unsigned jobs = 1;
    /// Passed to the baseline; 0 = unlimited.
    std::size_t memory_limit_bytes = 0;
};

struct BenchRow {
    Algorithm algo = Algorithm::valmari;
    std::uint32_t states = 0;
    std::uint32_t alphabet = 0;
    double density = 0.0;
    std::string offsets;
    std::uint64_t seed = 0;
    std::uint32_t transitions_in = 0;
    std::uint32_t states_out = 0;
    std::uint32_t transitions_out = 0;
    std::uint64_t splits = 0;
    std::uint64_t scan_touches = 0;
    double millis_min = 0.0;
    double millis_max = 0.0;
    std::string outcome;
};

/// Runs the grid in order cell -> seed -> algorithm. Per row, the timings are
/// the fastest and slowest of the runs over all final offsets; size and
/// counter columns come from the first offset. Only the minimization call is
/// timed. A baseline that runs out of memory yields outcome "oom".
std::vector<BenchRow> run_bench(const BenchConfig& config);

extern const char* const bench_csv_header;

void write_csv(std::ostream& out, const std::vector<BenchRow>& rows);

} // namespace ptdfa
