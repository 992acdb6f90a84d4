#include "ptdfa/workload.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <istream>
#include <limits>
#include <new>
#include <ostream>
#include <sstream>
#include <thread>
#include <unordered_set>

#include "ptdfa/hopcroft.hpp"
#include "ptdfa/minimizer.hpp"
#include "ptdfa/oracle.hpp"

namespace ptdfa {

namespace {

// At or below this density, pairs are drawn by rejection against a hash set;
// above it, Floyd's algorithm over a bitmap of the whole pair space.
constexpr double sparse_threshold = 1.0 / 8.0;

std::vector<std::uint64_t> sample_floyd(Rng& rng, std::uint64_t universe, std::uint64_t count) {
    std::vector<bool> chosen(universe, false);
    for (std::uint64_t j = universe - count; j < universe; ++j) {
        const std::uint64_t t = rng.below(j + 1);
        chosen[chosen[t] ? j : t] = true;
    }
    std::vector<std::uint64_t> out;
    out.reserve(count);
    for (std::uint64_t i = 0; i < universe; ++i) {
        if (chosen[i]) {
            out.push_back(i);
        }
    }
    return out;
}

std::vector<std::uint64_t> sample_rejection(Rng& rng, std::uint64_t universe, std::uint64_t count) {
    std::unordered_set<std::uint64_t> chosen;
    chosen.reserve(count);
    std::vector<std::uint64_t> out;
    out.reserve(count);
    while (out.size() < count) {
        const std::uint64_t t = rng.below(universe);
        if (chosen.insert(t).second) {
            out.push_back(t);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::string format_double(const char* fmt, double value) {
    char buf[64];
    std::snprintf(buf, sizeof buf, fmt, value);
    return buf;
}

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) {
        return {};
    }
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

struct Instance {
    int offset;
    PtDfa dfa;
};

MinimizeResult run_algorithm(Algorithm algo, const PtDfa& dfa, const BenchConfig& config) {
    switch (algo) {
    case Algorithm::valmari:
        return minimize(dfa);
    case Algorithm::hopcroft:
        return hopcroft_minimize(dfa, HopcroftOptions{config.memory_limit_bytes});
    case Algorithm::oracle: {
        MinimizeResult r{oracle_minimize(dfa), {}};
        r.stats.states_in = dfa.num_states();
        r.stats.transitions_in = dfa.num_transitions();
        r.stats.states_out = r.dfa.num_states();
        r.stats.transitions_out = r.dfa.num_transitions();
        return r;
    }
    }
    throw std::logic_error("unknown algorithm");
}

std::vector<BenchRow> run_unit(const BenchConfig& config, const BenchCell& cell, std::uint64_t seed) {
    std::vector<Instance> instances;
    std::string offsets;
    for (const int d : config.final_offsets) {
        const long long k = std::clamp<long long>(static_cast<long long>(cell.states / 2) + d, 0, cell.states);
        instances.push_back(
            {d, generate({cell.states, cell.alphabet, cell.density, static_cast<std::uint32_t>(k), seed})});
        offsets += (offsets.empty() ? "" : ";") + std::to_string(d);
    }

    std::vector<BenchRow> rows;
    for (const Algorithm algo : config.algorithms) {
        BenchRow row;
        row.algo = algo;
        row.states = cell.states;
        row.alphabet = cell.alphabet;
        row.density = cell.density;
        row.offsets = offsets;
        row.seed = seed;
        row.outcome = "ok";
        bool first = true;
        for (const Instance& inst : instances) {
            try {
                const auto start = std::chrono::steady_clock::now();
                const MinimizeResult r = run_algorithm(algo, inst.dfa, config);
                const double ms =
                    std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
                if (first) {
                    row.transitions_in = r.stats.transitions_in;
                    row.states_out = r.stats.states_out;
                    row.transitions_out = r.stats.transitions_out;
                    row.splits = r.stats.block_splits;
                    row.scan_touches = r.stats.scan_touches;
                    row.millis_min = ms;
                    row.millis_max = ms;
                    first = false;
                } else {
                    row.millis_min = std::min(row.millis_min, ms);
                    row.millis_max = std::max(row.millis_max, ms);
                }
            } catch (const std::bad_alloc&) {
                row.outcome = "oom";
                row.transitions_in = inst.dfa.num_transitions();
                row.millis_min = row.millis_max = 0.0;
                break;
            }
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace

std::uint64_t Rng::below(std::uint64_t bound) {
    if (bound == 0) {
        throw std::invalid_argument("empty range");
    }
    // Reject the top partial bucket so every residue is equally likely.
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t x = engine_();
    while (x >= limit) {
        x = engine_();
    }
    return x % bound;
}

std::uint64_t transition_count(const GenerateParams& params) {
    return static_cast<std::uint64_t>(
        std::llround(params.density * static_cast<double>(params.states) * static_cast<double>(params.alphabet)));
}

PtDfa generate(const GenerateParams& params) {
    if (params.states == 0) {
        throw std::invalid_argument("states must be at least 1");
    }
    if (params.alphabet == 0) {
        throw std::invalid_argument("alphabet must be at least 1");
    }
    if (!(params.density > 0.0 && params.density <= 1.0)) {
        throw std::invalid_argument("density must be in (0, 1]");
    }
    if (params.finals > params.states) {
        throw std::invalid_argument("more final states than states");
    }
    const std::uint64_t universe = static_cast<std::uint64_t>(params.states) * params.alphabet;
    const std::uint64_t m = transition_count(params);
    if (m > std::numeric_limits<std::uint32_t>::max()) {
        throw std::invalid_argument("too many transitions for 32-bit indices");
    }

    Rng rng(params.seed);
    const std::vector<std::uint64_t> pairs =
        params.density <= sparse_threshold ? sample_rejection(rng, universe, m) : sample_floyd(rng, universe, m);

    std::vector<State> tails(pairs.size());
    std::vector<Label> labels(pairs.size());
    std::vector<State> heads(pairs.size());
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        tails[i] = static_cast<State>(pairs[i] / params.alphabet);
        labels[i] = static_cast<Label>(pairs[i] % params.alphabet);
    }
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        heads[i] = static_cast<State>(rng.below(params.states));
    }
    std::vector<State> finals;
    if (params.finals > 0) {
        for (const std::uint64_t q : sample_floyd(rng, params.states, params.finals)) {
            finals.push_back(static_cast<State>(q));
        }
    }
    return PtDfa::from_trusted(params.states, params.alphabet, std::move(tails), std::move(labels), std::move(heads),
                               0, std::move(finals));
}

std::string to_string(Algorithm algo) {
    switch (algo) {
    case Algorithm::valmari:
        return "valmari";
    case Algorithm::hopcroft:
        return "hopcroft";
    case Algorithm::oracle:
        return "oracle";
    }
    return "?";
}

Algorithm algorithm_from_string(const std::string& name) {
    if (name == "valmari") {
        return Algorithm::valmari;
    }
    if (name == "hopcroft") {
        return Algorithm::hopcroft;
    }
    if (name == "oracle") {
        return Algorithm::oracle;
    }
    throw std::invalid_argument("unknown algorithm '" + name + "'");
}

BenchCell parse_cell(const std::string& text) {
    std::istringstream in(text);
    std::string n;
    std::string alpha;
    std::string p;
    if (!std::getline(in, n, ',') || !std::getline(in, alpha, ',') || !std::getline(in, p) ||
        p.find(',') != std::string::npos) {
        throw std::invalid_argument("cell must be 'n,alpha,p': '" + text + "'");
    }
    try {
        std::size_t used = 0;
        const std::string ns = trim(n);
        const std::string as = trim(alpha);
        const std::string ps = trim(p);
        const unsigned long nv = std::stoul(ns, &used);
        if (used != ns.size() || ns.front() == '-') {
            throw std::invalid_argument("n");
        }
        const unsigned long av = std::stoul(as, &used);
        if (used != as.size() || as.front() == '-') {
            throw std::invalid_argument("alpha");
        }
        const double pv = std::stod(ps, &used);
        if (used != ps.size()) {
            throw std::invalid_argument("p");
        }
        if (nv == 0 || av == 0 || nv > std::numeric_limits<std::uint32_t>::max() ||
            av > std::numeric_limits<std::uint32_t>::max() || !(pv > 0.0 && pv <= 1.0)) {
            throw std::invalid_argument("range");
        }
        return BenchCell{static_cast<std::uint32_t>(nv), static_cast<std::uint32_t>(av), pv};
    } catch (const std::logic_error&) {
        throw std::invalid_argument("cell must be 'n,alpha,p' with n, alpha >= 1 and 0 < p <= 1: '" + text + "'");
    }
}

std::vector<BenchCell> parse_grid(std::istream& in) {
    std::vector<BenchCell> cells;
    std::string line;
    while (std::getline(in, line)) {
        const std::string t = trim(line);
        if (t.empty() || t.front() == '#') {
            continue;
        }
        cells.push_back(parse_cell(t));
    }
    return cells;
}

std::vector<BenchRow> run_bench(const BenchConfig& config) {
    struct Unit {
        const BenchCell* cell;
        std::uint64_t seed;
    };
    std::vector<Unit> units;
    for (const BenchCell& cell : config.cells) {
        for (std::uint32_t s = 0; s < config.seeds; ++s) {
            units.push_back({&cell, config.first_seed + s});
        }
    }
    std::vector<std::vector<BenchRow>> results(units.size());
    const unsigned jobs = std::max(1u, std::min<unsigned>(config.jobs, static_cast<unsigned>(units.size())));
    if (jobs <= 1) {
        for (std::size_t i = 0; i < units.size(); ++i) {
            results[i] = run_unit(config, *units[i].cell, units[i].seed);
        }
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::jthread> workers;
        for (unsigned w = 0; w < jobs; ++w) {
            workers.emplace_back([&] {
                for (std::size_t i = next++; i < units.size(); i = next++) {
                    results[i] = run_unit(config, *units[i].cell, units[i].seed);
                }
            });
        }
    }
    std::vector<BenchRow> rows;
    for (auto& r : results) {
        for (auto& row : r) {
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

const char* const bench_csv_header =
    "algo,n,alpha,p,d,seed,m_in,states_out,trans_out,splits,scan_touches,millis_min,millis_max,outcome";

void write_csv(std::ostream& out, const std::vector<BenchRow>& rows) {
    out << bench_csv_header << '\n';
    for (const BenchRow& r : rows) {
        out << to_string(r.algo) << ',' << r.states << ',' << r.alphabet << ',' << format_double("%g", r.density)
            << ',' << r.offsets << ',' << r.seed << ',' << r.transitions_in << ',' << r.states_out << ','
            << r.transitions_out << ',' << r.splits << ',' << r.scan_touches << ','
            << format_double("%.3f", r.millis_min) << ',' << format_double("%.3f", r.millis_max) << ','
            << r.outcome << '\n';
    }
}

} // namespace ptdfa
