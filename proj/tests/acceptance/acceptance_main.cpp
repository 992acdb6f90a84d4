// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "ptdfa/hopcroft.hpp"
#include "ptdfa/minimizer.hpp"
#include "ptdfa/oracle.hpp"
#include "ptdfa/refinable_partition.hpp"
#include "ptdfa/workload.hpp"
#include "support/alloc_tracker.hpp"
#include "support/partition_model.hpp"
#include "support/random_dfa.hpp"

using namespace ptdfa;

namespace {

// Pinned thresholds.
constexpr int oracle_instances_min = 5000;
constexpr double oracle_seconds_max = 60.0;
constexpr int lemma_instances = 1000;
constexpr double large_seconds_max = 5.0;
constexpr int model_sequences = 100000;
constexpr double sparse_dense_ratio_max = 0.35;
constexpr int timing_repeats = 5;
constexpr std::size_t valmari_memory_cap = std::size_t{512} << 20;
constexpr double memory_ratio_nominal = 8.0;
constexpr double memory_ratio_tolerance = 0.5;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Report {
    int failures = 0;

    void line(int id, bool pass, const std::string& title, const std::string& detail) {
        std::printf("%s criterion %d (%s): %s\n", pass ? "PASS" : "FAIL", id, title.c_str(), detail.c_str());
        std::fflush(stdout);
        failures += pass ? 0 : 1;
    }
};

// Counter-bound tally shared by criteria 1-4.
struct BoundTally {
    std::uint64_t runs = 0;
    std::uint64_t violations = 0;

    void check(const MinimizeStats& s) {
        ++runs;
        if (s.scan_touches > scan_touch_bound(s.states_work, s.transitions_work) ||
            s.smaller_half_touches > smaller_half_touch_bound(s.states_work, s.transitions_work)) {
            ++violations;
        }
    }
};

std::string fmt(const char* format, double value) {
    char buf[64];
    std::snprintf(buf, sizeof buf, format, value);
    return buf;
}

void criterion_oracle(Report& report, BoundTally& bounds) {
    const auto start = Clock::now();
    int instances = 0;
    int mismatches = 0;
    std::uint64_t seed = 1;
    for (int round = 0; instances < oracle_instances_min; ++round) {
        for (std::uint32_t n = 1; n <= 8; ++n) {
            for (std::uint32_t alpha = 1; alpha <= 4; ++alpha) {
                for (int tenth = 1; tenth <= 10; ++tenth) {
                    for (std::uint32_t k = 0; k <= n; ++k) {
                        const PtDfa d = generate({n, alpha, tenth / 10.0, k, seed++});
                        const MinimizeResult r = minimize(d);
                        bounds.check(r.stats);
                        mismatches += is_isomorphic(r.dfa, oracle_minimize(d)) ? 0 : 1;
                        ++instances;
                    }
                }
            }
        }
    }
    const double secs = seconds_since(start);
    report.line(1, mismatches == 0 && secs < oracle_seconds_max, "oracle equivalence",
                std::to_string(instances) + " random automata, " + std::to_string(mismatches) + " mismatches, " +
                    fmt("%.1f", secs) + " s (limit " + fmt("%.0f", oracle_seconds_max) + " s)");
}

void criterion_exhaustive(Report& report, BoundTally& bounds) {
    std::uint64_t instances = 0;
    std::uint64_t mismatches = 0;
    for (std::uint32_t n = 1; n <= 3; ++n) {
        for (std::uint32_t alpha = 1; alpha <= 2; ++alpha) {
            testing::for_each_automaton(n, alpha, [&](const PtDfa& d) {
                const MinimizeResult v = minimize(d);
                bounds.check(v.stats);
                const PtDfa o = oracle_minimize(d);
                const PtDfa h = hopcroft_minimize(d).dfa;
                const bool agree = is_isomorphic(v.dfa, o) && is_isomorphic(o, h) && is_isomorphic(v.dfa, h);
                mismatches += agree ? 0 : 1;
                ++instances;
            });
        }
    }
    report.line(2, mismatches == 0, "exhaustive tiny automata",
                std::to_string(instances) + " automata with n <= 3, alpha <= 2, " + std::to_string(mismatches) +
                    " disagreements among valmari/oracle/hopcroft");
}

void criterion_final_partition(Report& report, BoundTally& bounds) {
    std::mt19937_64 rng(3);
    std::uint64_t violations = 0;
    std::uint64_t refined = 0;
    for (int i = 0; i < lemma_instances; ++i) {
        const std::uint32_t n = 1 + static_cast<std::uint32_t>(rng() % 10);
        const std::uint32_t alpha = 1 + static_cast<std::uint32_t>(rng() % 4);
        const PtDfa d = testing::random_dfa(rng, n, alpha, 0.1 * static_cast<double>(1 + rng() % 10),
                                            1 + static_cast<std::uint32_t>(rng() % n));
        MinimizeOptions options;
        options.on_final_partition = [&](const RefinementView& v) {
            ++refined;
            const std::uint32_t k = v.dfa.num_states();
            const std::uint32_t a_count = v.dfa.alphabet_size();
            const auto equal = language_equivalence_table(v.dfa);
            constexpr std::uint32_t undefined = 0xffffffffu;
            std::vector<std::uint32_t> succ_block(static_cast<std::size_t>(k) * a_count, undefined);
            for (std::uint32_t t = 0; t < v.dfa.num_transitions(); ++t) {
                succ_block[v.dfa.tails()[t] * a_count + v.dfa.labels()[t]] = v.blocks.set_of(v.dfa.heads()[t]);
            }
            for (State q1 = 0; q1 < k; ++q1) {
                for (State q2 = 0; q2 < k; ++q2) {
                    const bool same = v.blocks.set_of(q1) == v.blocks.set_of(q2);
                    if (!same && equal[q1][q2]) {
                        ++violations;
                    }
                    if (same) {
                        for (Label a = 0; a < a_count; ++a) {
                            if (succ_block[q1 * a_count + a] != succ_block[q2 * a_count + a]) {
                                ++violations;
                            }
                        }
                    }
                }
            }
        };
        bounds.check(minimize(d, options).stats);
    }
    report.line(3, violations == 0, "final partition: no over-splitting, full splitting",
                std::to_string(lemma_instances) + " instances with n <= 10 (" + std::to_string(refined) +
                    " needed refinement), " + std::to_string(violations) + " violations");
}

void criterion_bounds(Report& report, BoundTally& bounds) {
    const PtDfa d = generate({10000, 100, 0.1, 5000, 1});
    const auto start = Clock::now();
    const MinimizeResult r = minimize(d);
    const double secs = seconds_since(start);
    bounds.check(r.stats);
    const std::uint64_t scan_bound = scan_touch_bound(r.stats.states_work, r.stats.transitions_work);
    const std::uint64_t half_bound = smaller_half_touch_bound(r.stats.states_work, r.stats.transitions_work);
    std::ostringstream detail;
    detail << bounds.violations << " violations over " << bounds.runs << " runs; large instance n=10000 alpha=100 "
           << "p=0.1: scan " << r.stats.scan_touches << " <= " << scan_bound << ", smaller-half "
           << r.stats.smaller_half_touches << " <= " << half_bound << ", " << fmt("%.2f", secs) << " s (limit "
           << fmt("%.0f", large_seconds_max) << " s)";
    report.line(4, bounds.violations == 0 && secs < large_seconds_max, "touch-count bounds", detail.str());
}

void criterion_partition_model(Report& report) {
    std::mt19937_64 rng(17);
    std::uint64_t disagreements = 0;
    std::uint64_t broken = 0;
    std::uint64_t operations = 0;
    for (int seq = 0; seq < model_sequences; ++seq) {
        const std::uint32_t max = 1 + static_cast<std::uint32_t>(rng() % 64);
        RefinablePartition p(max);
        testing::PartitionModel model(max);
        const int ops = 1 + static_cast<int>(rng() % 40);
        for (int k = 0; k < ops; ++k, ++operations) {
            if (rng() % 3 != 0) {
                const auto e = static_cast<std::uint32_t>(rng() % max);
                p.mark(e);
                model.mark(e);
            } else {
                const auto s = static_cast<std::uint32_t>(rng() % p.sets());
                if (p.split(s) != model.split(s)) {
                    ++disagreements;
                }
            }
            if (p.check_invariants()) {
                ++broken;
            }
        }
        if (p.sets() != model.sets.size()) {
            ++disagreements;
            continue;
        }
        for (std::uint32_t s = 0; s < p.sets(); ++s) {
            const auto e = p.elements(s);
            if (std::set<std::uint32_t>(e.begin(), e.end()) != model.sets[s] ||
                p.marked_count(s) != model.marked[s].size()) {
                ++disagreements;
            }
        }
    }
    report.line(5, disagreements == 0 && broken == 0, "refinable partition model check",
                std::to_string(model_sequences) + " sequences (" + std::to_string(operations) + " operations), " +
                    std::to_string(disagreements) + " disagreements, " + std::to_string(broken) +
                    " invariant violations");
}

double median_millis(const std::function<void()>& f) {
    std::vector<double> ms;
    for (int i = 0; i < timing_repeats; ++i) {
        const auto start = Clock::now();
        f();
        ms.push_back(seconds_since(start) * 1000.0);
    }
    std::sort(ms.begin(), ms.end());
    return ms[ms.size() / 2];
}

void criterion_timing(Report& report) {
    const PtDfa sparse = generate({1000, 100, 0.1, 500, 1});
    const PtDfa dense = generate({1000, 100, 1.0, 500, 1});
    const double v_sparse = median_millis([&] { minimize(sparse); });
    const double v_dense = median_millis([&] { minimize(dense); });
    const double h_sparse = median_millis([&] { hopcroft_minimize(sparse); });
    const double ratio = v_sparse / v_dense;
    const bool a = ratio < sparse_dense_ratio_max;
    const bool b = v_sparse < h_sparse;
    report.line(6, a && b, "sparse vs dense timing at n=1000 alpha=100",
                "valmari p=0.1 " + fmt("%.3f", v_sparse) + " ms / p=1.0 " + fmt("%.3f", v_dense) + " ms = " +
                    fmt("%.3f", ratio) + " (need < " + fmt("%.2f", sparse_dense_ratio_max) + "); hopcroft p=0.1 " +
                    fmt("%.3f", h_sparse) + " ms (valmari must be faster)");
}

void criterion_memory(Report& report) {
    const PtDfa d = generate({2000, 2000, 0.1, 1000, 1});

    alloc_tracker::reset_peak();
    std::size_t base = alloc_tracker::live();
    const std::uint32_t v_states = minimize(d).dfa.num_states();
    const std::size_t valmari_peak = alloc_tracker::peak() - base;

    alloc_tracker::reset_peak();
    base = alloc_tracker::live();
    const std::uint32_t h_states = hopcroft_minimize(d).dfa.num_states();
    const std::size_t hopcroft_peak = alloc_tracker::peak() - base;

    const double ratio = static_cast<double>(hopcroft_peak) / static_cast<double>(valmari_peak);
    const double need = memory_ratio_nominal * (1.0 - memory_ratio_tolerance);
    const bool pass = valmari_peak < valmari_memory_cap && ratio >= need && v_states == h_states;
    std::ostringstream detail;
    detail << "n=alpha=2000 p=0.1: valmari peak " << fmt("%.1f", valmari_peak / 1048576.0) << " MiB (cap 512), "
           << "baseline peak " << fmt("%.1f", hopcroft_peak / 1048576.0) << " MiB (tables "
           << fmt("%.1f", hopcroft_table_bytes(2000, 2000) / 1048576.0) << " MiB), ratio " << fmt("%.1f", ratio)
           << " (need >= " << fmt("%.1f", need) << ")";
    report.line(7, pass, "memory regime", detail.str());
}

std::string cli_pipeline(const std::vector<std::string>& generate_args) {
    std::vector<std::string> args{"ptdfa", "generate"};
    args.insert(args.end(), generate_args.begin(), generate_args.end());
    std::istringstream none;
    std::ostringstream generated;
    std::ostringstream err;
    if (cli::run(args, none, generated, err) != cli::ok) {
        return "generate failed: " + err.str();
    }
    std::istringstream in(generated.str());
    std::ostringstream minimized;
    if (cli::run({"ptdfa", "minimize"}, in, minimized, err) != cli::ok) {
        return "minimize failed: " + err.str();
    }
    return minimized.str();
}

void criterion_determinism(Report& report) {
    int comparisons = 0;
    int diffs = 0;
    std::uint64_t seed = 1;
    for (const std::uint32_t n : {10u, 100u, 1000u, 5000u}) {
        for (const std::uint32_t alpha : {1u, 3u, 20u}) {
            for (const double p : {0.1, 0.5, 1.0}) {
                const GenerateParams params{n, alpha, p, n / 2, seed++};
                const std::string first = serialize(minimize(generate(params)).dfa);
                const std::string second = serialize(minimize(generate(params)).dfa);
                MinimizeOptions fifo;
                fifo.order = WorklistOrder::fifo;
                const std::string queued = serialize(minimize(generate(params), fifo).dfa);
                diffs += (first != second) + (first != queued);
                comparisons += 2;
            }
        }
    }
    const std::vector<std::string> flags{"--states", "2000", "--alphabet", "10", "--density", "0.3", "--seed", "9"};
    diffs += cli_pipeline(flags) != cli_pipeline(flags);
    ++comparisons;
    report.line(8, diffs == 0, "determinism",
                std::to_string(comparisons) + " comparisons (repeat runs, LIFO vs FIFO, CLI pipeline), " +
                    std::to_string(diffs) + " diffs");
}

} // namespace

int main() {
#ifndef NDEBUG
    std::printf("note: assertions are enabled; timing criteria are meant for Release builds\n");
#endif
    Report report;
    BoundTally bounds;
    criterion_oracle(report, bounds);
    criterion_exhaustive(report, bounds);
    criterion_final_partition(report, bounds);
    criterion_bounds(report, bounds);
    criterion_partition_model(report);
    criterion_timing(report);
    criterion_memory(report);
    criterion_determinism(report);
    std::printf("%d of 8 criteria failed\n", report.failures);
    return report.failures == 0 ? 0 : 1;
}
