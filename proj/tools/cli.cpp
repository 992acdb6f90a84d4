#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <new>
#include <sstream>

#include <CLI11.hpp>

#include "ptdfa/hopcroft.hpp"
#include "ptdfa/minimizer.hpp"
#include "ptdfa/oracle.hpp"
#include "ptdfa/workload.hpp"

namespace ptdfa::cli {

namespace {

// Thrown for unreadable or invalid input files.
struct DataError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path, std::istream& in) {
    std::ostringstream buf;
    if (path == "-") {
        buf << in.rdbuf();
        return buf.str();
    }
    std::ifstream file(path, std::ios::binary);
    if (!file) {
        throw DataError("cannot open '" + path + "'");
    }
    buf << file.rdbuf();
    return buf.str();
}

void write_output(const std::string& path, std::ostream& out, const std::string& text) {
    if (path == "-") {
        out << text;
        out.flush();
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file || !(file << text)) {
        throw DataError("cannot write '" + path + "'");
    }
}

PtDfa load(const std::string& path, std::istream& in) {
    try {
        return parse(read_input(path, in));
    } catch (const ParseError& e) {
        throw DataError((path == "-" ? std::string("<stdin>") : path) + ": " + e.what());
    } catch (const ValidationError& e) {
        throw DataError((path == "-" ? std::string("<stdin>") : path) + ": " + e.what());
    }
}

void print_stats(std::ostream& err, const MinimizeStats& s) {
    err << "states_in=" << s.states_in << '\n'
        << "transitions_in=" << s.transitions_in << '\n'
        << "alphabet=" << s.alphabet << '\n'
        << "states_work=" << s.states_work << '\n'
        << "transitions_work=" << s.transitions_work << '\n'
        << "states_out=" << s.states_out << '\n'
        << "transitions_out=" << s.transitions_out << '\n'
        << "block_splits=" << s.block_splits << '\n'
        << "splitter_splits=" << s.splitter_splits << '\n'
        << "scan_touches=" << s.scan_touches << '\n'
        << "smaller_half_touches=" << s.smaller_half_touches << '\n'
        << "millis=" << s.millis << '\n';
}

const auto density_range = CLI::Validator(
    [](std::string& value) -> std::string {
        double p = 0.0;
        try {
            p = std::stod(value);
        } catch (const std::exception&) {
            return "density must be a number";
        }
        return (p > 0.0 && p <= 1.0) ? std::string{} : std::string("density must be in (0, 1]");
    },
    "(0,1]");

} // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Minimization of deterministic automata with partial transition functions"};
    app.require_subcommand(1);

    // minimize
    std::string min_in = "-";
    std::string min_out = "-";
    std::string min_algo = "valmari";
    bool min_stats = false;
    auto* cmd_min = app.add_subcommand("minimize", "Write the minimal equivalent automaton");
    cmd_min->add_option("--in", min_in, "Input automaton ('-' for stdin)");
    cmd_min->add_option("--out", min_out, "Output path ('-' for stdout)");
    cmd_min->add_option("--algo", min_algo, "valmari | hopcroft | oracle")
        ->check(CLI::IsMember({"valmari", "hopcroft", "oracle"}));
    cmd_min->add_flag("--stats", min_stats, "Print counters to stderr as key=value lines");

    // generate
    std::uint32_t gen_states = 0;
    std::uint32_t gen_alpha = 0;
    double gen_density = 1.0;
    std::optional<std::uint32_t> gen_finals;
    std::uint64_t gen_seed = 1;
    std::string gen_out = "-";
    auto* cmd_gen = app.add_subcommand("generate", "Write a random automaton");
    cmd_gen->add_option("--states", gen_states, "Number of states")->required()->check(CLI::PositiveNumber);
    cmd_gen->add_option("--alphabet", gen_alpha, "Alphabet size")->required()->check(CLI::PositiveNumber);
    cmd_gen->add_option("--density", gen_density, "Fraction of defined transitions")
        ->required()
        ->check(density_range);
    cmd_gen->add_option("--finals", gen_finals, "Number of final states (default states/2)");
    cmd_gen->add_option("--seed", gen_seed, "Generator seed");
    cmd_gen->add_option("--out", gen_out, "Output path ('-' for stdout)");

    // check
    std::vector<std::string> equiv_files;
    std::vector<std::string> iso_files;
    auto* cmd_check = app.add_subcommand("check", "Compare two automata");
    auto* opt_equiv = cmd_check->add_option("--equiv", equiv_files, "Same language")->expected(2);
    auto* opt_iso = cmd_check->add_option("--isomorphic", iso_files, "Isomorphic")->expected(2);
    opt_equiv->excludes(opt_iso);
    cmd_check->require_option(1);

    // bench
    std::string grid_path;
    std::vector<std::string> cell_specs;
    std::uint32_t seeds = 1;
    std::uint64_t first_seed = 1;
    std::vector<std::string> bench_algos;
    std::vector<int> offsets{-1, 0, 1};
    std::string csv_path = "-";
    unsigned jobs = 1;
    std::size_t mem_limit_mb = 0;
    auto* cmd_bench = app.add_subcommand("bench", "Time the minimizers on random automata, CSV output");
    cmd_bench->add_option("--grid", grid_path, "File with one 'n,alpha,p' cell per line");
    cmd_bench->add_option("--cell", cell_specs, "One 'n,alpha,p' cell (repeatable)");
    cmd_bench->add_option("--seeds", seeds, "Seeds per cell")->check(CLI::PositiveNumber);
    cmd_bench->add_option("--first-seed", first_seed, "First seed");
    cmd_bench->add_option("--algo", bench_algos, "valmari | hopcroft | oracle (repeatable, default both fast ones)")
        ->delimiter(',')
        ->check(CLI::IsMember({"valmari", "hopcroft", "oracle"}));
    cmd_bench->add_option("--offsets", offsets, "Final-count offsets d, finals = n/2 + d")->delimiter(',');
    cmd_bench->add_option("--csv", csv_path, "CSV output path ('-' for stdout)");
    cmd_bench->add_option("--jobs", jobs, "Cells run in parallel")->check(CLI::PositiveNumber);
    cmd_bench->add_option("--mem-limit-mb", mem_limit_mb, "Report the baseline as oom above this table size");

    std::vector<const char*> argv;
    argv.reserve(args.size());
    for (const auto& a : args) {
        argv.push_back(a.c_str());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? ok : usage_error;
    }

    try {
        if (*cmd_min) {
            const PtDfa input = load(min_in, in);
            MinimizeResult result{input, {}};
            const Algorithm algo = algorithm_from_string(min_algo);
            if (algo == Algorithm::valmari) {
                result = minimize(input);
            } else if (algo == Algorithm::hopcroft) {
                result = hopcroft_minimize(input);
            } else {
                result.dfa = oracle_minimize(input);
                result.stats.states_in = input.num_states();
                result.stats.transitions_in = input.num_transitions();
                result.stats.alphabet = input.alphabet_size();
                result.stats.states_out = result.dfa.num_states();
                result.stats.transitions_out = result.dfa.num_transitions();
            }
            write_output(min_out, out, serialize(result.dfa));
            if (min_stats) {
                print_stats(err, result.stats);
            }
            return ok;
        }

        if (*cmd_gen) {
            const std::uint32_t k = gen_finals.value_or(gen_states / 2);
            if (k > gen_states) {
                err << "--finals must not exceed --states\n";
                return usage_error;
            }
            const PtDfa dfa = generate({gen_states, gen_alpha, gen_density, k, gen_seed});
            write_output(gen_out, out, serialize(dfa));
            return ok;
        }

        if (*cmd_check) {
            const bool equiv = !equiv_files.empty();
            const auto& files = equiv ? equiv_files : iso_files;
            const PtDfa a = load(files[0], in);
            const PtDfa b = load(files[1], in);
            bool holds = false;
            if (equiv) {
                if (a.alphabet_size() != b.alphabet_size()) {
                    err << "alphabet sizes differ: " << a.alphabet_size() << " vs " << b.alphabet_size() << '\n';
                    return data_error;
                }
                holds = language_equal(a, b);
            } else {
                try {
                    holds = is_isomorphic(a, b);
                } catch (const UnreachableState& e) {
                    throw DataError(e.what());
                }
            }
            return holds ? ok : relation_false;
        }

        if (*cmd_bench) {
            BenchConfig config;
            try {
                if (!grid_path.empty()) {
                    std::ifstream grid(grid_path);
                    if (!grid) {
                        throw DataError("cannot open grid file '" + grid_path + "'");
                    }
                    config.cells = parse_grid(grid);
                }
                for (const auto& spec : cell_specs) {
                    config.cells.push_back(parse_cell(spec));
                }
            } catch (const std::invalid_argument& e) {
                err << e.what() << '\n';
                return usage_error;
            }
            if (config.cells.empty()) {
                err << "bench needs --grid or at least one --cell\n";
                return usage_error;
            }
            if (!bench_algos.empty()) {
                config.algorithms.clear();
                for (const auto& name : bench_algos) {
                    config.algorithms.push_back(algorithm_from_string(name));
                }
            }
            config.final_offsets = offsets;
            config.seeds = seeds;
            config.first_seed = first_seed;
            config.jobs = jobs;
            config.memory_limit_bytes = mem_limit_mb * 1024 * 1024;
            const std::vector<BenchRow> rows = run_bench(config);
            std::ostringstream csv;
            write_csv(csv, rows);
            write_output(csv_path, out, csv.str());
            return ok;
        }
    } catch (const DataError& e) {
        err << e.what() << '\n';
        return data_error;
    } catch (const std::bad_alloc&) {
        err << "out of memory\n";
        return data_error;
    }
    return usage_error;
}

} // namespace ptdfa::cli
