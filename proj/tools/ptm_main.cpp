// Command-line front end: run .ptm machines with figure-style or JSON
// traces, generate Deutsch / Deutsch-Jozsa machines, run the quantum
// reference circuits, and cross-check all three backends against each other.

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "ptm/dsl.hpp"
#include "ptm/engine.hpp"
#include "ptm/generators.hpp"
#include "ptm/oracles.hpp"
#include "ptm/quantum.hpp"
#include "ptm/trace_render.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitStepLimit = 2;
constexpr int kExitDisagreement = 3;

std::int64_t default_max_steps() {
    if (const char* env = std::getenv("PTM_MAX_STEPS")) {
        try {
            const std::int64_t value = std::stoll(env);
            if (value > 0) return value;
        } catch (const std::exception&) {
        }
        std::cerr << "warning: ignoring invalid PTM_MAX_STEPS '" << env << "'\n";
    }
    return ptm::kDefaultMaxSteps;
}

std::optional<std::string> read_source(const std::string& path) {
    if (path == "-") {
        std::ostringstream buffer;
        buffer << std::cin.rdbuf();
        return buffer.str();
    }
    std::ifstream file(path, std::ios::binary);
    if (!file) return std::nullopt;
    std::ostringstream buffer;
    buffer << file.rdbuf();
    return buffer.str();
}

std::optional<ptm::Machine> load_machine(const std::string& path) {
    const auto source = read_source(path);
    if (!source) {
        std::cerr << "error: cannot read '" << path << "'\n";
        return std::nullopt;
    }
    ptm::ParseResult parsed = ptm::parse_machine(*source);
    if (!parsed.ok()) {
        for (const ptm::ParseError& error : parsed.errors) {
            std::cerr << path << ":" << error.span.line << ":" << error.span.column << ": "
                      << to_string(error.kind) << ": " << error.message << "\n";
        }
        return std::nullopt;
    }
    return std::move(parsed.machine);
}

// Input symbols are whitespace-separated names; a token that is not itself a
// symbol is expanded character by character (so "--input 11" works for the
// {0,1} alphabet).
std::optional<std::vector<ptm::Symbol>> parse_input(const ptm::Machine& machine,
                                                    const std::string& text) {
    std::vector<ptm::Symbol> input;
    std::istringstream stream(text);
    std::string token;
    while (stream >> token) {
        if (machine.alphabet.count(ptm::Symbol{token}) > 0) {
            input.push_back(ptm::Symbol{token});
            continue;
        }
        bool expandable = true;
        for (char c : token) {
            if (machine.alphabet.count(ptm::Symbol{std::string(1, c)}) == 0) {
                expandable = false;
                break;
            }
        }
        if (!expandable) {
            std::cerr << "error: input symbol '" << token << "' is not in the alphabet\n";
            return std::nullopt;
        }
        for (char c : token) input.push_back(ptm::Symbol{std::string(1, c)});
    }
    return input;
}

struct WindowSpec {
    std::int64_t first = 0;
    std::int64_t last = 0;
};

std::optional<WindowSpec> parse_window(const std::string& text) {
    const auto colon = text.find(':');
    try {
        if (colon == std::string::npos) {
            const std::int64_t pos = std::stoll(text);
            return WindowSpec{pos, pos};
        }
        WindowSpec window{std::stoll(text.substr(0, colon)), std::stoll(text.substr(colon + 1))};
        if (window.first > window.last) return std::nullopt;
        return window;
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

int cmd_run(const std::string& path, const std::string& input_text, std::int64_t max_steps,
            const std::string& format, const std::string& window_text, std::uint64_t cap) {
    const auto machine = load_machine(path);
    if (!machine) return kExitUsage;
    const auto input = parse_input(*machine, input_text);
    if (!input) return kExitUsage;

    ptm::RunResult result;
    try {
        result = ptm::run(*machine, *input, max_steps);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    std::optional<std::set<std::string>> outputs;
    if (!window_text.empty()) {
        const auto window = parse_window(window_text);
        if (!window) {
            std::cerr << "error: bad window '" << window_text << "' (expected FIRST:LAST)\n";
            return kExitUsage;
        }
        try {
            outputs = ptm::results(result.final_config, machine->blank, window->first,
                                   window->last, cap);
        } catch (const ptm::CapExceeded& e) {
            std::cerr << "error: " << e.what() << "\n";
            return kExitUsage;
        }
    }

    if (format == "json") {
        std::cout << ptm::trace_document(*machine, result, outputs).dump(2) << "\n";
    } else {
        std::cout << ptm::ascii_trace(*machine, result, outputs);
    }
    return result.halted ? kExitOk : kExitStepLimit;
}

int cmd_gen(const std::string& kind, const std::string& table, int n) {
    try {
        if (kind == "deutsch") {
            std::cout << ptm::serialize_machine(ptm::deutsch_machine(ptm::parse_boolfn(table, 1)));
        } else {
            const ptm::BoolFn f = ptm::parse_boolfn(table, n);
            std::cout << ptm::serialize_machine(ptm::dj_machine(f.arity, f));
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitOk;
}

int cmd_compare(int n, const std::string& table, std::int64_t max_steps) {
    try {
        const ptm::BoolFn f = ptm::parse_boolfn(table, n);
        n = f.arity;

        const ptm::Machine machine = ptm::dj_machine(n, f);
        const std::vector<ptm::Symbol> input(static_cast<std::size_t>(n), ptm::Symbol{"1"});
        const ptm::RunResult run_result = ptm::run(machine, input, max_steps);
        if (!run_result.halted) {
            std::cerr << "error: machine exceeded the step limit\n";
            return kExitStepLimit;
        }
        const auto outputs = ptm::results(run_result.final_config, machine.blank, n, n, 16);
        const ptm::Promise machine_says =
            *outputs.begin() == "0" ? ptm::Promise::Constant : ptm::Promise::Balanced;

        const ptm::CircuitOutcome circuit = ptm::dj_circuit(n, f);
        const ptm::ClassicalReport classical = ptm::classical_classify(f);

        std::cout << "n = " << n << "  f = " << table << "\n";
        std::cout << std::left << std::setw(11) << "backend" << std::setw(10)
                  << "verdict" << "detail\n";
        std::cout << std::left << std::setw(11) << "ptm" << std::setw(10)
                  << to_string(machine_says) << "halted at t = " << run_result.halt_time << "\n";
        std::cout << std::left << std::setw(11) << "quantum" << std::setw(10)
                  << to_string(circuit.classification) << "probability " << std::fixed
                  << std::setprecision(6) << circuit.probability << "\n";
        std::cout << std::left << std::setw(11) << "classical" << std::setw(10)
                  << to_string(classical.classification) << classical.evaluations_used
                  << " evaluations (worst case " << classical.worst_case_bound << ")\n";

        const bool agree = machine_says == circuit.classification &&
                           machine_says == classical.classification;
        std::cout << "agreement: " << (agree ? "yes" : "NO") << "\n";
        return agree ? kExitOk : kExitDisagreement;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}

int cmd_check_product(const std::string& pairs_text) {
    ptm::PairSet pairs;
    std::istringstream stream(pairs_text);
    std::string item;
    while (std::getline(stream, item, ',')) {
        const auto colon = item.find(':');
        if (colon == std::string::npos || colon == 0 || colon + 1 == item.size()) {
            std::cerr << "error: bad pair '" << item << "' (expected STATE:SYMBOL)\n";
            return kExitUsage;
        }
        pairs.insert({ptm::State{item.substr(0, colon)}, ptm::Symbol{item.substr(colon + 1)}});
    }
    if (pairs.empty()) {
        std::cerr << "error: no pairs given\n";
        return kExitUsage;
    }

    const ptm::ProductCheck check = ptm::product_representable(pairs);
    if (check.representable) {
        std::cout << "representable: " << ptm::set_to_string(check.factors->states) << " x "
                  << ptm::set_to_string(check.factors->symbols) << "\n";
    } else {
        std::cout << "not representable\n";
    }
    return kExitOk;
}

int cmd_quantum(int n, const std::string& table, int samples, std::uint64_t seed) {
    try {
        const ptm::BoolFn f = ptm::parse_boolfn(table, n);
        n = f.arity;
        const ptm::CircuitOutcome outcome =
            n == 1 ? ptm::deutsch_circuit(f) : ptm::dj_circuit(n, f);

        std::cout << "circuit: " << (n == 1 ? "deutsch" : "deutsch-jozsa") << " (n = " << n
                  << ")\n";
        std::cout << "classification: " << to_string(outcome.classification) << "\n";
        std::cout << "probability: " << std::fixed << std::setprecision(6)
                  << outcome.probability << "\n";
        std::cout << "distribution:\n";
        for (const auto& [bits, probability] : outcome.distribution) {
            std::cout << "  " << bits << " -> " << std::fixed << std::setprecision(6)
                      << probability << "\n";
        }

        if (samples > 0) {
            std::mt19937_64 rng(seed);
            std::uniform_real_distribution<double> uniform(0.0, 1.0);
            std::cout << "samples:";
            for (int i = 0; i < samples; ++i) {
                double draw = uniform(rng);
                std::string picked = outcome.distribution.rbegin()->first;
                for (const auto& [bits, probability] : outcome.distribution) {
                    if (draw < probability) {
                        picked = bits;
                        break;
                    }
                    draw -= probability;
                }
                std::cout << ' ' << picked;
            }
            std::cout << "\n";
        }
        return kExitOk;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"paraconsistent Turing machine toolkit"};
    app.require_subcommand(1);

    // run
    std::string run_file;
    std::string run_input;
    std::int64_t max_steps = default_max_steps();
    std::string run_format = "ascii";
    std::string run_window;
    std::uint64_t run_cap = 65536;
    CLI::App* run_cmd = app.add_subcommand("run", "run a .ptm machine on an input");
    run_cmd->add_option("file", run_file, "machine file ('-' for stdin)")->required();
    run_cmd->add_option("--input", run_input, "input symbols, e.g. \"s1 s1\" or \"11\"");
    run_cmd->add_option("--max-steps", max_steps, "step limit (or env PTM_MAX_STEPS)");
    run_cmd->add_option("--format", run_format, "ascii or json")
        ->check(CLI::IsMember({"ascii", "json"}));
    run_cmd->add_option("--window", run_window, "result window FIRST:LAST");
    run_cmd->add_option("--cap", run_cap, "max number of results to enumerate");

    // gen
    std::string gen_kind;
    std::string gen_table;
    int gen_n = 0;
    CLI::App* gen_cmd = app.add_subcommand("gen", "generate a machine as .ptm text");
    gen_cmd->add_option("kind", gen_kind, "deutsch or dj")
        ->required()
        ->check(CLI::IsMember({"deutsch", "dj"}));
    gen_cmd->add_option("--f", gen_table, "truth table bits or const0/const1/parity")
        ->required();
    gen_cmd->add_option("--n", gen_n, "arity (required for dj builtins)");

    // compare
    int cmp_n = 0;
    std::string cmp_table;
    CLI::App* cmp_cmd = app.add_subcommand("compare", "run all three backends and cross-check");
    cmp_cmd->add_option("--n", cmp_n, "arity");
    cmp_cmd->add_option("--f", cmp_table, "truth table bits or builtin name")->required();

    // check-product
    std::string product_pairs;
    CLI::App* product_cmd =
        app.add_subcommand("check-product", "test one-cell product representability");
    product_cmd->add_option("pairs", product_pairs, "comma-separated STATE:SYMBOL pairs")
        ->required();

    // quantum
    int q_n = 0;
    std::string q_table;
    int q_samples = 0;
    std::uint64_t q_seed = 1;
    CLI::App* quantum_cmd = app.add_subcommand("quantum", "run the quantum reference circuit");
    quantum_cmd->add_option("--n", q_n, "arity");
    quantum_cmd->add_option("--f", q_table, "truth table bits or builtin name")->required();
    quantum_cmd->add_option("--samples", q_samples, "draw this many seeded samples");
    quantum_cmd->add_option("--seed", q_seed, "sampler seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    if (run_cmd->parsed()) {
        return cmd_run(run_file, run_input, max_steps, run_format, run_window, run_cap);
    }
    if (gen_cmd->parsed()) return cmd_gen(gen_kind, gen_table, gen_n);
    if (cmp_cmd->parsed()) return cmd_compare(cmp_n, cmp_table, max_steps);
    if (product_cmd->parsed()) return cmd_check_product(product_pairs);
    if (quantum_cmd->parsed()) return cmd_quantum(q_n, q_table, q_samples, q_seed);
    return kExitUsage;
}
