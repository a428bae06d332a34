// Acceptance suite: one check per headline guarantee, one pass/fail line each.
// Every tolerance is pinned here; a nonzero exit means at least one claim
// failed to reproduce.

#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <vector>

#include "ptm/dsl.hpp"
#include "ptm/engine.hpp"
#include "ptm/generators.hpp"
#include "ptm/oracles.hpp"
#include "ptm/quantum.hpp"
#include "support/classical_tm.hpp"
#include "support/demo_machines.hpp"
#include "support/random_machines.hpp"

using namespace ptm;
using Clock = std::chrono::steady_clock;

namespace {

struct Failure {
    std::string reason;
};

void require(bool ok, const std::string& reason) {
    if (!ok) throw Failure{reason};
}

template <typename T>
std::string str(const T& value) {
    std::ostringstream out;
    out << value;
    return out.str();
}

const Symbol kZero{"0"}, kOne{"1"};

std::vector<Symbol> ones(int n) { return std::vector<Symbol>(static_cast<std::size_t>(n), kOne); }

std::set<Symbol> cell(const Configuration& config, std::int64_t pos, const Symbol& blank) {
    return read_symbols(config.tape, pos, blank);
}

Promise machine_verdict(const Machine& m, int n) {
    const RunResult result = run(m, ones(n), 1000);
    require(result.halted, "dj machine did not halt");
    const auto outputs = results(result.final_config, m.blank, n, n, 16);
    require(outputs.size() == 1, "answer cell is not a singleton");
    return *outputs.begin() == "0" ? Promise::Constant : Promise::Balanced;
}

// --- criterion 1 -----------------------------------------------------------

void criterion_branching_golden_trace() {
    const Machine m = ptm::testing::branching_demo_machine();
    const Symbol s0{"s0"}, s1{"s1"};
    const State q1{"q1"}, q2{"q2"};

    const auto started = Clock::now();
    const RunResult result = run(m, {s1, s1}, 100);
    const auto elapsed = Clock::now() - started;

    require(result.trace.size() >= 3, "trace too short");
    const auto& rows = result.trace;

    require(cell(rows[0].config, 0, s0) == std::set<Symbol>{s1} &&
                cell(rows[0].config, 1, s0) == std::set<Symbol>{s1} &&
                rows[0].config.active == std::set<Branch>{Branch{q1, 0}},
            "t=0 row differs from the golden trace");
    require(cell(rows[1].config, 0, s0) == std::set<Symbol>{s0, s1} &&
                cell(rows[1].config, 1, s0) == std::set<Symbol>{s1} &&
                rows[1].config.active == std::set<Branch>{Branch{q2, 0}, Branch{q1, 1}},
            "t=1 row differs from the golden trace");
    require(cell(rows[2].config, 0, s0) == std::set<Symbol>{s0, s1} &&
                cell(rows[2].config, 1, s0) == std::set<Symbol>{s0, s1} &&
                rows[2].config.active == std::set<Branch>{Branch{q2, 1}, Branch{q1, 2}},
            "t=2 row differs from the golden trace");

    require(elapsed < std::chrono::milliseconds(1),
            "run took " + str(std::chrono::duration<double, std::milli>(elapsed).count()) +
                " ms (budget 1 ms)");
}

// --- criterion 2 -----------------------------------------------------------

void criterion_deutsch_golden_trace() {
    const State q1{"q1"}, q2{"q2"}, q3{"q3"}, q4{"q4"};

    const Machine m = deutsch_machine(parse_boolfn("11"));
    const RunResult result = run(m, {kOne}, 100);
    require(result.halted, "deutsch machine did not halt");
    require(result.trace.size() >= 4, "trace too short");
    const auto& rows = result.trace;

    const std::vector<std::pair<std::set<Symbol>, Branch>> expected = {
        {{kOne}, Branch{q1, 0}},
        {{kZero, kOne}, Branch{q2, 0}},
        {{kOne}, Branch{q3, 0}},
        {{kZero}, Branch{q4, 0}},
    };
    for (std::size_t t = 0; t < expected.size(); ++t) {
        require(cell(rows[t].config, 0, m.blank) == expected[t].first,
                "t=" + str(t) + " cell 0 differs from the golden trace");
        require(rows[t].config.active == std::set<Branch>{expected[t].second},
                "t=" + str(t) + " state differs from the golden trace");
    }
    require(cell(result.final_config, 0, m.blank) == std::set<Symbol>{kZero},
            "final cell 0 is not {0}");

    // All four arity-1 functions, exact set equality on the answer cell.
    const std::vector<std::pair<std::string, std::string>> cases = {
        {"00", "0"}, {"11", "0"}, {"01", "1"}, {"10", "1"}};
    for (const auto& [bits, answer] : cases) {
        const Machine machine = deutsch_machine(parse_boolfn(bits));
        const RunResult r = run(machine, {kOne}, 100);
        require(r.halted, "deutsch machine did not halt for f=" + bits);
        require(results(r.final_config, machine.blank, 0, 0, 4) ==
                    std::set<std::string>{answer},
                "f=" + bits + " output cell is not {" + answer + "}");
    }
}

// --- criterion 3 -----------------------------------------------------------

void criterion_exhaustive_agreement() {
    const auto started = Clock::now();
    int checked = 0;
    for (int n = 1; n <= 3; ++n) {
        for (const BoolFn& f : promised_functions(n)) {
            const Promise expected = classify_fn(f);
            const Promise by_machine = machine_verdict(dj_machine(n, f), n);
            const CircuitOutcome by_circuit = dj_circuit(n, f);
            const ClassicalReport by_classical = classical_classify(f);

            require(by_machine == expected, "dj machine disagrees at n=" + str(n));
            require(by_circuit.classification == expected,
                    "dj circuit disagrees at n=" + str(n));
            require(by_classical.classification == expected,
                    "classical classifier disagrees at n=" + str(n));
            require(std::abs(by_circuit.probability - 1.0) <= 1e-9,
                    "dj circuit probability " + str(by_circuit.probability) + " is not 1");
            ++checked;
        }
    }
    require(checked == 4 + 8 + 72, "expected 84 promised functions, saw " + str(checked));
    const std::chrono::duration<double> elapsed = Clock::now() - started;
    require(elapsed.count() < 10.0,
            "agreement sweep took " + str(elapsed.count()) + " s (budget 10 s)");
}

// --- criterion 4 -----------------------------------------------------------

void criterion_efficiency_gap() {
    for (int n = 1; n <= 10; ++n) {
        const std::int64_t bound = (std::int64_t{1} << (n - 1)) + 1;
        for (int value = 0; value <= 1; ++value) {
            const BoolFn f = const_fn(n, value);
            const ClassicalReport report = classical_classify(f);
            require(report.classification == Promise::Constant, "constant misclassified");
            require(report.evaluations_used == bound,
                    "n=" + str(n) + ": classical used " + str(report.evaluations_used) +
                        " evaluations, expected " + str(bound));

            const Machine m = dj_machine(n, f);
            const RunResult result = run(m, ones(n), 1000);
            require(result.halted && result.halt_time == 3 * n + 5,
                    "n=" + str(n) + ": run took " + str(result.halt_time) +
                        " steps, expected " + str(3 * n + 5));

            // The evaluation block fires in exactly one time step.
            const std::vector<int> write_ids = dj_evaluation_write_ids(m);
            std::set<std::int64_t> times;
            int firings = 0;
            for (const StepRecord& record : result.trace) {
                for (const FiredInstance& instance : record.fired) {
                    for (const int id : write_ids) {
                        if (instance.instruction_id == id) {
                            times.insert(record.config.time);
                            ++firings;
                        }
                    }
                }
            }
            require(times.size() == 1,
                    "evaluation writes spread over " + str(times.size()) + " steps");
            require(firings == static_cast<int>(write_ids.size()),
                    "each evaluation write must fire exactly once");
        }
    }
}

// --- criterion 5 -----------------------------------------------------------

void criterion_quantum_closed_forms() {
    const Gate h = hadamard();
    require(h.is_unitary(1e-9), "hadamard is not unitary");

    // H followed by H is the identity, to 1e-12.
    for (std::size_t row = 0; row < 2; ++row) {
        for (std::size_t col = 0; col < 2; ++col) {
            Amplitude dot{0, 0};
            for (std::size_t k = 0; k < 2; ++k) dot += h.at(row, k) * h.at(k, col);
            const Amplitude expected = row == col ? Amplitude{1, 0} : Amplitude{0, 0};
            require(std::abs(dot - expected) <= 1e-12, "H*H differs from the identity");
        }
    }

    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    auto plus_minus = [&](int sign) {
        StateVector sv;
        sv.num_qubits = 1;
        sv.amps = {Amplitude{inv_sqrt2, 0}, Amplitude{sign >= 0 ? inv_sqrt2 : -inv_sqrt2, 0}};
        return sv;
    };

    for (const std::string bits : {"00", "01", "10", "11"}) {
        const BoolFn f = parse_boolfn(bits);
        const bool constant = f.eval(0) == f.eval(1);
        const Gate uf = oracle_uf(1, f);
        require(uf.is_unitary(1e-9), "U_f is not unitary for f=" + bits);

        StateVector sv = StateVector::basis(2, 0b01);
        sv = apply(h, sv, {0});
        sv = apply(h, sv, {1});
        const StateVector psi1 = tensor(plus_minus(+1), plus_minus(-1));
        require(std::abs(overlap_magnitude(sv, psi1) - 1.0) <= 1e-9,
                "psi_1 differs from its closed form for f=" + bits);

        sv = apply(uf, sv, {0, 1});
        const StateVector psi2 = tensor(plus_minus(constant ? +1 : -1), plus_minus(-1));
        require(std::abs(overlap_magnitude(sv, psi2) - 1.0) <= 1e-9,
                "psi_2 differs from its closed form for f=" + bits);

        sv = apply(h, sv, {0});
        const StateVector psi3 =
            tensor(StateVector::basis(1, constant ? 0 : 1), plus_minus(-1));
        require(std::abs(overlap_magnitude(sv, psi3) - 1.0) <= 1e-9,
                "psi_3 differs from its closed form for f=" + bits);
    }

    // Larger oracles stay unitary too.
    for (int n = 2; n <= 4; ++n) {
        require(oracle_uf(n, parity_fn(n)).is_unitary(1e-9), "parity oracle is not unitary");
        require(oracle_uf(n, const_fn(n, 1)).is_unitary(1e-9), "constant oracle is not unitary");
    }
}

// --- criterion 6 -----------------------------------------------------------

void criterion_non_representability() {
    const State q1{"q1"}, q2{"q2"};
    const Symbol s0{"s0"}, s1{"s1"};

    require(!product_representable({{q1, s0}, {q2, s1}}).representable,
            "the entangled-style pair set must not be representable");

    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    StateVector bell;
    bell.num_qubits = 2;
    bell.amps = {Amplitude{inv_sqrt2, 0}, {}, {}, Amplitude{inv_sqrt2, 0}};
    require(is_entangled_2qubit(bell, 1e-9), "the Bell state must test entangled");

    const std::vector<StateSymbolPair> universe = {
        {q1, s0}, {q1, s1}, {q2, s0}, {q2, s1}};
    int supports = 0;
    for (unsigned mask = 1; mask < (1u << 4); ++mask) {
        PairSet pairs;
        StateVector sv;
        sv.num_qubits = 2;
        sv.amps.assign(4, Amplitude{0, 0});
        const int size = __builtin_popcount(mask);
        for (unsigned bit = 0; bit < 4; ++bit) {
            if (mask & (1u << bit)) {
                pairs.insert(universe[bit]);
                sv.amps[bit] = Amplitude{1.0 / std::sqrt(static_cast<double>(size)), 0};
            }
        }
        if (product_representable(pairs).representable) {
            require(!is_entangled_2qubit(sv, 1e-9),
                    "a representable support produced an entangled uniform state");
        }
        ++supports;
    }
    require(supports == 15, "expected 15 nonempty supports");

    // The witness that the converse direction fails: the Bell support is
    // both non-representable and entangled.
    require(!product_representable({{q1, s0}, {q2, s1}}).representable &&
                is_entangled_2qubit(bell, 1e-9),
            "Bell support must witness the gap");
}

// --- criterion 7 -----------------------------------------------------------

void criterion_classical_degeneration() {
    std::mt19937_64 rng(0x5eed5eed);
    for (int round = 0; round < 1000; ++round) {
        const Machine m = ptm::testing::random_consistent_machine(rng);
        require(contradictory_pairs(m).empty(), "generator produced a contradictory machine");
        const auto input = ptm::testing::random_input(rng, m, 5);

        const RunResult result = run(m, input, 100);
        ptm::testing::ClassicalTm oracle(m, input);

        for (std::size_t t = 0;; ++t) {
            require(t < result.trace.size(), "trace ended unexpectedly");
            const Configuration& config = result.trace[t].config;
            require(config.active.size() <= 1, "more than one branch in a consistent machine");
            for (const auto& [pos, symbols] : config.tape.cells) {
                require(symbols.size() == 1, "non-singleton cell in a consistent machine");
            }
            require(!config.active.empty(), "engine went off while the oracle still runs");

            require(config.active.begin()->state == oracle.state() &&
                        config.active.begin()->position == oracle.position(),
                    "head mismatch at t=" + str(t));
            require(config.tape.cells.size() == oracle.tape().size(),
                    "tape extent mismatch at t=" + str(t));
            for (const auto& [pos, symbol] : oracle.tape()) {
                require(read_symbols(config.tape, pos, m.blank) == std::set<Symbol>{symbol},
                        "tape mismatch at t=" + str(t));
            }

            if (!oracle.step()) {
                require(result.halted, "oracle halted but the engine did not");
                const std::int64_t expected =
                    t == 0 ? 0 : static_cast<std::int64_t>(t) + 1;
                require(result.halt_time == expected, "halt time mismatch");
                break;
            }
            if (t + 1 >= result.trace.size()) {
                require(!result.halted, "engine halted but the oracle still runs");
                break;
            }
        }
    }
}

// --- criterion 8 -----------------------------------------------------------

void criterion_dsl_round_trip() {
    // Every generator output.
    std::vector<Machine> machines;
    for (const std::string bits : {"00", "01", "10", "11"}) {
        machines.push_back(deutsch_machine(parse_boolfn(bits)));
    }
    for (int n = 1; n <= 3; ++n) {
        for (const BoolFn& f : promised_functions(n)) {
            machines.push_back(dj_machine(n, f));
        }
    }
    machines.push_back(dj_machine(6, parity_fn(6)));
    for (const Machine& m : machines) {
        const ParseResult reparsed = parse_machine(serialize_machine(m));
        require(reparsed.ok(), "generator output failed to reparse");
        require(*reparsed.machine == m, "generator output did not round-trip");
    }

    // 500 randomized machines.
    std::mt19937_64 rng(0xA11CE);
    for (int round = 0; round < 500; ++round) {
        const Machine m = ptm::testing::random_machine(rng);
        const ParseResult reparsed = parse_machine(serialize_machine(m));
        require(reparsed.ok(), "random machine failed to reparse");
        require(*reparsed.machine == m, "random machine did not round-trip");
    }

    // Each violation class yields its designated kind at the right span.
    struct Violation {
        std::string text;
        ParseErrorKind kind;
        SourceSpan span;
    };
    const std::string prologue =
        "machine t\nalphabet s0\nblank s0\nstates q1\nstart q1 at 0\n";
    const std::vector<Violation> violations = {
        {prologue + "instr q1 s0 R\n", ParseErrorKind::Syntax, {6, 14, 0}},
        {prologue + "instr q1 zz R q1\n", ParseErrorKind::UnknownSymbol, {6, 10, 2}},
        {prologue + "instr q9 s0 R q1\n", ParseErrorKind::UnknownState, {6, 7, 2}},
        {"machine t\nalphabet s0 L\nblank s0\nstates q1\nstart q1 at 0\ninstr q1 s0 R q1\n",
         ParseErrorKind::ReservedToken, {2, 13, 1}},
        {"machine t\nalphabet s0\nalphabet s1\nblank s0\nstates q1\nstart q1 at 0\n"
         "instr q1 s0 R q1\n",
         ParseErrorKind::DuplicateDeclaration, {3, 1, 8}},
        {"machine t\nalphabet s0\nstates q1\nstart q1 at 0\ninstr q1 s0 R q1\n",
         ParseErrorKind::MissingDeclaration, {1, 1, 7}},
    };
    for (const Violation& violation : violations) {
        const ParseResult result = parse_machine(violation.text);
        require(!result.ok(), "violation unexpectedly parsed");
        bool found = false;
        for (const ParseError& error : result.errors) {
            if (error.kind == violation.kind && error.span == violation.span) found = true;
        }
        require(found, "missing " + to_string(violation.kind) + " at " +
                           str(violation.span.line) + ":" + str(violation.span.column));
    }
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<void()>>> criteria = {
        {"golden trace: contradictory-instruction branching demo", criterion_branching_golden_trace},
        {"golden trace: Deutsch machine and all arity-1 outputs", criterion_deutsch_golden_trace},
        {"Deutsch-Jozsa exhaustive three-way agreement (n <= 3)", criterion_exhaustive_agreement},
        {"efficiency gap: 2^(n-1)+1 classical evaluations vs 3n+5-step run",
         criterion_efficiency_gap},
        {"quantum closed forms, H involution, unitarity", criterion_quantum_closed_forms},
        {"one-cell non-representability of the entangled support", criterion_non_representability},
        {"classical degeneration on 1000 random consistent machines",
         criterion_classical_degeneration},
        {"DSL round trip and diagnostic classes", criterion_dsl_round_trip},
    };

    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto started = Clock::now();
        std::string reason;
        try {
            criteria[i].second();
        } catch (const Failure& failure) {
            reason = failure.reason;
        } catch (const std::exception& e) {
            reason = std::string("unexpected exception: ") + e.what();
        }
        const std::chrono::duration<double, std::milli> elapsed = Clock::now() - started;
        std::cout << (reason.empty() ? "[PASS]" : "[FAIL]") << " criterion " << i + 1 << ": "
                  << criteria[i].first << " (" << std::fixed << std::setprecision(1)
                  << elapsed.count() << " ms)";
        if (!reason.empty()) {
            std::cout << " -- " << reason;
            ++failed;
        }
        std::cout << "\n";
    }
    if (failed != 0) {
        std::cout << failed << " criterion(s) failed\n";
        return 1;
    }
    std::cout << "all acceptance criteria passed\n";
    return 0;
}
