#include "ptm/generators.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace ptm {

namespace {

const Symbol kZero{"0"};
const Symbol kOne{"1"};

Symbol bit_symbol(int bit) { return bit ? kOne : kZero; }

std::string table_bits(const BoolFn& f) {
    std::string bits;
    bits.reserve(f.table.size());
    for (auto b : f.table) bits.push_back(b ? '1' : '0');
    return bits;
}

Instruction make_instr(int id, State premise_state, Condition state_cond, Symbol premise_symbol,
                       Condition symbol_cond, Action action, State next_state) {
    return Instruction{id, std::move(premise_state), state_cond, std::move(premise_symbol),
                       symbol_cond, std::move(action), std::move(next_state)};
}

}  // namespace

ResidualAutomaton residual_automaton(const BoolFn& f) {
    ResidualAutomaton automaton;
    automaton.arity = f.arity;
    automaton.levels.push_back({f});
    for (int level = 0; level < f.arity; ++level) {
        std::vector<BoolFn> next;
        for (const BoolFn& residual : automaton.levels.back()) {
            next.push_back(residual.cofactor(0));
            next.push_back(residual.cofactor(1));
        }
        std::sort(next.begin(), next.end(),
                  [](const BoolFn& a, const BoolFn& b) { return a.table < b.table; });
        next.erase(std::unique(next.begin(), next.end()), next.end());
        automaton.levels.push_back(std::move(next));
    }
    for (int level = 0; level < f.arity; ++level) {
        const auto& here = automaton.levels[static_cast<std::size_t>(level)];
        const auto& below = automaton.levels[static_cast<std::size_t>(level) + 1];
        std::vector<std::array<int, 2>> row;
        row.reserve(here.size());
        for (const BoolFn& residual : here) {
            std::array<int, 2> targets{};
            for (int bit = 0; bit < 2; ++bit) {
                const BoolFn sub = residual.cofactor(bit);
                const auto it = std::find(below.begin(), below.end(), sub);
                targets[static_cast<std::size_t>(bit)] =
                    static_cast<int>(std::distance(below.begin(), it));
            }
            row.push_back(targets);
        }
        automaton.transitions.push_back(std::move(row));
    }
    return automaton;
}

Machine deutsch_machine(const BoolFn& f) {
    if (f.arity != 1) {
        throw std::invalid_argument("deutsch_machine needs an arity-1 function");
    }
    const State q1{"q1"}, q2{"q2"}, q3{"q3"}, q4{"q4"};

    Machine m;
    m.name = "deutsch_" + table_bits(f);
    m.states = {q1, q2, q3, q4};
    m.alphabet = {kZero, kOne};
    m.blank = kZero;
    m.start_state = q1;
    m.start_position = 0;
    m.instructions = {
        make_instr(0, q1, Condition::Any, kOne, Condition::Any, Action::write(kZero), q2),
        make_instr(1, q1, Condition::Any, kOne, Condition::Any, Action::write(kOne), q2),
        make_instr(2, q2, Condition::Any, kZero, Condition::Any,
                   Action::write(bit_symbol(f.eval(0))), q3),
        make_instr(3, q2, Condition::Any, kOne, Condition::Any,
                   Action::write(bit_symbol(f.eval(1))), q3),
        make_instr(4, q3, Condition::Any, kZero, Condition::Unique, Action::write(kZero), q4),
        make_instr(5, q3, Condition::Any, kOne, Condition::Unique, Action::write(kZero), q4),
        make_instr(6, q3, Condition::Any, kOne, Condition::Multiple, Action::write(kOne), q4),
    };
    validate(m);
    return m;
}

Machine dj_machine(int n, const BoolFn& f) {
    if (n < 1 || f.arity != n) {
        throw std::invalid_argument("dj_machine needs n >= 1 and a matching arity");
    }
    if (classify_fn(f) == Promise::Neither) {
        throw std::invalid_argument("dj_machine requires the promise: f constant or balanced");
    }

    const ResidualAutomaton automaton = residual_automaton(f);
    const State q1{"q1"}, q2{"q2"}, q3{"q3"}, q4{"q4"}, test{"qT"}, halt{"qH"};

    auto level_state = [&](int level, int index) -> State {
        if (level == 0) return q4;
        return State{"f" + std::to_string(level) + "_" + std::to_string(index)};
    };

    Machine m;
    m.name = "dj" + std::to_string(n) + "_" + table_bits(f);
    m.alphabet = {kZero, kOne};
    m.blank = kZero;
    m.start_state = q1;
    m.start_position = 0;
    m.states = {q1, q2, q3, q4, test, halt};
    for (int level = 1; level <= n; ++level) {
        const auto count = automaton.levels[static_cast<std::size_t>(level)].size();
        for (std::size_t j = 0; j < count; ++j) {
            m.states.insert(level_state(level, static_cast<int>(j)));
        }
    }

    int id = 0;
    // Superposition generation, verbatim: mix every input cell, then sweep
    // back to the first cell.
    m.instructions.push_back(
        make_instr(id++, q1, Condition::Any, kOne, Condition::Any, Action::write(kZero), q2));
    m.instructions.push_back(
        make_instr(id++, q1, Condition::Any, kOne, Condition::Any, Action::write(kOne), q2));
    m.instructions.push_back(make_instr(id++, q1, Condition::Any, kOne, Condition::Any,
                                        Action::move(MoveDir::Right), q1));
    m.instructions.push_back(make_instr(id++, q1, Condition::Any, kZero, Condition::Any,
                                        Action::move(MoveDir::Left), q3));
    m.instructions.push_back(make_instr(id++, q3, Condition::Any, kOne, Condition::Any,
                                        Action::move(MoveDir::Left), q3));
    m.instructions.push_back(make_instr(id++, q3, Condition::Any, kZero, Condition::Unique,
                                        Action::move(MoveDir::Right), q4));

    // Function evaluation: walk the residual automaton over the mixed cells,
    // one level per tape position, then write every reachable constant at
    // cell n in a single step.
    for (int level = 0; level < n; ++level) {
        const auto& residuals = automaton.levels[static_cast<std::size_t>(level)];
        for (std::size_t j = 0; j < residuals.size(); ++j) {
            for (int bit = 0; bit < 2; ++bit) {
                const int target =
                    automaton.transitions[static_cast<std::size_t>(level)][j]
                                         [static_cast<std::size_t>(bit)];
                m.instructions.push_back(make_instr(
                    id++, level_state(level, static_cast<int>(j)), Condition::Any,
                    bit_symbol(bit), Condition::Any, Action::move(MoveDir::Right),
                    level_state(level + 1, target)));
            }
        }
    }
    const auto& constants = automaton.levels[static_cast<std::size_t>(n)];
    for (std::size_t j = 0; j < constants.size(); ++j) {
        m.instructions.push_back(make_instr(
            id++, level_state(n, static_cast<int>(j)), Condition::Any, kZero, Condition::Any,
            Action::write(bit_symbol(constants[j].table[0])), test));
    }

    // Single-vs-multiple test on the written values, fresh states.
    m.instructions.push_back(
        make_instr(id++, test, Condition::Any, kZero, Condition::Unique, Action::write(kZero),
                   halt));
    m.instructions.push_back(
        make_instr(id++, test, Condition::Any, kOne, Condition::Unique, Action::write(kZero),
                   halt));
    m.instructions.push_back(
        make_instr(id++, test, Condition::Any, kOne, Condition::Multiple, Action::write(kOne),
                   halt));

    validate(m);
    return m;
}

std::vector<int> dj_evaluation_write_ids(const Machine& machine) {
    std::vector<int> ids;
    for (const Instruction& instr : machine.instructions) {
        if (instr.action.is_write() && instr.next_state == State{"qT"}) {
            ids.push_back(instr.id);
        }
    }
    return ids;
}

}  // namespace ptm
