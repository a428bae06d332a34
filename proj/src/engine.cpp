#include "ptm/engine.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace ptm {

CapExceeded::CapExceeded(std::uint64_t cardinality, std::uint64_t cap)
    : std::runtime_error("result cardinality " + std::to_string(cardinality) +
                         " exceeds cap " + std::to_string(cap)),
      cardinality_(cardinality),
      cap_(cap) {}

std::set<Symbol> read_symbols(const Tape& tape, std::int64_t position, const Symbol& blank) {
    auto it = tape.cells.find(position);
    if (it == tape.cells.end()) {
        return {blank};
    }
    return it->second;
}

namespace {

void normalize(Tape& tape, const Symbol& blank) {
    for (auto it = tape.cells.begin(); it != tape.cells.end();) {
        if (it->second.size() == 1 && *it->second.begin() == blank) {
            it = tape.cells.erase(it);
        } else {
            ++it;
        }
    }
}

std::map<std::int64_t, std::set<State>> states_by_position(const Configuration& config) {
    std::map<std::int64_t, std::set<State>> result;
    for (const Branch& branch : config.active) {
        result[branch.position].insert(branch.state);
    }
    return result;
}

}  // namespace

std::vector<FiredInstance> fired_set(const Machine& machine, const Configuration& config) {
    std::vector<FiredInstance> fired;
    const auto local_states = states_by_position(config);
    for (const Branch& branch : config.active) {
        const std::set<State>& states_here = local_states.at(branch.position);
        const std::set<Symbol> symbols_here =
            read_symbols(config.tape, branch.position, machine.blank);
        for (const Instruction& instr : machine.instructions) {
            if (instr.premise_state != branch.state) continue;
            if (!condition_satisfied(instr.state_cond, branch.state, states_here)) continue;
            if (!condition_satisfied(instr.symbol_cond, instr.premise_symbol, symbols_here)) {
                continue;
            }
            fired.push_back(FiredInstance{instr.id, branch.position, branch.state,
                                          instr.premise_symbol});
        }
    }
    std::sort(fired.begin(), fired.end());
    return fired;
}

std::pair<Configuration, std::vector<FiredInstance>> step(const Machine& machine,
                                                          const Configuration& config) {
    std::vector<FiredInstance> fired = fired_set(machine, config);

    Configuration next;
    next.time = config.time + 1;
    next.tape = config.tape;

    std::map<std::int64_t, std::set<Symbol>> written;
    for (const FiredInstance& instance : fired) {
        const Instruction& instr = machine.instructions[static_cast<std::size_t>(
            instance.instruction_id)];
        if (instr.action.is_write()) {
            written[instance.position].insert(instr.action.symbol);
            next.active.insert(Branch{instr.next_state, instance.position});
        } else {
            const std::int64_t delta = instr.action.dir == MoveDir::Right ? 1 : -1;
            next.active.insert(Branch{instr.next_state, instance.position + delta});
        }
    }
    // Written cells are replaced wholesale by the union of this step's writes.
    for (auto& [position, symbols] : written) {
        next.tape.cells[position] = std::move(symbols);
    }
    normalize(next.tape, machine.blank);
    return {std::move(next), std::move(fired)};
}

Configuration initial_configuration(const Machine& machine, const std::vector<Symbol>& input) {
    Configuration config;
    config.time = 0;
    for (std::size_t i = 0; i < input.size(); ++i) {
        config.tape.cells[static_cast<std::int64_t>(i)] = {input[i]};
    }
    normalize(config.tape, machine.blank);
    config.active.insert(Branch{machine.start_state, machine.start_position});
    return config;
}

RunResult run(const Machine& machine, const std::vector<Symbol>& input,
              std::int64_t max_steps) {
    validate(machine);
    if (max_steps <= 0) {
        throw std::invalid_argument("max_steps must be positive");
    }
    for (const Symbol& symbol : input) {
        if (machine.alphabet.count(symbol) == 0) {
            throw std::invalid_argument("input symbol '" + symbol.name +
                                        "' is not in the alphabet");
        }
    }

    RunResult result;
    result.step_limit = max_steps;

    Configuration config = initial_configuration(machine, input);
    result.trace.push_back(StepRecord{config, {}});

    // A machine that cannot execute anything at all never starts; the
    // initial configuration is final.
    if (fired_set(machine, config).empty()) {
        result.halted = true;
        result.halt_time = 0;
        result.final_config = std::move(config);
        return result;
    }

    std::int64_t steps_taken = 0;
    while (true) {
        auto [next, fired] = step(machine, config);
        if (fired.empty()) {
            // The stopping step: nothing executes, every branch vanishes,
            // and the machine is off at this instant.
            result.halted = true;
            result.halt_time = next.time;
            result.trace.push_back(StepRecord{next, {}});
            result.final_config = std::move(next);
            return result;
        }
        if (steps_taken == max_steps) {
            result.halted = false;
            result.final_config = std::move(config);
            return result;
        }
        ++steps_taken;
        result.trace.push_back(StepRecord{next, fired});
        config = std::move(next);
    }
}

std::vector<std::pair<int, int>> contradictory_pairs(const Machine& machine) {
    std::vector<std::pair<int, int>> pairs;
    const auto& instrs = machine.instructions;
    for (std::size_t i = 0; i < instrs.size(); ++i) {
        for (std::size_t j = i + 1; j < instrs.size(); ++j) {
            const bool same_premises = instrs[i].premise_state == instrs[j].premise_state &&
                                       instrs[i].premise_symbol == instrs[j].premise_symbol;
            const bool same_conclusion = instrs[i].action == instrs[j].action &&
                                         instrs[i].next_state == instrs[j].next_state;
            if (same_premises && !same_conclusion) {
                pairs.emplace_back(instrs[i].id, instrs[j].id);
            }
        }
    }
    return pairs;
}

std::set<std::string> results(const Configuration& config, const Symbol& blank,
                              std::int64_t first, std::int64_t last, std::uint64_t cap) {
    if (first > last) {
        throw std::invalid_argument("results window is empty");
    }
    if (cap == 0) {
        throw std::invalid_argument("cap must be positive");
    }

    std::vector<std::set<Symbol>> cells;
    std::uint64_t cardinality = 1;
    for (std::int64_t pos = first; pos <= last; ++pos) {
        cells.push_back(read_symbols(config.tape, pos, blank));
        const std::uint64_t size = cells.back().size();
        if (cardinality > cap / size) {
            throw CapExceeded(cardinality * size, cap);  // may saturate; count is > cap
        }
        cardinality *= size;
    }

    std::set<std::string> rendered;
    std::vector<std::set<Symbol>::const_iterator> cursor;
    cursor.reserve(cells.size());
    for (const auto& cell : cells) {
        cursor.push_back(cell.begin());
    }
    while (true) {
        std::string text;
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (i > 0) text += ' ';
            text += cursor[i]->name;
        }
        rendered.insert(std::move(text));

        std::size_t i = cells.size();
        while (i > 0) {
            --i;
            if (++cursor[i] != cells[i].end()) break;
            cursor[i] = cells[i].begin();
            if (i == 0) return rendered;
        }
    }
}

}  // namespace ptm
