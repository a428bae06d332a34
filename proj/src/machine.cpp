#include "ptm/machine.hpp"

#include <sstream>
#include <stdexcept>

namespace ptm {

namespace {

void require(bool ok, const std::string& message) {
    if (!ok) {
        throw std::invalid_argument("invalid machine: " + message);
    }
}

}  // namespace

void validate(const Machine& machine) {
    require(!machine.name.empty(), "machine name is empty");
    require(!machine.states.empty(), "state set is empty");
    require(!machine.alphabet.empty(), "alphabet is empty");
    require(machine.alphabet.count(machine.blank) > 0,
            "blank symbol '" + machine.blank.name + "' is not in the alphabet");
    require(machine.states.count(machine.start_state) > 0,
            "start state '" + machine.start_state.name + "' is not declared");

    for (std::size_t i = 0; i < machine.instructions.size(); ++i) {
        const Instruction& instr = machine.instructions[i];
        const std::string where = "instruction " + std::to_string(i);
        require(instr.id == static_cast<int>(i), where + " has id " + std::to_string(instr.id));
        require(machine.states.count(instr.premise_state) > 0,
                where + " uses undeclared state '" + instr.premise_state.name + "'");
        require(machine.states.count(instr.next_state) > 0,
                where + " uses undeclared state '" + instr.next_state.name + "'");
        require(machine.alphabet.count(instr.premise_symbol) > 0,
                where + " uses undeclared symbol '" + instr.premise_symbol.name + "'");
        if (instr.action.is_write()) {
            require(machine.alphabet.count(instr.action.symbol) > 0,
                    where + " writes undeclared symbol '" + instr.action.symbol.name + "'");
        }
    }
}

namespace {

template <typename Set>
std::string join_names(const Set& set) {
    std::ostringstream out;
    out << '{';
    bool first = true;
    for (const auto& element : set) {
        if (!first) out << ',';
        first = false;
        out << element.name;
    }
    out << '}';
    return out.str();
}

}  // namespace

std::string set_to_string(const std::set<Symbol>& symbols) { return join_names(symbols); }

std::string set_to_string(const std::set<State>& states) { return join_names(states); }

}  // namespace ptm
