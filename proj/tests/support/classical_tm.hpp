#pragma once

// Reference interpreter for consistent machines, written against the
// classical single-tape semantics directly: one head, one state, one symbol
// per cell. Used as the independent oracle for the degeneration property;
// it must not share code with the engine it checks.

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>

#include "ptm/machine.hpp"

namespace ptm::testing {

struct ClassicalTm {
    explicit ClassicalTm(const Machine& machine, const std::vector<Symbol>& input)
        : machine_(machine), state_(machine.start_state), position_(machine.start_position) {
        for (std::size_t i = 0; i < input.size(); ++i) {
            write(static_cast<std::int64_t>(i), input[i]);
        }
    }

    const Symbol& read(std::int64_t position) const {
        const auto it = tape_.find(position);
        return it == tape_.end() ? machine_.blank : it->second;
    }

    // Executes the unique applicable instruction; returns false when none
    // applies (the machine halts). Throws if the machine is ambiguous.
    bool step() {
        const Symbol& current = read(position_);
        const Instruction* applicable = nullptr;
        for (const Instruction& instr : machine_.instructions) {
            if (instr.premise_state != state_ || instr.premise_symbol != current) continue;
            if (applicable != nullptr) {
                throw std::logic_error("classical oracle given an ambiguous machine");
            }
            applicable = &instr;
        }
        if (applicable == nullptr) return false;
        if (applicable->action.is_write()) {
            write(position_, applicable->action.symbol);
        } else {
            position_ += applicable->action.dir == MoveDir::Right ? 1 : -1;
        }
        state_ = applicable->next_state;
        return true;
    }

    const State& state() const { return state_; }
    std::int64_t position() const { return position_; }
    const std::map<std::int64_t, Symbol>& tape() const { return tape_; }

  private:
    void write(std::int64_t position, const Symbol& symbol) {
        if (symbol == machine_.blank) {
            tape_.erase(position);
        } else {
            tape_[position] = symbol;
        }
    }

    const Machine& machine_;
    State state_;
    std::int64_t position_;
    std::map<std::int64_t, Symbol> tape_;
};

}  // namespace ptm::testing
