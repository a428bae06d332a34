#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <tuple>
#include <vector>

namespace ptm {

/// A tape symbol, identified by name. Valid symbols come from a machine's
/// declared alphabet.
struct Symbol {
    std::string name;
    auto operator<=>(const Symbol&) const = default;
};

/// A machine state, identified by name.
struct State {
    std::string name;
    auto operator<=>(const State&) const = default;
};

/// Premise annotation on an instruction: fire unconditionally (Any), only
/// when the relevant set is a singleton (Unique), or only when it has more
/// than one element (Multiple).
enum class Condition { Any, Unique, Multiple };

enum class MoveDir { Left, Right };

/// What an instruction does once its premises hold: write a symbol at the
/// current cell, or move the head one cell. Exactly one per instruction
/// (quadruple convention).
struct Action {
    enum class Kind { Write, Move };

    Kind kind = Kind::Write;
    Symbol symbol;                  // meaningful only for Write
    MoveDir dir = MoveDir::Left;    // meaningful only for Move

    static Action write(Symbol s) { return Action{Kind::Write, std::move(s), MoveDir::Left}; }
    static Action move(MoveDir d) { return Action{Kind::Move, Symbol{}, d}; }

    bool is_write() const { return kind == Kind::Write; }
    bool is_move() const { return kind == Kind::Move; }

    auto operator<=>(const Action&) const = default;
};

/// A conditioned quadruple: premise state and symbol (each with an optional
/// unicity/multiplicity condition), one action, and the successor state.
struct Instruction {
    int id = 0;     // index in the owning machine's instruction list
    State premise_state;
    Condition state_cond = Condition::Any;
    Symbol premise_symbol;
    Condition symbol_cond = Condition::Any;
    Action action;
    State next_state;

    auto operator<=>(const Instruction&) const = default;
};

/// Sparse tape: positions with no entry read as the blank symbol. Stored
/// sets are nonempty and never equal to exactly {blank}, so tape equality
/// is canonical.
struct Tape {
    std::map<std::int64_t, std::set<Symbol>> cells;

    bool operator==(const Tape&) const = default;
};

/// Machine description. Contradictory instructions (same premise pair,
/// different conclusions) are allowed.
struct Machine {
    std::string name;
    std::set<State> states;
    std::set<Symbol> alphabet;
    Symbol blank;
    std::vector<Instruction> instructions;
    State start_state;
    std::int64_t start_position = 0;

    bool operator==(const Machine&) const = default;
};

/// An active (state, position) pair. Ordered by (position, state name) so
/// that iteration over branch sets is deterministic.
struct Branch {
    State state;
    std::int64_t position = 0;

    friend bool operator==(const Branch&, const Branch&) = default;
    friend bool operator<(const Branch& a, const Branch& b) {
        return std::tie(a.position, a.state.name) < std::tie(b.position, b.state.name);
    }
};

/// Full snapshot of a computation at one time step: the branch set plus the
/// multi-valued tape.
struct Configuration {
    std::int64_t time = 0;
    std::set<Branch> active;
    Tape tape;

    bool operator==(const Configuration&) const = default;
};

/// Trace record of a single instruction execution: which instruction fired,
/// where, from which branch state, reading which symbol. Ordered by
/// (position, instruction id, symbol name).
struct FiredInstance {
    int instruction_id = 0;
    std::int64_t position = 0;
    State state;
    Symbol symbol_read;

    friend bool operator==(const FiredInstance&, const FiredInstance&) = default;
    friend bool operator<(const FiredInstance& a, const FiredInstance& b) {
        return std::tie(a.position, a.instruction_id, a.symbol_read.name) <
               std::tie(b.position, b.instruction_id, b.symbol_read.name);
    }
};

/// One trace row: the configuration at time t and the instances whose
/// execution produced it (empty at t = 0).
struct StepRecord {
    Configuration config;
    std::vector<FiredInstance> fired;

    bool operator==(const StepRecord&) const = default;
};

struct RunResult {
    /// True if the computation stopped (no instruction applicable); false if
    /// the step limit was hit first.
    bool halted = false;
    std::int64_t halt_time = 0;     // meaningful when halted
    std::int64_t step_limit = 0;    // the limit the run was given
    Configuration final_config;
    std::vector<StepRecord> trace;  // trace[t] is the snapshot at time t
};

/// Throws std::invalid_argument if the machine violates a structural
/// invariant (blank outside alphabet, instruction referencing an undeclared
/// state/symbol, non-sequential ids, ...).
void validate(const Machine& machine);

/// Renders a symbol or state set as "{a,b,c}" in set order.
std::string set_to_string(const std::set<Symbol>& symbols);
std::string set_to_string(const std::set<State>& states);

}  // namespace ptm
