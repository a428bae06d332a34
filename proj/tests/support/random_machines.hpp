#pragma once

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "ptm/machine.hpp"

namespace ptm::testing {

inline std::vector<State> numbered_states(int count) {
    std::vector<State> states;
    for (int i = 0; i < count; ++i) states.push_back(State{"q" + std::to_string(i)});
    return states;
}

inline std::vector<Symbol> numbered_symbols(int count) {
    std::vector<Symbol> symbols;
    for (int i = 0; i < count; ++i) symbols.push_back(Symbol{"s" + std::to_string(i)});
    return symbols;
}

template <typename T>
const T& pick(std::mt19937_64& rng, const std::vector<T>& pool) {
    return pool[std::uniform_int_distribution<std::size_t>(0, pool.size() - 1)(rng)];
}

inline Action random_action(std::mt19937_64& rng, const std::vector<Symbol>& symbols) {
    switch (std::uniform_int_distribution<int>(0, 2)(rng)) {
        case 0: return Action::move(MoveDir::Left);
        case 1: return Action::move(MoveDir::Right);
        default: return Action::write(pick(rng, symbols));
    }
}

// A machine with pairwise distinct premises and no conditions: classically
// consistent, so it must behave exactly like a deterministic single-tape TM.
inline Machine random_consistent_machine(std::mt19937_64& rng) {
    const int num_states = std::uniform_int_distribution<int>(1, 5)(rng);
    const int num_symbols = std::uniform_int_distribution<int>(1, 4)(rng);
    const auto states = numbered_states(num_states);
    const auto symbols = numbered_symbols(num_symbols);

    std::vector<std::pair<State, Symbol>> premises;
    for (const State& q : states) {
        for (const Symbol& s : symbols) premises.emplace_back(q, s);
    }
    std::shuffle(premises.begin(), premises.end(), rng);
    const auto count = std::uniform_int_distribution<std::size_t>(1, premises.size())(rng);

    Machine m;
    m.name = "consistent";
    m.states = {states.begin(), states.end()};
    m.alphabet = {symbols.begin(), symbols.end()};
    m.blank = symbols.front();
    m.start_state = pick(rng, states);
    m.start_position = std::uniform_int_distribution<int>(-1, 1)(rng);
    for (std::size_t i = 0; i < count; ++i) {
        m.instructions.push_back(Instruction{static_cast<int>(i), premises[i].first,
                                             Condition::Any, premises[i].second, Condition::Any,
                                             random_action(rng, symbols), pick(rng, states)});
    }
    return m;
}

// Anything structurally valid: contradictory premises, unicity/multiplicity
// conditions, awkward (but legal) identifiers. For parser round trips.
inline Machine random_machine(std::mt19937_64& rng) {
    static const std::vector<std::string> state_pool = {
        "q0", "q1", "q2", "scan", "loop_2", "_done", "Z"};
    static const std::vector<std::string> symbol_pool = {
        "0", "1", "s0", "s1", "blank_", "x", "B2"};

    const int num_states = std::uniform_int_distribution<int>(1, 5)(rng);
    const int num_symbols = std::uniform_int_distribution<int>(1, 5)(rng);
    std::vector<State> states;
    for (int i = 0; i < num_states; ++i) states.push_back(State{state_pool[i]});
    std::vector<Symbol> symbols;
    for (int i = 0; i < num_symbols; ++i) symbols.push_back(Symbol{symbol_pool[i]});

    auto random_condition = [&rng] {
        switch (std::uniform_int_distribution<int>(0, 3)(rng)) {
            case 0: return Condition::Unique;
            case 1: return Condition::Multiple;
            default: return Condition::Any;  // twice as likely
        }
    };

    Machine m;
    m.name = "rand_" + std::to_string(std::uniform_int_distribution<int>(0, 9999)(rng));
    m.states = {states.begin(), states.end()};
    m.alphabet = {symbols.begin(), symbols.end()};
    m.blank = pick(rng, symbols);
    m.start_state = pick(rng, states);
    m.start_position = std::uniform_int_distribution<int>(-3, 3)(rng);
    const int count = std::uniform_int_distribution<int>(1, 12)(rng);
    for (int i = 0; i < count; ++i) {
        m.instructions.push_back(Instruction{i, pick(rng, states), random_condition(),
                                             pick(rng, symbols), random_condition(),
                                             random_action(rng, symbols), pick(rng, states)});
    }
    return m;
}

inline std::vector<Symbol> random_input(std::mt19937_64& rng, const Machine& m, int max_length) {
    const std::vector<Symbol> symbols(m.alphabet.begin(), m.alphabet.end());
    const int length = std::uniform_int_distribution<int>(0, max_length)(rng);
    std::vector<Symbol> input;
    for (int i = 0; i < length; ++i) input.push_back(pick(rng, symbols));
    return input;
}

}  // namespace ptm::testing
