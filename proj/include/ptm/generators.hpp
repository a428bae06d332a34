#pragma once

#include <array>
#include <vector>

#include "ptm/boolfn.hpp"
#include "ptm/machine.hpp"

namespace ptm {

/// Cofactor automaton of a boolean function: level k holds the distinct
/// residuals of f with its first k inputs fixed, level n the arity-0
/// constants f can reach. Reading bit b at level k moves to the residual
/// with that bit fixed. Drives the function-evaluation block of dj_machine.
struct ResidualAutomaton {
    int arity = 0;
    /// levels[k]: distinct arity-(n-k) residuals, sorted by truth table.
    std::vector<std::vector<BoolFn>> levels;
    /// transitions[k][j][b]: index into levels[k+1] of levels[k][j].cofactor(b).
    std::vector<std::vector<std::array<int, 2>>> transitions;
};

ResidualAutomaton residual_automaton(const BoolFn& f);

/// The fixed seven-instruction machine solving Deutsch's problem for the
/// given arity-1 function: alphabet {0,1}, blank 0, start q1 at 0, run on
/// input "1". The answer appears at cell 0: {0} constant, {1} balanced.
Machine deutsch_machine(const BoolFn& f);

/// The n-bit generalization, run on input 1^n. After a fixed generation
/// sweep it evaluates every input word of f in one simultaneous pass and
/// leaves the answer at cell n: {0} constant, {1} balanced. Halts in exactly
/// 3n+5 steps. Requires f constant or balanced (the promise).
Machine dj_machine(int n, const BoolFn& f);

/// Instruction ids of the write instructions synthesized from the residual
/// automaton's final level (the simultaneous f-evaluation writes) in a
/// machine produced by dj_machine.
std::vector<int> dj_evaluation_write_ids(const Machine& machine);

}  // namespace ptm
