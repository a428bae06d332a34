#pragma once

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "ptm/machine.hpp"

namespace ptm {

inline constexpr std::int64_t kDefaultMaxSteps = 1'000'000;

/// Thrown by results() when the cartesian product over the window exceeds
/// the caller's cap.
class CapExceeded : public std::runtime_error {
  public:
    CapExceeded(std::uint64_t cardinality, std::uint64_t cap);

    std::uint64_t cardinality() const { return cardinality_; }
    std::uint64_t cap() const { return cap_; }

  private:
    std::uint64_t cardinality_;
    std::uint64_t cap_;
};

/// Symbol set at a tape position; untouched cells read as {blank}.
std::set<Symbol> read_symbols(const Tape& tape, std::int64_t position, const Symbol& blank);

/// Any: member in set. Unique: set == {member}. Multiple: member in set and
/// |set| > 1.
template <typename T>
bool condition_satisfied(Condition cond, const T& member, const std::set<T>& set) {
    switch (cond) {
        case Condition::Any:
            return set.count(member) > 0;
        case Condition::Unique:
            return set.size() == 1 && set.count(member) > 0;
        case Condition::Multiple:
            return set.size() > 1 && set.count(member) > 0;
    }
    return false;
}

/// All instruction instances applicable in the configuration: one per
/// (instruction, branch) whose premises and conditions hold at the branch
/// position. Conditions are evaluated locally, against the state set present
/// at that position and the cell's symbol set. Sorted by
/// (position, instruction id, symbol).
std::vector<FiredInstance> fired_set(const Machine& machine, const Configuration& config);

/// Executes all applicable instructions simultaneously. Branches with no
/// fired instance are dropped; every cell with at least one write is
/// replaced by the union of the symbols written there; all other cells are
/// untouched. Pure: the input configuration is not modified.
std::pair<Configuration, std::vector<FiredInstance>> step(const Machine& machine,
                                                          const Configuration& config);

/// Initial configuration for the given input: tape holds input[i] at
/// position i, single branch at (start_state, start_position).
Configuration initial_configuration(const Machine& machine, const std::vector<Symbol>& input);

/// Runs the machine until it stops or max_steps steps have been taken.
///
/// A machine that never fires anything halts immediately at t = 0. Once
/// running, the computation ends with one final step in which no instruction
/// fires; that step clears the branch set (the machine is off and in no
/// state) and its time is the reported halt time.
RunResult run(const Machine& machine, const std::vector<Symbol>& input,
              std::int64_t max_steps = kDefaultMaxSteps);

/// All unordered pairs of distinct instructions with the same premise
/// (state, symbol) pair -- conditions ignored -- and different conclusions.
/// Empty result means the machine meets the classical consistency condition.
std::vector<std::pair<int, int>> contradictory_pairs(const Machine& machine);

/// Every result readable from the window [first, last]: the cartesian
/// product of the cell sets, rendered as space-joined symbol names. Throws
/// CapExceeded if the product has more than cap elements.
std::set<std::string> results(const Configuration& config, const Symbol& blank,
                              std::int64_t first, std::int64_t last, std::uint64_t cap);

}  // namespace ptm
