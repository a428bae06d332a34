#pragma once

#include <optional>
#include <set>
#include <string>

#include <json.hpp>

#include "ptm/machine.hpp"

namespace ptm {

/// ASCII rendering of a run: one block per step with the state sets above
/// their positions, the cell sets, and the position ruler. Fired instruction
/// ids are printed 1-based in parentheses next to the time.
std::string ascii_trace(const Machine& machine, const RunResult& result,
                        const std::optional<std::set<std::string>>& outputs = std::nullopt);

/// Machine-readable trace document. Deterministic: equal inputs produce
/// byte-identical dumps.
nlohmann::ordered_json trace_document(
    const Machine& machine, const RunResult& result,
    const std::optional<std::set<std::string>>& outputs = std::nullopt);

}  // namespace ptm
