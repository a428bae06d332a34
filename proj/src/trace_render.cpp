#include "ptm/trace_render.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "ptm/engine.hpp"

namespace ptm {

namespace {

std::map<std::int64_t, std::set<State>> states_by_position(const Configuration& config) {
    std::map<std::int64_t, std::set<State>> result;
    for (const Branch& branch : config.active) {
        result[branch.position].insert(branch.state);
    }
    return result;
}

std::pair<std::int64_t, std::int64_t> trace_window(const RunResult& result) {
    std::int64_t lo = 0;
    std::int64_t hi = 0;
    for (const StepRecord& record : result.trace) {
        for (const auto& [position, cell] : record.config.tape.cells) {
            lo = std::min(lo, position);
            hi = std::max(hi, position);
        }
        for (const Branch& branch : record.config.active) {
            lo = std::min(lo, branch.position);
            hi = std::max(hi, branch.position);
        }
    }
    return {lo - 1, hi + 1};  // one blank cell of context on each side
}

}  // namespace

std::string ascii_trace(const Machine& machine, const RunResult& result,
                        const std::optional<std::set<std::string>>& outputs) {
    const auto [lo, hi] = trace_window(result);

    std::size_t width = 0;
    for (std::int64_t pos = lo; pos <= hi; ++pos) {
        width = std::max(width, std::to_string(pos).size());
    }
    for (const StepRecord& record : result.trace) {
        for (std::int64_t pos = lo; pos <= hi; ++pos) {
            width = std::max(
                width,
                set_to_string(read_symbols(record.config.tape, pos, machine.blank)).size());
        }
        for (const auto& [pos, states] : states_by_position(record.config)) {
            width = std::max(width, set_to_string(states).size());
        }
    }

    auto pad = [width](const std::string& text) {
        std::string cell(width + 1 - text.size(), ' ');
        return cell + text;
    };

    std::ostringstream out;
    out << "machine " << machine.name << '\n';
    for (const StepRecord& record : result.trace) {
        out << "t = " << record.config.time;
        if (!record.fired.empty()) {
            out << "  (";
            for (std::size_t i = 0; i < record.fired.size(); ++i) {
                if (i > 0) out << ", ";
                out << 'i' << record.fired[i].instruction_id + 1;
            }
            out << ')';
        }
        out << '\n';

        const auto states = states_by_position(record.config);
        std::string state_row;
        std::string tape_row;
        std::string pos_row;
        for (std::int64_t pos = lo; pos <= hi; ++pos) {
            const auto it = states.find(pos);
            state_row += pad(it == states.end() ? "" : set_to_string(it->second));
            tape_row += pad(set_to_string(read_symbols(record.config.tape, pos, machine.blank)));
            pos_row += pad(std::to_string(pos));
        }
        if (state_row.find_first_not_of(' ') != std::string::npos) {
            out << state_row << '\n';
        }
        out << tape_row << '\n' << pos_row << '\n';
    }

    if (result.halted) {
        out << "status: halted at t = " << result.halt_time << '\n';
    } else {
        out << "status: step limit exceeded after " << result.step_limit << " steps\n";
    }
    if (outputs) {
        out << "outputs:\n";
        for (const std::string& output : *outputs) {
            out << "  " << output << '\n';
        }
    }
    return out.str();
}

nlohmann::ordered_json trace_document(const Machine& machine, const RunResult& result,
                                      const std::optional<std::set<std::string>>& outputs) {
    nlohmann::ordered_json doc;
    doc["machine"] = machine.name;
    if (result.halted) {
        doc["status"] = "halted";
        doc["halted_at"] = result.halt_time;
    } else {
        doc["status"] = "step_limit";
        doc["step_limit"] = result.step_limit;
    }

    nlohmann::ordered_json steps = nlohmann::ordered_json::array();
    for (const StepRecord& record : result.trace) {
        nlohmann::ordered_json step;
        step["t"] = record.config.time;

        nlohmann::ordered_json active = nlohmann::ordered_json::array();
        for (const Branch& branch : record.config.active) {
            active.push_back({{"state", branch.state.name}, {"pos", branch.position}});
        }
        step["active"] = std::move(active);

        nlohmann::ordered_json tape = nlohmann::ordered_json::object();
        for (const auto& [position, cell] : record.config.tape.cells) {
            nlohmann::ordered_json symbols = nlohmann::ordered_json::array();
            for (const Symbol& symbol : cell) symbols.push_back(symbol.name);
            tape[std::to_string(position)] = std::move(symbols);
        }
        step["tape"] = std::move(tape);

        nlohmann::ordered_json fired = nlohmann::ordered_json::array();
        for (const FiredInstance& instance : record.fired) {
            fired.push_back({{"instr", instance.instruction_id},
                             {"pos", instance.position},
                             {"state", instance.state.name},
                             {"symbol", instance.symbol_read.name}});
        }
        step["fired"] = std::move(fired);
        steps.push_back(std::move(step));
    }
    doc["steps"] = std::move(steps);

    if (outputs) {
        nlohmann::ordered_json list = nlohmann::ordered_json::array();
        for (const std::string& output : *outputs) list.push_back(output);
        doc["outputs"] = std::move(list);
    }
    return doc;
}

}  // namespace ptm
