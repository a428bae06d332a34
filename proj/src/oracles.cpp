#include "ptm/oracles.hpp"

#include <bit>
#include <stdexcept>

namespace ptm {

ProductCheck product_representable(const PairSet& pairs) {
    if (pairs.empty()) {
        throw std::invalid_argument("pair set must be nonempty");
    }
    ProductFactors factors;
    for (const auto& [state, symbol] : pairs) {
        factors.states.insert(state);
        factors.symbols.insert(symbol);
    }
    for (const State& state : factors.states) {
        for (const Symbol& symbol : factors.symbols) {
            if (pairs.count({state, symbol}) == 0) {
                return ProductCheck{false, std::nullopt};
            }
        }
    }
    return ProductCheck{true, std::move(factors)};
}

ClassicalReport classical_classify(const BoolFn& f) {
    if (f.arity < 1) {
        throw std::invalid_argument("classical_classify needs arity >= 1");
    }
    if (classify_fn(f) == Promise::Neither) {
        throw std::invalid_argument("classical_classify requires the promise");
    }

    ClassicalReport report;
    report.worst_case_bound = (std::int64_t{1} << (f.arity - 1)) + 1;

    const int first = f.eval(0);
    report.evaluations_used = 1;
    for (std::uint64_t input = 1; report.evaluations_used < report.worst_case_bound; ++input) {
        ++report.evaluations_used;
        if (f.eval(input) != first) {
            report.classification = Promise::Balanced;
            return report;
        }
    }
    report.classification = Promise::Constant;
    return report;
}

std::vector<BoolFn> promised_functions(int n) {
    if (n < 1 || n > 4) {
        throw std::invalid_argument("promised_functions enumerates exhaustively; n must be 1..4");
    }
    const std::uint64_t table_size = std::uint64_t{1} << n;
    const std::uint64_t half = table_size / 2;

    std::vector<BoolFn> family;
    family.push_back(const_fn(n, 0));
    family.push_back(const_fn(n, 1));
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << table_size); ++mask) {
        if (static_cast<std::uint64_t>(std::popcount(mask)) != half) continue;
        BoolFn f;
        f.arity = n;
        f.table.resize(table_size);
        for (std::uint64_t i = 0; i < table_size; ++i) {
            f.table[i] = static_cast<std::uint8_t>((mask >> i) & 1u);
        }
        family.push_back(std::move(f));
    }
    return family;
}

}  // namespace ptm
