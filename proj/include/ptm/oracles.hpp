#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "ptm/boolfn.hpp"
#include "ptm/machine.hpp"

namespace ptm {

/// A set of coexisting (state, reading-symbol) pairs at a single tape cell.
using StateSymbolPair = std::pair<State, Symbol>;
using PairSet = std::set<StateSymbolPair>;

struct ProductFactors {
    std::set<State> states;
    std::set<Symbol> symbols;

    bool operator==(const ProductFactors&) const = default;
};

struct ProductCheck {
    bool representable = false;
    std::optional<ProductFactors> factors;  // present iff representable
};

/// A single-cell pair set is realizable by a paraconsistent machine
/// configuration exactly when it is a full product A x B of its state and
/// symbol projections (complete mixture). Returns the factors when it is.
ProductCheck product_representable(const PairSet& pairs);

struct ClassicalReport {
    Promise classification = Promise::Neither;
    std::int64_t evaluations_used = 0;
    std::int64_t worst_case_bound = 0;  // 2^(n-1) + 1
};

/// Deterministic classical decision procedure: evaluate f at inputs
/// 0, 1, 2, ... until two values differ (balanced) or 2^(n-1)+1 evaluations
/// agree (constant). Requires the promise.
ClassicalReport classical_classify(const BoolFn& f);

/// The two constants followed by every balanced table of arity n, ascending
/// table order, each exactly once. Exhaustive enumeration; n <= 4.
std::vector<BoolFn> promised_functions(int n);

}  // namespace ptm
