#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace ptm {

/// Classification of a boolean function under the constant-or-balanced
/// promise.
enum class Promise { Constant, Balanced, Neither };

std::string to_string(Promise promise);

/// A total function {0,1}^n -> {0,1} as a truth table of 2^n bits. Inputs
/// are indexed big-endian: table[i] is the value at the n-bit word whose
/// first bit is the most significant bit of i.
struct BoolFn {
    int arity = 0;
    std::vector<std::uint8_t> table;  // 2^arity entries, each 0 or 1

    /// Value at the input word encoded as a big-endian index.
    int eval(std::uint64_t input) const { return table[input]; }

    /// Cofactor with the first input fixed to `bit`: arity drops by one.
    BoolFn cofactor(int bit) const;

    bool operator==(const BoolFn&) const = default;
};

/// Parses a truth table bitstring like "0110" (length must be a power of
/// two) or one of the builtin names "const0", "const1", "parity" (which need
/// the arity hint). Throws std::invalid_argument on malformed input.
BoolFn parse_boolfn(const std::string& text, int arity_hint = 0);

BoolFn const_fn(int arity, int value);
BoolFn parity_fn(int arity);

Promise classify_fn(const BoolFn& f);

}  // namespace ptm
