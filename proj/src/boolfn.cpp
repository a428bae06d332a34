#include "ptm/boolfn.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace ptm {

std::string to_string(Promise promise) {
    switch (promise) {
        case Promise::Constant: return "constant";
        case Promise::Balanced: return "balanced";
        case Promise::Neither: return "neither";
    }
    return "?";
}

BoolFn BoolFn::cofactor(int bit) const {
    if (arity < 1) {
        throw std::invalid_argument("cofactor of an arity-0 function");
    }
    BoolFn sub;
    sub.arity = arity - 1;
    const std::size_t half = table.size() / 2;
    const std::size_t offset = bit ? half : 0;
    sub.table.assign(table.begin() + static_cast<std::ptrdiff_t>(offset),
                     table.begin() + static_cast<std::ptrdiff_t>(offset + half));
    return sub;
}

BoolFn const_fn(int arity, int value) {
    if (arity < 0) throw std::invalid_argument("negative arity");
    BoolFn f;
    f.arity = arity;
    f.table.assign(std::size_t{1} << arity, static_cast<std::uint8_t>(value ? 1 : 0));
    return f;
}

BoolFn parity_fn(int arity) {
    if (arity < 1) throw std::invalid_argument("parity needs arity >= 1");
    BoolFn f;
    f.arity = arity;
    f.table.resize(std::size_t{1} << arity);
    for (std::size_t i = 0; i < f.table.size(); ++i) {
        f.table[i] = static_cast<std::uint8_t>(std::popcount(i) & 1);
    }
    return f;
}

BoolFn parse_boolfn(const std::string& text, int arity_hint) {
    if (text == "const0" || text == "const1") {
        if (arity_hint < 1) {
            throw std::invalid_argument("builtin '" + text + "' needs an arity");
        }
        return const_fn(arity_hint, text == "const1" ? 1 : 0);
    }
    if (text == "parity") {
        if (arity_hint < 1) {
            throw std::invalid_argument("builtin 'parity' needs an arity");
        }
        return parity_fn(arity_hint);
    }

    if (text.empty() || (text.size() & (text.size() - 1)) != 0) {
        throw std::invalid_argument("truth table length must be a power of two, got \"" +
                                    text + "\"");
    }
    BoolFn f;
    f.table.reserve(text.size());
    for (char c : text) {
        if (c != '0' && c != '1') {
            throw std::invalid_argument("truth table must be over {0,1}, got \"" + text + "\"");
        }
        f.table.push_back(static_cast<std::uint8_t>(c - '0'));
    }
    f.arity = std::countr_zero(text.size());
    if (arity_hint > 0 && f.arity != arity_hint) {
        throw std::invalid_argument("truth table \"" + text + "\" has arity " +
                                    std::to_string(f.arity) + ", expected " +
                                    std::to_string(arity_hint));
    }
    return f;
}

Promise classify_fn(const BoolFn& f) {
    const auto ones = static_cast<std::size_t>(
        std::count(f.table.begin(), f.table.end(), std::uint8_t{1}));
    if (ones == 0 || ones == f.table.size()) return Promise::Constant;
    if (ones * 2 == f.table.size()) return Promise::Balanced;
    return Promise::Neither;
}

}  // namespace ptm
