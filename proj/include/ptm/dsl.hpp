#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ptm/machine.hpp"

namespace ptm {

/// 1-based location of a token in the parsed text.
struct SourceSpan {
    int line = 1;
    int column = 1;
    int length = 0;

    bool operator==(const SourceSpan&) const = default;
};

enum class ParseErrorKind {
    Syntax,
    UnknownState,
    UnknownSymbol,
    ReservedToken,
    DuplicateDeclaration,
    MissingDeclaration,
};

std::string to_string(ParseErrorKind kind);

struct ParseError {
    SourceSpan span;
    std::string message;
    ParseErrorKind kind = ParseErrorKind::Syntax;
};

/// Outcome of parse_machine: either a validated machine or at least one
/// error. Parsing never throws; every error carries a span into the text.
struct ParseResult {
    std::optional<Machine> machine;
    std::vector<ParseError> errors;

    bool ok() const { return machine.has_value(); }
};

/// Parses the .ptm machine description format:
///
///   machine NAME
///   alphabet IDENT...          # declarations first, one of each
///   blank IDENT
///   states IDENT...
///   start IDENT at INT
///   instr STATE[^1|^+] SYMBOL[^1|^+] (SYMBOL|L|R) STATE
///
/// One statement per line; '#' starts a comment; ^1 marks the unicity
/// condition and ^+ the multiplicity condition; L and R are reserved for
/// moves and cannot be declared. Reports every diagnosable error, not just
/// the first.
ParseResult parse_machine(const std::string& text);

/// Canonical .ptm text for a machine; parse_machine(serialize_machine(m))
/// reproduces m exactly.
std::string serialize_machine(const Machine& machine);

}  // namespace ptm
