#include "ptm/dsl.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace ptm {

std::string to_string(ParseErrorKind kind) {
    switch (kind) {
        case ParseErrorKind::Syntax: return "syntax";
        case ParseErrorKind::UnknownState: return "unknown-state";
        case ParseErrorKind::UnknownSymbol: return "unknown-symbol";
        case ParseErrorKind::ReservedToken: return "reserved-token";
        case ParseErrorKind::DuplicateDeclaration: return "duplicate-declaration";
        case ParseErrorKind::MissingDeclaration: return "missing-declaration";
    }
    return "?";
}

namespace {

struct Token {
    enum class Kind { Word, Cond };

    Kind kind = Kind::Word;
    std::string text;
    SourceSpan span;
};

bool is_word_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

bool is_identifier(const std::string& text) {
    if (text.empty()) return false;
    const bool all_digits = std::all_of(text.begin(), text.end(), [](char c) {
        return std::isdigit(static_cast<unsigned char>(c));
    });
    if (all_digits) return true;
    if (std::isdigit(static_cast<unsigned char>(text.front()))) return false;
    return std::all_of(text.begin(), text.end(), is_word_char);
}

bool is_integer(const std::string& text) {
    std::size_t start = text.size() > 1 && text.front() == '-' ? 1 : 0;
    if (start >= text.size()) return false;
    return std::all_of(text.begin() + static_cast<std::ptrdiff_t>(start), text.end(),
                       [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

class Parser {
  public:
    explicit Parser(const std::string& text) : text_(text) {}

    ParseResult parse() {
        tokenize_lines();
        for (const auto& line : lines_) {
            parse_statement(line);
        }
        check_declarations();
        if (!errors_.empty()) {
            std::stable_sort(errors_.begin(), errors_.end(),
                             [](const ParseError& a, const ParseError& b) {
                                 return std::tie(a.span.line, a.span.column) <
                                        std::tie(b.span.line, b.span.column);
                             });
            return ParseResult{std::nullopt, std::move(errors_)};
        }
        return ParseResult{std::move(machine_), {}};
    }

  private:
    void error(const Token& token, ParseErrorKind kind, const std::string& message) {
        errors_.push_back(ParseError{token.span, message, kind});
    }

    void error_at(SourceSpan span, ParseErrorKind kind, const std::string& message) {
        errors_.push_back(ParseError{span, message, kind});
    }

    SourceSpan end_of_line(const std::vector<Token>& line) const {
        const Token& last = line.back();
        return SourceSpan{last.span.line, last.span.column + last.span.length, 0};
    }

    void tokenize_lines() {
        int line_no = 1;
        std::size_t pos = 0;
        while (pos <= text_.size()) {
            std::size_t eol = text_.find('\n', pos);
            if (eol == std::string::npos) eol = text_.size();
            std::string_view line(text_.data() + pos, eol - pos);
            if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
            tokenize_line(line, line_no);
            ++line_no;
            if (eol == text_.size()) break;
            pos = eol + 1;
        }
        line_count_ = line_no - 1;
    }

    void tokenize_line(std::string_view line, int line_no) {
        std::vector<Token> tokens;
        std::size_t i = 0;
        while (i < line.size()) {
            const char c = line[i];
            if (c == '#') break;
            if (c == ' ' || c == '\t') {
                ++i;
                continue;
            }
            const int col = static_cast<int>(i) + 1;
            if (c == '^') {
                if (i + 1 < line.size() && (line[i + 1] == '1' || line[i + 1] == '+')) {
                    tokens.push_back(Token{Token::Kind::Cond,
                                           std::string(line.substr(i, 2)),
                                           SourceSpan{line_no, col, 2}});
                    i += 2;
                } else {
                    error_at(SourceSpan{line_no, col, 1}, ParseErrorKind::Syntax,
                             "'^' must be followed by '1' or '+'");
                    ++i;
                }
                continue;
            }
            if (is_word_char(c) || c == '-') {
                std::size_t end = i + 1;
                while (end < line.size() && is_word_char(line[end])) ++end;
                tokens.push_back(Token{Token::Kind::Word, std::string(line.substr(i, end - i)),
                                       SourceSpan{line_no, col, static_cast<int>(end - i)}});
                i = end;
                continue;
            }
            error_at(SourceSpan{line_no, col, 1}, ParseErrorKind::Syntax,
                     std::string("unexpected character '") + c + "'");
            ++i;
        }
        if (!tokens.empty()) lines_.push_back(std::move(tokens));
    }

    void parse_statement(const std::vector<Token>& line) {
        const Token& head = line.front();
        if (head.kind == Token::Kind::Cond) {
            error(head, ParseErrorKind::Syntax, "statement cannot start with a condition");
            return;
        }
        const std::string& keyword = head.text;
        if (keyword == "machine") {
            parse_header(line);
        } else if (keyword == "alphabet") {
            parse_name_list(line, alphabet_, alphabet_declared_, "symbol");
        } else if (keyword == "blank") {
            parse_single_name(line, blank_);
        } else if (keyword == "states") {
            parse_name_list(line, states_, states_declared_, "state");
        } else if (keyword == "start") {
            parse_start(line);
        } else if (keyword == "instr") {
            saw_instruction_ = true;
            parse_instruction(line);
            return;
        } else {
            error(head, ParseErrorKind::Syntax,
                  "expected 'machine', 'alphabet', 'blank', 'states', 'start' or 'instr'");
            return;
        }
        if (saw_instruction_) {
            error(head, ParseErrorKind::Syntax, "declarations must come before instructions");
        }
    }

    const Token* expect_word(const std::vector<Token>& line, std::size_t index,
                             const std::string& what) {
        if (index >= line.size()) {
            error_at(end_of_line(line), ParseErrorKind::Syntax, "expected " + what);
            return nullptr;
        }
        const Token& token = line[index];
        if (token.kind != Token::Kind::Word) {
            error(token, ParseErrorKind::Syntax, "expected " + what);
            return nullptr;
        }
        return &token;
    }

    const Token* expect_identifier(const std::vector<Token>& line, std::size_t index,
                                   const std::string& what) {
        const Token* token = expect_word(line, index, what);
        if (token == nullptr) return nullptr;
        if (!is_identifier(token->text)) {
            error(*token, ParseErrorKind::Syntax,
                  "'" + token->text + "' is not a valid identifier");
            return nullptr;
        }
        return token;
    }

    void reject_extra_tokens(const std::vector<Token>& line, std::size_t first_extra) {
        if (line.size() > first_extra) {
            error(line[first_extra], ParseErrorKind::Syntax, "unexpected trailing token");
        }
    }

    void parse_header(const std::vector<Token>& line) {
        if (machine_token_) {
            error(line.front(), ParseErrorKind::DuplicateDeclaration,
                  "duplicate 'machine' header");
            return;
        }
        machine_token_ = line.front();
        if (!statements_seen_only_header_) {
            error(line.front(), ParseErrorKind::Syntax, "'machine' header must come first");
        }
        if (const Token* name = expect_identifier(line, 1, "machine name")) {
            name_ = name->text;
        }
        reject_extra_tokens(line, 2);
    }

    void parse_name_list(const std::vector<Token>& line, std::vector<Token>& out, bool& seen,
                         const std::string& what) {
        statements_seen_only_header_ = false;
        if (seen) {
            error(line.front(), ParseErrorKind::DuplicateDeclaration,
                  "duplicate '" + line.front().text + "' declaration");
            return;
        }
        seen = true;
        if (line.size() == 1) {
            error_at(end_of_line(line), ParseErrorKind::Syntax, "expected at least one " + what);
            return;
        }
        for (std::size_t i = 1; i < line.size(); ++i) {
            const Token& token = line[i];
            if (token.kind != Token::Kind::Word || !is_identifier(token.text)) {
                error(token, ParseErrorKind::Syntax, "expected a " + what + " name");
                continue;
            }
            if (token.text == "L" || token.text == "R") {
                error(token, ParseErrorKind::ReservedToken,
                      "'" + token.text + "' is reserved for moves");
                continue;
            }
            const bool duplicate = std::any_of(out.begin(), out.end(), [&](const Token& seen) {
                return seen.text == token.text;
            });
            if (duplicate) {
                error(token, ParseErrorKind::DuplicateDeclaration,
                      "duplicate " + what + " '" + token.text + "'");
                continue;
            }
            out.push_back(token);
        }
    }

    void parse_single_name(const std::vector<Token>& line, std::optional<Token>& out) {
        statements_seen_only_header_ = false;
        if (out) {
            error(line.front(), ParseErrorKind::DuplicateDeclaration,
                  "duplicate 'blank' declaration");
            return;
        }
        if (const Token* token = expect_identifier(line, 1, "blank symbol")) {
            out = *token;
        }
        reject_extra_tokens(line, 2);
    }

    void parse_start(const std::vector<Token>& line) {
        statements_seen_only_header_ = false;
        if (start_state_) {
            error(line.front(), ParseErrorKind::DuplicateDeclaration,
                  "duplicate 'start' declaration");
            return;
        }
        const Token* state = expect_identifier(line, 1, "start state");
        if (state == nullptr) return;
        start_state_ = *state;
        const Token* at = expect_word(line, 2, "'at'");
        if (at == nullptr) return;
        if (at->text != "at") {
            error(*at, ParseErrorKind::Syntax, "expected 'at'");
            return;
        }
        const Token* pos = expect_word(line, 3, "start position");
        if (pos == nullptr) return;
        if (!is_integer(pos->text)) {
            error(*pos, ParseErrorKind::Syntax, "'" + pos->text + "' is not an integer");
            return;
        }
        try {
            start_position_ = std::stoll(pos->text);
        } catch (const std::out_of_range&) {
            error(*pos, ParseErrorKind::Syntax, "start position does not fit in 64 bits");
            return;
        }
        reject_extra_tokens(line, 4);
    }

    struct RawTerm {
        Token name;
        Condition cond = Condition::Any;
    };

    struct RawInstruction {
        RawTerm premise_state;
        RawTerm premise_symbol;
        Token action;  // symbol name, or "L"/"R"
        Token next_state;
    };

    // term := IDENT cond?; advances `index` past what it consumed.
    std::optional<RawTerm> parse_term(const std::vector<Token>& line, std::size_t& index,
                                      const std::string& what) {
        const Token* name = expect_identifier(line, index, what);
        if (name == nullptr) return std::nullopt;
        ++index;
        RawTerm term{*name, Condition::Any};
        if (index < line.size() && line[index].kind == Token::Kind::Cond) {
            term.cond = line[index].text == "^1" ? Condition::Unique : Condition::Multiple;
            ++index;
        }
        return term;
    }

    void parse_instruction(const std::vector<Token>& line) {
        statements_seen_only_header_ = false;
        std::size_t index = 1;
        auto premise_state = parse_term(line, index, "premise state");
        if (!premise_state) return;
        auto premise_symbol = parse_term(line, index, "premise symbol");
        if (!premise_symbol) return;
        const Token* action = expect_identifier(line, index, "action (symbol, L or R)");
        if (action == nullptr) return;
        ++index;
        if (index < line.size() && line[index].kind == Token::Kind::Cond) {
            error(line[index], ParseErrorKind::Syntax,
                  "conditions are only allowed on the premises");
            return;
        }
        const Token* next = expect_identifier(line, index, "next state");
        if (next == nullptr) return;
        ++index;
        reject_extra_tokens(line, index);
        instructions_.push_back(RawInstruction{*premise_state, *premise_symbol, *action, *next});
    }

    void require_declared_state(const Token& token) {
        if (!states_declared_) return;
        const bool known = std::any_of(states_.begin(), states_.end(), [&](const Token& t) {
            return t.text == token.text;
        });
        if (!known) {
            error(token, ParseErrorKind::UnknownState,
                  "state '" + token.text + "' is not declared");
        }
    }

    void require_declared_symbol(const Token& token) {
        if (!alphabet_declared_) return;
        const bool known = std::any_of(alphabet_.begin(), alphabet_.end(), [&](const Token& t) {
            return t.text == token.text;
        });
        if (!known) {
            error(token, ParseErrorKind::UnknownSymbol,
                  "symbol '" + token.text + "' is not declared");
        }
    }

    void check_declarations() {
        const SourceSpan file_start{1, 1, 0};
        if (!machine_token_) {
            error_at(file_start, ParseErrorKind::MissingDeclaration, "missing 'machine' header");
        }
        const SourceSpan anchor = machine_token_ ? machine_token_->span : file_start;
        if (!alphabet_declared_) {
            error_at(anchor, ParseErrorKind::MissingDeclaration, "missing 'alphabet' declaration");
        }
        if (!states_declared_) {
            error_at(anchor, ParseErrorKind::MissingDeclaration, "missing 'states' declaration");
        }
        if (!blank_) {
            error_at(anchor, ParseErrorKind::MissingDeclaration, "missing 'blank' declaration");
        }
        if (!start_state_) {
            error_at(anchor, ParseErrorKind::MissingDeclaration, "missing 'start' declaration");
        }
        if (instructions_.empty() && !saw_instruction_) {
            error_at(SourceSpan{line_count_, 1, 0}, ParseErrorKind::Syntax,
                     "expected at least one 'instr' statement");
        }
        if (blank_) require_declared_symbol(*blank_);
        if (start_state_) require_declared_state(*start_state_);
        for (const RawInstruction& raw : instructions_) {
            require_declared_state(raw.premise_state.name);
            require_declared_symbol(raw.premise_symbol.name);
            if (raw.action.text != "L" && raw.action.text != "R") {
                require_declared_symbol(raw.action);
            }
            require_declared_state(raw.next_state);
        }
        if (!errors_.empty()) return;

        Machine machine;
        machine.name = name_;
        for (const Token& token : states_) machine.states.insert(State{token.text});
        for (const Token& token : alphabet_) machine.alphabet.insert(Symbol{token.text});
        machine.blank = Symbol{blank_->text};
        machine.start_state = State{start_state_->text};
        machine.start_position = start_position_;
        int id = 0;
        for (const RawInstruction& raw : instructions_) {
            Action action = raw.action.text == "L"   ? Action::move(MoveDir::Left)
                            : raw.action.text == "R" ? Action::move(MoveDir::Right)
                                                     : Action::write(Symbol{raw.action.text});
            machine.instructions.push_back(Instruction{
                id++, State{raw.premise_state.name.text}, raw.premise_state.cond,
                Symbol{raw.premise_symbol.name.text}, raw.premise_symbol.cond, std::move(action),
                State{raw.next_state.text}});
        }
        machine_ = std::move(machine);
    }

    const std::string& text_;
    std::vector<std::vector<Token>> lines_;
    int line_count_ = 1;

    std::vector<ParseError> errors_;
    std::optional<Token> machine_token_;
    std::string name_;
    std::vector<Token> alphabet_;
    bool alphabet_declared_ = false;
    std::vector<Token> states_;
    bool states_declared_ = false;
    std::optional<Token> blank_;
    std::optional<Token> start_state_;
    std::int64_t start_position_ = 0;
    std::vector<RawInstruction> instructions_;
    bool saw_instruction_ = false;
    bool statements_seen_only_header_ = true;

    std::optional<Machine> machine_;
};

std::string condition_suffix(Condition cond) {
    switch (cond) {
        case Condition::Any: return "";
        case Condition::Unique: return "^1";
        case Condition::Multiple: return "^+";
    }
    return "";
}

}  // namespace

ParseResult parse_machine(const std::string& text) { return Parser(text).parse(); }

std::string serialize_machine(const Machine& machine) {
    std::ostringstream out;
    out << "machine " << machine.name << '\n';
    out << "alphabet";
    for (const Symbol& symbol : machine.alphabet) out << ' ' << symbol.name;
    out << '\n';
    out << "blank " << machine.blank.name << '\n';
    out << "states";
    for (const State& state : machine.states) out << ' ' << state.name;
    out << '\n';
    out << "start " << machine.start_state.name << " at " << machine.start_position << '\n';
    for (const Instruction& instr : machine.instructions) {
        out << "instr " << instr.premise_state.name << condition_suffix(instr.state_cond) << ' '
            << instr.premise_symbol.name << condition_suffix(instr.symbol_cond) << ' ';
        if (instr.action.is_move()) {
            out << (instr.action.dir == MoveDir::Right ? 'R' : 'L');
        } else {
            out << instr.action.symbol.name;
        }
        out << ' ' << instr.next_state.name << '\n';
    }
    return out.str();
}

}  // namespace ptm
