#pragma once

// Recursive-descent parser for the formula language.
//
//   formula := disj ; disj := conj ('||' conj)* ; conj := unit ('&&' unit)*
//   unit    := '!' unit | '(' formula ')' | 'exists' IDENT '(' formula ')' | atom
//   atom    := term ('<' | '<=' | '=' | '!=' | '<*') term
//            | 'frac(' term ')' '<' 'frac(' term ')'
//            | term '=' INT 'mod' INT
//   term    := sum ; sum := prefix (('+' | '-') prefix)*
//   prefix  := '-' prefix | INT | IDENT | '(' term ')'
//            | ('f' | 'fbar' | 'F' | 'G') '(' term ')'
//
// A '(' at the start of a unit may open either a parenthesized formula or a
// parenthesized term; the parser tries the atom reading first and backtracks.

#include <cctype>
#include <cstddef>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "zphi/formula.hpp"

namespace zphi::formula {

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, std::size_t offset, std::size_t line, std::size_t column)
        : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) +
                             ": " + message),
          message_(message), offset_(offset), line_(line), column_(column) {}

    const std::string& message() const { return message_; }
    std::size_t offset() const { return offset_; }
    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    std::string message_;
    std::size_t offset_, line_, column_;
};

struct ParseOptions {
    /// Variables that may occur free; any other unbound name is an error.
    std::set<std::string> free_variables;
    std::size_t max_quantifier_depth = 8;
};

namespace detail {

enum class Tok {
    integer, ident, kw_exists, kw_frac, kw_f, kw_fbar, kw_F, kw_G, kw_mod,
    lparen, rparen, plus, minus, less, less_equal, star_less, equal, not_equal,
    bang, and_and, or_or, end
};

struct Token {
    Tok kind;
    std::string text;
    std::size_t offset;
};

inline const char* describe(Tok kind) {
    switch (kind) {
        case Tok::integer: return "integer";
        case Tok::ident: return "identifier";
        case Tok::kw_exists: return "'exists'";
        case Tok::kw_frac: return "'frac'";
        case Tok::kw_f: return "'f'";
        case Tok::kw_fbar: return "'fbar'";
        case Tok::kw_F: return "'F'";
        case Tok::kw_G: return "'G'";
        case Tok::kw_mod: return "'mod'";
        case Tok::lparen: return "'('";
        case Tok::rparen: return "')'";
        case Tok::plus: return "'+'";
        case Tok::minus: return "'-'";
        case Tok::less: return "'<'";
        case Tok::less_equal: return "'<='";
        case Tok::star_less: return "'<*'";
        case Tok::equal: return "'='";
        case Tok::not_equal: return "'!='";
        case Tok::bang: return "'!'";
        case Tok::and_and: return "'&&'";
        case Tok::or_or: return "'||'";
        case Tok::end: return "end of input";
    }
    return "token";
}

class Parser {
public:
    Parser(std::string_view text, const ParseOptions& options) : text_(text), options_(options) {
        tokenize();
    }

    FormulaPtr parse_all() {
        FormulaPtr result;
        try {
            result = parse_formula();
            expect(Tok::end);
        } catch (const ParseError& e) {
            remember(e);
            throw furthest_;
        }
        return result;
    }

private:
    std::string_view text_;
    const ParseOptions& options_;
    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
    std::vector<std::string> scopes_;
    ParseError furthest_{"", 0, 1, 1};
    bool have_furthest_ = false;

    ParseError error_at(std::size_t offset, const std::string& message) const {
        std::size_t line = 1, column = 1;
        for (std::size_t i = 0; i < offset && i < text_.size(); ++i) {
            if (text_[i] == '\n') {
                ++line;
                column = 1;
            } else {
                ++column;
            }
        }
        return ParseError(message, offset, line, column);
    }

    void remember(const ParseError& e) {
        if (!have_furthest_ || e.offset() >= furthest_.offset()) {
            furthest_ = e;
            have_furthest_ = true;
        }
    }

    void tokenize() {
        std::size_t i = 0;
        auto push = [&](Tok kind, std::size_t start, std::size_t len) {
            tokens_.push_back({kind, std::string(text_.substr(start, len)), start});
            i = start + len;
        };
        while (i < text_.size()) {
            const char c = text_[i];
            if (std::isspace(static_cast<unsigned char>(c))) {
                ++i;
                continue;
            }
            const auto next = i + 1 < text_.size() ? text_[i + 1] : '\0';
            if (std::isdigit(static_cast<unsigned char>(c))) {
                std::size_t j = i;
                while (j < text_.size() &&
                       (std::isdigit(static_cast<unsigned char>(text_[j])) ||
                        (text_[j] == '_' && j + 1 < text_.size() &&
                         std::isdigit(static_cast<unsigned char>(text_[j + 1])))))
                    ++j;
                push(Tok::integer, i, j - i);
            } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
                std::size_t j = i;
                while (j < text_.size() &&
                       (std::isalnum(static_cast<unsigned char>(text_[j])) || text_[j] == '_'))
                    ++j;
                const std::string_view word = text_.substr(i, j - i);
                Tok kind = Tok::ident;
                if (word == "exists") kind = Tok::kw_exists;
                else if (word == "frac") kind = Tok::kw_frac;
                else if (word == "f") kind = Tok::kw_f;
                else if (word == "fbar") kind = Tok::kw_fbar;
                else if (word == "F") kind = Tok::kw_F;
                else if (word == "G") kind = Tok::kw_G;
                else if (word == "mod") kind = Tok::kw_mod;
                push(kind, i, j - i);
            } else if (c == '(') push(Tok::lparen, i, 1);
            else if (c == ')') push(Tok::rparen, i, 1);
            else if (c == '+') push(Tok::plus, i, 1);
            else if (c == '-') push(Tok::minus, i, 1);
            else if (c == '<' && next == '=') push(Tok::less_equal, i, 2);
            else if (c == '<' && next == '*') push(Tok::star_less, i, 2);
            else if (c == '<') push(Tok::less, i, 1);
            else if (c == '=') push(Tok::equal, i, 1);
            else if (c == '!' && next == '=') push(Tok::not_equal, i, 2);
            else if (c == '!') push(Tok::bang, i, 1);
            else if (c == '&' && next == '&') push(Tok::and_and, i, 2);
            else if (c == '|' && next == '|') push(Tok::or_or, i, 2);
            else throw error_at(i, std::string("unexpected character '") + c + "'");
        }
        tokens_.push_back({Tok::end, "", text_.size()});
    }

    const Token& peek(std::size_t ahead = 0) const {
        return tokens_[std::min(pos_ + ahead, tokens_.size() - 1)];
    }
    bool at(Tok kind) const { return peek().kind == kind; }

    const Token& expect(Tok kind) {
        if (!at(kind))
            throw error_at(peek().offset, std::string("expected ") + describe(kind) + ", found " +
                                              describe(peek().kind));
        return tokens_[pos_++];
    }

    FormulaPtr parse_formula() {
        FormulaPtr lhs = parse_conj();
        while (at(Tok::or_or)) {
            ++pos_;
            lhs = make(Or{lhs, parse_conj()});
        }
        return lhs;
    }

    FormulaPtr parse_conj() {
        FormulaPtr lhs = parse_unit();
        while (at(Tok::and_and)) {
            ++pos_;
            lhs = make(And{lhs, parse_unit()});
        }
        return lhs;
    }

    FormulaPtr parse_unit() {
        if (at(Tok::bang)) {
            ++pos_;
            return make(Not{parse_unit()});
        }
        if (at(Tok::kw_exists)) return parse_exists();
        if (at(Tok::lparen)) {
            const std::size_t start = pos_;
            try {
                return parse_atom();
            } catch (const ParseError& e) {
                remember(e);
                pos_ = start;
            }
            expect(Tok::lparen);
            FormulaPtr inner = parse_formula();
            expect(Tok::rparen);
            return inner;
        }
        return parse_atom();
    }

    FormulaPtr parse_exists() {
        const Token& keyword = expect(Tok::kw_exists);
        if (scopes_.size() >= options_.max_quantifier_depth)
            throw error_at(keyword.offset, "quantifier nesting exceeds depth " +
                                               std::to_string(options_.max_quantifier_depth));
        const std::string name = expect(Tok::ident).text;
        expect(Tok::lparen);
        scopes_.push_back(name);
        struct Pop {
            std::vector<std::string>& s;
            ~Pop() { s.pop_back(); }
        } pop{scopes_};
        FormulaPtr body = parse_formula();
        expect(Tok::rparen);

        TermPtr lower, upper;
        find_bounds(*body, name, lower, upper);
        if (!lower || !upper)
            throw error_at(keyword.offset, "quantifier over '" + name +
                                               "' needs conjuncts 'lower < " + name + "' and '" +
                                               name + " < upper'");
        return make(Exists{name, lower, upper, body});
    }

    static bool is_var(const Term& t, const std::string& name) {
        const auto* v = std::get_if<Variable>(&t.node);
        return v && v->name == name;
    }

    static void find_bounds(const Formula& f, const std::string& name, TermPtr& lower, TermPtr& upper) {
        if (const auto* a = std::get_if<And>(&f.node)) {
            find_bounds(*a->lhs, name, lower, upper);
            find_bounds(*a->rhs, name, lower, upper);
            return;
        }
        const auto* c = std::get_if<Comparison>(&f.node);
        if (!c || (c->rel != Relation::less && c->rel != Relation::less_equal)) return;
        const bool inclusive = c->rel == Relation::less_equal;
        if (!lower && is_var(*c->rhs, name) && !mentions(*c->lhs, name))
            lower = inclusive ? binary(BinaryOp::subtract, c->lhs, constant(1)) : c->lhs;
        else if (!upper && is_var(*c->lhs, name) && !mentions(*c->rhs, name))
            upper = inclusive ? binary(BinaryOp::add, c->rhs, constant(1)) : c->rhs;
    }

    FormulaPtr parse_atom() {
        if (at(Tok::kw_frac)) {
            TermPtr lhs = parse_frac_operand();
            expect(Tok::less);
            TermPtr rhs = parse_frac_operand();
            return make(FracLess{lhs, rhs});
        }
        TermPtr lhs = parse_term();
        const Token& op = peek();
        switch (op.kind) {
            case Tok::less: ++pos_; return make(Comparison{Relation::less, lhs, parse_term()});
            case Tok::less_equal: ++pos_; return make(Comparison{Relation::less_equal, lhs, parse_term()});
            case Tok::not_equal: ++pos_; return make(Comparison{Relation::not_equal, lhs, parse_term()});
            case Tok::star_less: ++pos_; return make(StarLess{lhs, parse_term()});
            case Tok::equal: {
                ++pos_;
                TermPtr rhs = parse_term();
                if (!at(Tok::kw_mod)) return make(Comparison{Relation::equal, lhs, rhs});
                const auto* residue = std::get_if<Constant>(&rhs->node);
                if (!residue) throw error_at(peek().offset, "residue before 'mod' must be an integer literal");
                ++pos_;
                const Token& modulus_tok = expect(Tok::integer);
                Int modulus = parse_int(modulus_tok.text);
                if (modulus < 2) throw error_at(modulus_tok.offset, "modulus must be at least 2");
                return make(Congruence{lhs, residue->value, modulus});
            }
            default:
                throw error_at(op.offset, std::string("expected comparison operator, found ") +
                                              describe(op.kind));
        }
    }

    TermPtr parse_frac_operand() {
        expect(Tok::kw_frac);
        expect(Tok::lparen);
        TermPtr t = parse_term();
        expect(Tok::rparen);
        return t;
    }

    TermPtr parse_term() {
        TermPtr lhs = parse_prefix();
        while (at(Tok::plus) || at(Tok::minus)) {
            const BinaryOp op = at(Tok::plus) ? BinaryOp::add : BinaryOp::subtract;
            ++pos_;
            lhs = binary(op, lhs, parse_prefix());
        }
        return lhs;
    }

    TermPtr parse_prefix() {
        const Token& tok = peek();
        switch (tok.kind) {
            case Tok::minus:
                ++pos_;
                if (at(Tok::integer)) return constant(Int(-parse_int(tokens_[pos_++].text)));
                return unary(UnaryOp::negate, parse_prefix());
            case Tok::integer:
                ++pos_;
                return constant(parse_int(tok.text));
            case Tok::ident:
                ++pos_;
                if (!in_scope(tok.text))
                    throw error_at(tok.offset, "unbound variable '" + tok.text + "'");
                return var(tok.text);
            case Tok::lparen: {
                ++pos_;
                TermPtr inner = parse_term();
                expect(Tok::rparen);
                return inner;
            }
            case Tok::kw_f: return parse_application(UnaryOp::beatty);
            case Tok::kw_fbar: return parse_application(UnaryOp::beatty_bar);
            case Tok::kw_F: return parse_application(UnaryOp::fib_floor);
            case Tok::kw_G: return parse_application(UnaryOp::fib_odd_floor);
            default:
                throw error_at(tok.offset, std::string("expected term, found ") + describe(tok.kind));
        }
    }

    TermPtr parse_application(UnaryOp op) {
        ++pos_;
        expect(Tok::lparen);
        TermPtr arg = parse_term();
        expect(Tok::rparen);
        return unary(op, arg);
    }

    bool in_scope(const std::string& name) const {
        for (const auto& s : scopes_)
            if (s == name) return true;
        return options_.free_variables.contains(name);
    }
};

}  // namespace detail

/// Parses `text`; names outside `options.free_variables` must be bound by an
/// enclosing quantifier.
inline FormulaPtr parse(std::string_view text, const ParseOptions& options = {}) {
    return detail::Parser(text, options).parse_all();
}

}  // namespace zphi::formula
