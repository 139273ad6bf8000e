#pragma once

// Abstract syntax for bounded formulas over <Z, <, +, f, F, 0>: terms built
// from integers, variables, +, -, f, fbar, F and G; atoms for numerical
// order, equality, decimal order, fractional-part order and congruence;
// boolean connectives and bounded existential quantifiers.
//
// Nodes are immutable and shared through shared_ptr<const ...>.

#include <memory>
#include <set>
#include <string>
#include <utility>
#include <variant>

#include "zphi/integer.hpp"

namespace zphi::formula {

struct Term;
struct Formula;
using TermPtr = std::shared_ptr<const Term>;
using FormulaPtr = std::shared_ptr<const Formula>;

struct Variable {
    std::string name;
};

struct Constant {
    Int value;
};

enum class BinaryOp { add, subtract };

struct BinaryTerm {
    BinaryOp op;
    TermPtr lhs;
    TermPtr rhs;
};

enum class UnaryOp { negate, beatty, beatty_bar, fib_floor, fib_odd_floor };

struct UnaryTerm {
    UnaryOp op;
    TermPtr arg;
};

struct Term {
    std::variant<Variable, Constant, BinaryTerm, UnaryTerm> node;
};

enum class Relation { less, less_equal, equal, not_equal };

struct Comparison {
    Relation rel;
    TermPtr lhs;
    TermPtr rhs;
};

/// lhs <* rhs, the decimal order written through its defining equation.
struct StarLess {
    TermPtr lhs;
    TermPtr rhs;
};

/// frac(lhs) < frac(rhs), decided by the exact comparator.
struct FracLess {
    TermPtr lhs;
    TermPtr rhs;
};

/// term = residue mod modulus
struct Congruence {
    TermPtr term;
    Int residue;
    Int modulus;
};

struct Not {
    FormulaPtr body;
};

struct And {
    FormulaPtr lhs;
    FormulaPtr rhs;
};

struct Or {
    FormulaPtr lhs;
    FormulaPtr rhs;
};

/// exists var (body). The bounds are extracted from top-level conjuncts of
/// the body of the form `lower < var` and `var < upper` (or `<=`, shifted by
/// one); they never mention var.
struct Exists {
    std::string var;
    TermPtr lower;
    TermPtr upper;
    FormulaPtr body;
};

struct Formula {
    std::variant<Comparison, StarLess, FracLess, Congruence, Not, And, Or, Exists> node;
};

// Construction helpers.
inline TermPtr var(std::string name) { return std::make_shared<const Term>(Term{Variable{std::move(name)}}); }
inline TermPtr constant(Int value) { return std::make_shared<const Term>(Term{Constant{std::move(value)}}); }
inline TermPtr binary(BinaryOp op, TermPtr l, TermPtr r) {
    return std::make_shared<const Term>(Term{BinaryTerm{op, std::move(l), std::move(r)}});
}
inline TermPtr unary(UnaryOp op, TermPtr arg) {
    return std::make_shared<const Term>(Term{UnaryTerm{op, std::move(arg)}});
}
template <class Node>
FormulaPtr make(Node node) {
    return std::make_shared<const Formula>(Formula{std::move(node)});
}

// Structural equality.
bool equal(const Term& a, const Term& b);
bool equal(const Formula& a, const Formula& b);

inline bool equal(const TermPtr& a, const TermPtr& b) {
    return a == b || (a && b && equal(*a, *b));
}
inline bool equal(const FormulaPtr& a, const FormulaPtr& b) {
    return a == b || (a && b && equal(*a, *b));
}

inline bool equal(const Term& a, const Term& b) {
    if (a.node.index() != b.node.index()) return false;
    return std::visit(
        [&](const auto& x) -> bool {
            using T = std::decay_t<decltype(x)>;
            const auto& y = std::get<T>(b.node);
            if constexpr (std::is_same_v<T, Variable>) return x.name == y.name;
            else if constexpr (std::is_same_v<T, Constant>) return x.value == y.value;
            else if constexpr (std::is_same_v<T, BinaryTerm>)
                return x.op == y.op && equal(x.lhs, y.lhs) && equal(x.rhs, y.rhs);
            else return x.op == y.op && equal(x.arg, y.arg);
        },
        a.node);
}

inline bool equal(const Formula& a, const Formula& b) {
    if (a.node.index() != b.node.index()) return false;
    return std::visit(
        [&](const auto& x) -> bool {
            using T = std::decay_t<decltype(x)>;
            const auto& y = std::get<T>(b.node);
            if constexpr (std::is_same_v<T, Comparison>)
                return x.rel == y.rel && equal(x.lhs, y.lhs) && equal(x.rhs, y.rhs);
            else if constexpr (std::is_same_v<T, StarLess> || std::is_same_v<T, FracLess>)
                return equal(x.lhs, y.lhs) && equal(x.rhs, y.rhs);
            else if constexpr (std::is_same_v<T, Congruence>)
                return x.residue == y.residue && x.modulus == y.modulus && equal(x.term, y.term);
            else if constexpr (std::is_same_v<T, Not>) return equal(x.body, y.body);
            else if constexpr (std::is_same_v<T, And> || std::is_same_v<T, Or>)
                return equal(x.lhs, y.lhs) && equal(x.rhs, y.rhs);
            else
                return x.var == y.var && equal(x.lower, y.lower) && equal(x.upper, y.upper) &&
                       equal(x.body, y.body);
        },
        a.node);
}

inline bool mentions(const Term& t, const std::string& name) {
    return std::visit(
        [&](const auto& x) -> bool {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, Variable>) return x.name == name;
            else if constexpr (std::is_same_v<T, Constant>) return false;
            else if constexpr (std::is_same_v<T, BinaryTerm>)
                return mentions(*x.lhs, name) || mentions(*x.rhs, name);
            else return mentions(*x.arg, name);
        },
        t.node);
}

inline void collect_free(const Term& t, const std::set<std::string>& bound, std::set<std::string>& out) {
    std::visit(
        [&](const auto& x) {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, Variable>) {
                if (!bound.contains(x.name)) out.insert(x.name);
            } else if constexpr (std::is_same_v<T, BinaryTerm>) {
                collect_free(*x.lhs, bound, out);
                collect_free(*x.rhs, bound, out);
            } else if constexpr (std::is_same_v<T, UnaryTerm>) {
                collect_free(*x.arg, bound, out);
            }
        },
        t.node);
}

inline void collect_free(const Formula& f, std::set<std::string> bound, std::set<std::string>& out) {
    std::visit(
        [&](const auto& x) {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, Comparison> || std::is_same_v<T, StarLess> ||
                          std::is_same_v<T, FracLess>) {
                collect_free(*x.lhs, bound, out);
                collect_free(*x.rhs, bound, out);
            } else if constexpr (std::is_same_v<T, Congruence>) {
                collect_free(*x.term, bound, out);
            } else if constexpr (std::is_same_v<T, Not>) {
                collect_free(*x.body, bound, out);
            } else if constexpr (std::is_same_v<T, And> || std::is_same_v<T, Or>) {
                collect_free(*x.lhs, bound, out);
                collect_free(*x.rhs, bound, out);
            } else {
                collect_free(*x.lower, bound, out);
                collect_free(*x.upper, bound, out);
                bound.insert(x.var);
                collect_free(*x.body, bound, out);
            }
        },
        f.node);
}

inline std::set<std::string> free_variables(const Formula& f) {
    std::set<std::string> out;
    collect_free(f, {}, out);
    return out;
}

// Canonical printer: binary terms and connectives are fully parenthesized,
// so parse(render(phi)) reproduces phi exactly.

inline std::string render(const Term& t) {
    return std::visit(
        [](const auto& x) -> std::string {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, Variable>) {
                return x.name;
            } else if constexpr (std::is_same_v<T, Constant>) {
                return to_string(x.value);
            } else if constexpr (std::is_same_v<T, BinaryTerm>) {
                return "(" + render(*x.lhs) + (x.op == BinaryOp::add ? " + " : " - ") + render(*x.rhs) + ")";
            } else {
                switch (x.op) {
                    case UnaryOp::negate: return "-(" + render(*x.arg) + ")";
                    case UnaryOp::beatty: return "f(" + render(*x.arg) + ")";
                    case UnaryOp::beatty_bar: return "fbar(" + render(*x.arg) + ")";
                    case UnaryOp::fib_floor: return "F(" + render(*x.arg) + ")";
                    case UnaryOp::fib_odd_floor: return "G(" + render(*x.arg) + ")";
                }
                return {};
            }
        },
        t.node);
}

inline const char* relation_symbol(Relation rel) {
    switch (rel) {
        case Relation::less: return "<";
        case Relation::less_equal: return "<=";
        case Relation::equal: return "=";
        case Relation::not_equal: return "!=";
    }
    return "?";
}

inline std::string render(const Formula& f) {
    return std::visit(
        [](const auto& x) -> std::string {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, Comparison>)
                return render(*x.lhs) + " " + relation_symbol(x.rel) + " " + render(*x.rhs);
            else if constexpr (std::is_same_v<T, StarLess>)
                return render(*x.lhs) + " <* " + render(*x.rhs);
            else if constexpr (std::is_same_v<T, FracLess>)
                return "frac(" + render(*x.lhs) + ") < frac(" + render(*x.rhs) + ")";
            else if constexpr (std::is_same_v<T, Congruence>)
                return render(*x.term) + " = " + to_string(x.residue) + " mod " + to_string(x.modulus);
            else if constexpr (std::is_same_v<T, Not>)
                return "!(" + render(*x.body) + ")";
            else if constexpr (std::is_same_v<T, And>)
                return "(" + render(*x.lhs) + " && " + render(*x.rhs) + ")";
            else if constexpr (std::is_same_v<T, Or>)
                return "(" + render(*x.lhs) + " || " + render(*x.rhs) + ")";
            else
                return "exists " + x.var + " (" + render(*x.body) + ")";
        },
        f.node);
}

}  // namespace zphi::formula
