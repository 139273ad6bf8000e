#pragma once

// Evaluation and decision of formulas. Bounded quantifiers are evaluated by
// enumerating their interior, except that a quantifier of box shape
//
//   exists x (lo < x && x < hi && frac(c) < frac(x) && frac(x) < frac(d))
//
// (either frac constraint optional, c and d free of x) is decided from the
// constrained extrema without enumeration.

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>

#include "zphi/extrema.hpp"
#include "zphi/fib.hpp"
#include "zphi/formula.hpp"
#include "zphi/kernel.hpp"

namespace zphi::formula {

class EvalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A quantifier interior larger than the enumeration budget.
class ResourceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

using Env = std::map<std::string, Int>;

struct EvalOptions {
    std::size_t enumeration_budget = 1'000'000;
    bool use_box_path = true;
    ExtremaOptions extrema{};
};

inline Int eval(const Term& t, const Env& env) {
    return std::visit(
        [&](const auto& x) -> Int {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, Variable>) {
                auto it = env.find(x.name);
                if (it == env.end()) throw EvalError("no binding for variable '" + x.name + "'");
                return it->second;
            } else if constexpr (std::is_same_v<T, Constant>) {
                return x.value;
            } else if constexpr (std::is_same_v<T, BinaryTerm>) {
                Int l = eval(*x.lhs, env);
                Int r = eval(*x.rhs, env);
                return x.op == BinaryOp::add ? Int(l + r) : Int(l - r);
            } else {
                Int a = eval(*x.arg, env);
                switch (x.op) {
                    case UnaryOp::negate: return Int(-a);
                    case UnaryOp::beatty: return beatty_f(a);
                    case UnaryOp::beatty_bar: return fbar(a);
                    case UnaryOp::fib_floor:
                        if (a < 1) throw EvalError("F(" + to_string(a) + ") is undefined: argument must be >= 1");
                        return fibfloor(a);
                    case UnaryOp::fib_odd_floor:
                        if (a < 1) throw EvalError("G(" + to_string(a) + ") is undefined: argument must be >= 1");
                        return g_func(a);
                }
                return a;
            }
        },
        t.node);
}

namespace detail {

struct BoxShape {
    const Term* lower_frac = nullptr;  // frac(c) < frac(x)
    const Term* upper_frac = nullptr;  // frac(x) < frac(d)
};

inline bool is_var(const Term& t, const std::string& name) {
    const auto* v = std::get_if<Variable>(&t.node);
    return v && v->name == name;
}

// Matches the conjuncts of a quantifier body against the box shape: exactly
// the two bounds plus at most one frac constraint on each side.
inline bool match_box(const Formula& f, const Exists& q, BoxShape& shape, int& bounds_seen) {
    if (const auto* a = std::get_if<And>(&f.node))
        return match_box(*a->lhs, q, shape, bounds_seen) && match_box(*a->rhs, q, shape, bounds_seen);
    if (const auto* c = std::get_if<Comparison>(&f.node)) {
        if (c->rel != Relation::less && c->rel != Relation::less_equal) return false;
        const bool is_lower = is_var(*c->rhs, q.var) && !mentions(*c->lhs, q.var);
        const bool is_upper = is_var(*c->lhs, q.var) && !mentions(*c->rhs, q.var);
        if (!is_lower && !is_upper) return false;
        ++bounds_seen;
        return true;
    }
    if (const auto* fl = std::get_if<FracLess>(&f.node)) {
        if (is_var(*fl->rhs, q.var) && !mentions(*fl->lhs, q.var) && !shape.lower_frac) {
            shape.lower_frac = fl->lhs.get();
            return true;
        }
        if (is_var(*fl->lhs, q.var) && !mentions(*fl->rhs, q.var) && !shape.upper_frac) {
            shape.upper_frac = fl->rhs.get();
            return true;
        }
    }
    return false;
}

}  // namespace detail

/// Decides a box-shaped quantifier through the extrema machinery. Returns
/// nullopt when the quantifier does not have box shape.
inline std::optional<bool> try_decide_box(const Exists& q, const Env& env, const EvalOptions& options = {}) {
    detail::BoxShape shape;
    int bounds_seen = 0;
    if (!detail::match_box(*q.body, q, shape, bounds_seen) || bounds_seen != 2) return std::nullopt;

    const Interval<Int> iv{eval(*q.lower, env), eval(*q.upper, env)};
    if (!iv.has_interior()) return false;
    if (shape.lower_frac && shape.upper_frac)
        return exists_in_box(iv, eval(*shape.lower_frac, env), eval(*shape.upper_frac, env), options.extrema);
    if (shape.lower_frac) return constrained_min(iv, eval(*shape.lower_frac, env), options.extrema).has_value();
    if (shape.upper_frac) return constrained_max(iv, eval(*shape.upper_frac, env), options.extrema).has_value();
    return true;
}

inline bool eval(const Formula& f, const Env& env, const EvalOptions& options = {});

namespace detail {

inline bool eval_exists(const Exists& q, const Env& env, const EvalOptions& options) {
    if (options.use_box_path)
        if (auto decided = try_decide_box(q, env, options)) return *decided;

    const Int lo = eval(*q.lower, env);
    const Int hi = eval(*q.upper, env);
    if (hi - lo < 2) return false;
    if (hi - lo - 1 > Int(options.enumeration_budget))
        throw ResourceError("quantifier over '" + q.var + "' spans " + to_string(Int(hi - lo - 1)) +
                            " points, above the enumeration budget of " +
                            std::to_string(options.enumeration_budget));
    Env inner = env;
    Int& slot = inner[q.var];
    for (Int t = lo + 1; t < hi; ++t) {
        slot = t;
        if (eval(*q.body, inner, options)) return true;
    }
    return false;
}

}  // namespace detail

inline bool eval(const Formula& f, const Env& env, const EvalOptions& options) {
    return std::visit(
        [&](const auto& x) -> bool {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, Comparison>) {
                const Int l = eval(*x.lhs, env);
                const Int r = eval(*x.rhs, env);
                switch (x.rel) {
                    case Relation::less: return l < r;
                    case Relation::less_equal: return l <= r;
                    case Relation::equal: return l == r;
                    case Relation::not_equal: return l != r;
                }
                return false;
            } else if constexpr (std::is_same_v<T, StarLess>) {
                return star_less(eval(*x.lhs, env), eval(*x.rhs, env));
            } else if constexpr (std::is_same_v<T, FracLess>) {
                return frac_less(eval(*x.lhs, env), eval(*x.rhs, env));
            } else if constexpr (std::is_same_v<T, Congruence>) {
                return floor_mod(Int(eval(*x.term, env) - x.residue), x.modulus) == 0;
            } else if constexpr (std::is_same_v<T, Not>) {
                return !eval(*x.body, env, options);
            } else if constexpr (std::is_same_v<T, And>) {
                return eval(*x.lhs, env, options) && eval(*x.rhs, env, options);
            } else if constexpr (std::is_same_v<T, Or>) {
                return eval(*x.lhs, env, options) || eval(*x.rhs, env, options);
            } else {
                return detail::eval_exists(x, env, options);
            }
        },
        f.node);
}

/// Box decision for a sentence `exists x (...)`; nullopt on shape mismatch.
inline std::optional<bool> decide_box(const Formula& phi, const EvalOptions& options = {}) {
    const auto* q = std::get_if<Exists>(&phi.node);
    if (!q || !free_variables(phi).empty()) return std::nullopt;
    return try_decide_box(*q, {}, options);
}

/// Truth value of a sentence; box-shaped quantifiers skip enumeration.
inline bool decide(const Formula& phi, const EvalOptions& options = {}) {
    const auto free = free_variables(phi);
    if (!free.empty()) throw EvalError("decide: '" + *free.begin() + "' is free; a sentence is required");
    return eval(phi, {}, options);
}

/// Truth value of a sentence by enumeration alone.
inline bool enumerate(const Formula& phi, const EvalOptions& options = {}) {
    EvalOptions plain = options;
    plain.use_box_path = false;
    return decide(phi, plain);
}

}  // namespace zphi::formula
