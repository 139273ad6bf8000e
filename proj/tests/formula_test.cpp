#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "zphi/evaluator.hpp"
#include "zphi/parser.hpp"

namespace {

using namespace zphi::formula;
using zphi::Int;

bool eval_text(const std::string& text, const Env& env = {}) {
    ParseOptions options;
    for (const auto& [name, value] : env) options.free_variables.insert(name);
    return eval(*parse(text, options), env);
}

TEST(Parse, Examples) {
    const auto phi = parse("f(3) = 4");
    const auto expected = make(Comparison{Relation::equal, unary(UnaryOp::beatty, constant(3)), constant(4)});
    EXPECT_TRUE(equal(phi, expected));

    const auto q = parse("exists x (4 < x && x < 12 && frac(2) < frac(x))");
    const auto* ex = std::get_if<Exists>(&q->node);
    ASSERT_NE(ex, nullptr);
    EXPECT_EQ(ex->var, "x");
    EXPECT_TRUE(equal(ex->lower, constant(4)));
    EXPECT_TRUE(equal(ex->upper, constant(12)));
}

TEST(Parse, SyntaxErrorPosition) {
    try {
        parse("f(");
        FAIL() << "expected a syntax error";
    } catch (const ParseError& e) {
        EXPECT_EQ(e.offset(), 2u);
        EXPECT_EQ(e.line(), 1u);
        EXPECT_EQ(e.column(), 3u);
    }
    try {
        parse("f(1) = 2 &&\n  x < 3");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line(), 2u);
        EXPECT_EQ(e.column(), 3u);
        EXPECT_NE(std::string(e.what()).find("unbound variable 'x'"), std::string::npos);
    }
    EXPECT_THROW(parse("f(1) = 2 $"), ParseError);
    EXPECT_THROW(parse("f(1) = "), ParseError);
    EXPECT_THROW(parse("(f(1) = 2"), ParseError);
    EXPECT_THROW(parse("frac(1) <= frac(2)"), ParseError);
}

TEST(Parse, QuantifierNeedsBounds) {
    EXPECT_THROW(parse("exists x (x < 3)"), ParseError);
    EXPECT_THROW(parse("exists x (0 < x || x < 3)"), ParseError);
    EXPECT_THROW(parse("exists x (x < x + 3 && 0 < x)"), ParseError);
    EXPECT_NO_THROW(parse("exists x (0 <= x && x <= 3)"));
    EXPECT_THROW(parse("exists x (0 < x && x < 3) && x = 1"), ParseError);
}

TEST(Parse, QuantifierDepthLimit) {
    std::string text = "0 = 0";
    for (int i = 0; i < 3; ++i) {
        const std::string v = "v" + std::to_string(i);
        text = "exists " + v + " (0 < " + v + " && " + v + " < 2 && " + text + ")";
    }
    EXPECT_NO_THROW(parse(text));
    EXPECT_THROW(parse(text, ParseOptions{{}, 2}), ParseError);
}

TEST(Parse, Congruence) {
    const auto phi = parse("f(x) = 1 mod 3", ParseOptions{{"x"}});
    const auto* c = std::get_if<Congruence>(&phi->node);
    ASSERT_NE(c, nullptr);
    EXPECT_EQ(c->residue, 1);
    EXPECT_EQ(c->modulus, 3);
    EXPECT_THROW(parse("x = 1 mod 1", ParseOptions{{"x"}}), ParseError);
    EXPECT_THROW(parse("x = y mod 3", ParseOptions{{"x", "y"}}), ParseError);
    EXPECT_THROW(parse("x = 1 mod y", ParseOptions{{"x", "y"}}), ParseError);
}

TEST(Parse, IntegersAndUnaryMinus) {
    EXPECT_TRUE(equal(parse("1_000 = -5"), make(Comparison{Relation::equal, constant(1000), constant(-5)})));
    EXPECT_TRUE(equal(parse("-f(2) = -(3)"),
                      make(Comparison{Relation::equal, unary(UnaryOp::negate, unary(UnaryOp::beatty, constant(2))),
                                      unary(UnaryOp::negate, constant(3))})));
    // Subtraction is left associative.
    EXPECT_TRUE(eval_text("10 - 3 - 2 = 5"));
    EXPECT_TRUE(eval_text("2 - -3 = 5"));
}

TEST(Eval, Examples) {
    EXPECT_TRUE(eval_text("f(5) = 8"));
    EXPECT_TRUE(eval_text("frac(5) < frac(2)"));
    EXPECT_TRUE(eval_text("x + 0 = x", {{"x", 7}}));
    EXPECT_TRUE(eval_text("fbar(5) = 13 && F(20) = 13 && G(20) = 8"));
    EXPECT_TRUE(eval_text("5 <* 2 && !(2 <* 5)"));
    EXPECT_TRUE(eval_text("f(x) = 1 mod 3 || !(f(x) = 1 mod 3)", {{"x", 4}}));
    EXPECT_TRUE(eval_text("-7 = 3 mod 5"));
    EXPECT_FALSE(eval_text("1 < 0 || 2 <= 1"));
}

TEST(Eval, Errors) {
    EXPECT_THROW(eval_text("F(0) = 1"), EvalError);
    EXPECT_THROW(eval_text("G(-3) = 1"), EvalError);
    const auto phi = parse("x = 1", ParseOptions{{"x"}});
    EXPECT_THROW(eval(*phi, {}), EvalError);
    EXPECT_THROW(decide(*phi), EvalError);

    const auto wide = parse("exists x (0 < x && x < 2000000 && f(x) = 0)");
    EXPECT_THROW(decide(*wide), ResourceError);
    EvalOptions small;
    small.enumeration_budget = 10;
    EXPECT_THROW(decide(*parse("exists x (0 < x && x < 12 && x = 3)"), small), ResourceError);
    EXPECT_TRUE(decide(*parse("exists x (0 < x && x < 11 && x = 3)"), small));
}

TEST(Decide, Examples) {
    EXPECT_TRUE(decide(*parse("f(0) = 0")));
    EXPECT_TRUE(decide(*parse("exists x (0 < x && x < 3 && f(x) = 3)")));
    EXPECT_FALSE(decide(*parse("exists x (0 < x && x < 2 && f(x) = 3)")));
    EXPECT_TRUE(decide(*parse("exists x (0 < x && x < 5 && exists y (x < y && y < 5 && f(y) - f(x) = 5))")));
    EXPECT_FALSE(decide(*parse("exists x (3 < x && x < 3 && 0 = 0)")));
}

TEST(DecideBox, Examples) {
    EXPECT_EQ(decide_box(*parse("exists x (4 < x && x < 12 && frac(2) < frac(x) && frac(x) < frac(1))")), true);
    EXPECT_EQ(decide_box(*parse("exists x (4 < x && x < 12 && frac(8) < frac(x))")), false);
    EXPECT_EQ(decide_box(*parse("exists x (4 < x && x < 6 && frac(2) < frac(x))")), false);
    EXPECT_EQ(decide_box(*parse("exists x (f(3) < x && x < 12 + 1 && frac(x) < frac(-2))")), true);
}

TEST(DecideBox, ShapeMismatchFallsBack) {
    EXPECT_FALSE(decide_box(*parse("exists x (4 < x && x < 12 && f(x) = 8)")).has_value());
    EXPECT_FALSE(decide_box(*parse("f(3) = 4")).has_value());
    EXPECT_FALSE(decide_box(*parse("exists x (4 < x && x < 12 && frac(1) < frac(x) && frac(2) < frac(x))")).has_value());
    EXPECT_FALSE(decide_box(*parse("exists x (4 < x && x < 12 && frac(x) < frac(x + 1))")).has_value());
}

TEST(DecideBox, InclusiveBounds) {
    // 0 <= x <= 5 includes x = 0, the global minimum.
    const auto phi = parse("exists x (0 <= x && x <= 5 && frac(x) < frac(5))");
    EXPECT_EQ(decide_box(*phi), true);
    EXPECT_EQ(enumerate(*phi), true);
}

TEST(DecideBox, MatchesEnumeration) {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> bound(-60, 60), constant_value(-40, 40), coin(0, 3);
    for (int i = 0; i < 400; ++i) {
        int lo = bound(rng), hi = bound(rng);
        if (lo > hi) std::swap(lo, hi);
        std::string body = std::to_string(lo) + " < x && x < " + std::to_string(hi);
        const int shape = coin(rng);
        if (shape & 1) body += " && frac(" + std::to_string(constant_value(rng)) + ") < frac(x)";
        if (shape & 2) body += " && frac(x) < frac(" + std::to_string(constant_value(rng)) + ")";
        const auto phi = parse("exists x (" + body + ")");
        const auto fast = decide_box(*phi);
        ASSERT_TRUE(fast.has_value()) << body;
        ASSERT_EQ(*fast, enumerate(*phi)) << body;
        ASSERT_EQ(decide(*phi), *fast) << body;
    }
}

TEST(StarLess, AgreesWithFracLess) {
    const auto star = parse("x <* y", ParseOptions{{"x", "y"}});
    const auto frac = parse("frac(x) < frac(y)", ParseOptions{{"x", "y"}});
    for (int x = -40; x <= 40; ++x)
        for (int y = -40; y <= 40; ++y) {
            const Env env{{"x", x}, {"y", y}};
            ASSERT_EQ(eval(*star, env), eval(*frac, env)) << x << ' ' << y;
            ASSERT_EQ(eval(*frac, env), oracle::frac_compare(x, y) < 0);
        }
}

// Random AST generation for the printer round trip.
class Generator {
public:
    explicit Generator(std::uint64_t seed) : rng_(seed) {}

    TermPtr term(int depth, const std::vector<std::string>& scope) {
        const int pick = roll(depth <= 0 ? 2 : 8);
        switch (pick) {
            case 0: return constant(Int(roll(2001)) - 1000);
            case 1:
                if (scope.empty()) return constant(Int(roll(50)));
                return var(scope[roll(static_cast<int>(scope.size()))]);
            case 2: return binary(BinaryOp::add, term(depth - 1, scope), term(depth - 1, scope));
            case 3: return binary(BinaryOp::subtract, term(depth - 1, scope), term(depth - 1, scope));
            case 4: return unary(UnaryOp::negate, term(depth - 1, scope));
            case 5: return unary(UnaryOp::beatty, term(depth - 1, scope));
            case 6: return unary(UnaryOp::beatty_bar, term(depth - 1, scope));
            default: return unary(roll(2) ? UnaryOp::fib_floor : UnaryOp::fib_odd_floor, term(depth - 1, scope));
        }
    }

    FormulaPtr formula(int depth, std::vector<std::string> scope) {
        const int pick = roll(depth <= 0 ? 4 : 8);
        switch (pick) {
            case 0: {
                static constexpr Relation rels[] = {Relation::less, Relation::less_equal, Relation::equal,
                                                    Relation::not_equal};
                return make(Comparison{rels[roll(4)], term(2, scope), term(2, scope)});
            }
            case 1: return make(StarLess{term(2, scope), term(2, scope)});
            case 2: return make(FracLess{term(2, scope), term(2, scope)});
            case 3: return make(Congruence{term(2, scope), Int(roll(21)) - 10, Int(2 + roll(9))});
            case 4: return make(Not{formula(depth - 1, scope)});
            case 5: return make(And{formula(depth - 1, scope), formula(depth - 1, scope)});
            case 6: return make(Or{formula(depth - 1, scope), formula(depth - 1, scope)});
            default: {
                const std::string name = "v" + std::to_string(scope.size());
                TermPtr lower = term(1, scope);
                TermPtr upper = term(1, scope);
                const bool inclusive = roll(2);
                const Relation rel = inclusive ? Relation::less_equal : Relation::less;
                scope.push_back(name);
                FormulaPtr body = make(And{
                    make(And{make(Comparison{rel, lower, var(name)}), make(Comparison{rel, var(name), upper})}),
                    formula(depth - 1, scope)});
                if (inclusive) {
                    lower = binary(BinaryOp::subtract, lower, constant(1));
                    upper = binary(BinaryOp::add, upper, constant(1));
                }
                return make(Exists{name, lower, upper, body});
            }
        }
    }

private:
    std::mt19937_64 rng_;
    int roll(int n) { return static_cast<int>(rng_() % static_cast<std::uint64_t>(n)); }
};

TEST(Render, RoundTrip) {
    Generator gen(2024);
    const ParseOptions options{{"a", "b"}};
    for (int i = 0; i < 2000; ++i) {
        const auto phi = gen.formula(4, {"a", "b"});
        const std::string text = render(*phi);
        FormulaPtr back;
        ASSERT_NO_THROW(back = parse(text, options)) << text;
        ASSERT_TRUE(equal(phi, back)) << text << "\n" << render(*back);
        ASSERT_EQ(render(*back), text);
    }
}

TEST(Render, Canonical) {
    EXPECT_EQ(render(*parse("exists x (4 < x && x < 12 && frac(2) < frac(x))")),
              "exists x (((4 < x && x < 12) && frac(2) < frac(x)))");
    EXPECT_EQ(render(*parse("!(1 < 2) || 3 <* 4")), "(!(1 < 2) || 3 <* 4)");
    EXPECT_EQ(render(*parse("x - 1 + 2 = 0 mod 7", ParseOptions{{"x"}})), "((x - 1) + 2) = 0 mod 7");
}

TEST(FreeVariables, ScopeAware) {
    const auto phi = parse("exists x (a < x && x < b && f(x) = c)", ParseOptions{{"a", "b", "c"}});
    EXPECT_EQ(free_variables(*phi), (std::set<std::string>{"a", "b", "c"}));
    EXPECT_TRUE(eval(*phi, {{"a", 0}, {"b", 3}, {"c", 3}}));
}

}  // namespace
