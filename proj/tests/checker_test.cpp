#include <gtest/gtest.h>

#include "zphi/checker.hpp"

namespace {

using namespace zphi::check;
using zphi::Int;

CheckSpec small_spec() {
    CheckSpec spec;
    spec.exhaustive_bound = 60;
    spec.random_trials = 50;
    spec.witness_bound = 40;
    spec.interval_bound = 30;
    spec.constant_bound = 8;
    return spec;
}

bool has_note(const CheckReport& r, const std::string& fragment) {
    for (const auto& n : r.notes)
        if (n.find(fragment) != std::string::npos) return true;
    return false;
}

TEST(Checker, SuitesPassAtSmallBounds) {
    const auto reports = check_all(small_spec());
    ASSERT_EQ(reports.size(), 4u);
    for (const auto& r : reports) {
        EXPECT_TRUE(r.pass()) << r.name << ": " << to_json(r);
        EXPECT_GT(r.instances, 0u) << r.name;
    }
    EXPECT_TRUE(all_pass(reports));
}

TEST(Checker, BoundZeroIsVacuousWithNote) {
    CheckSpec spec;
    spec.exhaustive_bound = 0;
    spec.random_trials = 0;
    const auto r = check_basic_axioms(spec);
    EXPECT_TRUE(r.pass());
    EXPECT_TRUE(has_note(r, "x = 0"));
}

struct FaultyKernel {
    template <zphi::Integer I>
    I f(const I& x) const {
        return x == 5 ? I(9) : zphi::beatty_f(x);
    }
};

TEST(Checker, InjectedFaultIsReported) {
    CheckSpec spec = small_spec();
    spec.exhaustive_bound = 10;
    spec.random_trials = 0;
    const auto r = check_basic_axioms(spec, FaultyKernel{});
    ASSERT_FALSE(r.pass());
    bool found = false;
    for (const auto& cx : r.counterexamples) found = found || (!cx.empty() && cx[0] == 5);
    EXPECT_TRUE(found) << to_json(r);
}

TEST(Checker, RecordingIsCapped) {
    CheckSpec spec = small_spec();
    spec.exhaustive_bound = 30;
    spec.random_trials = 0;
    spec.max_recorded = 3;
    const auto r = check_basic_axioms(spec, FaultyKernel{});
    EXPECT_EQ(r.counterexamples.size(), 3u);
    EXPECT_TRUE(has_note(r, "recorded"));
}

TEST(Checker, Deterministic) {
    const auto spec = small_spec();
    EXPECT_EQ(to_json(check_order_and_density(spec)), to_json(check_order_and_density(spec)));
    EXPECT_EQ(to_json(check_extrema(spec)), to_json(check_extrema(spec)));
}

TEST(Checker, FibonacciNotesRecordAmendments) {
    const auto r = check_fib_lemmas(small_spec());
    EXPECT_TRUE(r.pass());
    EXPECT_FALSE(r.notes.empty());
}

TEST(Checker, AsPrintedFormsFail) {
    CheckSpec spec = small_spec();
    spec.exhaustive_bound = 200;
    const auto reports = check_as_printed(spec);
    ASSERT_FALSE(reports.empty());
    for (const auto& r : reports) EXPECT_FALSE(r.pass()) << r.name;
    const auto& f_add = reports.front();
    EXPECT_EQ(f_add.name, "as-printed.f_add");
    EXPECT_TRUE(has_note(f_add, "cases 3-4"));
}

TEST(Json, RoundTripWithBigIntegers) {
    CheckReport r;
    r.name = "demo \"quoted\"";
    r.instances = 123456789012345ull;
    r.counterexamples = {{Int(5), Int(-3)},
                         {Int("123456789012345678901234567890"), Int("-98765432109876543210987654321")},
                         {}};
    r.notes = {"first", "second, with \\ backslash"};
    const std::string text = to_json(r);
    const auto back = report_from_json(text);
    EXPECT_EQ(back.name, r.name);
    EXPECT_EQ(back.instances, r.instances);
    EXPECT_EQ(back.counterexamples, r.counterexamples);
    EXPECT_EQ(back.notes, r.notes);
    EXPECT_EQ(to_json(back), text);
    EXPECT_NE(text.find("\"pass\":false"), std::string::npos);
}

TEST(Json, SchemaKeys) {
    CheckReport r;
    r.name = "empty";
    EXPECT_EQ(to_json(r), R"({"name":"empty","instances":0,"counterexamples":[],"notes":[],"pass":true})");
}

TEST(Json, RejectsMalformed) {
    EXPECT_THROW(report_from_json("{"), std::invalid_argument);
    EXPECT_THROW(report_from_json(R"({"name":"x","instances":0,"counterexamples":[],"notes":[]})"),
                 std::invalid_argument);
    EXPECT_THROW(report_from_json(R"({"name":"x","instances":0,"counterexamples":[[1]],"notes":[],"pass":true})"),
                 std::invalid_argument);
    EXPECT_THROW(report_from_json(R"({"name":"x","instances":1.5,"counterexamples":[],"notes":[],"pass":true})"),
                 std::invalid_argument);
}

}  // namespace
