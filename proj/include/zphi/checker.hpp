#pragma once

// Verification sweeps for the axioms and lemmas the library relies on. Each
// suite returns a CheckReport: how many instances were examined, the
// offending inputs (if any) and informational notes. A report passes iff it
// has no counterexamples.
//
// Exhaustive parts run on int64 (admissible far beyond any desk-scale
// bound); random parts draw signed values of up to 256 bits and run on Int.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "zphi/extrema.hpp"
#include "zphi/fib.hpp"
#include "zphi/kernel.hpp"

namespace zphi::check {

using Small = std::int64_t;

struct CheckSpec {
    std::string name = "all";
    Small exhaustive_bound = 200;
    std::size_t random_trials = 1000;
    std::uint64_t seed = 42;
    /// Pair range for the witness (density) sweep.
    Small witness_bound = 500;
    /// lo/hi range for the constrained-extrema sweep over all intervals.
    Small interval_bound = 300;
    /// |c|, |d| range for constrained extrema.
    Small constant_bound = 50;
    /// Counterexamples stored per report; all are counted.
    std::size_t max_recorded = 32;
};

struct CheckReport {
    std::string name;
    std::uint64_t instances = 0;
    std::vector<std::vector<Int>> counterexamples;
    std::vector<std::string> notes;

    bool pass() const { return counterexamples.empty(); }
};

/// The library's own Beatty function; checks are parameterized on the
/// kernel so tests can inject faults.
struct StandardKernel {
    template <Integer I>
    I f(const I& x) const {
        return beatty_f(x);
    }
};

namespace detail {

class Recorder {
public:
    Recorder(std::string name, std::size_t limit) : limit_(limit) { report_.name = std::move(name); }

    void count(std::uint64_t n = 1) { report_.instances += n; }

    template <class... Ts>
    void fail(const Ts&... inputs) {
        ++failures_;
        if (report_.counterexamples.size() < limit_) report_.counterexamples.push_back({Int(inputs)...});
    }

    // Convenience: count one instance and record a failure unless `ok`.
    template <class... Ts>
    void expect(bool ok, const Ts&... inputs) {
        count();
        if (!ok) fail(inputs...);
    }

    void note(std::string text) { report_.notes.push_back(std::move(text)); }
    std::uint64_t failures() const { return failures_; }

    CheckReport finish() {
        std::sort(report_.counterexamples.begin(), report_.counterexamples.end());
        if (failures_ > report_.counterexamples.size())
            note(std::to_string(failures_) + " counterexamples found, first " +
                 std::to_string(report_.counterexamples.size()) + " recorded");
        return std::move(report_);
    }

private:
    CheckReport report_;
    std::size_t limit_;
    std::uint64_t failures_ = 0;
};

// FNV-1a, so seeds derived from suite names are identical on every platform.
inline std::uint64_t stable_hash(std::string_view text) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

class Random {
public:
    Random(std::uint64_t seed, std::string_view stream) : engine_(seed ^ stable_hash(stream)) {}

    Small uniform(Small lo, Small hi) { return std::uniform_int_distribution<Small>(lo, hi)(engine_); }

    /// Signed value with a uniformly chosen bit length in [1, 256].
    Int big() {
        const unsigned bits = static_cast<unsigned>(uniform(1, 256));
        Int v = 0;
        for (int w = 0; w < 4; ++w) v = (v << 64) | Int(engine_());
        v &= (Int(1) << bits) - 1;
        v |= Int(1) << (bits - 1);
        return uniform(0, 1) ? Int(-v) : v;
    }

private:
    std::mt19937_64 engine_;
};

// f over [-radius, radius], indexed by x + radius.
template <class Kernel>
std::vector<Small> beatty_table(const Kernel& kernel, Small radius) {
    std::vector<Small> table(static_cast<std::size_t>(2 * radius + 1));
    for (Small x = -radius; x <= radius; ++x) table[static_cast<std::size_t>(x + radius)] = kernel.f(x);
    return table;
}

}  // namespace detail

/// Additivity defect in {0, 1}, reflection, the two iteration identities and
/// the partition of Z by the ranges of f and fbar.
template <class Kernel = StandardKernel>
CheckReport check_basic_axioms(const CheckSpec& spec, const Kernel& kernel = {}) {
    detail::Recorder rec("axioms.basic", spec.max_recorded);
    detail::Random rng(spec.seed, "axioms.basic");
    const Small bound = spec.exhaustive_bound;
    const Small radius = 2 * bound + 2;
    const auto table = detail::beatty_table(kernel, radius);
    auto f_at = [&](Small x) { return table[static_cast<std::size_t>(x + radius)]; };

    // additivity: f(x+y) - f(x) - f(y) in {0, 1}
    for (Small x = -bound; x <= bound; ++x)
        for (Small y = -bound; y <= bound; ++y) {
            const Small defect = f_at(x + y) - f_at(x) - f_at(y);
            rec.expect(defect == 0 || defect == 1, x, y);
        }

    // reflection f(-x) = -f(x) - 1 and iteration f(f(x)) = f(x) + x - 1 hold
    // for x != 0; f(f(x) + x) = 2 f(x) + x holds everywhere.
    for (Small x = -bound; x <= bound; ++x) {
        const Small fx = f_at(x);
        if (x != 0) {
            rec.expect(f_at(-x) == -fx - 1, x);
            rec.expect(kernel.f(fx) == fx + x - 1, x);
        }
        rec.expect(kernel.f(Small(fx + x)) == 2 * fx + x, x);
    }
    rec.note("axioms.reflection and axioms.iteration (first identity) exclude x = 0, where f(0) = 0");

    // partition: every x lies in exactly one of range(f), range(fbar), except
    // 0 (in both) and its reflection -1 (in neither)
    {
        std::vector<char> in_f(static_cast<std::size_t>(2 * bound + 1), 0);
        std::vector<char> in_fbar(in_f.size(), 0);
        auto mark = [&](std::vector<char>& v, Small value) {
            if (value >= -bound && value <= bound) v[static_cast<std::size_t>(value + bound)] = 1;
        };
        for (Small y = -radius; y <= radius; ++y) {
            mark(in_f, f_at(y));
            mark(in_fbar, f_at(y) + y);
        }
        for (Small x = -bound; x <= bound; ++x) {
            const auto i = static_cast<std::size_t>(x + bound);
            if (x == 0 || x == -1) {
                const bool expected = x == 0;
                rec.expect(in_f[i] == expected && in_fbar[i] == expected, x);
                continue;
            }
            rec.expect(in_f[i] != in_fbar[i], x);
        }
        rec.note("axioms.partition: x = 0 is both f(0) and fbar(0), and x = -1 is in neither range; "
                 "allowed exceptions");
    }

    // random wide values
    for (std::size_t i = 0; i < spec.random_trials; ++i) {
        const Int x = rng.big();
        const Int y = rng.big();
        const Int fx = kernel.f(x);
        const Int defect = kernel.f(Int(x + y)) - fx - kernel.f(y);
        rec.expect(defect == 0 || defect == 1, x, y);
        rec.expect(kernel.f(Int(-x)) == -fx - 1, x);
        rec.expect(kernel.f(fx) == fx + x - 1, x);
        rec.expect(kernel.f(Int(fx + x)) == 2 * fx + x, x);
        const bool in_f = f_inverse(x).has_value();
        const bool in_fbar = fbar_inverse(x).has_value();
        rec.expect(x == -1 ? !in_f && !in_fbar : in_f != in_fbar, x);
    }
    return rec.finish();
}

/// The decimal order: star_less agrees with the exact comparator, is
/// irreflexive, total on distinct elements and transitive; witnesses lie
/// strictly between and refine chains stay nested.
inline CheckReport check_order_and_density(const CheckSpec& spec) {
    detail::Recorder rec("order.decimal", spec.max_recorded);
    detail::Random rng(spec.seed, "order.decimal");
    const Small bound = spec.exhaustive_bound;

    for (Small x = -bound; x <= bound; ++x) {
        rec.expect(!star_less(x, x), x, x);
        for (Small y = -bound; y <= bound; ++y) {
            if (x == y) continue;
            const bool forward = star_less(x, y);
            rec.expect(forward == (frac_compare(x, y) < 0), x, y);
            if (x < y) rec.expect(forward != star_less(y, x), x, y);
        }
    }

    auto transitive = [&](const auto& a, const auto& b, const auto& c) {
        rec.expect(!(star_less(a, b) && star_less(b, c)) || star_less(a, c), a, b, c);
    };
    for (std::size_t i = 0; i < spec.random_trials; ++i) {
        transitive(rng.uniform(-bound, bound), rng.uniform(-bound, bound), rng.uniform(-bound, bound));
        transitive(rng.big(), rng.big(), rng.big());
    }

    auto between = [](const auto& lo, const auto& mid, const auto& hi) {
        return frac_compare(lo, mid) < 0 && frac_compare(mid, hi) < 0;
    };
    const Small wb = spec.witness_bound;
    for (Small x = -wb; x <= wb; ++x)
        for (Small y = -wb; y <= wb; ++y) {
            if (frac_compare(x, y) >= 0) continue;
            rec.expect(between(x, kronecker_witness(x, y), y), x, y);
        }

    constexpr std::size_t chain_length = 10;
    auto nested = [&](const auto& x, const auto& y) {
        using T = std::decay_t<decltype(x)>;
        if (x == y) return;
        const bool ordered = frac_compare(x, y) < 0;
        const T lo = ordered ? x : y;
        const T hi = ordered ? y : x;
        const auto chain = refine(lo, hi, chain_length);
        bool ok = between(lo, chain[0], hi);
        for (std::size_t k = 1; k < chain.size(); ++k) ok = ok && between(lo, chain[k], chain[k - 1]);
        rec.expect(ok, lo, hi);
    };
    for (std::size_t i = 0; i < spec.random_trials; ++i) {
        nested(rng.uniform(-wb, wb), rng.uniform(-wb, wb));
        const Int a = rng.big();
        const Int b = rng.big();
        nested(a, b);
        if (a != b) {
            const bool ordered = frac_compare(a, b) < 0;
            const Int& lo = ordered ? a : b;
            const Int& hi = ordered ? b : a;
            rec.expect(between(lo, kronecker_witness(lo, hi), hi), lo, hi);
        }
    }
    return rec.finish();
}

/// Fibonacci extrema on (0, N], the neighbor-Fibonacci laws for F and G, the
/// F(m + n) case law and Zeckendorf decomposition.
inline CheckReport check_fib_lemmas(const CheckSpec& spec) {
    detail::Recorder rec("fibonacci.lemmas", spec.max_recorded);
    const Small bound = std::max<Small>(spec.exhaustive_bound, 1);
    auto& table = FibTable<Small>::instance();

    // argmin / argmax of {phi w} over 0 < w <= N
    Small running_min = 1, running_max = 1;
    for (Small n = 1; n <= bound; ++n) {
        if (frac_compare(n, running_min) < 0) running_min = n;
        if (frac_compare(n, running_max) > 0) running_max = n;
        rec.expect(fibfloor(n) == running_min, n);
        rec.expect(g_func(n) == running_max, n);
    }

    // next even/odd Fibonacci numbers against the table
    for (Small x = 1; x <= bound; ++x) {
        const std::size_t i = table.index_at_most(x);
        const Small next_even = table.value(i % 2 == 0 ? i + 2 : i + 1);
        const Small next_odd = table.value(i % 2 == 1 ? i + 2 : i + 1);
        rec.expect(next_even_fib(x) == next_even, x);
        rec.expect(next_odd_fib(x) == next_odd, x);
    }

    // F is constant on (F(x), fbar(F(x))); G is constant up to the next odd index.
    std::optional<Small> last_f, last_g;
    for (Small x = 1; x <= bound; ++x) {
        const Small fx = fibfloor(x);
        const Small gx = g_func(x);
        if (fx != last_f) {
            for (Small y = fx + 1; y < fbar(fx); ++y) rec.expect(fibfloor(y) == fx, x, y);
            last_f = fx;
        }
        if (gx != last_g) {
            const Small limit = gx < fx ? beatty_f(fx) : beatty_f(fbar(fx));
            for (Small y = gx + 1; y < limit; ++y) rec.expect(g_func(y) == gx, x, y);
            last_g = gx;
        }
    }

    // f and fbar step along the Fibonacci sequence: f(F_2n) = F_2n+1, fbar(F_2n) = F_2n+2
    for (long long n = 0; n < 200; n += 2) {
        const Int even = fib<Int>(n);
        rec.expect(beatty_f(even) == fib<Int>(n + 1), n);
        rec.expect(fbar(even) == fib<Int>(n + 2), n);
    }

    // F(m + n) case law
    std::uint64_t rule_hits[5] = {};
    for (Small m = 1; m <= bound; ++m)
        for (Small n = 1; n <= bound; ++n) {
            const auto r = f_add_traced(m, n);
            ++rule_hits[r.rule];
            rec.expect(r.value == fibfloor(Small(m + n)), m, n);
        }
    rec.note("fibonacci.f_add: threshold f^-1(E-1) + (E - e) with E = max(F(m),F(n)), e = min; "
             "the printed threshold f^-1(E-1) is only correct when F(m) = F(n)");
    rec.note("fibonacci.f_add: cases 3-4 use m+n-(F(m)+F(n)), the mirror of cases 1-2, not "
             "m+n-(F(m)-F(n))");
    rec.note("fibonacci.f_add rule counts: " + std::to_string(rule_hits[1]) + "/" +
             std::to_string(rule_hits[2]) + "/" + std::to_string(rule_hits[3]) + "/" +
             std::to_string(rule_hits[4]));
    rec.note("fibonacci.next_odd: f(fbar(F(x))) used; the alternative f^-1(F(x)-1) disagrees "
             "(see paper-literal mode)");

    // Zeckendorf
    for (Small x = 1; x <= bound; ++x) {
        const auto indices = zeckendorf(x);
        Small sum = 0;
        bool ok = !indices.empty() && indices.back() >= 1;
        for (std::size_t k = 0; k < indices.size(); ++k) {
            sum += table.value(indices[k]);
            if (k > 0) ok = ok && indices[k - 1] >= indices[k] + 2;
        }
        rec.expect(ok && sum == x, x);
    }
    return rec.finish();
}

/// Fast extrema against direct scans, constrained extrema against filtered
/// scans, and the translation law behind the constrained formulas.
inline CheckReport check_extrema(const CheckSpec& spec) {
    detail::Recorder rec("extrema", spec.max_recorded);
    detail::Random rng(spec.seed, "extrema");
    const ExtremaOptions fast{0};
    const Small bound = spec.exhaustive_bound;

    // every positive interval 0 < a < b <= bound; the scan is incremental in b
    for (Small a = 1; a + 2 <= bound; ++a) {
        Small lowest = a + 1, highest = a + 1;
        for (Small b = a + 2; b <= bound; ++b) {
            const Small t = b - 1;
            if (frac_compare(t, lowest) < 0) lowest = t;
            if (frac_compare(t, highest) > 0) highest = t;
            rec.expect(fast_argmin_positive(a, b) == lowest, a, b);
            rec.expect(fast_argmax_positive(a, b) == highest, a, b);
        }
    }

    // wide random windows, positive and negative
    constexpr Small far = 1'000'000'000'000;
    for (std::size_t i = 0; i < spec.random_trials; ++i) {
        const Small width = rng.uniform(2, 10'000);
        const Small lo = rng.uniform(1, far) * (i % 2 == 0 ? 1 : -1) - (i % 2 == 0 ? 0 : width);
        const Interval<Small> iv{lo, lo + width};
        rec.expect(arg_min_frac(iv, fast) == brute_arg_min(iv), iv.lo, iv.hi);
        rec.expect(arg_max_frac(iv, fast) == brute_arg_max(iv), iv.lo, iv.hi);
    }

    // every interval inside [-ib, ib], and constrained extrema for every |c| <= cb
    const Small ib = spec.interval_bound;
    const Small cb = spec.constant_bound;
    for (Small lo = -ib; lo + 2 <= ib; ++lo) {
        Small lowest = lo + 1, highest = lo + 1;
        for (Small hi = lo + 2; hi <= ib; ++hi) {
            const Small t = hi - 1;
            if (frac_compare(t, lowest) < 0) lowest = t;
            if (frac_compare(t, highest) > 0) highest = t;
            const Interval<Small> iv{lo, hi};
            rec.expect(arg_min_frac(iv, fast) == lowest, lo, hi);
            rec.expect(arg_max_frac(iv, fast) == highest, lo, hi);
        }
    }
    for (Small c = -cb; c <= cb; ++c)
        for (Small lo = -ib; lo + 2 <= ib; ++lo) {
            std::optional<Small> above, below;  // filtered scans, incremental in hi
            for (Small hi = lo + 2; hi <= ib; ++hi) {
                const Small t = hi - 1;
                const auto rel = frac_compare(t, c);
                if (rel > 0 && (!above || frac_compare(t, *above) < 0)) above = t;
                if (rel < 0 && (!below || frac_compare(t, *below) > 0)) below = t;
                const Interval<Small> iv{lo, hi};
                rec.expect(constrained_min(iv, c, fast) == above, lo, hi, c, 0);
                rec.expect(constrained_max(iv, c, fast) == below, lo, hi, c, 1);
            }
        }

    // translation: {phi t} > {phi c} implies {phi (t - c)} = {phi t} - {phi c},
    // i.e. f(t - c) = f(t) - f(c); otherwise the difference wraps by one.
    for (std::size_t i = 0; i < spec.random_trials; ++i) {
        const Int t = rng.big();
        const Int c = rng.big();
        if (t == c) continue;
        const Int defect = beatty_f(t) - beatty_f(c) - beatty_f(Int(t - c));
        rec.expect(defect == (frac_compare(t, c) > 0 ? 0 : 1), t, c);
    }
    return rec.finish();
}

/// Forms exactly as first published, each expected to fail; the reports
/// document the discrepancies that the amended forms above repair.
inline std::vector<CheckReport> check_as_printed(const CheckSpec& spec) {
    std::vector<CheckReport> reports;
    const Small bound = std::max<Small>(spec.exhaustive_bound, 1);

    {
        detail::Recorder rec("as-printed.f_add", spec.max_recorded);
        std::uint64_t misses[5] = {};
        for (Small m = 1; m <= bound; ++m)
            for (Small n = 1; n <= bound; ++n) {
                const auto r = f_add_as_printed(m, n);
                const bool ok = r.value == fibfloor(Small(m + n));
                if (!ok) ++misses[r.rule];
                rec.expect(ok, m, n);
            }
        rec.note("as-printed.f_add mismatches by case: " + std::to_string(misses[1]) + "/" +
                 std::to_string(misses[2]) + "/" + std::to_string(misses[3]) + "/" +
                 std::to_string(misses[4]));
        rec.note("as-printed.f_add: cases 3-4 read m+n-(F(m)-F(n)); " +
                 std::to_string(misses[3] + misses[4]) + " mismatches there");
        reports.push_back(rec.finish());
    }
    {
        detail::Recorder rec("as-printed.next_odd_alternative", spec.max_recorded);
        for (Small x = 1; x <= bound; ++x) {
            const Small fx = fibfloor(x);
            if (!(fx < g_func(x))) continue;
            const auto alt = f_inverse(Small(fx - 1));
            rec.expect(alt && *alt == next_odd_fib(x), x);
        }
        rec.note("as-printed.next_odd_alternative: f^-1(F(x)-1) versus f(fbar(F(x)))");
        reports.push_back(rec.finish());
    }
    {
        // a(n+1) = a - F(a_n), b(n+1) = b - F(b_n) against the original a, b,
        // halting on F(b_n) > a_n with F(b_n) plus the stripped F(a_i).
        detail::Recorder rec("as-printed.extremum_algorithm", spec.max_recorded);
        const Small limit = std::min<Small>(bound, 400);
        for (Small a = 1; a + 2 <= limit; ++a) {
            Small lowest = a + 1;
            for (Small b = a + 2; b <= limit; ++b) {
                if (frac_compare(b - 1, lowest) < 0) lowest = b - 1;
                Small an = a, bn = b, acc = 0;
                std::optional<Small> result;
                for (int step = 0; step < 64 && an >= 1 && bn >= 1; ++step) {
                    const Small fb = fibfloor(bn);
                    if (fb > an) {
                        result = fb + acc;
                        break;
                    }
                    const Small fa = fibfloor(an);
                    acc += fa;
                    an = a - fa;
                    bn = b - fb;
                }
                rec.expect(result == lowest, a, b);
            }
        }
        rec.note("as-printed.extremum_algorithm: subscript a - F(a_n) and the open upper bound b");
        reports.push_back(rec.finish());
    }
    {
        detail::Recorder rec("as-printed.zero", spec.max_recorded);
        const Small z = 0;
        rec.expect(beatty_f(Small(-z)) == -beatty_f(z) - 1, z, 3);
        rec.expect(beatty_f(beatty_f(z)) == beatty_f(z) + z - 1, z, 4);
        rec.expect(f_inverse(z).has_value() != fbar_inverse(z).has_value(), z, 5);
        rec.expect(f_inverse(Small(-1)).has_value() != fbar_inverse(Small(-1)).has_value(), -1, 5);
        rec.note("as-printed.zero: reflection, first iteration identity and exclusive partition at x = 0 and x = -1 "
                 "(second tuple entry names the property: 3, 4, 5)");
        reports.push_back(rec.finish());
    }
    {
        // 4(phi^2 + phi + 1) = 12 + 4 sqrt5 for phi = (1 + sqrt5)/2, versus
        // 4(phi^2 - phi - 1) = 0.
        detail::Recorder rec("as-printed.golden_polynomial", spec.max_recorded);
        const Surd<Int> printed{12, 4};
        const Surd<Int> conventional{0, 0};
        rec.expect(surd_sign(printed) == 0, printed.p, printed.q);
        rec.note("as-printed.golden_polynomial: x^2+x+1 has no real roots; phi = (1+sqrt5)/2 satisfies "
                 "x^2-x-1 (4(phi^2-phi-1) has sign " + std::to_string(surd_sign(conventional)) + ")");
        reports.push_back(rec.finish());
    }
    return reports;
}

/// Every suite, optionally followed by the as-printed reports.
inline std::vector<CheckReport> check_all(const CheckSpec& spec, bool as_printed = false) {
    std::vector<CheckReport> reports;
    reports.push_back(check_basic_axioms(spec));
    reports.push_back(check_order_and_density(spec));
    reports.push_back(check_fib_lemmas(spec));
    reports.push_back(check_extrema(spec));
    if (as_printed)
        for (auto& r : check_as_printed(spec)) reports.push_back(std::move(r));
    return reports;
}

inline bool all_pass(const std::vector<CheckReport>& reports) {
    return std::all_of(reports.begin(), reports.end(), [](const CheckReport& r) { return r.pass(); });
}

// JSON: {"name": str, "instances": int, "counterexamples": [[int,...],...],
//        "notes": [str,...], "pass": bool}
// Integers are written with all their digits; reading goes through the SAX
// interface so values beyond 64 bits survive.

inline std::string to_json(const CheckReport& report) {
    std::string out = "{\"name\":" + nlohmann::json(report.name).dump() +
                       ",\"instances\":" + std::to_string(report.instances) + ",\"counterexamples\":[";
    for (std::size_t i = 0; i < report.counterexamples.size(); ++i) {
        if (i) out += ',';
        out += '[';
        for (std::size_t k = 0; k < report.counterexamples[i].size(); ++k) {
            if (k) out += ',';
            out += to_string(report.counterexamples[i][k]);
        }
        out += ']';
    }
    out += "],\"notes\":" + nlohmann::json(report.notes).dump() +
           ",\"pass\":" + (report.pass() ? "true" : "false") + "}";
    return out;
}

namespace detail {

class ReportReader : public nlohmann::json_sax<nlohmann::json> {
public:
    CheckReport report;
    std::optional<bool> pass;

    bool null() override { return fail_value(); }
    bool boolean(bool v) override {
        if (depth_ != 1 || key_ != "pass") return fail_value();
        pass = v;
        return true;
    }
    bool number_integer(number_integer_t v) override { return integer(std::to_string(v)); }
    bool number_unsigned(number_unsigned_t v) override { return integer(std::to_string(v)); }
    bool number_float(number_float_t, const string_t& s) override { return integer(s); }
    bool string(string_t& v) override {
        if (depth_ == 1 && key_ == "name") report.name = v;
        else if (depth_ == 2 && key_ == "notes") report.notes.push_back(v);
        else return fail_value();
        return true;
    }
    bool binary(binary_t&) override { return fail_value(); }
    bool start_object(std::size_t) override { return ++depth_ == 1; }
    bool end_object() override {
        --depth_;
        return true;
    }
    bool start_array(std::size_t) override {
        ++depth_;
        if (depth_ == 3 && key_ == "counterexamples") report.counterexamples.emplace_back();
        return depth_ == 2 || (depth_ == 3 && key_ == "counterexamples");
    }
    bool end_array() override {
        --depth_;
        return true;
    }
    bool key(string_t& k) override {
        key_ = k;
        return true;
    }
    bool parse_error(std::size_t, const std::string&, const nlohmann::detail::exception&) override {
        return false;
    }

private:
    int depth_ = 0;
    std::string key_;

    bool fail_value() { return false; }

    bool integer(const std::string& text) {
        if (text.find_first_of(".eE") != std::string::npos) return false;
        if (depth_ == 1 && key_ == "instances") {
            report.instances = std::stoull(text);
            return true;
        }
        if (depth_ == 3 && key_ == "counterexamples") {
            report.counterexamples.back().push_back(parse_int(text));
            return true;
        }
        return false;
    }
};

}  // namespace detail

inline CheckReport report_from_json(std::string_view text) {
    detail::ReportReader reader;
    if (!nlohmann::json::sax_parse(text, &reader) || !reader.pass)
        throw std::invalid_argument("malformed check report JSON");
    if (*reader.pass != reader.report.pass())
        throw std::invalid_argument("check report 'pass' disagrees with its counterexamples");
    return reader.report;
}

}  // namespace zphi::check
