#pragma once

// Fibonacci numbers indexed F_0 = F_1 = 1, the Fibonacci floor F(x) (largest
// even-index Fibonacci number <= x), its odd-index companion G(x), Zeckendorf
// decomposition and the case law for F(m + n).

#include <algorithm>
#include <cassert>
#include <cstddef>
#include <deque>
#include <mutex>
#include <shared_mutex>
#include <vector>

#include "zphi/integer.hpp"
#include "zphi/kernel.hpp"

namespace zphi {

/// Process-wide, append-only table of Fibonacci numbers. Published entries
/// never change, so lookups only need a shared lock; growth takes the
/// exclusive lock.
template <Integer I>
class FibTable {
public:
    static FibTable& instance() {
        static FibTable table;
        return table;
    }

    FibTable(const FibTable&) = delete;
    FibTable& operator=(const FibTable&) = delete;

    I value(std::size_t index) {
        {
            std::shared_lock lock(mutex_);
            if (index < values_.size()) return values_[index];
        }
        std::unique_lock lock(mutex_);
        grow_to_locked(index);
        return values_[index];
    }

    /// Largest index i >= 1 with F_i <= x. Requires x >= 1.
    std::size_t index_at_most(const I& x) {
        for (;;) {
            {
                std::shared_lock lock(mutex_);
                if (values_.back() > x) {
                    auto first_above = std::upper_bound(values_.begin() + 1, values_.end(), x);
                    return static_cast<std::size_t>(first_above - values_.begin()) - 1;
                }
            }
            std::unique_lock lock(mutex_);
            grow_to_locked(values_.size() + 8);
        }
    }

    std::size_t size() const {
        std::shared_lock lock(mutex_);
        return values_.size();
    }

private:
    FibTable() : values_{I(1), I(1)} {}

    void grow_to_locked(std::size_t index) {
        if constexpr (!std::is_same_v<I, Int>) {
            // F_91 is the last entry representable in int64.
            if (index > 91) throw DomainError("Fibonacci index exceeds the int64 table");
        }
        while (values_.size() <= index) {
            const std::size_t n = values_.size();
            values_.push_back(I(values_[n - 1] + values_[n - 2]));
        }
    }

    mutable std::shared_mutex mutex_;
    std::deque<I> values_;
};

/// The index-th Fibonacci number, F_0 = F_1 = 1.
template <Integer I = Int>
I fib(long long index) {
    if (index < 0) throw DomainError("fib: negative index");
    return FibTable<I>::instance().value(static_cast<std::size_t>(index));
}

/// Largest even-index Fibonacci number <= x: the argmin of {phi w} over 0 < w <= x.
template <Integer I>
I fibfloor(const I& x) {
    if (x < 1) throw DomainError("fibfloor: argument must be >= 1");
    auto& table = FibTable<I>::instance();
    const std::size_t i = table.index_at_most(x);
    return table.value(i % 2 == 0 ? i : i - 1);
}

/// Largest odd-index Fibonacci number <= x: the argmax of {phi w} over 0 < w <= x.
template <Integer I>
I g_func(const I& x) {
    if (x < 1) throw DomainError("g_func: argument must be >= 1");
    auto& table = FibTable<I>::instance();
    const std::size_t i = table.index_at_most(x);
    return table.value(i % 2 == 1 ? i : i - 1);
}

/// Smallest even-index Fibonacci number > x, computed as fbar(F(x)).
template <Integer I>
I next_even_fib(const I& x) {
    const I result = fbar(fibfloor(x));
#ifndef NDEBUG
    auto& table = FibTable<I>::instance();
    const std::size_t i = table.index_at_most(x);
    assert(result == table.value(i % 2 == 0 ? i + 2 : i + 1));
#endif
    return result;
}

/// Smallest odd-index Fibonacci number > x: f(F(x)) when G(x) < F(x),
/// otherwise f(fbar(F(x))).
template <Integer I>
I next_odd_fib(const I& x) {
    const I floor_even = fibfloor(x);
    const I result = g_func(x) < floor_even ? beatty_f(floor_even) : beatty_f(fbar(floor_even));
#ifndef NDEBUG
    auto& table = FibTable<I>::instance();
    const std::size_t i = table.index_at_most(x);
    assert(result == table.value(i % 2 == 1 ? i + 2 : i + 1));
#endif
    return result;
}

/// Greedy Zeckendorf indices: strictly decreasing, >= 1, pairwise non-consecutive.
template <Integer I>
std::vector<std::size_t> zeckendorf(const I& x) {
    if (x < 1) throw DomainError("zeckendorf: argument must be >= 1");
    auto& table = FibTable<I>::instance();
    std::vector<std::size_t> indices;
    I rest = x;
    while (rest > 0) {
        const std::size_t i = table.index_at_most(rest);
        indices.push_back(i);
        rest -= table.value(i);
    }
    return indices;
}

/// Result of the F(m + n) case law together with the case (1-4) that fired.
template <Integer I>
struct FAddResult {
    I value;
    int rule = 0;
};

/// F(m + n) from F(m), F(n) and m + n. With E = max(F(m), F(n)) and e = min:
/// F(m + n) is the next even-index Fibonacci number fbar(E) when
/// m + n - (F(m) + F(n)) >= f^-1(E - 1) + (E - e), and E otherwise.
/// f^-1(E - 1) is the odd-index Fibonacci number just below E.
template <Integer I>
FAddResult<I> f_add_traced(const I& m, const I& n) {
    if (m < 1 || n < 1) throw DomainError("f_add: arguments must be >= 1");
    const I fm = fibfloor(m);
    const I fn = fibfloor(n);
    const bool left_dominates = fm >= fn;
    const I& larger = left_dominates ? fm : fn;
    const I& smaller = left_dominates ? fn : fm;
    const auto below = f_inverse(I(larger - 1));
    assert(below.has_value());
    const I threshold = *below + (larger - smaller);
    const bool step_up = m + n - (fm + fn) >= threshold;
    const int rule = (left_dominates ? 1 : 3) + (step_up ? 0 : 1);
    return {step_up ? I(beatty_f(larger) + larger) : larger, rule};
}

template <Integer I>
I f_add(const I& m, const I& n) {
    return f_add_traced(m, n).value;
}

/// The case law exactly as it was first published: threshold f^-1(E - 1) with
/// no correction for F(m) != F(n), and m + n - (F(m) - F(n)) in cases 3-4.
/// Kept to document where it disagrees with F(m + n).
template <Integer I>
FAddResult<I> f_add_as_printed(const I& m, const I& n) {
    if (m < 1 || n < 1) throw DomainError("f_add: arguments must be >= 1");
    const I fm = fibfloor(m);
    const I fn = fibfloor(n);
    if (fm >= fn) {
        const I threshold = *f_inverse(I(fm - 1));
        if (m + n - (fm + fn) >= threshold) return {I(beatty_f(fm) + fm), 1};
        return {fm, 2};
    }
    const I threshold = *f_inverse(I(fn - 1));
    if (m + n - (fm - fn) >= threshold) return {I(beatty_f(fn) + fn), 3};
    return {fn, 4};
}

}  // namespace zphi
