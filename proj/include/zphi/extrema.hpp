#pragma once

// Points of least and greatest fractional part {phi t} over an open integer
// interval (lo, hi), plus the constrained extrema "least {phi t} above {phi c}"
// and "greatest {phi t} below {phi d}".
//
// Positive intervals are solved by Fibonacci decomposition: strip the even-
// (for minima) or odd- (for maxima) index Fibonacci floor of the upper bound
// until it drops inside the interval. Negative intervals reflect through
// {phi (-t)} = 1 - {phi t}. Narrow intervals are scanned directly.

#include <cstddef>
#include <optional>

#include "zphi/fib.hpp"
#include "zphi/kernel.hpp"

namespace zphi {

/// The open interval (lo, hi); its integer interior is lo+1 .. hi-1.
template <Integer I>
struct Interval {
    I lo{};
    I hi{};

    bool has_interior() const { return hi - lo >= 2; }
    bool contains(const I& t) const { return lo < t && t < hi; }
};

enum class ExtremumKind { min, max };
enum class ExtremumMethod { brute, fast };

template <Integer I>
struct ExtremumResult {
    I point{};
    ExtremumKind kind = ExtremumKind::min;
    ExtremumMethod method = ExtremumMethod::brute;
};

struct ExtremaOptions {
    /// Intervals with fewer interior points than this are scanned directly.
    std::size_t scan_threshold = 64;
};

namespace detail {

template <Integer I>
void require_interior(const Interval<I>& iv, const char* who) {
    if (!iv.has_interior())
        throw DomainError(std::string(who) + ": interval (" + to_string(iv.lo) + ", " +
                          to_string(iv.hi) + ") has no interior points");
}

template <Integer I>
bool narrow(const Interval<I>& iv, const ExtremaOptions& options) {
    return iv.hi - iv.lo - 1 < I(static_cast<long long>(options.scan_threshold));
}

// Fibonacci decomposition over lo < t <= top, for lo >= 0.
template <Integer I, class Floor>
I decompose(I lo, I top, Floor&& fib_floor) {
    I offset = 0;
    for (;;) {
        const I step = fib_floor(top);
        if (step > lo) return I(offset + step);
        offset += step;
        lo -= step;
        top -= step;
    }
}

}  // namespace detail

/// Direct scan for the least fractional part.
template <Integer I>
I brute_arg_min(const Interval<I>& iv) {
    detail::require_interior(iv, "brute_arg_min");
    I best = iv.lo + 1;
    for (I t = best + 1; t < iv.hi; ++t)
        if (frac_compare(t, best) < 0) best = t;
    return best;
}

/// Direct scan for the greatest fractional part.
template <Integer I>
I brute_arg_max(const Interval<I>& iv) {
    detail::require_interior(iv, "brute_arg_max");
    I best = iv.lo + 1;
    for (I t = best + 1; t < iv.hi; ++t)
        if (frac_compare(t, best) > 0) best = t;
    return best;
}

/// Argmin of {phi t} over a < t < b for 0 <= a, b - a >= 2.
///
/// Runs against the inclusive upper bound b - 1: with a_0 = a, u_0 = b - 1,
/// while F(u_n) <= a_n set a_(n+1) = a_n - F(u_n), u_(n+1) = u_n - F(u_n);
/// once F(u_n) > a_n the answer is F(u_n) plus every F(u_i) stripped so far.
template <Integer I>
I fast_argmin_positive(const I& a, const I& b) {
    if (a < 0 || b - a < 2)
        throw DomainError("fast_argmin_positive: requires 0 <= a and b - a >= 2");
    return detail::decompose(I(a), I(b - 1), [](const I& x) { return fibfloor(x); });
}

/// Argmax of {phi t} over a < t < b for 0 <= a, b - a >= 2; the same
/// decomposition driven by the odd-index floor G.
template <Integer I>
I fast_argmax_positive(const I& a, const I& b) {
    if (a < 0 || b - a < 2)
        throw DomainError("fast_argmax_positive: requires 0 <= a and b - a >= 2");
    return detail::decompose(I(a), I(b - 1), [](const I& x) { return g_func(x); });
}

template <Integer I>
ExtremumResult<I> locate_min(const Interval<I>& iv, const ExtremaOptions& options = {}) {
    detail::require_interior(iv, "arg_min_frac");
    if (detail::narrow(iv, options))
        return {brute_arg_min(iv), ExtremumKind::min, ExtremumMethod::brute};
    I point;
    if (iv.lo < 0 && iv.hi > 0) {
        point = 0;  // {phi 0} = 0 is the global minimum
    } else if (iv.lo >= 0) {
        point = fast_argmin_positive(iv.lo, iv.hi);
    } else {
        point = -fast_argmax_positive(I(-iv.hi), I(-iv.lo));
    }
    return {point, ExtremumKind::min, ExtremumMethod::fast};
}

template <Integer I>
ExtremumResult<I> locate_max(const Interval<I>& iv, const ExtremaOptions& options = {}) {
    detail::require_interior(iv, "arg_max_frac");
    if (detail::narrow(iv, options))
        return {brute_arg_max(iv), ExtremumKind::max, ExtremumMethod::brute};
    I point;
    if (iv.lo >= 0) {
        point = fast_argmax_positive(iv.lo, iv.hi);
    } else if (iv.hi <= 0) {
        point = -fast_argmin_positive(I(-iv.hi), I(-iv.lo));
    } else {
        // 0 is interior but never the maximum; compare the two signed halves.
        std::optional<I> best;
        if (iv.hi >= 2) best = fast_argmax_positive(I(0), iv.hi);
        if (iv.lo <= -2) {
            const I negative = -fast_argmin_positive(I(0), I(-iv.lo));
            if (!best || frac_compare(negative, *best) > 0) best = negative;
        }
        point = best.value_or(I(0));
    }
    return {point, ExtremumKind::max, ExtremumMethod::fast};
}

/// The interior point of least fractional part.
template <Integer I>
I arg_min_frac(const Interval<I>& iv, const ExtremaOptions& options = {}) {
    return locate_min(iv, options).point;
}

/// The interior point of greatest fractional part.
template <Integer I>
I arg_max_frac(const Interval<I>& iv, const ExtremaOptions& options = {}) {
    return locate_max(iv, options).point;
}

namespace detail {

// Argmin over the interior minus {0}; nullopt when 0 is the only point.
template <Integer I>
std::optional<I> arg_min_nonzero(const Interval<I>& iv, const ExtremaOptions& options) {
    if (!iv.contains(I(0))) return arg_min_frac(iv, options);
    std::optional<I> best;
    if (iv.lo <= -2) best = arg_min_frac(Interval<I>{iv.lo, I(0)}, options);
    if (iv.hi >= 2) {
        const I positive = arg_min_frac(Interval<I>{I(0), iv.hi}, options);
        if (!best || frac_compare(positive, *best) < 0) best = positive;
    }
    return best;
}

}  // namespace detail

/// The point of (lo, hi) with least fractional part exceeding {phi c}, or
/// nullopt when none exceeds it. Translating by c maps every such t to a
/// point with {phi (t - c)} = {phi t} - {phi c} and every other t != c
/// above 1 - {phi c}, so the answer is c + argmin over (lo - c, hi - c)
/// with 0 excluded.
template <Integer I>
std::optional<I> constrained_min(const Interval<I>& iv, const I& c,
                                 const ExtremaOptions& options = {}) {
    detail::require_interior(iv, "constrained_min");
    if (frac_compare(arg_max_frac(iv, options), c) <= 0) return std::nullopt;
    const auto shifted = detail::arg_min_nonzero(Interval<I>{I(iv.lo - c), I(iv.hi - c)}, options);
    return I(c + *shifted);
}

/// The point of (lo, hi) with greatest fractional part below {phi d}, or
/// nullopt when none lies below it.
template <Integer I>
std::optional<I> constrained_max(const Interval<I>& iv, const I& d,
                                 const ExtremaOptions& options = {}) {
    detail::require_interior(iv, "constrained_max");
    if (frac_compare(arg_min_frac(iv, options), d) >= 0) return std::nullopt;
    // {phi (t - d)} = {phi t} - {phi d} + 1 for {phi t} < {phi d}, and the
    // remaining points map below 1 - {phi d}; 0 (t = d) is never the maximum.
    return I(d + arg_max_frac(Interval<I>{I(iv.lo - d), I(iv.hi - d)}, options));
}

/// Whether some t in (lo, hi) has {phi c} < {phi t} < {phi d}.
template <Integer I>
bool exists_in_box(const Interval<I>& iv, const I& c, const I& d,
                   const ExtremaOptions& options = {}) {
    const auto lowest_above = constrained_min(iv, c, options);
    return lowest_above && frac_compare(*lowest_above, d) < 0;
}

}  // namespace zphi
