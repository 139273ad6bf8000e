#pragma once

// The Beatty function f(x) = floor(phi * x) for the golden ratio
// phi = (1 + sqrt 5) / 2, its companion fbar(x) = x + f(x), their partial
// inverses, and exact decisions on fractional parts {phi * x}.
//
// Every decision reduces to the sign of a number p + q*sqrt(5) with integer
// p, q, which is settled by comparing p^2 with 5 q^2. Nothing here touches
// floating point.

#include <compare>
#include <cstddef>
#include <optional>
#include <vector>

#include "zphi/integer.hpp"

namespace zphi {

/// The real number p + q*sqrt(5).
template <Integer I>
struct Surd {
    I p{};
    I q{};
};

template <Integer I>
int surd_sign(const Surd<I>& s) {
    using W = wide_t<I>;
    const int sp = sign(s.p);
    const int sq = sign(s.q);
    if (sp >= 0 && sq >= 0) return (sp != 0 || sq != 0) ? 1 : 0;
    if (sp <= 0 && sq <= 0) return -1;
    // Opposite signs: the term of larger magnitude wins.
    const W p = s.p;
    const W q = s.q;
    const W pp = p * p;
    const W qq = W(5) * q * q;
    const int p_dominates = pp > qq ? 1 : -1;  // equality is impossible for q != 0
    return p_dominates * sp;
}

template <Integer I>
int surd_sign(const I& p, const I& q) {
    return surd_sign(Surd<I>{p, q});
}

/// floor(phi * x).
template <Integer I>
I beatty_f(const I& x) {
    using W = wide_t<I>;
    if (x < 0) return I(-beatty_f(I(-x)) - 1);
    const W w = x;
    return static_cast<I>((w + isqrt(W(5) * w * w)) / 2);
}

/// x + f(x) = floor(phi^2 * x).
template <Integer I>
I fbar(const I& x) {
    return I(x + beatty_f(x));
}

namespace detail {

// floor(y * sqrt(5)); exact because y * sqrt(5) is irrational for y != 0.
template <Integer I>
wide_t<I> floor_sqrt5_times(const I& y) {
    using W = wide_t<I>;
    const W w = y;
    const W s = isqrt(W(5) * w * w);
    if (y >= 0) return s;
    return W(-s - 1);
}

}  // namespace detail

/// The unique x with f(x) = y, if y lies in the range of f.
template <Integer I>
std::optional<I> f_inverse(const I& y) {
    using W = wide_t<I>;
    // y / phi = (y*sqrt5 - y) / 2 lies in ((t - y)/2, (t + 1 - y)/2) with t = floor(y*sqrt5),
    // and any preimage is ceil(y / phi).
    const W t = detail::floor_sqrt5_times(y);
    const W base = floor_div(W(t - W(y)), W(2));
    for (int k = 0; k <= 2; ++k) {
        const I candidate = static_cast<I>(base + k);
        if (beatty_f(candidate) == y) return candidate;
    }
    return std::nullopt;
}

/// The unique x with fbar(x) = y, if y lies in the range of fbar.
template <Integer I>
std::optional<I> fbar_inverse(const I& y) {
    using W = wide_t<I>;
    // y / phi^2 = (3y - y*sqrt5) / 2.
    const W t = detail::floor_sqrt5_times(y);
    const W base = floor_div(W(W(3) * W(y) - t - 1), W(2));
    for (int k = 0; k <= 2; ++k) {
        const I candidate = static_cast<I>(base + k);
        if (fbar(candidate) == y) return candidate;
    }
    return std::nullopt;
}

/// Orders {phi x} against {phi y}. Equal only when x == y.
template <Integer I>
std::strong_ordering frac_compare(const I& x, const I& y) {
    // 2({phi x} - {phi y}) = (d - 2(f(x) - f(y))) + d*sqrt5 with d = x - y.
    const I d = x - y;
    const I p = d - 2 * (beatty_f(x) - beatty_f(y));
    const int s = surd_sign(p, d);
    return s < 0 ? std::strong_ordering::less
                 : (s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

template <Integer I>
bool frac_less(const I& x, const I& y) {
    return frac_compare(x, y) < 0;
}

/// The decimal order x <* y, evaluated by its defining equation
/// x != y and f(y - x) = f(y) - f(x).
template <Integer I>
bool star_less(const I& x, const I& y) {
    if (x == y) return false;
    return beatty_f(I(y - x)) == beatty_f(y) - beatty_f(x);
}

/// An integer w with {phi x} < {phi w} < {phi y}, namely f(y - x) + y.
template <Integer I>
I kronecker_witness(const I& x, const I& y) {
    if (frac_compare(x, y) >= 0)
        throw DomainError("kronecker_witness: requires {phi x} < {phi y}");
    return I(beatty_f(I(y - x)) + y);
}

/// Iterated witnesses w1 = witness(x, y), w(i+1) = witness(x, wi).
template <Integer I>
std::vector<I> refine(const I& x, const I& y, std::size_t steps) {
    if (steps == 0) throw DomainError("refine: step count must be at least 1");
    std::vector<I> chain;
    chain.reserve(steps);
    I upper = y;
    for (std::size_t i = 0; i < steps; ++i) {
        upper = kronecker_witness(x, upper);
        chain.push_back(upper);
    }
    return chain;
}

}  // namespace zphi
