#pragma once

// Integer plumbing shared by every zphi header: the arbitrary-precision Int,
// the int64 fast path used by exhaustive sweeps, exact integer square roots
// and floor division.

#include <bit>
#include <concepts>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <type_traits>

#include <boost/multiprecision/cpp_int.hpp>

namespace zphi {

using Int = boost::multiprecision::cpp_int;

class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Per-type arithmetic facts. `wide` must hold 5*x*x for every admissible x.
///
/// The int64 instantiation is admissible for |x| <= 2^60; beyond that use Int.
template <class I>
struct int_traits;

template <>
struct int_traits<Int> {
    using wide = Int;
};

template <>
struct int_traits<std::int64_t> {
    using wide = __int128;
    static constexpr std::int64_t max_magnitude = std::int64_t{1} << 60;
};

template <class I>
concept Integer = requires { typename int_traits<I>::wide; };

template <class I>
using wide_t = typename int_traits<I>::wide;

namespace detail {

inline unsigned bit_width(const Int& n) {
    return n == 0 ? 0u : static_cast<unsigned>(boost::multiprecision::msb(n)) + 1u;
}

inline unsigned bit_width(unsigned __int128 n) {
    auto hi = static_cast<std::uint64_t>(n >> 64);
    if (hi != 0) return 64u + static_cast<unsigned>(std::bit_width(hi));
    return static_cast<unsigned>(std::bit_width(static_cast<std::uint64_t>(n)));
}

inline unsigned bit_width(std::uint64_t n) {
    return static_cast<unsigned>(std::bit_width(n));
}

// Newton iteration started strictly above the root; the iterates decrease
// monotonically until the first non-decrease, which is the floor root.
template <class U>
U newton_isqrt(const U& n) {
    if (n < 2) return n;
    U x = U(1) << (bit_width(n) / 2 + 1);
    for (;;) {
        U y = (x + n / x) >> 1;
        if (y >= x) return x;
        x = y;
    }
}

}  // namespace detail

/// Largest k with k*k <= n.
inline Int isqrt(const Int& n) {
    if (n < 0) throw DomainError("isqrt: negative argument");
    return detail::newton_isqrt(n);
}

inline __int128 isqrt(__int128 n) {
    if (n < 0) throw DomainError("isqrt: negative argument");
    if (n <= static_cast<__int128>(UINT64_MAX))
        return detail::newton_isqrt(static_cast<std::uint64_t>(n));
    return static_cast<__int128>(detail::newton_isqrt(static_cast<unsigned __int128>(n)));
}

inline std::int64_t isqrt(std::int64_t n) {
    if (n < 0) throw DomainError("isqrt: negative argument");
    return static_cast<std::int64_t>(detail::newton_isqrt(static_cast<std::uint64_t>(n)));
}

/// Floor division (rounds toward negative infinity), unlike built-in `/`.
template <class T>
T floor_div(const T& a, const T& b) {
    T q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) q -= 1;
    return q;
}

template <class T>
T floor_mod(const T& a, const T& b) {
    return a - b * floor_div(a, b);
}

template <class T>
int sign(const T& v) {
    return v > 0 ? 1 : (v < 0 ? -1 : 0);
}

/// Parses an optionally signed decimal integer; '_' is accepted between digits.
inline Int parse_int(std::string_view text) {
    std::string digits;
    std::size_t i = 0;
    bool negative = false;
    if (!text.empty() && (text[0] == '-' || text[0] == '+')) {
        negative = text[0] == '-';
        i = 1;
    }
    bool last_was_digit = false;
    for (; i < text.size(); ++i) {
        char c = text[i];
        if (c >= '0' && c <= '9') {
            digits.push_back(c);
            last_was_digit = true;
        } else if (c == '_' && last_was_digit && i + 1 < text.size()) {
            last_was_digit = false;
        } else {
            throw DomainError("malformed integer: '" + std::string(text) + "'");
        }
    }
    if (digits.empty() || !last_was_digit)
        throw DomainError("malformed integer: '" + std::string(text) + "'");
    Int v(digits);
    return negative ? Int(-v) : v;
}

inline std::string to_string(const Int& v) { return v.str(); }
inline std::string to_string(std::int64_t v) { return std::to_string(v); }

/// Narrowing conversion between the supported integer types.
template <Integer To, Integer From>
To convert(const From& v) {
    if constexpr (std::is_same_v<To, From>) {
        return v;
    } else {
        return static_cast<To>(v);
    }
}

}  // namespace zphi
