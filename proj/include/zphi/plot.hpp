#pragma once

// Point data for the picture of n -> {phi n}: rows (n, f(n), {phi n}) with
// the fractional part truncated to a fixed number of decimal digits. The
// digits come from integer arithmetic only, so output is bit-identical on
// every platform.

#include <cstddef>
#include <ostream>
#include <string>

#include "zphi/integer.hpp"
#include "zphi/kernel.hpp"

namespace zphi {

/// floor(10^digits * {phi n}).
inline Int scaled_frac(const Int& n, unsigned digits) {
    const Int scale = boost::multiprecision::pow(Int(10), digits);
    // floor(scale * phi * n) = floor((scale*n + floor(sqrt(5 n^2 scale^2))) / 2), with the
    // square root rounded down for n >= 0 and up (negated) for n < 0.
    const Int root = isqrt(Int(5 * n * n * scale * scale));
    const Int sqrt_term = n >= 0 ? root : Int(-root - (n == 0 ? 0 : 1));
    const Int scaled_phi_n = floor_div(Int(scale * n + sqrt_term), Int(2));
    return scaled_phi_n - scale * beatty_f(n);
}

/// {phi n} truncated to `digits` decimals, e.g. "0.618033988749".
inline std::string frac_digits(const Int& n, unsigned digits) {
    std::string body = to_string(scaled_frac(n, digits));
    if (digits == 0) return "0";
    if (body.size() < digits) body.insert(0, digits - body.size(), '0');
    return "0." + body;
}

enum class PlotFormat { csv, svg_points };

/// Writes rows for every n in [from, to].
inline void write_plot(std::ostream& out, const Int& from, const Int& to, unsigned digits, PlotFormat format) {
    if (format == PlotFormat::csv) out << "n,f_n,frac_phi_n\n";
    for (Int n = from; n <= to; ++n) {
        if (format == PlotFormat::csv)
            out << n << ',' << beatty_f(n) << ',' << frac_digits(n, digits) << '\n';
        else
            out << n << ',' << frac_digits(n, digits) << '\n';
    }
}

}  // namespace zphi
