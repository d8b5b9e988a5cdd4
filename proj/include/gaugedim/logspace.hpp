#ifndef GAUGEDIM_LOGSPACE_HPP
#define GAUGEDIM_LOGSPACE_HPP

#include <cmath>
#include <limits>

namespace gaugedim {

// Gauge values are carried as log2 throughout: the jump gauge 2^{-1/phi}
// underflows any fixed-width float for moderate 1/phi, while its log2 is
// just -1/phi. Linear values are materialized on demand with an underflow
// flag instead of silently returning 0.

/// A nonnegative real stored as log2(value); -inf encodes exact zero.
struct Log2Value {
    double log2v = -std::numeric_limits<double>::infinity();

    static Log2Value zero() { return {}; }
    static Log2Value from_linear(double v) {
        return {v <= 0.0 ? -std::numeric_limits<double>::infinity() : std::log2(v)};
    }
    static Log2Value from_log2(double l) { return {l}; }

    bool is_zero() const { return std::isinf(log2v) && log2v < 0; }
};

/// Linear materialization of a log2-space value. `underflow` is set when the
/// true value is positive but below the smallest positive double.
struct LinearValue {
    double value = 0.0;
    bool underflow = false;
    bool overflow = false;
};

inline LinearValue to_linear(Log2Value v) {
    if (v.is_zero()) return {0.0, false, false};
    if (v.log2v < -1074.0) return {0.0, true, false};
    if (v.log2v > 1024.0) return {std::numeric_limits<double>::infinity(), false, true};
    return {std::exp2(v.log2v), false, false};
}

/// log2(2^a + 2^b), safe for widely separated magnitudes.
inline double log2_add(double a, double b) {
    if (std::isinf(a) && a < 0) return b;
    if (std::isinf(b) && b < 0) return a;
    double hi = a > b ? a : b;
    double lo = a > b ? b : a;
    if (hi - lo > 1100.0) return hi;
    return hi + std::log2(1.0 + std::exp2(lo - hi));
}

} // namespace gaugedim

#endif
