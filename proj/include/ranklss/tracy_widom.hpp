#pragma once

// Tracy-Widom (beta = 1) distribution from a bundled CDF table on
// [-8, 8] with step 0.01 (data/tw1_cdf.csv, regenerated by
// tools/gen_tw1_table.py). Between grid points the CDF is interpolated by a
// monotone cubic (Fritsch-Carlson) so that quantiles are well defined.

#include <algorithm>
#include <cmath>

#include "ranklss/detail/tw1_table.hpp"
#include "ranklss/errors.hpp"

namespace ranklss {

namespace detail {

inline double tw1_node(std::size_t i) { return kTw1Cdf[i]; }

inline double tw1_slope(std::size_t i) {
    const std::size_t last = kTw1Cdf.size() - 1;
    const double h = kTw1GridStep;
    if (i == 0) return (kTw1Cdf[1] - kTw1Cdf[0]) / h;
    if (i == last) return (kTw1Cdf[last] - kTw1Cdf[last - 1]) / h;
    const double left = (kTw1Cdf[i] - kTw1Cdf[i - 1]) / h;
    const double right = (kTw1Cdf[i + 1] - kTw1Cdf[i]) / h;
    if (left * right <= 0.0) return 0.0;
    return 2.0 / (1.0 / left + 1.0 / right);  // harmonic mean keeps monotonicity
}

}  // namespace detail

/// F_1(s). Clamped to the table's end values outside [-8, 8].
inline double tw1_cdf(double s) {
    const std::size_t last = detail::kTw1Cdf.size() - 1;
    const double pos = (s - detail::kTw1GridStart) / detail::kTw1GridStep;
    if (!(pos > 0.0)) return pos <= 0.0 ? detail::kTw1Cdf[0] : std::nan("");
    if (pos >= static_cast<double>(last)) return detail::kTw1Cdf[last];
    const auto i = static_cast<std::size_t>(pos);
    const double t = pos - static_cast<double>(i);
    const double h = detail::kTw1GridStep;
    const double y0 = detail::tw1_node(i), y1 = detail::tw1_node(i + 1);
    const double m0 = detail::tw1_slope(i) * h, m1 = detail::tw1_slope(i + 1) * h;
    const double t2 = t * t, t3 = t2 * t;
    return (2 * t3 - 3 * t2 + 1) * y0 + (t3 - 2 * t2 + t) * m0 + (-2 * t3 + 3 * t2) * y1 + (t3 - t2) * m1;
}

/// Upper tail P(TW1 > s).
inline double tw1_sf(double s) { return 1.0 - tw1_cdf(s); }

/// Quantile s with F_1(s) = prob, by bisection on the interpolant.
inline double tw1_quantile(double prob) {
    const double lo_cdf = detail::kTw1Cdf.front(), hi_cdf = detail::kTw1Cdf.back();
    if (!(prob >= lo_cdf && prob <= hi_cdf)) {
        throw DomainError("Tracy-Widom quantile level outside the bundled table's range");
    }
    double lo = detail::kTw1GridStart;
    double hi = detail::kTw1GridStart + detail::kTw1GridStep * static_cast<double>(detail::kTw1Cdf.size() - 1);
    for (int it = 0; it < 100; ++it) {
        const double mid = 0.5 * (lo + hi);
        (tw1_cdf(mid) < prob ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

}  // namespace ranklss
