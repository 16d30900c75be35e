#pragma once

// Closed-form null constants for the three trace/log-determinant statistics
// of Kendall's matrix, as functions of the aspect ratio c.

#include <cmath>

#include "ranklss/errors.hpp"
#include "ranklss/spectral_law.hpp"

namespace ranklss::closed_form {

inline double q2_mean(double c) { return 14.0 / 9.0 * c * c - 4.0 / 9.0 * c; }
inline double q2_var(double c) { return 64.0 / 81.0 * c * c; }

inline double q4_mean(double c) {
    return -8.0 / 3.0 * c + 140.0 / 27.0 * c * c + 608.0 / 81.0 * c * c * c + 112.0 / 81.0 * c * c * c * c;
}

inline double q4_var(double c) {
    const double t1 = 8.0 / 3.0 * c + 352.0 / 81.0 * c * c + 32.0 / 27.0 * c * c * c;
    const double t2 = 32.0 / 27.0 * std::pow(c, 1.5) + 64.0 / 81.0 * std::pow(c, 2.5);
    return 4.0 * t1 * t1 + 6.0 * t2 * t2 + 2048.0 / (81.0 * 81.0) * c * c * c * c;
}

/// a = (sqrt d_plus + sqrt d_minus)/2, b = (sqrt d_plus - sqrt d_minus)/2.
struct LogParams {
    double a, b;
};

inline LogParams log_params(double c) {
    const auto law = make_law(c);
    const double sp = std::sqrt(law.d_plus), sm = std::sqrt(law.d_minus);
    return {(sp + sm) / 2.0, (sp - sm) / 2.0};
}

inline double log_mean(double c) {
    const auto [a, b] = log_params(c);
    const double s = std::sqrt(c);
    if (!(a - b * s > 0.0)) throw DomainError("log mean: a - b sqrt(c) must be positive");
    double v = -2.0 * std::log(a) + 0.5 * std::log(a * a - b * b) + std::log(a - b * s) + 2.0 * b * s / a -
               (4.0 * a * b * s - 3.0 * c * b * b) / (4.0 * (a - b * s) * (a - b * s)) + b * b / (a * a);
    if (c > 1.0) {
        if (!(a - b / s > 0.0)) throw DomainError("log mean: a - b/sqrt(c) must be positive");
        v += (3.0 * b * b - 2.0 * a * b * s) / (4.0 * (a * s - b) * (a * s - b)) - std::log(a - b / s);
    }
    return v;
}

inline double log_var(double c) {
    const auto [a, b] = log_params(c);
    return 2.0 * std::log(a * a / (a * a - b * b)) - 2.0 * b * b / (a * a);
}

// Centering terms for sample sizes (p, n).

inline double q2_centering(double p, double n) { return p + 4.0 * p * p / (9.0 * n); }

/// p * int x^4 dF^{p/n}.
inline double q4_centering(double p, double n) {
    return p + 8.0 * p * p / (3.0 * n) + 128.0 * p * p * p / (81.0 * n * n) +
           16.0 * p * p * p * p / (81.0 * n * n * n);
}

/// The variant whose third term reads 128 p^3 / n^2, kept for comparison.
inline double q4_centering_literal(double p, double n) {
    return p + 8.0 * p * p / (3.0 * n) + 128.0 * p * p * p / (n * n) + 16.0 * p * p * p * p / (81.0 * n * n * n);
}

/// p * int log dF^{p/n}, written through a and b at c_n = p/n.
inline double log_centering(double p, double n) {
    const auto [a, b] = log_params(p / n);
    const double arg = a - b * std::sqrt(p / n);
    if (!(arg > 0.0)) throw DomainError("log centering: a - b sqrt(p/n) must be positive");
    return -(b / a) * std::sqrt(p * n) + (p + n) * std::log(a) - (n - p) * std::log(arg);
}

}  // namespace ranklss::closed_form
