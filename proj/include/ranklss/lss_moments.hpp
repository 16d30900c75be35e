#pragma once

/**
 * @file lss_moments.hpp
 * @brief Limiting mean and covariance of linear spectral statistics of
 *        Kendall's matrix by contour quadrature.
 *
 * With x(xi) = 1/3 + (2/3)(1 + sqrt(c) xi)(1 + sqrt(c)/xi), the limits are
 *
 *     E X_f        = (1/2 pi i) oint f(x(xi)) g(xi) dxi
 *     Cov(X_f, X_h) = 2 (1/2 pi i)^2 oint oint f(x(xi)) h(x(eta))
 *                     [1/(xi - eta)^2 - 1/(xi^2 eta^2)] dxi deta
 *
 * where g collects the poles at 0, +-1 and -sqrt(c).
 *
 * Two routes are provided:
 *  - deformed (default): the limit r -> 1 of the unit-circle form is taken
 *    analytically by moving to circles inside the annulus where f(x(xi)) is
 *    analytic. The mean circle has radius above max(1, sqrt(c)), so the pole
 *    at -sqrt(c) is enclosed for every c. The integrands are then smooth and
 *    periodic, the trapezoid rule converges geometrically and N is doubled
 *    until two successive values agree to `tol`.
 *  - unit_circle: nodes on |xi| = 1 with the offset r applied inside the
 *    integrand, evaluated over `r_schedule` and extrapolated to r = 1 with
 *    Neville's scheme. Valid for c <= 1 only.
 */

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <vector>

#include "ranklss/errors.hpp"
#include "ranklss/function_descriptor.hpp"

namespace ranklss {

enum class LssRoute { deformed, unit_circle };

struct LssConfig {
    LssRoute route = LssRoute::deformed;
    double tol = 1e-11;              ///< deformed route: doubling tolerance (absolute, scaled by max(1,|value|))
    std::size_t min_nodes = 64;      ///< deformed route: starting node count
    std::size_t max_nodes = 8192;    ///< deformed route: give up beyond this
    double margin = 0.05;            ///< custom functions: relative width of the assumed analytic annulus
    std::size_t nodes = 2048;        ///< unit-circle route: nodes on the outer integral
    std::size_t inner_nodes = 4096;  ///< unit-circle route: nodes on the inner integral
    std::vector<double> r_schedule{1.1, 1.05, 1.025, 1.0125};
};

struct LssMoments {
    Eigen::VectorXd mean;
    Eigen::MatrixXd cov;
    double c = 0.0;
    std::size_t quadrature_points = 0;
    std::vector<double> r_schedule;
};

namespace detail {

using cplx = std::complex<double>;

/// Neumaier-compensated complex sum.
class CompensatedSum {
public:
    void add(cplx v) {
        add_part(v.real(), re_, re_comp_);
        add_part(v.imag(), im_, im_comp_);
    }
    cplx value() const { return {re_ + re_comp_, im_ + im_comp_}; }

private:
    static void add_part(double v, double& sum, double& comp) {
        const double t = sum + v;
        comp += std::abs(sum) >= std::abs(v) ? (sum - t) + v : (v - t) + sum;
        sum = t;
    }
    double re_ = 0.0, re_comp_ = 0.0, im_ = 0.0, im_comp_ = 0.0;
};

inline cplx contour_x(double c, cplx xi) {
    const double s = std::sqrt(c);
    return 1.0 / 3.0 + (2.0 / 3.0) * (1.0 + s * xi) * (1.0 + s / xi);
}

/// Mean kernel g, evaluated at w (= r xi on the unit-circle route).
inline cplx mean_kernel(double c, cplx w) {
    const double s = std::sqrt(c);
    return 1.0 / ((w * w - 1.0) * w) - 2.0 / (w * w * w) + c / (2.0 * std::pow(s + w, 3)) +
           3.0 * c / ((s + w) * w * w) - c * s / ((s + w) * (s + w) * w * w);
}

inline std::vector<cplx> circle(double radius, std::size_t n) {
    std::vector<cplx> nodes(n);
    for (std::size_t k = 0; k < n; ++k) {
        nodes[k] = std::polar(radius, 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n));
    }
    return nodes;
}

/// Open annulus lo < |xi| < hi on which f(x(xi)) is analytic.
struct Annulus {
    double lo, hi;
};

inline Annulus analytic_annulus(const FunctionDescriptor& f, double c, double margin) {
    const double s = std::sqrt(c);
    switch (f.kind()) {
        case FunctionDescriptor::Kind::power: return {0.0, std::numeric_limits<double>::infinity()};
        case FunctionDescriptor::Kind::log: {
            // x(xi) = 0 at the roots of xi^2 + q xi + 1, q = (3/2 + c)/sqrt(c).
            const double q = (1.5 + c) / s;
            const double outer = (q + std::sqrt(q * q - 4.0)) / 2.0;
            return {1.0 / outer, outer};
        }
        case FunctionDescriptor::Kind::custom: {
            const double m0 = std::max(1.0, s);
            return {1.0 / (1.0 + margin), m0 * (1.0 + margin) * (1.0 + margin)};
        }
    }
    return {1.0, 1.0};
}

inline Annulus intersect(Annulus a, Annulus b) { return {std::max(a.lo, b.lo), std::min(a.hi, b.hi)}; }

inline double mean_radius(Annulus a, double c) {
    const double m0 = std::max(1.0, std::sqrt(c));
    if (!(a.hi > m0)) throw DomainError("function is not analytic on a circle enclosing max(1, sqrt c)");
    return std::isinf(a.hi) ? 2.0 * m0 : std::sqrt(m0 * a.hi);
}

inline std::pair<double, double> cov_radii(Annulus a) {
    if (a.lo == 0.0 && std::isinf(a.hi)) return {1.0, 2.0};
    if (std::isinf(a.hi)) return {a.lo * 2.0, a.lo * 4.0};
    if (a.lo == 0.0) return {a.hi / 4.0, a.hi / 2.0};
    return {std::pow(a.lo, 2.0 / 3.0) * std::pow(a.hi, 1.0 / 3.0), std::pow(a.lo, 1.0 / 3.0) * std::pow(a.hi, 2.0 / 3.0)};
}

inline double mean_on_circle(const FunctionDescriptor& f, double c, double radius, std::size_t n) {
    CompensatedSum sum;
    for (const cplx xi : circle(radius, n)) sum.add(f(contour_x(c, xi)) * mean_kernel(c, xi) * xi);
    return sum.value().real() / static_cast<double>(n);
}

inline double cov_on_circles(const FunctionDescriptor& f, const FunctionDescriptor& h, double c, double r1,
                             double r2, std::size_t n) {
    const auto a = circle(r1, n);
    const auto b = circle(r2, n);
    std::vector<cplx> fa(n), hb(n);
    CompensatedSum sep_a, sep_b;
    for (std::size_t k = 0; k < n; ++k) {
        fa[k] = f(contour_x(c, a[k])) * a[k];
        hb[k] = h(contour_x(c, b[k])) * b[k];
        sep_a.add(fa[k] / (a[k] * a[k]));
        sep_b.add(hb[k] / (b[k] * b[k]));
    }
    CompensatedSum total;
    for (std::size_t i = 0; i < n; ++i) {
        CompensatedSum row;
        for (std::size_t j = 0; j < n; ++j) {
            const cplx d = a[i] - b[j];
            row.add(hb[j] / (d * d));
        }
        total.add(fa[i] * row.value());
    }
    const cplx value = total.value() - sep_a.value() * sep_b.value();
    const double nn = static_cast<double>(n);
    return 2.0 * value.real() / (nn * nn);
}

/// Doubles N until successive values agree; returns {value, N used}.
template <class Eval>
std::pair<double, std::size_t> converge_by_doubling(Eval&& eval, const LssConfig& cfg, const char* what) {
    std::size_t n = std::max<std::size_t>(cfg.min_nodes, 8);
    double prev = eval(n);
    for (n *= 2; n <= cfg.max_nodes; n *= 2) {
        const double cur = eval(n);
        if (std::abs(cur - prev) <= cfg.tol * std::max(1.0, std::abs(cur))) return {cur, n};
        prev = cur;
    }
    throw ConvergenceError(std::string(what) + ": trapezoid values still changing at N = " +
                           std::to_string(cfg.max_nodes) + " (last value " + std::to_string(prev) + ")");
}

/// Neville extrapolation of values(h) to h = 0.
inline double extrapolate_to_zero(const std::vector<double>& h, std::vector<double> v) {
    const std::size_t m = v.size();
    for (std::size_t k = 1; k < m; ++k) {
        for (std::size_t i = 0; i + k < m; ++i) {
            v[i] = (h[i + k] * v[i] - h[i] * v[i + 1]) / (h[i + k] - h[i]);
        }
    }
    return v[0];
}

inline void check_unit_circle_route(double c, const LssConfig& cfg) {
    if (c > 1.0) {
        throw DomainError("unit-circle route is only valid for c <= 1 (it misses the residue at -sqrt(c)); "
                          "use the deformed route");
    }
    if (cfg.r_schedule.size() < 2) throw InvalidArgument("r_schedule needs at least two radii");
    for (double r : cfg.r_schedule) {
        if (!(r > 1.0)) throw InvalidArgument("r_schedule entries must exceed 1");
    }
}

inline double unit_circle_mean(const FunctionDescriptor& f, double c, double r, std::size_t n) {
    CompensatedSum sum;
    for (const cplx xi : circle(1.0, n)) sum.add(f(contour_x(c, xi)) * mean_kernel(c, r * xi) * xi);
    return sum.value().real() / static_cast<double>(n);
}

inline double unit_circle_cov(const FunctionDescriptor& f, const FunctionDescriptor& h, double c, double r,
                              std::size_t n_outer, std::size_t n_inner) {
    const auto a = circle(1.0, n_outer);
    const auto b = circle(1.0, n_inner);
    std::vector<cplx> hb(n_inner);
    for (std::size_t j = 0; j < n_inner; ++j) hb[j] = h(contour_x(c, b[j])) * b[j];
    CompensatedSum total;
    for (std::size_t i = 0; i < n_outer; ++i) {
        const cplx fa = f(contour_x(c, a[i])) * a[i];
        CompensatedSum row;
        for (std::size_t j = 0; j < n_inner; ++j) {
            const cplx d = a[i] - r * b[j];
            row.add(hb[j] * (1.0 / (d * d) - 1.0 / (a[i] * a[i] * b[j] * b[j])));
        }
        total.add(fa * row.value());
    }
    return 2.0 * total.value().real() / (static_cast<double>(n_outer) * static_cast<double>(n_inner));
}

inline void check_c(double c) {
    if (!(c > 0.0) || !std::isfinite(c)) throw DomainError("aspect ratio must be positive and finite");
}

}  // namespace detail

namespace detail {

/// Mean and the node count it used.
inline std::pair<double, std::size_t> lss_mean_impl(const FunctionDescriptor& f, double c, const LssConfig& cfg) {
    detail::check_c(c);
    if (cfg.route == LssRoute::unit_circle) {
        detail::check_unit_circle_route(c, cfg);
        std::vector<double> h, v;
        for (double r : cfg.r_schedule) {
            h.push_back(r - 1.0);
            v.push_back(detail::unit_circle_mean(f, c, r, cfg.nodes));
        }
        return {detail::extrapolate_to_zero(h, v), cfg.nodes};
    }
    const double radius = detail::mean_radius(detail::analytic_annulus(f, c, cfg.margin), c);
    return detail::converge_by_doubling([&](std::size_t n) { return detail::mean_on_circle(f, c, radius, n); },
                                        cfg, "lss_mean");
}

inline std::pair<double, std::size_t> lss_cov_impl(const FunctionDescriptor& f, const FunctionDescriptor& h,
                                                   double c, const LssConfig& cfg) {
    detail::check_c(c);
    if (cfg.route == LssRoute::unit_circle) {
        detail::check_unit_circle_route(c, cfg);
        std::vector<double> hs, v;
        for (double r : cfg.r_schedule) {
            hs.push_back(r - 1.0);
            v.push_back(detail::unit_circle_cov(f, h, c, r, cfg.nodes, cfg.inner_nodes));
        }
        return {detail::extrapolate_to_zero(hs, v), cfg.nodes};
    }
    const auto annulus = detail::intersect(detail::analytic_annulus(f, c, cfg.margin),
                                           detail::analytic_annulus(h, c, cfg.margin));
    if (!(annulus.hi > annulus.lo)) throw DomainError("functions share no analytic annulus");
    const auto [r1, r2] = detail::cov_radii(annulus);
    return detail::converge_by_doubling(
               [&](std::size_t n) { return detail::cov_on_circles(f, h, c, r1, r2, n); }, cfg, "lss_cov");
}

}  // namespace detail

/// Limiting mean E X_f.
inline double lss_mean(const FunctionDescriptor& f, double c, const LssConfig& cfg = {}) {
    return detail::lss_mean_impl(f, c, cfg).first;
}

/// Limiting covariance Cov(X_f, X_h).
inline double lss_cov(const FunctionDescriptor& f, const FunctionDescriptor& h, double c, const LssConfig& cfg = {}) {
    return detail::lss_cov_impl(f, h, c, cfg).first;
}

/// Componentwise means and the symmetrized covariance matrix.
inline LssMoments lss_moments_vector(const std::vector<FunctionDescriptor>& fs, double c, const LssConfig& cfg = {}) {
    if (fs.empty()) throw InvalidArgument("need at least one function");
    const auto k = static_cast<Eigen::Index>(fs.size());
    LssMoments out;
    out.c = c;
    out.mean.resize(k);
    out.cov.resize(k, k);
    auto take = [&](std::pair<double, std::size_t> r) {
        out.quadrature_points = std::max(out.quadrature_points, r.second);
        return r.first;
    };
    for (Eigen::Index i = 0; i < k; ++i) out.mean(i) = take(detail::lss_mean_impl(fs[i], c, cfg));
    for (Eigen::Index i = 0; i < k; ++i) {
        for (Eigen::Index j = i; j < k; ++j) {
            const double v = i == j ? take(detail::lss_cov_impl(fs[i], fs[i], c, cfg))
                                    : 0.5 * (take(detail::lss_cov_impl(fs[i], fs[j], c, cfg)) +
                                             take(detail::lss_cov_impl(fs[j], fs[i], c, cfg)));
            out.cov(i, j) = out.cov(j, i) = v;
        }
    }
    if (cfg.route == LssRoute::unit_circle) out.r_schedule = cfg.r_schedule;
    return out;
}

}  // namespace ranklss
