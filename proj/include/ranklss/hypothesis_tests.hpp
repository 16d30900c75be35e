#pragma once

/**
 * @file hypothesis_tests.hpp
 * @brief Independence tests built on Kendall, Spearman and Pearson matrices.
 *
 * Kendall-based statistics:
 *   Qtau2   = tr(K^2),   upper tail, normal
 *   Qtau4   = tr(K^4),   upper tail, normal
 *   Qtaulog = log|K|,    lower tail, normal
 *   Qtau1   = scaled largest eigenvalue, upper tail, Tracy-Widom (beta = 1)
 *
 * Comparison statistics on the Spearman (S) and Pearson (R) matrices use
 * normal, Tracy-Widom or Gumbel-type calibrations; those are defaults that
 * callers may override through TestOptions.
 */

#include <boost/math/distributions/normal.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "ranklss/closed_forms.hpp"
#include "ranklss/data_matrix.hpp"
#include "ranklss/errors.hpp"
#include "ranklss/lss_moments.hpp"
#include "ranklss/rank_correlation.hpp"
#include "ranklss/spectrum.hpp"
#include "ranklss/tracy_widom.hpp"

namespace ranklss {

enum class StatId { Qtau2, Qtau4, Qtaulog, Qtau1, QS2, QS4, QSmax, QS1, QR2, QRmax, QR1 };

inline constexpr StatId kAllStats[] = {StatId::Qtau2, StatId::Qtau4, StatId::Qtaulog, StatId::Qtau1,
                                       StatId::QS2,   StatId::QS4,   StatId::QSmax,   StatId::QS1,
                                       StatId::QR2,   StatId::QRmax, StatId::QR1};

inline const char* to_string(StatId s) {
    switch (s) {
        case StatId::Qtau2: return "Qtau2";
        case StatId::Qtau4: return "Qtau4";
        case StatId::Qtaulog: return "Qtaulog";
        case StatId::Qtau1: return "Qtau1";
        case StatId::QS2: return "QS2";
        case StatId::QS4: return "QS4";
        case StatId::QSmax: return "QSmax";
        case StatId::QS1: return "QS1";
        case StatId::QR2: return "QR2";
        case StatId::QRmax: return "QRmax";
        case StatId::QR1: return "QR1";
    }
    return "?";
}

inline StatId parse_stat(const std::string& name) {
    for (StatId s : kAllStats) {
        if (name == to_string(s)) return s;
    }
    throw InvalidArgument("unknown statistic '" + name + "'");
}

inline std::vector<StatId> parse_stat_list(const std::string& csv) {
    std::vector<StatId> out;
    for (auto cell : detail::split_commas(csv)) {
        cell = detail::trim(cell);
        if (!cell.empty()) out.push_back(parse_stat(std::string(cell)));
    }
    if (out.empty()) throw InvalidArgument("empty statistic list");
    return out;
}

/// Which correlation matrix a statistic is built from.
inline CorrFlavor stat_flavor(StatId s) {
    switch (s) {
        case StatId::Qtau2:
        case StatId::Qtau4:
        case StatId::Qtaulog:
        case StatId::Qtau1: return CorrFlavor::kendall;
        case StatId::QS2:
        case StatId::QS4:
        case StatId::QSmax:
        case StatId::QS1: return CorrFlavor::spearman;
        default: return CorrFlavor::pearson;
    }
}

// ---------------------------------------------------------------------------
// Spectral statistics

inline double stat_q2(const Spectrum& s) { return s.eigenvalues.squaredNorm(); }

inline double stat_q4(const Spectrum& s) { return s.eigenvalues.array().square().square().sum(); }

inline double stat_qlog(const Spectrum& s) {
    double total = 0.0;
    for (Eigen::Index i = 0; i < s.eigenvalues.size(); ++i) {
        const double l = s.eigenvalues(i);
        if (!(l > 0.0)) throw DomainError("log-determinant undefined: eigenvalue " + std::to_string(l) + " is not positive");
        total += std::log(l);
    }
    return total;
}

// ---------------------------------------------------------------------------
// Calibrations

enum class Tail { upper, lower };
enum class NullFamily { normal, tracy_widom_1, gumbel };

inline const char* to_string(Tail t) { return t == Tail::upper ? "upper" : "lower"; }
inline const char* to_string(NullFamily f) {
    switch (f) {
        case NullFamily::normal: return "normal";
        case NullFamily::tracy_widom_1: return "tracy-widom-1";
        case NullFamily::gumbel: return "gumbel";
    }
    return "?";
}

/// Null law of (raw - centering). Normal: N(mean, sd^2). Tracy-Widom and
/// Gumbel families apply to the raw scaled statistic (centering 0, mean 0,
/// sd 1); Gumbel uses F(x) = exp(-kappa (8 pi)^{-1/2} exp(-x/2)).
struct NullCalibration {
    double mean = 0.0;
    double sd = 1.0;
    double centering = 0.0;
    Tail tail = Tail::upper;
    NullFamily family = NullFamily::normal;
    double gumbel_kappa = 1.0;
};

enum class Q4Centering { moment_transform, literal };
enum class LogMeanSource { closed_form, contour };

struct TestOptions {
    Q4Centering q4_centering = Q4Centering::moment_transform;
    LogMeanSource log_mean = LogMeanSource::closed_form;
    std::optional<double> gumbel_kappa_r;  ///< default (p/n)^2 for QRmax
    std::optional<double> gumbel_kappa_s;  ///< default 1 for QSmax
    KendallOptions kendall{};
};

namespace detail {

inline void check_sizes(double p, double n) {
    if (!(p >= 2.0 && n >= 2.0)) throw InvalidArgument("need p >= 2 and n >= 2");
}

}  // namespace detail

inline NullCalibration calibrate_q2(double p, double n) {
    detail::check_sizes(p, n);
    const double c = p / n;
    return {closed_form::q2_mean(c), std::sqrt(closed_form::q2_var(c)), closed_form::q2_centering(p, n), Tail::upper,
            NullFamily::normal};
}

inline NullCalibration calibrate_q4(double p, double n, Q4Centering centering = Q4Centering::moment_transform) {
    detail::check_sizes(p, n);
    const double c = p / n;
    return {closed_form::q4_mean(c), std::sqrt(closed_form::q4_var(c)),
            centering == Q4Centering::moment_transform ? closed_form::q4_centering(p, n)
                                                       : closed_form::q4_centering_literal(p, n),
            Tail::upper, NullFamily::normal};
}

inline NullCalibration calibrate_qlog(double p, double n, LogMeanSource source = LogMeanSource::closed_form) {
    detail::check_sizes(p, n);
    const double c = p / n;
    const double mean =
        source == LogMeanSource::closed_form ? closed_form::log_mean(c) : lss_mean(FunctionDescriptor::log(), c);
    return {mean, std::sqrt(closed_form::log_var(c)), closed_form::log_centering(p, n), Tail::lower,
            NullFamily::normal};
}

inline NullCalibration calibrate(StatId s, double p, double n, const TestOptions& opt = {}) {
    detail::check_sizes(p, n);
    const double c = p / n;
    switch (s) {
        case StatId::Qtau2: return calibrate_q2(p, n);
        case StatId::Qtau4: return calibrate_q4(p, n, opt.q4_centering);
        case StatId::Qtaulog: return calibrate_qlog(p, n, opt.log_mean);
        case StatId::Qtau1:
        case StatId::QS1:
        case StatId::QR1: return {0.0, 1.0, 0.0, Tail::upper, NullFamily::tracy_widom_1};
        case StatId::QR2: return {c * c - c, 2.0 * c, 0.0, Tail::upper, NullFamily::normal};
        case StatId::QS2: return {0.0, 2.0 / c, 0.0, Tail::upper, NullFamily::normal};
        case StatId::QS4: {
            const double r = n / p;
            const double sd = 6.0 * r * std::sqrt(4.0 + 24.0 * r + 42.0 * r * r + 24.0 * r * r * r + 4.0 * r * r * r * r);
            const double mean = -(6.0 * c + 15.0 * c * c + 6.0 * c * c * c);
            return {mean, sd, 0.0, Tail::upper, NullFamily::normal};
        }
        case StatId::QSmax:
            return {0.0, 1.0, 0.0, Tail::upper, NullFamily::gumbel, opt.gumbel_kappa_s.value_or(1.0)};
        case StatId::QRmax:
            return {0.0, 1.0, 0.0, Tail::upper, NullFamily::gumbel, opt.gumbel_kappa_r.value_or(c * c)};
    }
    throw InvalidArgument("unknown statistic");
}

/// Rejection threshold for Qtau2 - p - 4p^2/(9n):
/// (8p/9n) z_alpha + 14p^2/(9n^2) - 4p/(9n).
inline double q2_rejection_threshold(double p, double n, double alpha) {
    const boost::math::normal_distribution<double> z;
    const double z_alpha = boost::math::quantile(boost::math::complement(z, alpha));
    return 8.0 * p / (9.0 * n) * z_alpha + 14.0 * p * p / (9.0 * n * n) - 4.0 * p / (9.0 * n);
}

// ---------------------------------------------------------------------------
// Reports

struct TestReport {
    std::string name;
    double raw = 0.0;
    double centering = 0.0;
    double centered = 0.0;
    double null_mean = 0.0;
    double null_sd = 1.0;
    double zscore = 0.0;
    double pvalue = 1.0;
    bool reject = false;
    double alpha = 0.05;
    double p = 0.0, n = 0.0, c_n = 0.0;
    NullFamily family = NullFamily::normal;
    Tail tail = Tail::upper;
};

inline double normal_cdf(double z) { return 0.5 * std::erfc(-z / std::numbers::sqrt2); }

/// Applies a calibration to a raw statistic value.
inline TestReport make_report(StatId s, double raw, const NullCalibration& cal, double p, double n, double alpha) {
    if (!(alpha > 0.0 && alpha < 1.0)) throw InvalidArgument("alpha must be in (0, 1)");
    TestReport r;
    r.name = to_string(s);
    r.raw = raw;
    r.centering = cal.centering;
    r.centered = raw - cal.centering;
    r.null_mean = cal.mean;
    r.null_sd = cal.sd;
    r.zscore = (r.centered - cal.mean) / cal.sd;
    r.family = cal.family;
    r.tail = cal.tail;
    switch (cal.family) {
        case NullFamily::normal:
            r.pvalue = cal.tail == Tail::upper ? normal_cdf(-r.zscore) : normal_cdf(r.zscore);
            break;
        case NullFamily::tracy_widom_1: r.pvalue = tw1_sf(r.zscore); break;
        case NullFamily::gumbel: {
            const double f = std::exp(-cal.gumbel_kappa / std::sqrt(8.0 * std::numbers::pi) * std::exp(-r.zscore / 2.0));
            r.pvalue = 1.0 - f;
            break;
        }
    }
    r.pvalue = std::clamp(r.pvalue, 0.0, 1.0);
    r.alpha = alpha;
    r.reject = r.pvalue < alpha;
    r.p = p;
    r.n = n;
    r.c_n = p / n;
    return r;
}

// ---------------------------------------------------------------------------
// Statistic evaluation on data

namespace detail {

inline double max_offdiag_abs(const Eigen::MatrixXd& m) {
    double best = 0.0;
    for (Eigen::Index k = 0; k < m.rows(); ++k) {
        for (Eigen::Index l = k + 1; l < m.cols(); ++l) best = std::max(best, std::abs(m(k, l)));
    }
    return best;
}

/// n^{2/3} c^{1/6} d^{-2/3} with d = (1 + sqrt c)^2.
inline double edge_scale(double p, double n) {
    const double c = p / n;
    const double d = (1.0 + std::sqrt(c)) * (1.0 + std::sqrt(c));
    return std::pow(n, 2.0 / 3.0) * std::pow(c, 1.0 / 6.0) * std::pow(d, -2.0 / 3.0);
}

}  // namespace detail

/// Lazily built matrices and spectra shared by several statistics.
class StatisticContext {
public:
    StatisticContext(const DataMatrix& data, TestOptions options = {})
        : data_(data), options_(std::move(options)) {}

    /// Uses a ready Kendall matrix (statistics needing S or R then fail).
    StatisticContext(const DataMatrix& data, CorrMatrix kendall, TestOptions options = {})
        : data_(data), options_(std::move(options)) {
        if (kendall.flavor != CorrFlavor::kendall) throw InvalidArgument("expected a kendall matrix");
        kendall_ = std::move(kendall);
    }

    const CorrMatrix& matrix(CorrFlavor f) {
        auto& slot = slot_for(f);
        if (!slot) {
            switch (f) {
                case CorrFlavor::kendall: slot = kendall_matrix(data_, options_.kendall); break;
                case CorrFlavor::spearman: slot = spearman_matrix(data_); break;
                case CorrFlavor::pearson: slot = pearson_matrix(data_); break;
            }
        }
        return *slot;
    }

    const Spectrum& spectrum(CorrFlavor f) {
        auto& slot = spectra_[static_cast<int>(f)];
        if (!slot) slot = eigvals_sym(matrix(f));
        return *slot;
    }

    /// Raw statistic value as displayed (comparison statistics include their
    /// own finite-sample centering).
    double raw(StatId s) {
        const double p = static_cast<double>(data_.p()), n = static_cast<double>(data_.n());
        const double c = p / n;
        switch (s) {
            case StatId::Qtau2: return stat_q2(spectrum(CorrFlavor::kendall));
            case StatId::Qtau4: return stat_q4(spectrum(CorrFlavor::kendall));
            case StatId::Qtaulog: return stat_qlog(spectrum(CorrFlavor::kendall));
            case StatId::Qtau1: {
                const double d = (1.0 + std::sqrt(c)) * (1.0 + std::sqrt(c));
                const double edge = 1.0 / 3.0 + 2.0 / 3.0 * d;
                return 1.5 * detail::edge_scale(p, n) * (spectrum(CorrFlavor::kendall).largest() - edge);
            }
            case StatId::QS1: {
                const double d = (1.0 + std::sqrt(c)) * (1.0 + std::sqrt(c));
                return detail::edge_scale(p, n) * (spectrum(CorrFlavor::spearman).largest() - d);
            }
            case StatId::QR1: {
                const double sp = std::sqrt(p), sn = std::sqrt(n);
                return (n * spectrum(CorrFlavor::pearson).largest() - (sp + sn) * (sp + sn)) /
                       ((sp + sn) * std::cbrt(1.0 / sp + 1.0 / sn));
            }
            case StatId::QS2: {
                const double tr2 = matrix(CorrFlavor::spearman).entries.squaredNorm();
                return n * n / (p * p) * tr2 - n * n / (n - 1.0) - n * n / p + n / p;
            }
            case StatId::QS4: {
                const auto& sm = matrix(CorrFlavor::spearman).entries;
                const Eigen::MatrixXd s2 = sm * sm;
                const double tr4 = s2.squaredNorm();
                const double n4 = n * n * n * n;
                return n4 / (p * p * p * p) * tr4 - n4 / std::pow(n - 1.0, 3) - n4 / (p * p * p) -
                       6.0 * n4 / ((n - 1.0) * p * p) - 6.0 * n4 / (p * (n - 1.0) * (n - 1.0));
            }
            case StatId::QR2: return matrix(CorrFlavor::pearson).entries.squaredNorm() - p - p * p / n;
            case StatId::QSmax: {
                const double m = detail::max_offdiag_abs(matrix(CorrFlavor::spearman).entries);
                return n * m * m - 4.0 * std::log(p) + std::log(std::log(p));
            }
            case StatId::QRmax: {
                const double m = detail::max_offdiag_abs(matrix(CorrFlavor::pearson).entries);
                return n * m * m - 4.0 * std::log(n) + std::log(std::log(n));
            }
        }
        throw InvalidArgument("unknown statistic");
    }

    TestReport report(StatId s, double alpha) {
        const double p = static_cast<double>(data_.p()), n = static_cast<double>(data_.n());
        return make_report(s, raw(s), calibrate(s, p, n, options_), p, n, alpha);
    }

private:
    std::optional<CorrMatrix>& slot_for(CorrFlavor f) {
        switch (f) {
            case CorrFlavor::kendall: return kendall_;
            case CorrFlavor::spearman: return spearman_;
            default: return pearson_;
        }
    }

    const DataMatrix& data_;
    TestOptions options_;
    std::optional<CorrMatrix> kendall_, spearman_, pearson_;
    std::optional<Spectrum> spectra_[3];
};

inline TestReport test_statistic(StatId s, const DataMatrix& data, double alpha, const TestOptions& opt = {}) {
    StatisticContext ctx(data, opt);
    return ctx.report(s, alpha);
}

inline std::vector<TestReport> test_statistics(const std::vector<StatId>& stats, const DataMatrix& data, double alpha,
                                               const TestOptions& opt = {}) {
    StatisticContext ctx(data, opt);
    std::vector<TestReport> out;
    out.reserve(stats.size());
    for (StatId s : stats) out.push_back(ctx.report(s, alpha));
    return out;
}

struct ComparisonValues {
    double Qtau1, QR1, QR2, QRmax, QS1, QS2, QS4, QSmax;
};

/// Raw values of the comparison battery.
inline ComparisonValues comparison_stats(const DataMatrix& data, const TestOptions& opt = {}) {
    StatisticContext ctx(data, opt);
    return {ctx.raw(StatId::Qtau1), ctx.raw(StatId::QR1),  ctx.raw(StatId::QR2), ctx.raw(StatId::QRmax),
            ctx.raw(StatId::QS1),   ctx.raw(StatId::QS2),  ctx.raw(StatId::QS4), ctx.raw(StatId::QSmax)};
}

}  // namespace ranklss
