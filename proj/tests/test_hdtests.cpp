#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "ranklss/hypothesis_tests.hpp"
#include "ranklss/lss_moments.hpp"
#include "ranklss/random.hpp"

using namespace ranklss;

namespace {

DataMatrix normal_data(std::size_t p, std::size_t n, std::uint64_t seed) {
    PhiloxStream rng(seed, 0);
    RowMatrix x(static_cast<Eigen::Index>(p), static_cast<Eigen::Index>(n));
    for (Eigen::Index k = 0; k < x.rows(); ++k) {
        for (Eigen::Index i = 0; i < x.cols(); ++i) x(k, i) = rng.normal();
    }
    return DataMatrix(std::move(x));
}

Spectrum spectrum_of(std::initializer_list<double> values) {
    Spectrum s;
    s.eigenvalues.resize(static_cast<Eigen::Index>(values.size()));
    Eigen::Index i = 0;
    for (double v : values) s.eigenvalues(i++) = v;
    return s;
}

Eigen::MatrixXd two_by_two_ones() {
    Eigen::MatrixXd m(2, 2);
    m << 1, -1, -1, 1;
    return m;
}

}  // namespace

TEST(SpectralStats, Identity) {
    const auto s = eigvals_sym(Eigen::MatrixXd::Identity(7, 7));
    EXPECT_NEAR(stat_q2(s), 7.0, 1e-14);
    EXPECT_NEAR(stat_q4(s), 7.0, 1e-14);
    EXPECT_NEAR(stat_qlog(s), 0.0, 1e-14);
}

TEST(SpectralStats, RankOneTwoByTwo) {
    const auto s = eigvals_sym(two_by_two_ones());
    EXPECT_NEAR(stat_q2(s), 4.0, 1e-14);
    EXPECT_NEAR(stat_q4(s), 16.0, 1e-13);
}

TEST(SpectralStats, LogOfReciprocalPair) { EXPECT_NEAR(stat_qlog(spectrum_of({2.0, 0.5})), 0.0, 1e-15); }

TEST(SpectralStats, LogRejectsSingular) {
    EXPECT_THROW(stat_qlog(spectrum_of({2.0, 0.0})), DomainError);
    EXPECT_THROW(stat_qlog(spectrum_of({2.0, -1e-3})), DomainError);
}

TEST(SpectralStats, MatchMatrixSideOracles) {
    for (auto [p, n] : {std::pair<std::size_t, std::size_t>{30, 80}, {50, 200}, {200, 300}}) {
        const auto k = kendall_matrix(normal_data(p, n, p + n));
        const auto s = eigvals_sym(k);
        const Eigen::MatrixXd& m = k.entries;
        EXPECT_NEAR(stat_q2(s), m.squaredNorm(), 1e-8 * m.squaredNorm());
        const Eigen::MatrixXd m2 = m * m;
        EXPECT_NEAR(stat_q4(s), (m2 * m2).trace(), 1e-8 * (m2 * m2).trace());
        if (p < n) {
            Eigen::LDLT<Eigen::MatrixXd> ldlt(m);
            const double logdet = ldlt.vectorD().array().log().sum();
            EXPECT_NEAR(stat_qlog(s), logdet, 1e-8 * std::max(1.0, std::abs(logdet)));
        }
    }
}

TEST(CalibrateQ2, WorkedExample) {
    const auto cal = calibrate_q2(100, 200);
    EXPECT_NEAR(cal.centering, 100.0 + 4e4 / 1800.0, 1e-12);
    EXPECT_NEAR(cal.centering, 122.222, 1e-3);
    EXPECT_NEAR(cal.mean, 14.0 / 36.0 - 4.0 / 18.0, 1e-15);  // 1/6
    EXPECT_NEAR(cal.sd, 4.0 / 9.0, 1e-15);
    EXPECT_EQ(cal.tail, Tail::upper);
    EXPECT_EQ(cal.family, NullFamily::normal);
}

TEST(CalibrateQ2, SmallAspectRatioLimit) {
    const auto cal = calibrate_q2(2, 1e8);
    EXPECT_LT(std::abs(cal.mean), 1e-7);
    EXPECT_LT(cal.sd, 1e-7);
    EXPECT_GT(cal.sd, 0.0);
}

TEST(CalibrateQ2, RejectionThresholdIdentity) {
    for (auto [p, n] : {std::pair{100.0, 200.0}, std::pair{300.0, 100.0}}) {
        for (double alpha : {0.01, 0.05, 0.1}) {
            const auto cal = calibrate_q2(p, n);
            const double z = boost::math::quantile(boost::math::complement(boost::math::normal_distribution<>(), alpha));
            EXPECT_NEAR(cal.mean + cal.sd * z, q2_rejection_threshold(p, n, alpha), 1e-12);
            // A raw value just above the threshold rejects; just below does not.
            const double edge = cal.centering + q2_rejection_threshold(p, n, alpha);
            EXPECT_TRUE(make_report(StatId::Qtau2, edge + 1e-9, cal, p, n, alpha).reject);
            EXPECT_FALSE(make_report(StatId::Qtau2, edge - 1e-9, cal, p, n, alpha).reject);
        }
    }
}

TEST(CalibrateQ2, MatchesPairwiseSumNormalization) {
    // Standardized form n[sum_{k<l} tau^2 - C(p,2) E tau^2]/(4p/9) with the
    // exact null moment E tau^2 = 2(2n+5)/(9n(n-1)); the two centerings
    // differ by 7(p-n)/(4n(n-1)).
    for (auto [p, n] : {std::pair<std::size_t, std::size_t>{40, 80}, {60, 30}}) {
        const auto data = normal_data(p, n, 77);
        const double pd = static_cast<double>(p), nd = static_cast<double>(n);
        const auto rep = test_statistic(StatId::Qtau2, data, 0.05);
        const double s = (rep.raw - pd) / 2.0;
        const double mu_h = 2.0 * (2.0 * nd + 5.0) / (9.0 * nd * (nd - 1.0));
        const double z_ld = nd * (s - pd * (pd - 1.0) / 2.0 * mu_h) / (4.0 * pd / 9.0);
        EXPECT_NEAR(rep.zscore - z_ld, 7.0 * (pd - nd) / (4.0 * nd * (nd - 1.0)), 1e-9);
    }
}

TEST(CalibrateQ4, ClosedFormValuesAtOne) {
    EXPECT_NEAR(closed_form::q4_mean(1.0), 308.0 / 27.0, 1e-13);
    EXPECT_NEAR(closed_form::q4_var(1.0), 292.53, 0.01);
    const auto cal = calibrate_q4(300, 300);
    EXPECT_NEAR(cal.centering, 300.0 * 441.0 / 81.0, 1e-9);
    EXPECT_NEAR(cal.sd * cal.sd, closed_form::q4_var(1.0), 1e-9);
}

TEST(CalibrateQ4, CenteringIsPTimesFourthMoment) {
    for (auto [p, n] : {std::pair{100.0, 200.0}, std::pair{200.0, 100.0}}) {
        EXPECT_NEAR(calibrate_q4(p, n).centering, p * lsd_moment(FunctionDescriptor::power(4), make_law(p / n)),
                    1e-9 * p);
    }
}

TEST(CalibrateQ4, LiteralVariantDiffersOnlyInThirdTerm) {
    const double p = 200, n = 100;
    const double diff = calibrate_q4(p, n, Q4Centering::literal).centering - calibrate_q4(p, n).centering;
    EXPECT_NEAR(diff, 128.0 * p * p * p / (n * n) * (1.0 - 1.0 / 81.0), 1e-6);
}

TEST(CalibrateQlog, UnitAspectRatio) {
    const auto [a, b] = closed_form::log_params(1.0);
    EXPECT_NEAR(a, 2.0 / std::sqrt(3.0), 1e-15);
    EXPECT_NEAR(b, 1.0 / std::sqrt(3.0), 1e-15);
    const auto cal = calibrate_qlog(150, 150);
    EXPECT_NEAR(cal.sd * cal.sd, 2.0 * std::log(4.0 / 3.0) - 0.5, 1e-14);
    EXPECT_EQ(cal.tail, Tail::lower);
}

TEST(CalibrateQlog, ContourCrossCheckBelowOne) {
    for (double c : {0.25, 0.5, 0.9}) {
        EXPECT_NEAR(lss_mean(FunctionDescriptor::log(), c), closed_form::log_mean(c), 1e-5) << "c = " << c;
    }
}

TEST(CalibrateQlog, ContourSourceOption) {
    const auto closed = calibrate_qlog(100, 200);
    const auto contour = calibrate_qlog(100, 200, LogMeanSource::contour);
    EXPECT_NEAR(closed.mean, contour.mean, 1e-8);
    EXPECT_EQ(closed.centering, contour.centering);
}

TEST(CalibrateQlog, CenteringIsPTimesLogMoment) {
    for (auto [p, n] : {std::pair{100.0, 200.0}, std::pair{50.0, 400.0}}) {
        EXPECT_NEAR(calibrate_qlog(p, n).centering, p * lsd_moment(FunctionDescriptor::log(), make_law(p / n)),
                    1e-7 * p);
    }
}

TEST(Calibrate, RejectsTinySizes) {
    EXPECT_THROW(calibrate_q2(1, 10), InvalidArgument);
    EXPECT_THROW(calibrate(StatId::QS4, 10, 1), InvalidArgument);
}

TEST(Report, InvariantsAcrossFamilies) {
    const auto data = normal_data(40, 90, 3);
    for (StatId s : kAllStats) {
        for (double alpha : {0.01, 0.05, 0.5}) {
            const auto r = test_statistic(s, data, alpha);
            EXPECT_GE(r.pvalue, 0.0);
            EXPECT_LE(r.pvalue, 1.0);
            EXPECT_EQ(r.reject, r.pvalue < alpha) << r.name;
            EXPECT_EQ(r.name, to_string(s));
            EXPECT_NEAR(r.centered, r.raw - r.centering, 1e-12 * std::max(1.0, std::abs(r.raw)));
            EXPECT_DOUBLE_EQ(r.c_n, 40.0 / 90.0);
        }
    }
}

TEST(Report, TailDirection) {
    NullCalibration cal;
    cal.tail = Tail::lower;
    EXPECT_NEAR(make_report(StatId::Qtaulog, -1.645, cal, 10, 10, 0.05).pvalue, 0.05, 1e-4);
    EXPECT_NEAR(make_report(StatId::Qtaulog, 1.645, cal, 10, 10, 0.05).pvalue, 0.95, 1e-4);
    cal.tail = Tail::upper;
    EXPECT_NEAR(make_report(StatId::Qtau2, 1.645, cal, 10, 10, 0.05).pvalue, 0.05, 1e-4);
    EXPECT_THROW(make_report(StatId::Qtau2, 0.0, cal, 10, 10, 1.5), InvalidArgument);
}

TEST(Report, TracyWidomQuantiles) {
    EXPECT_NEAR(tw1_quantile(0.90), 0.4501, 2e-3);
    EXPECT_NEAR(tw1_quantile(0.95), 0.9793, 2e-3);
    EXPECT_NEAR(tw1_quantile(0.99), 2.0234, 2e-3);
    const auto cal = calibrate(StatId::Qtau1, 100, 200);
    EXPECT_NEAR(make_report(StatId::Qtau1, tw1_quantile(0.95), cal, 100, 200, 0.05).pvalue, 0.05, 1e-9);
    EXPECT_THROW(tw1_quantile(1.0), DomainError);
}

TEST(Report, GumbelCalibration) {
    const auto cal = calibrate(StatId::QRmax, 100, 200);
    EXPECT_DOUBLE_EQ(cal.gumbel_kappa, 0.25);
    const double x95 = -2.0 * std::log(-std::log(0.95) * std::sqrt(8.0 * std::numbers::pi) / 0.25);
    EXPECT_NEAR(make_report(StatId::QRmax, x95, cal, 100, 200, 0.05).pvalue, 0.05, 1e-12);
    TestOptions opt;
    opt.gumbel_kappa_s = 2.0;
    EXPECT_DOUBLE_EQ(calibrate(StatId::QSmax, 100, 200, opt).gumbel_kappa, 2.0);
    EXPECT_DOUBLE_EQ(calibrate(StatId::QSmax, 100, 200).gumbel_kappa, 1.0);
}

TEST(Statistics, KendallStatsInvariantUnderMonotoneTransforms) {
    const auto data = normal_data(30, 60, 11);
    RowMatrix y = data.values();
    for (Eigen::Index k = 0; k < y.rows(); ++k) {
        for (Eigen::Index i = 0; i < y.cols(); ++i) {
            const double v = y(k, i);
            y(k, i) = k % 3 == 0 ? std::exp(v) : (k % 3 == 1 ? v * v * v : -2.0 * v + 5.0);
        }
    }
    // Decreasing maps flip signs in K, leaving its spectrum unchanged up to rounding.
    const DataMatrix transformed(std::move(y));
    for (StatId s : {StatId::Qtau2, StatId::Qtau4, StatId::Qtaulog, StatId::Qtau1}) {
        const double a = test_statistic(s, data, 0.05).raw, b = test_statistic(s, transformed, 0.05).raw;
        EXPECT_NEAR(a, b, 1e-10 * std::max(1.0, std::abs(a))) << to_string(s);
    }
}

TEST(Statistics, IncreasingTransformsGiveIdenticalValues) {
    const auto data = normal_data(20, 50, 12);
    RowMatrix y = data.values();
    y = y.array().exp();
    const DataMatrix transformed(std::move(y));
    for (StatId s : {StatId::Qtau2, StatId::Qtau4, StatId::Qtaulog}) {
        EXPECT_EQ(test_statistic(s, data, 0.05).raw, test_statistic(s, transformed, 0.05).raw) << to_string(s);
    }
}

TEST(ComparisonStats, PerfectlyCorrelatedPair) {
    RowMatrix x(2, 10);
    for (int i = 0; i < 10; ++i) {
        x(0, i) = i * 0.37 - (i % 3);
        x(1, i) = 2.0 * x(0, i) + 1.0;
    }
    const auto v = comparison_stats(DataMatrix(x));
    EXPECT_NEAR(v.QSmax, 10.0 - 4.0 * std::log(2.0) + std::log(std::log(2.0)), 1e-12);
    EXPECT_NEAR(v.QRmax, 10.0 - 4.0 * std::log(10.0) + std::log(std::log(10.0)), 1e-12);
}

TEST(ComparisonStats, UncorrelatedPairPlugIns) {
    RowMatrix x(2, 4);
    x << 1, 2, 3, 4, 2, 4, 1, 3;
    const auto v = comparison_stats(DataMatrix(x));
    EXPECT_NEAR(v.QR2, -1.0, 1e-14);                                     // tr(R^2) - p - p^2/n with R = I
    EXPECT_NEAR(v.QS2, 16.0 / 4.0 * 2.0 - 16.0 / 3.0 - 8.0 + 2.0, 1e-13);  // S = I
    EXPECT_NEAR(v.QRmax, -4.0 * std::log(4.0) + std::log(std::log(4.0)), 1e-12);
}

TEST(ComparisonStats, QS4MatchesFormula) {
    const auto data = normal_data(15, 40, 8);
    const double p = 15, n = 40;
    const Eigen::MatrixXd s = spearman_matrix(data).entries;
    const double tr4 = (s * s * s * s).trace();
    const double n4 = std::pow(n, 4);
    const double expected = n4 / std::pow(p, 4) * tr4 - n4 / std::pow(n - 1, 3) - n4 / std::pow(p, 3) -
                            6 * n4 / ((n - 1) * p * p) - 6 * n4 / (p * (n - 1) * (n - 1));
    EXPECT_NEAR(comparison_stats(data).QS4, expected, 1e-9 * std::abs(expected));
}

TEST(Names, ParseAndRoundTrip) {
    for (StatId s : kAllStats) EXPECT_EQ(parse_stat(to_string(s)), s);
    EXPECT_THROW(parse_stat("Qfoo"), InvalidArgument);
    const auto list = parse_stat_list("Qtau2, Qtaulog ,QR1");
    ASSERT_EQ(list.size(), 3u);
    EXPECT_EQ(list[1], StatId::Qtaulog);
    EXPECT_THROW(parse_stat_list(" , "), InvalidArgument);
}

TEST(Names, Flavors) {
    EXPECT_EQ(stat_flavor(StatId::Qtau1), CorrFlavor::kendall);
    EXPECT_EQ(stat_flavor(StatId::QSmax), CorrFlavor::spearman);
    EXPECT_EQ(stat_flavor(StatId::QR2), CorrFlavor::pearson);
}
