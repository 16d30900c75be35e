#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "ranklss/closed_forms.hpp"
#include "ranklss/lss_moments.hpp"
#include "ranklss/spectral_law.hpp"

using namespace ranklss;
using cplx = std::complex<double>;

namespace {

const auto kX = FunctionDescriptor::power(1);
const auto kX2 = FunctionDescriptor::power(2);
const auto kX4 = FunctionDescriptor::power(4);
const auto kLog = FunctionDescriptor::log();

/// Independent route: the mean functional as a z-plane contour integral of
/// f against the Stieltjes-transform kernel, on an ellipse around the
/// support and the atom.
double z_plane_mean(const FunctionDescriptor& f, double c, int nodes = 20000) {
    const auto law = make_law(c);
    const double lo = c > 1.0 ? std::min(law.d_minus, 1.0 / 3.0) : law.d_minus;
    const double centre = 0.5 * (lo + law.d_plus);
    const double a = 0.5 * (law.d_plus - lo) + 0.05, b = 0.5;
    cplx total = 0.0;
    for (int k = 0; k < nodes; ++k) {
        const double th = 2.0 * std::numbers::pi * (k + 0.5) / nodes;
        const cplx z(centre + a * std::cos(th), b * std::sin(th));
        const cplx dz = cplx(-a * std::sin(th), b * std::cos(th)) * (2.0 * std::numbers::pi / nodes);
        const cplx m = stieltjes(z, law);
        const cplx u = 1.0 + 2.0 / 3.0 * c * m;
        const cplx d = -9.0 * u * u + 4.0 * c * m * m;
        const cplx em = 36.0 * c * m * m * m * u / (d * d) -
                        2.0 * c * c * m * m * m * (u * u + 6.0 + 4.0 / 3.0 * c * m) / d + 8.0 * c * m * m * m / (u * d);
        total += f(z) * em * dz;
    }
    return (-total / cplx(0.0, 2.0 * std::numbers::pi)).real();
}

}  // namespace

TEST(LssMean, IdentityFunctionIsDegenerate) {
    for (double c : {0.25, 0.5, 1.0, 2.0, 4.0}) {
        EXPECT_LT(std::abs(lss_mean(kX, c)), 1e-8) << "c = " << c;
        EXPECT_LT(std::abs(lss_cov(kX, kX, c)), 1e-8) << "c = " << c;
    }
}

TEST(LssMean, SquareAtHalf) { EXPECT_NEAR(lss_mean(kX2, 0.5), 1.0 / 6.0, 1e-6); }

TEST(LssMean, FourthPowerAtOne) { EXPECT_NEAR(lss_mean(kX4, 1.0), 308.0 / 27.0, 1e-5); }

TEST(LssCov, SquareAtHalf) { EXPECT_NEAR(lss_cov(kX2, kX2, 0.5), 16.0 / 81.0, 1e-6); }

TEST(LssCov, FourthPowerAtOne) {
    EXPECT_NEAR(lss_cov(kX4, kX4, 1.0), closed_form::q4_var(1.0), 1e-4);
    EXPECT_NEAR(closed_form::q4_var(1.0), 292.53, 0.01);
}

TEST(LssCov, SymmetricInArguments) {
    for (double c : {0.5, 2.0}) {
        EXPECT_NEAR(lss_cov(kX2, kLog, c), lss_cov(kLog, kX2, c), 1e-10);
        EXPECT_NEAR(lss_cov(kX2, kX4, c), lss_cov(kX4, kX2, c), 1e-10 * std::abs(lss_cov(kX2, kX4, c)));
    }
}

TEST(LssVector, DiagonalMatchesSingleCalls) {
    const auto m = lss_moments_vector({kX2, kX4}, 0.5);
    EXPECT_NEAR(m.mean(0), lss_mean(kX2, 0.5), 1e-14);
    EXPECT_NEAR(m.mean(1), lss_mean(kX4, 0.5), 1e-12);
    EXPECT_NEAR(m.cov(0, 0), lss_cov(kX2, kX2, 0.5), 1e-14);
    EXPECT_NEAR(m.cov(1, 1), lss_cov(kX4, kX4, 0.5), 1e-10);
    EXPECT_EQ(m.cov(0, 1), m.cov(1, 0));
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m.cov);
    EXPECT_GE(es.eigenvalues().minCoeff(), -1e-8);
    EXPECT_GT(m.quadrature_points, 0u);
}

TEST(LssVector, LogAtHalf) {
    const auto m = lss_moments_vector({kLog}, 0.5);
    EXPECT_NEAR(m.mean(0), closed_form::log_mean(0.5), 1e-5);
    EXPECT_NEAR(m.cov(0, 0), closed_form::log_var(0.5), 1e-5);
}

TEST(LssVector, LogVarianceAtOne) {
    EXPECT_NEAR(lss_cov(kLog, kLog, 1.0), 2.0 * std::log(4.0 / 3.0) - 0.5, 1e-10);
    EXPECT_NEAR(2.0 * std::log(4.0 / 3.0) - 0.5, 0.0754, 1e-4);
}

TEST(ClosedForms, LogParamsAtOne) {
    const auto [a, b] = closed_form::log_params(1.0);
    EXPECT_NEAR(a * a, 4.0 / 3.0, 1e-15);
    EXPECT_NEAR(b * b, 1.0 / 3.0, 1e-15);
}

// Contour engine against the closed-form constants, every c and function.
class ClosedFormAgreement : public ::testing::TestWithParam<double> {};

TEST_P(ClosedFormAgreement, Square) {
    const double c = GetParam();
    EXPECT_NEAR(lss_mean(kX2, c), closed_form::q2_mean(c), 1e-5);
    EXPECT_NEAR(lss_cov(kX2, kX2, c), closed_form::q2_var(c), 1e-5);
}

TEST_P(ClosedFormAgreement, FourthPower) {
    const double c = GetParam();
    EXPECT_NEAR(lss_mean(kX4, c), closed_form::q4_mean(c), 1e-5 * std::max(1.0, std::abs(closed_form::q4_mean(c))));
    EXPECT_NEAR(lss_cov(kX4, kX4, c), closed_form::q4_var(c), 1e-5 * closed_form::q4_var(c));
}

TEST_P(ClosedFormAgreement, LogVariance) {
    const double c = GetParam();
    EXPECT_NEAR(lss_cov(kLog, kLog, c), closed_form::log_var(c), 1e-5);
}

TEST_P(ClosedFormAgreement, LogMean) {
    const double c = GetParam();
    EXPECT_NEAR(lss_mean(kLog, c), closed_form::log_mean(c), 1e-5);
}

INSTANTIATE_TEST_SUITE_P(AspectRatios, ClosedFormAgreement, ::testing::Values(0.25, 0.5, 1.0, 2.0));

TEST(ZPlaneOracle, AgreesWithContourEngine) {
    for (double c : {0.5, 2.0, 4.0}) {
        for (const auto& f : {kX2, kX4, kLog}) {
            EXPECT_NEAR(z_plane_mean(f, c), lss_mean(f, c), 1e-6 * std::max(1.0, std::abs(lss_mean(f, c))))
                << f.name() << " c = " << c;
        }
    }
}

TEST(Quadrature, DoublingNodesChangesLittle) {
    LssConfig fine;
    fine.min_nodes = 4096;
    fine.max_nodes = 16384;
    for (double c : {0.25, 2.0}) {
        for (const auto& f : {kX2, kX4, kLog}) {
            EXPECT_NEAR(lss_mean(f, c), lss_mean(f, c, fine), 1e-10 * std::max(1.0, std::abs(lss_mean(f, c))));
        }
        EXPECT_NEAR(lss_cov(kLog, kLog, c), lss_cov(kLog, kLog, c, fine), 1e-10);
    }
}

TEST(Quadrature, CustomFunctionMatchesBuiltIn) {
    const auto sq = FunctionDescriptor::custom("sq", [](cplx z) { return z * z; });
    const auto lg = FunctionDescriptor::custom("lg", [](cplx z) { return std::log(z); });
    for (double c : {0.5, 2.0}) {
        EXPECT_NEAR(lss_mean(sq, c), lss_mean(kX2, c), 1e-9);
        EXPECT_NEAR(lss_cov(sq, sq, c), lss_cov(kX2, kX2, c), 1e-9);
        EXPECT_NEAR(lss_mean(lg, c), lss_mean(kLog, c), 1e-9);
        EXPECT_NEAR(lss_cov(lg, lg, c), lss_cov(kLog, kLog, c), 1e-9);
    }
}

TEST(UnitCircleRoute, AgreesWithDeformedRouteBelowOne) {
    LssConfig cfg;
    cfg.route = LssRoute::unit_circle;
    for (double c : {0.25, 0.5, 1.0}) {
        for (const auto& f : {kX2, kLog}) {
            EXPECT_NEAR(lss_mean(f, c, cfg), lss_mean(f, c), 1e-4) << f.name() << " c = " << c;
            EXPECT_NEAR(lss_cov(f, f, c, cfg), lss_cov(f, f, c), 1e-4) << f.name() << " c = " << c;
        }
    }
}

TEST(UnitCircleRoute, RefusesAboveOne) {
    LssConfig cfg;
    cfg.route = LssRoute::unit_circle;
    EXPECT_THROW(lss_mean(kX2, 2.0, cfg), DomainError);
}

TEST(LssMean, RejectsBadAspectRatio) {
    EXPECT_THROW(lss_mean(kX2, 0.0), DomainError);
    EXPECT_THROW(lss_cov(kX2, kX2, -1.0), DomainError);
}

TEST(FunctionDescriptorTest, Parse) {
    EXPECT_EQ(FunctionDescriptor::parse("x2").exponent(), 2);
    EXPECT_EQ(FunctionDescriptor::parse("x").exponent(), 1);
    EXPECT_EQ(FunctionDescriptor::parse("log").kind(), FunctionDescriptor::Kind::log);
    EXPECT_THROW(FunctionDescriptor::parse("sin"), InvalidArgument);
    EXPECT_THROW(FunctionDescriptor::parse("x0"), InvalidArgument);
}
