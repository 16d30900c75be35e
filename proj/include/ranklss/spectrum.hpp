#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <vector>

#include "ranklss/errors.hpp"
#include "ranklss/rank_correlation.hpp"
#include "ranklss/spectral_law.hpp"

namespace ranklss {

/// Eigenvalues in descending order.
struct Spectrum {
    Eigen::VectorXd eigenvalues;

    std::size_t size() const noexcept { return static_cast<std::size_t>(eigenvalues.size()); }
    double largest() const { return eigenvalues(0); }
};

struct EigenDecomposition {
    Spectrum spectrum;
    Eigen::MatrixXd vectors;  ///< column j pairs with spectrum.eigenvalues(j)
};

namespace detail {

inline void require_symmetric(const Eigen::MatrixXd& m) {
    if (m.rows() != m.cols()) throw InvalidArgument("matrix is not square");
    const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index j = i + 1; j < m.cols(); ++j) {
            if (std::abs(m(i, j) - m(j, i)) > 1e-12 * scale) {
                throw InvalidArgument("matrix is not symmetric at (" + std::to_string(i) + ", " +
                                      std::to_string(j) + ")");
            }
        }
    }
}

}  // namespace detail

inline Spectrum eigvals_sym(const Eigen::MatrixXd& m) {
    detail::require_symmetric(m);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m, Eigen::EigenvaluesOnly);
    if (es.info() != Eigen::Success) throw ConvergenceError("symmetric eigensolver did not converge");
    return {es.eigenvalues().reverse()};
}

inline Spectrum eigvals_sym(const CorrMatrix& m) { return eigvals_sym(m.entries); }

inline EigenDecomposition eig_sym(const Eigen::MatrixXd& m) {
    detail::require_symmetric(m);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m, Eigen::ComputeEigenvectors);
    if (es.info() != Eigen::Success) throw ConvergenceError("symmetric eigensolver did not converge");
    return {{es.eigenvalues().reverse()}, es.eigenvectors().rowwise().reverse()};
}

/// Kolmogorov distance sup_x |F^ESD(x) - F_c(x)|. Both functions are
/// monotone and right-continuous, so the supremum is attained (as a value
/// or a left limit) at an eigenvalue, at an edge of the support or at the
/// atom.
inline double esd_distance(const Spectrum& s, const SpectralLaw& law) {
    if (s.size() == 0) throw InvalidArgument("empty spectrum");
    std::vector<double> ev(s.eigenvalues.data(), s.eigenvalues.data() + s.size());
    std::sort(ev.begin(), ev.end());
    const double p = static_cast<double>(ev.size());

    std::vector<double> points = ev;
    points.push_back(law.d_minus);
    points.push_back(law.d_plus);
    points.push_back(SpectralLaw::atom_location);

    double dist = 0.0;
    for (double t : points) {
        const auto at = std::upper_bound(ev.begin(), ev.end(), t) - ev.begin();
        const auto below = std::lower_bound(ev.begin(), ev.end(), t) - ev.begin();
        dist = std::max(dist, std::abs(static_cast<double>(at) / p - lsd_cdf(t, law)));
        dist = std::max(dist, std::abs(static_cast<double>(below) / p - lsd_cdf_left(t, law)));
    }
    return dist;
}

}  // namespace ranklss
