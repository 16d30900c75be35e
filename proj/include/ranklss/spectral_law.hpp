#pragma once

/**
 * @file spectral_law.hpp
 * @brief The limiting spectral law F_c of Kendall's matrix.
 *
 * F_c is the Marchenko-Pastur law MP(c) mapped through y -> 1/3 + (2/3) y.
 * For c > 1 it keeps the MP atom, now at 1/3 with mass 1 - 1/c.
 */

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "ranklss/errors.hpp"
#include "ranklss/function_descriptor.hpp"

namespace ranklss {

struct SpectralLaw {
    double c = 1.0;
    double d_minus = 1.0 / 3.0;
    double d_plus = 3.0;
    double atom_mass = 0.0;  ///< located at 1/3
    double mp_edge = 4.0;    ///< (1 + sqrt c)^2

    static constexpr double atom_location = 1.0 / 3.0;
};

inline SpectralLaw make_law(double c) {
    if (!(c > 0.0) || !std::isfinite(c)) throw DomainError("aspect ratio must be positive and finite");
    const double s = std::sqrt(c);
    SpectralLaw law;
    law.c = c;
    law.d_minus = 1.0 / 3.0 + (2.0 / 3.0) * (1.0 - s) * (1.0 - s);
    law.d_plus = 1.0 / 3.0 + (2.0 / 3.0) * (1.0 + s) * (1.0 + s);
    law.atom_mass = std::max(0.0, 1.0 - 1.0 / c);
    law.mp_edge = (1.0 + s) * (1.0 + s);
    return law;
}

/// Density of the continuous part; the atom is not included.
inline double lsd_density(double x, const SpectralLaw& law) {
    if (!(x > law.d_minus && x < law.d_plus)) return 0.0;
    return 9.0 / (4.0 * std::numbers::pi * law.c * (3.0 * x - 1.0)) *
           std::sqrt((law.d_plus - x) * (x - law.d_minus));
}

/// Stieltjes transform m(z) = int (x - z)^{-1} dF_c(x) off the real axis.
/// Both roots of the defining quadratic are formed and the one on the
/// Nevanlinna side (Im z * Im m > 0) is returned.
inline std::complex<double> stieltjes(std::complex<double> z, const SpectralLaw& law) {
    if (z.imag() == 0.0) throw DomainError("stieltjes transform needs Im z != 0");
    const double c = law.c;
    const std::complex<double> u = z - 1.0 - (2.0 / 3.0) * c;
    const std::complex<double> root = std::sqrt(u * u - (16.0 / 9.0) * c);
    const std::complex<double> num = 1.0 - (2.0 / 3.0) * c - z;
    const std::complex<double> den = (4.0 / 3.0) * c * (z - 1.0 / 3.0);
    const std::complex<double> m1 = (num + root) / den;
    const std::complex<double> m2 = (num - root) / den;
    return z.imag() * m1.imag() >= z.imag() * m2.imag() ? m1 : m2;
}

/// Residual of the quadratic (2/3)c(z-1/3)m^2 + (z-1+(2/3)c)m + 1.
inline std::complex<double> stieltjes_residual(std::complex<double> z, std::complex<double> m,
                                               const SpectralLaw& law) {
    const double c = law.c;
    return (2.0 / 3.0) * c * (z - 1.0 / 3.0) * m * m + (z - 1.0 + (2.0 / 3.0) * c) * m + 1.0;
}

namespace detail {

/// Integrates g against the continuous part of F_c over [d_minus, x_hi]
/// with x = d_minus + W sin^2(theta). This absorbs the square-root edges and
/// the 1/(3x-1) endpoint singularity at c = 1.
template <class G>
double integrate_continuous(const SpectralLaw& law, double x_hi, G&& g, double tol = 1e-13) {
    const double w = law.d_plus - law.d_minus;
    x_hi = std::clamp(x_hi, law.d_minus, law.d_plus);
    const double theta_hi = std::asin(std::sqrt((x_hi - law.d_minus) / w));
    if (theta_hi <= 0.0) return 0.0;
    const double scale = 9.0 / (4.0 * std::numbers::pi * law.c) * 2.0 * w * w;
    auto integrand = [&](double theta) {
        const double s = std::sin(theta), co = std::cos(theta);
        const double x = law.d_minus + w * s * s;
        // 3x - 1 written to stay accurate when d_minus = 1/3.
        const double shifted = 3.0 * (law.d_minus - 1.0 / 3.0) + 3.0 * w * s * s;
        return scale * s * s * co * co / shifted * g(x);
    };
    return boost::math::quadrature::gauss_kronrod<double, 31>::integrate(integrand, 0.0, theta_hi, 20, tol);
}

/// Marchenko-Pastur moments E Y^k (Narayana polynomials in c), k >= 0.
inline double mp_moment(int k, double c) {
    if (k == 0) return 1.0;
    double sum = 0.0;
    for (int r = 0; r < k; ++r) {
        // C(k, r) C(k-1, r) / (r + 1)
        double coef = 1.0;
        for (int i = 1; i <= r; ++i) coef *= static_cast<double>(k - r + i) / i * (k - 1 - r + i) / i;
        sum += coef / (r + 1) * std::pow(c, r);
    }
    return sum;
}

}  // namespace detail

/// F_c(x), including the atom.
inline double lsd_cdf(double x, const SpectralLaw& law) {
    double total = x >= SpectralLaw::atom_location ? law.atom_mass : 0.0;
    if (x >= law.d_plus) return 1.0;
    if (x <= law.d_minus) return total;
    total += detail::integrate_continuous(law, x, [](double) { return 1.0; });
    return std::min(total, 1.0);
}

/// Left limit F_c(x-).
inline double lsd_cdf_left(double x, const SpectralLaw& law) {
    if (x > SpectralLaw::atom_location || law.atom_mass == 0.0) return lsd_cdf(x, law);
    return 0.0;  // with an atom, d_minus > 1/3 >= x
}

/// Smallest x with F_c(x) >= q, by bisection.
inline double lsd_quantile(double q, const SpectralLaw& law) {
    if (!(q > 0.0 && q < 1.0)) throw DomainError("quantile level must be in (0, 1)");
    if (q <= law.atom_mass) return SpectralLaw::atom_location;
    double lo = law.d_minus, hi = law.d_plus;
    for (int it = 0; it < 200 && hi - lo > 1e-15 * hi; ++it) {
        const double mid = 0.5 * (lo + hi);
        (lsd_cdf(mid, law) >= q ? hi : lo) = mid;
    }
    return hi;
}

/// int f dF_c. Powers use the exact moment transform of x = 1/3 + (2/3)Y;
/// other functions use adaptive quadrature plus the atom term.
inline double lsd_moment(const FunctionDescriptor& f, const SpectralLaw& law) {
    if (f.kind() == FunctionDescriptor::Kind::power) {
        const int k = f.exponent();
        double sum = 0.0, binom = 1.0;
        for (int j = 0; j <= k; ++j) {
            sum += binom * std::pow(1.0 / 3.0, k - j) * std::pow(2.0 / 3.0, j) * detail::mp_moment(j, law.c);
            binom = binom * (k - j) / (j + 1);
        }
        return sum;
    }
    double total = detail::integrate_continuous(law, law.d_plus, [&](double x) {
        const double v = f(x);
        if (!std::isfinite(v)) throw DomainError("function not finite on the support of F_c");
        return v;
    });
    if (law.atom_mass > 0.0) {
        const double v = f(SpectralLaw::atom_location);
        if (!std::isfinite(v)) throw DomainError("function not finite at the atom 1/3");
        total += law.atom_mass * v;
    }
    return total;
}

}  // namespace ranklss
