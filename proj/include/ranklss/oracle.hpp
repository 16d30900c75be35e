#pragma once

/**
 * @file oracle.hpp
 * @brief Exact finite-n checks of the sign-vector identities behind
 *        Kendall's matrix, by enumeration of all n! rank orders.
 *
 * Pairs (i, j), i < j, are indexed lexicographically: (0,1), (0,2), ...,
 * (n-2, n-1). T is the n x M incidence matrix with t_{l,(ij)} = d_li - d_lj.
 * For iid continuous data every rank order has probability 1/n!, and the
 * sign vector v_(ij) = sign(x_i - x_j)/sqrt(M) depends on the order only.
 */

#include <Eigen/Dense>

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <vector>

#include "ranklss/errors.hpp"
#include "ranklss/parallel.hpp"

namespace ranklss {

using IntMatrix = Eigen::Matrix<long long, Eigen::Dynamic, Eigen::Dynamic>;

struct HoeffdingStructure {
    int n = 0;
    int M = 0;
    IntMatrix T;                             ///< n x M
    std::vector<std::pair<int, int>> pairs;  ///< column -> (i, j)

    /// Column of pair (i, j), i < j.
    int index(int i, int j) const { return i * n - i * (i + 1) / 2 + (j - i - 1); }
};

inline HoeffdingStructure build_T(int n) {
    if (n < 2 || n > 12) throw InvalidArgument("build_T supports 2 <= n <= 12");
    HoeffdingStructure h;
    h.n = n;
    h.M = n * (n - 1) / 2;
    h.T = IntMatrix::Zero(n, h.M);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const int col = static_cast<int>(h.pairs.size());
            h.pairs.emplace_back(i, j);
            h.T(i, col) = 1;
            h.T(j, col) = -1;
        }
    }
    return h;
}

/// max |(TT')^2 - n TT'| and max |(T'T)^2 - n T'T|, in exact integers.
inline std::pair<long long, long long> gram_identity_deviation(const HoeffdingStructure& h) {
    const IntMatrix g = h.T * h.T.transpose();
    const IntMatrix gt = h.T.transpose() * h.T;
    const IntMatrix d1 = g * g - h.n * g;
    const IntMatrix d2 = gt * gt - h.n * gt;
    return {d1.cwiseAbs().maxCoeff(), d2.cwiseAbs().maxCoeff()};
}

// ---------------------------------------------------------------------------
// Sign vectors

/// Entries are signs[(ij)] / sqrt(M).
struct SignVector {
    std::vector<std::int8_t> signs;

    double value(std::size_t k) const { return signs[k] / std::sqrt(static_cast<double>(signs.size())); }
};

struct WeightedSignVector {
    SignVector v;
    double probability;
};

namespace detail {

inline long long factorial(int n) {
    long long f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

inline SignVector signs_of(const std::vector<int>& ranks) {
    const int n = static_cast<int>(ranks.size());
    SignVector v;
    v.signs.reserve(static_cast<std::size_t>(n * (n - 1) / 2));
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) v.signs.push_back(ranks[i] > ranks[j] ? 1 : -1);
    }
    return v;
}

/// Calls body(ranks) for every permutation of 0..n-1 whose first entry is
/// `first`, in lexicographic order.
template <class Body>
void for_each_permutation_with_first(int n, int first, Body&& body) {
    std::vector<int> rest;
    for (int i = 0; i < n; ++i) {
        if (i != first) rest.push_back(i);
    }
    std::vector<int> ranks(static_cast<std::size_t>(n));
    do {
        ranks[0] = first;
        std::copy(rest.begin(), rest.end(), ranks.begin() + 1);
        body(ranks);
    } while (std::next_permutation(rest.begin(), rest.end()));
}

}  // namespace detail

inline std::vector<WeightedSignVector> enumerate_sign_vectors(int n) {
    if (n < 2 || n > 8) throw InvalidArgument("exhaustive enumeration supports 2 <= n <= 8");
    const double w = 1.0 / static_cast<double>(detail::factorial(n));
    std::vector<WeightedSignVector> out;
    out.reserve(static_cast<std::size_t>(detail::factorial(n)));
    for (int first = 0; first < n; ++first) {
        detail::for_each_permutation_with_first(n, first, [&](const std::vector<int>& r) {
            out.push_back({detail::signs_of(r), w});
        });
    }
    return out;
}

struct CovStructureCheck {
    /// max |3 sum_perm s s' - n! (T'T + I)| / (3 M n!), from exact integers.
    double exact_deviation = 0.0;
    /// Same comparison after averaging in floating point.
    double float_deviation = 0.0;
};

/// Compares E v v' with (T'T + I)/(3M) exactly. Integer accumulation per
/// leading-rank block makes the result independent of `threads`.
inline CovStructureCheck verify_cov_structure(int n, unsigned threads = 1) {
    if (n < 2 || n > 8) throw InvalidArgument("verify_cov_structure supports 2 <= n <= 8");
    const auto h = build_T(n);
    const int M = h.M;
    std::vector<IntMatrix> blocks(static_cast<std::size_t>(n), IntMatrix::Zero(M, M));
    parallel_for(static_cast<std::size_t>(n), threads, [&](std::size_t first) {
        IntMatrix& acc = blocks[first];
        detail::for_each_permutation_with_first(n, static_cast<int>(first), [&](const std::vector<int>& r) {
            const auto v = detail::signs_of(r);
            for (int a = 0; a < M; ++a) {
                for (int b = 0; b < M; ++b) acc(a, b) += v.signs[a] * v.signs[b];
            }
        });
    });
    IntMatrix sum = IntMatrix::Zero(M, M);
    for (const auto& b : blocks) sum += b;

    const long long nf = detail::factorial(n);
    const IntMatrix target = nf * (h.T.transpose() * h.T + IntMatrix::Identity(M, M));
    const IntMatrix diff = 3 * sum - target;

    CovStructureCheck out;
    out.exact_deviation = static_cast<double>(diff.cwiseAbs().maxCoeff()) / (3.0 * M * static_cast<double>(nf));
    const Eigen::MatrixXd ev = sum.cast<double>() / (static_cast<double>(nf) * M);
    const Eigen::MatrixXd claim =
        (h.T.transpose() * h.T + IntMatrix::Identity(M, M)).cast<double>() / (3.0 * M);
    out.float_deviation = (ev - claim).cwiseAbs().maxCoeff();
    return out;
}

// ---------------------------------------------------------------------------
// Quadratic-form covariance identity

inline constexpr int kQuadraticTermCount = 12;

/// The twelve addend groups of the closed-form covariance of v'Av and v'Bv,
/// each already divided by M^2, in display order.
inline std::array<double, kQuadraticTermCount> quadratic_identity_terms(const HoeffdingStructure& h,
                                                                     const Eigen::MatrixXd& A,
                                                                     const Eigen::MatrixXd& B) {
    const int n = h.n;
    const double M = h.M;
    const Eigen::MatrixXd T = h.T.cast<double>();
    const Eigen::MatrixXd TA = T * A, TB = T * B;
    const Eigen::MatrixXd TAT = TA * T.transpose(), TBT = TB * T.transpose();
    auto c = [&](int i, int j) { return h.index(i, j); };

    std::array<double, kQuadraticTermCount> t{};
    t[0] = 2.0 / 9.0 * ((TAT * TBT).trace() + (A * B).trace());

    double s = 0.0;
    for (int i = 0; i < n; ++i) s += TAT(i, i) * TBT(i, i);
    for (int k = 0; k < h.M; ++k) s += A(k, k) * B(k, k);
    t[1] = -2.0 / 15.0 * s;

    t[2] = 4.0 / 9.0 * (T * A * B * T.transpose()).trace();

    s = 0.0;
    for (int i = 0; i < n; ++i) {
        for (int l = 0; l < n; ++l) {
            if (i < l) s += TAT(i, i) * TB(l, c(i, l)) + TBT(i, i) * TA(l, c(i, l));
            if (l < i) s -= TAT(i, i) * TB(l, c(l, i)) + TBT(i, i) * TA(l, c(l, i));
        }
    }
    t[3] = 4.0 / 45.0 * s;

    s = 0.0;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            s += TAT(i, j) * (TB(i, c(i, j)) - TB(j, c(i, j))) + TBT(i, j) * (TA(i, c(i, j)) - TA(j, c(i, j)));
        }
    }
    t[4] = 8.0 / 45.0 * s;

    auto trip = [&](const Eigen::MatrixXd& X, const Eigen::MatrixXd& Y) {
        double acc = 0.0;
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                for (int u = 0; u < n; ++u) {
                    if (j < i && i < u) acc += X(i, c(i, u)) * Y(j, c(j, u));
                    if (u < j && j < i) acc += X(i, c(u, i)) * Y(j, c(u, j));
                    if (j < u && u < i) acc -= X(i, c(u, i)) * Y(j, c(j, u));
                }
            }
        }
        return acc;
    };
    t[5] = 4.0 / 45.0 * (trip(TA, TB) + trip(TB, TA));

    s = 0.0;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) s += TA(i, c(i, j)) * TB(j, c(i, j)) + TB(i, c(i, j)) * TA(j, c(i, j));
    }
    t[6] = 8.0 / 45.0 * s;

    auto trip2 = [&](const Eigen::MatrixXd& X, const Eigen::MatrixXd& Y) {
        double acc = 0.0;
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                for (int u = 0; u < n; ++u) {
                    if (u < i && i < j) acc += X(i, c(u, j)) * Y(j, c(u, i));
                    if (i < j && j < u) acc += X(i, c(j, u)) * Y(j, c(i, u));
                    if (i < u && u < j) acc -= X(i, c(u, j)) * Y(j, c(i, u));
                }
            }
        }
        return acc;
    };
    t[7] = 4.0 / 45.0 * (trip2(TA, TB) + trip2(TB, TA));

    s = 0.0;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) s += TAT(i, j) * B(c(i, j), c(i, j)) + TBT(i, j) * A(c(i, j), c(i, j));
    }
    t[8] = 4.0 / 45.0 * s;

    double s1 = 0.0, s2 = 0.0, s3 = 0.0;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            for (int u = 0; u < n; ++u) {
                if (i < u && u < j) s1 += TAT(i, j) * B(c(u, j), c(i, u)) + TBT(i, j) * A(c(u, j), c(i, u));
                if (j < u) s2 += TAT(i, j) * B(c(j, u), c(i, u)) + TBT(i, j) * A(c(j, u), c(i, u));
                if (u < i) s3 += TAT(i, j) * B(c(u, i), c(u, j)) + TBT(i, j) * A(c(u, i), c(u, j));
            }
        }
    }
    t[9] = -4.0 / 45.0 * s1;
    t[10] = 4.0 / 45.0 * s2;
    t[11] = 4.0 / 45.0 * s3;

    for (double& x : t) x /= M * M;
    return t;
}

struct QuadraticIdentityCheck {
    double lhs = 0.0;  ///< E[v'Av v'Bv] - E[v'Av] E[v'Bv] by enumeration
    double rhs = 0.0;  ///< sum of the addend groups
    double deviation = 0.0;
    std::array<double, kQuadraticTermCount> terms{};
};

inline QuadraticIdentityCheck verify_quadratic_identity(int n, const Eigen::MatrixXd& A, const Eigen::MatrixXd& B) {
    if (n < 2 || n > 7) throw InvalidArgument("verify_quadratic_identity supports 2 <= n <= 7");
    const auto h = build_T(n);
    const int M = h.M;
    if (A.rows() != M || A.cols() != M || B.rows() != M || B.cols() != M) {
        throw InvalidArgument("A and B must be M x M with M = n(n-1)/2");
    }
    if ((A - A.transpose()).cwiseAbs().maxCoeff() > 0.0 || (B - B.transpose()).cwiseAbs().maxCoeff() > 0.0) {
        throw InvalidArgument("A and B must be symmetric");
    }

    double acc = 0.0;
    long long count = 0;
    Eigen::VectorXd v(M);
    for (const auto& w : enumerate_sign_vectors(n)) {
        for (int k = 0; k < M; ++k) v(k) = w.v.value(static_cast<std::size_t>(k));
        acc += v.dot(A * v) * v.dot(B * v);
        ++count;
    }
    const Eigen::MatrixXd T = h.T.cast<double>();
    const double mA = ((T * A * T.transpose()).trace() + A.trace()) / (3.0 * M);
    const double mB = ((T * B * T.transpose()).trace() + B.trace()) / (3.0 * M);

    QuadraticIdentityCheck out;
    out.lhs = acc / static_cast<double>(count) - mA * mB;
    out.terms = quadratic_identity_terms(h, A, B);
    out.rhs = std::accumulate(out.terms.begin(), out.terms.end(), 0.0);
    out.deviation = std::abs(out.lhs - out.rhs);
    return out;
}

// ---------------------------------------------------------------------------
// Hoeffding split of the sign kernel under Uniform(0, 1) margins

struct HoeffdingParts {
    std::vector<double> v;     ///< sign(x_i - x_j)
    std::vector<double> u;     ///< (2 x_i - 1) + (1 - 2 x_j)
    std::vector<double> vbar;  ///< v - u
};

inline HoeffdingParts hoeffding_parts(const std::vector<double>& x) {
    const std::size_t n = x.size();
    if (n < 2) throw InvalidArgument("need at least two points");
    for (std::size_t i = 0; i < n; ++i) {
        if (!(x[i] > 0.0 && x[i] < 1.0)) throw DomainError("entries must lie in (0, 1)");
        for (std::size_t j = i + 1; j < n; ++j) {
            if (x[i] == x[j]) throw TieError(0, "hoeffding_parts: tied entries");
        }
    }
    HoeffdingParts out;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const double v = x[i] > x[j] ? 1.0 : -1.0;
            const double u = (2.0 * x[i] - 1.0) + (1.0 - 2.0 * x[j]);
            out.v.push_back(v);
            out.u.push_back(u);
            out.vbar.push_back(v - u);
        }
    }
    return out;
}

}  // namespace ranklss
