#pragma once

/**
 * @file rank_correlation.hpp
 * @brief Kendall, Spearman and Pearson correlation matrices.
 *
 * Kendall's tau between rows k and l is
 *
 *     tau_kl = (concordant - discordant) / C(n, 2)
 *
 * over all sample pairs i < j. Without ties, discordant pairs are exactly the
 * inversions of row l once the samples are ordered by row k, so a merge-sort
 * inversion count gives tau in O(n log n). The integer count is then divided
 * once, which makes every kernel in this file agree bit-for-bit with the
 * naive O(n^2) double sum.
 *
 * Matrix assembly iterates the flattened pair index (k < l, row-major) and may
 * run on several threads; each pair writes its own entries only.
 */

#include <Eigen/Dense>

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "ranklss/data_matrix.hpp"
#include "ranklss/errors.hpp"
#include "ranklss/parallel.hpp"

namespace ranklss {

enum class CorrFlavor { kendall, spearman, pearson };

inline const char* to_string(CorrFlavor f) {
    switch (f) {
        case CorrFlavor::kendall: return "kendall";
        case CorrFlavor::spearman: return "spearman";
        case CorrFlavor::pearson: return "pearson";
    }
    return "?";
}

struct CorrMatrix {
    Eigen::MatrixXd entries;
    CorrFlavor flavor = CorrFlavor::kendall;

    std::size_t p() const noexcept { return static_cast<std::size_t>(entries.rows()); }
};

// ---------------------------------------------------------------------------
// Pairwise kernels

namespace detail {

/// Counts inversions of `seq` (pairs a < b with seq[a] > seq[b]), sorting it
/// in place. `scratch` must have the same size.
template <class T>
std::uint64_t count_inversions(std::span<T> seq, std::span<T> scratch) {
    const std::size_t n = seq.size();
    std::uint64_t inversions = 0;
    // Bottom-up merge sort; small runs by insertion sort.
    constexpr std::size_t kRun = 16;
    for (std::size_t lo = 0; lo < n; lo += kRun) {
        const std::size_t hi = std::min(n, lo + kRun);
        for (std::size_t i = lo + 1; i < hi; ++i) {
            const T v = seq[i];
            std::size_t j = i;
            while (j > lo && seq[j - 1] > v) {
                seq[j] = seq[j - 1];
                --j;
            }
            inversions += i - j;
            seq[j] = v;
        }
    }
    std::span<T> src = seq;
    std::span<T> dst = scratch;
    for (std::size_t width = kRun; width < n; width *= 2) {
        for (std::size_t lo = 0; lo < n; lo += 2 * width) {
            const std::size_t mid = std::min(n, lo + width);
            const std::size_t hi = std::min(n, lo + 2 * width);
            std::size_t a = lo, b = mid, out = lo;
            while (a < mid && b < hi) {
                if (src[b] < src[a]) {
                    inversions += mid - a;
                    dst[out++] = src[b++];
                } else {
                    dst[out++] = src[a++];
                }
            }
            while (a < mid) dst[out++] = src[a++];
            while (b < hi) dst[out++] = src[b++];
        }
        std::swap(src, dst);
    }
    if (src.data() != seq.data()) std::copy(src.begin(), src.end(), seq.begin());
    return inversions;
}

inline std::uint64_t pair_count(std::size_t n) {
    return static_cast<std::uint64_t>(n) * (n - 1) / 2;
}

inline double tau_from_discordant(std::uint64_t discordant, std::uint64_t pairs) {
    const auto diff = static_cast<std::int64_t>(pairs) - 2 * static_cast<std::int64_t>(discordant);
    return static_cast<double>(diff) / static_cast<double>(pairs);
}

inline void check_pair_inputs(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size()) {
        throw InvalidArgument("length mismatch: " + std::to_string(x.size()) + " vs " +
                              std::to_string(y.size()));
    }
    if (x.size() < 2) throw InvalidArgument("need at least 2 observations");
}

inline std::vector<std::uint32_t> argsort(std::span<const double> x) {
    std::vector<std::uint32_t> order(x.size());
    std::iota(order.begin(), order.end(), 0u);
    std::sort(order.begin(), order.end(), [&](auto a, auto b) { return x[a] < x[b]; });
    return order;
}

}  // namespace detail

/// Reference O(n^2) kernel: the double sum of sign products divided by C(n,2).
inline double kendall_tau_naive(std::span<const double> x, std::span<const double> y) {
    detail::check_pair_inputs(x, y);
    const std::size_t n = x.size();
    std::int64_t sum = 0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const int sx = (x[i] > x[j]) - (x[i] < x[j]);
            const int sy = (y[i] > y[j]) - (y[i] < y[j]);
            sum += sx * sy;
        }
    }
    return static_cast<double>(sum) / static_cast<double>(detail::pair_count(n));
}

/// O(n log n) Kendall tau for tie-free vectors.
inline double kendall_tau_pair(std::span<const double> x, std::span<const double> y) {
    detail::check_pair_inputs(x, y);
    if (count_tied_pairs(x) != 0 || count_tied_pairs(y) != 0) {
        throw TieError(count_tied_pairs(x) != 0 ? 0 : 1,
                       "kendall_tau_pair: tied values (continuous data required)");
    }
    const auto order = detail::argsort(x);
    std::vector<double> seq(x.size()), scratch(x.size());
    for (std::size_t i = 0; i < order.size(); ++i) seq[i] = y[order[i]];
    const auto discordant = detail::count_inversions<double>(seq, scratch);
    return detail::tau_from_discordant(discordant, detail::pair_count(x.size()));
}

// ---------------------------------------------------------------------------
// Matrix assembly

enum class KendallKernel {
    automatic,   ///< sign bits when they fit in memory, merge sort otherwise
    merge_sort,  ///< inversion count of one row's ranks ordered by the other
    sign_bits,   ///< XOR/popcount over packed sign(x_i - x_j) bits
};

struct KendallOptions {
    KendallKernel kernel = KendallKernel::automatic;
    unsigned threads = 1;
    std::size_t sign_bits_memory_limit = std::size_t{256} << 20;
};

namespace detail {

/// Number of (k, l) pairs with k < l, and the inverse of the row-major
/// flattening used for parallel assembly.
inline std::pair<std::size_t, std::size_t> unflatten_pair(std::size_t index, std::size_t p) {
    // Row k holds p-1-k pairs; walk rows (p is at most a few thousand).
    std::size_t k = 0;
    std::size_t row_len = p - 1;
    while (index >= row_len) {
        index -= row_len;
        ++k;
        --row_len;
    }
    return {k, k + 1 + index};
}

/// Mirrors the strict upper triangle and sets the unit diagonal.
inline void finish_symmetric(Eigen::MatrixXd& m) {
    const auto p = m.rows();
    for (Eigen::Index k = 0; k < p; ++k) {
        m(k, k) = 1.0;
        for (Eigen::Index l = k + 1; l < p; ++l) m(l, k) = m(k, l);
    }
}

inline Eigen::MatrixXd kendall_merge_sort(const DataMatrix& d, unsigned threads) {
    const std::size_t p = d.p(), n = d.n();
    std::vector<std::vector<std::uint32_t>> order(p), rank(p);
    for (std::size_t k = 0; k < p; ++k) {
        order[k] = argsort(d.row(k));
        rank[k].resize(n);
        for (std::size_t i = 0; i < n; ++i) rank[k][order[k][i]] = static_cast<std::uint32_t>(i);
    }
    const std::uint64_t pairs = pair_count(n);
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(p), static_cast<Eigen::Index>(p));
    const std::size_t total = p * (p - 1) / 2;
    // One task per row k keeps scratch buffers per task.
    parallel_for(p - 1, threads, [&](std::size_t k) {
        std::vector<std::uint32_t> seq(n), scratch(n);
        for (std::size_t l = k + 1; l < p; ++l) {
            for (std::size_t i = 0; i < n; ++i) seq[i] = rank[l][order[k][i]];
            const auto discordant = count_inversions<std::uint32_t>(seq, scratch);
            m(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(l)) =
                tau_from_discordant(discordant, pairs);
        }
    });
    (void)total;
    finish_symmetric(m);
    return m;
}

inline std::size_t sign_bit_words(std::size_t n) { return (pair_count(n) + 63) / 64; }

inline Eigen::MatrixXd kendall_sign_bits(const DataMatrix& d, unsigned threads) {
    const std::size_t p = d.p(), n = d.n();
    const std::size_t words = sign_bit_words(n);
    std::vector<std::uint64_t> bits(p * words, 0);
    parallel_for(p, threads, [&](std::size_t k) {
        const auto row = d.row(k);
        std::uint64_t* out = bits.data() + k * words;
        std::size_t pos = 0;
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j, ++pos) {
                if (row[i] > row[j]) out[pos >> 6] |= std::uint64_t{1} << (pos & 63);
            }
        }
    });
    const std::uint64_t pairs = pair_count(n);
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(p), static_cast<Eigen::Index>(p));
    parallel_for(p - 1, threads, [&](std::size_t k) {
        const std::uint64_t* a = bits.data() + k * words;
        for (std::size_t l = k + 1; l < p; ++l) {
            const std::uint64_t* b = bits.data() + l * words;
            std::uint64_t discordant = 0;
            for (std::size_t w = 0; w < words; ++w) discordant += std::popcount(a[w] ^ b[w]);
            m(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(l)) =
                tau_from_discordant(discordant, pairs);
        }
    });
    finish_symmetric(m);
    return m;
}

}  // namespace detail

/// Kendall rank correlation matrix K_n. Throws TieError naming the first
/// row with tied values.
inline CorrMatrix kendall_matrix(const DataMatrix& d, const KendallOptions& options = {}) {
    require_no_ties(d);
    KendallKernel kernel = options.kernel;
    if (kernel == KendallKernel::automatic) {
        const std::size_t bytes = d.p() * detail::sign_bit_words(d.n()) * sizeof(std::uint64_t);
        kernel = bytes <= options.sign_bits_memory_limit ? KendallKernel::sign_bits
                                                         : KendallKernel::merge_sort;
    }
    CorrMatrix out;
    out.flavor = CorrFlavor::kendall;
    out.entries = kernel == KendallKernel::sign_bits ? detail::kendall_sign_bits(d, options.threads)
                                                     : detail::kendall_merge_sort(d, options.threads);
    return out;
}

/// All-pairs naive assembly, kept as a test oracle.
inline CorrMatrix kendall_matrix_naive(const DataMatrix& d) {
    const auto p = static_cast<Eigen::Index>(d.p());
    CorrMatrix out{Eigen::MatrixXd::Identity(p, p), CorrFlavor::kendall};
    for (Eigen::Index k = 0; k < p; ++k) {
        for (Eigen::Index l = k + 1; l < p; ++l) {
            out.entries(k, l) = out.entries(l, k) =
                kendall_tau_naive(d.row(static_cast<std::size_t>(k)), d.row(static_cast<std::size_t>(l)));
        }
    }
    return out;
}

namespace detail {

/// Pearson correlation of the rows of `centered` (rows already centred).
inline Eigen::MatrixXd correlation_of_centered(const RowMatrix& centered, const Eigen::VectorXd& norms) {
    const Eigen::MatrixXd scaled = norms.cwiseInverse().asDiagonal() * centered;
    Eigen::MatrixXd m = scaled * scaled.transpose();
    const auto p = m.rows();
    for (Eigen::Index k = 0; k < p; ++k) {
        for (Eigen::Index l = k + 1; l < p; ++l) m(k, l) = std::clamp(m(k, l), -1.0, 1.0);
    }
    finish_symmetric(m);
    return m;
}

}  // namespace detail

/// Within-row ranks 1..n (tie-free input).
inline RowMatrix row_ranks(const DataMatrix& d) {
    RowMatrix ranks(static_cast<Eigen::Index>(d.p()), static_cast<Eigen::Index>(d.n()));
    for (std::size_t k = 0; k < d.p(); ++k) {
        const auto order = detail::argsort(d.row(k));
        for (std::size_t i = 0; i < d.n(); ++i) {
            ranks(static_cast<Eigen::Index>(k), order[i]) = static_cast<double>(i + 1);
        }
    }
    return ranks;
}

/// Spearman matrix: Pearson correlation of within-row ranks, whose mean is
/// (n+1)/2 and whose centred sum of squares is n(n^2-1)/12 without ties.
inline CorrMatrix spearman_matrix(const DataMatrix& d) {
    require_no_ties(d);
    const double n = static_cast<double>(d.n());
    RowMatrix centered = row_ranks(d).array() - (n + 1.0) / 2.0;
    const Eigen::VectorXd norms =
        Eigen::VectorXd::Constant(static_cast<Eigen::Index>(d.p()), std::sqrt(n * (n * n - 1.0) / 12.0));
    return {detail::correlation_of_centered(centered, norms), CorrFlavor::spearman};
}

inline CorrMatrix pearson_matrix(const DataMatrix& d) {
    RowMatrix centered = d.values().colwise() - d.values().rowwise().mean();
    Eigen::VectorXd norms = centered.rowwise().norm();
    for (Eigen::Index k = 0; k < norms.size(); ++k) {
        if (!(norms(k) > 0.0)) {
            throw DomainError("row " + std::to_string(k) + " has zero variance");
        }
    }
    return {detail::correlation_of_centered(centered, norms), CorrFlavor::pearson};
}

inline CorrMatrix correlation_matrix(const DataMatrix& d, CorrFlavor flavor, unsigned threads = 1) {
    switch (flavor) {
        case CorrFlavor::kendall: return kendall_matrix(d, {KendallKernel::automatic, threads});
        case CorrFlavor::spearman: return spearman_matrix(d);
        case CorrFlavor::pearson: return pearson_matrix(d);
    }
    throw InvalidArgument("unknown correlation flavor");
}

// ---------------------------------------------------------------------------
// Invariants and output

/// Returns an empty string when the matrix satisfies the CorrMatrix
/// invariants, otherwise a description of the first violation. The PSD check
/// (kendall only) needs an eigendecomposition and is skipped when
/// `check_psd` is false.
inline std::string corr_invariant_violation(const CorrMatrix& m, bool check_psd = true) {
    const auto p = m.entries.rows();
    if (m.entries.cols() != p) return "not square";
    for (Eigen::Index k = 0; k < p; ++k) {
        if (m.entries(k, k) != 1.0) return "diagonal entry " + std::to_string(k) + " is not 1";
        for (Eigen::Index l = 0; l < p; ++l) {
            const double v = m.entries(k, l);
            if (!(v >= -1.0 && v <= 1.0)) return "entry out of [-1, 1]";
            if (std::abs(v - m.entries(l, k)) > 1e-12) return "not symmetric";
        }
    }
    if (check_psd && m.flavor == CorrFlavor::kendall) {
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m.entries, Eigen::EigenvaluesOnly);
        if (es.eigenvalues().minCoeff() < -1e-10 * static_cast<double>(p)) return "not positive semidefinite";
    }
    return {};
}

/// Writes the full symmetric matrix as CSV with 17 significant digits.
inline void write_matrix_csv(const Eigen::MatrixXd& m, std::ostream& out) {
    char buf[40];
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        for (Eigen::Index c = 0; c < m.cols(); ++c) {
            std::snprintf(buf, sizeof buf, "%.17g", m(r, c));
            if (c) out << ',';
            out << buf;
        }
        out << '\n';
    }
}

}  // namespace ranklss
