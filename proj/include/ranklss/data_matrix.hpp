#pragma once

/**
 * @file data_matrix.hpp
 * @brief Observation matrix, CSV ingestion and tie handling.
 *
 * A DataMatrix is p x n with one variable per row and one sample per column.
 * Rank statistics assume continuous marginals, so within-row ties are
 * rejected by default; the jitter policy breaks them with deterministic,
 * seeded noise of relative magnitude 1e-9 and records what it did.
 */

#include <Eigen/Dense>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <fstream>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "ranklss/errors.hpp"
#include "ranklss/random.hpp"

namespace ranklss {

using RowMatrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

enum class Orientation { rows_are_variables, cols_are_variables };

class DataMatrix {
public:
    /// Takes a p x n matrix (rows are variables). Requires p, n >= 2 and
    /// finite entries.
    explicit DataMatrix(RowMatrix values) : values_(std::move(values)) {
        if (values_.rows() < 2 || values_.cols() < 2) {
            throw InvalidArgument("data matrix needs at least 2 variables and 2 samples, got " +
                                  std::to_string(values_.rows()) + "x" +
                                  std::to_string(values_.cols()));
        }
        for (Eigen::Index k = 0; k < values_.rows(); ++k) {
            for (Eigen::Index i = 0; i < values_.cols(); ++i) {
                if (!std::isfinite(values_(k, i))) {
                    throw InvalidArgument("non-finite value at row " + std::to_string(k) +
                                          ", column " + std::to_string(i));
                }
            }
        }
    }

    std::size_t p() const noexcept { return static_cast<std::size_t>(values_.rows()); }
    std::size_t n() const noexcept { return static_cast<std::size_t>(values_.cols()); }
    double aspect_ratio() const noexcept { return static_cast<double>(p()) / static_cast<double>(n()); }

    const RowMatrix& values() const noexcept { return values_; }

    std::span<const double> row(std::size_t k) const noexcept {
        return {values_.data() + k * n(), n()};
    }

private:
    RowMatrix values_;
};

namespace detail {

inline std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

inline bool parse_double(std::string_view cell, double& out) {
    cell = trim(cell);
    if (cell.empty()) return false;
    if (cell.front() == '+') cell.remove_prefix(1);
    const auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), out);
    return ec == std::errc{} && ptr == cell.data() + cell.size();
}

inline std::vector<std::string_view> split_commas(std::string_view line) {
    std::vector<std::string_view> cells;
    std::size_t start = 0;
    for (;;) {
        const auto pos = line.find(',', start);
        cells.push_back(line.substr(start, pos == std::string_view::npos ? std::string_view::npos
                                                                          : pos - start));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return cells;
}

}  // namespace detail

/// Parses comma-separated numeric text. A first line with any non-numeric
/// cell is treated as a header and skipped.
inline DataMatrix parse_csv(std::string_view text, Orientation orientation) {
    std::vector<std::vector<double>> table;
    std::size_t line_no = 0;
    bool first_content_line = true;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto end = text.find('\n', pos);
        const auto raw = text.substr(pos, end == std::string_view::npos ? std::string_view::npos
                                                                         : end - pos);
        pos = end == std::string_view::npos ? text.size() + 1 : end + 1;
        ++line_no;
        const auto line = detail::trim(raw);
        if (line.empty()) continue;

        const auto cells = detail::split_commas(line);
        std::vector<double> values(cells.size());
        bool numeric = true;
        for (std::size_t j = 0; j < cells.size() && numeric; ++j) {
            numeric = detail::parse_double(cells[j], values[j]);
        }
        if (!numeric) {
            if (first_content_line) {
                first_content_line = false;
                continue;
            }
            throw ParseError("non-numeric cell on line " + std::to_string(line_no));
        }
        first_content_line = false;
        if (!table.empty() && values.size() != table.front().size()) {
            throw ParseError("ragged row on line " + std::to_string(line_no) + ": expected " +
                             std::to_string(table.front().size()) + " cells, got " +
                             std::to_string(values.size()));
        }
        for (std::size_t j = 0; j < values.size(); ++j) {
            if (!std::isfinite(values[j])) {
                throw ParseError("non-finite value on line " + std::to_string(line_no) +
                                 ", column " + std::to_string(j + 1));
            }
        }
        table.push_back(std::move(values));
    }
    if (table.empty()) throw ParseError("no numeric rows found");

    const auto rows = static_cast<Eigen::Index>(table.size());
    const auto cols = static_cast<Eigen::Index>(table.front().size());
    RowMatrix m(rows, cols);
    for (Eigen::Index r = 0; r < rows; ++r) {
        for (Eigen::Index c = 0; c < cols; ++c) m(r, c) = table[r][c];
    }
    if (orientation == Orientation::cols_are_variables) {
        RowMatrix t = m.transpose();
        return DataMatrix(std::move(t));
    }
    return DataMatrix(std::move(m));
}

inline DataMatrix load_data(const std::string& path, Orientation orientation) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_csv(buffer.str(), orientation);
}

// ---------------------------------------------------------------------------
// Ties

enum class TiePolicy { strict, jitter };

struct TieReport {
    std::vector<std::uint64_t> tied_pairs;  ///< per row, count of tied value pairs
    bool jittered = false;
    double jitter_relative_magnitude = 0.0;
    std::uint64_t jitter_seed = 0;

    bool any() const noexcept {
        return std::any_of(tied_pairs.begin(), tied_pairs.end(), [](auto c) { return c != 0; });
    }
};

/// Exact per-row count of pairs (i < j) with x_i == x_j.
inline std::uint64_t count_tied_pairs(std::span<const double> row) {
    std::vector<double> sorted(row.begin(), row.end());
    std::sort(sorted.begin(), sorted.end());
    std::uint64_t total = 0;
    std::size_t i = 0;
    while (i < sorted.size()) {
        std::size_t j = i + 1;
        while (j < sorted.size() && sorted[j] == sorted[i]) ++j;
        const std::uint64_t run = j - i;
        total += run * (run - 1) / 2;
        i = j;
    }
    return total;
}

inline TieReport check_ties(const DataMatrix& d) {
    TieReport report;
    report.tied_pairs.resize(d.p());
    for (std::size_t k = 0; k < d.p(); ++k) report.tied_pairs[k] = count_tied_pairs(d.row(k));
    return report;
}

inline void require_no_ties(const DataMatrix& d) {
    const auto report = check_ties(d);
    for (std::size_t k = 0; k < d.p(); ++k) {
        if (report.tied_pairs[k] != 0) {
            throw TieError(k, "row " + std::to_string(k) + " has " +
                                  std::to_string(report.tied_pairs[k]) +
                                  " tied pair(s); rank statistics require continuous data "
                                  "(use the jitter tie policy to break ties)");
        }
    }
}

struct PreparedData {
    DataMatrix data;
    TieReport ties;  ///< ties found in the input, before any jitter
};

/// Applies the tie policy. Strict throws TieError on the first tied row.
/// Jitter adds uniform noise in +-1e-9 * (row range) to every entry of each
/// tied row, using a stream derived from `seed` and the row index.
inline PreparedData apply_tie_policy(const DataMatrix& d, TiePolicy policy, std::uint64_t seed = 0) {
    auto report = check_ties(d);
    if (!report.any()) return {d, std::move(report)};
    if (policy == TiePolicy::strict) require_no_ties(d);

    constexpr double kRelative = 1e-9;
    RowMatrix values = d.values();
    for (std::size_t k = 0; k < d.p(); ++k) {
        if (report.tied_pairs[k] == 0) continue;
        const auto row = d.row(k);
        const auto [lo, hi] = std::minmax_element(row.begin(), row.end());
        double range = *hi - *lo;
        if (range == 0.0) range = std::max(1.0, std::abs(*lo));
        PhiloxStream stream(seed, 0x7469650000000000ull + k);
        for (std::size_t i = 0; i < d.n(); ++i) {
            values(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(i)) +=
                (2.0 * stream.uniform() - 1.0) * kRelative * range;
        }
    }
    DataMatrix jittered(std::move(values));
    require_no_ties(jittered);
    report.jittered = true;
    report.jitter_relative_magnitude = kRelative;
    report.jitter_seed = seed;
    return {std::move(jittered), std::move(report)};
}

}  // namespace ranklss
