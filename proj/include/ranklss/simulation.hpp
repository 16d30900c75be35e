#pragma once

/**
 * @file simulation.hpp
 * @brief Seeded data generators for the null and alternative models.
 *
 * Null populations (the "distribution" of a configuration):
 *   normal : all rows iid N(0, 1)
 *   I      : rows 1..floor(p/2) iid Gamma(4, 0.5), remaining rows iid t(5)
 *   II     : rows 1..floor(p/2) iid Cauchy(0, 1), remaining rows iid t(5)
 *   III    : all rows iid Cauchy(0, 1)
 *
 * Alternatives mix a null matrix Z drawn from one of those populations:
 *   IV : X = A Z, A banded Toeplitz with a_ii = 1, a_{i,i+-k} = rho^k, k <= k0
 *   V  : x_ij = r1 z_ij + r2 z_{i+1,j}^2 + r3 z_{i+2,j}^2 + r4 e_ij,
 *        with z drawn for p + 2 rows and e iid N(0, 1)
 *
 * Replicate r of a configuration draws from PhiloxStream(seed, r) in
 * row-major order, so the output depends on (seed, r) only.
 */

#include <charconv>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <algorithm>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "ranklss/data_matrix.hpp"
#include "ranklss/errors.hpp"
#include "ranklss/random.hpp"

namespace ranklss {

enum class Model { null, IV, V };
enum class Population { normal, I, II, III };

inline const char* to_string(Population d) {
    switch (d) {
        case Population::normal: return "normal";
        case Population::I: return "I";
        case Population::II: return "II";
        case Population::III: return "III";
    }
    return "?";
}

inline const char* to_string(Model m) {
    switch (m) {
        case Model::null: return "null";
        case Model::IV: return "IV";
        case Model::V: return "V";
    }
    return "?";
}

struct SizePair {
    std::size_t p, n;
};

struct SimConfig {
    Model model = Model::null;
    Population distribution = Population::normal;
    std::vector<SizePair> sizes{{100, 200}};
    double rho_s = 0.06;         ///< Model IV
    long k0 = -1;                ///< Model IV band width; -1 means max(1, floor(p/100))
    double r[4] = {0.01, 0.02, 0.006, 0.5};  ///< Model V
    std::uint64_t seed = 20240601;
    std::size_t replicates = 1000;
    double alpha = 0.05;
    std::string stats = "Qtau2,Qtau4,Qtaulog";

    /// Band width used at dimension p.
    std::size_t band_width(std::size_t p) const {
        if (k0 < 0) return std::max<std::size_t>(1, p / 100);
        return static_cast<std::size_t>(k0);
    }
};

/// Default Model IV coupling used for each population in the power tables.
inline double default_rho(Population d) {
    switch (d) {
        case Population::I: return 0.06;
        case Population::II: return 0.03;
        case Population::III: return 0.02;
        default: return 0.06;
    }
}

// ---------------------------------------------------------------------------
// Generators

namespace detail {

inline double draw(Population d, bool top_half, PhiloxStream& rng) {
    switch (d) {
        case Population::normal: return rng.normal();
        case Population::I: return top_half ? rng.gamma(4.0, 0.5) : rng.student_t(5.0);
        case Population::II: return top_half ? rng.cauchy(0.0, 1.0) : rng.student_t(5.0);
        case Population::III: return rng.cauchy(0.0, 1.0);
    }
    return 0.0;
}

/// rows x n matrix; the first floor(split_rows/2) rows form the top half.
inline RowMatrix draw_population(Population d, std::size_t rows, std::size_t split_rows, std::size_t n,
                                 PhiloxStream& rng) {
    RowMatrix z(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(n));
    const std::size_t half = split_rows / 2;
    for (std::size_t k = 0; k < rows; ++k) {
        for (std::size_t i = 0; i < n; ++i) {
            z(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(i)) = draw(d, k < half, rng);
        }
    }
    return z;
}

inline void check_dims(std::size_t p, std::size_t n) {
    if (p < 2 || n < 2) throw InvalidArgument("simulation needs p >= 2 and n >= 2");
}

}  // namespace detail

inline DataMatrix gen_null(Population d, std::size_t p, std::size_t n, std::uint64_t seed, std::uint64_t replicate) {
    detail::check_dims(p, n);
    PhiloxStream rng(seed, replicate);
    return DataMatrix(detail::draw_population(d, p, p, n, rng));
}

/// Applies the banded Toeplitz mixing X = A Z.
inline RowMatrix toeplitz_mix(const RowMatrix& z, double rho, std::size_t k0) {
    const auto p = z.rows();
    if (k0 < 1 || static_cast<Eigen::Index>(k0) >= p) {
        throw InvalidArgument("Toeplitz band width k0 must satisfy 1 <= k0 < p (got " + std::to_string(k0) + ")");
    }
    if (!(rho >= 0.0 && rho < 1.0)) throw InvalidArgument("rho_s must lie in [0, 1)");
    if (rho == 0.0) return z;
    RowMatrix x = z;
    double weight = 1.0;
    for (std::size_t k = 1; k <= k0; ++k) {
        weight *= rho;
        const auto kk = static_cast<Eigen::Index>(k);
        x.topRows(p - kk) += weight * z.bottomRows(p - kk);
        x.bottomRows(p - kk) += weight * z.topRows(p - kk);
    }
    return x;
}

inline DataMatrix gen_toeplitz(Population d, std::size_t p, std::size_t n, double rho, std::size_t k0,
                               std::uint64_t seed, std::uint64_t replicate) {
    detail::check_dims(p, n);
    PhiloxStream rng(seed, replicate);
    const RowMatrix z = detail::draw_population(d, p, p, n, rng);
    return DataMatrix(toeplitz_mix(z, rho, k0));
}

inline DataMatrix gen_nonlinear(Population d, std::size_t p, std::size_t n, const double (&r)[4], std::uint64_t seed,
                                std::uint64_t replicate) {
    detail::check_dims(p, n);
    PhiloxStream rng(seed, replicate);
    // The top/bottom split refers to the p observed rows.
    const RowMatrix z = detail::draw_population(d, p + 2, p, n, rng);
    RowMatrix x(static_cast<Eigen::Index>(p), static_cast<Eigen::Index>(n));
    for (std::size_t k = 0; k < p; ++k) {
        for (std::size_t i = 0; i < n; ++i) {
            const auto kk = static_cast<Eigen::Index>(k), ii = static_cast<Eigen::Index>(i);
            const double z1 = z(kk + 1, ii), z2 = z(kk + 2, ii);
            x(kk, ii) = r[0] * z(kk, ii) + r[1] * z1 * z1 + r[2] * z2 * z2 + r[3] * rng.normal();
        }
    }
    return DataMatrix(std::move(x));
}

/// Replicate `replicate` of the configuration at size (p, n).
inline DataMatrix generate(const SimConfig& cfg, std::size_t p, std::size_t n, std::uint64_t replicate) {
    switch (cfg.model) {
        case Model::null: return gen_null(cfg.distribution, p, n, cfg.seed, replicate);
        case Model::IV: return gen_toeplitz(cfg.distribution, p, n, cfg.rho_s, cfg.band_width(p), cfg.seed, replicate);
        case Model::V: return gen_nonlinear(cfg.distribution, p, n, cfg.r, cfg.seed, replicate);
    }
    throw InvalidArgument("unknown model");
}

// ---------------------------------------------------------------------------
// Config files
//
// Plain "key = value" lines; '#' starts a comment. Keys:
//   model        null | IV | V          (I, II, III are accepted as
//                                        shorthand for null + distribution)
//   distribution normal | I | II | III
//   sizes        comma list of PxN, e.g. 100x200,100x100
//   rho_s, k0, r (four comma-separated reals), seed, replicates, alpha,
//   stats        comma list of statistic names

namespace detail {

inline Population parse_population(std::string_view s) {
    if (s == "normal" || s == "gaussian") return Population::normal;
    if (s == "I") return Population::I;
    if (s == "II") return Population::II;
    if (s == "III") return Population::III;
    throw ParseError("unknown distribution '" + std::string(s) + "'");
}

inline double parse_real(std::string_view key, std::string_view v) {
    double out = 0.0;
    if (!parse_double(v, out) || !std::isfinite(out)) throw ParseError("bad number for '" + std::string(key) + "'");
    return out;
}

inline std::uint64_t parse_uint(std::string_view key, std::string_view v) {
    v = trim(v);
    std::uint64_t out = 0;
    const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
    if (ec != std::errc{} || ptr != v.data() + v.size()) {
        throw ParseError("bad integer for '" + std::string(key) + "'");
    }
    return out;
}

}  // namespace detail

inline SimConfig parse_sim_config(std::string_view text) {
    SimConfig cfg;
    bool rho_given = false, r_given = false;
    std::size_t pos = 0, line_no = 0;
    while (pos <= text.size()) {
        const auto end = text.find('\n', pos);
        auto line = text.substr(pos, end == std::string_view::npos ? std::string_view::npos : end - pos);
        pos = end == std::string_view::npos ? text.size() + 1 : end + 1;
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        line = detail::trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string_view::npos) throw ParseError("line " + std::to_string(line_no) + ": expected key = value");
        const auto key = detail::trim(line.substr(0, eq));
        const auto value = detail::trim(line.substr(eq + 1));

        if (key == "model") {
            if (value == "null") cfg.model = Model::null;
            else if (value == "IV") cfg.model = Model::IV;
            else if (value == "V") cfg.model = Model::V;
            else if (value == "I" || value == "II" || value == "III") {
                cfg.model = Model::null;
                cfg.distribution = detail::parse_population(value);
            } else {
                throw ParseError("unknown model '" + std::string(value) + "'");
            }
        } else if (key == "distribution") {
            cfg.distribution = detail::parse_population(value);
        } else if (key == "sizes") {
            cfg.sizes.clear();
            for (auto cell : detail::split_commas(value)) {
                cell = detail::trim(cell);
                const auto x = cell.find('x');
                if (x == std::string_view::npos) throw ParseError("sizes entries look like PxN");
                cfg.sizes.push_back({static_cast<std::size_t>(detail::parse_uint(key, cell.substr(0, x))),
                                     static_cast<std::size_t>(detail::parse_uint(key, cell.substr(x + 1)))});
            }
        } else if (key == "rho_s") {
            cfg.rho_s = detail::parse_real(key, value);
            rho_given = true;
        } else if (key == "k0") {
            cfg.k0 = static_cast<long>(detail::parse_uint(key, value));
        } else if (key == "r") {
            const auto cells = detail::split_commas(value);
            if (cells.size() != 4) throw ParseError("r needs four comma-separated values");
            for (int i = 0; i < 4; ++i) cfg.r[i] = detail::parse_real(key, cells[static_cast<std::size_t>(i)]);
            r_given = true;
        } else if (key == "seed") {
            cfg.seed = detail::parse_uint(key, value);
        } else if (key == "replicates") {
            cfg.replicates = static_cast<std::size_t>(detail::parse_uint(key, value));
        } else if (key == "alpha") {
            cfg.alpha = detail::parse_real(key, value);
        } else if (key == "stats") {
            cfg.stats = std::string(value);
        } else {
            throw ParseError("unknown key '" + std::string(key) + "' on line " + std::to_string(line_no));
        }
    }
    if (cfg.model == Model::IV && !rho_given) cfg.rho_s = default_rho(cfg.distribution);
    if (cfg.model == Model::V && !r_given && cfg.distribution == Population::III) {
        const double r3[4] = {0.002, 0.005, 0.0015, 0.5};
        std::copy(std::begin(r3), std::end(r3), std::begin(cfg.r));
    }
    if (cfg.replicates < 1) throw ParseError("replicates must be at least 1");
    if (!(cfg.alpha > 0.0 && cfg.alpha < 1.0)) throw ParseError("alpha must be in (0, 1)");
    if (cfg.sizes.empty()) throw ParseError("no sizes given");
    for (const auto& s : cfg.sizes) {
        if (s.p < 2 || s.n < 2) throw ParseError("sizes need p >= 2 and n >= 2");
    }
    return cfg;
}

inline SimConfig load_sim_config(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open config '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_sim_config(buf.str());
}

}  // namespace ranklss
