#pragma once

/**
 * @file harness.hpp
 * @brief Monte Carlo size and power experiments.
 *
 * Replicates are the unit of parallel work. Each replicate records one
 * reject flag per statistic; rates are integer counts over the replicate
 * count, so results do not depend on the number of workers.
 */

#include <chrono>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <string>
#include <vector>

#include "ranklss/hypothesis_tests.hpp"
#include "ranklss/parallel.hpp"
#include "ranklss/simulation.hpp"

namespace ranklss {

struct ExperimentRow {
    std::string model;
    std::string distribution;
    std::size_t p = 0, n = 0;
    std::string statistic;
    double alpha = 0.05;
    std::size_t replicates = 0;
    std::size_t rejections = 0;

    double rate() const { return static_cast<double>(rejections) / static_cast<double>(replicates); }
    double mc_stderr() const {
        const double r = rate();
        return std::sqrt(r * (1.0 - r) / static_cast<double>(replicates));
    }
};

struct ExperimentResult {
    std::vector<ExperimentRow> rows;
    std::vector<std::string> excluded;  ///< "stat: reason" for pairings not run
    std::uint64_t seed = 0;
    double wall_seconds = 0.0;
};

/// Pearson statistics need finite second moments; Cauchy rows break that.
inline bool has_heavy_tails(Population d) { return d == Population::II || d == Population::III; }

namespace detail {

inline std::string model_label(const SimConfig& cfg) {
    return cfg.model == Model::null ? to_string(cfg.distribution) : to_string(cfg.model);
}

}  // namespace detail

/// Runs every (p, n) cell of the configuration. Statistics that are
/// infeasible for the population are listed in `excluded` instead.
inline ExperimentResult run_experiment(const SimConfig& cfg, const std::vector<StatId>& requested, unsigned threads = 1,
                                       const TestOptions& options = {}) {
    const auto start = std::chrono::steady_clock::now();
    ExperimentResult result;
    result.seed = cfg.seed;

    std::vector<StatId> stats;
    for (StatId s : requested) {
        if (stat_flavor(s) == CorrFlavor::pearson && has_heavy_tails(cfg.distribution)) {
            result.excluded.push_back(std::string(to_string(s)) +
                                      ": Pearson statistic excluded for heavy-tailed population " +
                                      to_string(cfg.distribution));
        } else {
            stats.push_back(s);
        }
    }

    for (const auto& size : cfg.sizes) {
        const std::size_t reps = cfg.replicates;
        std::vector<std::uint8_t> flags(reps * stats.size(), 0);
        TestOptions per_rep = options;
        per_rep.kendall.threads = 1;  // parallelism is over replicates
        parallel_for(reps, threads, [&](std::size_t r) {
            const DataMatrix data = generate(cfg, size.p, size.n, r);
            StatisticContext ctx(data, per_rep);
            for (std::size_t s = 0; s < stats.size(); ++s) {
                flags[r * stats.size() + s] = ctx.report(stats[s], cfg.alpha).reject ? 1 : 0;
            }
        });
        for (std::size_t s = 0; s < stats.size(); ++s) {
            ExperimentRow row;
            row.model = detail::model_label(cfg);
            row.distribution = to_string(cfg.distribution);
            row.p = size.p;
            row.n = size.n;
            row.statistic = to_string(stats[s]);
            row.alpha = cfg.alpha;
            row.replicates = reps;
            for (std::size_t r = 0; r < reps; ++r) row.rejections += flags[r * stats.size() + s];
            result.rows.push_back(row);
        }
    }
    result.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return result;
}

inline ExperimentResult run_size(const SimConfig& cfg, const std::vector<StatId>& stats, unsigned threads = 1,
                                 const TestOptions& options = {}) {
    if (cfg.model != Model::null) throw InvalidArgument("run_size needs a null model");
    return run_experiment(cfg, stats, threads, options);
}

inline ExperimentResult run_power(const SimConfig& cfg, const std::vector<StatId>& stats, unsigned threads = 1,
                                  const TestOptions& options = {}) {
    if (cfg.model == Model::null) throw InvalidArgument("run_power needs model IV or V");
    return run_experiment(cfg, stats, threads, options);
}

/// CSV with header model,distribution,p,n,statistic,alpha,replicates,rate,mc_stderr.
inline void write_experiment_csv(const ExperimentResult& r, std::ostream& out) {
    out << "model,distribution,p,n,statistic,alpha,replicates,rate,mc_stderr\n";
    char buf[64];
    for (const auto& row : r.rows) {
        out << row.model << ',' << row.distribution << ',' << row.p << ',' << row.n << ',' << row.statistic << ',';
        std::snprintf(buf, sizeof buf, "%.17g", row.alpha);
        out << buf << ',' << row.replicates << ',';
        std::snprintf(buf, sizeof buf, "%.17g", row.rate());
        out << buf << ',';
        std::snprintf(buf, sizeof buf, "%.17g", row.mc_stderr());
        out << buf << '\n';
    }
}

}  // namespace ranklss
