// Command-line front end: tau-matrix, test, simulate, lss-moments,
// verify-oracles. Results go to stdout (or --output); failures print a JSON
// error object on stderr and exit with status 2.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "ranklss/ranklss.hpp"

namespace {

using json = nlohmann::json;
using namespace ranklss;

struct InputOptions {
    std::string path;
    std::string orientation = "rows";
    std::string ties = "strict";
    std::uint64_t jitter_seed = 0;
};

void add_input_options(CLI::App* cmd, InputOptions& in) {
    cmd->add_option("--input", in.path, "CSV file with the observations")->required();
    cmd->add_option("--orientation", in.orientation, "rows: one variable per row; cols: one per column")
        ->check(CLI::IsMember({"rows", "cols"}));
    cmd->add_option("--ties", in.ties, "strict (reject ties) or jitter")->check(CLI::IsMember({"strict", "jitter"}));
    cmd->add_option("--jitter-seed", in.jitter_seed, "seed for the jitter tie policy");
}

PreparedData load_input(const InputOptions& in) {
    const auto data = load_data(in.path, in.orientation == "rows" ? Orientation::rows_are_variables
                                                                  : Orientation::cols_are_variables);
    return apply_tie_policy(data, in.ties == "strict" ? TiePolicy::strict : TiePolicy::jitter, in.jitter_seed);
}

json tie_json(const TieReport& t) {
    std::uint64_t total = 0;
    json rows = json::array();
    for (std::size_t k = 0; k < t.tied_pairs.size(); ++k) {
        total += t.tied_pairs[k];
        if (t.tied_pairs[k]) rows.push_back({{"row", k}, {"tied_pairs", t.tied_pairs[k]}});
    }
    json j = {{"total_tied_pairs", total}, {"rows_with_ties", rows}, {"jittered", t.jittered}};
    if (t.jittered) {
        j["jitter_relative_magnitude"] = t.jitter_relative_magnitude;
        j["jitter_seed"] = t.jitter_seed;
    }
    return j;
}

json report_json(const TestReport& r) {
    return {{"name", r.name},          {"raw", r.raw},       {"centering", r.centering}, {"centered", r.centered},
            {"null_mean", r.null_mean}, {"null_sd", r.null_sd}, {"zscore", r.zscore},     {"pvalue", r.pvalue},
            {"reject", r.reject},      {"alpha", r.alpha},   {"p", r.p},                 {"n", r.n},
            {"c_n", r.c_n},            {"family", to_string(r.family)}, {"tail", to_string(r.tail)}};
}

std::optional<std::pair<double, double>> closed_form_moments(const FunctionDescriptor& f, double c) {
    if (f.kind() == FunctionDescriptor::Kind::log) return std::pair{closed_form::log_mean(c), closed_form::log_var(c)};
    if (f.kind() != FunctionDescriptor::Kind::power) return std::nullopt;
    switch (f.exponent()) {
        case 1: return std::pair{0.0, 0.0};
        case 2: return std::pair{closed_form::q2_mean(c), closed_form::q2_var(c)};
        case 4: return std::pair{closed_form::q4_mean(c), closed_form::q4_var(c)};
        default: return std::nullopt;
    }
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InvalidArgument("cannot write '" + path + "'");
    out << text;
    if (!out) throw InvalidArgument("write to '" + path + "' failed");
}

int fail(const std::string& kind, const std::string& message) {
    std::cerr << json{{"error", {{"kind", kind}, {"message", message}}}}.dump() << '\n';
    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Rank-correlation spectral statistics and independence tests"};
    app.require_subcommand(1);

    // tau-matrix
    InputOptions tau_in;
    std::string tau_out, tau_flavor = "kendall", tau_kernel = "auto";
    unsigned tau_threads = 1;
    auto* tau = app.add_subcommand("tau-matrix", "Write the p x p correlation matrix as CSV");
    add_input_options(tau, tau_in);
    tau->add_option("--output", tau_out, "output CSV (stdout if omitted)");
    tau->add_option("--flavor", tau_flavor)->check(CLI::IsMember({"kendall", "spearman", "pearson"}));
    tau->add_option("--kernel", tau_kernel, "Kendall kernel")->check(CLI::IsMember({"auto", "merge", "bits"}));
    tau->add_option("--threads", tau_threads, "worker threads (0 = all cores)");

    // test
    InputOptions test_in;
    std::string test_stats = "Qtau2,Qtau4,Qtaulog", q4_centering = "moment", log_mean = "closed";
    double test_alpha = 0.05;
    unsigned test_threads = 1;
    auto* test = app.add_subcommand("test", "Run independence tests and print a JSON array of reports");
    add_input_options(test, test_in);
    test->add_option("--stats", test_stats, "comma-separated statistic names");
    test->add_option("--alpha", test_alpha, "significance level");
    test->add_option("--q4-centering", q4_centering)->check(CLI::IsMember({"moment", "literal"}));
    test->add_option("--log-mean", log_mean, "closed-form or contour null mean for Qtaulog")
        ->check(CLI::IsMember({"closed", "contour"}));
    test->add_option("--threads", test_threads, "worker threads for the Kendall matrix");

    // simulate
    std::string sim_config, sim_output, sim_stats;
    std::optional<std::uint64_t> sim_seed;
    std::optional<double> sim_alpha;
    std::optional<std::size_t> sim_reps;
    unsigned sim_threads = 1;
    auto* sim = app.add_subcommand("simulate", "Monte Carlo size/power experiment from a config file");
    sim->add_option("--config", sim_config, "key = value configuration file")->required();
    sim->add_option("--output", sim_output, "result CSV (stdout if omitted)");
    sim->add_option("--seed", sim_seed, "override the config seed");
    sim->add_option("--alpha", sim_alpha, "override the config alpha");
    sim->add_option("--replicates", sim_reps, "override the config replicate count");
    sim->add_option("--stats", sim_stats, "override the config statistic list");
    sim->add_option("--threads", sim_threads, "worker threads; results do not depend on it");

    // lss-moments
    std::string lss_f = "x2", lss_route = "deformed";
    double lss_c = 0.5;
    auto* lss = app.add_subcommand("lss-moments", "Limiting mean and variance of a linear spectral statistic");
    lss->add_option("--f", lss_f, "x, x<k> or log")->required();
    lss->add_option("--c", lss_c, "aspect ratio p/n")->required();
    lss->add_option("--route", lss_route)->check(CLI::IsMember({"deformed", "unit-circle"}));

    // verify-oracles
    int vo_n = 5, vo_pairs = 20;
    std::uint64_t vo_seed = 1;
    auto* vo = app.add_subcommand("verify-oracles", "Exact enumeration checks at one n");
    vo->add_option("--n", vo_n, "sample size (2..8; quadratic identity needs n <= 7)");
    vo->add_option("--pairs", vo_pairs, "random symmetric (A, B) pairs");
    vo->add_option("--seed", vo_seed, "seed for the random pairs");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        return fail("usage", e.what());
    }

    try {
        if (*tau) {
            const auto prepared = load_input(tau_in);
            CorrMatrix m;
            if (tau_flavor == "kendall") {
                KendallOptions ko;
                ko.threads = tau_threads;
                ko.kernel = tau_kernel == "merge" ? KendallKernel::merge_sort
                            : tau_kernel == "bits" ? KendallKernel::sign_bits
                                                   : KendallKernel::automatic;
                m = kendall_matrix(prepared.data, ko);
            } else {
                m = correlation_matrix(prepared.data, tau_flavor == "spearman" ? CorrFlavor::spearman
                                                                                : CorrFlavor::pearson);
            }
            std::ostringstream csv;
            write_matrix_csv(m.entries, csv);
            if (tau_out.empty()) {
                std::cout << csv.str();
            } else {
                write_text(tau_out, csv.str());
                std::cout << json{{"p", prepared.data.p()}, {"n", prepared.data.n()}, {"flavor", tau_flavor},
                                  {"output", tau_out}, {"ties", tie_json(prepared.ties)}}
                                 .dump(2)
                          << '\n';
            }
        } else if (*test) {
            const auto prepared = load_input(test_in);
            TestOptions opt;
            opt.q4_centering = q4_centering == "moment" ? Q4Centering::moment_transform : Q4Centering::literal;
            opt.log_mean = log_mean == "closed" ? LogMeanSource::closed_form : LogMeanSource::contour;
            opt.kendall.threads = test_threads;
            json out = json::array();
            for (const auto& r : test_statistics(parse_stat_list(test_stats), prepared.data, test_alpha, opt)) {
                out.push_back(report_json(r));
            }
            std::cout << out.dump(2) << '\n';
            if (prepared.ties.jittered) std::cerr << json{{"ties", tie_json(prepared.ties)}}.dump() << '\n';
        } else if (*sim) {
            auto cfg = load_sim_config(sim_config);
            if (sim_seed) cfg.seed = *sim_seed;
            if (sim_alpha) cfg.alpha = *sim_alpha;
            if (sim_reps) cfg.replicates = *sim_reps;
            if (!sim_stats.empty()) cfg.stats = sim_stats;
            const auto result = run_experiment(cfg, parse_stat_list(cfg.stats), sim_threads);
            std::ostringstream csv;
            write_experiment_csv(result, csv);
            if (sim_output.empty()) {
                std::cout << csv.str();
            } else {
                write_text(sim_output, csv.str());
            }
            std::cerr << json{{"rows", result.rows.size()},
                              {"seed", result.seed},
                              {"excluded", result.excluded},
                              {"wall_seconds", result.wall_seconds}}
                             .dump()
                      << '\n';
        } else if (*lss) {
            const auto f = FunctionDescriptor::parse(lss_f);
            LssConfig cfg;
            cfg.route = lss_route == "deformed" ? LssRoute::deformed : LssRoute::unit_circle;
            const double mean = lss_mean(f, lss_c, cfg);
            const double var = lss_cov(f, f, lss_c, cfg);
            json out = {{"f", f.name()}, {"c", lss_c}, {"route", lss_route}, {"mean", mean}, {"var", var}};
            if (const auto cf = closed_form_moments(f, lss_c)) {
                out["closed_form"] = {{"mean", cf->first}, {"var", cf->second}};
                out["abs_diff"] = {{"mean", std::abs(mean - cf->first)}, {"var", std::abs(var - cf->second)}};
            } else {
                out["closed_form"] = nullptr;
                out["abs_diff"] = nullptr;
            }
            std::cout << out.dump(2) << '\n';
        } else if (*vo) {
            bool ok = true;
            auto line = [&](const std::string& name, double dev, double tol) {
                const bool pass = dev <= tol;
                ok = ok && pass;
                std::printf("%-34s %-4s deviation %.3e (tol %.0e)\n", name.c_str(), pass ? "PASS" : "FAIL", dev, tol);
            };
            if (vo_n > 12 || vo_n < 2) throw InvalidArgument("--n must be in 2..12");
            const auto h = build_T(vo_n);
            const auto [g1, g2] = gram_identity_deviation(h);
            line("(TT')^2 = n TT'", static_cast<double>(g1), 0.0);
            line("(T'T)^2 = n T'T", static_cast<double>(g2), 0.0);
            if (vo_n <= 8) {
                const auto cs = verify_cov_structure(vo_n);
                line("E vv' = (T'T + I)/(3M) exact", cs.exact_deviation, 0.0);
                line("E vv' = (T'T + I)/(3M) float", cs.float_deviation, 1e-12);
            }
            if (vo_n <= 7) {
                PhiloxStream rng(vo_seed, 0);
                double worst = 0.0;
                for (int k = 0; k < vo_pairs; ++k) {
                    Eigen::MatrixXd a(h.M, h.M), b(h.M, h.M);
                    for (int i = 0; i < h.M; ++i) {
                        for (int j = 0; j <= i; ++j) {
                            a(i, j) = a(j, i) = rng.normal();
                            b(i, j) = b(j, i) = rng.normal();
                        }
                    }
                    worst = std::max(worst, verify_quadratic_identity(vo_n, a, b).deviation);
                }
                line("quadratic-form covariance identity", worst, 1e-10);
            }
            return ok ? 0 : 1;
        }
    } catch (const ranklss::Error& e) {
        return fail(e.kind(), e.what());
    } catch (const std::exception& e) {
        return fail("internal", e.what());
    }
    return 0;
}
