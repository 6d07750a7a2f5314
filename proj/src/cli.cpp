#include "mockgauss/cli.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>
#include <map>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "mockgauss/config.hpp"
#include "mockgauss/counting.hpp"
#include "mockgauss/cumulants.hpp"
#include "mockgauss/experiments.hpp"
#include "mockgauss/report.hpp"
#include "mockgauss/trace_moments.hpp"

namespace mockgauss {

namespace {

struct Outcome {
    Table table;
    std::vector<std::string> summary;
    bool pass = true;
};

SamplerKind sampler_kind(const ExperimentConfig& config) {
    return config.sampler == "qr" ? SamplerKind::Qr : SamplerKind::Dpp;
}

McPlan plan_for(const ExperimentConfig& config) { return McPlan{config.seed, 0, config.samples}; }

std::string join_ints(const std::vector<int>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i]);
    return s;
}

Outcome run_sample(const ExperimentConfig& config, Execution exec) {
    const GroupLabel& group = config.require_group();
    Outcome o{{{"draw", "index", "phase"}, {}}, {}, true};
    const auto samples = sample_batch(group, sampler_kind(config), plan_for(config), exec);
    for (std::size_t d = 0; d < samples.size(); ++d)
        for (std::size_t i = 0; i < samples[d].phases.size(); ++i)
            o.table.add_row({static_cast<std::int64_t>(d), static_cast<std::int64_t>(i), samples[d].phases[i]});
    o.summary.push_back("sampled " + std::to_string(samples.size()) + " draws from " + group.name());
    return o;
}

Outcome run_density(const ExperimentConfig& config, Execution exec) {
    const GroupLabel& group = config.require_group();
    const DensityCheckReport r = run_density_check(group, plan_for(config), config.bins, sampler_kind(config), exec);
    Outcome o{{{"bin", "lo", "hi", "observed", "expected"}, {}}, {}, r.pass};
    const Interval domain = WeylKernel(group).domain();
    const double width = domain.length() / r.bins;
    for (int b = 0; b < r.bins; ++b)
        o.table.add_row({std::int64_t{b}, domain.lo + b * width, domain.lo + (b + 1) * width,
                         r.observed[static_cast<std::size_t>(b)], r.expected[static_cast<std::size_t>(b)]});
    std::ostringstream line;
    line << (r.pass ? "PASS" : "FAIL") << " density-check " << group.name() << " chi2=" << format_double(r.chi_square.statistic)
         << " dof=" << r.chi_square.dof << " p=" << format_double(r.chi_square.p_value);
    o.summary.push_back(line.str());
    return o;
}

Outcome run_cumulants(const ExperimentConfig& config, Execution exec) {
    const GroupLabel& group = config.require_group();
    const PeriodizedStatistic stat(config.band_limited_function(), config.scale());
    const FourierCoefficients<double> g = stat.coefficients();
    std::vector<int> orders;
    if (config.order) {
        orders.push_back(*config.order);
    } else {
        for (int l = 1; l <= config.m_max; ++l) orders.push_back(l);
    }
    Outcome o{{{"order", "lattice", "closed_form", "agree"}, {}}, {}, true};
    for (int l : orders) {
        const double lattice = cumulant_group(l, group, g, exec);
        double closed = std::nan("");
        bool agree = true;
        if (l <= 2) {
            closed = l == 1 ? closed_form::group_c1(group, g) : closed_form::group_c2(group, g);
            agree = std::abs(lattice - closed) <= 1e-9 * (1.0 + std::abs(closed));
        }
        o.pass = o.pass && agree;
        o.table.add_row({std::int64_t{l}, lattice, closed, agree});
        o.summary.push_back((agree ? "PASS" : "FAIL") + std::string(" cumulant order ") + std::to_string(l) + " of " +
                            group.name() + " = " + format_double(lattice));
    }
    return o;
}

Outcome run_mu(const ExperimentConfig& config) {
    const GroupLabel& group = config.require_group();
    if (config.k.empty()) throw ConfigError("config field 'k' is required for mu");
    const int l = config.order.value_or(static_cast<int>(config.k.size()));
    if (l != static_cast<int>(config.k.size()))
        throw ConfigError("config field 'order' must equal the length of 'k'");
    const std::int64_t mu = mu_coefficient(l, group, config.k);
    Outcome o{{{"order", "k", "mu"}, {}}, {}, true};
    o.table.add_row({std::int64_t{l}, join_ints(config.k), mu});
    o.summary.push_back("mu_" + std::to_string(l) + "(" + join_ints(config.k) + ") for " + group.name() + " = " +
                        std::to_string(mu));
    return o;
}

Outcome run_traces(const ExperimentConfig& config, Execution exec) {
    const GroupLabel& group = config.require_group();
    if (group.is_unitary()) throw ConfigError("config field 'group': trace moments are defined for Sp and SO only");
    std::vector<PowerProfile> profiles;
    if (!config.profile.empty()) {
        profiles.emplace_back(config.profile);
    } else {
        const int limit = group.family() == Family::Symplectic ? group.matrix_size() + 1 : group.matrix_size() - 1;
        profiles = profiles_up_to_weight(std::max(1, std::min(6, limit)));
    }
    Outcome o{{{"profile", "weight", "weight_limit", "condition_met", "gaussian_value", "checked_value",
                "checked_stderr", "method", "agreement"},
               {}},
              {},
              true};
    for (const auto& p : profiles) {
        const TraceMomentReport r = check_trace_moment(p, group, plan_for(config), false, exec);
        o.table.add_row({p.to_string(), std::int64_t{r.weight}, std::int64_t{r.weight_limit}, r.condition_met,
                         r.gaussian_value, r.checked_value, r.checked_stderr,
                         std::string(r.by_quadrature ? "quadrature" : "monte_carlo"), r.agreement});
        // Profiles beyond the weight limit are reported, not judged.
        if (r.condition_met) o.pass = o.pass && r.agreement;
        std::ostringstream line;
        line << (!r.condition_met ? "INFO" : r.agreement ? "PASS" : "FAIL") << " " << group.name() << " "
             << p.to_string() << " haar=" << format_double(r.checked_value)
             << " gaussian=" << format_double(r.gaussian_value);
        o.summary.push_back(line.str());
    }
    return o;
}

Outcome run_mock(const ExperimentConfig& config, Execution exec) {
    const MomentReport r = run_mock_gauss(config, exec);
    Outcome o{moment_table(r), {}, r.all_pass()};
    if (!r.support_condition_met)
        o.summary.push_back("WARNING support of the Fourier transform exceeds the mock-Gaussian range for m_max=" +
                            std::to_string(config.m_max));
    o.summary.push_back("finite-N mean=" + format_double(r.finite_mean) + " variance=" + format_double(r.finite_variance));
    o.summary.push_back("limit mean=" + format_double(r.limit_mean) + " variance=" + format_double(r.limit_variance));
    for (const auto& row : r.rows)
        o.summary.push_back((row.pass ? "PASS" : "FAIL") + std::string(" moment ") + std::to_string(row.order) +
                            " mc=" + format_double(row.mc_estimate) + " predicted=" +
                            format_double(row.finite_n_prediction));
    return o;
}

Outcome run_variance(const ExperimentConfig& config) {
    std::string family = config.group_family.value_or("Sp");
    if (config.group) family = std::string(config.group->family_tag());
    std::vector<double> deltas = config.deltas;
    if (deltas.empty()) deltas = config.function ? std::vector<double>{config.function->delta} : std::vector<double>{0.4, 0.8};
    std::vector<int> sizes = config.n_list;
    if (sizes.empty()) sizes = config.group ? std::vector<int>{config.group->matrix_size()} : std::vector<int>{8, 16, 32};
    const FunctionFamily f_family =
        config.function ? BandLimitedFunction::parse(config.function->family, 1.0).family() : FunctionFamily::Fejer;
    const double amplitude = config.function ? config.function->amplitude : 1.0;
    Outcome o{{{"delta", "n", "finite_variance", "limit_variance", "deviation"}, {}}, {}, true};
    for (const auto& r : run_variance_deviation(family, f_family, deltas, sizes, amplitude))
        o.table.add_row({r.delta, std::int64_t{r.n}, r.finite_variance, r.limit_variance, r.deviation});
    o.summary.push_back("variance deviation for " + family + ": " + std::to_string(o.table.rows.size()) + " rows");
    return o;
}

Outcome run_verify_counting() {
    const int max_M = 3, max_l = 4, max_k = 4;
    const CountingSweepReport r = verify_counting_sweep(max_M, max_l, max_k);
    Outcome o{{{"max_M", "max_l", "max_k", "cases", "bruteforce_mismatches", "dichotomy_violations", "pass"}, {}},
              {},
              r.ok()};
    o.table.add_row({std::int64_t{max_M}, std::int64_t{max_l}, std::int64_t{max_k}, r.cases, r.bruteforce_mismatches,
                     r.dichotomy_violations, r.ok()});
    o.summary.push_back(std::string(r.ok() ? "PASS" : "FAIL") + " verify-counting grid M<=" + std::to_string(max_M) +
                        " l<=" + std::to_string(max_l) + " |k|<=" + std::to_string(max_k) +
                        ": cases=" + std::to_string(r.cases) + " mismatches=" + std::to_string(r.bruteforce_mismatches) +
                        " violations=" + std::to_string(r.dichotomy_violations));
    return o;
}

Outcome dispatch(const std::string& sub, const ExperimentConfig& config, Execution exec) {
    if (sub == "sample") return run_sample(config, exec);
    if (sub == "density-check") return run_density(config, exec);
    if (sub == "cumulants") return run_cumulants(config, exec);
    if (sub == "mu") return run_mu(config);
    if (sub == "trace-moments") return run_traces(config, exec);
    if (sub == "mock-gauss") return run_mock(config, exec);
    if (sub == "variance-deviation") return run_variance(config);
    if (sub == "verify-counting") return run_verify_counting();
    throw std::invalid_argument("unknown subcommand '" + sub + "'");
}

}  // namespace

int execute(const CliInvocation& inv, std::ostream& out, std::ostream& err) {
    if (std::find(kSubcommands.begin(), kSubcommands.end(), inv.subcommand) == kSubcommands.end()) {
        err << "error: unknown subcommand '" << inv.subcommand << "'\n";
        return 2;
    }
    try {
        ExperimentConfig config;
        if (inv.config_path) {
            config = parse_config(*inv.config_path);
        } else if (inv.subcommand != "verify-counting" && inv.subcommand != "variance-deviation") {
            throw ConfigError("--config is required for '" + inv.subcommand + "'");
        }
        if (inv.seed) config.seed = *inv.seed;
        if (inv.samples) config.samples = *inv.samples;
        if (inv.output) config.output = *inv.output;
        if (inv.format) config.format = *inv.format;
        const ReportFormat format = parse_report_format(config.format);

        configure_threads_from_env();
        const Outcome o = dispatch(inv.subcommand, config, inv.serial ? Execution::Serial : Execution::Parallel);
        const ReportHeader header{config.seed, config_hash(config)};
        std::ostream& status = config.output ? out : err;
        if (config.output)
            emit_report(o.table, *config.output, format, header);
        else
            out << render_report(o.table, format, header);
        for (const auto& line : o.summary) status << line << "\n";
        return o.pass ? 0 : 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Linear statistics of eigenvalues of random matrices from the classical compact groups"};
    app.require_subcommand(1);
    CliInvocation inv;
    std::string config_path, output, format;
    std::uint64_t seed = 0, samples = 0;
    const std::map<std::string, std::string> help = {
        {"sample", "draw eigenphases and write one row per phase"},
        {"density-check", "chi-square test of sampled phases against the one-point density"},
        {"cumulants", "finite-N cumulants of Tr F_L(U) from the Fourier lattice, checked against closed forms"},
        {"mu", "lattice coefficient mu_l(k) for a mode vector k"},
        {"trace-moments", "Haar averages of products of traces against their Gaussian counterparts"},
        {"mock-gauss", "Monte Carlo moments of Tr F_L(U) against finite-N Gaussian predictions"},
        {"variance-deviation", "exact finite-N variance against the limiting variance over a delta/N sweep"},
        {"verify-counting", "exhaustive check of the chain counting rule against brute force"}};
    for (const auto& name : kSubcommands) {
        CLI::App* sub = app.add_subcommand(name, help.at(name));
        sub->add_option("--config", config_path, "JSON run configuration")->check(CLI::ExistingFile);
        sub->add_option("--seed", seed, "RNG seed (overrides the config)");
        sub->add_option("--samples", samples, "Monte Carlo draws (overrides the config)");
        sub->add_option("--output", output, "report path (default: stdout)");
        sub->add_option("--format", format, "report format")->check(CLI::IsMember({"csv", "json"}));
        sub->add_flag("--serial", inv.serial, "use the single-threaded reference path");
    }
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? 0 : 2;
    }
    CLI::App* chosen = app.get_subcommands().front();
    inv.subcommand = chosen->get_name();
    if (chosen->count("--config")) inv.config_path = config_path;
    if (chosen->count("--seed")) inv.seed = seed;
    if (chosen->count("--samples")) inv.samples = samples;
    if (chosen->count("--output")) inv.output = output;
    if (chosen->count("--format")) inv.format = format;
    return execute(inv, out, err);
}

}  // namespace mockgauss
