#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mockgauss/group.hpp"
#include "mockgauss/parallel.hpp"
#include "mockgauss/stats.hpp"
#include "mockgauss/test_functions.hpp"

namespace mockgauss {

struct FunctionConfig {
    std::string family = "fejer";
    double delta = 0.0;
    std::optional<double> scale;  // defaults to the matrix size N
    double amplitude = 1.0;
};

/// Everything a run needs; produced by parse_config plus CLI overrides.
struct ExperimentConfig {
    std::optional<std::string> experiment;
    std::optional<GroupLabel> group;
    /// Family tag from the config even when no single size is given (sweeps).
    std::optional<std::string> group_family;
    std::optional<FunctionConfig> function;
    int m_max = 3;
    std::uint64_t samples = 100000;
    std::uint64_t seed = 1;
    std::optional<std::string> output;
    std::string format = "csv";
    // Subcommand-specific inputs.
    std::optional<int> order;
    std::vector<int> k;
    std::vector<int> profile;
    std::vector<double> deltas;
    std::vector<int> n_list;
    int bins = 40;
    std::string sampler = "dpp";

    BandLimitedFunction band_limited_function() const;
    /// The scale L (function.scale, or N).
    double scale() const;
    const GroupLabel& require_group() const;
};

struct MomentRow {
    int order;
    double mc_estimate;
    double mc_stderr;
    double gaussian_limit;       // Gaussian moment from the scaling-limit mean/variance
    double finite_n_prediction;  // Gaussian moment from the finite-N C_1, C_2
    bool pass;
};

struct MomentReport {
    GroupLabel group;
    double scale;
    double limit_mean;
    double limit_variance;
    double finite_mean;
    double finite_variance;
    bool support_condition_met;
    std::uint64_t samples;
    std::vector<MomentRow> rows;

    bool all_pass() const;
};

inline constexpr double kMomentPassSigmas = 4.0;

/// Support condition under which the first m moments are asymptotically
/// Gaussian: delta <= 2/m (U), delta <= 1/m (Sp), delta < 1/m (SO).
bool mock_gauss_support_ok(Family family, double delta, int m);

/// Raw moments 1..m_max of Z_f = Tr F_L(U) by Monte Carlo, checked against
/// Gaussian moments built from the finite-N mean and variance.
MomentReport run_mock_gauss(const ExperimentConfig& config, Execution exec = Execution::Parallel);

/// |C_1^{G(N)}(F_N) - limiting mean| for f at L = N.
double mean_gap(const GroupLabel& group, const BandLimitedFunction& f);

struct VarianceDeviationRow {
    double delta;
    int n;
    double finite_variance;
    double limit_variance;
    double deviation;
};

/// Exact finite-N variance C_2 of Tr F_N(U) against 2 int_{-1/2}^{1/2} |u| f^(u)^2 du.
std::vector<VarianceDeviationRow> run_variance_deviation(const std::string& group_family, FunctionFamily f_family,
                                                         const std::vector<double>& deltas,
                                                         const std::vector<int>& sizes, double amplitude = 1.0);

struct DensityCheckReport {
    GroupLabel group;
    std::uint64_t samples;
    int bins;
    ChiSquareResult chi_square;
    std::vector<double> observed;
    std::vector<double> expected;
    bool pass;
};

inline constexpr double kDensityPValueFloor = 1e-3;

/// Histogram of all sampled phases against the one-point density Q(x,x)/M.
DensityCheckReport run_density_check(const GroupLabel& group, const McPlan& plan, int bins,
                                     SamplerKind sampler = SamplerKind::Dpp, Execution exec = Execution::Parallel);

/// Binned phase counts (all M phases of every draw) over the kernel domain.
std::vector<double> phase_histogram(const std::vector<EigenphaseSample>& samples, Interval domain, int bins);

struct TwoSampleReport {
    GroupLabel group;
    ChiSquareResult chi_square;
    bool pass;
};

/// DPP sampler against the QR sampler (not for Sp).
TwoSampleReport run_sampler_comparison(const GroupLabel& group, const McPlan& plan, int bins,
                                       Execution exec = Execution::Parallel);

}  // namespace mockgauss
