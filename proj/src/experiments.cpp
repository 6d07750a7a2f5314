#include "mockgauss/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "mockgauss/cumulants.hpp"
#include "mockgauss/quadrature.hpp"
#include "mockgauss/sampling.hpp"

namespace mockgauss {

BandLimitedFunction ExperimentConfig::band_limited_function() const {
    if (!function) throw std::invalid_argument("config field 'function' is required for this experiment");
    if (!(function->delta > 0.0)) throw std::invalid_argument("config field 'function.delta' must be > 0");
    return BandLimitedFunction::parse(function->family, function->delta, function->amplitude);
}

double ExperimentConfig::scale() const {
    if (function && function->scale) return *function->scale;
    return static_cast<double>(require_group().matrix_size());
}

const GroupLabel& ExperimentConfig::require_group() const {
    if (!group) throw std::invalid_argument("config field 'group' is required for this experiment");
    return *group;
}

bool MomentReport::all_pass() const {
    return std::all_of(rows.begin(), rows.end(), [](const MomentRow& r) { return r.pass; });
}

bool mock_gauss_support_ok(Family family, double delta, int m) {
    const double bound = 1.0 / m;
    switch (family) {
        case Family::Unitary: return delta <= 2.0 * bound;
        case Family::Symplectic: return delta <= bound;
        case Family::SpecialOrthogonalEven:
        case Family::SpecialOrthogonalOdd: return delta < bound;
    }
    return false;
}

MomentReport run_mock_gauss(const ExperimentConfig& config, Execution exec) {
    const GroupLabel& group = config.require_group();
    const BandLimitedFunction f = config.band_limited_function();
    if (config.m_max < 1) throw std::invalid_argument("config field 'm_max' must be >= 1");
    if (config.samples < 2) throw std::invalid_argument("config field 'samples' must be >= 2");
    const double scale = config.scale();
    if (!(scale > 0.0)) throw std::invalid_argument("config field 'function.scale' must be > 0");

    const PeriodizedStatistic stat(f, scale);
    const FourierCoefficients<double> g = stat.coefficients();

    MomentReport report{group,
                        scale,
                        predicted_mean(f, group.family()),
                        predicted_variance(f, group.family()),
                        cumulant_group(1, group, g, exec),
                        cumulant_group(2, group, g, exec),
                        mock_gauss_support_ok(group.family(), f.support_radius(), config.m_max),
                        config.samples,
                        {}};

    const int m_max = config.m_max;
    const McPlan plan{config.seed, 0, config.samples};
    const auto stats = monte_carlo(
        group, SamplerKind::Dpp, plan, static_cast<std::size_t>(m_max),
        [&](const EigenphaseSample& sample, std::span<double> out) {
            const double z = linear_statistic(sample, stat);
            double power = 1.0;
            for (int m = 0; m < m_max; ++m) out[m] = (power *= z);
        },
        exec);

    for (int m = 1; m <= m_max; ++m) {
        const RunningStats& s = stats[m - 1];
        const double limit = gaussian_moment(report.limit_mean, report.limit_variance, m);
        const double finite = gaussian_moment(report.finite_mean, report.finite_variance, m);
        // The slack absorbs rounding when the statistic is identically zero.
        const double tol = kMomentPassSigmas * s.stderr_mean() + 1e-12 * (1.0 + std::abs(finite));
        report.rows.push_back({m, s.mean(), s.stderr_mean(), limit, finite, std::abs(s.mean() - finite) <= tol});
    }
    return report;
}

double mean_gap(const GroupLabel& group, const BandLimitedFunction& f) {
    const PeriodizedStatistic stat(f, group.matrix_size());
    const double finite = closed_form::group_c1(group, stat.coefficients());
    return std::abs(finite - predicted_mean(f, group.family()));
}

std::vector<VarianceDeviationRow> run_variance_deviation(const std::string& group_family, FunctionFamily f_family,
                                                         const std::vector<double>& deltas,
                                                         const std::vector<int>& sizes, double amplitude) {
    std::vector<VarianceDeviationRow> rows;
    for (double delta : deltas) {
        const BandLimitedFunction f(f_family, delta, amplitude);
        for (int n : sizes) {
            const GroupLabel group = GroupLabel::parse(group_family, n);
            const PeriodizedStatistic stat(f, n);
            const double finite = closed_form::group_c2(group, stat.coefficients());
            const double limit = predicted_variance(f, group.family());
            rows.push_back({delta, n, finite, limit, std::abs(finite - limit)});
        }
    }
    return rows;
}

std::vector<double> phase_histogram(const std::vector<EigenphaseSample>& samples, Interval domain, int bins) {
    std::vector<double> counts(static_cast<std::size_t>(bins), 0.0);
    const double width = domain.length() / bins;
    for (const auto& s : samples) {
        for (double x : s.phases) {
            int b = static_cast<int>(std::floor((x - domain.lo) / width));
            b = std::clamp(b, 0, bins - 1);
            counts[static_cast<std::size_t>(b)] += 1.0;
        }
    }
    return counts;
}

namespace {

void check_density_inputs(const McPlan& plan, int bins) {
    if (bins < 10) throw std::invalid_argument("density check needs at least 10 bins");
    if (plan.draws < 10000) throw std::invalid_argument("density check needs at least 10^4 draws");
}

}  // namespace

DensityCheckReport run_density_check(const GroupLabel& group, const McPlan& plan, int bins, SamplerKind sampler,
                                     Execution exec) {
    check_density_inputs(plan, bins);
    const WeylKernel kernel(group);
    const Interval domain = kernel.domain();
    const auto samples = sample_batch(group, sampler, plan, exec);
    std::vector<double> observed = phase_histogram(samples, domain, bins);

    // Expected count per bin: draws * int_bin Q(x, x) dx (the one-point
    // density integrates to M over the domain).
    const EigenfunctionBasis basis = eigenfunctions(kernel);
    const double width = domain.length() / bins;
    const int panels = panels_for_frequency(kernel.kernel_index());
    std::vector<double> expected(static_cast<std::size_t>(bins));
    for (int b = 0; b < bins; ++b) {
        const double lo = domain.lo + b * width;
        const double mass = integrate_panels([&](double x) { return basis.kernel(x, x); }, lo, lo + width, panels);
        expected[static_cast<std::size_t>(b)] = static_cast<double>(plan.draws) * mass;
    }

    const ChiSquareResult chi = chi_square_gof(observed, expected);
    return {group, plan.draws, bins, chi, std::move(observed), std::move(expected), chi.p_value > kDensityPValueFloor};
}

TwoSampleReport run_sampler_comparison(const GroupLabel& group, const McPlan& plan, int bins, Execution exec) {
    check_density_inputs(plan, bins);
    const Interval domain = WeylKernel(group).domain();
    // Disjoint stream ranges for the two samplers.
    McPlan qr_plan = plan;
    qr_plan.base_stream = plan.base_stream + plan.num_chunks();
    const auto a = phase_histogram(sample_batch(group, SamplerKind::Dpp, plan, exec), domain, bins);
    const auto b = phase_histogram(sample_batch(group, SamplerKind::Qr, qr_plan, exec), domain, bins);
    const ChiSquareResult chi = chi_square_two_sample(a, b);
    return {group, chi, chi.p_value > kDensityPValueFloor};
}

}  // namespace mockgauss
