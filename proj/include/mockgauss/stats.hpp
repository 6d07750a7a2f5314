#pragma once

#include <span>
#include <vector>

namespace mockgauss {

struct ChiSquareResult {
    double statistic;
    int dof;
    double p_value;
};

/// Pearson goodness of fit of observed counts against expected counts.
ChiSquareResult chi_square_gof(std::span<const double> observed, std::span<const double> expected);

/// Two-sample chi-square homogeneity test on binned counts. Bins empty in
/// both samples are dropped.
ChiSquareResult chi_square_two_sample(std::span<const double> counts_a, std::span<const double> counts_b);

/// Upper tail of the chi-square distribution.
double chi_square_sf(double statistic, int dof);

/// One-sample Kolmogorov-Smirnov statistic sup |F_n - F| for sorted data.
template <class Cdf>
double ks_statistic(std::span<const double> sorted, Cdf&& cdf) {
    const double n = static_cast<double>(sorted.size());
    double d = 0.0;
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        const double f = cdf(sorted[i]);
        const double lo = f - static_cast<double>(i) / n;
        const double hi = static_cast<double>(i + 1) / n - f;
        d = lo > d ? lo : d;
        d = hi > d ? hi : d;
    }
    return d;
}

/// Asymptotic Kolmogorov p-value P(sqrt(n) D > lambda).
double kolmogorov_sf(double lambda);

}  // namespace mockgauss
