#include "mockgauss/stats.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <boost/math/distributions/chi_squared.hpp>

namespace mockgauss {

double chi_square_sf(double statistic, int dof) {
    if (dof < 1) throw std::invalid_argument("chi-square needs at least one degree of freedom");
    boost::math::chi_squared dist(dof);
    return boost::math::cdf(boost::math::complement(dist, std::max(0.0, statistic)));
}

ChiSquareResult chi_square_gof(std::span<const double> observed, std::span<const double> expected) {
    if (observed.size() != expected.size() || observed.size() < 2)
        throw std::invalid_argument("chi-square needs matching bins, at least 2");
    double stat = 0.0;
    for (std::size_t i = 0; i < observed.size(); ++i) {
        if (!(expected[i] > 0.0)) throw std::invalid_argument("expected counts must be positive");
        const double d = observed[i] - expected[i];
        stat += d * d / expected[i];
    }
    const int dof = static_cast<int>(observed.size()) - 1;
    return {stat, dof, chi_square_sf(stat, dof)};
}

ChiSquareResult chi_square_two_sample(std::span<const double> a, std::span<const double> b) {
    if (a.size() != b.size()) throw std::invalid_argument("two-sample chi-square needs matching bins");
    double total_a = 0.0;
    double total_b = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        total_a += a[i];
        total_b += b[i];
    }
    if (total_a <= 0.0 || total_b <= 0.0) throw std::invalid_argument("empty sample");
    const double ka = std::sqrt(total_b / total_a);
    const double kb = std::sqrt(total_a / total_b);
    double stat = 0.0;
    int used = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] + b[i] == 0.0) continue;
        const double d = ka * a[i] - kb * b[i];
        stat += d * d / (a[i] + b[i]);
        ++used;
    }
    const int dof = used - 1;
    return {stat, dof, chi_square_sf(stat, dof)};
}

double kolmogorov_sf(double lambda) {
    if (lambda <= 0.0) return 1.0;
    if (lambda < 0.2) return 1.0;
    double sum = 0.0;
    for (int k = 1; k <= 100; ++k) {
        const double term = std::exp(-2.0 * k * k * lambda * lambda);
        sum += (k % 2 == 1 ? term : -term);
        if (term < 1e-17) break;
    }
    return std::clamp(2.0 * sum, 0.0, 1.0);
}

}  // namespace mockgauss
