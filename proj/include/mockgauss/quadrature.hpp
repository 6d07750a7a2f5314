#pragma once

#include <algorithm>
#include <cmath>

#include <boost/math/quadrature/gauss.hpp>

namespace mockgauss {

/// Composite 20-point Gauss-Legendre rule on `panels` equal panels of [a, b].
/// Exact up to rounding for trigonometric polynomials resolved by the panel
/// width.
template <class F>
double integrate_panels(F&& f, double a, double b, int panels) {
    using Rule = boost::math::quadrature::gauss<double, 20>;
    panels = std::max(1, panels);
    const double h = (b - a) / panels;
    double acc = 0.0;
    for (int p = 0; p < panels; ++p) {
        const double lo = a + p * h;
        acc += Rule::integrate(f, lo, lo + h);
    }
    return acc;
}

/// Panel count giving at least `4 * max_freq` nodes over the interval plus a
/// safety margin.
inline int panels_for_frequency(double max_freq) {
    return std::max(2, static_cast<int>(std::ceil(4.0 * (max_freq + 2.0) / 20.0)) * 2);
}

}  // namespace mockgauss
