#pragma once

// Reference implementations used only by the tests. They avoid the library's
// kernel/lattice machinery: Haar averages come from the explicit Weyl
// integration densities, integrated by tensor Gauss-Legendre quadrature.

#include <cmath>
#include <functional>
#include <numbers>
#include <random>
#include <span>
#include <vector>

#include "mockgauss/cumulants.hpp"
#include "mockgauss/fourier.hpp"
#include "mockgauss/group.hpp"
#include "mockgauss/moments.hpp"
#include "mockgauss/quadrature.hpp"

namespace oracle {

using mockgauss::Family;
using mockgauss::FourierCoefficients;
using mockgauss::GroupLabel;
using mockgauss::Rational;

inline constexpr double pi = std::numbers::pi;

/// Weyl density of the M independent eigenphases, written out directly.
inline double weyl_density(const GroupLabel& group, std::span<const double> t) {
    const int M = group.num_phases();
    double vdm = 1.0;
    switch (group.family()) {
        case Family::Unitary: {
            for (int i = 0; i < M; ++i)
                for (int j = i + 1; j < M; ++j) {
                    const double s = 2.0 * std::sin((t[i] - t[j]) / 2.0);
                    vdm *= s * s;
                }
            double fact = 1.0;
            for (int i = 2; i <= M; ++i) fact *= i;
            return vdm / (fact * std::pow(2.0 * pi, M));
        }
        default: break;
    }
    for (int i = 0; i < M; ++i)
        for (int j = i + 1; j < M; ++j) {
            const double d = std::cos(t[i]) - std::cos(t[j]);
            vdm *= d * d;
        }
    double fact = 1.0;
    for (int i = 2; i <= M; ++i) fact *= i;
    const double base = fact * std::pow(pi, M);
    double extra = 1.0;
    int power = M * M;
    switch (group.family()) {
        case Family::Symplectic:
            for (int i = 0; i < M; ++i) extra *= std::sin(t[i]) * std::sin(t[i]);
            break;
        case Family::SpecialOrthogonalEven: power = (M - 1) * (M - 1); break;
        case Family::SpecialOrthogonalOdd:
            for (int i = 0; i < M; ++i) extra *= std::sin(t[i] / 2.0) * std::sin(t[i] / 2.0);
            break;
        case Family::Unitary: break;
    }
    return std::ldexp(1.0, power) * extra * vdm / base;
}

/// Haar average of F(phases) for groups with M <= 2.
inline double haar_average(const GroupLabel& group, const std::function<double(std::span<const double>)>& F,
                           int panels = 24) {
    const int M = group.num_phases();
    const double lo = group.is_unitary() ? -pi : 0.0;
    const double hi = pi;
    if (M == 1) {
        return mockgauss::integrate_panels(
            [&](double x) {
                const double t[1] = {x};
                return weyl_density(group, t) * F(t);
            },
            lo, hi, panels);
    }
    if (M == 2) {
        return mockgauss::integrate_panels(
            [&](double x) {
                return mockgauss::integrate_panels(
                    [&](double y) {
                        const double t[2] = {x, y};
                        return weyl_density(group, t) * F(t);
                    },
                    lo, hi, panels);
            },
            lo, hi, panels);
    }
    throw std::invalid_argument("haar_average oracle handles M <= 2");
}

/// Tr g(U) for real even g given by its coefficients.
inline double trace_of(const GroupLabel& group, const FourierCoefficients<double>& g, std::span<const double> t) {
    auto eval = [&](double x) {
        double s = 0.0;
        for (const auto& [k, v] : g.entries()) s += v * std::cos(k * x);
        return s;
    };
    double acc = group.family() == Family::SpecialOrthogonalOdd ? eval(0.0) : 0.0;
    for (double x : t) acc += group.is_unitary() ? eval(x) : eval(x) + eval(-x);
    return acc;
}

/// Cumulants C_1..C_L of Tr g(U) from quadrature moments (M <= 2).
inline std::vector<double> quadrature_cumulants(const GroupLabel& group, const FourierCoefficients<double>& g, int L,
                                                int panels = 24) {
    std::vector<double> raw(L + 1, 1.0);
    for (int n = 1; n <= L; ++n)
        raw[n] = haar_average(
            group, [&](std::span<const double> t) { return std::pow(trace_of(group, g, t), n); }, panels);
    return mockgauss::cumulants_from_raw_moments<double>(raw, L);
}

/// Random rational coefficients p/q on |k| <= max_mode.
inline FourierCoefficients<Rational> random_rational_g(std::mt19937_64& rng, int max_mode, bool even) {
    std::uniform_int_distribution<int> num(-6, 6);
    std::uniform_int_distribution<int> den(1, 5);
    FourierCoefficients<Rational> g(even);
    for (int k = even ? 0 : -max_mode; k <= max_mode; ++k) g.set(k, Rational(num(rng), den(rng)));
    return g;
}

}  // namespace oracle
