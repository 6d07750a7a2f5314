#include "mockgauss/test_functions.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include <boost/math/quadrature/gauss_kronrod.hpp>

namespace mockgauss {

namespace {

constexpr double kPi = std::numbers::pi;

// Adaptive Gauss-Kronrod on [a, b]; kinks of the integrands sit on panel ends.
template <class F>
double integrate_adaptive(F&& f, double a, double b) {
    if (b <= a) return 0.0;
    double error = 0.0;
    return boost::math::quadrature::gauss_kronrod<double, 31>::integrate(f, a, b, 15, 1e-13, &error);
}

}  // namespace

BandLimitedFunction::BandLimitedFunction(FunctionFamily family, double delta, double amplitude)
    : family_(family), delta_(delta), amplitude_(amplitude) {
    if (!(delta > 0.0) || !std::isfinite(delta))
        throw std::invalid_argument("support radius delta must be positive and finite");
    if (!std::isfinite(amplitude)) throw std::invalid_argument("amplitude must be finite");
}

BandLimitedFunction BandLimitedFunction::parse(std::string_view family, double delta, double amplitude) {
    if (family == "fejer" || family == "Fejer" || family == "FejerTriangle")
        return {FunctionFamily::Fejer, delta, amplitude};
    if (family == "raised_cosine" || family == "RaisedCosine")
        return {FunctionFamily::RaisedCosine, delta, amplitude};
    throw std::invalid_argument("unknown function family '" + std::string(family) +
                                "' (expected fejer or raised_cosine)");
}

std::string BandLimitedFunction::family_name() const {
    return family_ == FunctionFamily::Fejer ? "fejer" : "raised_cosine";
}

double BandLimitedFunction::fourier(double u) const {
    const double a = std::abs(u);
    if (a >= delta_) return 0.0;
    switch (family_) {
        case FunctionFamily::Fejer: return amplitude_ * (1.0 - a / delta_);
        case FunctionFamily::RaisedCosine: return amplitude_ * 0.5 * (1.0 + std::cos(kPi * a / delta_));
    }
    return 0.0;
}

double BandLimitedFunction::value(double x) const {
    switch (family_) {
        case FunctionFamily::Fejer: {
            const double y = kPi * delta_ * x;
            if (std::abs(y) < 1e-6) return amplitude_ * delta_ * (1.0 - y * y / 3.0);
            const double s = std::sin(y) / y;
            return amplitude_ * delta_ * s * s;
        }
        case FunctionFamily::RaisedCosine: {
            const double t = std::abs(2.0 * delta_ * x);
            if (t < 1e-6) return amplitude_ * delta_ * (1.0 - kPi * kPi * t * t / 6.0 + t * t);
            if (std::abs(t - 1.0) < 1e-6) {
                // sin(pi t) / (1 - t^2) -> pi/2 at t = 1, with slope -pi/4 in t.
                return amplitude_ * delta_ * (kPi / 2.0 - kPi / 4.0 * (t - 1.0)) / (kPi * t);
            }
            return amplitude_ * delta_ * std::sin(kPi * t) / (kPi * t * (1.0 - t * t));
        }
    }
    return 0.0;
}

PeriodizedStatistic::PeriodizedStatistic(BandLimitedFunction f, double scale) : f_(f), scale_(scale) {
    if (!(scale > 0.0) || !std::isfinite(scale)) throw std::invalid_argument("scale L must be positive");
    // fourier() returns exactly 0 at |k/L| >= delta, so probe near the edge.
    int k = static_cast<int>(std::floor(f_.support_radius() * scale_)) + 1;
    while (k > 0 && f_.fourier(k / scale_) == 0.0) --k;
    max_mode_ = k;
}

double PeriodizedStatistic::coefficient(int k) const {
    if (std::abs(k) > max_mode_) return 0.0;
    return f_.fourier(k / scale_) / scale_;
}

double PeriodizedStatistic::operator()(double theta) const {
    double acc = coefficient(0);
    for (int k = 1; k <= max_mode_; ++k) acc += 2.0 * coefficient(k) * std::cos(k * theta);
    return acc;
}

double PeriodizedStatistic::periodization_sum(double theta, int j_max) const {
    double acc = 0.0;
    for (int j = -j_max; j <= j_max; ++j) acc += f_.value(scale_ * (theta + 2.0 * kPi * j) / (2.0 * kPi));
    return acc;
}

FourierCoefficients<double> PeriodizedStatistic::coefficients() const {
    FourierCoefficients<double> g(true);
    for (int k = 0; k <= max_mode_; ++k) g.set(k, coefficient(k));
    return g;
}

double predicted_mean(const BandLimitedFunction& f, Family family) {
    if (family == Family::Unitary) return f.fourier(0.0);
    const double edge = std::min(1.0, f.support_radius());
    const double tail = integrate_adaptive([&](double u) { return f.fourier(u); }, 0.0, edge);
    return family == Family::Symplectic ? f.fourier(0.0) - tail : f.fourier(0.0) + tail;
}

double predicted_variance(const BandLimitedFunction& f, Family family) {
    const double delta = f.support_radius();
    if (family == Family::Unitary) {
        // 2 int_0^delta min(u, 1) f^(u)^2 du, split at u = 1.
        auto sq = [&](double u) { const double v = f.fourier(u); return v * v; };
        const double inner = integrate_adaptive([&](double u) { return u * sq(u); }, 0.0, std::min(delta, 1.0));
        const double outer = delta > 1.0 ? integrate_adaptive(sq, 1.0, delta) : 0.0;
        return 2.0 * (inner + outer);
    }
    const double edge = std::min(0.5, delta);
    return 4.0 * integrate_adaptive([&](double u) { const double v = f.fourier(u); return u * v * v; }, 0.0, edge);
}

double gaussian_moment(double mean, double variance, int m) {
    if (m < 0) throw std::invalid_argument("moment order must be nonnegative");
    // sum_i C(m, 2i) (2i - 1)!! variance^i mean^{m - 2i}
    double acc = 0.0;
    double binom = 1.0;       // C(m, 2i)
    double double_fact = 1.0; // (2i - 1)!!
    for (int i = 0; 2 * i <= m; ++i) {
        if (i > 0) {
            binom *= static_cast<double>((m - 2 * i + 2) * (m - 2 * i + 1)) / static_cast<double>((2 * i - 1) * (2 * i));
            double_fact *= 2 * i - 1;
        }
        acc += binom * double_fact * std::pow(variance, i) * std::pow(mean, m - 2 * i);
    }
    return acc;
}

}  // namespace mockgauss
