#include <cmath>
#include <numbers>

#include "doctest.h"
#include "mockgauss/quadrature.hpp"
#include "mockgauss/test_functions.hpp"

using namespace mockgauss;
using std::numbers::pi;

namespace {

// f(x) = int f^(u) cos(2 pi u x) du, by quadrature of the transform.
double inverse_transform(const BandLimitedFunction& f, double x) {
    const double d = f.support_radius();
    return 2.0 * integrate_panels([&](double u) { return f.fourier(u) * std::cos(2 * pi * u * x); }, 0.0, d,
                                  64 + static_cast<int>(8 * d * std::abs(x)));
}

// Upper bound on sum_{|j| > J} |f(L (theta + 2 pi j) / 2 pi)| for |theta| <= pi.
double periodization_tail_bound(const BandLimitedFunction& f, double L, int J) {
    const double A = std::abs(f.amplitude());
    const double d = f.support_radius();
    const double X = L * (J - 0.5);  // smallest |x| among the dropped terms
    if (f.family() == FunctionFamily::Fejer) return 2.0 * A / (pi * pi * d * L * L * (J - 0.5));
    // |f(x)| <= A d / (pi t (t^2 - 1)) <= 2 A d / (pi t^3) for t = 2 d |x| >= 2
    const double t = 2 * d * X;
    REQUIRE(t >= 2.0);
    return 2.0 * (2 * A * d / pi) * (1.0 / (t * t * t) + 1.0 / (2 * d * L * t * t));
}

}  // namespace

TEST_CASE("Fourier transforms and their support") {
    const BandLimitedFunction fejer(FunctionFamily::Fejer, 0.5, 2.0);
    CHECK(fejer.fourier(0.0) == doctest::Approx(2.0));
    CHECK(fejer.fourier(0.25) == doctest::Approx(1.0));
    CHECK(fejer.fourier(-0.25) == doctest::Approx(1.0));
    CHECK(fejer.fourier(0.5) == 0.0);
    CHECK(fejer.fourier(0.7) == 0.0);

    const BandLimitedFunction rc = BandLimitedFunction::parse("raised_cosine", 0.4);
    CHECK(rc.fourier(0.0) == doctest::Approx(1.0));
    CHECK(rc.fourier(0.2) == doctest::Approx(0.5));
    CHECK(rc.fourier(0.4) == 0.0);
    CHECK_THROWS(BandLimitedFunction::parse("box", 0.4));
}

TEST_CASE("values agree with inversion of the transform") {
    for (auto family : {FunctionFamily::Fejer, FunctionFamily::RaisedCosine}) {
        for (double delta : {0.2, 0.5, 1.3}) {
            const BandLimitedFunction f(family, delta, 1.7);
            CHECK(f.value(0.0) == doctest::Approx(1.7 * delta));
            for (double x : {-7.3, -1.0 / (2 * delta), -0.4, 1e-9, 0.01, 0.3, 1.0 / (2 * delta), 2.5, 11.0}) {
                CAPTURE(x);
                CHECK(f.value(x) == doctest::Approx(inverse_transform(f, x)).epsilon(1e-10).scale(1.0));
            }
        }
    }
}

TEST_CASE("Fourier coefficients of the periodized function") {
    const BandLimitedFunction f(FunctionFamily::Fejer, 0.5);
    const PeriodizedStatistic F(f, 4.0);
    CHECK(F.coefficient(1) == doctest::Approx(1.0 / 8));
    CHECK(F.coefficient(-1) == doctest::Approx(1.0 / 8));
    CHECK(F.coefficient(3) == 0.0);
    CHECK(F.coefficient(0) == doctest::Approx(1.0 / 4));
    CHECK(F.max_mode() == 1);
    CHECK(F.coefficients().is_even());

    // Integration oracle: (1/2pi) int F_L(theta) e^{-ik theta} with |j| <= 50.
    for (auto family : {FunctionFamily::Fejer, FunctionFamily::RaisedCosine}) {
        const BandLimitedFunction g(family, 0.5);
        const PeriodizedStatistic G(g, 4.0);
        const int J = 50;
        const double tol = periodization_tail_bound(g, 4.0, J) + 1e-12;
        for (int k = 0; k <= 3; ++k) {
            const double c = integrate_panels(
                                 [&](double t) { return G.periodization_sum(t, J) * std::cos(k * t); }, -pi, pi, 64) /
                             (2 * pi);
            CAPTURE(k);
            CHECK(std::abs(c - G.coefficient(k)) <= tol);
        }
    }
}

TEST_CASE("Fourier series equals the periodization sum within the tail bound") {
    for (auto family : {FunctionFamily::Fejer, FunctionFamily::RaisedCosine}) {
        for (double L : {4.0, 12.0, 7.5}) {
            const BandLimitedFunction f(family, 1.0 / 3);
            const PeriodizedStatistic F(f, L);
            for (int J : {50, 400}) {
                const double tol = periodization_tail_bound(f, L, J) + 1e-12;
                for (double t : {-pi, -2.0, -0.1, 0.0, 0.5, 1.9, pi}) {
                    CAPTURE(t);
                    CHECK(std::abs(F(t) - F.periodization_sum(t, J)) <= tol);
                }
            }
        }
    }
}

TEST_CASE("zero function") {
    const PeriodizedStatistic F(BandLimitedFunction(FunctionFamily::Fejer, 0.3, 0.0), 10.0);
    CHECK(F(1.0) == 0.0);
    CHECK(F.coefficients().support().empty());
    CHECK(predicted_variance(F.function(), Family::Symplectic) == 0.0);
}

TEST_CASE("limiting mean and variance") {
    const BandLimitedFunction f(FunctionFamily::Fejer, 0.5);
    CHECK(predicted_mean(f, Family::Symplectic) == doctest::Approx(0.75));
    CHECK(predicted_mean(f, Family::SpecialOrthogonalEven) == doctest::Approx(1.25));
    CHECK(predicted_mean(f, Family::SpecialOrthogonalOdd) == doctest::Approx(1.25));
    CHECK(predicted_mean(f, Family::Unitary) == doctest::Approx(1.0));
    CHECK(predicted_variance(f, Family::Symplectic) == doctest::Approx(1.0 / 12));
    CHECK(predicted_variance(f, Family::SpecialOrthogonalOdd) == doctest::Approx(1.0 / 12));
    CHECK(predicted_variance(f, Family::Unitary) == doctest::Approx(1.0 / 24));

    // Closed forms for Fejer with delta <= 1/2: Sp/SO variance delta^2/3, U variance delta^2/6.
    for (double d : {0.1, 0.25, 0.4}) {
        const BandLimitedFunction g(FunctionFamily::Fejer, d);
        CHECK(predicted_mean(g, Family::Symplectic) == doctest::Approx(1 - d / 2));
        CHECK(predicted_variance(g, Family::Symplectic) == doctest::Approx(d * d / 3));
        CHECK(predicted_variance(g, Family::Unitary) == doctest::Approx(d * d / 6));
    }
    // Past u = 1 the unitary weight saturates: int min(|u|, 1) f^2 by direct quadrature.
    const BandLimitedFunction wide(FunctionFamily::RaisedCosine, 1.6);
    const double direct = 2 * integrate_panels(
                                  [&](double u) { return std::min(u, 1.0) * std::pow(wide.fourier(u), 2); }, 0.0,
                                  1.6, 400);
    CHECK(predicted_variance(wide, Family::Unitary) == doctest::Approx(direct).epsilon(1e-9));
}

TEST_CASE("gaussian moments") {
    CHECK(gaussian_moment(0.0, 1.0, 4) == doctest::Approx(3.0));
    CHECK(gaussian_moment(1.0, 2.0, 3) == doctest::Approx(7.0));
    CHECK(gaussian_moment(1.5, 0.0, 5) == doctest::Approx(std::pow(1.5, 5)));
    CHECK(gaussian_moment(0.0, 2.0, 6) == doctest::Approx(15.0 * 8.0));
    CHECK(gaussian_moment(0.3, 0.5, 1) == doctest::Approx(0.3));
}
