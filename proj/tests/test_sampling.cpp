#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "doctest.h"
#include "mockgauss/parallel.hpp"
#include "mockgauss/rng.hpp"
#include "mockgauss/sampling.hpp"
#include "mockgauss/stats.hpp"

using namespace mockgauss;
using std::numbers::pi;

TEST_CASE("rng streams are reproducible and distinct") {
    RngStream a(42, 7), b(42, 7), c(42, 8), d(43, 7);
    std::vector<std::uint64_t> va, vb, vc, vd;
    for (int i = 0; i < 16; ++i) {
        va.push_back(a.next_u64());
        vb.push_back(b.next_u64());
        vc.push_back(c.next_u64());
        vd.push_back(d.next_u64());
    }
    CHECK(va == vb);
    CHECK(va != vc);
    CHECK(va != vd);

    RngStream u(1, 0);
    RunningStats s, n;
    for (int i = 0; i < 200000; ++i) {
        const double x = u.uniform();
        REQUIRE(x >= 0.0);
        REQUIRE(x < 1.0);
        s.push(x);
        n.push(u.normal());
    }
    CHECK(std::abs(s.mean() - 0.5) < 4 * s.stderr_mean());
    CHECK(std::abs(n.mean()) < 4 * n.stderr_mean());
    CHECK(n.variance() == doctest::Approx(1.0).epsilon(0.02));
}

TEST_CASE("running stats merge equals a single pass") {
    RunningStats all, left, right;
    RngStream rng(9, 0);
    for (int i = 0; i < 1000; ++i) {
        const double x = rng.normal() * 3 + 1;
        all.push(x);
        (i < 377 ? left : right).push(x);
    }
    left.merge(right);
    CHECK(left.count() == all.count());
    CHECK(left.mean() == doctest::Approx(all.mean()).epsilon(1e-13));
    CHECK(left.variance() == doctest::Approx(all.variance()).epsilon(1e-12));
}

TEST_CASE("DPP samples have M phases inside the domain") {
    for (const char* fam : {"U", "Sp", "SO"}) {
        for (int n = 2; n <= 9; ++n) {
            if (std::string(fam) == "Sp" && n % 2) continue;
            const GroupLabel group = GroupLabel::parse(fam, n);
            const WeylKernel kernel(group);
            RngStream rng(3, static_cast<std::uint64_t>(n));
            for (int i = 0; i < 50; ++i) {
                const EigenphaseSample s = sample_eigenphases(kernel, rng);
                REQUIRE(s.phases.size() == static_cast<std::size_t>(group.num_phases()));
                for (double x : s.phases) CHECK(kernel.domain().contains(x));
                CHECK(joint_density(kernel, s.phases) > 0.0);
            }
        }
    }
}

TEST_CASE("full spectrum and linear statistics") {
    const double a = 0.4, b = 2.1, c = -1.3;
    auto sorted = [](std::vector<double> v) {
        std::sort(v.begin(), v.end());
        return v;
    };
    CHECK(full_spectrum({GroupLabel::parse("SO", 5), {a, b}}) == sorted({-b, -a, 0.0, a, b}));
    CHECK(full_spectrum({GroupLabel::parse("Sp", 4), {a, b}}) == sorted({-b, -a, a, b}));
    CHECK(full_spectrum({GroupLabel::parse("U", 3), {a, b, c}}) == std::vector<double>{a, b, c});

    const EigenphaseSample sp2{GroupLabel::parse("Sp", 2), {pi / 2}};
    CHECK(linear_statistic(sp2, [](double) { return 1.0; }) == 2.0);
    CHECK(linear_statistic(sp2, [](double t) { return 2 * std::cos(t); }) == doctest::Approx(0.0));
    const EigenphaseSample so3{GroupLabel::parse("SO", 3), {pi}};
    CHECK(linear_statistic(so3, [](double t) { return 2 * std::cos(2 * t); }) == doctest::Approx(6.0));
    CHECK(trace_power(so3, 1) == doctest::Approx(1.0 + 2 * std::cos(pi)));
}

TEST_CASE("QR sampler produces Haar matrices in the right group") {
    RngStream rng(21, 0);
    for (const char* fam : {"U", "SO"}) {
        for (int n : {2, 3, 4, 5}) {
            const GroupLabel group = GroupLabel::parse(fam, n);
            const Eigen::MatrixXcd U = sample_haar_matrix(group, rng);
            CHECK((U.adjoint() * U - Eigen::MatrixXcd::Identity(n, n)).norm() < 1e-12);
            if (group.is_orthogonal()) {
                CHECK(U.imag().norm() == 0.0);
                CHECK(U.determinant().real() == doctest::Approx(1.0));
            }
        }
    }
    CHECK_THROWS(sample_haar_matrix(GroupLabel::parse("Sp", 4), rng));

    std::optional<std::complex<double>> discarded;
    const EigenphaseSample s = sample_matrix_qr(GroupLabel::parse("SO", 3), rng, &discarded);
    CHECK(s.phases.size() == 1);
    REQUIRE(discarded.has_value());
    CHECK(std::abs(*discarded - std::complex<double>(1.0, 0.0)) < 1e-10);
}

TEST_CASE("folding conjugate eigenvalue pairs") {
    Eigen::VectorXcd ev(5);
    ev << std::polar(1.0, 0.7), std::polar(1.0, -0.7), std::polar(1.0, 2.0), std::polar(1.0, -2.0), 1.0;
    std::optional<std::complex<double>> discarded;
    auto phases = fold_eigenvalues(GroupLabel::parse("SO", 5), ev, &discarded);
    std::sort(phases.begin(), phases.end());
    REQUIRE(phases.size() == 2);
    CHECK(phases[0] == doctest::Approx(0.7));
    CHECK(phases[1] == doctest::Approx(2.0));
    CHECK(discarded.has_value());
}

TEST_CASE("SO(2) DPP rotation angle is uniform (KS)") {
    const auto samples = sample_batch(GroupLabel::parse("SO", 2), SamplerKind::Dpp, McPlan{5, 0, 100000});
    std::vector<double> x;
    for (const auto& s : samples) x.push_back(s.phases[0]);
    std::sort(x.begin(), x.end());
    const double d = ks_statistic(std::span<const double>(x), [](double t) { return t / pi; });
    CHECK(kolmogorov_sf(std::sqrt(static_cast<double>(x.size())) * d) > 1e-3);
}

TEST_CASE("SO(2) QR rotation angle is uniform (KS)") {
    const auto samples = sample_batch(GroupLabel::parse("SO", 2), SamplerKind::Qr, McPlan{6, 0, 100000});
    std::vector<double> x;
    for (const auto& s : samples) x.push_back(s.phases[0]);
    std::sort(x.begin(), x.end());
    const double d = ks_statistic(std::span<const double>(x), [](double t) { return t / pi; });
    CHECK(kolmogorov_sf(std::sqrt(static_cast<double>(x.size())) * d) > 1e-3);
}

TEST_CASE("Sp(2) angle histogram matches (2/pi) sin^2") {
    const int bins = 40;
    const std::uint64_t draws = 100000;
    const auto samples = sample_batch(GroupLabel::parse("Sp", 2), SamplerKind::Dpp, McPlan{8, 0, draws});
    std::vector<double> counts(bins, 0.0);
    for (const auto& s : samples) counts[std::min(bins - 1, static_cast<int>(s.phases[0] / pi * bins))] += 1;
    auto cdf = [](double t) { return (t - std::sin(t) * std::cos(t)) / pi; };
    double worst = 0.0;
    for (int b = 0; b < bins; ++b) {
        const double p = cdf(pi * (b + 1) / bins) - cdf(pi * b / bins);
        const double se = std::sqrt(draws * p * (1 - p));
        worst = std::max(worst, std::abs(counts[b] - draws * p) / se);
    }
    CHECK(worst < 5.0);
}

TEST_CASE("E|Tr U|^2 = 1 on U(4) for both samplers") {
    const GroupLabel u4 = GroupLabel::parse("U", 4);
    for (SamplerKind kind : {SamplerKind::Dpp, SamplerKind::Qr}) {
        const auto stats = monte_carlo(u4, kind, McPlan{13, 0, 50000}, 1,
                                       [](const EigenphaseSample& s, std::span<double> out) {
                                           std::complex<double> tr = 0.0;
                                           for (double t : s.phases) tr += std::polar(1.0, t);
                                           out[0] = std::norm(tr);
                                       });
        CHECK(std::abs(stats[0].mean() - 1.0) < 4 * stats[0].stderr_mean());
    }
}

TEST_CASE("serial and parallel Monte Carlo agree bitwise") {
#ifdef _OPENMP
    omp_set_num_threads(4);
#endif
    for (const char* fam : {"Sp", "SO", "U"}) {
        const GroupLabel group = GroupLabel::parse(fam, 6);
        for (SamplerKind kind : {SamplerKind::Dpp, SamplerKind::Qr}) {
            if (kind == SamplerKind::Qr && fam == std::string("Sp")) continue;
            const McPlan plan{77, 3, 5000, 333};
            auto per_draw = [](const EigenphaseSample& s, std::span<double> out) {
                out[0] = trace_power(s, 1);
                out[1] = trace_power(s, 2) * trace_power(s, 3);
            };
            const auto serial = monte_carlo(group, kind, plan, 2, per_draw, Execution::Serial);
            const auto parallel = monte_carlo(group, kind, plan, 2, per_draw, Execution::Parallel);
            for (int i = 0; i < 2; ++i) {
                CHECK(serial[i].count() == parallel[i].count());
                CHECK(serial[i].mean() == parallel[i].mean());
                CHECK(serial[i].variance() == parallel[i].variance());
            }
            const auto a = sample_batch(group, kind, plan, Execution::Serial);
            const auto b = sample_batch(group, kind, plan, Execution::Parallel);
            REQUIRE(a.size() == b.size());
            bool same = true;
            for (std::size_t i = 0; i < a.size(); ++i) same = same && a[i].phases == b[i].phases;
            CHECK(same);
        }
    }
}
