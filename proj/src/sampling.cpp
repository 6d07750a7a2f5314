#include "mockgauss/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace mockgauss {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr int kMaxRedraws = 16;

double wrap_to_half_open(double theta) {
    // (-pi, pi]
    if (theta <= -kPi) return kPi;
    return theta;
}

}  // namespace

DppSampler::DppSampler(const WeylKernel& kernel)
    : kernel_(kernel),
      basis_(eigenfunctions(kernel)),
      max_freq_(0),
      projection_(kernel.num_phases(), kernel.num_phases()),
      phi_(kernel.num_phases()) {
    for (const auto& fn : basis_.functions()) max_freq_ = std::max(max_freq_, fn.twice_freq);
    density_.cos_coef.assign(max_freq_, 0.0);
    density_.sin_coef.assign(max_freq_, 0.0);
}

void DppSampler::build_density(const Eigen::MatrixXd& projection, double rank, TrigDensity& out) const {
    using Kind = BasisFunction::Kind;
    out.c0 = 0.0;
    std::fill(out.cos_coef.begin(), out.cos_coef.end(), 0.0);
    std::fill(out.sin_coef.begin(), out.sin_coef.end(), 0.0);

    auto add_cos = [&](int f, double w) {
        if (f == 0)
            out.c0 += w;
        else
            out.cos_coef[f - 1] += w;
    };
    auto add_sin = [&](int f, double w) {
        if (f > 0)
            out.sin_coef[f - 1] += w;
        else if (f < 0)
            out.sin_coef[-f - 1] -= w;
    };

    const auto& fns = basis_.functions();
    const int m = static_cast<int>(fns.size());
    for (int a = 0; a < m; ++a) {
        for (int b = 0; b < m; ++b) {
            const double w = 0.5 * projection(a, b) * fns[a].norm * fns[b].norm / rank;
            if (w == 0.0) continue;
            // Twice-frequencies share parity within a basis, so these are integers.
            const int sum = (fns[a].twice_freq + fns[b].twice_freq) / 2;
            const int diff = (fns[a].twice_freq - fns[b].twice_freq) / 2;
            const Kind ka = fns[a].kind;
            const Kind kb = fns[b].kind;
            if (ka == Kind::Cos && kb == Kind::Cos) {
                add_cos(std::abs(diff), w);
                add_cos(sum, w);
            } else if (ka == Kind::Sin && kb == Kind::Sin) {
                add_cos(std::abs(diff), w);
                add_cos(sum, -w);
            } else if (ka == Kind::Sin) {
                add_sin(sum, w);
                add_sin(diff, w);
            } else {
                add_sin(sum, w);
                add_sin(diff, -w);
            }
        }
    }
}

double DppSampler::invert_cdf(const TrigDensity& d, double u) const {
    const Interval dom = kernel_.domain();
    const int fmax = max_freq_;

    // Returns the CDF from dom.lo and the density at x.
    auto eval = [&](double x, double& pdf) {
        const std::complex<double> step(std::cos(x), std::sin(x));
        const std::complex<double> step_lo(std::cos(dom.lo), std::sin(dom.lo));
        std::complex<double> z = step;
        std::complex<double> z_lo = step_lo;
        double cdf = d.c0 * (x - dom.lo);
        pdf = d.c0;
        for (int f = 1; f <= fmax; ++f) {
            const double a = d.cos_coef[f - 1];
            const double b = d.sin_coef[f - 1];
            pdf += a * z.real() + b * z.imag();
            cdf += (a * (z.imag() - z_lo.imag()) - b * (z.real() - z_lo.real())) / f;
            z *= step;
            z_lo *= step_lo;
        }
        return cdf;
    };

    double pdf = 0.0;
    const double total = eval(dom.hi, pdf);
    const double target = u * total;
    double lo = dom.lo;
    double hi = dom.hi;
    double x = dom.lo + u * dom.length();
    for (int it = 0; it < 200; ++it) {
        const double resid = eval(x, pdf) - target;
        if (resid < 0.0)
            lo = x;
        else
            hi = x;
        double next = (pdf > 0.0) ? x - resid / pdf : 0.5 * (lo + hi);
        if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
        if (std::abs(next - x) <= 1e-15 * (1.0 + std::abs(x)) || hi - lo <= 1e-15) return next;
        x = next;
    }
    return x;
}

void DppSampler::sample_into(RngStream& rng, std::vector<double>& out) {
    const int m = kernel_.num_phases();
    out.resize(m);
    projection_.setIdentity();
    for (int k = 0; k < m; ++k) {
        const double rank = static_cast<double>(m - k);
        build_density(projection_, rank, density_);
        int attempts = 0;
        while (true) {
            const double x = invert_cdf(density_, rng.uniform());
            basis_.evaluate(x, std::span<double>(phi_.data(), phi_.size()));
            const Eigen::VectorXd v = projection_ * phi_;
            const double s = phi_.dot(v);
            if (s > 1e-12) {
                projection_.noalias() -= (v * v.transpose()) / s;
                out[k] = kernel_.group().is_unitary() ? wrap_to_half_open(x) : x;
                break;
            }
            if (++attempts > kMaxRedraws)
                throw SamplerRankError("reduced projection lost rank after " + std::to_string(k) + " points");
        }
    }
}

EigenphaseSample DppSampler::sample(RngStream& rng) {
    EigenphaseSample s{kernel_.group(), {}};
    sample_into(rng, s.phases);
    return s;
}

EigenphaseSample sample_eigenphases(const WeylKernel& kernel, RngStream& rng) {
    DppSampler sampler(kernel);
    return sampler.sample(rng);
}

Eigen::MatrixXcd sample_haar_matrix(const GroupLabel& group, RngStream& rng) {
    const int n = group.matrix_size();
    if (group.family() == Family::Symplectic)
        throw std::invalid_argument("QR sampler does not support Sp(N)");

    if (group.is_unitary()) {
        Eigen::MatrixXcd z(n, n);
        const double scale = 1.0 / std::sqrt(2.0);
        for (int j = 0; j < n; ++j)
            for (int i = 0; i < n; ++i) z(i, j) = std::complex<double>(rng.normal(), rng.normal()) * scale;
        Eigen::HouseholderQR<Eigen::MatrixXcd> qr(z);
        Eigen::MatrixXcd q = qr.householderQ();
        for (int j = 0; j < n; ++j) {
            const std::complex<double> r = qr.matrixQR()(j, j);
            q.col(j) *= r / std::abs(r);
        }
        return q;
    }

    while (true) {
        Eigen::MatrixXd z(n, n);
        for (int j = 0; j < n; ++j)
            for (int i = 0; i < n; ++i) z(i, j) = rng.normal();
        Eigen::HouseholderQR<Eigen::MatrixXd> qr(z);
        Eigen::MatrixXd q = qr.householderQ();
        for (int j = 0; j < n; ++j)
            if (qr.matrixQR()(j, j) < 0.0) q.col(j) *= -1.0;
        if (q.determinant() > 0.0) return q.cast<std::complex<double>>();
    }
}

std::vector<double> fold_eigenvalues(const GroupLabel& group, const Eigen::VectorXcd& eigenvalues,
                                     std::optional<std::complex<double>>* discarded) {
    std::vector<double> phases;
    if (group.is_unitary()) {
        for (const auto& z : eigenvalues) phases.push_back(wrap_to_half_open(std::arg(z)));
        return phases;
    }

    std::vector<std::complex<double>> rest(eigenvalues.begin(), eigenvalues.end());
    if (group.family() == Family::SpecialOrthogonalOdd) {
        auto it = std::min_element(rest.begin(), rest.end(), [](const auto& a, const auto& b) {
            return std::abs(a - 1.0) < std::abs(b - 1.0);
        });
        if (discarded) *discarded = *it;
        rest.erase(it);
    } else if (discarded) {
        discarded->reset();
    }

    std::vector<double> folded;
    folded.reserve(rest.size());
    for (const auto& z : rest) folded.push_back(std::abs(std::arg(z)));
    std::sort(folded.begin(), folded.end());
    // Conjugate pairs are adjacent after sorting.
    for (std::size_t i = 0; i + 1 < folded.size(); i += 2) phases.push_back(0.5 * (folded[i] + folded[i + 1]));
    return phases;
}

EigenphaseSample sample_matrix_qr(const GroupLabel& group, RngStream& rng,
                                  std::optional<std::complex<double>>* discarded) {
    const Eigen::MatrixXcd u = sample_haar_matrix(group, rng);
    Eigen::VectorXcd eig;
    if (group.is_unitary()) {
        Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(u, false);
        if (solver.info() != Eigen::Success) throw std::runtime_error("eigensolver failed");
        eig = solver.eigenvalues();
    } else {
        Eigen::EigenSolver<Eigen::MatrixXd> solver(u.real(), false);
        if (solver.info() != Eigen::Success) throw std::runtime_error("eigensolver failed");
        eig = solver.eigenvalues();
    }
    return {group, fold_eigenvalues(group, eig, discarded)};
}

std::vector<double> full_spectrum(const EigenphaseSample& sample) {
    if (sample.group.is_unitary()) return sample.phases;
    std::vector<double> spectrum;
    spectrum.reserve(sample.group.matrix_size());
    for (double t : sample.phases) {
        spectrum.push_back(wrap_to_half_open(-t));
        spectrum.push_back(t);
    }
    if (sample.group.family() == Family::SpecialOrthogonalOdd) spectrum.push_back(0.0);
    std::sort(spectrum.begin(), spectrum.end());
    return spectrum;
}

double trace_power(const EigenphaseSample& sample, int j) {
    double acc = 0.0;
    if (sample.group.is_unitary()) {
        for (double t : sample.phases) acc += std::cos(j * t);
        return acc;
    }
    for (double t : sample.phases) acc += 2.0 * std::cos(j * t);
    if (sample.group.family() == Family::SpecialOrthogonalOdd) acc += 1.0;
    return acc;
}

}  // namespace mockgauss
