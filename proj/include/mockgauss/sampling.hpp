#pragma once

#include <complex>
#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "mockgauss/group.hpp"
#include "mockgauss/kernels.hpp"
#include "mockgauss/rng.hpp"

namespace mockgauss {

/// One draw of the M independent eigenphases of a Haar-random matrix. The
/// forced eigenvalue 1 of SO(2M+1) is implied by the group, never stored.
struct EigenphaseSample {
    GroupLabel group;
    std::vector<double> phases;
};

/// Thrown when the sequential DPP sampler meets a degenerate conditional
/// density (the reduced projection lost rank).
class SamplerRankError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Sequential sampler for the projection determinantal process of a Weyl
/// kernel. After k points the conditional intensity is
/// Phi(x)^T P Phi(x) / (M - k), where P projects onto the part of the range
/// orthogonal to the points already drawn. That intensity is a trigonometric
/// polynomial with integer frequencies, so its CDF is available in closed form
/// and each coordinate is drawn by inversion.
class DppSampler {
public:
    explicit DppSampler(const WeylKernel& kernel);

    const WeylKernel& kernel() const { return kernel_; }

    EigenphaseSample sample(RngStream& rng);
    /// Writes M phases into `out` without allocating a sample.
    void sample_into(RngStream& rng, std::vector<double>& out);

private:
    // Conditional density c0 + sum_f (cos_f cos(f x) + sin_f sin(f x)).
    struct TrigDensity {
        double c0 = 0.0;
        std::vector<double> cos_coef;  // index f - 1
        std::vector<double> sin_coef;
    };

    void build_density(const Eigen::MatrixXd& projection, double rank, TrigDensity& out) const;
    double invert_cdf(const TrigDensity& density, double u) const;

    WeylKernel kernel_;
    EigenfunctionBasis basis_;
    int max_freq_;
    Eigen::MatrixXd projection_;
    Eigen::VectorXd phi_;
    TrigDensity density_;
};

/// Draws one configuration from the determinantal density of `kernel`.
EigenphaseSample sample_eigenphases(const WeylKernel& kernel, RngStream& rng);

/// Haar-random matrix by Gaussian QR with diagonal phase/sign correction. SO
/// draws with determinant -1 are rejected. Not available for Sp.
Eigen::MatrixXcd sample_haar_matrix(const GroupLabel& group, RngStream& rng);

/// Independent eigenphases of a matrix in `group`, given its eigenvalues.
/// Conjugate pairs are folded into [0, pi]; for SO(2M+1) the eigenvalue
/// nearest 1 is removed and reported through `discarded`.
std::vector<double> fold_eigenvalues(const GroupLabel& group, const Eigen::VectorXcd& eigenvalues,
                                     std::optional<std::complex<double>>* discarded = nullptr);

/// Oracle sampler: Haar matrix via QR, then eigen-decomposition.
EigenphaseSample sample_matrix_qr(const GroupLabel& group, RngStream& rng,
                                  std::optional<std::complex<double>>* discarded = nullptr);

/// All N eigenphases in (-pi, pi] implied by the independent phases.
std::vector<double> full_spectrum(const EigenphaseSample& sample);

/// sum of g over the full spectrum.
template <class G>
double linear_statistic(const EigenphaseSample& sample, G&& g) {
    double acc = 0.0;
    for (double theta : full_spectrum(sample)) acc += g(theta);
    return acc;
}

/// Re Tr U^j computed from the phases; exact trace for Sp and SO.
double trace_power(const EigenphaseSample& sample, int j);

}  // namespace mockgauss
