#include "mockgauss/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace mockgauss {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kSingularCutoff = 1e-8;

}  // namespace

double dirichlet_eval(int n, double z) {
    const double half = 0.5 * z;
    const double s = std::sin(half);
    if (std::abs(s) < kSingularCutoff) {
        // z = 2 pi j + d: S_N(z) = (-1)^{j (N + 1)} N / (2 pi) + O(d^2).
        const double j = std::nearbyint(z / (2.0 * kPi));
        const bool flip = (static_cast<long long>(j) % 2 != 0) && (n % 2 == 0);
        return (flip ? -1.0 : 1.0) * n / (2.0 * kPi);
    }
    return std::sin(n * half) / (2.0 * kPi * s);
}

WeylKernel::WeylKernel(GroupLabel group) : group_(group) {
    switch (group_.family()) {
        case Family::Unitary:
            combination_ = KernelCombination::PlainDifference;
            domain_ = {-kPi, kPi};
            break;
        case Family::Symplectic:
            combination_ = KernelCombination::DifferenceMinus;
            domain_ = {0.0, kPi};
            break;
        case Family::SpecialOrthogonalEven:
            combination_ = KernelCombination::SumPlus;
            domain_ = {0.0, kPi};
            break;
        case Family::SpecialOrthogonalOdd:
            combination_ = KernelCombination::DifferenceMinus;
            domain_ = {0.0, kPi};
            fixed_ = {0.0};
            break;
    }
}

double WeylKernel::operator()(double x, double y) const {
    if (!domain_.contains(x) || !domain_.contains(y)) {
        throw std::domain_error("kernel argument outside [" + std::to_string(domain_.lo) + ", " +
                                std::to_string(domain_.hi) + "]");
    }
    const int idx = kernel_index();
    switch (combination_) {
        case KernelCombination::PlainDifference: return dirichlet_eval(idx, x - y);
        case KernelCombination::DifferenceMinus: return dirichlet_eval(idx, x - y) - dirichlet_eval(idx, x + y);
        case KernelCombination::SumPlus: return dirichlet_eval(idx, x - y) + dirichlet_eval(idx, x + y);
    }
    return 0.0;
}

double BasisFunction::operator()(double x) const {
    const double arg = 0.5 * twice_freq * x;
    return norm * (kind == Kind::Cos ? std::cos(arg) : std::sin(arg));
}

void EigenfunctionBasis::evaluate(double x, std::span<double> out) const {
    for (std::size_t i = 0; i < functions_.size(); ++i) out[i] = functions_[i](x);
}

double EigenfunctionBasis::kernel(double x, double y) const {
    double acc = 0.0;
    for (const auto& phi : functions_) acc += phi(x) * phi(y);
    return acc;
}

EigenfunctionBasis eigenfunctions(const WeylKernel& kernel) {
    using Kind = BasisFunction::Kind;
    const int m = kernel.num_phases();
    const double inv_sqrt_pi = 1.0 / std::sqrt(kPi);
    const double sqrt_2_over_pi = std::sqrt(2.0 / kPi);
    std::vector<BasisFunction> fns;
    fns.reserve(m);

    switch (kernel.group().family()) {
        case Family::Unitary: {
            const int n = kernel.kernel_index();
            if (n % 2 == 1) {
                // S_{2K+1}(x - y) = 1/(2 pi) + (1/pi) sum_{k=1}^{K} cos k(x - y)
                fns.push_back({Kind::Cos, 0, 1.0 / std::sqrt(2.0 * kPi)});
                for (int k = 1; 2 * k + 1 <= n; ++k) {
                    fns.push_back({Kind::Cos, 2 * k, inv_sqrt_pi});
                    fns.push_back({Kind::Sin, 2 * k, inv_sqrt_pi});
                }
            } else {
                // S_{2K}(x - y) = (1/pi) sum_{j=1}^{K} cos((2j - 1)(x - y)/2)
                for (int j = 1; 2 * j <= n; ++j) {
                    fns.push_back({Kind::Cos, 2 * j - 1, inv_sqrt_pi});
                    fns.push_back({Kind::Sin, 2 * j - 1, inv_sqrt_pi});
                }
            }
            break;
        }
        case Family::Symplectic:
            for (int n = 1; n <= m; ++n) fns.push_back({Kind::Sin, 2 * n, sqrt_2_over_pi});
            break;
        case Family::SpecialOrthogonalEven:
            fns.push_back({Kind::Cos, 0, inv_sqrt_pi});
            for (int n = 1; n < m; ++n) fns.push_back({Kind::Cos, 2 * n, sqrt_2_over_pi});
            break;
        case Family::SpecialOrthogonalOdd:
            for (int j = 1; j <= m; ++j) fns.push_back({Kind::Sin, 2 * j - 1, sqrt_2_over_pi});
            break;
    }
    return EigenfunctionBasis(std::move(fns), kernel.domain());
}

double joint_density(const WeylKernel& kernel, std::span<const double> angles) {
    const int m = kernel.num_phases();
    if (static_cast<int>(angles.size()) != m) {
        throw std::invalid_argument("joint_density expects " + std::to_string(m) + " angles, got " +
                                    std::to_string(angles.size()));
    }
    Eigen::MatrixXd q(m, m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) q(i, j) = kernel(angles[i], angles[j]);
    // Rounding can push a singular configuration slightly negative.
    return std::max(0.0, q.determinant());
}

}  // namespace mockgauss
