#pragma once

// Weyl kernels for Haar measure on U(N), Sp(2M), SO(2M) and SO(2M+1).
//
// Every kernel is built from the Dirichlet kernel
//
//     S_N(z) = sin(N z / 2) / (2 pi sin(z / 2))
//
// and is a rank-M projection on its domain T. The joint density of the M
// independent eigenphases is Det{Q(theta_i, theta_j)}.
//
//     U(N)       Q = S_N(x - y)                  T = (-pi, pi]   M = N
//     Sp(2M)     Q = S_{N+1}(x - y) - S_{N+1}(x + y)   T = [0, pi]
//     SO(2M)     Q = S_{N-1}(x - y) + S_{N-1}(x + y)   T = [0, pi]
//     SO(2M+1)   Q = S_{N-1}(x - y) - S_{N-1}(x + y)   T = [0, pi], 1 is fixed

#include <span>
#include <vector>

#include "mockgauss/group.hpp"

namespace mockgauss {

/// S_N(z). Uses the limiting value near z = 0 (mod 2 pi); for even N the
/// limit at odd multiples of 2 pi is -N/(2 pi).
double dirichlet_eval(int n, double z);

enum class KernelCombination { PlainDifference, DifferenceMinus, SumPlus };

struct Interval {
    double lo;
    double hi;
    bool contains(double x) const { return x >= lo && x <= hi; }
    double length() const { return hi - lo; }
};

class WeylKernel {
public:
    explicit WeylKernel(GroupLabel group);

    const GroupLabel& group() const { return group_; }
    int num_phases() const { return group_.num_phases(); }
    int kernel_index() const { return group_.kernel_index(); }
    KernelCombination combination() const { return combination_; }
    /// Angles always present in the spectrum ({0} for SO(2M+1), else empty).
    const std::vector<double>& fixed_eigenvalues() const { return fixed_; }
    Interval domain() const { return domain_; }

    /// Q(x, y); throws std::domain_error outside T.
    double operator()(double x, double y) const;

private:
    GroupLabel group_;
    KernelCombination combination_;
    std::vector<double> fixed_;
    Interval domain_;
};

/// One trigonometric basis function norm * cos(f x) or norm * sin(f x) with
/// f = twice_freq / 2.
struct BasisFunction {
    enum class Kind { Cos, Sin };
    Kind kind;
    int twice_freq;
    double norm;

    double operator()(double x) const;
};

/// Orthonormal basis phi_1..phi_M of the range of a Weyl kernel, so that
/// Q(x, y) = sum_n phi_n(x) phi_n(y).
class EigenfunctionBasis {
public:
    explicit EigenfunctionBasis(std::vector<BasisFunction> functions, Interval domain)
        : functions_(std::move(functions)), domain_(domain) {}

    std::size_t size() const { return functions_.size(); }
    const BasisFunction& operator[](std::size_t i) const { return functions_[i]; }
    const std::vector<BasisFunction>& functions() const { return functions_; }
    Interval domain() const { return domain_; }

    void evaluate(double x, std::span<double> out) const;
    /// sum_n phi_n(x) phi_n(y)
    double kernel(double x, double y) const;

private:
    std::vector<BasisFunction> functions_;
    Interval domain_;
};

EigenfunctionBasis eigenfunctions(const WeylKernel& kernel);

/// Det{Q(theta_i, theta_j)}, the joint density of the M independent phases.
double joint_density(const WeylKernel& kernel, std::span<const double> angles);

}  // namespace mockgauss
