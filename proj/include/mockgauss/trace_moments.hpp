#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mockgauss/group.hpp"
#include "mockgauss/parallel.hpp"

namespace mockgauss {

/// Exponents a_1..a_J of prod_j (Tr U^j)^{a_j}.
struct PowerProfile {
    std::vector<int> a;  // a[j - 1] = a_j

    explicit PowerProfile(std::vector<int> exponents);

    int max_power() const { return static_cast<int>(a.size()); }
    int exponent(int j) const { return j >= 1 && j <= max_power() ? a[j - 1] : 0; }
    /// sum_j j a_j
    int weight() const;
    std::string to_string() const;
};

/// 1 for even j, 0 for odd j.
constexpr int eta(int j) { return j % 2 == 0 ? 1 : 0; }

/// E prod_j (sqrt(j) Z_j + c_j)^{a_j}, Z_j iid standard normal, with
/// c_j = -eta_j (Sp) or +eta_j (SO). Independent of N.
double gaussian_side(const PowerProfile& profile, Family family);

/// prod_j (Tr U^j)^{a_j} for one configuration of independent phases.
double trace_product(const PowerProfile& profile, const EigenphaseSample& sample);

struct McEstimate {
    double estimate;
    double stderr_mean;
    std::uint64_t samples;
};

/// Monte Carlo mean of prod (Tr U^j)^{a_j} over Haar-random U (DPP sampler).
McEstimate mc_trace_moment(const PowerProfile& profile, const GroupLabel& group, const McPlan& plan,
                           Execution exec = Execution::Parallel);

/// Several profiles estimated from the same draws.
std::vector<McEstimate> mc_trace_moments(const std::vector<PowerProfile>& profiles, const GroupLabel& group,
                                         const McPlan& plan, Execution exec = Execution::Parallel);

/// Exact integral of the trace product against the Weyl density, M <= 2.
double quadrature_trace_moment(const PowerProfile& profile, const GroupLabel& group);

struct TraceMomentReport {
    GroupLabel group;
    PowerProfile profile;
    int weight;
    int weight_limit;  // N + 1 for Sp, N - 1 for SO
    bool condition_met;
    double gaussian_value;
    double checked_value;
    double checked_stderr;  // 0 for quadrature
    bool by_quadrature;
    bool agreement;
};

inline constexpr double kQuadratureAgreementTol = 1e-8;
inline constexpr double kMcAgreementSigmas = 4.0;

/// Compares the Haar average with the Gaussian side. Uses quadrature when
/// M <= 2 unless `force_mc`, Monte Carlo otherwise.
TraceMomentReport check_trace_moment(const PowerProfile& profile, const GroupLabel& group, const McPlan& plan,
                                     bool force_mc = false, Execution exec = Execution::Parallel);

/// All profiles with 1 <= weight <= max_weight.
std::vector<PowerProfile> profiles_up_to_weight(int max_weight);

}  // namespace mockgauss
