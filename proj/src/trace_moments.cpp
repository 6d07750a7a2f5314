#include "mockgauss/trace_moments.hpp"

#include <cmath>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "mockgauss/kernels.hpp"
#include "mockgauss/quadrature.hpp"

namespace mockgauss {

namespace {

void require_sp_or_so(Family family) {
    if (family == Family::Unitary)
        throw std::invalid_argument("trace moments are defined here for Sp and SO only (real traces)");
}

// E (sqrt(j) Z + c)^a = sum_i C(a, 2i) (2i - 1)!! j^i c^{a - 2i}
double shifted_gaussian_moment(int j, double c, int a) {
    double acc = 0.0;
    double binom = 1.0;
    double double_fact = 1.0;
    for (int i = 0; 2 * i <= a; ++i) {
        if (i > 0) {
            binom *= static_cast<double>((a - 2 * i + 2) * (a - 2 * i + 1)) / static_cast<double>((2 * i - 1) * (2 * i));
            double_fact *= 2 * i - 1;
        }
        acc += binom * double_fact * std::pow(static_cast<double>(j), i) * std::pow(c, a - 2 * i);
    }
    return acc;
}

// prod_j (Tr U^j)^{a_j} from independent phases.
double trace_product_from_phases(const PowerProfile& profile, Family family, std::span<const double> phases) {
    double prod = 1.0;
    for (int j = 1; j <= profile.max_power(); ++j) {
        const int a = profile.exponent(j);
        if (a == 0) continue;
        double tr = family == Family::SpecialOrthogonalOdd ? 1.0 : 0.0;
        for (double t : phases) tr += 2.0 * std::cos(j * t);
        prod *= std::pow(tr, a);
    }
    return prod;
}

}  // namespace

PowerProfile::PowerProfile(std::vector<int> exponents) : a(std::move(exponents)) {
    if (a.size() > 12) throw std::invalid_argument("power profiles support j <= 12");
    for (int x : a)
        if (x < 0) throw std::invalid_argument("exponents a_j must be nonnegative");
}

int PowerProfile::weight() const {
    int w = 0;
    for (int j = 1; j <= max_power(); ++j) w += j * a[j - 1];
    return w;
}

std::string PowerProfile::to_string() const {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < a.size(); ++i) os << (i ? "," : "") << a[i];
    os << ")";
    return os.str();
}

double gaussian_side(const PowerProfile& profile, Family family) {
    require_sp_or_so(family);
    const double sign = family == Family::Symplectic ? -1.0 : 1.0;
    double prod = 1.0;
    for (int j = 1; j <= profile.max_power(); ++j) prod *= shifted_gaussian_moment(j, sign * eta(j), profile.exponent(j));
    return prod;
}

double trace_product(const PowerProfile& profile, const EigenphaseSample& sample) {
    require_sp_or_so(sample.group.family());
    return trace_product_from_phases(profile, sample.group.family(), sample.phases);
}

std::vector<McEstimate> mc_trace_moments(const std::vector<PowerProfile>& profiles, const GroupLabel& group,
                                         const McPlan& plan, Execution exec) {
    require_sp_or_so(group.family());
    if (plan.draws < 2) throw std::invalid_argument("Monte Carlo needs at least 2 samples");
    const auto stats = monte_carlo(
        group, SamplerKind::Dpp, plan, profiles.size(),
        [&](const EigenphaseSample& s, std::span<double> out) {
            for (std::size_t p = 0; p < profiles.size(); ++p) out[p] = trace_product(profiles[p], s);
        },
        exec);
    std::vector<McEstimate> out;
    for (const auto& st : stats) out.push_back({st.mean(), st.stderr_mean(), st.count()});
    return out;
}

McEstimate mc_trace_moment(const PowerProfile& profile, const GroupLabel& group, const McPlan& plan, Execution exec) {
    return mc_trace_moments({profile}, group, plan, exec).front();
}

double quadrature_trace_moment(const PowerProfile& profile, const GroupLabel& group) {
    require_sp_or_so(group.family());
    const WeylKernel kernel(group);
    const int m = kernel.num_phases();
    if (m > 2) throw std::invalid_argument("quadrature trace moments need M <= 2, got M=" + std::to_string(m));
    const Interval dom = kernel.domain();
    const int panels = panels_for_frequency(profile.weight() + group.matrix_size() + 2);
    const Family family = group.family();

    if (m == 1) {
        return integrate_panels(
            [&](double x) {
                const double phases[1] = {x};
                return trace_product_from_phases(profile, family, phases) * kernel(x, x);
            },
            dom.lo, dom.hi, panels);
    }
    // Det Q has total mass M! = 2 over the ordered pairs.
    return 0.5 * integrate_panels(
                     [&](double x) {
                         return integrate_panels(
                             [&](double y) {
                                 const double phases[2] = {x, y};
                                 return trace_product_from_phases(profile, family, phases) *
                                        joint_density(kernel, phases);
                             },
                             dom.lo, dom.hi, panels);
                     },
                     dom.lo, dom.hi, panels);
}

TraceMomentReport check_trace_moment(const PowerProfile& profile, const GroupLabel& group, const McPlan& plan,
                                     bool force_mc, Execution exec) {
    require_sp_or_so(group.family());
    const int n = group.matrix_size();
    const int limit = group.family() == Family::Symplectic ? n + 1 : n - 1;
    TraceMomentReport r{group, profile, profile.weight(), limit, profile.weight() <= limit,
                        gaussian_side(profile, group.family()), 0.0, 0.0, false, false};
    if (group.num_phases() <= 2 && !force_mc) {
        r.checked_value = quadrature_trace_moment(profile, group);
        r.by_quadrature = true;
        r.agreement = std::abs(r.checked_value - r.gaussian_value) <= kQuadratureAgreementTol;
    } else {
        const McEstimate est = mc_trace_moment(profile, group, plan, exec);
        r.checked_value = est.estimate;
        r.checked_stderr = est.stderr_mean;
        r.agreement = std::abs(est.estimate - r.gaussian_value) <= kMcAgreementSigmas * est.stderr_mean + 1e-12;
    }
    return r;
}

std::vector<PowerProfile> profiles_up_to_weight(int max_weight) {
    std::vector<PowerProfile> out;
    std::vector<int> a(std::max(max_weight, 0), 0);
    // Enumerate exponent vectors by recursion on j.
    std::function<void(int, int)> rec = [&](int j, int remaining) {
        if (j > max_weight) {
            int last = static_cast<int>(a.size());
            while (last > 0 && a[last - 1] == 0) --last;
            if (last > 0) out.emplace_back(std::vector<int>(a.begin(), a.begin() + last));
            return;
        }
        for (int x = 0; x * j <= remaining; ++x) {
            a[j - 1] = x;
            rec(j + 1, remaining - x * j);
        }
        a[j - 1] = 0;
    };
    if (max_weight >= 1) rec(1, max_weight);
    return out;
}

}  // namespace mockgauss
