#include "mockgauss/cumulants.hpp"

#include <cstdlib>

#include "mockgauss/counting.hpp"

namespace mockgauss {

namespace detail {

void check_order(int l) {
    if (l < 1 || l > kMaxCumulantOrder)
        throw std::out_of_range("cumulant order must be in 1.." + std::to_string(kMaxCumulantOrder) + ", got " +
                                std::to_string(l));
}

std::uint64_t multiset_count(std::size_t support, int l) {
    // C(support + l - 1, l), saturating.
    long double c = 1.0L;
    for (int i = 1; i <= l; ++i) c = c * static_cast<long double>(support + l - i) / static_cast<long double>(i);
    return c > 1e18L ? std::uint64_t{1} << 62 : static_cast<std::uint64_t>(c + 0.5L);
}

void for_each_multiset(std::span<const int> support, int l, int first,
                       const std::function<void(std::span<const int>, std::int64_t)>& visit) {
    std::int64_t factorial = 1;
    for (int i = 2; i <= l; ++i) factorial *= i;
    const int s = static_cast<int>(support.size());
    std::vector<int> idx(l, first);
    std::vector<int> k(l);

    auto emit = [&] {
        std::int64_t denom = 1;
        int run = 1;
        for (int i = 1; i <= l; ++i) {
            if (i < l && idx[i] == idx[i - 1]) {
                ++run;
            } else {
                for (int r = 2; r <= run; ++r) denom *= r;
                run = 1;
            }
        }
        for (int i = 0; i < l; ++i) k[i] = support[idx[i]];
        visit(k, factorial / denom);
    };

    // Odometer over non-decreasing idx[1..l-1] >= first, idx[0] fixed.
    while (true) {
        emit();
        int pos = l - 1;
        while (pos >= 1 && idx[pos] == s - 1) --pos;
        if (pos < 1) break;
        ++idx[pos];
        for (int i = pos + 1; i < l; ++i) idx[i] = idx[pos];
    }
}

}  // namespace detail

namespace {

template <class PerConfig>
std::int64_t sum_over_configurations(int l, std::span<const int> k, PerConfig&& per_config) {
    std::int64_t total = 0;
    long sums[kMaxCumulantOrder];
    for (const auto& config : cyclic_configurations(l)) {
        const int m = config.partition.blocks();
        std::span<long> big_k(sums, m);
        block_sums_into(config.partition, k, big_k);
        total += config.sign * per_config(m, std::span<const long>(big_k));
    }
    return total;
}

void check_length(int l, std::span<const int> k) {
    detail::check_order(l);
    if (static_cast<int>(k.size()) != l)
        throw std::invalid_argument("mode vector has length " + std::to_string(k.size()) + ", expected " +
                                    std::to_string(l));
}

}  // namespace

std::int64_t mu_unitary(int l, int n, std::span<const int> k) {
    check_length(l, k);
    return sum_over_configurations(l, k, [&](int, std::span<const long> big_k) {
        return count_unitary_chains(n, big_k);
    });
}

std::int64_t mu_odd_scaled(int l, int kernel_index, std::span<const int> k) {
    check_length(l, k);
    const ModeWindow window = ModeWindow::for_kernel_index(kernel_index);
    return sum_over_configurations(l, k, [&](int m, std::span<const long> big_k) {
        std::int64_t count = 0;
        for (const auto& eps : sign_vectors(m, -1)) count += count_solutions_from_sums(window, big_k, eps);
        return count << (l - m);
    });
}

std::int64_t mu_even_direct_scaled(int l, int kernel_index, std::span<const int> k) {
    check_length(l, k);
    const ModeWindow window = ModeWindow::for_kernel_index(kernel_index);
    return sum_over_configurations(l, k, [&](int m, std::span<const long> big_k) {
        std::int64_t count = 0;
        for (const auto& eps : sign_vectors(m, +1)) count += count_chain_solutions(window, big_k, eps);
        return count << (l - m);
    });
}

std::int64_t mu_even_scaled(int l, int kernel_index, std::span<const int> k) {
    return mu_unitary(l, kernel_index, k) << (l - 1);
}

std::int64_t mu_group(int l, const GroupLabel& group, std::span<const int> k) {
    const int idx = group.kernel_index();
    switch (group.family()) {
        case Family::Unitary: return mu_unitary(l, group.matrix_size(), k);
        case Family::Symplectic: return mu_even_scaled(l, idx, k) - mu_odd_scaled(l, idx, k);
        case Family::SpecialOrthogonalEven: return mu_even_scaled(l, idx, k) + mu_odd_scaled(l, idx, k);
        case Family::SpecialOrthogonalOdd:
            return mu_even_scaled(l, idx, k) - mu_odd_scaled(l, idx, k) + (l == 1 ? 1 : 0);
    }
    return 0;
}

std::int64_t mu_coefficient(int l, const GroupLabel& group, std::span<const int> k) {
    if (l < 1 || l > 5) throw std::out_of_range("mu_coefficient supports orders 1..5");
    for (int kj : k)
        if (std::abs(kj) > 12) throw std::out_of_range("mu_coefficient supports |k_j| <= 12");
    return mu_group(l, group, k);
}

}  // namespace mockgauss
