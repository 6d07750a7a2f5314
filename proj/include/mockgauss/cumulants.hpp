#pragma once

// Cumulants of Tr g(U) as Fourier-lattice sums
//
//     C_l(g) = sum_{k in Z^l} mu_l(k) g_{k_1} ... g_{k_l}
//
// where mu_l(k) collects, over partitions sigma of {1..l} into m blocks and
// the (m - 1)! cyclic orders of the blocks, the signed number of mode chains
// compatible with the block sums of k. Coefficients are computed as exact
// integers; the lattice sum runs over any scalar type (double or Rational).
//
// Sp/SO cumulants split into an even part (sign vectors with product +1) and
// an odd part (product -1):
//
//     Sp(2M):    C_l = 2^l C^even_{l,2M+1} - 2^l C^odd_{l,2M+1}
//     SO(2M):    C_l = 2^l C^even_{l,2M-1} + 2^l C^odd_{l,2M-1}
//     SO(2M+1):  C_l = 2^l C^even_{l,2M}   - 2^l C^odd_{l,2M}   (+ sum_k g_k for l = 1)
//
// and C^even_{l,M'} = C^U(M')_l / 2.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "mockgauss/fourier.hpp"
#include "mockgauss/group.hpp"
#include "mockgauss/parallel.hpp"

namespace mockgauss {

using Rational = boost::multiprecision::cpp_rational;

inline constexpr int kMaxCumulantOrder = 6;
inline constexpr std::uint64_t kMaxLatticeTerms = 20'000'000;

/// Unitary coefficient mu^{U(N)}_l(k) (an integer).
std::int64_t mu_unitary(int l, int n, std::span<const int> k);
/// 2^l times the odd-part coefficient for kernel index n.
std::int64_t mu_odd_scaled(int l, int kernel_index, std::span<const int> k);
/// 2^l times the even-part coefficient, evaluated directly over the
/// parity +1 sign vectors (independent of the half-unitary identity).
std::int64_t mu_even_direct_scaled(int l, int kernel_index, std::span<const int> k);
/// 2^l times the even-part coefficient via C^even = C^U / 2.
std::int64_t mu_even_scaled(int l, int kernel_index, std::span<const int> k);

/// mu^{G(N)}_l(k). Requires l <= 5 and |k_j| <= 12.
std::int64_t mu_coefficient(int l, const GroupLabel& group, std::span<const int> k);
/// Same without the argument caps (used by the lattice evaluators).
std::int64_t mu_group(int l, const GroupLabel& group, std::span<const int> k);

namespace detail {

void check_order(int l);

/// Calls visit(k, multiplicity) for every multiset of l modes drawn from
/// `support` (sorted), grouped by the index of the smallest mode.
void for_each_multiset(std::span<const int> support, int l, int first,
                       const std::function<void(std::span<const int>, std::int64_t)>& visit);

std::uint64_t multiset_count(std::size_t support, int l);

}  // namespace detail

/// sum_k coefficient(k) prod g_{k_l}, exploiting the permutation symmetry of
/// the coefficient. Work is split by the smallest mode and partial sums are
/// combined in a fixed order.
template <class T, class Coefficient>
T lattice_sum(int l, const FourierCoefficients<T>& g, Coefficient&& coefficient,
              Execution exec = Execution::Parallel) {
    detail::check_order(l);
    const std::vector<int> support = g.support();
    if (support.empty()) return T(0);
    if (detail::multiset_count(support.size(), l) > kMaxLatticeTerms) {
        throw std::length_error("lattice sum of order " + std::to_string(l) + " over " +
                                std::to_string(support.size()) + " modes exceeds the term cap");
    }
    std::vector<T> partial(support.size(), T(0));
    for_each_chunk(support.size(), exec, [&](std::uint64_t first) {
        T acc(0);
        detail::for_each_multiset(support, l, static_cast<int>(first), [&](std::span<const int> k, std::int64_t mult) {
            const std::int64_t mu = coefficient(k);
            if (mu == 0) return;
            T term(mu * mult);
            for (int kj : k) term *= g[kj];
            acc += term;
        });
        partial[first] = acc;
    });
    T total(0);
    for (const auto& p : partial) total += p;
    return total;
}

/// C^U(N)_l from the lattice (all orders).
template <class T>
T cumulant_unitary_lattice(int l, int n, const FourierCoefficients<T>& g, Execution exec = Execution::Parallel) {
    return lattice_sum(l, g, [&](std::span<const int> k) { return mu_unitary(l, n, k); }, exec);
}

/// Odd part C^odd_{l,n}(g).
template <class T>
T cumulant_odd(int l, int kernel_index, const FourierCoefficients<T>& g, Execution exec = Execution::Parallel) {
    const T scaled = lattice_sum(l, g, [&](std::span<const int> k) { return mu_odd_scaled(l, kernel_index, k); }, exec);
    return scaled / T(std::int64_t{1} << l);
}

/// Even part by direct parity +1 evaluation (test route).
template <class T>
T cumulant_even_direct(int l, int kernel_index, const FourierCoefficients<T>& g,
                       Execution exec = Execution::Parallel) {
    const T scaled =
        lattice_sum(l, g, [&](std::span<const int> k) { return mu_even_direct_scaled(l, kernel_index, k); }, exec);
    return scaled / T(std::int64_t{1} << l);
}

/// Sp/SO cumulant C^{G(N)}_l(g) from the lattice. g must be even for Sp/SO.
template <class T>
T cumulant_group(int l, const GroupLabel& group, const FourierCoefficients<T>& g,
                 Execution exec = Execution::Parallel) {
    if (!group.is_unitary() && !g.is_even())
        throw std::invalid_argument("Sp/SO cumulants require even coefficients g_k = g_{-k}");
    return lattice_sum(l, g, [&](std::span<const int> k) { return mu_group(l, group, k); }, exec);
}

namespace closed_form {

template <class T>
T unitary_c1(int n, const FourierCoefficients<T>& g) {
    return T(n) * g[0];
}

template <class T>
T unitary_c2(int n, const FourierCoefficients<T>& g) {
    T acc(0);
    const int kmax = g.max_mode();
    for (int k = 1; k <= kmax; ++k) acc += T(std::min(k, n)) * (g[k] * g[-k] + g[-k] * g[k]);
    return acc;
}

/// C^odd_{1,n}
template <class T>
T odd_part_c1(int kernel_index, const FourierCoefficients<T>& g) {
    T acc(0);
    if (kernel_index % 2 == 1) {
        const int M = (kernel_index - 1) / 2;
        for (int n = -M; n <= M; ++n) acc += g[2 * n];
    } else {
        const int M = kernel_index / 2;
        for (int n = -(M - 1); n <= M; ++n) acc += g[2 * n - 1];
    }
    return acc / T(2);
}

/// C^odd_{2,n}
template <class T>
T odd_part_c2(int kernel_index, const FourierCoefficients<T>& g) {
    T acc(0);
    const int kmax = g.max_mode();
    if (kernel_index % 2 == 1) {
        const int M = (kernel_index - 1) / 2;
        for (int l = -M; l <= M; ++l)
            for (int k = M + 1; k <= kmax + M; ++k) acc += g[l + k] * g[l - k] + g[l - k] * g[l + k];
    } else {
        const int M = kernel_index / 2;
        for (int n = -(2 * M - 1); n <= 2 * M - 1; n += 2)
            for (int m = 2 * M + 1; m <= 2 * kmax + 2 * M; m += 2)
                acc += g[(n + m) / 2] * g[(n - m) / 2] + g[(n - m) / 2] * g[(n + m) / 2];
    }
    return acc / T(2);
}

/// First cumulant (mean) of Tr g(U) in closed form, for every family.
template <class T>
T group_c1(const GroupLabel& group, const FourierCoefficients<T>& g) {
    const int n = group.matrix_size();
    const int M = group.num_phases();
    const int kmax = g.max_mode();
    T acc(0);
    switch (group.family()) {
        case Family::Unitary: return unitary_c1(n, g);
        case Family::Symplectic:
            acc = T(2 * M) * g[0];
            for (int j = 1; j <= M; ++j) acc -= T(2) * g[2 * j];
            return acc;
        case Family::SpecialOrthogonalEven:
            acc = T(2 * M) * g[0];
            for (int j = 1; j <= M - 1; ++j) acc += T(2) * g[2 * j];
            return acc;
        case Family::SpecialOrthogonalOdd:
            acc = T(2 * M + 1) * g[0];
            for (int j = 1; j <= M; ++j) acc += T(2) * g[2 * j];
            for (int j = 2 * M + 1; j <= kmax; ++j) acc += T(2) * g[j];
            return acc;
    }
    return acc;
}

/// Second cumulant (variance) of Tr g(U) in closed form; g even for Sp/SO.
template <class T>
T group_c2(const GroupLabel& group, const FourierCoefficients<T>& g) {
    const int M = group.num_phases();
    const int kmax = g.max_mode();
    T acc(0);
    auto min_sum = [&](int cap) {
        T s(0);
        for (int k = 1; k <= kmax; ++k) s += T(std::min(k, cap)) * g[k] * g[k];
        return T(4) * s;
    };
    switch (group.family()) {
        case Family::Unitary: return unitary_c2(group.matrix_size(), g);
        case Family::Symplectic:
            acc = min_sum(2 * M + 1);
            for (int k = M + 1; k <= kmax; ++k) acc -= T(4) * g[k] * g[k];
            for (int l = 1; l <= M; ++l)
                for (int k = M + 1; k <= kmax + l; ++k) acc -= T(8) * g[k + l] * g[k - l];
            return acc;
        case Family::SpecialOrthogonalEven:
            acc = min_sum(2 * M - 1);
            for (int k = M; k <= kmax; ++k) acc += T(4) * g[k] * g[k];
            for (int l = 1; l <= M - 1; ++l)
                for (int k = M; k <= kmax + l; ++k) acc += T(8) * g[k + l] * g[k - l];
            return acc;
        case Family::SpecialOrthogonalOdd:
            acc = min_sum(2 * M);
            for (int n = 1; n <= 2 * M - 1; n += 2)
                for (int m = 2 * M + 1; m <= 2 * kmax + n; m += 2) acc -= T(8) * g[(m + n) / 2] * g[(m - n) / 2];
            return acc;
    }
    return acc;
}

}  // namespace closed_form

/// Unitary cumulant: closed forms for l = 1, 2, lattice for l >= 3.
template <class T>
T cumulant_unitary(int l, int n, const FourierCoefficients<T>& g, Execution exec = Execution::Parallel) {
    detail::check_order(l);
    if (l == 1) return closed_form::unitary_c1(n, g);
    if (l == 2) return closed_form::unitary_c2(n, g);
    return cumulant_unitary_lattice(l, n, g, exec);
}

/// Even part C^even_{l,n} = C^U(n)_l / 2.
template <class T>
T cumulant_even(int l, int kernel_index, const FourierCoefficients<T>& g, Execution exec = Execution::Parallel) {
    return cumulant_unitary(l, kernel_index, g, exec) / T(2);
}

}  // namespace mockgauss
