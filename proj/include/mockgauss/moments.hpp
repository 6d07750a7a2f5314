#pragma once

#include <span>
#include <stdexcept>
#include <vector>

namespace mockgauss {

namespace detail {

template <class T>
void centered_moment_terms(std::span<const T> cumulants, int m, int j, int remaining, T term, T& acc,
                           const std::vector<T>& factorial) {
    // Choose k_j for j = j..m with sum_j j k_j = remaining.
    if (remaining == 0) {
        acc += term * factorial[m];
        return;
    }
    if (j > m) return;
    T power_term = term;
    for (int kj = 0; kj * j <= remaining; ++kj) {
        centered_moment_terms(cumulants, m, j + 1, remaining - kj * j, power_term, acc, factorial);
        // (C_j / j!)^{k_j} / k_j!
        power_term = power_term * cumulants[j - 1] / factorial[j] / T(kj + 1);
    }
}

}  // namespace detail

/// Centered m-th moment from cumulants C_1..C_m (C_1 ignored):
/// sum over k_2, k_3, ... >= 0 with sum j k_j = m of m! prod (C_j/j!)^{k_j} / k_j!.
template <class T>
T centered_moment_from_cumulants(std::span<const T> cumulants, int m) {
    if (m < 0 || m > 10) throw std::out_of_range("moment order must be in 0..10");
    if (static_cast<int>(cumulants.size()) < m) throw std::invalid_argument("need cumulants C_1..C_m");
    if (m == 0) return T(1);
    std::vector<T> factorial(m + 1, T(1));
    for (int i = 1; i <= m; ++i) factorial[i] = factorial[i - 1] * T(i);
    T acc(0);
    detail::centered_moment_terms(cumulants, m, 2, m, T(1), acc, factorial);
    return acc;
}

/// Raw moments E X^0..E X^m from cumulants via
/// m'_n = sum_{k=0}^{n-1} C(n-1, k) C_{k+1} m'_{n-1-k}.
template <class T>
std::vector<T> raw_moments_from_cumulants(std::span<const T> cumulants, int m) {
    if (m < 0 || m > 10) throw std::out_of_range("moment order must be in 0..10");
    if (static_cast<int>(cumulants.size()) < m) throw std::invalid_argument("need cumulants C_1..C_m");
    std::vector<T> raw(m + 1, T(0));
    raw[0] = T(1);
    for (int n = 1; n <= m; ++n) {
        T binom(1);
        for (int k = 0; k <= n - 1; ++k) {
            raw[n] += binom * cumulants[k] * raw[n - 1 - k];
            binom = binom * T(n - 1 - k) / T(k + 1);
        }
    }
    return raw;
}

/// Cumulants C_1..C_m from raw moments E X^1..E X^m (raw[0] = 1 ignored).
template <class T>
std::vector<T> cumulants_from_raw_moments(std::span<const T> raw, int m) {
    if (static_cast<int>(raw.size()) < m + 1) throw std::invalid_argument("need raw moments 0..m");
    std::vector<T> c(m + 1, T(0));
    for (int n = 1; n <= m; ++n) {
        T acc = raw[n];
        T binom(1);  // C(n-1, k-1)
        for (int k = 1; k <= n - 1; ++k) {
            acc -= binom * c[k] * raw[n - k];
            binom = binom * T(n - k) / T(k);
        }
        c[n] = acc;
    }
    return std::vector<T>(c.begin() + 1, c.end());
}

}  // namespace mockgauss
