#include "mockgauss/counting.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace mockgauss {

namespace {

long floor_div(long a, long b) {
    long q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

// Number of odd integers in [lo, hi].
long count_odd(long lo, long hi) {
    if (lo > hi) return 0;
    return floor_div(hi - 1, 2) - floor_div(lo - 2, 2);
}

}  // namespace

ModeWindow ModeWindow::for_kernel_index(int n) {
    if (n < 1) throw std::invalid_argument("kernel index must be positive");
    if (n % 2 == 1) return {ModeKind::IntegerModes, (n - 1) / 2};
    return {ModeKind::OddHalfModes, n / 2};
}

bool ModeWindow::contains(long n) const {
    if (kind == ModeKind::IntegerModes) return n >= -half_width && n <= half_width;
    return (n % 2 != 0) && n >= -(2L * half_width - 1) && n <= 2L * half_width - 1;
}

int count_solutions_from_sums(const ModeWindow& window, std::span<const long> big_k, const SignVector& eps) {
    const int m = eps.size();
    if (eps.parity() != -1)
        throw std::invalid_argument("closed-form count requires prod(eps) = -1");

    for (int j = 0; j < m; ++j) {
        // bracket = K_j + eps_{j-1} K_{j-1} + eps_{j-1} eps_{j-2} K_{j-2} + ...
        long bracket = 0;
        long coeff = 1;
        for (int i = 0; i < m; ++i) {
            bracket += coeff * big_k[cyclic_index(j - i, m)];
            coeff *= eps[j - i - 1];
        }
        long n_j = 0;
        if (window.kind == ModeKind::IntegerModes) {
            if (bracket % 2 != 0) return 0;
            n_j = -bracket / 2;
        } else {
            n_j = -bracket;
        }
        if (!window.contains(n_j)) return 0;
    }
    return 1;
}

int count_solutions(int M, const SetPartition& sigma, std::span<const int> k, const SignVector& eps, ModeKind mode) {
    if (eps.size() != sigma.blocks())
        throw std::invalid_argument("sign vector length must equal the number of blocks");
    if (M < 1) throw std::invalid_argument("M must be positive");
    const std::vector<long> big_k = block_sums(sigma, k);
    return count_solutions_from_sums({mode, M}, big_k, eps);
}

std::int64_t count_solutions_bruteforce(int M, const SetPartition& sigma, std::span<const int> k,
                                        const SignVector& eps, ModeKind mode) {
    const int m = sigma.blocks();
    if (m > 5 || M > 6) throw std::out_of_range("brute-force counting is capped at m <= 5, M <= 6");
    if (eps.size() != m) throw std::invalid_argument("sign vector length must equal the number of blocks");
    const ModeWindow window{mode, M};
    const std::vector<long> big_k = block_sums(sigma, k);

    std::vector<long> values;
    for (long n = -window.bound(); n <= window.bound(); ++n)
        if (window.contains(n)) values.push_back(n);

    std::vector<int> idx(m, 0);
    std::vector<long> n(m);
    std::int64_t count = 0;
    while (true) {
        for (int j = 0; j < m; ++j) n[j] = values[idx[j]];
        bool ok = true;
        for (int j = 0; j < m && ok; ++j)
            ok = (n[j] - eps[j - 1] * n[cyclic_index(j - 1, m)] == -window.rhs_scale() * big_k[j]);
        if (ok) ++count;
        int pos = 0;
        while (pos < m && ++idx[pos] == static_cast<int>(values.size())) idx[pos++] = 0;
        if (pos == m) break;
    }
    return count;
}

std::int64_t count_chain_solutions(const ModeWindow& window, std::span<const long> big_k, const SignVector& eps) {
    const int m = eps.size();
    const long c = window.rhs_scale();
    const long bound = window.bound();
    const bool odd = window.kind == ModeKind::OddHalfModes;

    // n_j = a_j t + b_j with t = n_{m-1}.
    std::vector<int> a(m);
    std::vector<long> b(m);
    int prev_a = 1;
    long prev_b = 0;
    for (int j = 0; j < m; ++j) {
        const int e = eps[j - 1];
        a[j] = e * prev_a;
        b[j] = e * prev_b - c * big_k[j];
        prev_a = a[j];
        prev_b = b[j];
    }

    auto in_window = [&](long n) { return window.contains(n); };

    if (a[m - 1] == -1) {
        // -t + b = t
        if (b[m - 1] % 2 != 0) return 0;
        const long t = b[m - 1] / 2;
        if (!in_window(t)) return 0;
        for (int j = 0; j < m; ++j)
            if (!in_window(a[j] * t + b[j])) return 0;
        return 1;
    }

    if (b[m - 1] != 0) return 0;
    long lo = -bound;
    long hi = bound;
    for (int j = 0; j < m - 1; ++j) {
        if (odd && b[j] % 2 != 0) return 0;
        // |a_j t + b_j| <= bound with a_j = +-1  <=>  |t + a_j b_j| <= bound
        const long shift = a[j] * b[j];
        lo = std::max(lo, -bound - shift);
        hi = std::min(hi, bound - shift);
    }
    if (lo > hi) return 0;
    return odd ? count_odd(lo, hi) : hi - lo + 1;
}

std::int64_t count_unitary_chains(int n, std::span<const long> big_k) {
    long s = 0;
    long s_min = 0;
    long s_max = 0;
    for (long kj : big_k) {
        s += kj;
        s_min = std::min(s_min, s);
        s_max = std::max(s_max, s);
    }
    if (s != 0) return 0;
    return std::max<long>(0, n - (s_max - s_min));
}

CountingSweepReport verify_counting_sweep(int max_M, int max_l, int max_k) {
    CountingSweepReport report;
    std::vector<int> k;
    for (int M = 1; M <= max_M; ++M) {
        for (int l = 1; l <= max_l; ++l) {
            k.assign(static_cast<std::size_t>(l), -max_k);
            const int side = 2 * max_k + 1;
            long total = 1;
            for (int j = 0; j < l; ++j) total *= side;
            for (long idx = 0; idx < total; ++idx) {
                long rest = idx;
                int sum = 0;
                int abs_sum = 0;
                for (int j = 0; j < l; ++j) {
                    k[j] = static_cast<int>(rest % side) - max_k;
                    rest /= side;
                    sum += k[j];
                    abs_sum += std::abs(k[j]);
                }
                for (int m = 1; m <= l; ++m) {
                    for (const SetPartition& sigma : enumerate_partitions(l, m)) {
                        for (const SignVector& eps : sign_vectors(m, -1)) {
                            for (ModeKind mode : {ModeKind::IntegerModes, ModeKind::OddHalfModes}) {
                                ++report.cases;
                                const int fast = count_solutions(M, sigma, k, eps, mode);
                                const std::int64_t slow = count_solutions_bruteforce(M, sigma, k, eps, mode);
                                if (fast != slow) ++report.bruteforce_mismatches;
                                const bool integer = mode == ModeKind::IntegerModes;
                                const bool right_parity = integer ? sum % 2 == 0 : sum % 2 != 0;
                                const int forced_bound = integer ? 2 * M : 2 * M - 1;
                                const bool violates = (fast != 0 && fast != 1) || (!right_parity && fast != 0) ||
                                                      (right_parity && abs_sum <= forced_bound && fast != 1);
                                if (violates) ++report.dichotomy_violations;
                            }
                        }
                    }
                }
            }
        }
    }
    return report;
}

}  // namespace mockgauss
