#pragma once

// Counting the integer mode chains behind the Fourier expansion of cumulants.
//
// Expanding S_{2M+1}(z) = (1/2 pi) sum_{|n| <= M} e^{-inz} turns each kernel
// product into a sum over chains n_1..n_m subject to
//
//     n_j - eps_{j-1} n_{j-1} = -K_j        (indices cyclic)
//
// For S_{2M}(z) = (1/2 pi) sum_{n odd, |n| <= 2M-1} e^{-inz/2} the chain uses
// odd n_j and n_j - eps_{j-1} n_{j-1} = -2 K_j.

#include <cstdint>
#include <span>

#include "mockgauss/partitions.hpp"

namespace mockgauss {

enum class ModeKind { IntegerModes, OddHalfModes };

/// Allowed mode values of a Dirichlet kernel: IntegerModes {-M..M} (S_{2M+1})
/// or OddHalfModes {odd n : |n| <= 2M-1} (S_{2M}). Either way S_N has N modes.
struct ModeWindow {
    ModeKind kind;
    int half_width;  // M

    static ModeWindow for_kernel_index(int n);

    int size() const { return kind == ModeKind::IntegerModes ? 2 * half_width + 1 : 2 * half_width; }
    int bound() const { return kind == ModeKind::IntegerModes ? half_width : 2 * half_width - 1; }
    int rhs_scale() const { return kind == ModeKind::IntegerModes ? 1 : 2; }
    bool contains(long n) const;
};

/// The counting function for parity(eps) = -1, from the explicit solution
/// n_j = -(1/2) (K_j + eps_{j-1} K_{j-1} + eps_{j-1} eps_{j-2} K_{j-2} + ...)
/// (twice that, and odd, for OddHalfModes). Always 0 or 1.
/// Throws std::invalid_argument when parity(eps) = +1.
int count_solutions(int M, const SetPartition& sigma, std::span<const int> k, const SignVector& eps, ModeKind mode);

/// Same, from precomputed block sums.
int count_solutions_from_sums(const ModeWindow& window, std::span<const long> block_sums, const SignVector& eps);

/// Exhaustive enumeration of the mode grid. Any parity. Requires m <= 5, M <= 6.
std::int64_t count_solutions_bruteforce(int M, const SetPartition& sigma, std::span<const int> k,
                                        const SignVector& eps, ModeKind mode);

/// Number of chains for any sign vector, by propagating n_j = a_j t + b_j from
/// a free n_m = t and intersecting the window constraints on t.
std::int64_t count_chain_solutions(const ModeWindow& window, std::span<const long> block_sums, const SignVector& eps);

struct CountingSweepReport {
    std::int64_t cases = 0;
    std::int64_t bruteforce_mismatches = 0;
    // count outside {0,1}, nonzero at the wrong parity of sum k, or zero
    // although sum |k| is small enough to force a solution
    std::int64_t dichotomy_violations = 0;

    bool ok() const { return bruteforce_mismatches == 0 && dichotomy_violations == 0; }
};

/// Exhaustive check of count_solutions for every M <= max_M, l <= max_l, set
/// partition, parity -1 sign vector, |k_j| <= max_k, and both mode kinds.
CountingSweepReport verify_counting_sweep(int max_M = 3, int max_l = 4, int max_k = 4);

/// All-plus chains on an N-mode window: max(0, N - (max_j s_j - min_j s_j))
/// when sum K_j = 0 (s_j partial sums), else 0.
std::int64_t count_unitary_chains(int n, std::span<const long> block_sums);

}  // namespace mockgauss
