#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace mockgauss {

/// Representative of j modulo m in [0, m). All cyclic indexing of blocks,
/// signs and mode chains goes through here.
constexpr int cyclic_index(int j, int m) {
    const int r = j % m;
    return r < 0 ? r + m : r;
}

/// Partition of {0..l-1} into m labelled blocks. Labels also fix the cyclic
/// order in which blocks are chained by the kernel product.
struct SetPartition {
    std::vector<int> block_of;     // element -> block label in [0, m)
    std::vector<int> block_sizes;  // lambda_1..lambda_m

    int order() const { return static_cast<int>(block_of.size()); }
    int blocks() const { return static_cast<int>(block_sizes.size()); }

    /// Relabels blocks: block b becomes position_of[b].
    SetPartition relabeled(std::span<const int> position_of) const;
};

/// All partitions of l elements into m nonempty blocks, each exactly once,
/// with blocks labelled by first appearance. Requires 1 <= m <= l <= 8.
std::vector<SetPartition> enumerate_partitions(int l, int m);

/// Stirling number of the second kind S(l, m).
std::int64_t stirling2(int l, int m);

/// A labelled partition together with one cyclic order of its blocks. For a
/// partition with m blocks there are (m - 1)! distinct cyclic orders; the
/// cumulant expansion sums over all of them.
struct CyclicConfiguration {
    SetPartition partition;
    int sign;  // (-1)^{m+1}
};

/// Every (partition, cyclic block order) pair for order l, over m = 1..l.
const std::vector<CyclicConfiguration>& cyclic_configurations(int l);

struct SignVector {
    std::vector<int> eps;  // entries +1 / -1

    int size() const { return static_cast<int>(eps.size()); }
    int parity() const {
        int p = 1;
        for (int e : eps) p *= e;
        return p;
    }
    int operator[](int j) const { return eps[cyclic_index(j, size())]; }
};

/// All sign vectors of length m with the given parity (2^{m-1} of them).
const std::vector<SignVector>& sign_vectors(int m, int parity);

/// Block sums K_j = sum of k_l over elements l in block j.
std::vector<long> block_sums(const SetPartition& sigma, std::span<const int> k);
void block_sums_into(const SetPartition& sigma, std::span<const int> k, std::span<long> out);

}  // namespace mockgauss
