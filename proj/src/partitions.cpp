#include "mockgauss/partitions.hpp"

#include <algorithm>
#include <array>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <string>

namespace mockgauss {

namespace {

constexpr int kMaxOrder = 8;

void extend(std::vector<int>& rgs, int next, int used, int l, int m, std::vector<SetPartition>& out) {
    if (next == l) {
        if (used != m) return;
        SetPartition p;
        p.block_of = rgs;
        p.block_sizes.assign(m, 0);
        for (int b : rgs) ++p.block_sizes[b];
        out.push_back(std::move(p));
        return;
    }
    // Remaining elements must be able to open the missing blocks.
    if (m - used > l - next) return;
    for (int b = 0; b <= std::min(used, m - 1); ++b) {
        rgs[next] = b;
        extend(rgs, next + 1, std::max(used, b + 1), l, m, out);
    }
}

}  // namespace

SetPartition SetPartition::relabeled(std::span<const int> position_of) const {
    SetPartition p;
    p.block_of.resize(block_of.size());
    p.block_sizes.assign(block_sizes.size(), 0);
    for (std::size_t i = 0; i < block_of.size(); ++i) p.block_of[i] = position_of[block_of[i]];
    for (std::size_t b = 0; b < block_sizes.size(); ++b) p.block_sizes[position_of[b]] = block_sizes[b];
    return p;
}

std::vector<SetPartition> enumerate_partitions(int l, int m) {
    if (l < 1 || l > kMaxOrder || m < 1 || m > l) {
        throw std::out_of_range("enumerate_partitions requires 1 <= m <= l <= 8, got l=" + std::to_string(l) +
                                ", m=" + std::to_string(m));
    }
    std::vector<SetPartition> out;
    std::vector<int> rgs(l, 0);
    extend(rgs, 1, 1, l, m, out);
    return out;
}

std::int64_t stirling2(int l, int m) {
    if (l == 0 && m == 0) return 1;
    if (l <= 0 || m <= 0 || m > l) return 0;
    std::vector<std::int64_t> row(m + 1, 0);
    row[0] = 1;
    for (int i = 1; i <= l; ++i)
        for (int j = std::min(i, m); j >= 0; --j) row[j] = (j == 0) ? 0 : j * row[j] + row[j - 1];
    return row[m];
}

const std::vector<CyclicConfiguration>& cyclic_configurations(int l) {
    static std::array<std::vector<CyclicConfiguration>, kMaxOrder + 1> cache;
    static std::array<std::once_flag, kMaxOrder + 1> once;
    if (l < 1 || l > kMaxOrder) throw std::out_of_range("order must be in 1..8, got " + std::to_string(l));

    std::call_once(once[l], [l] {
        auto& out = cache[l];
        for (int m = 1; m <= l; ++m) {
            const int sign = (m % 2 == 1) ? 1 : -1;
            for (const auto& sigma : enumerate_partitions(l, m)) {
                // Block 0 stays first; permuting the others gives each cyclic order once.
                std::vector<int> position(m);
                std::iota(position.begin(), position.end(), 0);
                do {
                    out.push_back({sigma.relabeled(position), sign});
                } while (std::next_permutation(position.begin() + 1, position.end()));
            }
        }
    });
    return cache[l];
}

const std::vector<SignVector>& sign_vectors(int m, int parity) {
    static std::array<std::array<std::vector<SignVector>, 2>, kMaxOrder + 1> cache;
    static std::array<std::once_flag, kMaxOrder + 1> once;
    if (m < 1 || m > kMaxOrder) throw std::out_of_range("sign vector length must be in 1..8");
    if (parity != 1 && parity != -1) throw std::invalid_argument("parity must be +1 or -1");

    std::call_once(once[m], [m] {
        for (unsigned mask = 0; mask < (1u << m); ++mask) {
            SignVector v;
            v.eps.resize(m);
            for (int j = 0; j < m; ++j) v.eps[j] = (mask >> j & 1u) ? -1 : 1;
            cache[m][v.parity() == 1 ? 0 : 1].push_back(std::move(v));
        }
    });
    return cache[m][parity == 1 ? 0 : 1];
}

void block_sums_into(const SetPartition& sigma, std::span<const int> k, std::span<long> out) {
    std::fill(out.begin(), out.end(), 0L);
    for (std::size_t l = 0; l < k.size(); ++l) out[sigma.block_of[l]] += k[l];
}

std::vector<long> block_sums(const SetPartition& sigma, std::span<const int> k) {
    if (static_cast<int>(k.size()) != sigma.order())
        throw std::invalid_argument("k has length " + std::to_string(k.size()) + ", partition order is " +
                                    std::to_string(sigma.order()));
    std::vector<long> out(sigma.blocks());
    block_sums_into(sigma, k, out);
    return out;
}

}  // namespace mockgauss
