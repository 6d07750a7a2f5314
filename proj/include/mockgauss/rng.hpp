#pragma once

#include <cstdint>
#include <random>

namespace mockgauss {

/// Reproducible random stream keyed by (seed, stream_id). The engine is
/// mt19937_64 seeded through seed_seq, and the uniform/normal conversions are
/// written out here so that draw sequences do not depend on the standard
/// library's distribution implementations.
class RngStream {
public:
    RngStream(std::uint64_t seed, std::uint64_t stream_id);

    std::uint64_t seed() const { return seed_; }
    std::uint64_t stream_id() const { return stream_id_; }

    std::uint64_t next_u64() { return engine_(); }
    /// Uniform on [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
    /// Standard normal (Box-Muller, one cached variate).
    double normal();

private:
    std::uint64_t seed_;
    std::uint64_t stream_id_;
    std::mt19937_64 engine_;
    double cached_normal_ = 0.0;
    bool has_cached_ = false;
};

}  // namespace mockgauss
