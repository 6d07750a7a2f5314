#pragma once

// Chunked Monte Carlo driver. A batch of draws is cut into fixed-size chunks;
// chunk c draws from RngStream(seed, base_stream + c) and reduces into its own
// accumulator. Accumulators are merged in chunk order, so the result is
// bitwise identical for the serial reference path and for any OpenMP thread
// count or schedule.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <exception>
#include <span>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "mockgauss/group.hpp"
#include "mockgauss/kernels.hpp"
#include "mockgauss/rng.hpp"
#include "mockgauss/sampling.hpp"

namespace mockgauss {

enum class Execution { Serial, Parallel };
enum class SamplerKind { Dpp, Qr };

/// Mean and sum of squared deviations, mergeable (Chan et al.).
class RunningStats {
public:
    void push(double x) {
        ++count_;
        const double delta = x - mean_;
        mean_ += delta / static_cast<double>(count_);
        m2_ += delta * (x - mean_);
    }

    void merge(const RunningStats& other) {
        if (other.count_ == 0) return;
        if (count_ == 0) {
            *this = other;
            return;
        }
        const double n_a = static_cast<double>(count_);
        const double n_b = static_cast<double>(other.count_);
        const double delta = other.mean_ - mean_;
        const double n = n_a + n_b;
        mean_ += delta * n_b / n;
        m2_ += other.m2_ + delta * delta * n_a * n_b / n;
        count_ += other.count_;
    }

    std::uint64_t count() const { return count_; }
    double mean() const { return mean_; }
    double variance() const { return count_ > 1 ? m2_ / static_cast<double>(count_ - 1) : 0.0; }
    /// Standard error of the mean.
    double stderr_mean() const { return count_ > 1 ? std::sqrt(variance() / static_cast<double>(count_)) : 0.0; }

private:
    std::uint64_t count_ = 0;
    double mean_ = 0.0;
    double m2_ = 0.0;
};

struct McPlan {
    std::uint64_t seed = 0;
    std::uint64_t base_stream = 0;
    std::uint64_t draws = 0;
    std::uint64_t chunk_size = 2048;

    std::uint64_t num_chunks() const { return chunk_size == 0 ? 0 : (draws + chunk_size - 1) / chunk_size; }
    std::uint64_t chunk_draws(std::uint64_t c) const { return std::min(chunk_size, draws - c * chunk_size); }
};

/// Runs `body(c)` for every chunk index, in parallel or in order. Exceptions
/// from worker threads are rethrown on the calling thread.
template <class Body>
void for_each_chunk(std::uint64_t chunks, Execution exec, Body&& body) {
    if (exec == Execution::Serial) {
        for (std::uint64_t c = 0; c < chunks; ++c) body(c);
        return;
    }
    std::exception_ptr error;
    const auto n = static_cast<std::int64_t>(chunks);
#pragma omp parallel for schedule(dynamic, 1)
    for (std::int64_t c = 0; c < n; ++c) {
        try {
            body(static_cast<std::uint64_t>(c));
        } catch (...) {
#pragma omp critical(mockgauss_chunk_error)
            if (!error) error = std::current_exception();
        }
    }
    if (error) std::rethrow_exception(error);
}

/// Monte Carlo over eigenphase draws. `per_draw(sample, out)` fills
/// `num_stats` values per draw; returns merged statistics for each.
template <class PerDraw>
std::vector<RunningStats> monte_carlo(const GroupLabel& group, SamplerKind sampler, const McPlan& plan,
                                      std::size_t num_stats, PerDraw&& per_draw,
                                      Execution exec = Execution::Parallel) {
    const WeylKernel kernel(group);
    const std::uint64_t chunks = plan.num_chunks();
    std::vector<std::vector<RunningStats>> partial(chunks, std::vector<RunningStats>(num_stats));

    for_each_chunk(chunks, exec, [&](std::uint64_t c) {
        RngStream rng(plan.seed, plan.base_stream + c);
        DppSampler dpp(kernel);
        EigenphaseSample sample{group, {}};
        std::vector<double> values(num_stats);
        auto& acc = partial[c];
        for (std::uint64_t i = 0; i < plan.chunk_draws(c); ++i) {
            if (sampler == SamplerKind::Dpp)
                dpp.sample_into(rng, sample.phases);
            else
                sample = sample_matrix_qr(group, rng);
            per_draw(static_cast<const EigenphaseSample&>(sample), std::span<double>(values));
            for (std::size_t s = 0; s < num_stats; ++s) acc[s].push(values[s]);
        }
    });

    std::vector<RunningStats> total(num_stats);
    for (const auto& chunk : partial)
        for (std::size_t s = 0; s < num_stats; ++s) total[s].merge(chunk[s]);
    return total;
}

/// Draws a batch of samples; concatenated in chunk order.
std::vector<EigenphaseSample> sample_batch(const GroupLabel& group, SamplerKind sampler, const McPlan& plan,
                                           Execution exec = Execution::Parallel);

/// Applies MOCKGAUSS_THREADS (if set) as the OpenMP thread count.
void configure_threads_from_env();

}  // namespace mockgauss
