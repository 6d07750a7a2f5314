#include "mockgauss/parallel.hpp"

#include <cstdlib>
#include <string>

namespace mockgauss {

std::vector<EigenphaseSample> sample_batch(const GroupLabel& group, SamplerKind sampler, const McPlan& plan,
                                           Execution exec) {
    const WeylKernel kernel(group);
    const std::uint64_t chunks = plan.num_chunks();
    std::vector<std::vector<EigenphaseSample>> partial(chunks);

    for_each_chunk(chunks, exec, [&](std::uint64_t c) {
        RngStream rng(plan.seed, plan.base_stream + c);
        DppSampler dpp(kernel);
        auto& out = partial[c];
        out.reserve(plan.chunk_draws(c));
        for (std::uint64_t i = 0; i < plan.chunk_draws(c); ++i)
            out.push_back(sampler == SamplerKind::Dpp ? dpp.sample(rng) : sample_matrix_qr(group, rng));
    });

    std::vector<EigenphaseSample> all;
    all.reserve(plan.draws);
    for (auto& chunk : partial)
        for (auto& s : chunk) all.push_back(std::move(s));
    return all;
}

void configure_threads_from_env() {
#ifdef _OPENMP
    if (const char* env = std::getenv("MOCKGAUSS_THREADS")) {
        const int n = std::atoi(env);
        if (n > 0) omp_set_num_threads(n);
    }
#endif
}

}  // namespace mockgauss
