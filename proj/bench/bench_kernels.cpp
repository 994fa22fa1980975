// Serial reference against the OpenMP variant of each kernel.  Arg(0) is the
// serial path, Arg(1) the parallel one.  The parallel pair-chord kernel also
// prunes pairs against a running bound, so its gain is not threading alone.

#include <benchmark/benchmark.h>

#include <cmath>
#include <omp.h>
#include <string>
#include <vector>

#include "isodiam/constructions.hpp"
#include "isodiam/convex.hpp"
#include "isodiam/kernels.hpp"
#include "isodiam/profile.hpp"
#include "isodiam/rearrange.hpp"

namespace {

using namespace isodiam;

void BM_MaxPairChord(benchmark::State& state)
{
    const RadialProfile p = build_E(family_n2(Dimension(3), 1.0 / 64.0));
    std::vector<unsigned char> active(p.size());
    for (std::size_t i = 0; i < p.size(); ++i)
        active[i] = p.active(i) ? 1 : 0;
    const bool parallel = state.range(0) != 0;
    for (auto _ : state) {
        const auto hit = parallel ? kernels::max_pair_chord_parallel(p.radii(), p.angles(), active)
                                  : kernels::max_pair_chord_serial(p.radii(), p.angles(), active);
        benchmark::DoNotOptimize(hit.value);
    }
    state.counters["pairs"] = static_cast<double>(p.size() * (p.size() + 1) / 2);
}
BENCHMARK(BM_MaxPairChord)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_SphereHits(benchmark::State& state)
{
    const IndicatorSet e = random_ball_union(Dimension(3), 5);
    std::vector<double> radii(256);
    for (std::size_t i = 0; i < radii.size(); ++i)
        radii[i] = e.r_bound * static_cast<double>(i + 1) / radii.size();
    const bool parallel = state.range(0) != 0;
    for (auto _ : state) {
        const auto hits = parallel ? kernels::sphere_hits_parallel(e.contains, 3, radii, 2000, 1)
                                   : kernels::sphere_hits_serial(e.contains, 3, radii, 2000, 1);
        benchmark::DoNotOptimize(hits.data());
    }
}
BENCHMARK(BM_SphereHits)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_CauchyPerimeter(benchmark::State& state)
{
    const Polytope f = random_hull(3, 11);
    const bool parallel = state.range(0) != 0;
    for (auto _ : state) {
        const CauchyEstimate est = cauchy_perimeter(f, 5000, 3, parallel);
        benchmark::DoNotOptimize(est.value);
    }
}
BENCHMARK(BM_CauchyPerimeter)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_MapIndices(benchmark::State& state)
{
    std::vector<double> out(64);
    const bool parallel = state.range(0) != 0;
    const auto work = [&](std::size_t k) {
        const RadialProfile p = random_profile(Dimension(3), k);
        out[k] = volume(p);
    };
    for (auto _ : state) {
        if (parallel)
            kernels::map_indices_parallel(out.size(), work);
        else
            kernels::map_indices_serial(out.size(), work);
        benchmark::DoNotOptimize(out.data());
    }
}
BENCHMARK(BM_MapIndices)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

int main(int argc, char** argv)
{
    benchmark::Initialize(&argc, argv);
    benchmark::AddCustomContext("omp_max_threads", std::to_string(omp_get_max_threads()));
    benchmark::RunSpecifiedBenchmarks();
    benchmark::Shutdown();
    return 0;
}
