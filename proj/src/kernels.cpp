#include "isodiam/kernels.hpp"

#include <omp.h>

#include <algorithm>
#include <cmath>

#include "isodiam/geomcore.hpp"

namespace isodiam::kernels {

namespace {

bool better(const PairHit& a, const PairHit& b)
{
    if (a.value != b.value)
        return a.value > b.value;
    if (a.i != b.i)
        return a.i < b.i;
    return a.j < b.j;
}

}  // namespace

PairHit max_pair_chord_serial(std::span<const double> r, std::span<const double> v,
                              std::span<const unsigned char> active)
{
    PairHit best{-1.0, 0, 0};
    const std::size_t n = r.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (!active[i])
            continue;
        for (std::size_t j = i; j < n; ++j) {
            if (!active[j])
                continue;
            const double d = chord(r[i], r[j], CapAngle(std::min(v[i] + v[j], kPi)));
            if (d > best.value)
                best = {d, i, j};
        }
    }
    return best;
}

PairHit max_pair_chord_parallel(std::span<const double> r, std::span<const double> v,
                                std::span<const unsigned char> active)
{
    const std::size_t n = r.size();
    std::vector<double> sh(n);
    std::vector<double> ch(n);
    for (std::size_t i = 0; i < n; ++i) {
        sh[i] = std::sin(0.5 * v[i]);
        ch[i] = std::cos(0.5 * v[i]);
    }
    auto value = [&](std::size_t i, std::size_t j) {
        // sin((v_i + v_j)/2), saturating at 1 once the sum reaches pi
        const double h = (v[i] + v[j] >= kPi) ? 1.0 : sh[i] * ch[j] + ch[i] * sh[j];
        const double d = r[i] - r[j];
        return std::sqrt(d * d + 4.0 * r[i] * r[j] * h * h);
    };

    // seed bound from the outermost active node
    PairHit seed{-1.0, 0, 0};
    std::size_t outer = n;
    for (std::size_t k = n; k-- > 0;)
        if (active[k]) {
            outer = k;
            break;
        }
    if (outer == n)
        return seed;
    for (std::size_t j = 0; j <= outer; ++j)
        if (active[j]) {
            const PairHit h{value(j, outer), j, outer};
            if (better(h, seed))
                seed = h;
        }

    PairHit global = seed;
    const long long count = static_cast<long long>(outer) + 1;
#pragma omp parallel
    {
        PairHit local = seed;
#pragma omp for schedule(dynamic, 64) nowait
        for (long long ii = count - 1; ii >= 0; --ii) {
            const std::size_t i = static_cast<std::size_t>(ii);
            if (!active[i])
                continue;
            // every pair (j <= i) is bounded by r_i + r_j, with slack for rounding
            if (2.0 * r[i] * (1.0 + 4e-16) < local.value)
                continue;
            for (std::size_t j = i + 1; j-- > 0;) {
                if ((r[i] + r[j]) * (1.0 + 4e-16) < local.value)
                    break;
                if (!active[j])
                    continue;
                const PairHit h{value(i, j), j, i};
                if (better(h, local))
                    local = h;
            }
        }
#pragma omp critical(isodiam_pair_reduce)
        {
            if (better(local, global))
                global = local;
        }
    }
    return global;
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream)
{
    // splitmix64 over the combined key
    std::uint64_t z = seed + 0x9E3779B97F4A7C15ull * (stream + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

namespace {

std::int64_t hits_on_sphere(const PointPredicate& contains, int dim, double radius, int samples,
                            std::uint64_t stream_seed)
{
    SphereSampler sampler(stream_seed);
    std::vector<double> q(static_cast<std::size_t>(dim));
    std::int64_t hits = 0;
    for (int s = 0; s < samples; ++s) {
        sampler.draw(dim, q.data());
        for (double& x : q)
            x *= radius;
        if (contains(q))
            ++hits;
    }
    return hits;
}

}  // namespace

std::vector<std::int64_t> sphere_hits_serial(const PointPredicate& contains, int dim,
                                             std::span<const double> radii, int samples,
                                             std::uint64_t seed)
{
    std::vector<std::int64_t> hits(radii.size());
    for (std::size_t k = 0; k < radii.size(); ++k)
        hits[k] = hits_on_sphere(contains, dim, radii[k], samples, derive_seed(seed, k));
    return hits;
}

std::vector<std::int64_t> sphere_hits_parallel(const PointPredicate& contains, int dim,
                                               std::span<const double> radii, int samples,
                                               std::uint64_t seed)
{
    std::vector<std::int64_t> hits(radii.size());
    const long long count = static_cast<long long>(radii.size());
#pragma omp parallel for schedule(dynamic, 4)
    for (long long k = 0; k < count; ++k)
        hits[k] = hits_on_sphere(contains, dim, radii[k], samples, derive_seed(seed, static_cast<std::uint64_t>(k)));
    return hits;
}

void map_indices_serial(std::size_t count, const std::function<void(std::size_t)>& f)
{
    for (std::size_t k = 0; k < count; ++k)
        f(k);
}

void map_indices_parallel(std::size_t count, const std::function<void(std::size_t)>& f)
{
    const long long n = static_cast<long long>(count);
#pragma omp parallel for schedule(dynamic, 1)
    for (long long k = 0; k < n; ++k)
        f(static_cast<std::size_t>(k));
}

void set_threads(int threads)
{
    if (threads > 0)
        omp_set_num_threads(threads);
}

}  // namespace isodiam::kernels
