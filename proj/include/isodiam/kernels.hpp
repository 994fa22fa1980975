#pragma once

// Data-parallel inner loops.  Every kernel has a plain serial reference and
// an OpenMP variant; the two agree to rounding (tests/test_kernels.cpp) and
// bench/ times them against each other.

#include <cmath>
#include <cstdint>
#include <functional>
#include <random>
#include <span>
#include <vector>

namespace isodiam::kernels {

struct PairHit {
    double value = 0.0;
    std::size_t i = 0;
    std::size_t j = 0;
};

/// max over node pairs (i, j) with both nodes active of
/// chord(r_i, r_j, min(v_i + v_j, pi)).  Ties resolve to the
/// lexicographically smallest (i, j) with i <= j.
PairHit max_pair_chord_serial(std::span<const double> r, std::span<const double> v,
                              std::span<const unsigned char> active);
PairHit max_pair_chord_parallel(std::span<const double> r, std::span<const double> v,
                                std::span<const unsigned char> active);

/// Deterministic per-stream seed.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);

/// Uniform directions on S^{dim-1} from normalised Gaussian vectors.
class SphereSampler {
public:
    explicit SphereSampler(std::uint64_t seed) : rng_(seed) {}
    void draw(int dim, double* out);
    std::mt19937_64& engine() { return rng_; }

private:
    std::mt19937_64 rng_;
    std::normal_distribution<double> gauss_{0.0, 1.0};
};

/// Hit counts of `contains` on the spheres of the given radii, `samples`
/// uniform points each, stream i seeded by derive_seed(seed, i).
using PointPredicate = std::function<bool(std::span<const double>)>;
std::vector<std::int64_t> sphere_hits_serial(const PointPredicate& contains, int dim,
                                             std::span<const double> radii, int samples,
                                             std::uint64_t seed);
std::vector<std::int64_t> sphere_hits_parallel(const PointPredicate& contains, int dim,
                                               std::span<const double> radii, int samples,
                                               std::uint64_t seed);

/// out[k] = f(k) for k in [0, count).  Order-stable: the output does not
/// depend on the thread count.
void map_indices_serial(std::size_t count, const std::function<void(std::size_t)>& f);
void map_indices_parallel(std::size_t count, const std::function<void(std::size_t)>& f);

/// Set OpenMP thread count (0 keeps the runtime default).
void set_threads(int threads);

}  // namespace isodiam::kernels

inline void isodiam::kernels::SphereSampler::draw(int dim, double* out)
{
    for (;;) {
        double norm2 = 0.0;
        for (int k = 0; k < dim; ++k) {
            out[k] = gauss_(rng_);
            norm2 += out[k] * out[k];
        }
        if (norm2 > 1e-300) {
            const double inv = 1.0 / std::sqrt(norm2);
            for (int k = 0; k < dim; ++k)
                out[k] *= inv;
            return;
        }
    }
}
