#include <cmath>
#include <random>
#include <vector>

#include "doctest.h"

#include "isodiam/kernels.hpp"

using namespace isodiam;

TEST_CASE("pair chord kernel: serial and parallel agree")
{
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int trial = 0; trial < 5; ++trial) {
        const std::size_t m = 300 + 50 * trial;
        std::vector<double> r(m), v(m);
        std::vector<unsigned char> act(m);
        double acc = 0.0;
        for (std::size_t i = 0; i < m; ++i) {
            acc += 0.001 + u(rng) * 0.01;
            r[i] = acc;
            v[i] = 3.14159 * u(rng);
            act[i] = u(rng) < 0.9;
        }
        const auto a = kernels::max_pair_chord_serial(r, v, act);
        const auto b = kernels::max_pair_chord_parallel(r, v, act);
        CHECK(a.value == b.value);
        CHECK(a.i == b.i);
        CHECK(a.j == b.j);
        // brute-force oracle
        double best = -1.0;
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = i; j < m; ++j)
                if (act[i] && act[j]) {
                    const double th = std::min(v[i] + v[j], 3.141592653589793);
                    best = std::max(best, std::sqrt((r[i] - r[j]) * (r[i] - r[j]) +
                                                    4.0 * r[i] * r[j] * std::pow(std::sin(0.5 * th), 2)));
                }
        CHECK(a.value == doctest::Approx(best).epsilon(1e-14));
    }
}

TEST_CASE("sphere hit kernel: serial and parallel agree and streams are per radius")
{
    auto half = [](std::span<const double> q) { return q[q.size() - 1] > 0.0; };
    const std::vector<double> radii{0.5, 1.0, 1.5, 2.0};
    for (int dim : {2, 3, 5}) {
        const auto s = kernels::sphere_hits_serial(half, dim, radii, 4000, 99);
        const auto p = kernels::sphere_hits_parallel(half, dim, radii, 4000, 99);
        CHECK(s == p);
        for (auto h : s) {
            // half of the sphere, 4 sigma band
            CHECK(std::abs(h - 2000.0) < 4.0 * std::sqrt(1000.0));
        }
        const std::vector<double> single{1.0};
        // radius k of a list uses stream k
        const auto one = kernels::sphere_hits_serial(half, dim, single, 4000, 99);
        CHECK(one[0] == s[0]);
    }
}

TEST_CASE("derive_seed separates streams deterministically")
{
    CHECK(kernels::derive_seed(1, 0) == kernels::derive_seed(1, 0));
    CHECK(kernels::derive_seed(1, 0) != kernels::derive_seed(1, 1));
    CHECK(kernels::derive_seed(1, 0) != kernels::derive_seed(2, 0));
}

TEST_CASE("sphere sampler draws unit vectors with zero mean")
{
    kernels::SphereSampler s(5);
    double mean[3] = {0, 0, 0};
    const int m = 20000;
    for (int i = 0; i < m; ++i) {
        double x[3];
        s.draw(3, x);
        CHECK(std::abs(x[0] * x[0] + x[1] * x[1] + x[2] * x[2] - 1.0) < 1e-14);
        for (int k = 0; k < 3; ++k)
            mean[k] += x[k] / m;
    }
    // each coordinate has variance 1/3
    for (double c : mean)
        CHECK(std::abs(c) < 4.0 * std::sqrt(1.0 / 3.0 / m));
}

TEST_CASE("map_indices: serial and parallel fill the same output")
{
    std::vector<double> a(1000), b(1000);
    kernels::map_indices_serial(a.size(), [&](std::size_t k) { a[k] = std::sin(0.1 * k); });
    kernels::map_indices_parallel(b.size(), [&](std::size_t k) { b[k] = std::sin(0.1 * k); });
    CHECK(a == b);
}
