#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "pohst/triangle.hpp"

namespace pohst::testing {

/// Relative 1e-12 with an absolute floor of 1e-15.
inline bool close(double a, double b, double rel = 1e-12, double abs_floor = 1e-15) {
    return std::fabs(a - b) <= std::max(abs_floor, rel * std::max(std::fabs(a), std::fabs(b)));
}

class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}
    double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(engine_); }
    int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(engine_); }
    std::uint64_t bits() { return engine_(); }

    /// Uniform in [-1,1]^n with no zero coordinate.
    Vector nonzero_vector(int n) {
        std::vector<double> x(static_cast<std::size_t>(n));
        for (auto& c : x) {
            do c = uniform(-1.0, 1.0);
            while (c == 0.0);
        }
        return Vector(x);
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace pohst::testing
