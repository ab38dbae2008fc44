#pragma once

// Verification campaigns: exhaustive sign-pattern sweeps, numeric
// maximization of f_n over the hypercube, exact maximizer enumeration and
// seeded random domination checks.

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pohst/triangle.hpp"

namespace pohst {

/// 2^floor((n+1)/2).
double theorem_bound(int n);

struct SweepFailure {
    std::uint64_t mask = 0;  // bit k set = coordinate k+1 negative
    std::string pattern;
    std::string reason;

    friend bool operator==(const SweepFailure&, const SweepFailure&) = default;
};

struct SweepReport {
    int n = 0;
    std::uint64_t patterns_checked = 0;
    std::uint64_t steps_checked = 0;
    std::uint64_t parity_checked = 0;
    std::vector<SweepFailure> failures;
    std::chrono::milliseconds wall_time{0};

    bool complete() const { return n > 0 && n < 64 && patterns_checked == (std::uint64_t{1} << n); }
    bool passed() const { return complete() && failures.empty(); }
};

/// Associative merge of two partial reports over the same n.
/// Failures stay sorted by mask; wall times add.
SweepReport merge(SweepReport a, const SweepReport& b);

/// Runs every check on the patterns with masks in [first, last).
SweepReport sweep_range(int n, std::uint64_t first, std::uint64_t last);

/// All 2^n patterns: build, validate, impossible-configuration and progress
/// checks after every step, and the parity check where it applies.
/// Throws std::invalid_argument unless 1 <= n <= 24 and jobs >= 1.
SweepReport sweep_patterns(int n, int jobs = 1);

/// Every v in {0,-1}^n with ceil(n/2) entries equal to -1, none adjacent,
/// in lexicographic order of the -1 positions.
std::vector<Vector> enumerate_maximizers(int n);

/// Exact f on a point of {0,-1}^n (each term is 0, 1 or 2).
/// Throws std::invalid_argument on any other coordinate.
std::uint64_t eval_f_lattice(const Vector& v);

struct MaximizeOptions {
    double grid_step = 0.25;
    int refine_iters = 3;
    /// Largest n searched with the full grid; above it, multistart ascent.
    int full_grid_max_n = 8;
    int starts = 64;
    std::uint64_t seed = 42;
};

struct MaximizeResult {
    int n = 0;
    double best_value = 0.0;
    Vector best_point;
    double bound = 0.0;
    std::string method;
    std::uint64_t evaluations = 0;

    double gap() const { return bound - best_value; }
};

/// Throws std::invalid_argument for n < 1 or a grid step that does not
/// divide 2 evenly.
MaximizeResult maximize_f(int n, const MaximizeOptions& options = {});

struct DominationReport {
    int n = 0;
    std::uint64_t samples = 0;
    std::uint64_t seed = 0;
    std::string prng;
    bool blockwise = false;
    bool accepted = true;
    std::optional<Vector> witness;
    std::string reason;
};

/// Uniform samples from [-1,1]^n (exact zeros redrawn), checking
/// f(v) <= f(-|v|) <= 2^floor((n+1)/2) within 1e-12. With `blockwise`,
/// also checks every block of the good partition for the sample's signs.
DominationReport sample_domination(int n, std::uint64_t samples, std::uint64_t seed, bool blockwise = false);

std::string to_json(const SweepReport& report, bool include_timing = false);
std::string to_json(const MaximizeResult& result);
std::string to_json(const DominationReport& report);

}  // namespace pohst
