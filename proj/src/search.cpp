#include "pohst/search.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <random>
#include <stdexcept>
#include <thread>
#include <unordered_map>

#include <json.hpp>

#include "pohst/partition.hpp"

namespace pohst {

double theorem_bound(int n) { return std::ldexp(1.0, (n + 1) / 2); }

SweepReport merge(SweepReport a, const SweepReport& b) {
    if (a.n == 0) a.n = b.n;
    if (b.n != 0 && a.n != b.n) throw std::invalid_argument("cannot merge sweep reports of different dimension");
    a.patterns_checked += b.patterns_checked;
    a.steps_checked += b.steps_checked;
    a.parity_checked += b.parity_checked;
    a.wall_time += b.wall_time;
    std::vector<SweepFailure> merged;
    merged.reserve(a.failures.size() + b.failures.size());
    std::merge(a.failures.begin(), a.failures.end(), b.failures.begin(), b.failures.end(),
               std::back_inserter(merged), [](const auto& x, const auto& y) { return x.mask < y.mask; });
    a.failures = std::move(merged);
    return a;
}

namespace {

std::optional<std::string> check_pattern(const SignPattern& pattern, std::uint64_t& steps) {
    std::optional<std::string> failure;
    auto observer = [&](const ConstructionState& state) {
        ++steps;
        if (failure) return;
        if (auto v = check_impossible_configurations(state); !v) {
            failure = "step " + std::to_string(state.step) + ": " + v.reason;
        } else if (auto p = check_step_progress(state); !p) {
            failure = "step " + std::to_string(state.step) + ": " + p.reason;
        }
    };
    try {
        const auto result = build_good_partition(pattern, observer);
        if (failure) return failure;
        if (auto v = validate_partition(result.partition); !v) return "validation: " + v.reason;
    } catch (const ConstructionFailure& e) {
        return std::string(e.what());
    }
    return std::nullopt;
}

}  // namespace

SweepReport sweep_range(int n, std::uint64_t first, std::uint64_t last) {
    const auto start = std::chrono::steady_clock::now();
    SweepReport report;
    report.n = n;
    for (std::uint64_t mask = first; mask < last; ++mask) {
        const auto pattern = SignPattern::from_mask(n, mask);
        auto failure = check_pattern(pattern, report.steps_checked);
        if (!failure && n % 2 == 0 && pattern.negative_count() % 2 == 1) {
            ++report.parity_checked;
            const auto counts = parity_counts(pattern);
            if (counts.positive != counts.negative) {
                failure = "parity: b_plus = " + std::to_string(counts.positive) +
                          ", b_minus = " + std::to_string(counts.negative);
            }
        }
        if (failure) report.failures.push_back({mask, pattern.to_string(), *failure});
        ++report.patterns_checked;
    }
    report.wall_time = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
    return report;
}

SweepReport sweep_patterns(int n, int jobs) {
    if (n < 1 || n > 24) throw std::invalid_argument("sweep dimension must be in 1..24");
    if (jobs < 1) throw std::invalid_argument("job count must be positive");

    const auto start = std::chrono::steady_clock::now();
    const std::uint64_t total = std::uint64_t{1} << n;
    const std::uint64_t chunks = std::min<std::uint64_t>(total, static_cast<std::uint64_t>(jobs) * 8);
    std::vector<SweepReport> partial(chunks);
    std::atomic<std::uint64_t> next{0};

    auto worker = [&] {
        for (std::uint64_t c = next++; c < chunks; c = next++) {
            partial[c] = sweep_range(n, total * c / chunks, total * (c + 1) / chunks);
        }
    };
    {
        std::vector<std::jthread> pool;
        for (int t = 1; t < jobs; ++t) pool.emplace_back(worker);
        worker();
    }

    SweepReport report;
    report.n = n;
    for (const auto& p : partial) report = merge(std::move(report), p);
    report.wall_time = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
    return report;
}

std::vector<Vector> enumerate_maximizers(int n) {
    if (n < 1) throw std::invalid_argument("dimension must be at least 1");
    const int wanted = (n + 1) / 2;
    std::vector<Vector> out;
    std::vector<double> x(static_cast<std::size_t>(n), 0.0);
    // place the next -1 at position >= from, `left` still to place
    auto place = [&](auto&& self, int from, int left) -> void {
        if (left == 0) {
            out.emplace_back(x);
            return;
        }
        for (int k = from; k + 2 * (left - 1) < n; ++k) {
            x[static_cast<std::size_t>(k)] = -1.0;
            self(self, k + 2, left - 1);
            x[static_cast<std::size_t>(k)] = 0.0;
        }
    };
    place(place, 0, wanted);
    return out;
}

std::uint64_t eval_f_lattice(const Vector& v) {
    const auto x = v.coords();
    for (double c : x) {
        if (c != 0.0 && c != -1.0) throw std::invalid_argument("lattice evaluation needs coordinates in {0, -1}");
    }
    std::uint64_t f = 1;
    for (std::size_t i = 0; i < x.size(); ++i) {
        int prod = 1;
        for (std::size_t j = i; j < x.size(); ++j) {
            prod *= static_cast<int>(x[j]);
            const int term = 1 - prod;  // 0, 1 or 2
            if (term == 0) return 0;
            if (term == 2) f <<= 1;
        }
    }
    return f;
}

namespace {

struct Grid {
    std::vector<double> values;
    double step;
};

Grid make_grid(double step) {
    if (!(step > 0.0) || !std::isfinite(step) || step > 2.0) {
        throw std::invalid_argument("grid step must lie in (0, 2]");
    }
    const double ratio = 2.0 / step;
    const long count = std::lround(ratio);
    if (count < 1 || std::fabs(ratio - static_cast<double>(count)) > 1e-9 * ratio) {
        throw std::invalid_argument("grid step must divide 2 evenly");
    }
    Grid g{{}, step};
    for (long k = 0; k <= count; ++k) g.values.push_back(-1.0 + 2.0 * static_cast<double>(k) / static_cast<double>(count));
    g.values.front() = -1.0;
    g.values.back() = 1.0;
    if (count % 2 == 0) g.values[static_cast<std::size_t>(count / 2)] = 0.0;
    return g;
}

class Objective {
public:
    double operator()(std::span<const double> x) {
        ++evaluations;
        return eval_f(x);
    }
    std::uint64_t evaluations = 0;
};

// Golden-section search for a maximum of f along coordinate k inside
// [lo, hi]; moves x[k] only on strict improvement.
double golden_refine(Objective& f, std::vector<double>& x, std::size_t k, double lo, double hi, double current) {
    constexpr double inv_phi = 0.6180339887498949;
    const double keep = x[k];
    auto at = [&](double t) {
        x[k] = t;
        return f(x);
    };
    double a = lo, b = hi;
    double c = b - inv_phi * (b - a), d = a + inv_phi * (b - a);
    double fc = at(c), fd = at(d);
    for (int it = 0; it < 60 && b - a > 1e-12; ++it) {
        if (fc >= fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = at(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = at(d);
        }
    }
    const double t = fc >= fd ? c : d;
    const double ft = std::max(fc, fd);
    if (ft > current) {
        x[k] = t;
        return ft;
    }
    x[k] = keep;
    return current;
}

double refine_rounds(Objective& f, std::vector<double>& x, double value, double step, int rounds) {
    for (int r = 0; r < rounds; ++r) {
        for (std::size_t k = 0; k < x.size(); ++k) {
            value = golden_refine(f, x, k, std::max(-1.0, x[k] - step), std::min(1.0, x[k] + step), value);
        }
    }
    return value;
}

// Coordinate ascent: each coordinate jumps to its best grid value, then
// golden-section refinement around it. Stops when a sweep changes nothing.
double coordinate_ascent(Objective& f, std::vector<double>& x, const Grid& grid) {
    double value = f(x);
    for (int sweep = 0; sweep < 100; ++sweep) {
        const double before = value;
        for (std::size_t k = 0; k < x.size(); ++k) {
            const double keep = x[k];
            double best_t = keep;
            for (double t : grid.values) {
                x[k] = t;
                const double ft = f(x);
                if (ft > value) {
                    value = ft;
                    best_t = t;
                }
            }
            x[k] = best_t;
            value = golden_refine(f, x, k, std::max(-1.0, best_t - grid.step), std::min(1.0, best_t + grid.step), value);
        }
        if (!(value > before)) break;
    }
    return value;
}

std::string format_step(double step) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%g", step);
    return buf;
}

}  // namespace

MaximizeResult maximize_f(int n, const MaximizeOptions& options) {
    if (n < 1) throw std::invalid_argument("dimension must be at least 1");
    if (options.refine_iters < 0) throw std::invalid_argument("refinement rounds must be non-negative");
    const Grid grid = make_grid(options.grid_step);
    const std::size_t points = grid.values.size();
    const std::size_t dim = static_cast<std::size_t>(n);

    Objective f;
    std::vector<double> best(dim, 0.0);
    double best_value = -1.0;
    std::string method;

    if (n <= options.full_grid_max_n) {
        if (std::pow(static_cast<double>(points), n) > 4e9) {
            throw std::invalid_argument("grid of " + std::to_string(points) + "^" + std::to_string(n) +
                                        " points is too large");
        }
        std::vector<std::size_t> digit(dim, 0);
        std::vector<double> x(dim, grid.values[0]);
        while (true) {
            const double v = f(x);
            if (v > best_value) {
                best_value = v;
                best = x;
            }
            std::size_t k = 0;
            while (k < dim && ++digit[k] == points) {
                digit[k] = 0;
                x[k] = grid.values[0];
                ++k;
            }
            if (k == dim) break;
            x[k] = grid.values[digit[k]];
        }
        method = "grid(step=" + format_step(grid.step) + ")";
    } else {
        if (options.starts < 1) throw std::invalid_argument("multistart needs at least one start");
        std::mt19937_64 rng(options.seed);
        for (int s = 0; s < options.starts; ++s) {
            std::vector<double> x(dim);
            for (auto& c : x) c = -1.0 + 2.0 * static_cast<double>(rng() >> 11) * 0x1.0p-53;
            const double v = coordinate_ascent(f, x, grid);
            if (v > best_value) {
                best_value = v;
                best = x;
            }
        }
        method = "multistart-coordinate-ascent(starts=" + std::to_string(options.starts) +
                 ",seed=" + std::to_string(options.seed) + ",prng=mt19937_64,step=" + format_step(grid.step) + ")";
    }

    best_value = refine_rounds(f, best, best_value, grid.step, options.refine_iters);
    method += "+golden-section(rounds=" + std::to_string(options.refine_iters) + ")";

    MaximizeResult result;
    result.n = n;
    result.best_value = best_value;
    result.best_point = Vector(best);
    result.bound = theorem_bound(n);
    result.method = std::move(method);
    result.evaluations = f.evaluations;
    return result;
}

DominationReport sample_domination(int n, std::uint64_t samples, std::uint64_t seed, bool blockwise) {
    if (n < 1) throw std::invalid_argument("dimension must be at least 1");
    if (samples < 1) throw std::invalid_argument("need at least one sample");
    constexpr double tol = 1e-12;

    DominationReport report;
    report.n = n;
    report.samples = samples;
    report.seed = seed;
    report.prng = "mt19937_64";
    report.blockwise = blockwise;

    const double bound = theorem_bound(n);
    std::mt19937_64 rng(seed);
    std::unordered_map<std::uint64_t, GoodPartition> partitions;
    std::vector<double> x(static_cast<std::size_t>(n));

    for (std::uint64_t s = 0; s < samples; ++s) {
        std::uint64_t mask = 0;
        for (std::size_t k = 0; k < x.size(); ++k) {
            do {
                x[k] = -1.0 + 2.0 * static_cast<double>(rng() >> 11) * 0x1.0p-53;
            } while (x[k] == 0.0);
            if (x[k] < 0.0) mask |= std::uint64_t{1} << k;
        }
        const Vector v(x);
        const Vector mirrored = negate_abs(v);
        const double f = eval_f(v);
        const double g = eval_f(mirrored);

        std::string reason;
        if (f > g + tol) {
            reason = "f(v) exceeds f(-|v|)";
        } else if (g > bound + tol) {
            reason = "f(-|v|) exceeds the bound";
        } else if (blockwise) {
            auto it = partitions.find(mask);
            if (it == partitions.end()) {
                it = partitions.emplace(mask, build_good_partition(SignPattern::of(v)).partition).first;
            }
            if (auto verdict = domination_check(v, it->second, tol); !verdict) reason = verdict.reason;
        }
        if (!reason.empty()) {
            report.accepted = false;
            report.witness = v;
            report.reason = std::move(reason);
            return report;
        }
    }
    return report;
}

std::string to_json(const SweepReport& report, bool include_timing) {
    nlohmann::json failures = nlohmann::json::array();
    for (const auto& f : report.failures) {
        failures.push_back({{"mask", f.mask}, {"pattern", f.pattern}, {"reason", f.reason}});
    }
    nlohmann::json doc = {{"n", report.n},
                          {"patterns_checked", report.patterns_checked},
                          {"steps_checked", report.steps_checked},
                          {"parity_checked", report.parity_checked},
                          {"failures", std::move(failures)},
                          {"passed", report.passed()}};
    if (include_timing) doc["wall_time_ms"] = report.wall_time.count();
    return doc.dump(2) + "\n";
}

std::string to_json(const MaximizeResult& result) {
    const std::vector<double> point(result.best_point.coords().begin(), result.best_point.coords().end());
    const nlohmann::json doc = {{"n", result.n},
                                {"best_value", result.best_value},
                                {"best_point", point},
                                {"bound", result.bound},
                                {"gap", result.gap()},
                                {"method", result.method},
                                {"evaluations", result.evaluations}};
    return doc.dump(2) + "\n";
}

std::string to_json(const DominationReport& report) {
    nlohmann::json doc = {{"n", report.n},
                          {"samples", report.samples},
                          {"seed", report.seed},
                          {"prng", report.prng},
                          {"blockwise", report.blockwise},
                          {"accepted", report.accepted},
                          {"reason", report.reason}};
    if (report.witness) {
        doc["witness"] = std::vector<double>(report.witness->coords().begin(), report.witness->coords().end());
    } else {
        doc["witness"] = nullptr;
    }
    return doc.dump(2) + "\n";
}

}  // namespace pohst
