#include <stdexcept>

#include "pohst/partition.hpp"

namespace pohst {

std::string_view to_string(IdealBlockKind kind) {
    switch (kind) {
        case IdealBlockKind::singleton: return "singleton";
        case IdealBlockKind::pair: return "pair";
        case IdealBlockKind::triple: return "triple";
        case IdealBlockKind::quadruple: return "quadruple";
    }
    return "?";
}

double IdealBlock::product_bound() const {
    switch (kind) {
        case IdealBlockKind::singleton:
        case IdealBlockKind::triple:
            return 2.0;
        case IdealBlockKind::pair:
        case IdealBlockKind::quadruple:
            return 1.0;
    }
    return 0.0;
}

namespace {

void append_even(int n, std::vector<IdealBlock>& out) {
    const int half = n / 2;
    // base of the triangle
    for (int k = 1; k <= half; ++k) {
        out.push_back({IdealBlockKind::triple, {{2 * k - 1, 2 * k - 1}, {2 * k, 2 * k}, {2 * k - 1, 2 * k}}});
    }
    // rectangles above the base
    for (int k = 1; k < half; ++k) {
        for (int d = 0; d < half - k; ++d) {
            out.push_back({IdealBlockKind::quadruple,
                           {{2 * k, 2 * k + 2 * d + 1},
                            {2 * k - 1, 2 * k + 2 * d + 1},
                            {2 * k, 2 * k + 2 * d + 2},
                            {2 * k - 1, 2 * k + 2 * d + 2}}});
        }
    }
}

}  // namespace

std::vector<IdealBlock> ideal_case_factorization(int n) {
    if (n < 1) throw std::invalid_argument("dimension must be at least 1");
    std::vector<IdealBlock> out;
    if (n % 2 == 0) {
        append_even(n, out);
        return out;
    }
    append_even(n - 1, out);
    out.push_back({IdealBlockKind::singleton, {{n, n}}});
    for (int k = 1; k <= (n - 1) / 2; ++k) {
        out.push_back({IdealBlockKind::pair, {{2 * k, n}, {2 * k - 1, n}}});
    }
    return out;
}

Verdict domination_check(const Vector& v, const GoodPartition& gp, double tolerance) {
    if (v.size() != gp.n) return Verdict::reject("vector dimension does not match the partition");
    if (SignPattern::of(v) != gp.pattern) return Verdict::reject("partition was built for a different sign pattern");

    const Vector mirrored = negate_abs(v);
    for (std::size_t b = 0; b < gp.blocks.size(); ++b) {
        double original = 1.0;
        double reference = 1.0;
        for (const auto& m : gp.blocks[b].members) {
            original *= eval_term(v, m.index);
            reference *= eval_term(mirrored, m.index);
        }
        if (original > reference + tolerance) {
            return Verdict::reject("block product " + std::to_string(original) + " exceeds its -|v| counterpart " +
                                       std::to_string(reference),
                                   b);
        }
    }
    const double f = eval_f(v);
    const double g = eval_f(mirrored);
    if (f > g + tolerance) {
        return Verdict::reject("f(v) = " + std::to_string(f) + " exceeds f(-|v|) = " + std::to_string(g));
    }
    return Verdict::accept();
}

}  // namespace pohst
