// Independent checker for good partitions. Re-derives product signs from
// the pattern and checks every block shape directly against the definition.

#include <algorithm>
#include <set>

#include "pohst/partition.hpp"

namespace pohst {

namespace {

std::string describe(const PartitionBlock& block) {
    std::string out = std::string(to_string(block.kind)) + " {";
    for (std::size_t k = 0; k < block.members.size(); ++k) {
        if (k) out += ", ";
        out += to_string(block.members[k].index);
        out += sign_char(block.members[k].sign);
    }
    return out + "}";
}

// Sign of x_i...x_j straight from the pattern entries.
int pattern_product(std::span<const Sign> signs, int i, int j) {
    int acc = 1;
    for (int k = i; k <= j; ++k) acc *= to_int(signs[static_cast<std::size_t>(k - 1)]);
    return acc;
}

bool is_noncanonical(int product, int i, int j) { return product == (((i + j) % 2 == 0) ? 1 : -1); }

// Empty string when the shape is one of the three allowed ones.
std::string shape_error(const PartitionBlock& block) {
    const auto& m = block.members;
    switch (block.kind) {
        case BlockKind::singleton:
            if (m.size() != 1) return "singleton must have exactly one member";
            if (m[0].sign != Sign::positive) return "singleton member must have product sign +1";
            return {};
        case BlockKind::doubleton: {
            if (m.size() != 2) return "doubleton must have exactly two members";
            const auto pos = std::find_if(m.begin(), m.end(), [](auto& t) { return t.sign == Sign::positive; });
            const auto neg = std::find_if(m.begin(), m.end(), [](auto& t) { return t.sign == Sign::negative; });
            if (pos == m.end() || neg == m.end()) return "doubleton needs one positive and one negative member";
            const auto [i, j] = pos->index;
            const auto [ni, nj] = neg->index;
            const bool same_row = ni <= i && nj == j;
            const bool same_column = ni == i && j <= nj;
            if (!same_row && !same_column) return "doubleton members are not aligned as required";
            return {};
        }
        case BlockKind::quadrupleton: {
            if (m.size() != 4) return "quadrupleton must have exactly four members";
            std::set<int> rows_i, cols_j;
            for (const auto& t : m) {
                rows_i.insert(t.index.i);
                cols_j.insert(t.index.j);
            }
            if (rows_i.size() != 2 || cols_j.size() != 2) return "quadrupleton members do not form a rectangle";
            const int lo_i = *rows_i.begin(), hi_i = *rows_i.rbegin();
            const int lo_j = *cols_j.begin(), hi_j = *cols_j.rbegin();
            auto sign_at = [&](int i, int j) -> int {
                for (const auto& t : m) {
                    if (t.index.i == i && t.index.j == j) return to_int(t.sign);
                }
                return 0;
            };
            // (i,j) = (hi_i, lo_j), (i-l, j+l') = (lo_i, hi_j)
            if (sign_at(hi_i, lo_j) == 0 || sign_at(lo_i, lo_j) == 0 || sign_at(hi_i, hi_j) == 0 ||
                sign_at(lo_i, hi_j) == 0) {
                return "quadrupleton members do not form a rectangle";
            }
            if (sign_at(hi_i, lo_j) != 1 || sign_at(lo_i, hi_j) != 1 || sign_at(lo_i, lo_j) != -1 ||
                sign_at(hi_i, hi_j) != -1) {
                return "quadrupleton corner signs are in the wrong positions";
            }
            return {};
        }
    }
    return "unknown block kind";
}

}  // namespace

Verdict validate_partition(const GoodPartition& gp) {
    const int n = gp.pattern.size();
    if (n < 1) return Verdict::reject("empty sign pattern");
    if (gp.n != n) {
        return Verdict::reject("dimension " + std::to_string(gp.n) + " does not match pattern length " +
                               std::to_string(n));
    }
    const auto signs = gp.pattern.signs();

    // covered[i][j] = block number + 1
    std::vector<std::vector<std::size_t>> covered(static_cast<std::size_t>(n) + 1,
                                                  std::vector<std::size_t>(static_cast<std::size_t>(n) + 1, 0));

    for (std::size_t b = 0; b < gp.blocks.size(); ++b) {
        const auto& block = gp.blocks[b];
        for (const auto& t : block.members) {
            const auto [i, j] = t.index;
            if (!(1 <= i && i <= j && j <= n)) {
                return Verdict::reject("index " + to_string(t.index) + " outside the triangle in " + describe(block), b);
            }
        }
        if (auto err = shape_error(block); !err.empty()) {
            return Verdict::reject("shape: " + err + " in " + describe(block), b);
        }
        for (const auto& t : block.members) {
            const auto [i, j] = t.index;
            const int product = pattern_product(signs, i, j);
            if (!is_noncanonical(product, i, j)) {
                return Verdict::reject("canonical index " + to_string(t.index) + " in " + describe(block), b);
            }
            if (product != to_int(t.sign)) {
                return Verdict::reject("recorded sign of " + to_string(t.index) + " is wrong in " + describe(block), b);
            }
            if (covered[i][j] != 0) {
                return Verdict::reject("index " + to_string(t.index) + " appears in blocks " +
                                           std::to_string(covered[i][j] - 1) + " and " + std::to_string(b),
                                       b);
            }
            covered[i][j] = b + 1;
        }
    }

    for (int j = 1; j <= n; ++j) {
        for (int i = 1; i <= j; ++i) {
            if (is_noncanonical(pattern_product(signs, i, j), i, j) && covered[i][j] == 0) {
                return Verdict::reject("incomplete cover: non-canonical index " + to_string(TermIndex{i, j}) +
                                       " is in no block");
            }
        }
    }
    return Verdict::accept();
}

}  // namespace pohst
