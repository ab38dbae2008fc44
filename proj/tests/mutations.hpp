#pragma once
// Single-block mutations of a good partition. Each one should be rejected
// by validate_partition.

#include <array>
#include <functional>
#include <string>

#include "pohst/partition.hpp"

namespace pohst::testing {

struct Mutation {
    std::string label;
    GoodPartition partition;
};

/// Calls visit for every mutation of block b: dropping it, flipping the
/// recorded sign of one member, and moving one member to a neighbouring
/// index inside the triangle.
inline void for_each_mutation(const GoodPartition& gp, std::size_t b, const std::function<void(const Mutation&)>& visit) {
    {
        GoodPartition m = gp;
        m.blocks.erase(m.blocks.begin() + static_cast<std::ptrdiff_t>(b));
        visit({"drop block " + std::to_string(b), std::move(m)});
    }
    const auto& block = gp.blocks[b];
    for (std::size_t k = 0; k < block.members.size(); ++k) {
        GoodPartition m = gp;
        auto& t = m.blocks[b].members[k];
        t.sign = -t.sign;
        visit({"flip " + to_string(t.index) + " in block " + std::to_string(b), std::move(m)});
    }
    constexpr std::array<std::array<int, 2>, 4> moves{{{-1, 0}, {1, 0}, {0, -1}, {0, 1}}};
    for (std::size_t k = 0; k < block.members.size(); ++k) {
        for (const auto& [di, dj] : moves) {
            const TermIndex from = block.members[k].index;
            const TermIndex to{from.i + di, from.j + dj};
            if (!is_valid(to, gp.n)) continue;
            GoodPartition m = gp;
            m.blocks[b].members[k].index = to;
            visit({"move " + to_string(from) + " to " + to_string(to) + " in block " + std::to_string(b), std::move(m)});
        }
    }
}

}  // namespace pohst::testing
