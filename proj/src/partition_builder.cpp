#include <algorithm>
#include <utility>

#include "pohst/partition.hpp"

namespace pohst {

namespace {

struct Candidate {
    Provenance provenance;
    TermIndex positive;  // (i,j')+ in sing, or the hdoub positive for operation 2
    std::optional<TermIndex> corner;  // (i',j)+ singleton for operation 2
};

class Builder {
public:
    Builder(const SignPattern& pattern, const StepObserver& observer)
        : pattern_(pattern),
          n_(pattern.size()),
          J_(noncanonical_set(pattern)),
          owner_(static_cast<std::size_t>(triangle_size(n_)), -1),
          row_failures_(static_cast<std::size_t>(n_) + 1),
          observer_(observer) {}

    BuildResult run() {
        for (const auto& m : J_.members()) {
            if (m.sign == Sign::positive) add_block({BlockKind::singleton, {m}, Provenance::initial});
        }
        notify(std::nullopt);

        int k = 0;
        for (const auto& m : J_.members()) {
            if (m.sign != Sign::negative) continue;
            ++k;
            process(k, m);
            notify(m.index);
        }

        BuildResult result;
        result.partition = GoodPartition{n_, pattern_, std::move(blocks_)};
        result.trace = std::move(trace_);
        return result;
    }

private:
    void process(int k, const SignedTerm& neg) {
        const auto [i, j] = neg.index;

        // Case 1: the prec-maximal singleton to the right in row j, i.e.
        // the one with the smallest first index.
        for (int ip = i + 1; ip <= j; ++ip) {
            if (is_sing({ip, j})) {
                operation1({ip, j}, neg, Provenance::case1, k);
                return;
            }
        }

        auto& failures = row_failures_[static_cast<std::size_t>(j)];
        failures.push_back(i);
        case1_failures_.push_back(neg.index);

        if (failures.size() == 1) {
            case2(k, neg);
        } else {
            case3(k, neg, failures.front());
        }
    }

    // neg is the first pair of its row for which Case 1 failed.
    void case2(int k, const SignedTerm& neg) {
        const auto [i, j] = neg.index;
        std::vector<Candidate> candidates;
        for (int jp = i; jp < j; ++jp) {
            const TermIndex below{i, jp};
            if (J_.sign_of(below) != Sign::positive) continue;
            if (is_sing(below)) {
                candidates.push_back({Provenance::case2_op1, below, std::nullopt});
            } else if (auto left = hdoub_partner(below)) {
                const TermIndex corner{left->i, j};
                if (is_sing(corner)) candidates.push_back({Provenance::case2_op2, below, corner});
            }
        }
        if (candidates.size() != 1) {
            fail(k, neg,
                 "case 2 expects exactly one admissible positive pair in the vertical list, found " +
                     std::to_string(candidates.size()));
        }
        apply(candidates.front(), neg, k);
    }

    // neg failed Case 1 after (first_failed, j) already did.
    void case3(int k, const SignedTerm& neg, int first_failed) {
        const auto [i, j] = neg.index;
        const TermIndex minimal{first_failed, j};
        const int block = owner(minimal);
        std::optional<int> drop_row;
        if (block >= 0) {
            for (const auto& m : blocks_[block].members) {
                if (m.sign == Sign::positive && m.index.i == first_failed && m.index.j < j) {
                    drop_row = m.index.j;
                }
            }
        }
        if (!drop_row) {
            fail(k, neg, "case 3: minimal failed pair " + to_string(minimal) + " is not in nvdoub configuration");
        }

        const TermIndex target{i, *drop_row};
        if (J_.sign_of(target) != Sign::positive) {
            fail(k, neg, "case 3: pair " + to_string(target) + " is not a positive non-canonical pair");
        }
        if (is_sing(target)) {
            apply({Provenance::case3_op1, target, std::nullopt}, neg, k);
            return;
        }
        if (auto left = hdoub_partner(target)) {
            const TermIndex corner{left->i, j};
            if (is_sing(corner)) {
                apply({Provenance::case3_op2, target, corner}, neg, k);
                return;
            }
        }
        fail(k, neg, "case 3: pair " + to_string(target) + " admits neither operation");
    }

    void apply(const Candidate& c, const SignedTerm& neg, int k) {
        if (c.corner) {
            operation2(c.positive, *c.corner, neg, c.provenance, k);
        } else {
            operation1(c.positive, neg, c.provenance, k);
        }
    }

    // {(i',j')} -> {(i',j'), (i,j)}
    void operation1(const TermIndex& single, const SignedTerm& neg, Provenance prov, int k) {
        const int id = owner(single);
        PartitionBlock merged{BlockKind::doubleton, {blocks_[id].members.front(), neg}, prov};
        remove_block(id);
        add_block(std::move(merged));
        trace_.push_back({k, neg, prov, {single}});
    }

    // {(i,l),(r,l)} + {(r,j)} -> {(i,l),(r,l),(i,j),(r,j)}
    void operation2(const TermIndex& lower_positive, const TermIndex& corner, const SignedTerm& neg,
                    Provenance prov, int k) {
        const int pair_id = owner(lower_positive);
        const PartitionBlock doubleton = blocks_[pair_id];
        const SignedTerm corner_term = blocks_[owner(corner)].members.front();
        PartitionBlock merged{BlockKind::quadrupleton,
                              {doubleton.members[0], doubleton.members[1], neg, corner_term},
                              prov};
        remove_block(owner(corner));
        remove_block(owner(lower_positive));
        add_block(std::move(merged));
        trace_.push_back({k, neg, prov, {lower_positive, corner}});
    }

    bool is_sing(const TermIndex& t) const {
        if (J_.sign_of(t) != Sign::positive) return false;
        const int id = owner(t);
        return id >= 0 && blocks_[id].kind == BlockKind::singleton;
    }

    // Negative partner (i',j)-, i' < i, when t = (i,j)+ sits in an h-doubleton.
    std::optional<TermIndex> hdoub_partner(const TermIndex& t) const {
        const int id = owner(t);
        if (id < 0 || blocks_[id].kind != BlockKind::doubleton) return std::nullopt;
        for (const auto& m : blocks_[id].members) {
            if (m.sign == Sign::negative && m.index.j == t.j && m.index.i < t.i) return m.index;
        }
        return std::nullopt;
    }

    int owner(const TermIndex& t) const { return owner_[static_cast<std::size_t>(triangle_slot(t))]; }

    void add_block(PartitionBlock block) {
        const int id = static_cast<int>(blocks_.size());
        for (const auto& m : block.members) owner_[static_cast<std::size_t>(triangle_slot(m.index))] = id;
        blocks_.push_back(std::move(block));
    }

    void remove_block(int id) {
        for (const auto& m : blocks_[id].members) owner_[static_cast<std::size_t>(triangle_slot(m.index))] = -1;
        const int last = static_cast<int>(blocks_.size()) - 1;
        if (id != last) {
            blocks_[id] = std::move(blocks_[last]);
            for (const auto& m : blocks_[id].members) owner_[static_cast<std::size_t>(triangle_slot(m.index))] = id;
        }
        blocks_.pop_back();
    }

    void notify(std::optional<TermIndex> processed) {
        if (!observer_) return;
        ConstructionState state{pattern_, blocks_, case1_failures_, processed,
                                static_cast<int>(trace_.size())};
        observer_(state);
    }

    [[noreturn]] void fail(int k, const SignedTerm& neg, std::string reason) {
        throw ConstructionFailure(k, neg, std::move(reason), trace_);
    }

    SignPattern pattern_;
    int n_;
    NonCanonicalSet J_;
    std::vector<PartitionBlock> blocks_;
    std::vector<int> owner_;
    std::vector<std::vector<int>> row_failures_;
    std::vector<TermIndex> case1_failures_;
    std::vector<BuildStep> trace_;
    const StepObserver& observer_;
};

std::string failure_message(int step, const SignedTerm& pair, const std::string& reason) {
    return "construction failed at step " + std::to_string(step) + " on " + to_string(pair.index) + ": " + reason;
}

}  // namespace

ConstructionFailure::ConstructionFailure(int step, SignedTerm pair, std::string reason, std::vector<BuildStep> trace)
    : std::runtime_error(failure_message(step, pair, reason)),
      step_(step),
      pair_(pair),
      reason_(std::move(reason)),
      trace_(std::move(trace)) {}

BuildResult build_good_partition(const SignPattern& pattern, const StepObserver& observer) {
    return Builder(pattern, observer).run();
}

std::vector<SignedTerm> horizontal_list(const TermIndex& t, const NonCanonicalSet& J) {
    std::vector<SignedTerm> out;
    for (int i = t.i; i <= t.j; ++i) {
        if (auto s = J.sign_of({i, t.j})) out.push_back({{i, t.j}, *s, true});
    }
    return out;
}

std::vector<SignedTerm> vertical_list(const TermIndex& t, const NonCanonicalSet& J) {
    std::vector<SignedTerm> out;
    for (int j = t.i; j <= t.j; ++j) {
        if (auto s = J.sign_of({t.i, j})) out.push_back({{t.i, j}, *s, true});
    }
    return out;
}

}  // namespace pohst
