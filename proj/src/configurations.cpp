#include <algorithm>
#include <set>
#include <stdexcept>

#include "pohst/partition.hpp"

namespace pohst {

std::string_view to_string(BlockKind kind) {
    switch (kind) {
        case BlockKind::singleton: return "singleton";
        case BlockKind::doubleton: return "doubleton";
        case BlockKind::quadrupleton: return "quadrupleton";
    }
    return "?";
}

std::string_view to_string(Provenance provenance) {
    switch (provenance) {
        case Provenance::initial: return "initial";
        case Provenance::case1: return "case1";
        case Provenance::case2_op1: return "case2-op1";
        case Provenance::case2_op2: return "case2-op2";
        case Provenance::case3_op1: return "case3-op1";
        case Provenance::case3_op2: return "case3-op2";
    }
    return "?";
}

BlockKind parse_block_kind(std::string_view name) {
    for (auto k : {BlockKind::singleton, BlockKind::doubleton, BlockKind::quadrupleton}) {
        if (to_string(k) == name) return k;
    }
    throw std::invalid_argument("unknown block kind '" + std::string(name) + "'");
}

Provenance parse_provenance(std::string_view name) {
    for (auto p : {Provenance::initial, Provenance::case1, Provenance::case2_op1, Provenance::case2_op2,
                   Provenance::case3_op1, Provenance::case3_op2}) {
        if (to_string(p) == name) return p;
    }
    throw std::invalid_argument("unknown provenance '" + std::string(name) + "'");
}

std::string_view to_string(ConfigTag tag) {
    switch (tag) {
        case ConfigTag::sing: return "sing";
        case ConfigTag::hdoub: return "hdoub";
        case ConfigTag::vdoub: return "vdoub";
        case ConfigTag::iquad: return "iquad";
        case ConfigTag::tquad: return "tquad";
        case ConfigTag::nhdoub: return "nhdoub";
        case ConfigTag::nvdoub: return "nvdoub";
        case ConfigTag::unassigned: return "unassigned";
    }
    return "?";
}

Verdict Verdict::reject(std::string reason, std::optional<std::size_t> block) {
    Verdict v;
    v.accepted = false;
    v.reason = std::move(reason);
    v.block = block;
    return v;
}

bool PartitionBlock::contains(const TermIndex& t) const {
    return std::any_of(members.begin(), members.end(), [&](const SignedTerm& m) { return m.index == t; });
}

namespace {

Configuration classify_in(const SignedTerm& self, const PartitionBlock& block) {
    Configuration out;
    for (const auto& m : block.members) {
        if (m.index != self.index) out.partners.push_back(m);
    }
    const auto [i, j] = self.index;
    auto has = [&](auto pred) { return std::any_of(out.partners.begin(), out.partners.end(), pred); };

    if (self.sign == Sign::positive) {
        switch (block.kind) {
            case BlockKind::singleton:
                out.tag = ConfigTag::sing;
                return out;
            case BlockKind::doubleton: {
                const auto& o = out.partners.at(0);
                if (o.sign == Sign::negative && o.index.j == j && o.index.i < i) {
                    out.tag = ConfigTag::hdoub;
                    return out;
                }
                if (o.sign == Sign::negative && o.index.i == i && o.index.j > j) {
                    out.tag = ConfigTag::vdoub;
                    return out;
                }
                break;
            }
            case BlockKind::quadrupleton: {
                const bool neg_left = has([&](auto& m) { return m.sign == Sign::negative && m.index.j == j && m.index.i < i; });
                const bool neg_above = has([&](auto& m) { return m.sign == Sign::negative && m.index.i == i && m.index.j > j; });
                const bool neg_right = has([&](auto& m) { return m.sign == Sign::negative && m.index.j == j && m.index.i > i; });
                const bool neg_below = has([&](auto& m) { return m.sign == Sign::negative && m.index.i == i && m.index.j < j; });
                if (neg_left && neg_above) {
                    out.tag = ConfigTag::iquad;
                    return out;
                }
                if (neg_right && neg_below) {
                    out.tag = ConfigTag::tquad;
                    return out;
                }
                break;
            }
        }
    } else {
        if (has([&](auto& m) { return m.sign == Sign::positive && m.index.j == j && m.index.i > i; })) {
            out.tag = ConfigTag::nhdoub;
            return out;
        }
        if (has([&](auto& m) { return m.sign == Sign::positive && m.index.i == i && m.index.j < j; })) {
            out.tag = ConfigTag::nvdoub;
            return out;
        }
    }
    throw std::logic_error("pair " + to_string(self.index) + " sits in a block of inconsistent shape");
}

// Positive partner that gives a negative pair its nhdoub / nvdoub configuration.
TermIndex negative_partner(const SignedTerm& self, const Configuration& c) {
    for (const auto& m : c.partners) {
        if (m.sign != Sign::positive) continue;
        if (c.tag == ConfigTag::nhdoub && m.index.j == self.index.j && m.index.i > self.index.i) return m.index;
        if (c.tag == ConfigTag::nvdoub && m.index.i == self.index.i && m.index.j < self.index.j) return m.index;
    }
    throw std::logic_error("negative pair without partner");
}

struct NegativeSite {
    SignedTerm term;
    ConfigTag tag;
    TermIndex partner;
};

Verdict impossible(int rule, std::vector<TermIndex> witness) {
    std::string text = "impossible configuration (" + std::to_string(rule) + "):";
    for (const auto& t : witness) text += " " + to_string(t);
    Verdict v = Verdict::reject(std::move(text));
    v.rule = rule;
    v.witness = std::move(witness);
    return v;
}

}  // namespace

Configuration classify(const SignedTerm& t, std::span<const PartitionBlock> blocks) {
    for (const auto& block : blocks) {
        for (const auto& m : block.members) {
            if (m.index == t.index) return classify_in(m, block);
        }
    }
    return Configuration{};
}

Configuration classify(const SignedTerm& t, const GoodPartition& gp) { return classify(t, gp.blocks); }

Verdict check_impossible_configurations(const ConstructionState& state) {
    const int n = state.pattern.size();
    std::vector<std::vector<NegativeSite>> rows(static_cast<std::size_t>(n) + 1);
    std::vector<std::vector<std::pair<TermIndex, TermIndex>>> vdoubs(static_cast<std::size_t>(n) + 1);
    std::set<TermIndex> nhdoub_negatives;

    for (const auto& block : state.blocks) {
        for (const auto& m : block.members) {
            const auto c = classify_in(m, block);
            if (m.sign == Sign::negative) {
                rows.at(static_cast<std::size_t>(m.index.j)).push_back({m, c.tag, negative_partner(m, c)});
                if (c.tag == ConfigTag::nhdoub) nhdoub_negatives.insert(m.index);
            } else if (c.tag == ConfigTag::vdoub) {
                vdoubs.at(static_cast<std::size_t>(m.index.j)).push_back({m.index, c.partners.front().index});
            }
        }
    }

    // Case 2 pair of a row: the failed pair with the largest first index.
    std::vector<int> first_failure(static_cast<std::size_t>(n) + 1, 0);
    for (const auto& f : state.case1_failures) {
        auto& slot = first_failure.at(static_cast<std::size_t>(f.j));
        slot = std::max(slot, f.i);
    }

    for (int j = 1; j <= n; ++j) {
        const auto& sites = rows[static_cast<std::size_t>(j)];
        for (const auto& a : sites) {
            for (const auto& b : sites) {
                const int i = a.term.index.i, ip = b.term.index.i;
                if (!(i < ip)) continue;
                if (a.tag == ConfigTag::nhdoub && b.tag == ConfigTag::nhdoub && ip < a.partner.i &&
                    a.partner.i < b.partner.i) {
                    return impossible(1, {a.term.index, a.partner, b.term.index, b.partner});
                }
                if (a.tag == ConfigTag::nhdoub && b.tag == ConfigTag::nvdoub && ip < a.partner.i) {
                    return impossible(2, {a.term.index, a.partner, b.term.index, b.partner});
                }
                if (a.tag == ConfigTag::nvdoub && b.tag == ConfigTag::nvdoub) {
                    if (j - a.partner.j != j - b.partner.j) {
                        return impossible(4, {a.term.index, a.partner, b.term.index, b.partner});
                    }
                    if (first_failure[static_cast<std::size_t>(j)] == i) {
                        return impossible(5, {a.term.index, a.partner, b.term.index, b.partner});
                    }
                }
            }
        }
    }

    // (3) needs every negative pair of the row, assigned or not.
    const auto J = noncanonical_set(state.pattern);
    for (int j = 1; j <= n; ++j) {
        for (const auto& [positive, negative_above] : vdoubs[static_cast<std::size_t>(j)]) {
            for (int i = 1; i < positive.i; ++i) {
                const TermIndex t{i, j};
                if (J.sign_of(t) == Sign::negative && !nhdoub_negatives.contains(t)) {
                    return impossible(3, {t, positive, negative_above});
                }
            }
        }
    }
    return Verdict::accept();
}

Verdict check_step_progress(const ConstructionState& state) {
    const auto J = noncanonical_set(state.pattern);
    std::set<TermIndex> covered;
    std::size_t total = 0;
    for (const auto& block : state.blocks) {
        for (const auto& m : block.members) {
            covered.insert(m.index);
            ++total;
        }
    }
    if (covered.size() != total) return Verdict::reject("blocks overlap");

    std::size_t expected = 0;
    int negatives_done = 0;
    for (const auto& m : J.members()) {
        const bool upto = state.processed_upto &&
                          (m.index == *state.processed_upto || prec_less(m.index, *state.processed_upto));
        const bool should_cover = m.sign == Sign::positive || upto;
        if (should_cover) ++expected;
        if (m.sign == Sign::negative && upto) ++negatives_done;
        if (upto && !covered.contains(m.index)) {
            return Verdict::reject("pair " + to_string(m.index) + " precedes the current step but is uncovered");
        }
        if (m.sign == Sign::negative && !upto && covered.contains(m.index)) {
            return Verdict::reject("negative pair " + to_string(m.index) + " is covered before its turn");
        }
    }
    if (total != expected) {
        return Verdict::reject("covered " + std::to_string(total) + " pairs, expected " + std::to_string(expected));
    }
    if (negatives_done != state.step) {
        return Verdict::reject("step counter " + std::to_string(state.step) + " but " +
                               std::to_string(negatives_done) + " negative pairs processed");
    }
    return Verdict::accept();
}

ParityCounts parity_counts(const SignPattern& p) {
    const int n = p.size();
    ParityCounts out;
    const auto J = noncanonical_set(p);
    for (const auto& m : J.members()) {
        if (m.index.i != 1 && m.index.j != n) continue;
        if (m.sign == Sign::positive) {
            ++out.positive;
        } else {
            ++out.negative;
        }
    }
    return out;
}

bool sign_rectangle_relation(const SignPattern& p, const std::array<TermIndex, 4>& corners) {
    std::set<TermIndex> distinct(corners.begin(), corners.end());
    std::set<int> is, js;
    for (const auto& c : corners) {
        is.insert(c.i);
        js.insert(c.j);
    }
    if (distinct.size() != 4 || is.size() != 2 || js.size() != 2) {
        throw std::invalid_argument("corners do not form a rectangle");
    }
    const int lo_i = *is.begin(), hi_i = *is.rbegin();
    const int lo_j = *js.begin(), hi_j = *js.rbegin();
    const int a = to_int(product_sign(p, {hi_i, lo_j}));
    const int d = to_int(product_sign(p, {lo_i, hi_j}));
    const int b = to_int(product_sign(p, {lo_i, lo_j}));
    const int c = to_int(product_sign(p, {hi_i, hi_j}));
    return a * d == b * c;
}

}  // namespace pohst
