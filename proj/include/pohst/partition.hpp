#pragma once

// Good partitions of the non-canonical set J_v.
//
// A good partition covers J_v with three block shapes:
//   singleton     {(i,j)+}
//   doubleton     {(i,j)+, (i',j')-} with the negative pair left of the
//                 positive one in its row, or above it in its column
//   quadrupleton  rectangle corners {(i,j), (i-l,j), (i,j+l'), (i-l,j+l')},
//                 positive at (i,j) and (i-l,j+l'), negative at the others
//
// build_good_partition() grows the partition one negative pair at a time,
// in prec_less order, starting from all positive pairs as singletons.
// validate_partition() checks a finished partition from scratch and shares
// no shape code with the builder.

#include <array>
#include <cstddef>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "pohst/triangle.hpp"

namespace pohst {

enum class BlockKind { singleton, doubleton, quadrupleton };

/// Which construction step produced a block.
enum class Provenance { initial, case1, case2_op1, case2_op2, case3_op1, case3_op2 };

std::string_view to_string(BlockKind kind);
std::string_view to_string(Provenance provenance);
/// Throw std::invalid_argument on an unknown name.
BlockKind parse_block_kind(std::string_view name);
Provenance parse_provenance(std::string_view name);

struct PartitionBlock {
    BlockKind kind = BlockKind::singleton;
    std::vector<SignedTerm> members;
    Provenance provenance = Provenance::initial;

    bool contains(const TermIndex& t) const;

    friend bool operator==(const PartitionBlock&, const PartitionBlock&) = default;
};

struct GoodPartition {
    int n = 0;
    SignPattern pattern;
    std::vector<PartitionBlock> blocks;

    friend bool operator==(const GoodPartition&, const GoodPartition&) = default;
};

/// Outcome of a check. Rejections carry a reason and, where it applies,
/// the offending block, the violated rule number and witness pairs.
struct Verdict {
    bool accepted = true;
    std::string reason;
    std::optional<std::size_t> block;
    int rule = 0;
    std::vector<TermIndex> witness;

    static Verdict accept() { return {}; }
    static Verdict reject(std::string reason, std::optional<std::size_t> block = std::nullopt);

    explicit operator bool() const { return accepted; }
};

/// Snapshot of the builder after pi_k has been formed.
struct ConstructionState {
    SignPattern pattern;
    std::vector<PartitionBlock> blocks;
    /// Negative pairs for which Case 1 did not apply, in processing order.
    std::vector<TermIndex> case1_failures;
    /// The k-th negative pair, or empty for pi_0.
    std::optional<TermIndex> processed_upto;
    int step = 0;
};

struct BuildStep {
    int k = 0;
    SignedTerm pair;
    Provenance provenance = Provenance::initial;
    /// Positive pairs merged with `pair` (1 for operation 1, 2 for operation 2).
    std::vector<TermIndex> consumed;
};

struct BuildResult {
    GoodPartition partition;
    std::vector<BuildStep> trace;
};

/// Raised when no case of the construction applies. A raise means either
/// the implementation or the underlying existence argument is wrong.
class ConstructionFailure : public std::runtime_error {
public:
    ConstructionFailure(int step, SignedTerm pair, std::string reason, std::vector<BuildStep> trace);

    int step() const { return step_; }
    const SignedTerm& pair() const { return pair_; }
    const std::string& reason() const { return reason_; }
    const std::vector<BuildStep>& trace() const { return trace_; }

private:
    int step_;
    SignedTerm pair_;
    std::string reason_;
    std::vector<BuildStep> trace_;
};

using StepObserver = std::function<void(const ConstructionState&)>;

/// Builds pi_N. The observer, when set, sees pi_0 and every pi_k.
BuildResult build_good_partition(const SignPattern& pattern, const StepObserver& observer = {});

/// l_(i,j): members of J in row t.j with first index >= t.i, ascending by i.
std::vector<SignedTerm> horizontal_list(const TermIndex& t, const NonCanonicalSet& J);
/// s_(i,j): members of J in column t.i with second index <= t.j, ascending by j.
std::vector<SignedTerm> vertical_list(const TermIndex& t, const NonCanonicalSet& J);

Verdict validate_partition(const GoodPartition& gp);

enum class ConfigTag { sing, hdoub, vdoub, iquad, tquad, nhdoub, nvdoub, unassigned };
std::string_view to_string(ConfigTag tag);

struct Configuration {
    ConfigTag tag = ConfigTag::unassigned;
    /// The other members of the containing block.
    std::vector<SignedTerm> partners;
};

/// How t sits inside its block. Throws std::logic_error on a block whose
/// shape matches no configuration.
Configuration classify(const SignedTerm& t, std::span<const PartitionBlock> blocks);
Configuration classify(const SignedTerm& t, const GoodPartition& gp);

/// Scans for the five configurations the construction can never produce.
/// On rejection `rule` is 1..5 and `witness` lists the pairs involved.
Verdict check_impossible_configurations(const ConstructionState& state);

/// Each step covers exactly one more pair; everything before the current
/// negative pair is covered and no later negative pair is.
Verdict check_step_progress(const ConstructionState& state);

struct ParityCounts {
    int positive = 0;
    int negative = 0;
    friend bool operator==(const ParityCounts&, const ParityCounts&) = default;
};

/// Non-canonical pairs on the edges i = 1 or j = n, split by product sign.
ParityCounts parity_counts(const SignPattern& p);

/// s(a)s(d) == s(b)s(c) for the rectangle with corners a = (i,j),
/// d = (i-l,j+l') and b, c the other two. Corner order is free.
/// Throws std::invalid_argument if the corners do not form a rectangle.
bool sign_rectangle_relation(const SignPattern& p, const std::array<TermIndex, 4>& corners);

enum class IdealBlockKind { singleton, pair, triple, quadruple };
std::string_view to_string(IdealBlockKind kind);

struct IdealBlock {
    IdealBlockKind kind = IdealBlockKind::singleton;
    std::vector<TermIndex> members;

    /// Upper bound on the block product over [-1, 0]^n from the elementary
    /// inequalities: 2 for singletons and triples, 1 for pairs and quadruples.
    double product_bound() const;
};

/// Factorization of the full triangle used for all-nonpositive vectors.
std::vector<IdealBlock> ideal_case_factorization(int n);

/// Block-wise and global comparison of v against -|v|.
/// Requires gp to be built from the sign pattern of v.
Verdict domination_check(const Vector& v, const GoodPartition& gp, double tolerance = 1e-12);

}  // namespace pohst
