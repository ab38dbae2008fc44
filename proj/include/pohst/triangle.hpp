#pragma once

// The triangular term lattice behind
//
//     f_n(v) = prod_{1 <= i <= j <= n} (1 - x_i x_{i+1} ... x_j)
//
// Every index pair in the public API is 1-based: (i, j) addresses the
// term 1 - x_i...x_j, with 1 <= i <= j <= n.

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace pohst {

enum class Sign : std::int8_t { negative = -1, positive = 1 };

constexpr int to_int(Sign s) { return static_cast<int>(s); }
constexpr Sign operator*(Sign a, Sign b) {
    return a == b ? Sign::positive : Sign::negative;
}
constexpr Sign operator-(Sign s) {
    return s == Sign::positive ? Sign::negative : Sign::positive;
}
/// (-1)^e as a Sign.
constexpr Sign parity_sign(int e) {
    return (e % 2 == 0) ? Sign::positive : Sign::negative;
}
Sign sign_from_int(int value);
char sign_char(Sign s);

struct TermIndex {
    int i = 1;
    int j = 1;

    friend constexpr auto operator<=>(const TermIndex&, const TermIndex&) = default;
};

std::string to_string(const TermIndex& t);

/// Number of index pairs in the triangle of dimension n.
constexpr int triangle_size(int n) { return n * (n + 1) / 2; }

/// Throws std::out_of_range unless 1 <= t.i <= t.j <= n.
void require_valid(const TermIndex& t, int n);
bool is_valid(const TermIndex& t, int n);

/// Dense row-major slot of a valid TermIndex; row j holds i = 1..j.
constexpr int triangle_slot(const TermIndex& t) {
    return (t.j - 1) * t.j / 2 + (t.i - 1);
}

/// A point of [-1, 1]^n, n >= 1.
class Vector {
public:
    Vector() = default;
    /// Throws std::invalid_argument if empty or a coordinate leaves [-1, 1].
    explicit Vector(std::vector<double> coords);

    int size() const { return static_cast<int>(coords_.size()); }
    /// 1-based coordinate access.
    double at(int k) const;
    std::span<const double> coords() const& { return coords_; }
    std::span<const double> coords() const&& = delete;

    friend bool operator==(const Vector&, const Vector&) = default;

private:
    std::vector<double> coords_;
};

/// Signs of the coordinates of a zero-free vector.
class SignPattern {
public:
    SignPattern() = default;
    explicit SignPattern(std::vector<Sign> signs);

    /// Entries from {+1, -1}; anything else throws std::invalid_argument.
    static SignPattern from_ints(std::span<const int> values);
    /// Comma-separated '+' / '-' tokens, e.g. "-,+,-".
    static SignPattern parse(std::string_view text);
    /// Bit k (0-based) of mask set means coordinate k+1 is negative.
    static SignPattern from_mask(int n, std::uint64_t mask);
    /// Signs of v; throws std::invalid_argument on a zero coordinate.
    static SignPattern of(const Vector& v);

    int size() const { return static_cast<int>(signs_.size()); }
    /// 1-based.
    Sign at(int k) const;
    std::span<const Sign> signs() const { return signs_; }
    int negative_count() const;
    std::vector<int> to_ints() const;
    std::string to_string() const;

    friend bool operator==(const SignPattern&, const SignPattern&) = default;

private:
    std::vector<Sign> signs_;
};

struct SignedTerm {
    TermIndex index;
    Sign sign = Sign::positive;
    bool noncanonical = false;

    friend bool operator==(const SignedTerm&, const SignedTerm&) = default;
};

/// J_v: the non-canonical index pairs of a sign pattern, each with its
/// product sign. Members are kept in the construction order (see prec_less).
class NonCanonicalSet {
public:
    NonCanonicalSet() = default;
    NonCanonicalSet(int n, std::vector<SignedTerm> members);

    int dimension() const { return n_; }
    std::span<const SignedTerm> members() const& { return members_; }
    std::span<const SignedTerm> members() const&& = delete;
    bool empty() const { return members_.empty(); }
    std::size_t size() const { return members_.size(); }

    bool contains(const TermIndex& t) const;
    /// Product sign of t if t is a member.
    std::optional<Sign> sign_of(const TermIndex& t) const;
    /// Count of members with negative product sign (N in the construction).
    int negative_count() const;

private:
    int n_ = 0;
    std::vector<SignedTerm> members_;
    std::vector<std::int8_t> lookup_;  // 0 = canonical, else product sign
};

/// 1 - x_i ... x_j. Throws std::out_of_range for an invalid index.
double eval_term(const Vector& v, const TermIndex& t);

/// f_n(v), the product of all n(n+1)/2 terms.
double eval_f(const Vector& v);
/// Same product on raw coordinates; no range checks.
double eval_f(std::span<const double> x);

/// (-|x_1|, ..., -|x_n|).
Vector negate_abs(const Vector& v);

/// Product of the pattern's signs over [t.i, t.j].
Sign product_sign(const SignPattern& p, const TermIndex& t);

/// Sign of the all-negative reference pattern at t, i.e. (-1)^(i+j+1).
constexpr Sign canonical_sign(const TermIndex& t) { return parity_sign(t.i + t.j + 1); }

SignedTerm signed_term(const SignPattern& p, const TermIndex& t);

NonCanonicalSet noncanonical_set(const SignPattern& p);

/// Maximal zero-free runs of v, in order. f(v) is the product of f over them.
std::vector<Vector> split_at_zeros(const Vector& v);

/// Total order used by the partition construction: row j ascending, and
/// inside a row from the diagonal (i = j) towards the first column.
constexpr bool prec_less(const TermIndex& a, const TermIndex& b) {
    return b.j > a.j || (b.j == a.j && b.i < a.i);
}

}  // namespace pohst
