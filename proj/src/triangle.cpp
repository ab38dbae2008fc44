#include "pohst/triangle.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace pohst {

Sign sign_from_int(int value) {
    if (value == 1) return Sign::positive;
    if (value == -1) return Sign::negative;
    throw std::invalid_argument("sign must be +1 or -1, got " + std::to_string(value));
}

char sign_char(Sign s) { return s == Sign::positive ? '+' : '-'; }

std::string to_string(const TermIndex& t) {
    return "(" + std::to_string(t.i) + "," + std::to_string(t.j) + ")";
}

bool is_valid(const TermIndex& t, int n) { return 1 <= t.i && t.i <= t.j && t.j <= n; }

void require_valid(const TermIndex& t, int n) {
    if (!is_valid(t, n)) {
        throw std::out_of_range("index " + to_string(t) + " outside the triangle of dimension " +
                                std::to_string(n));
    }
}

Vector::Vector(std::vector<double> coords) : coords_(std::move(coords)) {
    if (coords_.empty()) throw std::invalid_argument("vector must have at least one coordinate");
    for (double x : coords_) {
        if (!(x >= -1.0 && x <= 1.0)) {
            throw std::invalid_argument("coordinate " + std::to_string(x) + " outside [-1, 1]");
        }
    }
}

double Vector::at(int k) const {
    if (k < 1 || k > size()) throw std::out_of_range("coordinate index out of range");
    return coords_[static_cast<std::size_t>(k - 1)];
}

SignPattern::SignPattern(std::vector<Sign> signs) : signs_(std::move(signs)) {
    if (signs_.empty()) throw std::invalid_argument("sign pattern must be nonempty");
}

SignPattern SignPattern::from_ints(std::span<const int> values) {
    std::vector<Sign> signs;
    signs.reserve(values.size());
    for (int v : values) signs.push_back(sign_from_int(v));
    return SignPattern(std::move(signs));
}

SignPattern SignPattern::parse(std::string_view text) {
    std::vector<Sign> signs;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        if (comma == std::string_view::npos) comma = text.size();
        std::string_view token = text.substr(pos, comma - pos);
        while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
        while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
        if (token == "+" || token == "+1" || token == "1") {
            signs.push_back(Sign::positive);
        } else if (token == "-" || token == "-1") {
            signs.push_back(Sign::negative);
        } else {
            throw std::invalid_argument("bad sign token '" + std::string(token) + "' in pattern '" +
                                        std::string(text) + "'");
        }
        pos = comma + 1;
    }
    return SignPattern(std::move(signs));
}

SignPattern SignPattern::from_mask(int n, std::uint64_t mask) {
    if (n < 1 || n > 63) throw std::invalid_argument("pattern dimension must be in 1..63");
    std::vector<Sign> signs(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) signs[k] = ((mask >> k) & 1U) ? Sign::negative : Sign::positive;
    return SignPattern(std::move(signs));
}

SignPattern SignPattern::of(const Vector& v) {
    std::vector<Sign> signs;
    signs.reserve(static_cast<std::size_t>(v.size()));
    for (double x : v.coords()) {
        if (x == 0.0) throw std::invalid_argument("sign pattern of a vector with a zero coordinate");
        signs.push_back(x > 0.0 ? Sign::positive : Sign::negative);
    }
    return SignPattern(std::move(signs));
}

Sign SignPattern::at(int k) const {
    if (k < 1 || k > size()) throw std::out_of_range("pattern index out of range");
    return signs_[static_cast<std::size_t>(k - 1)];
}

int SignPattern::negative_count() const {
    return static_cast<int>(std::count(signs_.begin(), signs_.end(), Sign::negative));
}

std::vector<int> SignPattern::to_ints() const {
    std::vector<int> out;
    out.reserve(signs_.size());
    for (Sign s : signs_) out.push_back(to_int(s));
    return out;
}

std::string SignPattern::to_string() const {
    std::string out;
    for (std::size_t k = 0; k < signs_.size(); ++k) {
        if (k) out += ',';
        out += sign_char(signs_[k]);
    }
    return out;
}

NonCanonicalSet::NonCanonicalSet(int n, std::vector<SignedTerm> members)
    : n_(n), members_(std::move(members)), lookup_(static_cast<std::size_t>(triangle_size(n)), 0) {
    std::sort(members_.begin(), members_.end(),
              [](const SignedTerm& a, const SignedTerm& b) { return prec_less(a.index, b.index); });
    for (const auto& m : members_) {
        require_valid(m.index, n_);
        lookup_[triangle_slot(m.index)] = static_cast<std::int8_t>(to_int(m.sign));
    }
}

bool NonCanonicalSet::contains(const TermIndex& t) const {
    return is_valid(t, n_) && lookup_[triangle_slot(t)] != 0;
}

std::optional<Sign> NonCanonicalSet::sign_of(const TermIndex& t) const {
    if (!contains(t)) return std::nullopt;
    return static_cast<Sign>(lookup_[triangle_slot(t)]);
}

int NonCanonicalSet::negative_count() const {
    return static_cast<int>(std::count_if(members_.begin(), members_.end(),
                                          [](const SignedTerm& m) { return m.sign == Sign::negative; }));
}

double eval_term(const Vector& v, const TermIndex& t) {
    require_valid(t, v.size());
    const auto x = v.coords();
    double prod = 1.0;
    for (int k = t.i; k <= t.j; ++k) prod *= x[static_cast<std::size_t>(k - 1)];
    return 1.0 - prod;
}

double eval_f(const Vector& v) { return eval_f(v.coords()); }

double eval_f(std::span<const double> x) {
    const std::size_t n = x.size();
    double f = 1.0;
    // running product along each row start i; no prefix-product division
    for (std::size_t i = 0; i < n; ++i) {
        double prod = 1.0;
        for (std::size_t j = i; j < n; ++j) {
            prod *= x[j];
            f *= 1.0 - prod;
        }
    }
    return f;
}

Vector negate_abs(const Vector& v) {
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(v.size()));
    for (double x : v.coords()) out.push_back(-std::fabs(x));
    return Vector(std::move(out));
}

Sign product_sign(const SignPattern& p, const TermIndex& t) {
    require_valid(t, p.size());
    const auto s = p.signs();
    Sign acc = Sign::positive;
    for (int k = t.i; k <= t.j; ++k) acc = acc * s[static_cast<std::size_t>(k - 1)];
    return acc;
}

SignedTerm signed_term(const SignPattern& p, const TermIndex& t) {
    const Sign s = product_sign(p, t);
    return SignedTerm{t, s, s != canonical_sign(t)};
}

NonCanonicalSet noncanonical_set(const SignPattern& p) {
    const int n = p.size();
    const auto s = p.signs();
    std::vector<SignedTerm> members;
    for (int i = 1; i <= n; ++i) {
        Sign acc = Sign::positive;
        for (int j = i; j <= n; ++j) {
            acc = acc * s[static_cast<std::size_t>(j - 1)];
            const TermIndex t{i, j};
            if (acc != canonical_sign(t)) members.push_back(SignedTerm{t, acc, true});
        }
    }
    return NonCanonicalSet(n, std::move(members));
}

std::vector<Vector> split_at_zeros(const Vector& v) {
    std::vector<Vector> segments;
    std::vector<double> current;
    for (double x : v.coords()) {
        if (x == 0.0) {
            if (!current.empty()) segments.emplace_back(std::move(current));
            current.clear();
        } else {
            current.push_back(x);
        }
    }
    if (!current.empty()) segments.emplace_back(std::move(current));
    return segments;
}

}  // namespace pohst
