#pragma once

// Upper bounds on log|D_k| for a totally real field k of degree m in terms
// of its regulator R_k and the Hermite constant gamma_{m-1}. The classical
// (Remak) bound starts with m log m; the sharper one with floor(m/2) log 4.
// The bounds are stated for primitive totally real fields; that hypothesis
// is not checked here. Logarithms are natural.

#include <string_view>

namespace pohst {

enum class HermiteSource { exact_table, upper_estimate, user };
std::string_view to_string(HermiteSource source);

struct HermiteValue {
    double value = 0.0;
    HermiteSource source = HermiteSource::exact_table;
};

/// gamma_d: exact for d in 1..8 and 24, otherwise the upper estimate
/// (2/pi) Gamma(2 + d/2)^(2/d). Throws std::domain_error for d < 1.
HermiteValue hermite_constant(int d);

/// The upper estimate alone, for any d >= 1.
double hermite_upper_estimate(int d);

struct RegulatorInput {
    int m = 2;
    double regulator = 1.0;
    double hermite = 1.0;
    HermiteSource hermite_source = HermiteSource::exact_table;

    /// Uses hermite_constant(m - 1). Throws std::domain_error on bad input.
    static RegulatorInput with_table(int m, double regulator);
    /// Throws std::domain_error on bad input.
    static RegulatorInput with_gamma(int m, double regulator, double gamma);
};

/// sqrt(gamma (m^3 - m) / 3) * (sqrt(m) R)^(1/(m-1)), shared by both bounds.
double regulator_term(const RegulatorInput& in);
double remak_bound(const RegulatorInput& in);
double improved_bound(const RegulatorInput& in);

struct BoundResult {
    int m = 0;
    double regulator = 0.0;
    double hermite = 0.0;
    HermiteSource hermite_source = HermiteSource::exact_table;
    double remak_bound = 0.0;
    double improved_bound = 0.0;
    /// remak - improved = m log m - floor(m/2) log 4.
    double improvement = 0.0;
};

BoundResult compare_bounds(const RegulatorInput& in);

}  // namespace pohst
