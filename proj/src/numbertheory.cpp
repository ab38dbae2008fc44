#include "pohst/numbertheory.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace pohst {

std::string_view to_string(HermiteSource source) {
    switch (source) {
        case HermiteSource::exact_table: return "exact-table";
        case HermiteSource::upper_estimate: return "upper-estimate";
        case HermiteSource::user: return "user";
    }
    return "?";
}

double hermite_upper_estimate(int d) {
    if (d < 1) throw std::domain_error("Hermite constant needs dimension >= 1");
    const double dd = static_cast<double>(d);
    return (2.0 / std::numbers::pi) * std::exp(std::lgamma(2.0 + dd / 2.0) * 2.0 / dd);
}

HermiteValue hermite_constant(int d) {
    if (d < 1) throw std::domain_error("Hermite constant needs dimension >= 1");
    switch (d) {
        case 1: return {1.0, HermiteSource::exact_table};
        case 2: return {std::sqrt(4.0 / 3.0), HermiteSource::exact_table};
        case 3: return {std::cbrt(2.0), HermiteSource::exact_table};
        case 4: return {std::sqrt(2.0), HermiteSource::exact_table};
        case 5: return {std::pow(8.0, 1.0 / 5.0), HermiteSource::exact_table};
        case 6: return {std::pow(64.0 / 3.0, 1.0 / 6.0), HermiteSource::exact_table};
        case 7: return {std::pow(64.0, 1.0 / 7.0), HermiteSource::exact_table};
        case 8: return {2.0, HermiteSource::exact_table};
        case 24: return {4.0, HermiteSource::exact_table};
        default: return {hermite_upper_estimate(d), HermiteSource::upper_estimate};
    }
}

namespace {

void require(const RegulatorInput& in) {
    if (in.m < 2) throw std::domain_error("field degree must be at least 2");
    if (!(in.regulator > 0.0) || !std::isfinite(in.regulator)) throw std::domain_error("regulator must be positive");
    if (!(in.hermite > 0.0) || !std::isfinite(in.hermite)) throw std::domain_error("Hermite constant must be positive");
}

// log 4 as 2 log 2, so that m = 2 gives bit-identical first terms
double log4() { return 2.0 * std::log(2.0); }

}  // namespace

RegulatorInput RegulatorInput::with_table(int m, double regulator) {
    if (m < 2) throw std::domain_error("field degree must be at least 2");
    const auto gamma = hermite_constant(m - 1);
    RegulatorInput in{m, regulator, gamma.value, gamma.source};
    require(in);
    return in;
}

RegulatorInput RegulatorInput::with_gamma(int m, double regulator, double gamma) {
    RegulatorInput in{m, regulator, gamma, HermiteSource::user};
    require(in);
    return in;
}

double regulator_term(const RegulatorInput& in) {
    require(in);
    const double m = static_cast<double>(in.m);
    return std::sqrt(in.hermite * (m * m * m - m) / 3.0) * std::pow(std::sqrt(m) * in.regulator, 1.0 / (m - 1.0));
}

double remak_bound(const RegulatorInput& in) {
    const double m = static_cast<double>(in.m);
    return m * std::log(m) + regulator_term(in);
}

double improved_bound(const RegulatorInput& in) {
    return static_cast<double>(in.m / 2) * log4() + regulator_term(in);
}

BoundResult compare_bounds(const RegulatorInput& in) {
    BoundResult out;
    out.m = in.m;
    out.regulator = in.regulator;
    out.hermite = in.hermite;
    out.hermite_source = in.hermite_source;
    out.remak_bound = remak_bound(in);
    out.improved_bound = improved_bound(in);
    // first terms only, so the second term cannot leak rounding in
    const double m = static_cast<double>(in.m);
    out.improvement = m * std::log(m) - static_cast<double>(in.m / 2) * log4();
    return out;
}

}  // namespace pohst
