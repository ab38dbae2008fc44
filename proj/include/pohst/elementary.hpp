#pragma once

// The elementary products behind both factorizations.
//
// Bounded products (a, b, c in the ranges noted):
//   single(a)         = 1 - a                          <= 2,  a in [-1,1]
//   pair(a, b)        = (1-a)(1-ab)                    <= 1,  a in [0,1], b in [-1,0]
//   triple(a, b)      = (1-a)(1-b)(1-ab)               <= 2,  a, b in [-1,1]
//   quadruple(a,b,c)  = (1-a)(1-ab)(1-ac)(1-abc)       <= 1,  a in [0,1], b, c in [-1,0]
//
// Sign exchanges, a, b, c in [0,1]: each *_lower <= the matching *_upper.

namespace pohst::elementary {

constexpr double single(double a) { return 1.0 - a; }
constexpr double pair(double a, double b) { return (1.0 - a) * (1.0 - a * b); }
constexpr double triple(double a, double b) { return (1.0 - a) * (1.0 - b) * (1.0 - a * b); }
constexpr double quadruple(double a, double b, double c) {
    return (1.0 - a) * (1.0 - a * b) * (1.0 - a * c) * (1.0 - a * b * c);
}

constexpr double exchange1_lower(double a) { return 1.0 - a; }
constexpr double exchange1_upper(double a) { return 1.0 + a; }
constexpr double exchange2_lower(double a, double b) { return (1.0 - a) * (1.0 + a * b); }
constexpr double exchange2_upper(double a, double b) { return (1.0 + a) * (1.0 - a * b); }
constexpr double exchange3_lower(double a, double b, double c) {
    return (1.0 - a) * (1.0 + a * b) * (1.0 + a * c) * (1.0 - a * b * c);
}
constexpr double exchange3_upper(double a, double b, double c) {
    return (1.0 + a) * (1.0 - a * b) * (1.0 - a * c) * (1.0 + a * b * c);
}

}  // namespace pohst::elementary
