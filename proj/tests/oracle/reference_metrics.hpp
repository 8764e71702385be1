#pragma once

// Test-only single-expression evaluators for alpha, beta, ARBI and CRBI.
// sigma is written as (1 - delta) / 4, its closed form, rather than the min.

#include <cmath>

namespace ctxrbi::oracle {

inline double ref_alpha_sigmoid(double k, double d) { return 2.0 / (1.0 + std::exp(-k * d)); }

inline double ref_alpha_power(double k, double d) { return 2.0 * std::pow((d + 1.0) / 2.0, k); }

inline double ref_beta(double alpha, double d, double we_end) {
    return d <= 0.0 ? 1.0
                    : (2.0 / alpha) * std::exp(-std::pow(we_end - (1.0 + d) / 2.0, 2) /
                                                (2.0 * std::pow((1.0 - d) / 4.0, 2)));
}

inline double ref_arbi(double alpha, int rbi) { return alpha * rbi; }

inline double ref_crbi(double alpha, double d, double we_end, int rbi) {
    return ref_beta(alpha, d, we_end) * alpha * rbi;
}

}  // namespace ctxrbi::oracle
