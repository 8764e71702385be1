#pragma once

#include <string_view>

#include "ctxrbi/game.hpp"

namespace ctxrbi {

enum class AlphaKind { Power, Sigmoid };

std::string_view to_string(AlphaKind kind) noexcept;
/// "power" or "sigmoid", case-insensitive. Throws Error(DomainError).
AlphaKind parse_alpha_kind(std::string_view text);

/// Monotone map from a WE change in [-1, 1] to a run multiplier in [0, 2].
///
///   Power:   2 * ((delta + 1) / 2)^k
///   Sigmoid: 2 / (1 + exp(-k * delta))
class AlphaFamily {
public:
    /// Throws Error(DomainError) unless k is finite and positive.
    AlphaFamily(AlphaKind kind, double k);

    /// Sigmoid with k = 4.
    static AlphaFamily standard() { return AlphaFamily(AlphaKind::Sigmoid, 4.0); }

    AlphaKind kind() const noexcept { return kind_; }
    double k() const noexcept { return k_; }

    /// Throws Error(DomainError) for delta outside [-1, 1].
    double operator()(double delta) const;

private:
    AlphaKind kind_;
    double k_;
};

inline double alpha(const AlphaFamily& family, double delta) { return family(delta); }

/// Data-quality flags raised while scoring.
struct MetricWarnings {
    /// sigma collapsed below 1e-9 (delta at or next to 1).
    bool sigma_degenerate = false;
    /// we_end outside [delta, 1], which no consistent WE model produces.
    bool we_end_infeasible = false;

    bool any() const noexcept { return sigma_degenerate || we_end_infeasible; }
};

struct BetaResult {
    double value = 1.0;
    /// exp(-(we_end - mu)^2 / (2 sigma^2)), or 1 when delta <= 0.
    double bell = 1.0;
    MetricWarnings warnings{};
};

/// Context factor for a positive WE change: (2 / alpha) times a Gaussian
/// bell in we_end centred on mu = (1 + delta) / 2 with
/// sigma = min((mu - delta) / 2, (1 - mu) / 2). Non-positive changes get 1.
///
/// Throws Error(DomainError) for delta outside [-1, 1] or we_end outside
/// [0, 1].
BetaResult evaluate_beta(const AlphaFamily& family, double delta, double we_end);

inline double beta(const AlphaFamily& family, double delta, double we_end) {
    return evaluate_beta(family, delta, we_end).value;
}

struct MetricValues {
    double alpha = 1.0;
    double beta = 1.0;
    double arbi = 0.0;
    double crbi = 0.0;
    int rbi = 0;
    MetricWarnings warnings{};
};

/// alpha and beta once per event, applied to every run it drove in.
/// Throws Error(DomainError) for rbi < 1.
MetricValues score_event_metrics(const AlphaFamily& family, const DeltaWe& delta_we, int rbi);

}  // namespace ctxrbi
