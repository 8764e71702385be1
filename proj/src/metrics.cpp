#include "ctxrbi/metrics.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>
#include <string>

#include "ctxrbi/errors.hpp"

namespace ctxrbi {

namespace {

constexpr double kSigmaFloor = 1e-9;

void require_unit_interval(double value, double lo, std::string_view name) {
    if (!(value >= lo && value <= 1.0)) {
        throw Error(ErrorKind::DomainError, std::string(name) + " = " + std::to_string(value) + " outside [" +
                                                (lo < 0.0 ? "-1" : "0") + ", 1]");
    }
}

}  // namespace

std::string_view to_string(AlphaKind kind) noexcept { return kind == AlphaKind::Power ? "power" : "sigmoid"; }

AlphaKind parse_alpha_kind(std::string_view text) {
    std::string t(text);
    std::transform(t.begin(), t.end(), t.begin(), [](unsigned char c) { return std::tolower(c); });
    if (t == "power") return AlphaKind::Power;
    if (t == "sigmoid") return AlphaKind::Sigmoid;
    throw Error(ErrorKind::DomainError, "unknown alpha family '" + std::string(text) + "'");
}

AlphaFamily::AlphaFamily(AlphaKind kind, double k) : kind_(kind), k_(k) {
    if (!(std::isfinite(k) && k > 0.0)) {
        throw Error(ErrorKind::DomainError, "alpha shape k must be positive, got " + std::to_string(k));
    }
}

double AlphaFamily::operator()(double delta) const {
    require_unit_interval(delta, -1.0, "delta");
    if (kind_ == AlphaKind::Power) return 2.0 * std::pow((delta + 1.0) / 2.0, k_);
    return 2.0 / (1.0 + std::exp(-k_ * delta));
}

BetaResult evaluate_beta(const AlphaFamily& family, double delta, double we_end) {
    require_unit_interval(delta, -1.0, "delta");
    require_unit_interval(we_end, 0.0, "we_end");
    if (delta <= 0.0) return BetaResult{};

    BetaResult out;
    const double a = family(delta);
    const double mu = (1.0 + delta) / 2.0;
    const double sigma = std::min((mu - delta) / 2.0, (1.0 - mu) / 2.0);
    out.warnings.we_end_infeasible = we_end < delta;

    if (sigma < kSigmaFloor) {
        out.warnings.sigma_degenerate = true;
        if (std::abs(we_end - mu) < kSigmaFloor) {
            out.bell = 1.0;
            out.value = 2.0 / a;
        } else {
            out.value = std::numeric_limits<double>::min();
            out.bell = out.value * a / 2.0;
        }
        return out;
    }

    const double z = we_end - mu;
    out.bell = std::exp(-(z * z) / (2.0 * sigma * sigma));
    out.value = 2.0 / a * out.bell;
    return out;
}

MetricValues score_event_metrics(const AlphaFamily& family, const DeltaWe& delta_we, int rbi) {
    if (rbi < 1) throw Error(ErrorKind::DomainError, "rbi must be at least 1, got " + std::to_string(rbi));

    MetricValues v;
    v.rbi = rbi;
    v.alpha = family(delta_we.delta);
    const BetaResult b = evaluate_beta(family, delta_we.delta, delta_we.we_end);
    v.beta = b.value;
    v.warnings = b.warnings;
    v.arbi = v.alpha * rbi;
    // beta * alpha collapses to 2 * bell for positive changes; using that
    // form keeps the peak at exactly 2 per run.
    v.crbi = delta_we.delta > 0.0 ? 2.0 * b.bell * rbi : v.arbi;
    return v;
}

}  // namespace ctxrbi
