#include "ctxrbi/pchip.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "ctxrbi/errors.hpp"

namespace ctxrbi {

namespace {

bool same_sign(double a, double b) noexcept { return (a > 0.0 && b > 0.0) || (a < 0.0 && b < 0.0); }

// One-sided three-point estimate at an end knot. h0/d0 belong to the
// segment touching the end, h1/d1 to its neighbour.
double endpoint_slope(double h0, double h1, double d0, double d1) noexcept {
    const double m = ((2.0 * h0 + h1) * d0 - h0 * d1) / (h0 + h1);
    if (!same_sign(m, d0)) return 0.0;
    if (std::abs(m) > 3.0 * std::abs(d0)) return 3.0 * d0;
    return m;
}

void check_knots(std::span<const Knot> knots) {
    if (knots.size() < 2) {
        throw Error(ErrorKind::DegenerateKnots,
                    "need at least 2 knots, got " + std::to_string(knots.size()));
    }
    for (std::size_t i = 0; i < knots.size(); ++i) {
        if (!std::isfinite(knots[i].x) || !std::isfinite(knots[i].y)) {
            throw Error(ErrorKind::DegenerateKnots, "non-finite knot at index " + std::to_string(i));
        }
        if (i > 0 && !(knots[i].x > knots[i - 1].x)) {
            throw Error(ErrorKind::DegenerateKnots,
                        "knot x values must be strictly increasing (index " + std::to_string(i) + ")");
        }
    }
}

}  // namespace

std::vector<double> compute_slopes(std::span<const Knot> knots) {
    check_knots(knots);
    const std::size_t n = knots.size();

    std::vector<double> h(n - 1);
    std::vector<double> delta(n - 1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        h[k] = knots[k + 1].x - knots[k].x;
        delta[k] = (knots[k + 1].y - knots[k].y) / h[k];
    }

    std::vector<double> m(n, 0.0);
    if (n == 2) {
        m[0] = m[1] = delta[0];
        return m;
    }

    for (std::size_t k = 1; k + 1 < n; ++k) {
        if (!same_sign(delta[k - 1], delta[k])) continue;
        const double w1 = 2.0 * h[k] + h[k - 1];
        const double w2 = h[k] + 2.0 * h[k - 1];
        m[k] = (w1 + w2) / (w1 / delta[k - 1] + w2 / delta[k]);
    }
    m[0] = endpoint_slope(h[0], h[1], delta[0], delta[1]);
    m[n - 1] = endpoint_slope(h[n - 2], h[n - 3], delta[n - 2], delta[n - 3]);
    return m;
}

WeCurve WeCurve::build(std::span<const Knot> knots) {
    check_knots(knots);
    for (std::size_t i = 0; i < knots.size(); ++i) {
        const double y = knots[i].y;
        if (y < 0.0 || y > 1.0) {
            throw Error(ErrorKind::DomainError,
                        "win expectancy " + std::to_string(y) + " outside [0, 1] at knot " + std::to_string(i));
        }
        if (i > 0 && y < knots[i - 1].y) {
            throw Error(ErrorKind::DomainError,
                        "win expectancy decreases at knot " + std::to_string(i));
        }
    }

    WeCurve c;
    c.knots_.assign(knots.begin(), knots.end());
    c.slopes_ = compute_slopes(knots);

    const std::size_t n = knots.size();
    c.cubic_.resize(n - 1);
    c.quadratic_.resize(n - 1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        const double h = knots[k + 1].x - knots[k].x;
        const double delta = (knots[k + 1].y - knots[k].y) / h;
        c.cubic_[k] = (c.slopes_[k] + c.slopes_[k + 1] - 2.0 * delta) / (h * h);
        c.quadratic_[k] = (3.0 * delta - 2.0 * c.slopes_[k] - c.slopes_[k + 1]) / h;
    }

    const Knot& first = knots.front();
    const Knot& last = knots.back();
    c.left_ = Tail{first.x, first.y, c.slopes_.front(), 0.0};
    c.right_ = Tail{last.x, last.y, c.slopes_.back(), 0.0};
    // f_L = 0 or f_R = 1 leave the rate at zero: the tail is then the
    // constant limit itself.
    if (first.y > 0.0) c.left_.rate = c.left_.slope / first.y;
    if (last.y < 1.0) c.right_.rate = c.right_.slope / (1.0 - last.y);
    return c;
}

std::size_t WeCurve::segment(double x) const noexcept {
    const auto it = std::upper_bound(knots_.begin(), knots_.end(), x,
                                     [](double v, const Knot& k) { return v < k.x; });
    const auto idx = static_cast<std::size_t>(std::distance(knots_.begin(), it));
    return std::min(idx == 0 ? 0 : idx - 1, knots_.size() - 2);
}

double WeCurve::operator()(double x) const noexcept {
    if (std::isnan(x)) return std::numeric_limits<double>::quiet_NaN();
    if (x < left_.x) {
        return left_.value * std::exp(left_.rate * (x - left_.x));
    }
    if (x > right_.x) {
        return std::min(1.0, right_.value - (1.0 - right_.value) * std::expm1(right_.rate * (right_.x - x)));
    }
    if (x == right_.x) return right_.value;

    const std::size_t k = segment(x);
    const double t = x - knots_[k].x;
    const double y0 = knots_[k].y;
    const double y1 = knots_[k + 1].y;
    const double v = y0 + t * (slopes_[k] + t * (quadratic_[k] + t * cubic_[k]));
    // Rounding can leak past a segment end by an ulp.
    return std::clamp(v, std::min(y0, y1), std::max(y0, y1));
}

double WeCurve::derivative(double x) const noexcept {
    if (std::isnan(x)) return std::numeric_limits<double>::quiet_NaN();
    if (x < left_.x) {
        return left_.value * left_.rate * std::exp(left_.rate * (x - left_.x));
    }
    if (x > right_.x) {
        return (1.0 - right_.value) * right_.rate * std::exp(right_.rate * (right_.x - x));
    }
    const std::size_t k = segment(x);
    const double t = x - knots_[k].x;
    return slopes_[k] + t * (2.0 * quadratic_[k] + 3.0 * t * cubic_[k]);
}

}  // namespace ctxrbi
