#pragma once

#include <span>
#include <vector>

namespace ctxrbi {

struct Knot {
    double x = 0.0;
    double y = 0.0;
};

/// Fritsch-Carlson slopes for a monotone piecewise cubic Hermite
/// interpolant.
///
/// Interior slopes are the weighted harmonic mean of the neighbouring
/// secants (zero where the secants change sign or vanish). Endpoints use the
/// three-point one-sided estimate ((2h0 + h1) d0 - h0 d1) / (h0 + h1), set to
/// zero when its sign disagrees with the first secant and limited to three
/// times that secant. Two knots give the straight line.
///
/// Throws Error(DegenerateKnots) for fewer than two knots, non-finite values
/// or x not strictly increasing.
std::vector<double> compute_slopes(std::span<const Knot> knots);

/// Exponential tail f_L * exp(rate * (x - x_L)) on the left, and
/// 1 - (1 - f_R) * exp(rate * (x_R - x)) on the right.
struct Tail {
    double x = 0.0;
    double value = 0.0;
    double slope = 0.0;
    double rate = 0.0;
};

/// Win expectancy as a function of score differential for one game state:
/// monotone PCHIP between the first and last knot, exponential decay
/// towards 0 and 1 beyond them. Value and first derivative are continuous
/// at both joins.
class WeCurve {
public:
    /// Requires y non-decreasing and inside [0, 1]. A boundary value at an
    /// end (f_L = 0 or f_R = 1) yields an identically flat tail.
    static WeCurve build(std::span<const Knot> knots);

    double operator()(double x) const noexcept;
    double derivative(double x) const noexcept;

    const std::vector<Knot>& knots() const noexcept { return knots_; }
    const std::vector<double>& slopes() const noexcept { return slopes_; }
    const Tail& left_tail() const noexcept { return left_; }
    const Tail& right_tail() const noexcept { return right_; }

private:
    WeCurve() = default;

    // Segment holding x, with x inside [x_front, x_back].
    std::size_t segment(double x) const noexcept;

    std::vector<Knot> knots_;
    std::vector<double> slopes_;
    // Per segment k: value = y_k + t (m_k + t (b_k + t a_k)), t = x - x_k.
    std::vector<double> cubic_;
    std::vector<double> quadratic_;
    Tail left_;
    Tail right_;
};

inline WeCurve build_curve(std::span<const Knot> knots) { return WeCurve::build(knots); }
inline double eval_curve(const WeCurve& curve, double x) noexcept { return curve(x); }

}  // namespace ctxrbi
