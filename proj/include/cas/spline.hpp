#pragma once

#include <span>
#include <vector>

namespace cas {

/// Clamped cubic spline through (x_i, y_i). End slopes are taken from the
/// second-order one-sided difference of the first/last three samples.
class CubicSpline {
public:
    /// Requires at least 4 strictly increasing knots (InvalidArgument otherwise).
    CubicSpline(std::span<const double> x, std::span<const double> y);

    double lower() const { return x_.front(); }
    double upper() const { return x_.back(); }
    bool contains(double t) const { return t >= lower() && t <= upper(); }

    /// All evaluators throw OutOfDomain outside [lower(), upper()].
    double value(double t) const;
    double derivative(double t) const;
    double second_derivative(double t) const;

private:
    std::size_t segment(double t) const;

    std::vector<double> x_;
    std::vector<double> y_;
    std::vector<double> m_; // second derivatives at the knots
};

} // namespace cas
