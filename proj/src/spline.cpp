#include "cas/spline.hpp"

#include "cas/error.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace cas {

namespace {

// Derivative at x0 of the quadratic through three points.
double three_point_slope(double x0, double x1, double x2, double y0, double y1, double y2)
{
    const double h1 = x1 - x0;
    const double h2 = x2 - x0;
    return (y1 - y0) * h2 / (h1 * (h2 - h1)) - (y2 - y0) * h1 / (h2 * (h2 - h1));
}

} // namespace

CubicSpline::CubicSpline(std::span<const double> x, std::span<const double> y)
    : x_(x.begin(), x.end()), y_(y.begin(), y.end())
{
    const std::size_t n = x_.size();
    if (n != y_.size()) throw Error(ErrorCode::InvalidArgument, "spline: x and y sizes differ");
    if (n < 4) throw Error(ErrorCode::InvalidArgument, "spline: need at least 4 samples, got " + std::to_string(n));
    for (std::size_t i = 0; i < n; ++i) {
        if (!std::isfinite(x_[i]) || !std::isfinite(y_[i]))
            throw Error(ErrorCode::InvalidArgument, "spline: non-finite sample");
        if (i > 0 && !(x_[i] > x_[i - 1]))
            throw Error(ErrorCode::InvalidArgument, "spline: abscissae must be strictly increasing");
    }

    const double s0 = three_point_slope(x_[0], x_[1], x_[2], y_[0], y_[1], y_[2]);
    const double sn = three_point_slope(x_[n - 1], x_[n - 2], x_[n - 3], y_[n - 1], y_[n - 2], y_[n - 3]);

    // Tridiagonal system for the knot second derivatives (Thomas algorithm).
    std::vector<double> sub(n, 0.0), diag(n, 0.0), sup(n, 0.0), rhs(n, 0.0);
    const double h0 = x_[1] - x_[0];
    diag[0] = h0 / 3.0;
    sup[0] = h0 / 6.0;
    rhs[0] = (y_[1] - y_[0]) / h0 - s0;
    for (std::size_t i = 1; i + 1 < n; ++i) {
        const double hl = x_[i] - x_[i - 1];
        const double hr = x_[i + 1] - x_[i];
        sub[i] = hl / 6.0;
        diag[i] = (hl + hr) / 3.0;
        sup[i] = hr / 6.0;
        rhs[i] = (y_[i + 1] - y_[i]) / hr - (y_[i] - y_[i - 1]) / hl;
    }
    const double hn = x_[n - 1] - x_[n - 2];
    sub[n - 1] = hn / 6.0;
    diag[n - 1] = hn / 3.0;
    rhs[n - 1] = sn - (y_[n - 1] - y_[n - 2]) / hn;

    for (std::size_t i = 1; i < n; ++i) {
        const double w = sub[i] / diag[i - 1];
        diag[i] -= w * sup[i - 1];
        rhs[i] -= w * rhs[i - 1];
    }
    m_.assign(n, 0.0);
    m_[n - 1] = rhs[n - 1] / diag[n - 1];
    for (std::size_t i = n - 1; i-- > 0;)
        m_[i] = (rhs[i] - sup[i] * m_[i + 1]) / diag[i];
}

std::size_t CubicSpline::segment(double t) const
{
    if (!contains(t))
        throw Error(ErrorCode::OutOfDomain, "spline: " + std::to_string(t) + " outside [" + std::to_string(lower())
                                                + ", " + std::to_string(upper()) + "]");
    const auto it = std::upper_bound(x_.begin(), x_.end(), t);
    const auto i = static_cast<std::size_t>(std::distance(x_.begin(), it));
    return std::clamp<std::size_t>(i, 1, x_.size() - 1) - 1;
}

double CubicSpline::value(double t) const
{
    const std::size_t i = segment(t);
    const double h = x_[i + 1] - x_[i];
    const double a = (x_[i + 1] - t) / h;
    const double b = (t - x_[i]) / h;
    return a * y_[i] + b * y_[i + 1] + ((a * a * a - a) * m_[i] + (b * b * b - b) * m_[i + 1]) * h * h / 6.0;
}

double CubicSpline::derivative(double t) const
{
    const std::size_t i = segment(t);
    const double h = x_[i + 1] - x_[i];
    const double a = (x_[i + 1] - t) / h;
    const double b = (t - x_[i]) / h;
    return (y_[i + 1] - y_[i]) / h + ((1.0 - 3.0 * a * a) * m_[i] + (3.0 * b * b - 1.0) * m_[i + 1]) * h / 6.0;
}

double CubicSpline::second_derivative(double t) const
{
    const std::size_t i = segment(t);
    const double h = x_[i + 1] - x_[i];
    const double a = (x_[i + 1] - t) / h;
    const double b = (t - x_[i]) / h;
    return a * m_[i] + b * m_[i + 1];
}

} // namespace cas
