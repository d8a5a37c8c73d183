#pragma once

#include "cas/geom.hpp"

#include <functional>
#include <string>
#include <utility>

namespace cas {

/// Point of R^2 (cylinder base curves, gamma(v)).
struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    friend constexpr Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
    friend constexpr Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
    friend constexpr Vec2 operator*(double s, Vec2 a) { return {s * a.x, s * a.y}; }
    friend constexpr bool operator==(const Vec2&, const Vec2&) = default;
};

/// Regular plane curve with its first two derivatives, the base of a
/// cylinder gamma x R.
struct PlaneCurve {
    enum class Shape { Circle, Line, Other };

    std::function<Vec2(double)> value;
    std::function<Vec2(double)> d1;
    std::function<Vec2(double)> d2;
    std::pair<double, double> domain{0.0, 6.283185307179586};
    Shape shape = Shape::Other;
    double radius = 0.0; // meaningful for circles only
    std::string label;

    /// Arclength-parametrized circle of radius r centred at the origin.
    static PlaneCurve circle(double r);
    /// Unit-speed straight line gamma(v) = (v, 0).
    static PlaneCurve line();
    /// Interpolating spline through samples (x(v_i), y(v_i)); >= 4 points.
    static PlaneCurve from_samples(std::vector<double> v, std::vector<Vec2> points);

    /// Throws DegenerateCurve if |gamma'| < 1e-9 at any of `n` sample points.
    void validate(int n = 257) const;
};

/// Unit-speed curve on the unit sphere S^2 with three derivatives.
struct SphereCurve {
    std::function<Vec3(double)> f, d1, d2, d3;
    std::string label;

    /// f(v) = (cos v, sin v, 0).
    static SphereCurve great_circle();
    /// Latitude circle at height h, |h| < 1, reparametrized by arclength.
    static SphereCurve small_circle(double h);
};

/// Unit-speed spacelike curve on the hyperboloid {<x,x>_L = -1, x3 > 0}.
struct HyperbolicCurve {
    std::function<LorentzVec3(double)> f, d1, d2, d3;
    std::string label;

    /// f(v) = (sinh v, 0, cosh v).
    static HyperbolicCurve geodesic();
    /// Hyperbolic circle of radius rho about (0,0,1), arclength-parametrized.
    static HyperbolicCurve circle(double rho);
};

inline constexpr double kCurveTol = 1e-9;
inline constexpr double kMinCurveSpeed = 1e-9;

} // namespace cas
