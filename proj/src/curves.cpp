#include "cas/curves.hpp"

#include "cas/error.hpp"
#include "cas/spline.hpp"

#include <cmath>
#include <memory>
#include <sstream>

namespace cas {

PlaneCurve PlaneCurve::circle(double r)
{
    if (!(r > 0.0) || !std::isfinite(r)) throw Error(ErrorCode::InvalidArgument, "circle: radius must be positive");
    PlaneCurve c;
    c.value = [r](double v) { return Vec2{r * std::cos(v / r), r * std::sin(v / r)}; };
    c.d1 = [r](double v) { return Vec2{-std::sin(v / r), std::cos(v / r)}; };
    c.d2 = [r](double v) { return Vec2{-std::cos(v / r) / r, -std::sin(v / r) / r}; };
    c.domain = {0.0, 2.0 * M_PI * r};
    c.shape = Shape::Circle;
    c.radius = r;
    std::ostringstream os;
    os << "circle:" << r;
    c.label = os.str();
    return c;
}

PlaneCurve PlaneCurve::line()
{
    PlaneCurve c;
    c.value = [](double v) { return Vec2{v, 0.0}; };
    c.d1 = [](double) { return Vec2{1.0, 0.0}; };
    c.d2 = [](double) { return Vec2{0.0, 0.0}; };
    c.shape = Shape::Line;
    c.label = "line";
    return c;
}

PlaneCurve PlaneCurve::from_samples(std::vector<double> v, std::vector<Vec2> points)
{
    if (v.size() != points.size()) throw Error(ErrorCode::InvalidArgument, "curve samples: size mismatch");
    std::vector<double> xs, ys;
    for (const auto& p : points) {
        xs.push_back(p.x);
        ys.push_back(p.y);
    }
    auto sx = std::make_shared<const CubicSpline>(v, xs);
    auto sy = std::make_shared<const CubicSpline>(v, ys);
    PlaneCurve c;
    c.value = [sx, sy](double t) { return Vec2{sx->value(t), sy->value(t)}; };
    c.d1 = [sx, sy](double t) { return Vec2{sx->derivative(t), sy->derivative(t)}; };
    c.d2 = [sx, sy](double t) { return Vec2{sx->second_derivative(t), sy->second_derivative(t)}; };
    c.domain = {sx->lower(), sx->upper()};
    c.label = "samples[" + std::to_string(v.size()) + "]";
    return c;
}

void PlaneCurve::validate(int n) const
{
    const auto [a, b] = domain;
    for (int i = 0; i < n; ++i) {
        const double v = a + (b - a) * i / (n - 1);
        const Vec2 d = d1(v);
        if (!(std::hypot(d.x, d.y) >= kMinCurveSpeed))
            throw Error(ErrorCode::DegenerateCurve, "plane curve is not regular at v = " + std::to_string(v));
    }
}

SphereCurve SphereCurve::great_circle()
{
    SphereCurve c;
    c.f = [](double v) { return Vec3{std::cos(v), std::sin(v), 0.0}; };
    c.d1 = [](double v) { return Vec3{-std::sin(v), std::cos(v), 0.0}; };
    c.d2 = [](double v) { return Vec3{-std::cos(v), -std::sin(v), 0.0}; };
    c.d3 = [](double v) { return Vec3{std::sin(v), -std::cos(v), 0.0}; };
    c.label = "great";
    return c;
}

SphereCurve SphereCurve::small_circle(double h)
{
    if (!(std::abs(h) < 1.0)) throw Error(ErrorCode::InvalidArgument, "small circle: |h| must be < 1");
    const double rho = std::sqrt(1.0 - h * h);
    SphereCurve c;
    c.f = [rho, h](double v) { return Vec3{rho * std::cos(v / rho), rho * std::sin(v / rho), h}; };
    c.d1 = [rho](double v) { return Vec3{-std::sin(v / rho), std::cos(v / rho), 0.0}; };
    c.d2 = [rho](double v) { return Vec3{-std::cos(v / rho) / rho, -std::sin(v / rho) / rho, 0.0}; };
    c.d3 = [rho](double v) { return Vec3{std::sin(v / rho) / (rho * rho), -std::cos(v / rho) / (rho * rho), 0.0}; };
    std::ostringstream os;
    os << "small:" << h;
    c.label = os.str();
    return c;
}

HyperbolicCurve HyperbolicCurve::geodesic()
{
    HyperbolicCurve c;
    c.f = [](double v) { return LorentzVec3{std::sinh(v), 0.0, std::cosh(v)}; };
    c.d1 = [](double v) { return LorentzVec3{std::cosh(v), 0.0, std::sinh(v)}; };
    c.d2 = [](double v) { return LorentzVec3{std::sinh(v), 0.0, std::cosh(v)}; };
    c.d3 = [](double v) { return LorentzVec3{std::cosh(v), 0.0, std::sinh(v)}; };
    c.label = "geodesic";
    return c;
}

HyperbolicCurve HyperbolicCurve::circle(double rho)
{
    if (!(rho > 0.0) || !std::isfinite(rho)) throw Error(ErrorCode::InvalidArgument, "hyperbolic circle: rho must be positive");
    const double s = std::sinh(rho);
    const double ch = std::cosh(rho);
    HyperbolicCurve c;
    c.f = [s, ch](double v) { return LorentzVec3{s * std::cos(v / s), s * std::sin(v / s), ch}; };
    c.d1 = [s](double v) { return LorentzVec3{-std::sin(v / s), std::cos(v / s), 0.0}; };
    c.d2 = [s](double v) { return LorentzVec3{-std::cos(v / s) / s, -std::sin(v / s) / s, 0.0}; };
    c.d3 = [s](double v) { return LorentzVec3{std::sin(v / s) / (s * s), -std::cos(v / s) / (s * s), 0.0}; };
    std::ostringstream os;
    os << "circle:" << rho;
    c.label = os.str();
    return c;
}

} // namespace cas
