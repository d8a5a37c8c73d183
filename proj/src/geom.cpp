#include "cas/geom.hpp"

#include "cas/error.hpp"

namespace cas {

void Tolerances::validate() const
{
    if (!(analytic_tol > 0.0) || !(fd_tol > 0.0) || !(sing_eps > 0.0))
        throw Error(ErrorCode::InvalidArgument, "tolerances must be strictly positive");
    if (!(analytic_tol < fd_tol))
        throw Error(ErrorCode::InvalidArgument, "analytic_tol must be smaller than fd_tol");
}

Vec3 normalize(Vec3 a)
{
    const double n = norm(a);
    if (!(n > kDegenerateNorm)) throw Error(ErrorCode::DegenerateVector, "cannot normalize a zero vector");
    return (1.0 / n) * a;
}

Vec4 normalize(Vec4 a)
{
    const double n = norm(a);
    if (!(n > kDegenerateNorm)) throw Error(ErrorCode::DegenerateVector, "cannot normalize a zero vector");
    return (1.0 / n) * a;
}

namespace {

double det3(double a00, double a01, double a02,
            double a10, double a11, double a12,
            double a20, double a21, double a22)
{
    return a00 * (a11 * a22 - a12 * a21) - a01 * (a10 * a22 - a12 * a20) + a02 * (a10 * a21 - a11 * a20);
}

} // namespace

Vec4 cross4(Vec4 a, Vec4 b, Vec4 c)
{
    // Cofactor expansion of det[e; a; b; c] along the first row.
    const double n0 = det3(a.x2, a.x3, a.t, b.x2, b.x3, b.t, c.x2, c.x3, c.t);
    const double n1 = -det3(a.x1, a.x3, a.t, b.x1, b.x3, b.t, c.x1, c.x3, c.t);
    const double n2 = det3(a.x1, a.x2, a.t, b.x1, b.x2, b.t, c.x1, c.x2, c.t);
    const double n3 = -det3(a.x1, a.x2, a.x3, b.x1, b.x2, b.x3, c.x1, c.x2, c.x3);
    return {n0, n1, n2, n3};
}

bool is_finite(Vec3 a) { return std::isfinite(a.x) && std::isfinite(a.y) && std::isfinite(a.z); }
bool is_finite(Vec4 a)
{
    return std::isfinite(a.x1) && std::isfinite(a.x2) && std::isfinite(a.x3) && std::isfinite(a.t);
}

} // namespace cas
