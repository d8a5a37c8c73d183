#include "cas/diffgeo.hpp"

#include "cas/error.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <initializer_list>
#include <sstream>

namespace cas {

namespace {

constexpr double kMinAreaSq = 1e-28;

[[noreturn]] void degenerate(const char* what)
{
    throw Error(ErrorCode::DegeneratePoint, what);
}

void require_e3(const Chart& chart, const char* op)
{
    if (chart.space() != Space::E3)
        throw Error(ErrorCode::UnsupportedSpace,
                    std::string(op) + " is only defined for E3 charts, not " + to_string(chart.space()));
}

// Every node of the tensor stencil must be admissible and on the same side of
// the singular locus as the centre.
void require_stencil(const Chart& chart, double u, double v, std::initializer_list<double> offsets)
{
    const double side = chart.singular_indicator(u, v);
    for (const double du : offsets) {
        for (const double dv : offsets) {
            if (!chart.admissible(u + du, v + dv) || chart.singular_indicator(u + du, v + dv) * side <= 0.0) {
                std::ostringstream os;
                os << "stencil around (" << u << ", " << v << ") reaches the singular set";
                throw Error(ErrorCode::SingularPoint, os.str());
            }
        }
    }
}

// Lowers the index with the ambient metric, so that Euclidean orthogonality
// to the result equals ambient orthogonality to the input.
Vec4 lower(Space space, Vec4 a)
{
    if (space == Space::H2xR) a.x3 = -a.x3;
    return a;
}

} // namespace

double ambient_dot(Space space, Vec4 a, Vec4 b)
{
    switch (space) {
    case Space::E3: return a.x1 * b.x1 + a.x2 * b.x2 + a.x3 * b.x3;
    case Space::S2xR: return dot4(a, b);
    case Space::H2xR: return a.x1 * b.x1 + a.x2 * b.x2 - a.x3 * b.x3 + a.t * b.t;
    }
    return 0.0;
}

Vec4 fixed_direction(Space space)
{
    return space == Space::E3 ? Vec4{0.0, 0.0, 1.0, 0.0} : Vec4{0.0, 0.0, 0.0, 1.0};
}

Jet2 fd_jet(const Chart& chart, double u, double v, double h1, double h2)
{
    const double scale = std::max({1.0, std::abs(u), std::abs(v)});
    if (!(h1 > 0.0)) h1 = 1e-6 * scale;
    if (!(h2 > 0.0)) h2 = 1e-4 * scale;
    require_stencil(chart, u, v, {-h2, -h1, 0.0, h1, h2});

    const auto r = [&](double du, double dv) { return chart.eval(u + du, v + dv); };
    Jet2 j;
    j.dim = chart.dim();
    j.r = r(0.0, 0.0);
    j.r_u = (1.0 / (2.0 * h1)) * (r(h1, 0.0) - r(-h1, 0.0));
    j.r_v = (1.0 / (2.0 * h1)) * (r(0.0, h1) - r(0.0, -h1));
    j.r_uu = (1.0 / (h2 * h2)) * (r(h2, 0.0) - 2.0 * j.r + r(-h2, 0.0));
    j.r_vv = (1.0 / (h2 * h2)) * (r(0.0, h2) - 2.0 * j.r + r(0.0, -h2));
    j.r_uv = (1.0 / (4.0 * h2 * h2)) * (r(h2, h2) - r(h2, -h2) - r(-h2, h2) + r(-h2, -h2));
    return j;
}

Vec4 normal(const Chart& chart, const Jet2& jet)
{
    const Space space = chart.space();
    Vec4 n;
    if (space == Space::E3) {
        const Vec3 c = cross3(xyz(jet.r_u), xyz(jet.r_v));
        if (!(norm(c) > kDegenerateNorm)) degenerate("r_u and r_v are parallel");
        n = lift(normalize(c));
    } else {
        // Orthogonal complement of r_u, r_v and the sphere / hyperboloid normal (p, 0).
        const Vec4 p{jet.r.x1, jet.r.x2, jet.r.x3, 0.0};
        n = cross4(lower(space, jet.r_u), lower(space, jet.r_v), lower(space, p));
        const double n2 = ambient_dot(space, n, n);
        if (!(n2 > kDegenerateNorm * kDegenerateNorm)) degenerate("tangent frame is degenerate");
        n = (1.0 / std::sqrt(n2)) * n;
    }
    const double c = std::cos(chart.theta());
    const double nk = ambient_dot(space, n, fixed_direction(space));
    if (std::abs(c) > 1e-12 && nk * c < 0.0) n = -n;
    return n;
}

FundamentalForms fundamental_forms(const Chart& chart, const Jet2& jet)
{
    const Space space = chart.space();
    FundamentalForms ff;
    ff.E = ambient_dot(space, jet.r_u, jet.r_u);
    ff.F = ambient_dot(space, jet.r_u, jet.r_v);
    ff.G = ambient_dot(space, jet.r_v, jet.r_v);
    if (!(ff.E > 0.0) || !(ff.G > 0.0) || !(ff.E * ff.G - ff.F * ff.F > kMinAreaSq))
        degenerate("first fundamental form is degenerate");
    if (space == Space::E3) {
        const Vec4 n = normal(chart, jet);
        ff.e = ambient_dot(space, jet.r_uu, n);
        ff.f = ambient_dot(space, jet.r_uv, n);
        ff.g = ambient_dot(space, jet.r_vv, n);
        ff.defined_second = true;
    }
    return ff;
}

double gauss_curvature_brioschi(const Chart& chart, double u, double v, double h)
{
    if (!(h > 0.0)) throw Error(ErrorCode::InvalidArgument, "brioschi: step must be positive");
    require_stencil(chart, u, v, {-2.0 * h, -h, 0.0, h, 2.0 * h});

    struct Metric {
        double E, F, G;
    };
    const auto metric = [&](int i, int k) {
        const Jet2 j = chart.jet(u + i * h, v + k * h);
        const Space s = chart.space();
        return Metric{ambient_dot(s, j.r_u, j.r_u), ambient_dot(s, j.r_u, j.r_v), ambient_dot(s, j.r_v, j.r_v)};
    };

    // Fourth-order central weights.
    constexpr std::array<int, 4> off{-2, -1, 1, 2};
    constexpr std::array<double, 4> d1w{1.0 / 12.0, -8.0 / 12.0, 8.0 / 12.0, -1.0 / 12.0};
    constexpr std::array<double, 5> d2w{-1.0 / 12.0, 16.0 / 12.0, -30.0 / 12.0, 16.0 / 12.0, -1.0 / 12.0};

    const Metric m0 = metric(0, 0);
    std::array<Metric, 5> mu{}, mv{};
    for (int i = -2; i <= 2; ++i) {
        mu[i + 2] = i == 0 ? m0 : metric(i, 0);
        mv[i + 2] = i == 0 ? m0 : metric(0, i);
    }

    double E_u = 0, E_v = 0, F_u = 0, F_v = 0, G_u = 0, G_v = 0;
    for (std::size_t a = 0; a < 4; ++a) {
        const auto idx = static_cast<std::size_t>(off[a] + 2);
        E_u += d1w[a] * mu[idx].E;
        F_u += d1w[a] * mu[idx].F;
        G_u += d1w[a] * mu[idx].G;
        E_v += d1w[a] * mv[idx].E;
        F_v += d1w[a] * mv[idx].F;
        G_v += d1w[a] * mv[idx].G;
    }
    E_u /= h, F_u /= h, G_u /= h, E_v /= h, F_v /= h, G_v /= h;

    double E_vv = 0, G_uu = 0;
    for (std::size_t a = 0; a < 5; ++a) {
        E_vv += d2w[a] * mv[a].E;
        G_uu += d2w[a] * mu[a].G;
    }
    E_vv /= h * h;
    G_uu /= h * h;

    double F_uv = 0;
    for (std::size_t a = 0; a < 4; ++a)
        for (std::size_t b = 0; b < 4; ++b)
            F_uv += d1w[a] * d1w[b] * metric(off[a], off[b]).F;
    F_uv /= h * h;

    const double E = m0.E, F = m0.F, G = m0.G;
    const double area2 = E * G - F * F;
    if (!(area2 > kMinAreaSq)) degenerate("first fundamental form is degenerate");

    const auto det3 = [](double a00, double a01, double a02, double a10, double a11, double a12, double a20,
                         double a21, double a22) {
        return a00 * (a11 * a22 - a12 * a21) - a01 * (a10 * a22 - a12 * a20) + a02 * (a10 * a21 - a11 * a20);
    };
    const double d1 = det3(-0.5 * E_vv + F_uv - 0.5 * G_uu, 0.5 * E_u, F_u - 0.5 * E_v,
                           F_v - 0.5 * G_u, E, F,
                           0.5 * G_v, F, G);
    const double d2 = det3(0.0, 0.5 * E_v, 0.5 * G_u,
                           0.5 * E_v, E, F,
                           0.5 * G_u, F, G);
    return (d1 - d2) / (area2 * area2);
}

double gauss_curvature_extrinsic(const Chart& chart, const Jet2& jet)
{
    require_e3(chart, "extrinsic Gaussian curvature");
    const FundamentalForms ff = fundamental_forms(chart, jet);
    return (ff.e * ff.g - ff.f * ff.f) / (ff.E * ff.G - ff.F * ff.F);
}

double mean_curvature(const Chart& chart, const Jet2& jet)
{
    require_e3(chart, "mean curvature");
    const FundamentalForms ff = fundamental_forms(chart, jet);
    return 0.5 * (ff.e * ff.G - 2.0 * ff.f * ff.F + ff.g * ff.E) / (ff.E * ff.G - ff.F * ff.F);
}

double angle_with_k(const Chart& chart, const Jet2& jet)
{
    const Vec4 n = normal(chart, jet);
    const double c = ambient_dot(chart.space(), n, fixed_direction(chart.space()));
    return std::acos(std::clamp(c, -1.0, 1.0));
}

CurvatureReport curvature_report(const Chart& chart, double u, double v, double brioschi_h)
{
    const Jet2 j = chart.jet(u, v);
    CurvatureReport rep;
    rep.angle = angle_with_k(chart, j);
    rep.K_intrinsic = gauss_curvature_brioschi(chart, u, v, brioschi_h);
    if (chart.space() == Space::E3) {
        rep.K_extrinsic = gauss_curvature_extrinsic(chart, j);
        rep.H = mean_curvature(chart, j);
    }
    return rep;
}

} // namespace cas
