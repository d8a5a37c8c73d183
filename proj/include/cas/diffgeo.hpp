#pragma once

#include "cas/chart.hpp"

#include <optional>

namespace cas {

/// First fundamental form, plus the second one for E^3 charts.
struct FundamentalForms {
    double E = 0.0, F = 0.0, G = 0.0;
    double e = 0.0, f = 0.0, g = 0.0;
    bool defined_second = false;
};

struct CurvatureReport {
    double K_intrinsic = 0.0;
    std::optional<double> K_extrinsic; // E^3 only
    std::optional<double> H;           // E^3 only
    double angle = 0.0;
};

/// Inner product of the ambient space: Euclidean on R^3 / R^4, and
/// (+,+,-,+) on R^3_1 x R for H^2 x R.
double ambient_dot(Space space, Vec4 a, Vec4 b);

/// The fixed direction k: (0,0,1) in E^3, the line factor in the products.
Vec4 fixed_direction(Space space);

/// Central differences of chart.eval. Steps default (when <= 0) to
/// 1e-6 * scale for first and 1e-4 * scale for second partials,
/// scale = max(1, |u|, |v|). Throws SingularPoint if a stencil node is
/// inadmissible.
Jet2 fd_jet(const Chart& chart, double u, double v, double h1 = 0.0, double h2 = 0.0);

/// Unit normal in the tangent space of the ambient manifold. Oriented so
/// that <N, k> has the sign of cos(theta) of the chart (for theta = pi/2,
/// the orientation of r_u x r_v). Throws DegeneratePoint.
Vec4 normal(const Chart& chart, const Jet2& jet);

/// Throws DegeneratePoint when EG - F^2 is not positive.
FundamentalForms fundamental_forms(const Chart& chart, const Jet2& jet);

/// Intrinsic Gaussian curvature from E, F, G sampled on a 5-point stencil
/// of step h (Brioschi formula). Throws SingularPoint if the stencil leaves
/// the admissible set.
double gauss_curvature_brioschi(const Chart& chart, double u, double v, double h = 1e-3);

/// (eg - f^2) / (EG - F^2); E^3 only (UnsupportedSpace otherwise).
double gauss_curvature_extrinsic(const Chart& chart, const Jet2& jet);

/// H = (eG - 2fF + gE) / (2 (EG - F^2)); E^3 only (UnsupportedSpace otherwise).
double mean_curvature(const Chart& chart, const Jet2& jet);

/// arccos(<N, k>) in [0, pi].
double angle_with_k(const Chart& chart, const Jet2& jet);

CurvatureReport curvature_report(const Chart& chart, double u, double v, double brioschi_h = 1e-3);

} // namespace cas
