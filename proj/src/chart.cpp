#include "cas/chart.hpp"

#include "cas/error.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace cas {

std::string to_string(Space space)
{
    switch (space) {
    case Space::E3: return "e3";
    case Space::S2xR: return "s2r";
    case Space::H2xR: return "h2r";
    }
    return "?";
}

std::string to_string(ChartKind kind)
{
    switch (kind) {
    case ChartKind::CaseI: return "case1";
    case ChartKind::Plane: return "plane";
    case ChartKind::Cylinder: return "cylinder";
    case ChartKind::SphereProduct: return "s2r";
    case ChartKind::HyperbolicProduct: return "h2r";
    case ChartKind::Perturbed: return "perturbed";
    }
    return "?";
}

Chart::Chart(double sing_eps) : sing_eps_(sing_eps)
{
    if (!(sing_eps > 0.0)) throw Error(ErrorCode::InvalidArgument, "sing_eps must be positive");
}

std::pair<double, double> Chart::v_domain() const { return {0.0, 2.0 * std::numbers::pi}; }

double Chart::singular_indicator(double, double) const { return 1.0; }

bool Chart::in_domain(double) const { return true; }

bool Chart::admissible(double u, double v, double margin) const
{
    if (!std::isfinite(u) || !std::isfinite(v) || !in_domain(v)) return false;
    return std::abs(singular_indicator(u, v)) >= std::max(margin, sing_eps_);
}

Jet2 Chart::jet(double u, double v) const
{
    if (!in_domain(v)) {
        std::ostringstream os;
        os << "v = " << v << " lies outside the domain of " << detail();
        throw Error(ErrorCode::OutOfDomain, os.str());
    }
    if (!admissible(u, v)) {
        std::ostringstream os;
        os << "jet requested at singular point (u, v) = (" << u << ", " << v << ") of " << to_string(kind())
           << " chart";
        throw Error(ErrorCode::SingularPoint, os.str());
    }
    return compute_jet(u, v);
}

} // namespace cas
