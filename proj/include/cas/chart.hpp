#pragma once

#include "cas/geom.hpp"

#include <memory>
#include <string>
#include <utility>

namespace cas {

enum class Space { E3, S2xR, H2xR };
enum class ChartKind { CaseI, Plane, Cylinder, SphereProduct, HyperbolicProduct, Perturbed };

std::string to_string(Space space);
std::string to_string(ChartKind kind);

/// Position plus first and second partial derivatives at a parameter point.
/// E^3 charts leave the `t` slot at zero and report dim == 3.
struct Jet2 {
    int dim = 3;
    Vec4 r;
    Vec4 r_u, r_v;
    Vec4 r_uu, r_uv, r_vv;
};

/// A parametrized constant-angle surface patch r(u, v).
///
/// Positions are defined everywhere on the parameter domain (including the
/// singular edge of a Case I surface); jets are only handed out at admissible
/// points, i.e. where |singular_indicator(u, v)| >= sing_eps.
class Chart {
public:
    explicit Chart(double sing_eps);
    virtual ~Chart() = default;

    virtual Space space() const = 0;
    virtual ChartKind kind() const = 0;
    /// Declared angle between the oriented unit normal and k, in [0, pi).
    virtual double theta() const = 0;
    /// Short description of the free data (alpha profile, base curve, ...).
    virtual std::string detail() const = 0;
    /// Natural v-interval of the free data.
    virtual std::pair<double, double> v_domain() const;

    int dim() const { return space() == Space::E3 ? 3 : 4; }
    double sing_eps() const { return sing_eps_; }

    virtual Vec4 eval(double u, double v) const = 0;

    /// Whether v lies in the domain of the chart's free data.
    bool defined_at(double v) const { return in_domain(v); }

    /// Throws SingularPoint at inadmissible points.
    Jet2 jet(double u, double v) const;

    /// Signed quantity whose zero set is the chart's singular locus
    /// (u + alpha(v) for Case I). Constant 1 for charts that are regular everywhere.
    virtual double singular_indicator(double u, double v) const;

    /// True when v lies in the domain of the free data and the point keeps at
    /// least max(margin, sing_eps) away from the singular locus.
    bool admissible(double u, double v, double margin = 0.0) const;

protected:
    virtual bool in_domain(double v) const;
    virtual Jet2 compute_jet(double u, double v) const = 0;

private:
    double sing_eps_;
};

using ChartPtr = std::shared_ptr<const Chart>;

} // namespace cas
