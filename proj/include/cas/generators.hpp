#pragma once

#include "cas/alpha_profile.hpp"
#include "cas/chart.hpp"
#include "cas/curves.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace cas {

/// Angles within this distance of 0 or pi/2 select the special-case surfaces.
inline constexpr double kThetaSnap = 1e-9;

/// Throws InvalidArgument unless theta is finite and in [0, pi).
void validate_theta(double theta);
bool is_horizontal(double theta);
bool is_vertical(double theta);

enum class GammaPath {
    Auto,       // closed form when alpha has one, quadrature otherwise
    ClosedForm, // throws InvalidArgument for tabulated profiles
    Quadrature, // adaptive Simpson
};

inline constexpr double kGammaQuadratureTol = 1e-11;

/// Lower limit of the gamma integral: 0, or the first sample when a
/// tabulated profile does not cover 0.
double gamma_base(const AlphaProfile& alpha);

/// gamma(v) = cos(theta) * (-int alpha(t) sin t dt, int alpha(t) cos t dt),
/// integrated from gamma_base(alpha) to v.
Vec2 gamma_integral(const AlphaProfile& alpha, double theta, double v, GammaPath path = GammaPath::Auto);

/// Antiderivative form for the built-in profiles; nullopt for tabulated ones.
std::optional<Vec2> gamma_closed_form(const AlphaProfile& alpha, double theta, double v);

/// Quadrature of gamma with cumulative values cached at uniformly spaced
/// nodes, so dense sampling along v only integrates short pieces.
/// Immutable after construction.
class GammaTable {
public:
    GammaTable(AlphaProfile alpha, double theta, std::pair<double, double> range, int segments = 512);

    Vec2 operator()(double v) const;

private:
    Vec2 integrate(double a, double b, double tol) const;

    AlphaProfile alpha_;
    double cos_theta_;
    double span_;
    std::vector<double> nodes_;
    std::vector<Vec2> cumulative_; // unscaled integrals from gamma_base to nodes_[i]
};

/// Values of lambda and beta (with phi = cos theta) and the partial
/// derivatives needed by the structure equations.
struct ClosedFormData {
    double lambda = 0.0;
    double beta = 0.0;
    double phi = 0.0;
    double lambda_u = 0.0;
    double beta_u = 0.0;
    double beta_v = 0.0;
};

/// lambda = tan(theta) / (u + alpha(v)), beta = cos(theta) (u + alpha(v)).
/// Throws SingularPoint when |u + alpha(v)| < sing_eps.
ClosedFormData closed_form_lambda_beta(double theta, const AlphaProfile& alpha, double u, double v,
                                       double sing_eps = 1e-3);

struct CaseIOptions {
    GammaPath gamma_path = GammaPath::Auto;
    /// v-interval covered by the gamma cache; defaults to [0, 2 pi] or the
    /// tabulated sample range.
    std::optional<std::pair<double, double>> v_range;
    double sing_eps = 1e-3;
};

/// r(u, v) = (u cos(theta) (cos v, sin v) + gamma(v), u sin(theta)).
class CaseIChart final : public Chart {
public:
    CaseIChart(double theta, AlphaProfile alpha, CaseIOptions options = {});

    Space space() const override { return Space::E3; }
    ChartKind kind() const override { return ChartKind::CaseI; }
    double theta() const override { return theta_; }
    std::string detail() const override { return alpha_.label(); }
    std::pair<double, double> v_domain() const override;

    Vec4 eval(double u, double v) const override;
    double singular_indicator(double u, double v) const override;

    const AlphaProfile& alpha() const { return alpha_; }
    GammaPath gamma_path() const { return path_; }
    Vec2 gamma(double v) const;
    ClosedFormData closed_form(double u, double v) const;

protected:
    bool in_domain(double v) const override;
    Jet2 compute_jet(double u, double v) const override;

private:
    double theta_;
    double cos_;
    double sin_;
    AlphaProfile alpha_;
    GammaPath path_;
    std::pair<double, double> v_range_;
    std::optional<GammaTable> table_;
};

/// The plane x sin(theta) - z cos(theta) = 0 as r(u, v) = (u cos(theta), v, u sin(theta)).
class PlaneChart final : public Chart {
public:
    explicit PlaneChart(double theta, double sing_eps = 1e-3);

    Space space() const override { return Space::E3; }
    ChartKind kind() const override { return ChartKind::Plane; }
    double theta() const override { return theta_; }
    std::string detail() const override { return "plane"; }

    Vec4 eval(double u, double v) const override;

protected:
    Jet2 compute_jet(double u, double v) const override;

private:
    double theta_;
    double cos_;
    double sin_;
};

/// The cylinder gamma x R, r(u, v) = (gamma(v), u).
class CylinderChart final : public Chart {
public:
    explicit CylinderChart(PlaneCurve gamma, double sing_eps = 1e-3);

    Space space() const override { return Space::E3; }
    ChartKind kind() const override { return ChartKind::Cylinder; }
    double theta() const override;
    std::string detail() const override { return gamma_.label; }
    std::pair<double, double> v_domain() const override { return gamma_.domain; }

    Vec4 eval(double u, double v) const override;

    const PlaneCurve& curve() const { return gamma_; }

protected:
    Jet2 compute_jet(double u, double v) const override;

private:
    PlaneCurve gamma_;
};

/// (cos(u c) f(v) + sin(u c) f(v) x f'(v), u sin(theta)) in S^2 x R, c = cos(theta).
class SphereProductChart final : public Chart {
public:
    SphereProductChart(double theta, SphereCurve f, double sing_eps = 1e-3);

    Space space() const override { return Space::S2xR; }
    ChartKind kind() const override { return ChartKind::SphereProduct; }
    double theta() const override { return theta_; }
    std::string detail() const override { return f_.label; }

    Vec4 eval(double u, double v) const override;
    double singular_indicator(double u, double v) const override;

protected:
    Jet2 compute_jet(double u, double v) const override;

private:
    double theta_;
    double cos_;
    double sin_;
    SphereCurve f_;
};

/// (cosh(u c) f(v) + sinh(u c) f(v) [x]_L f'(v), u sin(theta)) in H^2 x R.
class HyperbolicProductChart final : public Chart {
public:
    HyperbolicProductChart(double theta, HyperbolicCurve f, double sing_eps = 1e-3);

    Space space() const override { return Space::H2xR; }
    ChartKind kind() const override { return ChartKind::HyperbolicProduct; }
    double theta() const override { return theta_; }
    std::string detail() const override { return f_.label; }
    std::pair<double, double> v_domain() const override;

    Vec4 eval(double u, double v) const override;
    double singular_indicator(double u, double v) const override;

protected:
    Jet2 compute_jet(double u, double v) const override;

private:
    double theta_;
    double cos_;
    double sin_;
    HyperbolicCurve f_;
};

/// Adds eps * u^2 to the component along k. Used as a negative control: the
/// result keeps the base chart's declared theta but is no longer a
/// constant-angle surface.
class PerturbedChart final : public Chart {
public:
    PerturbedChart(ChartPtr base, double eps);

    Space space() const override { return base_->space(); }
    ChartKind kind() const override { return ChartKind::Perturbed; }
    double theta() const override { return base_->theta(); }
    std::string detail() const override;
    std::pair<double, double> v_domain() const override { return base_->v_domain(); }

    Vec4 eval(double u, double v) const override;
    double singular_indicator(double u, double v) const override { return base_->singular_indicator(u, v); }

    const Chart& base() const { return *base_; }
    double eps() const { return eps_; }

protected:
    bool in_domain(double v) const override;
    Jet2 compute_jet(double u, double v) const override;

private:
    ChartPtr base_;
    double eps_;
};

/// Throws WrongCase for theta in {0, pi/2}.
std::shared_ptr<const CaseIChart> e3_case1_chart(double theta, AlphaProfile alpha, CaseIOptions options = {});
std::shared_ptr<const PlaneChart> e3_plane_chart(double theta);
/// Throws DegenerateCurve if gamma' nearly vanishes at a sample point.
std::shared_ptr<const CylinderChart> e3_cylinder_chart(PlaneCurve gamma);
/// Throws CurveNotOnSphere / CurveNotUnitSpeed on invalid f.
std::shared_ptr<const SphereProductChart> s2r_chart(double theta, SphereCurve f = SphereCurve::great_circle());
/// Throws CurveNotOnHyperboloid / CurveNotUnitSpeed on invalid f.
std::shared_ptr<const HyperbolicProductChart> h2r_chart(double theta,
                                                        HyperbolicCurve f = HyperbolicCurve::geodesic());

/// Case I at theta = pi/4 with alpha = 1, v, cos v, 2 sin v for n = 1..4,
/// gamma on the closed-form path. Throws UnknownExample otherwise.
std::shared_ptr<const CaseIChart> paper_example(int n);

/// E^3 dispatch over the classification: horizontal plane at theta = 0,
/// cylinder over `curve` at theta = pi/2, the inclined plane when `alpha`
/// is empty, Case I otherwise.
ChartPtr e3_chart(double theta, const std::optional<AlphaProfile>& alpha,
                  const PlaneCurve& curve = PlaneCurve::circle(1.0), CaseIOptions options = {});

} // namespace cas
