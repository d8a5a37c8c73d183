#pragma once

#include "cas/chart.hpp"
#include "cas/grid.hpp"
#include "cas/verify.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>

namespace cas {

/// Everything a generate/verify run needs. Unset optionals fall back to the
/// chart's defaults once the chart is known.
struct RunConfig {
    Space space = Space::E3;
    double theta = 0.7853981633974483; // pi/4, the angle of the four example surfaces
    std::optional<std::string> alpha;  // e3 only; default const:1
    std::optional<std::string> curve;  // cylinder / product base curve
    bool plane = false;                // e3: the plane of angle theta instead of Case I
    std::optional<std::pair<double, double>> u_range;
    std::optional<std::pair<double, double>> v_range;
    std::optional<int> nu;
    std::optional<int> nv;
    double tol_analytic = 1e-9;
    double tol_fd = 1e-5;
    std::optional<std::string> out;
    std::optional<std::string> report;
    std::optional<std::string> project; // default: stereo for s2r, drop_t for h2r
    double perturb = 0.0;
};

/// A configuration problem tied to one field; maps to exit code 2.
class ConfigError : public std::runtime_error {
public:
    ConfigError(std::string field, const std::string& reason)
        : std::runtime_error(reason), field_(std::move(field)) {}
    const std::string& field() const { return field_; }

private:
    std::string field_;
};

/// Reads a JSON object with keys space, theta, alpha, curve, plane, u_range,
/// v_range ([a, b]), nu, nv, tol_analytic, tol_fd, out, report, project,
/// perturb. Unknown keys are rejected.
RunConfig load_config(const std::string& path);

/// Builds (and thereby validates) the chart a config describes.
ChartPtr build_chart(const RunConfig& config);
GridSpec build_grid(const RunConfig& config, const Chart& chart);
SuiteTolerances build_tolerances(const RunConfig& config);

/// Exit codes: 0 success, 1 failed checks, 2 configuration error,
/// 3 singular point / domain error while producing output.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace cas
