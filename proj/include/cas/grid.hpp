#pragma once

#include "cas/chart.hpp"

namespace cas {

/// Uniform (u, v) sampling grid; nodes include both interval ends.
struct GridSpec {
    double u_min = 0.0;
    double u_max = 2.0;
    double v_min = 0.0;
    double v_max = 6.283185307179586;
    int nu = 64;
    int nv = 128;
    /// Nodes closer than this to the singular locus are skipped.
    double exclusion = 1e-3;

    /// Throws InvalidArgument unless u_min < u_max, v_min < v_max, nu, nv >= 1
    /// and nu * nv >= 4.
    void validate() const;

    double u_at(int i) const;
    double v_at(int j) const;
    std::size_t size() const { return static_cast<std::size_t>(nu) * static_cast<std::size_t>(nv); }

    /// u in [0, 2] over the chart's natural v-domain, 64 x 128.
    static GridSpec default_for(const Chart& chart);
};

} // namespace cas
