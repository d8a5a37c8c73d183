#include "cas/grid.hpp"

#include "cas/error.hpp"

#include <cmath>

namespace cas {

void GridSpec::validate() const
{
    if (!std::isfinite(u_min) || !std::isfinite(u_max) || !(u_min < u_max))
        throw Error(ErrorCode::InvalidArgument, "grid: need u_min < u_max");
    if (!std::isfinite(v_min) || !std::isfinite(v_max) || !(v_min < v_max))
        throw Error(ErrorCode::InvalidArgument, "grid: need v_min < v_max");
    if (nu < 1 || nv < 1 || static_cast<long long>(nu) * nv < 4)
        throw Error(ErrorCode::InvalidArgument, "grid: need nu, nv >= 1 and nu * nv >= 4");
    if (!(exclusion > 0.0)) throw Error(ErrorCode::InvalidArgument, "grid: exclusion must be positive");
}

double GridSpec::u_at(int i) const
{
    if (nu == 1) return u_min;
    return i == nu - 1 ? u_max : u_min + (u_max - u_min) * i / (nu - 1);
}

double GridSpec::v_at(int j) const
{
    if (nv == 1) return v_min;
    return j == nv - 1 ? v_max : v_min + (v_max - v_min) * j / (nv - 1);
}

GridSpec GridSpec::default_for(const Chart& chart)
{
    GridSpec g;
    const auto [a, b] = chart.v_domain();
    g.v_min = a;
    g.v_max = b;
    g.exclusion = chart.sing_eps();
    return g;
}

} // namespace cas
