#pragma once

#include <cmath>

namespace cas {

/// Point or vector in Euclidean 3-space.
struct Vec3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    friend constexpr Vec3 operator+(Vec3 a, Vec3 b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
    friend constexpr Vec3 operator-(Vec3 a, Vec3 b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
    friend constexpr Vec3 operator-(Vec3 a) { return {-a.x, -a.y, -a.z}; }
    friend constexpr Vec3 operator*(double s, Vec3 a) { return {s * a.x, s * a.y, s * a.z}; }
    friend constexpr Vec3 operator*(Vec3 a, double s) { return s * a; }
    friend constexpr bool operator==(const Vec3&, const Vec3&) = default;
};

/// Point or vector in R^4, read as R^3 x R with the last slot `t` along the
/// line factor. E^3 quantities are stored with t = 0.
struct Vec4 {
    double x1 = 0.0;
    double x2 = 0.0;
    double x3 = 0.0;
    double t = 0.0;

    double operator[](int i) const
    {
        switch (i) {
        case 0: return x1;
        case 1: return x2;
        case 2: return x3;
        default: return t;
        }
    }

    friend constexpr Vec4 operator+(Vec4 a, Vec4 b)
    {
        return {a.x1 + b.x1, a.x2 + b.x2, a.x3 + b.x3, a.t + b.t};
    }
    friend constexpr Vec4 operator-(Vec4 a, Vec4 b)
    {
        return {a.x1 - b.x1, a.x2 - b.x2, a.x3 - b.x3, a.t - b.t};
    }
    friend constexpr Vec4 operator-(Vec4 a) { return {-a.x1, -a.x2, -a.x3, -a.t}; }
    friend constexpr Vec4 operator*(double s, Vec4 a) { return {s * a.x1, s * a.x2, s * a.x3, s * a.t}; }
    friend constexpr Vec4 operator*(Vec4 a, double s) { return s * a; }
    friend constexpr bool operator==(const Vec4&, const Vec4&) = default;
};

/// Vector in Lorentzian 3-space with signature (+,+,-).
struct LorentzVec3 {
    double x1 = 0.0;
    double x2 = 0.0;
    double x3 = 0.0;

    friend constexpr LorentzVec3 operator+(LorentzVec3 a, LorentzVec3 b)
    {
        return {a.x1 + b.x1, a.x2 + b.x2, a.x3 + b.x3};
    }
    friend constexpr LorentzVec3 operator-(LorentzVec3 a, LorentzVec3 b)
    {
        return {a.x1 - b.x1, a.x2 - b.x2, a.x3 - b.x3};
    }
    friend constexpr LorentzVec3 operator*(double s, LorentzVec3 a)
    {
        return {s * a.x1, s * a.x2, s * a.x3};
    }
    friend constexpr bool operator==(const LorentzVec3&, const LorentzVec3&) = default;
};

/// Numerical thresholds shared by generators, differential geometry and checks.
struct Tolerances {
    double analytic_tol = 1e-10;
    double fd_tol = 1e-5;
    double sing_eps = 1e-3;

    /// Throws InvalidArgument unless all are positive and analytic_tol < fd_tol.
    void validate() const;
};

inline constexpr double kDegenerateNorm = 1e-14;

constexpr double dot3(Vec3 a, Vec3 b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
constexpr double dot4(Vec4 a, Vec4 b) { return a.x1 * b.x1 + a.x2 * b.x2 + a.x3 * b.x3 + a.t * b.t; }

constexpr Vec3 cross3(Vec3 a, Vec3 b)
{
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

constexpr double lorentz_dot(LorentzVec3 a, LorentzVec3 b)
{
    return a.x1 * b.x1 + a.x2 * b.x2 - a.x3 * b.x3;
}

/// Lorentzian cross product; the result is lorentz_dot-orthogonal to both factors.
constexpr LorentzVec3 lorentz_cross(LorentzVec3 a, LorentzVec3 b)
{
    return {a.x2 * b.x3 - a.x3 * b.x2, a.x3 * b.x1 - a.x1 * b.x3, -(a.x1 * b.x2 - a.x2 * b.x1)};
}

inline double norm(Vec3 a) { return std::sqrt(dot3(a, a)); }
inline double norm(Vec4 a) { return std::sqrt(dot4(a, a)); }

/// Throw DegenerateVector when |a| <= 1e-14.
Vec3 normalize(Vec3 a);
Vec4 normalize(Vec4 a);

/// Generalized cross product in R^4: Euclidean-orthogonal to a, b and c.
Vec4 cross4(Vec4 a, Vec4 b, Vec4 c);

constexpr Vec3 xyz(Vec4 a) { return {a.x1, a.x2, a.x3}; }
constexpr Vec4 lift(Vec3 a, double t = 0.0) { return {a.x, a.y, a.z, t}; }
constexpr LorentzVec3 to_lorentz(Vec3 a) { return {a.x, a.y, a.z}; }
constexpr Vec3 from_lorentz(LorentzVec3 a) { return {a.x1, a.x2, a.x3}; }

bool is_finite(Vec3 a);
bool is_finite(Vec4 a);

} // namespace cas
