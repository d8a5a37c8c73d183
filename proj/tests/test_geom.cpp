#include "cas/error.hpp"
#include "cas/geom.hpp"

#include <doctest.h>

#include <random>

using namespace cas;

TEST_SUITE("geom")
{
    TEST_CASE("cross3 is orthogonal to both factors")
    {
        std::mt19937_64 rng(7);
        std::uniform_real_distribution<double> d(-1.0, 1.0);
        for (int i = 0; i < 1000; ++i) {
            const Vec3 a{d(rng), d(rng), d(rng)}, b{d(rng), d(rng), d(rng)};
            const Vec3 c = cross3(a, b);
            CHECK(std::abs(dot3(c, a)) <= 1e-14);
            CHECK(std::abs(dot3(c, b)) <= 1e-14);
        }
        const Vec3 e = cross3({1, 0, 0}, {0, 1, 0});
        CHECK(e.x == 0.0);
        CHECK(e.y == 0.0);
        CHECK(e.z == 1.0);
    }

    TEST_CASE("lorentz_cross is Lorentz-orthogonal and antisymmetric")
    {
        std::mt19937_64 rng(11);
        std::uniform_real_distribution<double> d(-1.0, 1.0);
        for (int i = 0; i < 1000; ++i) {
            const LorentzVec3 a{d(rng), d(rng), d(rng)}, b{d(rng), d(rng), d(rng)};
            const LorentzVec3 c = lorentz_cross(a, b);
            CHECK(std::abs(lorentz_dot(c, a)) <= 1e-14);
            CHECK(std::abs(lorentz_dot(c, b)) <= 1e-14);
            const LorentzVec3 s = c + lorentz_cross(b, a);
            CHECK(s.x1 == 0.0);
            CHECK(s.x2 == 0.0);
            CHECK(s.x3 == 0.0);
        }
        // third component carries the sign flip
        const LorentzVec3 e = lorentz_cross({1, 0, 0}, {0, 1, 0});
        CHECK(e.x3 == -1.0);
        CHECK(lorentz_dot({0, 0, 1}, {0, 0, 1}) == -1.0);
    }

    TEST_CASE("cross4 is orthogonal to its three arguments")
    {
        std::mt19937_64 rng(3);
        std::uniform_real_distribution<double> d(-1.0, 1.0);
        for (int i = 0; i < 500; ++i) {
            const Vec4 a{d(rng), d(rng), d(rng), d(rng)}, b{d(rng), d(rng), d(rng), d(rng)},
                c{d(rng), d(rng), d(rng), d(rng)};
            const Vec4 n = cross4(a, b, c);
            CHECK(std::abs(dot4(n, a)) <= 1e-14);
            CHECK(std::abs(dot4(n, b)) <= 1e-14);
            CHECK(std::abs(dot4(n, c)) <= 1e-14);
        }
        const Vec4 e = cross4({1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0});
        CHECK(std::abs(e.t) == 1.0);
    }

    TEST_CASE("normalize rejects near-zero vectors")
    {
        CHECK(norm(normalize(Vec3{3, 4, 0})) == doctest::Approx(1.0).epsilon(1e-15));
        CHECK_THROWS_AS(normalize(Vec3{0, 0, 1e-16}), Error);
        try {
            normalize(Vec4{});
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::DegenerateVector);
        }
    }

    TEST_CASE("tolerances validate")
    {
        Tolerances t;
        CHECK_NOTHROW(t.validate());
        t.fd_tol = -1.0;
        CHECK_THROWS_AS(t.validate(), Error);
    }
}
