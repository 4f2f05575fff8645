#include <polysphere/sphere.hpp>

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

using namespace polysphere;

namespace {

// Random suspension coordinates with the terminal sign at a chosen index.
SuspensionCoords random_susp(int n, int i0, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> open(-0.999, 0.999);
    std::vector<double> t(static_cast<std::size_t>(n - 2), 0.0);
    for (int i = 0; i < i0 - 1; ++i) t[static_cast<std::size_t>(i)] = open(rng);
    t[static_cast<std::size_t>(i0 - 1)] = (rng() & 1) ? 1.0 : -1.0;
    return make_suspension(n, std::move(t), i0);
}

double max_abs_diff(const SphereVector& a, const SphereVector& b) {
    double worst = 0.0;
    for (std::size_t i = 0; i < a.dim(); ++i) {
        worst = std::max(worst, std::abs(a.x[i] - b.x[i]));
    }
    return worst;
}

} // namespace

TEST_CASE("susp_to_cart shell products") {
    const auto a = susp_to_cart(make_suspension(4, {0.0, 1.0}, 2));
    CHECK(a.x[0] == 0.0);
    CHECK(a.x[1] == 1.0);

    // Entries past the terminal index are irrelevant and canonically zeroed.
    const auto b = susp_to_cart(make_suspension(4, {1.0, 0.37}, 1));
    CHECK(b.x[0] == 1.0);
    CHECK(b.x[1] == 0.0);

    const auto c = susp_to_cart(make_suspension(4, {0.6, 1.0}, 2));
    CHECK(c.x[0] == doctest::Approx(0.6).epsilon(1e-15));
    CHECK(c.x[1] == doctest::Approx(0.8).epsilon(1e-15));
}

TEST_CASE("cart_to_susp recovers parameters and the terminal index") {
    const auto a = cart_to_susp(SphereVector{{0.6, 0.8}});
    CHECK(a.i0 == 2);
    CHECK(a.t[0] == doctest::Approx(0.6).epsilon(1e-15));
    CHECK(a.t[1] == 1.0);

    const auto b = cart_to_susp(SphereVector{{1.0, 0.0}});
    CHECK(b.i0 == 1);
    CHECK(b.t[0] == 1.0);
    CHECK(b.t[1] == 0.0);

    const auto c = cart_to_susp(SphereVector{{0.0, 1.0}});
    CHECK(c.i0 == 2);
    CHECK(c.t[0] == 0.0);
    CHECK(c.t[1] == 1.0);

    try {
        static_cast<void>(cart_to_susp(SphereVector{{0.6, 0.9}}));
        FAIL("expected NotUnit");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NotUnit);
    }
}

TEST_CASE("make_suspension rejects malformed coordinates") {
    CHECK_THROWS_AS(static_cast<void>(make_suspension(4, {0.5, 0.5}, 2)), Error); // |t_i0| != 1
    CHECK_THROWS_AS(static_cast<void>(make_suspension(4, {1.0, 1.0}, 2)), Error); // early +/-1
    CHECK_THROWS_AS(static_cast<void>(make_suspension(4, {0.5, 1.0}, 3)), Error); // i0 range
    CHECK_THROWS_AS(static_cast<void>(make_suspension(4, {0.5, 0.5})), Error);    // no terminal
    CHECK_THROWS_AS(static_cast<void>(make_suspension(5, {0.5, 1.0}, 2)), Error); // arity

    // Inference picks the first entry within tol of +/-1 and snaps it.
    const auto s = make_suspension(5, {0.25, -1.0 + 1e-12, 0.9});
    CHECK(s.i0 == 2);
    CHECK(s.t[1] == -1.0);
    CHECK(s.t[2] == 0.0);
}

TEST_CASE("suspension round trips through Cartesian form") {
    std::mt19937_64 rng(2024);
    for (int n = 4; n <= 9; ++n) {
        for (int i0 = 1; i0 <= n - 2; ++i0) {
            for (int rep = 0; rep < 40; ++rep) {
                const SuspensionCoords s = random_susp(n, i0, rng);
                const SphereVector v = susp_to_cart(s);
                CHECK(std::abs(norm(v) - 1.0) < 1e-12);
                const SuspensionCoords back = cart_to_susp(v);
                CHECK(susp_equiv(s, back, 1e-9));
                CHECK(max_abs_diff(susp_to_cart(back), v) < 1e-10);
            }
        }
    }
}

TEST_CASE("susp_equiv ignores entries past the terminal index") {
    SuspensionCoords a{4, {1.0, 0.3}, 1};
    SuspensionCoords b{4, {1.0, -0.9}, 1};
    CHECK(susp_equiv(a, b));

    SuspensionCoords c{4, {0.5, 1.0}, 2};
    SuspensionCoords d{4, {0.5, -1.0}, 2};
    CHECK_FALSE(susp_equiv(c, d));
    CHECK(susp_equiv(c, c));

    SuspensionCoords e{5, {0.5, 1.0, 0.0}, 2};
    CHECK_THROWS_AS(static_cast<void>(susp_equiv(c, e)), Error);
}

TEST_CASE("negation is the antipode in both models") {
    const SuspensionCoords s = make_suspension(4, {0.6, 1.0}, 2);
    const SuspensionCoords neg = negate(s);
    CHECK(neg.t[0] == -0.6);
    CHECK(neg.t[1] == -1.0);

    const SphereVector v = susp_to_cart(s);
    const SphereVector nv = susp_to_cart(neg);
    const SphereVector av = antipode(v);
    // Negating parameters negates each Cartesian entry exactly: the square
    // roots in the shell products see t^2 only.
    for (std::size_t i = 0; i < v.dim(); ++i) CHECK(nv.x[i] == av.x[i]);

    const SphereVector back = antipode(av);
    for (std::size_t i = 0; i < v.dim(); ++i) CHECK(back.x[i] == v.x[i]);
}

TEST_CASE("projective_canonical picks the sign of the first significant entry") {
    const auto a = projective_canonical(SphereVector{{-0.6, 0.8}});
    CHECK(a.x[0] == 0.6);
    CHECK(a.x[1] == -0.8);

    const auto b = projective_canonical(SphereVector{{0.0, -1.0}});
    CHECK(b.x[0] == 0.0);
    CHECK(b.x[1] == 1.0);

    const auto c = projective_canonical(SphereVector{{0.6, 0.8}});
    CHECK(c.x[0] == 0.6);
    CHECK(c.x[1] == 0.8);

    std::mt19937_64 rng(7);
    for (int rep = 0; rep < 200; ++rep) {
        const SphereVector v = sample_uniform(4, rng);
        const SphereVector cv = projective_canonical(v);
        const SphereVector ca = projective_canonical(antipode(v));
        for (std::size_t i = 0; i < v.dim(); ++i) {
            CHECK(cv.x[i] == ca.x[i]);                          // pair collapses
        }
        const SphereVector twice = projective_canonical(cv);
        for (std::size_t i = 0; i < v.dim(); ++i) {
            CHECK(twice.x[i] == cv.x[i]);                       // idempotent
        }
    }
}

TEST_CASE("slerp endpoints, midpoint, and error paths") {
    const SphereVector u{{1.0, 0.0}};
    const SphereVector v{{0.0, 1.0}};
    const SphereVector at0 = slerp(u, v, 0.0);
    CHECK(at0.x[0] == 1.0);
    CHECK(at0.x[1] == 0.0);
    const SphereVector at1 = slerp(u, v, 1.0);
    CHECK(at1.x[0] == doctest::Approx(0.0));
    CHECK(at1.x[1] == doctest::Approx(1.0).epsilon(1e-15));
    const SphereVector mid = slerp(u, v, 0.5);
    CHECK(mid.x[0] == doctest::Approx(std::sqrt(2.0) / 2.0).epsilon(1e-15));
    CHECK(mid.x[1] == doctest::Approx(std::sqrt(2.0) / 2.0).epsilon(1e-15));

    CHECK_THROWS_AS(static_cast<void>(slerp(u, v, 1.5)), Error);
    try {
        static_cast<void>(slerp(u, SphereVector{{-1.0, 1e-12}}, 0.5));
        FAIL("expected AntipodalEndpoints");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::AntipodalEndpoints);
    }
}

TEST_CASE("slerp has constant speed") {
    std::mt19937_64 rng(11);
    for (int rep = 0; rep < 20; ++rep) {
        const SphereVector u = sample_uniform(5, rng);
        const SphereVector v = sample_uniform(5, rng);
        const double theta = angle_between(u, v);
        if (theta >= std::numbers::pi - 1e-6) continue;
        for (int k = 0; k <= 10; ++k) {
            const double s = k / 10.0;
            const SphereVector w = slerp(u, v, s);
            CHECK(std::abs(norm(w) - 1.0) < 1e-12);
            CHECK(angle_between(w, u) == doctest::Approx(s * theta).epsilon(1e-9));
        }
    }
}

TEST_CASE("sample_uniform is seeded and unbiased") {
    const SphereVector a = sample_uniform(ModuliSpec{6, 4.5}, 99);
    const SphereVector b = sample_uniform(ModuliSpec{6, 4.5}, 99);
    REQUIRE(a.dim() == 4);
    CHECK(std::abs(norm(a) - 1.0) < 1e-12);
    for (std::size_t i = 0; i < a.dim(); ++i) CHECK(a.x[i] == b.x[i]);

    std::mt19937_64 rng(123);
    double mean[4] = {0.0, 0.0, 0.0, 0.0};
    const int count = 100000;
    for (int k = 0; k < count; ++k) {
        const SphereVector v = sample_uniform(4, rng);
        for (std::size_t i = 0; i < 4; ++i) mean[i] += v.x[i];
    }
    for (double m : mean) CHECK(std::abs(m / count) < 0.01);
}
