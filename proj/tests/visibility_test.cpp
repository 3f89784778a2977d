#include <map>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "hypvis/enumeration.hpp"
#include "hypvis/orbit_point.hpp"
#include "hypvis/visibility.hpp"

using namespace hypvis;

TEST_CASE("hidden example with its certifying triple") {
    VisibilityResult r = is_visible(OrbitPoint(8, 13));
    CHECK_FALSE(r.visible);
    REQUIRE(r.witness.has_value());
    CHECK(r.witness->a == 1);
    CHECK(r.witness->b == 1);
    CHECK(r.witness->d == 2);
    // The triple satisfies all the defining conditions.
    CHECK(r.witness->a * r.witness->d == r.witness->b * r.witness->b + 1);
    CHECK(8 % r.witness->b == 0);
    CHECK(i64(8) * (r.witness->d - r.witness->a) == r.witness->b * (13 - 5));
}

TEST_CASE("visible examples") {
    CHECK(is_visible(OrbitPoint(23, 53)).visible);
    CHECK(is_visible(OrbitPoint(2, 5)).visible);
    CHECK(is_visible(OrbitPoint(1, 2)).visible);
    CHECK(is_visible(OrbitPoint(1, 1)).visible);
    CHECK(is_visible(OrbitPoint(18, 65)).visible);  // gcd(B, D - A) = 6, yet visible
    CHECK_FALSE(is_visible(OrbitPoint(3, 5)).visible);    // second point of the (1,2) ray
    CHECK_FALSE(is_visible(OrbitPoint(21, 34)).visible);  // fourth point of the (1,2) ray
    CHECK_THROWS_AS(is_visible(OrbitPoint(0, 1)), std::invalid_argument);
}

TEST_CASE("witness conditions hold for every hidden point") {
    for (const OrbitPoint& z : enumerate_points(3000)) {
        if (z.is_origin()) continue;
        VisibilityResult r = is_visible(z);
        if (r.visible) {
            CHECK_FALSE(r.witness.has_value());
            continue;
        }
        REQUIRE(r.witness.has_value());
        OrbitPoint q1 = normalize_to_q1(z).point;
        i64 a = r.witness->a, b = r.witness->b, d = r.witness->d;
        CHECK(1 <= a);
        CHECK(a <= b);
        CHECK(b < d);
        CHECK(a * d == b * b + 1);
        CHECK(q1.B % b == 0);
        CHECK(i128(q1.B) * (d - a) == i128(b) * (i128(q1.D) - q1.A));
        CHECK(q1.B != b);
    }
}

TEST_CASE("arithmetic test agrees with the geometric ray oracle") {
    const i64 bound = 2000;
    std::vector<OrbitPoint> pts = enumerate_points(bound);
    for (const OrbitPoint& z : pts) {
        if (z.is_origin()) continue;
        CHECK(is_visible(z).visible == is_visible_oracle(z, pts, bound));
    }
}

TEST_CASE("coprimality shortcut is consistent") {
    for (const OrbitPoint& z : enumerate_points(1500)) {
        if (z.is_origin()) continue;
        OrbitPoint q1 = normalize_to_q1(z).point;
        if (std::gcd(q1.B, q1.D - q1.A) == 1) CHECK(is_visible(z).visible);
    }
}

TEST_CASE("visibility is symmetry invariant") {
    for (const OrbitPoint& z : enumerate_points(800)) {
        if (z.is_origin()) continue;
        bool v = is_visible(z).visible;
        for (int k = 2; k <= 4; ++k) CHECK(is_visible(apply_symmetry(z, k)).visible == v);
    }
}

TEST_CASE("ray decomposition of small points") {
    RayPosition p = ray_decompose(OrbitPoint(1, 1));
    CHECK(p.index == 1);
    CHECK(apply_to_i(p.ray.generator) == OrbitPoint(1, 1));

    p = ray_decompose(OrbitPoint(8, 13));
    CHECK(p.index == 3);
    CHECK(p.ray.translation == SymmetricGram(1, 1, 2));
    CHECK(apply_to_i(p.ray.generator) == OrbitPoint(1, 2));
    CHECK(p.ray.spacing_cosh == Ratio(3, 2));

    p = ray_decompose(OrbitPoint(3, 5));
    CHECK(p.index == 2);
    CHECK(p.ray.translation == SymmetricGram(1, 1, 2));

    CHECK_THROWS_AS(ray_decompose(OrbitPoint(0, 1)), std::invalid_argument);
}

TEST_CASE("ray decomposition round-trips powers") {
    // Walking the ray: left-multiplying a representative by the symmetric
    // translation S advances two places, and gram powers land on even places.
    std::vector<OrbitPoint> seeds = {OrbitPoint(1, 2), OrbitPoint(1, 1),
                                     OrbitPoint(2, 5), OrbitPoint(23, 53)};
    for (const OrbitPoint& seed : seeds) {
        RayPosition base = ray_decompose(seed);
        REQUIRE(base.index == 1);
        SymmetricGram s = base.ray.translation;
        CHECK(s == seed.gram());
        UnimodularMatrix smat(s.A, s.B, s.B, s.D);
        UnimodularMatrix m = base.ray.generator;
        int expected = 1;
        for (int step = 0; step < 6; ++step) {
            if (trace_of_power(s.trace(), expected + 2) > (i128(1) << 40)) break;
            m = smat * m;
            expected += 2;
            RayPosition p = ray_decompose(apply_to_i(m));
            CHECK(p.index == expected);
            CHECK(p.ray.translation == s);
        }
        // The k-th power of the ray translation is itself the Gram matrix of
        // the place-k point on the same ray.
        for (int k = 1; k <= 3; ++k) {
            SymmetricGram pow = gram_power(s, k);
            RayPosition p = ray_decompose(OrbitPoint(pow.B, pow.D));
            CHECK(p.index == k);
            CHECK(p.ray.translation == s);
        }
    }
}

TEST_CASE("each ray holds exactly one visible point") {
    // Group all points of a modest ball by their ray generator; check one
    // visible point per group and indices consistent with trace growth.
    std::map<std::pair<i64, i64>, std::vector<std::pair<int, bool>>> rays;
    for (const OrbitPoint& z : enumerate_points(200)) {
        if (z.is_origin()) continue;
        RayPosition p = ray_decompose(z);
        OrbitPoint gen = apply_to_i(p.ray.generator);
        rays[{gen.B, gen.D}].push_back({p.index, is_visible(z).visible});
    }
    for (const auto& [gen, members] : rays) {
        int visible_count = 0;
        for (auto [index, vis] : members) {
            CHECK(vis == (index == 1));
            visible_count += vis ? 1 : 0;
        }
        CHECK(visible_count == 1);  // every nonempty ray shows its generator
    }
}

TEST_CASE("trace identity along rays") {
    // The k-th power of S has trace t_k(trace S), for every gram in a ball
    // small enough that ten powers stay inside the trace guard.
    for (const OrbitPoint& z : enumerate_points(70)) {
        if (z.is_origin()) continue;
        SymmetricGram s = z.gram();
        for (int k = 0; k <= 10; ++k) {
            CHECK(gram_power(s, k).trace() == trace_of_power(s.trace(), k));
        }
    }
}

TEST_CASE("even places") {
    CHECK(is_even_place(OrbitPoint(3, 5)));       // index 2 on the (1,2) ray
    CHECK_FALSE(is_even_place(OrbitPoint(8, 13)));  // index 3
    CHECK_FALSE(is_even_place(OrbitPoint(1, 2)));   // index 1
    CHECK(is_even_place(OrbitPoint(-3, 5)));        // symmetry invariant
    CHECK_THROWS_AS(is_even_place(OrbitPoint(0, 1)), std::invalid_argument);
    for (const OrbitPoint& z : enumerate_points(500)) {
        if (z.is_origin()) continue;
        CHECK(is_even_place(z) == (ray_decompose(z).index % 2 == 0));
    }
}

TEST_CASE("Euclidean companion map") {
    CHECK(v_map(OrbitPoint(8, 13)) == std::pair<i64, i64>(8, 8));
    CHECK(v_map(OrbitPoint(23, 53)) == std::pair<i64, i64>(23, 43));
    CHECK(v_map(OrbitPoint(2, 5)) == std::pair<i64, i64>(2, 4));
    CHECK(v_map(OrbitPoint(-8, 13)) == std::pair<i64, i64>(8, 8));  // via Q1 form

    CHECK_FALSE(visible_euclidean(2, 4));
    CHECK(visible_euclidean(1, 0));
    CHECK(visible_euclidean(0, 1));
    CHECK(visible_euclidean(23, 43));
    CHECK(visible_euclidean(-3, 5));
    CHECK_FALSE(visible_euclidean(0, 0));
    CHECK_FALSE(visible_euclidean(-4, 6));

    // Hidden hyperbolic points have Euclidean-hidden companions, and the
    // companion of a visible point with gcd(B, D - A) = 1 is Euclid-visible.
    for (const OrbitPoint& z : enumerate_points(1000)) {
        if (z.is_origin()) continue;
        auto [m, n] = v_map(z);
        if (!is_visible(z).visible) CHECK_FALSE(visible_euclidean(m, n));
    }
}
