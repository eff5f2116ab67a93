#include "wallcross/lattice.hpp"

#include <doctest.h>

#include <random>

using namespace wallcross;

TEST_CASE("surface presets carry the right form and canonical class") {
    SurfaceModel p2 = surface_preset("p2");
    CHECK(p2.rank == 1);
    CHECK(p2.gram[0][0] == 1);
    CHECK(p2.canonical == DivisorClass{-3});

    SurfaceModel q = surface_preset("p1xp1");
    CHECK(q.rank == 2);
    CHECK(q.gram[0][0] == 0);
    CHECK(q.gram[0][1] == 1);
    CHECK(q.canonical == DivisorClass{-2, -2});

    SurfaceModel h2 = surface_preset("hirzebruch:2");
    CHECK(h2.gram[0][0] == -2);
    CHECK(h2.gram[0][1] == 1);
    CHECK(h2.gram[1][1] == 0);
    CHECK(h2.canonical == DivisorClass{-2, -4});

    // adjunction on the negative section e and the fiber f
    DivisorClass e{1, 0}, f{0, 1};
    CHECK(intersect(h2, h2.canonical, e) + self_intersect(h2, e) == -2);
    CHECK(intersect(h2, h2.canonical, f) + self_intersect(h2, f) == -2);

    CHECK_THROWS_AS(surface_preset("p3"), input_error);
    CHECK_THROWS_AS(surface_preset("hirzebruch:-1"), input_error);
    CHECK_THROWS_AS(surface_preset("hirzebruch:x"), input_error);
}

TEST_CASE("canonical self-intersection per preset") {
    auto k2 = [](const SurfaceModel& s) { return self_intersect(s, s.canonical); };
    CHECK(k2(surface_preset("p2")) == 9);
    CHECK(k2(surface_preset("p1xp1")) == 8);
    for (int n = 0; n <= 4; ++n)
        CHECK(k2(surface_preset("hirzebruch:" + std::to_string(n))) == 8);
}

TEST_CASE("intersection pairing values") {
    SurfaceModel q = surface_preset("p1xp1");
    CHECK(intersect(q, DivisorClass{5, 5}, DivisorClass{5, 5}) == 50);
    CHECK(intersect(q, DivisorClass{1, 1}, DivisorClass{3, -1}) == 2);
    CHECK(intersect(q, DivisorClass{2, 7}, DivisorClass{0, 0}) == 0);
    CHECK_THROWS_AS(intersect(q, DivisorClass{1}, DivisorClass{1, 1}), input_error);
}

TEST_CASE("intersection pairing is symmetric") {
    std::mt19937_64 gen(11);
    auto rnd = [&] { return long(gen() % 15) - 7; };
    for (const char* name : {"p1xp1", "hirzebruch:1", "hirzebruch:3"}) {
        SurfaceModel s = surface_preset(name);
        for (int trial = 0; trial < 50; ++trial) {
            DivisorClass x{rnd(), rnd()}, y{rnd(), rnd()};
            CHECK(intersect(s, x, y) == intersect(s, y, x));
        }
    }
}

TEST_CASE("anti-canonical degree") {
    SurfaceModel q = surface_preset("p1xp1");
    CHECK(anti_canonical_degree(q, DivisorClass{1, -1}) == 0);
    // direct evaluation of (2,2).(3,-1) under the hyperbolic form
    CHECK(anti_canonical_degree(q, DivisorClass{3, -1}) == 4);
    CHECK(anti_canonical_degree(q, DivisorClass{0, 0}) == 0);
}

TEST_CASE("ample cone oracles") {
    CHECK(is_ample(surface_preset("p1xp1"), DivisorClass{1, 4}));
    CHECK_FALSE(is_ample(surface_preset("p1xp1"), DivisorClass{0, 4}));
    CHECK_FALSE(is_ample(surface_preset("p2"), DivisorClass{-1}));
    CHECK(is_ample(surface_preset("p2"), DivisorClass{2}));

    SurfaceModel h2 = surface_preset("hirzebruch:2");
    CHECK_FALSE(is_ample(h2, DivisorClass{1, 2}));  // b = n*a is nef, not ample
    CHECK(is_ample(h2, DivisorClass{1, 3}));
    CHECK_FALSE(is_ample(h2, DivisorClass{-1, 5}));
}

TEST_CASE("custom surfaces validate signature and certify ampleness only as asserted") {
    auto gram = std::vector<std::vector<Int>>{{Int(2), Int(0)}, {Int(0), Int(-2)}};
    SurfaceModel s = make_custom_surface(2, gram, DivisorClass{0, 2}, {DivisorClass{1, 0}});
    CHECK(is_ample(s, DivisorClass{1, 0}));
    CHECK_THROWS_AS(is_ample(s, DivisorClass{2, 0}), ample_uncertainty_error);

    auto pos_def = std::vector<std::vector<Int>>{{Int(1), Int(0)}, {Int(0), Int(1)}};
    CHECK_THROWS_AS(make_custom_surface(2, pos_def, DivisorClass{0, 0}, {}), input_error);
    auto asym = std::vector<std::vector<Int>>{{Int(0), Int(1)}, {Int(2), Int(0)}};
    CHECK_THROWS_AS(make_custom_surface(2, asym, DivisorClass{0, 0}, {}), input_error);
}

TEST_CASE("Hodge index: orthogonal complement of an ample class is negative") {
    std::mt19937_64 gen(5);
    auto rnd = [&] { return long(gen() % 13) - 6; };
    for (const char* name : {"p1xp1", "hirzebruch:0", "hirzebruch:2"}) {
        SurfaceModel s = surface_preset(name);
        DivisorClass a = name[0] == 'p' ? DivisorClass{2, 3} : DivisorClass{1, 5};
        REQUIRE(is_ample(s, a));
        Int a2 = self_intersect(s, a);
        for (int trial = 0; trial < 80; ++trial) {
            DivisorClass d{rnd(), rnd()};
            // project away the ample direction: a2*d - (a.d)*a is orthogonal to a
            Int ad = intersect(s, a, d);
            DivisorClass perp;
            for (int i = 0; i < 2; ++i)
                perp.coords.push_back(a2 * d.coords[i] - ad * a.coords[i]);
            CHECK(intersect(s, a, perp) == 0);
            if (!perp.is_zero()) CHECK(self_intersect(s, perp) < 0);
        }
    }
}
