#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "oracles.hpp"
#include "wirt/bounds.hpp"
#include "wirt/search.hpp"

using namespace wirt;

namespace {

Diagram from(const std::string& text) { return build_diagram(parse_gauss(text)); }

} // namespace

TEST_CASE("twist regions of the standard small diagrams") {
    const auto trefoil = twist_regions(from("[-1,3,-2,1,-3,2]"));
    REQUIRE(trefoil.size() == 1);
    CHECK(trefoil[0].crossings == std::vector<int>{1, 2, 3});

    const auto fig8 = twist_regions(from("[1,-2,3,-4,2,-1,4,-3]"));
    REQUIRE(fig8.size() == 2);
    CHECK(fig8[0].crossings.size() == 2);
    CHECK(fig8[1].crossings.size() == 2);

    const auto kink = twist_regions(from("[1,-1]"));
    REQUIRE(kink.size() == 1);
    CHECK(kink[0].crossings == std::vector<int>{1});

    const auto hopf = twist_regions(from("[1,-2];[-1,2]"));
    REQUIRE(hopf.size() == 1);
    CHECK(hopf[0].crossings == std::vector<int>{1, 2});

    CHECK_THROWS_AS(twist_regions(from("[]")), NoCrossings);
}

TEST_CASE("twist regions partition the crossings") {
    std::mt19937 rng(53);
    for (int trial = 0; trial < 200; ++trial) {
        const auto d = build_diagram(oracle::random_code(rng));
        if (d.num_crossings() == 0)
            continue;
        const auto regions = twist_regions(d);
        std::set<int> seen;
        for (const auto& region : regions)
            for (int x : region.crossings) {
                REQUIRE(!seen.count(x));
                seen.insert(x);
            }
        REQUIRE(static_cast<int>(seen.size()) == d.num_crossings());
    }
}

TEST_CASE("twist seeding generates and respects the 2t budget") {
    for (const std::string text :
         {"[-1,3,-2,1,-3,2]", "[1,-2,3,-4,2,-1,4,-3]", "[1,-1]", "[1,-2];[-1,2]",
          "[-1,2,-3,4,-5,1,-2,3,-4,5]", "[1,-2,3,-4];[-1,2,-3,4]"}) {
        const auto d = from(text);
        const auto regions = twist_regions(d);
        const auto seeds = twist_seeding(d, regions);
        INFO("diagram " << text);
        CHECK(static_cast<int>(seeds.size()) <= 2 * static_cast<int>(regions.size()));
        CHECK(is_generating_system(d, seeds));
    }
}

TEST_CASE("twist seeding on the trefoil uses two strands") {
    const auto d = from("[-1,3,-2,1,-3,2]");
    const auto seeds = twist_seeding(d, twist_regions(d));
    CHECK(seeds.size() == 2);
    CHECK(is_generating_system(d, seeds));
}

TEST_CASE("bridge bound from twists") {
    CHECK(bridge_bound_from_twists(from("[-1,3,-2,1,-3,2]")) == 2);
    CHECK(bridge_bound_from_twists(from("[1,-2,3,-4,2,-1,4,-3]")) == 4);
    CHECK(bridge_bound_from_twists(from("[1,-1]")) == 2);

    // The bound dominates omega on these diagrams.
    for (const std::string text : {"[-1,3,-2,1,-3,2]", "[1,-2,3,-4,2,-1,4,-3]", "[1,-1]"}) {
        const auto d = from(text);
        const int omega = std::get<WirtingerResult>(wirtinger_number(d)).omega;
        CHECK(omega <= bridge_bound_from_twists(d));
    }
}

TEST_CASE("the frozen tetrahedron volume matches the quadrature oracle") {
    const double derived = oracle::ideal_simplex_volume();
    CHECK(std::abs(derived - kIdealSimplexVolume) < 1e-9);
}

TEST_CASE("volume lower bound values") {
    const auto two = volume_lower_bound(2);
    CHECK(two.c_const == Catch::Approx(kIdealSimplexVolume / 6.0).epsilon(1e-15));
    CHECK(two.lower_bound == Catch::Approx(0.338313868803218).margin(1e-12));

    const auto one = volume_lower_bound(1);
    CHECK(one.lower_bound == Catch::Approx(0.169156934401609).margin(1e-12));
    CHECK(one.floor_bound == Catch::Approx(2.0 * kIdealSimplexVolume).margin(1e-15));

    // beta = 12 is where the linear branch meets the 2*v3 floor.
    const auto twelve = volume_lower_bound(12);
    CHECK(0.5 * twelve.v3 * (0.5 * 12 - 2.0) ==
          Catch::Approx(2.0 * twelve.v3).margin(1e-12));
    CHECK(twelve.floor_bound == Catch::Approx(2.0 * twelve.v3).margin(1e-12));
    CHECK(twelve.lower_bound <= twelve.floor_bound);
}
