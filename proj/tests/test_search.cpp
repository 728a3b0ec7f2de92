#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

#include "oracles.hpp"
#include "wirt/search.hpp"
#include "wirt/tabulate.hpp"

using namespace wirt;

namespace {

Diagram from(const std::string& text) { return build_diagram(parse_gauss(text)); }

std::vector<std::vector<int>> collect(const Diagram& d, int k) {
    SeedSetStream stream(d, k);
    std::vector<std::vector<int>> out;
    std::vector<int> set;
    while (stream.next(set))
        out.push_back(set);
    return out;
}

const WirtingerResult& resolved(const SearchOutcome& outcome) {
    return std::get<WirtingerResult>(outcome);
}

std::string fixture_gauss(const std::string& name) {
    const auto rows = read_input_csv(std::string(WIRT_DATA_DIR) + "/knots_upto10.csv");
    for (const auto& row : rows)
        if (row.name == name)
            return row.gauss;
    FAIL("fixture entry not found: " + name);
    return {};
}

} // namespace

TEST_CASE("enumerate_seed_sets streams k-subsets in lexicographic order") {
    const auto d = from("[-1,3,-2,1,-3,2]");
    CHECK(collect(d, 2) == std::vector<std::vector<int>>{{0, 1}, {0, 2}, {1, 2}});
    CHECK(collect(d, 3) == std::vector<std::vector<int>>{{0, 1, 2}});
    CHECK_THROWS_AS(SeedSetStream(d, 4), KOutOfRange);
    CHECK_THROWS_AS(SeedSetStream(d, 0), KOutOfRange);
}

TEST_CASE("wirtinger_number golden values") {
    const auto trefoil = resolved(wirtinger_number(from("[-1,3,-2,1,-3,2]")));
    CHECK(trefoil.omega == 2);
    CHECK(trefoil.witness == std::vector<int>{0, 1});

    const auto kink = resolved(wirtinger_number(from("[1,-1]")));
    CHECK(kink.omega == 1);
    CHECK(kink.witness == std::vector<int>{0});

    const auto hopf = resolved(wirtinger_number(from("[1,-2];[-1,2]")));
    CHECK(hopf.omega == 2);
    CHECK(hopf.witness == std::vector<int>{0, 1});

    const auto fig8 = resolved(wirtinger_number(from("[1,-2,3,-4,2,-1,4,-3]")));
    CHECK(fig8.omega == 2);
}

TEST_CASE("the minimal 8_17 diagram needs three seeds") {
    const auto d = from(fixture_gauss("8_17"));
    REQUIRE(d.num_crossings() == 8);
    CHECK(resolved(wirtinger_number(d)).omega == 3);
}

TEST_CASE("omega_upper_bound is c - 1 for knots") {
    CHECK(omega_upper_bound(from("[-1,3,-2,1,-3,2]")) == 2);
    CHECK_THROWS_AS(omega_upper_bound(from("[1,-2];[-1,2]")), NotApplicable);
    CHECK_THROWS_AS(omega_upper_bound(from("[1,-1]")), NotApplicable);
}

TEST_CASE("parallel search returns the sequential result") {
    std::mt19937 rng(41);
    SearchOptions par;
    par.parallelism = 4;
    for (int trial = 0; trial < 60; ++trial) {
        const auto d = build_diagram(oracle::random_code(rng, 7, 2));
        const auto seq = resolved(wirtinger_number(d));
        const auto conc = resolved(wirtinger_number(d, par));
        REQUIRE(seq.omega == conc.omega);
        REQUIRE(seq.witness == conc.witness);
    }
}

TEST_CASE("search agrees with the brute-force oracle on small diagrams") {
    std::mt19937 rng(43);
    for (int trial = 0; trial < 120; ++trial) {
        const auto d = build_diagram(oracle::random_code(rng, 7, 2));
        if (d.num_strands() > 7)
            continue;
        const auto got = resolved(wirtinger_number(d));
        const auto want = oracle::brute_force_wirtinger(d);
        REQUIRE(got.omega == want.omega);
        REQUIRE(got.witness == want.witness);
    }
}

TEST_CASE("every superset of a witness generates") {
    std::mt19937 rng(47);
    for (int trial = 0; trial < 60; ++trial) {
        const auto d = build_diagram(oracle::random_code(rng, 6, 2));
        const auto result = resolved(wirtinger_number(d));
        std::set<int> base(result.witness.begin(), result.witness.end());
        for (int s = 0; s < d.num_strands(); ++s) {
            auto super = base;
            super.insert(s);
            REQUIRE(oracle::generates(d, super));
            REQUIRE(is_generating_system(d, std::vector<int>(super.begin(), super.end())));
        }
    }
}

TEST_CASE("a cutoff yields a bounded outcome") {
    SearchOptions opts;
    opts.cutoff_k = 1;
    const auto outcome = wirtinger_number(from("[-1,3,-2,1,-3,2]"), opts);
    const auto* bounded = std::get_if<BoundedResult>(&outcome);
    REQUIRE(bounded);
    CHECK(bounded->omega_gt == 1);
    CHECK(bounded->reason == BoundReason::Cutoff);
}

TEST_CASE("the empty diagram has omega zero by convention") {
    const Diagram empty;
    const auto result = resolved(wirtinger_number(empty));
    CHECK(result.omega == 0);
    CHECK(result.witness.empty());
}
