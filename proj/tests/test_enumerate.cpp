#include <catch2/catch_amalgamated.hpp>

#include <set>
#include <thread>

#include "fixtures.hpp"
#include "support.hpp"

using mik::Clutter;

TEST_CASE("clutter enumeration counts") {
    CHECK(mik::enumerate_clutters(1).size() == 1);
    CHECK(mik::enumerate_clutters(2).size() == 4);
    CHECK(mik::enumerate_clutters(3).size() == 18);
    CHECK(mik::enumerate_clutters(4).size() == 166);
    CHECK(mik::enumerate_clutters(5).size() == 7579);
}

TEST_CASE("enumeration yields exactly the antichains, without repeats") {
    auto all = mik::enumerate_clutters(2);
    std::set<std::string> seen;
    for (const auto& C : all) seen.insert(C.str());
    CHECK(seen.size() == all.size());
    CHECK(seen == std::set<std::string>{Clutter(2, {{1}}).str(),
                                        Clutter(2, {{2}}).str(),
                                        Clutter(2, {{1, 2}}).str(),
                                        Clutter(2, {{1}, {2}}).str()});

    // Minimalizing each emitted edge set changes nothing: they are antichains.
    for (const auto& C : mik::enumerate_clutters(3)) {
        CHECK(Clutter(3, C.edges()) == C);
        CHECK_FALSE(C.empty());
    }
}

TEST_CASE("canonical forms") {
    CHECK(mik::canonical_form(Clutter(3, {{2, 3}})) == Clutter(3, {{1, 2}}));
    auto T = miktest::triangle_clutter();
    CHECK(mik::canonical_form(T) == T);
    for (const auto& C : mik::enumerate_clutters(3))
        CHECK(mik::canonical_form(mik::canonical_form(C)) ==
              mik::canonical_form(C));

    // Relabeled clutters collapse to the same representative.
    auto a = mik::canonical_form(Clutter(4, {{1, 2}, {2, 3}, {3, 4}}));
    auto b = mik::canonical_form(Clutter(4, {{4, 3}, {3, 1}, {1, 2}}));
    CHECK(a == b);
}

TEST_CASE("batch sweeps") {
    auto spp4 = mik::batch_check(4, [](const Clutter& C) {
        return mik::check_spp(mik::edge_ideal(C), 3).status;
    });
    CHECK(spp4.total == 166);
    CHECK(spp4.holds == 166);
    CHECK(spp4.fails == 0);
    CHECK(spp4.unknown == 0);

    auto ntf3 = mik::batch_check(3, [](const Clutter& C) {
        return mik::check_ntf_bounded(mik::edge_ideal(C), 3).status;
    });
    CHECK(ntf3.total == 18);
    CHECK(ntf3.fails == 1);
    auto triangle_form = mik::canonical_form(miktest::triangle_clutter()).str();
    REQUIRE(ntf3.failing.size() == 1);
    CHECK(ntf3.failing.front() == triangle_form);
}

TEST_CASE("sweep reports are deterministic across job counts") {
    auto run = [](unsigned jobs) {
        mik::SweepOptions opts;
        opts.jobs = jobs;
        return mik::batch_check(
            4,
            [](const Clutter& C) {
                return mik::check_ntf_bounded(mik::edge_ideal(C), 2).status;
            },
            opts);
    };
    auto r1 = run(1);
    auto r2 = run(2);
    CHECK(r1.total == r2.total);
    CHECK(r1.holds == r2.holds);
    CHECK(r1.fails == r2.fails);
    CHECK(r1.unknown == r2.unknown);
    CHECK(r1.failing == r2.failing);
}

TEST_CASE("per-instance timeout downgrades to unknown") {
    mik::SweepOptions opts;
    opts.per_instance_timeout = std::chrono::milliseconds(1);
    auto r = mik::batch_check(
        3,
        [](const Clutter& C) {
            std::this_thread::sleep_for(std::chrono::milliseconds(2));
            return mik::check_spp(mik::edge_ideal(C), 1).status;
        },
        opts);
    CHECK(r.total == 18);
    CHECK(r.unknown == 18);
    CHECK(r.fails == 0);
}
