#include "hfkit/error.hpp"
#include "hfkit/oracle.hpp"

#include <doctest.h>

using namespace hfkit;

TEST_CASE("brute-force simulations")
{
    CHECK(oracle::enum_simulations(FinOrd::chain(2), FinOrd::chain(3)).size() == 1);
    CHECK(oracle::enum_simulations(FinOrd::chain(3), FinOrd::chain(3)) ==
          std::vector<std::vector<std::size_t>>{{0, 1, 2}});
    const auto dot = Mewo::validate(1, Relation(1), {true});
    Relation r(2);
    r.set(0, 1, true);
    const auto hollow_dot = Mewo::validate(2, r, {false, true});
    CHECK(oracle::enum_simulations(dot, hollow_dot).empty());
    CHECK(oracle::enum_bounded_sims(dot, hollow_dot).size() == 1);
    CHECK_THROWS_AS(oracle::enum_simulations(FinOrd::chain(7), FinOrd::chain(7)), LimitError);
}

TEST_CASE("stage enumeration limits")
{
    SetUniverse u;
    CHECK_THROWS_AS(oracle::enumerate_v(6, u), LimitError);
    CHECK_THROWS_AS(oracle::enumerate_mewos(5), LimitError);
}

TEST_CASE("generators are reproducible")
{
    SetUniverse u1;
    SetUniverse u2;
    const oracle::GenConfig cfg{7, 4, 5, 200};
    const auto a = oracle::gen_random_sets(cfg, u1);
    const auto b = oracle::gen_random_sets(cfg, u2);
    REQUIRE(a.size() == 200);
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(format_set(u1, a[i]) == format_set(u2, b[i]));
        CHECK(u1.rank_nat(a[i]) <= cfg.max_depth);
    }
    const auto m1 = oracle::gen_random_mewos(cfg);
    const auto m2 = oracle::gen_random_mewos(cfg);
    CHECK(m1 == m2);
    for (const auto& m : m1) CHECK_NOTHROW(Mewo::validate(m.size(), m.lt(), m.marking()));
    for (const auto& m : oracle::gen_random_mewos(cfg, true)) CHECK(is_covered(m));
    oracle::Rng r1(3);
    oracle::Rng r2(3);
    CHECK(r1.permutation(10) == r2.permutation(10));
}

TEST_CASE("redundant copies are bisimilar")
{
    oracle::Rng rng(11);
    for (int i = 0; i < 200; ++i) {
        const auto g = oracle::random_graph(rng, 8);
        const auto c = oracle::redundant_copy(rng, g);
        CHECK(c.vertex_count() >= g.vertex_count());
        CHECK(bisimilar(g, c));
    }
}

TEST_CASE("layered graphs are closed under prefixes")
{
    oracle::Rng rng(5);
    const auto g = oracle::random_layered_dag(rng, 500, 3);
    for (std::size_t v = 0; v < g.size(); ++v)
        for (auto w : g[v]) CHECK(w < v);
}
