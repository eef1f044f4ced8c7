#include "hfkit/error.hpp"
#include "hfkit/oracle.hpp"
#include "hfkit/pointed_graph.hpp"
#include "hfkit/universe.hpp"

#include <doctest.h>

using namespace hfkit;

TEST_CASE("collapse of small graphs")
{
    SetUniverse u;
    const auto e = u.empty_set();
    CHECK(from_graph({{{}}, 0}, u) == e);
    CHECK(from_graph({{{1, 2}, {}, {}}, 0}, u) == u.mk_set({e}));
    const PointedGraph two{{{1, 2}, {}, {3}, {}}, 0};
    CHECK(from_graph(two, u) == u.von_neumann(2));
    // Vertices unreachable from the root are ignored.
    CHECK(from_graph({{{}, {0}}, 0}, u) == e);
}

TEST_CASE("cycles are reported")
{
    SetUniverse u;
    try {
        (void)from_graph({{{0}}, 0}, u);
        FAIL("expected CyclicError");
    } catch (const CyclicError& err) {
        CHECK(err.cycle() == std::vector<std::size_t>{0});
    }
    try {
        (void)from_graph({{{1}, {2}, {1}}, 0}, u);
        FAIL("expected CyclicError");
    } catch (const CyclicError& err) {
        CHECK(err.cycle().size() == 2);
    }
    CHECK_THROWS_AS((void)bisimilar({{{0}}, 0}, {{{}}, 0}), CyclicError);
    // A cycle outside the reachable part does not matter.
    CHECK(from_graph({{{}, {1}}, 0}, u) == u.empty_set());
}

TEST_CASE("malformed graphs")
{
    SetUniverse u;
    CHECK_THROWS_AS((void)from_graph({{{5}}, 0}, u), Error);
    CHECK_THROWS_AS((void)from_graph({{{}}, 3}, u), Error);
}

TEST_CASE("bisimilarity")
{
    // {∅} presented with one and with three sinks.
    CHECK(bisimilar({{{1}, {}}, 0}, {{{1, 2, 3}, {}, {}, {}}, 0}));
    CHECK_FALSE(bisimilar({{{}}, 0}, {{{1}, {}}, 0}));
    // Two members presented by 2 and by 5 children.
    const PointedGraph narrow{{{1, 2}, {}, {1}}, 0};
    const PointedGraph wide{{{1, 2, 3, 4, 5}, {}, {1}, {}, {6}, {}, {}}, 0};
    CHECK(bisimilar(narrow, wide));
    SetUniverse u;
    CHECK(from_graph(narrow, u) == from_graph(wide, u));
}

TEST_CASE("raw membership")
{
    const PointedGraph empty{{{}}, 0};
    const PointedGraph one{{{1, 2}, {}, {}}, 0};
    const PointedGraph two{{{1, 2}, {}, {3}, {}}, 0};
    CHECK(mem_raw(empty, one));
    CHECK(mem_raw(one, two));
    CHECK_FALSE(mem_raw(two, one));
    CHECK_FALSE(mem_raw(empty, empty));
}

TEST_CASE("graph of a set collapses back to it")
{
    SetUniverse u;
    for (auto h : oracle::enumerate_v(4, u)) {
        const auto g = PointedGraph::of_set(u, h);
        CHECK(from_graph(g, u) == h);
        CHECK(g.vertex_count() == canonical_closure(u, h).size());
    }
}

TEST_CASE("collapse_all and greatest bisimulation on all small graphs")
{
    SetUniverse u;
    for (std::size_t n = 1; n <= 4; ++n) {
        for (const auto& g : oracle::enumerate_dags(n)) {
            const auto h = collapse_all(g, u);
            const auto b = greatest_bisimulation(g);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) CHECK((h[i] == h[j]) == b(i, j));
        }
    }
}
