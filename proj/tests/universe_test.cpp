#include "hfkit/error.hpp"
#include "hfkit/oracle.hpp"
#include "hfkit/universe.hpp"

#include <doctest.h>

#include <cstdlib>

using namespace hfkit;

namespace {

struct Small {
    SetUniverse u;
    SetHandle e = u.empty_set();
    SetHandle one = u.mk_set({e});
    SetHandle two = u.mk_set({e, one});
    SetHandle single_one = u.mk_set({one});  // {{∅}}
    SetHandle three = u.mk_set({e, one, two});
    SetHandle bad = u.mk_set({e, one, single_one});  // {∅,{∅},{{∅}}}
};

} // namespace

TEST_CASE("mk_set collapses order and duplicates")
{
    Small s;
    CHECK(s.u.mk_set({}) == s.e);
    CHECK(s.u.mk_set({s.e, s.e}) == s.one);
    CHECK(s.u.mk_set({s.one, s.e}) == s.u.mk_set({s.e, s.one}));
    const auto before = s.u.size();
    (void)s.u.mk_set({s.one, s.e, s.one});
    CHECK(s.u.size() == before);
}

TEST_CASE("elements are listed in creation order")
{
    Small s;
    CHECK(s.u.elements(s.e).empty());
    CHECK(s.u.elements(s.two) == std::vector{s.e, s.one});
    CHECK(s.u.elements(s.single_one) == std::vector{s.one});
    CHECK(s.u.cardinality(s.three) == 3);
}

TEST_CASE("membership and subset")
{
    Small s;
    CHECK(s.u.mem(s.e, s.one));
    CHECK_FALSE(s.u.mem(s.e, s.single_one));
    CHECK_FALSE(s.u.mem(s.e, s.e));
    CHECK(s.u.subset(s.e, s.single_one));
    CHECK_FALSE(s.u.subset(s.two, s.single_one));
    CHECK(s.u.subset(s.one, s.two));
}

TEST_CASE("transitive sets and st-ordinals")
{
    Small s;
    CHECK(s.u.is_transitive_set(s.bad));
    CHECK_FALSE(s.u.is_transitive_set(s.single_one));
    CHECK(s.u.is_transitive_set(s.e));
    CHECK(s.u.is_st_ordinal(s.two));
    CHECK_FALSE(s.u.is_st_ordinal(s.bad));
    CHECK(s.u.is_st_ordinal(s.e));
}

TEST_CASE("numerals")
{
    Small s;
    CHECK(s.u.von_neumann(0) == s.e);
    CHECK(s.u.von_neumann(2) == s.two);
    CHECK(s.u.von_neumann(3) == s.three);
    for (std::size_t n = 0; n < 20; ++n) {
        CHECK(s.u.rank_nat(s.u.von_neumann(n)) == n);
        CHECK(s.u.is_st_ordinal(s.u.von_neumann(n)));
    }
    s.u.set_numeral_limit(10);
    CHECK_THROWS_AS(s.u.von_neumann(11), LimitError);
}

TEST_CASE("rank")
{
    Small s;
    CHECK(s.u.rank_nat(s.e) == 0);
    CHECK(s.u.rank_nat(s.single_one) == 2);
    CHECK(s.u.rank_nat(s.bad) == 3);
}

TEST_CASE("foreign handles are rejected")
{
    Small s;
    SetUniverse other;
    const auto x = other.mk_set({other.empty_set()});
    CHECK_THROWS_AS(s.u.mk_set({x}), ForeignHandleError);
    CHECK_THROWS_AS((void)s.u.mem(x, s.one), ForeignHandleError);
}

TEST_CASE("node limit")
{
    SetUniverse u(3);
    const auto e = u.empty_set();
    const auto one = u.mk_set({e});
    (void)u.mk_set({e, one});
    CHECK_THROWS_AS(u.mk_set({one}), LimitError);
}

TEST_CASE("canonical printing")
{
    Small s;
    CHECK(format_set(s.u, s.e) == "{}");
    CHECK(format_set(s.u, s.two) == "{{},{{}}}");
    CHECK(format_set(s.u, s.bad) == "{{},{{}},{{{}}}}");
    // Printing does not depend on creation order.
    SetUniverse v;
    const auto e = v.empty_set();
    const auto so = v.mk_set({v.mk_set({e})});
    const auto bad = v.mk_set({so, v.mk_set({e}), e});
    CHECK(format_set(v, bad) == format_set(s.u, s.bad));
    CHECK(canonical_compare(s.u, s.single_one, s.two) < 0);
    CHECK(canonical_compare(s.u, s.one, s.single_one) < 0);
}

TEST_CASE("json slice export is stable and round trips")
{
    Small s;
    CHECK(export_slice_json(s.u, s.two) == R"({"nodes":[[],[0],[0,1]],"root":2})");
    CHECK(export_slice_json(s.u, s.bad) == R"({"nodes":[[],[0],[1],[0,1,2]],"root":3})");
    SetUniverse v;
    const auto back = import_slice_json(v, export_slice_json(s.u, s.bad));
    CHECK(format_set(v, back) == format_set(s.u, s.bad));
    CHECK(export_slice_json(v, back) == export_slice_json(s.u, s.bad));
    CHECK_THROWS_AS(import_slice_json(v, R"({"nodes":[[0]],"root":0})"), Error);
    CHECK_THROWS_AS(import_slice_json(v, "nope"), Error);
}

TEST_CASE("cumulative stages")
{
    SetUniverse u;
    CHECK(oracle::enumerate_v(0, u).empty());
    CHECK(oracle::enumerate_v(1, u) == std::vector{u.empty_set()});
    const auto v4 = oracle::enumerate_v(4, u);
    CHECK(v4.size() == 16);
    std::size_t ordinals = 0;
    for (auto h : v4) {
        if (!u.is_st_ordinal(h)) continue;
        ++ordinals;
        CHECK(h == u.von_neumann(u.rank_nat(h)));
    }
    CHECK(ordinals == 4);
    CHECK(u.verify_invariants());
}

TEST_CASE("node limit from the environment")
{
    ::setenv("HFKIT_NODE_LIMIT", "5", 1);
    CHECK(SetUniverse::node_limit_from_env() == 5);
    ::setenv("HFKIT_NODE_LIMIT", "lots", 1);
    CHECK(SetUniverse::node_limit_from_env() == SetUniverse::default_node_limit);
    ::unsetenv("HFKIT_NODE_LIMIT");
    CHECK(SetUniverse::node_limit_from_env() == SetUniverse::default_node_limit);
}
