#include "hfkit/error.hpp"
#include "hfkit/mewo.hpp"
#include "hfkit/oracle.hpp"
#include "hfkit/ordinal.hpp"

#include <doctest.h>

#include <utility>
#include <vector>

using namespace hfkit;

namespace {

using Pairs = std::vector<std::pair<std::size_t, std::size_t>>;

Mewo mewo(std::size_t n, Pairs p, std::vector<bool> marked) { return Mewo::validate(n, p, std::move(marked)); }

const Mewo empty = mewo(0, {}, {});
const Mewo dot = mewo(1, {}, {true});
const Mewo hollow = mewo(1, {}, {false});
const Mewo hollow_dot = mewo(2, {{0, 1}}, {false, true});
const Mewo dot_dot = mewo(2, {{0, 1}}, {true, true});

} // namespace

TEST_CASE("validation")
{
    CHECK(dot.size() == 1);
    CHECK(hollow_dot.marked(1));
    try {
        (void)mewo(2, {}, {false, false});
        FAIL("antichain accepted");
    } catch (const ValidationError& e) {
        CHECK(e.axiom() == Axiom::Extensionality);
    }
    CHECK_THROWS_AS(mewo(2, {{0, 1}, {1, 0}}, {true, true}), ValidationError);
    CHECK_THROWS_AS(mewo(2, {{0, 1}}, {true}), ValidationError);
    // Transitivity is not required.
    CHECK(mewo(3, {{0, 1}, {1, 2}}, {false, false, true}).size() == 3);
}

TEST_CASE("closures")
{
    const auto chain = mewo(3, {{0, 1}, {1, 2}}, {false, false, true});
    const auto c = closure(chain);
    CHECK(c.plus(0, 2));
    CHECK_FALSE(chain.less(0, 2));
    CHECK(c.star(1, 1));
    CHECK_FALSE(c.plus(1, 1));
    const auto d = closure(dot);
    CHECK_FALSE(d.plus(0, 0));
    CHECK(d.star(0, 0));
    const auto again = closure(Mewo::validate(3, c.plus, {false, false, true}));
    CHECK(again.plus == c.plus);
}

TEST_CASE("coverage")
{
    CHECK_FALSE(is_covered(hollow));
    CHECK(is_covered(hollow_dot));
    CHECK(is_covered(empty));
    for (const auto& m : oracle::enumerate_mewos_up_to(3)) CHECK(is_covered(mark_all(m)));
    CHECK(covered_part(hollow) == empty);
    CHECK(covered_part(hollow_dot) == hollow_dot);
    const auto partly = mewo(3, {{0, 1}, {0, 2}, {1, 2}}, {false, true, false});
    CHECK(covered_elements(partly) == std::vector<std::size_t>{0, 1});
    CHECK(covered_part(partly) == mewo(2, {{0, 1}}, {false, true}));
}

TEST_CASE("segments")
{
    CHECK(down_plus(hollow_dot, 1) == dot);
    CHECK(down_plus(hollow_dot, 0) == empty);
    const auto full = from_ordinal(FinOrd::chain(3));
    const auto seg = down_plus(full, 2);
    CHECK(seg.size() == 2);
    CHECK(seg.marked(0));
    CHECK(seg.marked(1));
    const auto chain = mewo(3, {{0, 1}, {1, 2}}, {false, false, true});
    CHECK(down_plus(chain, 2) == hollow_dot);
    CHECK(segment_plus_elements(chain, 2) == std::vector<std::size_t>{0, 1});
    CHECK(mark_all(hollow) == dot);
}

TEST_CASE("codes")
{
    SetUniverse u;
    const auto c = codes(hollow_dot, u);
    CHECK(c[0] == u.empty_set());
    CHECK(c[1] == u.mk_set({u.empty_set()}));
    CHECK(codes(empty, u).empty());
    const auto full = from_ordinal(FinOrd::chain(5));
    const auto cf = codes(full, u);
    for (std::size_t i = 0; i < 5; ++i) CHECK(cf[i] == u.von_neumann(i));
}

TEST_CASE("equality")
{
    CHECK(mewo_equal(hollow_dot, hollow_dot));
    CHECK_FALSE(mewo_equal(dot, hollow));
    const auto x = mewo(3, {{0, 1}, {1, 2}}, {true, false, true});
    const auto y = relabel(x, std::vector<std::size_t>{2, 0, 1});
    CHECK_FALSE(x == y);
    CHECK(mewo_equal(x, y));
    SetUniverse u;
    CHECK(mewo_isomorphism(x, y, u) == oracle::enum_isomorphisms(x, y).front());
}

TEST_CASE("simulations")
{
    CHECK_FALSE(simulation_mewo(dot, hollow_dot));
    CHECK(oracle::enum_simulations(dot, hollow_dot).empty());
    const auto x = mewo(3, {{0, 1}, {1, 2}}, {true, false, true});
    CHECK(simulation_mewo(x, mark_all(x))->map == std::vector<std::size_t>{0, 1, 2});
    const auto id = simulation_mewo(dot, dot);
    REQUIRE(id);
    CHECK(id->map == std::vector<std::size_t>{0});
    CHECK(id->image_marked == std::vector<bool>{true});
    CHECK(simulation_mewo(dot, dot_dot)->map == std::vector<std::size_t>{0});
    CHECK(is_mewo_simulation(dot, dot_dot, std::vector<std::size_t>{0}));
    CHECK_FALSE(is_mewo_simulation(dot, dot_dot, std::vector<std::size_t>{1}));
}

TEST_CASE("bounded simulations")
{
    const auto b = bounded_sim_mewo(dot, hollow_dot);
    REQUIRE(b);
    CHECK(b->bound == 1);
    CHECK(b->equivalence == std::vector<std::size_t>{0});
    CHECK(bounded_sim_mewo(empty, dot)->bound == 0);
    CHECK_FALSE(bounded_sim_mewo(empty, hollow_dot));
    // Not transitive, and not contained in simulation.
    CHECK(bounded_sim_mewo(empty, dot));
    CHECK(bounded_sim_mewo(dot, hollow_dot));
    CHECK_FALSE(simulation_mewo(dot, hollow_dot));
}

TEST_CASE("partial simulations and principality")
{
    CHECK(partial_sim(hollow, covered_part(hollow)));
    CHECK_FALSE(partial_sim(dot, hollow_dot));
    const auto x = mewo(3, {{0, 1}, {1, 2}}, {true, false, true});
    CHECK(partial_sim(x, x)->pairs == Pairs{{0, 0}, {2, 2}});
    CHECK(principality_check(hollow_dot, dot));
    CHECK_FALSE(principality_check(hollow, empty));
    CHECK(principality_check(hollow, hollow));
}

TEST_CASE("singletons")
{
    CHECK(singleton(empty) == dot);
    CHECK(mewo_equal(singleton(dot), hollow_dot));
    CHECK(singleton(dot) == hollow_dot);
    try {
        (void)singleton(hollow);
        FAIL("singleton of an uncovered mewo accepted");
    } catch (const ValidationError& e) {
        CHECK(e.axiom() == Axiom::Extensionality);
    }
}

TEST_CASE("unions")
{
    CHECK(mewo_union(std::vector<Mewo>{}) == empty);
    CHECK(mewo_equal(mewo_union(std::vector{dot_dot, hollow_dot}), dot_dot));
    const auto x = mewo(3, {{0, 1}, {1, 2}}, {true, false, true});
    CHECK(mewo_equal(mewo_union(std::vector{x}), x));
    SetUniverse u;
    const std::vector family{dot_dot, hollow_dot};
    CHECK(union_representatives(family, u) == Pairs{{0, 0}, {0, 1}});
}

TEST_CASE("ordinals as mewos")
{
    CHECK(from_ordinal(FinOrd::chain(0)) == empty);
    CHECK(from_ordinal(FinOrd::chain(2)) == dot_dot);
    CHECK(is_covered(from_ordinal(FinOrd::chain(4))));
}

TEST_CASE("text, json and dot formats")
{
    const auto x = mewo(3, {{0, 1}, {1, 2}}, {true, false, true});
    CHECK(to_text(x) == "mewo { elems: e0 e1 e2; lt: e0<e1, e1<e2; marked: e0 e2 }");
    CHECK(parse_mewo_text("mewo { elems: a b c; lt: a<b, b<c; marked: a c }") == x);
    CHECK(parse_mewo_text(to_text(x)) == x);
    CHECK(to_json(x) == R"({"lt":[[0,1],[1,2]],"marked":[0,2],"size":3})");
    CHECK(mewo_from_json(to_json(x)) == x);
    CHECK(to_dot(hollow_dot) ==
          "digraph mewo {\n  node [shape=circle];\n  e0;\n  e1 [style=filled, fillcolor=black, fontcolor=white];\n"
          "  e0 -> e1;\n}\n");
    CHECK_THROWS_AS(parse_mewo_text("mewo { elems: a a; lt: ; marked: }"), ParseError);
    CHECK_THROWS_AS(parse_mewo_text("mewo { elems: a; lt: a<b; marked: }"), ParseError);
    CHECK_THROWS_AS(parse_mewo_text("mewo { elems: a b; lt: ; marked: a }"), ValidationError);
}

TEST_CASE("empty parts print with a space")
{
    CHECK(to_text(empty) == "mewo { elems: ; lt: ; marked: }");
    CHECK(to_text(hollow) == "mewo { elems: e0; lt: ; marked: }");
    CHECK(parse_mewo_text(to_text(empty)) == empty);
    CHECK(parse_mewo_text(to_text(hollow)) == hollow);
}

TEST_CASE("enumerated mewos")
{
    CHECK(oracle::enumerate_mewos(0) == std::vector{empty});
    const auto ones = oracle::enumerate_mewos(1);
    CHECK(ones.size() == 2);
    CHECK(oracle::enumerate_mewos(2).size() == 4);
    CHECK(oracle::enumerate_mewos(3).size() == 16);
    CHECK(oracle::enumerate_mewos(4).size() == 144);
}
