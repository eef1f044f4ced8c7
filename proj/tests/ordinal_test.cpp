#include "hfkit/error.hpp"
#include "hfkit/oracle.hpp"
#include "hfkit/ordinal.hpp"

#include <doctest.h>

#include <utility>
#include <vector>

using namespace hfkit;

namespace {

using Pairs = std::vector<std::pair<std::size_t, std::size_t>>;

FinOrd ord(std::size_t n, Pairs p) { return FinOrd::validate(n, p); }

Axiom failing_axiom(std::size_t n, Pairs p)
{
    try {
        (void)FinOrd::validate(n, p);
    } catch (const ValidationError& e) {
        return e.axiom();
    }
    FAIL("validation unexpectedly succeeded");
    return Axiom::Shape;
}

} // namespace

TEST_CASE("validation")
{
    const auto three = ord(3, {{0, 1}, {1, 2}, {0, 2}});
    CHECK(three == FinOrd::chain(3));
    try {
        (void)FinOrd::validate(2, Pairs{});
        FAIL("antichain accepted");
    } catch (const ValidationError& e) {
        CHECK(e.axiom() == Axiom::Extensionality);
        CHECK(e.witness() == std::vector<std::size_t>{0, 1});
    }
    CHECK(failing_axiom(2, {{0, 1}, {1, 0}}) == Axiom::Wellfoundedness);
    CHECK(failing_axiom(3, {{0, 1}, {1, 2}}) == Axiom::Transitivity);
    CHECK(failing_axiom(2, {{0, 2}}) == Axiom::Shape);
    CHECK(failing_axiom(1, {{0, 0}}) == Axiom::Wellfoundedness);
    CHECK(FinOrd::validate(0, Pairs{}).size() == 0);
}

TEST_CASE("labels need not follow the order")
{
    const auto a = ord(3, {{2, 0}, {2, 1}, {0, 1}});
    CHECK(a.linearization() == std::vector<std::size_t>{2, 0, 1});
    CHECK(a.position(1) == 2);
    CHECK(canonical_form(a) == FinOrd::chain(3));
    CHECK(equivalent(a, FinOrd::chain(3)));
    CHECK_FALSE(a == FinOrd::chain(3));
}

TEST_CASE("initial segments")
{
    const auto three = FinOrd::chain(3);
    CHECK(down(three, 2) == FinOrd::chain(2));
    CHECK(down(three, 0) == FinOrd::chain(0));
    CHECK(down(down(three, 2), 1) == down(three, 1));
    CHECK_THROWS_AS((void)down(three, 3), std::out_of_range);
    const auto a = ord(3, {{2, 0}, {2, 1}, {0, 1}});
    CHECK(segment_elements(a, 1) == std::vector<std::size_t>{0, 2});
    CHECK(down(a, 1) == ord(2, {{1, 0}}));
}

TEST_CASE("simulations")
{
    const auto two = FinOrd::chain(2);
    const auto three = FinOrd::chain(3);
    const auto s = simulation(two, three);
    REQUIRE(s);
    CHECK(s->map == std::vector<std::size_t>{0, 1});
    CHECK(oracle::enum_simulations(two, three).size() == 1);
    CHECK_FALSE(simulation(three, two));
    CHECK(simulation(three, three)->map == std::vector<std::size_t>{0, 1, 2});
    const auto a = ord(3, {{2, 0}, {2, 1}, {0, 1}});
    CHECK(simulation(two, a)->map == std::vector<std::size_t>{2, 0});
    CHECK(simulation_by_order_type(two, a) == simulation(two, a));
    CHECK(is_simulation(two, a, std::vector<std::size_t>{2, 0}));
    // Monotone but not onto an initial segment.
    CHECK_FALSE(is_simulation(two, three, std::vector<std::size_t>{1, 2}));
}

TEST_CASE("bounded simulations")
{
    const auto b = bounded_sim(FinOrd::chain(2), FinOrd::chain(3));
    REQUIRE(b);
    CHECK(b->bound == 2);
    CHECK(b->iso == std::vector<std::size_t>{0, 1});
    CHECK_FALSE(bounded_sim(FinOrd::chain(3), FinOrd::chain(3)));
    const auto z = bounded_sim(FinOrd::chain(0), FinOrd::chain(1));
    REQUIRE(z);
    CHECK(z->bound == 0);
    CHECK(z->iso.empty());
    const auto a = ord(3, {{2, 0}, {2, 1}, {0, 1}});
    CHECK(bounded_sim(FinOrd::chain(1), a)->bound == 0);
    CHECK(bounded_sim(FinOrd::chain(1), a)->iso == std::vector<std::size_t>{2});
}

TEST_CASE("isomorphisms")
{
    const auto a = ord(3, {{2, 0}, {2, 1}, {0, 1}});
    CHECK(is_isomorphism(FinOrd::chain(3), a, std::vector<std::size_t>{2, 0, 1}));
    CHECK_FALSE(is_isomorphism(FinOrd::chain(3), a, std::vector<std::size_t>{0, 1, 2}));
    CHECK_FALSE(is_isomorphism(FinOrd::chain(2), a, std::vector<std::size_t>{2, 0}));
}

TEST_CASE("sums")
{
    const auto a = ord(2, {{1, 0}});
    CHECK(sum(a, FinOrd::chain(0)) == a);
    CHECK(sum(FinOrd::chain(1), FinOrd::chain(1)) == FinOrd::chain(2));
    const auto s = sum(a, FinOrd::chain(1));
    CHECK(down(s, 2) == a);
    CHECK(s.less(1, 0));
    CHECK(s.less(0, 2));
    CHECK(order_type(sum(FinOrd::chain(3), FinOrd::chain(4))) == 7);
}

TEST_CASE("suprema")
{
    CHECK(sup(std::vector<FinOrd>{}).size() == 0);
    const std::vector family{FinOrd::chain(2), FinOrd::chain(3), FinOrd::chain(1)};
    CHECK(sup(family) == FinOrd::chain(3));
    CHECK(sup_representatives(family) == Pairs{{0, 0}, {0, 1}, {1, 2}});
    const auto a = ord(3, {{2, 0}, {2, 1}, {0, 1}});
    CHECK(equivalent(sup(std::vector{a}), a));
}

TEST_CASE("order type")
{
    CHECK(order_type(FinOrd::chain(0)) == 0);
    CHECK(order_type(FinOrd::chain(5)) == 5);
}

TEST_CASE("text and json formats")
{
    const auto a = ord(3, {{2, 0}, {2, 1}, {0, 1}});
    CHECK(to_text(a) == "ord { size: 3; lt: 0<1, 2<0, 2<1 }");
    CHECK(to_text(FinOrd::chain(1)) == "ord { size: 1; lt: }");
    CHECK(parse_ord_text(to_text(a)) == a);
    CHECK(to_json(a) == R"({"pairs":[[0,1],[2,0],[2,1]],"size":3})");
    CHECK(ord_from_json(to_json(a)) == a);
    CHECK_THROWS_AS(parse_ord_text("ord { size: 2; lt: 0<1 "), ParseError);
    CHECK_THROWS_AS(parse_ord_text("ord { size: 2; lt: }"), ValidationError);
    CHECK_THROWS_AS(ord_from_json("[1]"), Error);
}

TEST_CASE("enumerated ordinals")
{
    CHECK(oracle::enumerate_ordinals(0).size() == 1);
    CHECK(oracle::enumerate_ordinals(3).size() == 6);
    for (const auto& a : oracle::enumerate_ordinals(4)) CHECK(equivalent(a, FinOrd::chain(4)));
}
