#include "hfkit/correspondence.hpp"
#include "hfkit/error.hpp"
#include "hfkit/oracle.hpp"

#include <doctest.h>

#include <utility>
#include <vector>

using namespace hfkit;

namespace {

using Pairs = std::vector<std::pair<std::size_t, std::size_t>>;

} // namespace

TEST_CASE("phi on ordinals")
{
    SetUniverse u;
    CHECK(phi_ord(FinOrd::chain(0), u) == u.empty_set());
    for (std::size_t n = 0; n < 8; ++n) CHECK(phi_ord(FinOrd::chain(n), u) == u.von_neumann(n));
    const auto a = FinOrd::validate(3, Pairs{{2, 0}, {2, 1}, {0, 1}});
    CHECK(phi_ord(a, u) == u.von_neumann(3));
    CHECK(u.mem(phi_ord(FinOrd::chain(2), u), phi_ord(FinOrd::chain(3), u)));
}

TEST_CASE("psi on sets")
{
    SetUniverse u;
    const auto e = u.empty_set();
    CHECK(psi_ord(u, e).size() == 0);
    const auto so = u.mk_set({u.mk_set({e})});
    CHECK(psi_ord(u, so) == FinOrd::chain(2));
    for (std::size_t n = 0; n < 7; ++n) CHECK(equivalent(psi_ord(u, u.von_neumann(n)), FinOrd::chain(n)));
    for (auto h : oracle::enumerate_v(4, u)) CHECK(order_type(psi_ord(u, h)) == u.rank_nat(h));
}

TEST_CASE("rank as a quotient of a presentation")
{
    SetUniverse u;
    const auto e = u.empty_set();
    const auto one = u.mk_set({e});
    const auto q = rank_quotient(u, u.von_neumann(2), std::vector{e, one, e});
    CHECK(q.classes == std::vector<std::vector<std::size_t>>{{0, 2}, {1}});
    CHECK(q.order == FinOrd::chain(2));
    const auto z = rank_quotient(u, e, std::vector<SetHandle>{});
    CHECK(z.classes.empty());
    CHECK(z.order.size() == 0);
    CHECK_THROWS_AS(rank_quotient(u, u.von_neumann(2), std::vector{e}), Error);
    const auto so = u.mk_set({one});
    CHECK_THROWS_AS(rank_quotient(u, so, std::vector{one}), NotAnOrdinalError);
}

TEST_CASE("ordinal of elements")
{
    SetUniverse u;
    CHECK(elements_ordinal(u, u.empty_set()).size() == 0);
    CHECK(elements_ordinal(u, u.von_neumann(3)) == FinOrd::chain(3));
    for (auto h : oracle::enumerate_v(4, u)) {
        if (!u.is_st_ordinal(h)) continue;
        CHECK(equivalent(elements_ordinal(u, h), psi_ord(u, h)));
    }
    CHECK_THROWS_AS(elements_ordinal(u, u.mk_set({u.mk_set({u.empty_set()})})), NotAnOrdinalError);
}

TEST_CASE("phi on mewos")
{
    SetUniverse u;
    const auto e = u.empty_set();
    CHECK(phi_mewo(Mewo::validate(0, Pairs{}, {}), u) == e);
    CHECK(phi_mewo(Mewo::validate(2, Pairs{{0, 1}}, {false, true}), u) == u.mk_set({u.mk_set({e})}));
    CHECK(phi_mewo(Mewo::validate(1, Pairs{}, {true}), u) == u.mk_set({e}));
}

TEST_CASE("psi on mewos")
{
    SetUniverse u;
    const auto e = u.empty_set();
    CHECK(psi_mewo(u, e).size() == 0);
    const auto hollow_dot = Mewo::validate(2, Pairs{{0, 1}}, {false, true});
    CHECK(mewo_equal(psi_mewo(u, u.mk_set({u.mk_set({e})})), hollow_dot));
    CHECK(mewo_equal(psi_mewo(u, u.von_neumann(2)), from_ordinal(FinOrd::chain(2))));
    for (auto h : oracle::enumerate_v(4, u)) {
        const auto direct = psi_mewo(u, h);
        CHECK(is_covered(direct));
        CHECK(mewo_equal(direct, psi_mewo_literal(u, h)));
        CHECK(phi_mewo(direct, u) == h);
    }
}
