#include "doctest.h"

#include <set>

#include "rcomb/core.hpp"
#include "rcomb/count_table.hpp"

using namespace rcomb;

TEST_CASE("difference set parsing")
{
    const auto Q = DifferenceSet::parse("4,1,2");
    CHECK(Q.elements() == std::vector<int>{1, 2, 4});
    CHECK(Q.q() == 4);
    CHECK(Q.theta() == 0b1011);
    CHECK(Q.to_spec() == "1,2,4");
    CHECK(Q.to_string() == "{1,2,4}");
    CHECK(DifferenceSet::parse(" 1, 2 ,4 ") == Q);
    CHECK(DifferenceSet::parse("").empty());
    CHECK(DifferenceSet::parse("0").empty());
    CHECK(DifferenceSet::parse("0").q() == 0);
    CHECK(DifferenceSet::parse("3,3").size() == 1);
    CHECK_THROWS_AS(DifferenceSet::parse("1,x"), Error);
    CHECK_THROWS_AS(DifferenceSet::parse("1,,2"), Error);
    CHECK_THROWS_AS(DifferenceSet::parse("-2"), Error);
    CHECK_THROWS_AS(DifferenceSet::parse("31"), LimitError);
    CHECK(DifferenceSet::from_theta(0b1011) == Q);
    CHECK(Q.contains(4));
    CHECK_FALSE(Q.contains(3));
}

TEST_CASE("comb shapes")
{
    const auto c = comb_from_differences(DifferenceSet::parse("1,2,4"));
    CHECK(c.q == 4);
    CHECK(c.length == 5);
    CHECK(c.occupancy == 0b10111);
    CHECK(c.teeth == std::vector<int>{3, 1});
    CHECK(c.gaps == std::vector<int>{1});
    CHECK(c.l == 3);
    CHECK(c.r == 1);
    CHECK(c.allowed == std::vector<int>{3});
    CHECK(c.notation() == "(3,1,1)-comb");

    CHECK(comb_from_differences(DifferenceSet::parse("1")).notation() == "2-omino");
    const auto empty = comb_from_differences(DifferenceSet{});
    CHECK(empty.length == 1);
    CHECK(empty.notation() == "1-omino");
    CHECK(empty.a() == 0);

    const auto three = comb_from_differences(DifferenceSet::parse("3"));
    CHECK(three.notation() == "(1,2,1)-comb");
    CHECK(three.allowed == std::vector<int>{1, 2});
}

TEST_CASE("comb round trip and allowed differences, q <= 12")
{
    for (int q = 1; q <= 12; ++q)
        for (const auto& Q : all_difference_sets_with_max(q)) {
            const auto c = comb_from_differences(Q);
            REQUIRE(differences_from_comb(c) == Q);
            int teeth = 0, gaps = 0;
            for (int w : c.teeth) teeth += w;
            for (int g : c.gaps) gaps += g;
            CHECK(teeth + gaps == q + 1);
            CHECK(gaps == c.a());
            CHECK(c.allowed == allowed_differences(Q));
            if (c.has_gap()) {
                CHECK(c.allowed.front() == c.l);
                CHECK(c.allowed.back() == q - c.r);
            }
        }
}

TEST_CASE("difference set enumeration")
{
    CHECK(all_difference_sets_with_max(8).size() == 128);
    CHECK(all_difference_sets_up_to(8).size() == 255);
    CHECK(all_difference_sets_with_max(0).size() == 1);
    CHECK(all_difference_sets_with_max(0).front().empty());
}

TEST_CASE("well-based sets")
{
    std::set<std::vector<int>> three;
    for (int q = 1; q <= 12; ++q)
        for (const auto& Q : all_difference_sets_with_max(q)) {
            REQUIRE(is_well_based(Q) == is_well_based_by_decomposition(Q));
            if (Q.size() == 3 && is_well_based(Q)) three.insert(Q.elements());
        }
    CHECK(three == std::set<std::vector<int>>{{1, 2, 3}, {1, 2, 4}, {1, 2, 5}, {1, 3, 5}});
    CHECK(is_well_based(DifferenceSet::parse("1")));
    CHECK_FALSE(is_well_based(DifferenceSet::parse("2")));
    CHECK_THROWS_AS(is_well_based(DifferenceSet{}), Error);
}

TEST_CASE("count table")
{
    CountTable t(3, true);
    t.at_ref(0, 0) = 1;
    t.at_ref(1, 0) = 1;
    t.at_ref(1, 1) = 1;
    t.at_ref(2, 0) = 1;
    t.at_ref(2, 1) = 2;
    t.at_ref(3, 0) = 1;
    t.at_ref(3, 1) = 3;
    t.at_ref(3, 2) = 1;
    t.fill_totals_from_triangle();
    CHECK(t.total(3) == 5);
    CHECK(t.at(3, 3) == 0);
    CHECK(t.at(-1, 0) == 0);
    CHECK(t.at(2, 5) == 0);
    CHECK(rcl_format(t, true) == "1 \n1 1 \n1 2 \n1 3 1 \n");
    CHECK(rcl_format(t, false) == "1 2 3 5 \n");
    CHECK_THROWS(t.shifted(1)); // row 1 has mass at k = 1
    CHECK(t.truncated(1).total(1) == 2);

    // B for Q = {1}: shifting by q = 1 gives S
    CountTable b(3, true);
    b.at_ref(0, 0) = 1;
    b.at_ref(1, 0) = 1;
    b.at_ref(2, 0) = 1;
    b.at_ref(2, 1) = 1;
    b.at_ref(3, 0) = 1;
    b.at_ref(3, 1) = 2;
    b.fill_totals_from_triangle();
    const auto s = b.shifted(1);
    CHECK(s.n_max() == 2);
    CHECK(s.total(0) == 1);
    CHECK(s.total(2) == 3);
    CHECK(s.at(2, 1) == 2);
}
