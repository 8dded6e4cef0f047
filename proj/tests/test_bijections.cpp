#include "doctest.h"

#include "rcomb/bijections.hpp"
#include "rcomb/oracles.hpp"

using namespace rcomb;

namespace {

std::vector<int> members(std::uint64_t s)
{
    std::vector<int> out;
    for (int i = 0; i < 64; ++i)
        if ((s >> i) & 1u) out.push_back(i + 1);
    return out;
}

std::vector<std::uint64_t> row(const CountTable& t, int n)
{
    std::vector<std::uint64_t> out;
    for (int k = 0; k <= n; ++k) out.push_back(t.at(n, k).get_ui());
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

std::vector<std::uint64_t> trimmed(std::vector<std::uint64_t> v)
{
    while (!v.empty() && v.back() == 0) v.pop_back();
    return v;
}

} // namespace

TEST_CASE("subset to tiling examples")
{
    const auto Q = DifferenceSet::parse("1,2,4");
    const auto T = subset_to_tiling({1, 4}, 4, Q);
    CHECK(T.board_length == 8);
    std::vector<int> combs;
    for (const auto& p : T.placements)
        if (p.tile == Tile::comb) combs.push_back(p.cell);
    CHECK(combs == std::vector<int>{1, 4});
    CHECK(tiling_to_subset(T) == std::vector<int>{1, 4});

    const auto empty = subset_to_tiling({}, 5, Q);
    CHECK(empty.placements.size() == 9);
    for (const auto& p : empty.placements) CHECK(p.tile == Tile::square);

    for (int x = 1; x <= 6; ++x) {
        const auto single = subset_to_tiling({x}, 6, Q);
        int n_combs = 0;
        for (const auto& p : single.placements) n_combs += p.tile == Tile::comb;
        CHECK(n_combs == 1);
    }

    CHECK_THROWS_AS(subset_to_tiling({1, 2}, 4, Q), Error);
    CHECK_THROWS_AS(subset_to_tiling({1, 5}, 4, Q), Error);
    CHECK_THROWS_AS(subset_to_tiling({0}, 4, Q), Error);
}

TEST_CASE("tiling replay rejects bad witnesses")
{
    const auto Q = DifferenceSet::parse("1,2,4");
    auto T = subset_to_tiling({1, 4}, 4, Q);
    auto moved = T;
    moved.placements[1].cell += 1;
    CHECK_THROWS_AS(tiling_to_subset(moved), Error);
    auto short_board = T;
    short_board.placements.pop_back();
    CHECK_THROWS_AS(tiling_to_subset(short_board), Error);
    auto bad_cover = T;
    bad_cover.coverage[0] = 2;
    CHECK_THROWS_AS(tiling_to_subset(bad_cover), Error);
}

TEST_CASE("subset/tiling bijection, q <= 5, n <= 10")
{
    for (int q = 0; q <= 5; ++q)
        for (const auto& Q : all_difference_sets_with_max(q)) {
            const auto B = tiling_count_oracle(Q, 10 + q);
            for (int n = 0; n <= 10; ++n) {
                std::vector<BigInt> by_k(n + 1, 0);
                for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
                    const auto S = members(s);
                    if (!subset_allowed(s, Q)) {
                        CHECK_THROWS_AS(subset_to_tiling(S, n, Q), Error);
                        continue;
                    }
                    const auto T = subset_to_tiling(S, n, Q);
                    REQUIRE(tiling_to_subset(T) == S);
                    by_k[S.size()] += 1;
                }
                for (int k = 0; k <= n; ++k) REQUIRE(by_k[k] == B.at(n + q, k));
            }
        }
}

TEST_CASE("restricted permutations by excedances")
{
    const auto p = perm_count_jm(5, 1, 1);
    std::uint64_t total = 0;
    for (auto c : p) total += c;
    CHECK(total == 13);
    CHECK(p[0] == 1);

    for (int m = 1; m <= 2; ++m)
        for (int j = 1; j <= 2; ++j) {
            std::vector<int> q;
            for (int i = 1; i <= j; ++i) q.push_back(i * m);
            const DifferenceSet Q(q);
            const auto S = subset_count_oracle(Q, 10, true);
            for (int n = 0; n + j * m <= 10; ++n) {
                const auto counts = perm_count_jm(n, m, j);
                CHECK(counts[0] == 1);
                REQUIRE_MESSAGE(trimmed(counts) == row(S, n), "m=" << m << " j=" << j << " n=" << n);
            }
        }
    CHECK_THROWS_AS(perm_count_jm(20, 1, 1), LimitError);
}

TEST_CASE("adjacent-transposition permutations with the window condition")
{
    for (int m = 2; m <= 4; ++m) {
        const auto S = subset_count_oracle(DifferenceSet({1, m}), 9, true);
        for (int n = 0; n <= 9; ++n) {
            const auto counts = perm_count_1m(n, m);
            CHECK(counts[0] == 1);
            REQUIRE_MESSAGE(trimmed(counts) == row(S, n), "m=" << m << " n=" << n);
        }
    }
}

TEST_CASE("restricted permutation enumeration")
{
    int count = 0;
    for_each_restricted_permutation(4, {0}, [&](const std::vector<int>& pi) {
        CHECK(pi == std::vector<int>{1, 2, 3, 4});
        ++count;
    });
    CHECK(count == 1);
    count = 0;
    for_each_restricted_permutation(5, {-4, -3, -2, -1, 0, 1, 2, 3, 4}, [&](const std::vector<int>&) { ++count; });
    CHECK(count == 120);
}

TEST_CASE("subword overlap test")
{
    CHECK(subword_to_differences(Subword::parse("10110")) == DifferenceSet::parse("1,2,4"));
    CHECK(subword_to_differences(Subword::parse("1111")).empty());
    CHECK(subword_to_differences(Subword::parse("10")) == DifferenceSet::parse("1"));
    CHECK(subword_to_differences(Subword::parse("1")).empty());
    for (int l = 1; l <= 10; ++l)
        for (std::uint64_t w = 0; w < (std::uint64_t{1} << l); ++w) {
            std::string bits;
            for (int i = l - 1; i >= 0; --i) bits += ((w >> i) & 1u) ? '1' : '0';
            const auto omega = Subword::parse(bits);
            REQUIRE(omega.value() == w);
            REQUIRE(subword_to_differences(omega) == subword_self_disagreements(omega));
        }
}

TEST_CASE("subword class counts")
{
    const auto report = verify_subword_classes(Subword::parse("10110"), 5, 14);
    CHECK(report.Q == DifferenceSet::parse("1,2,4"));
    REQUIRE(report.rows.size() == 10);
    CHECK(report.all_match());
    CHECK(report.rows.front().brute == 2);

    const auto degenerate = verify_subword_classes(Subword::parse("00"), 4, 4);
    REQUIRE(degenerate.rows.size() == 1);
    CHECK(degenerate.rows[0].brute == 7);
    CHECK(degenerate.rows[0].predicted == 8);
    CHECK_FALSE(degenerate.rows[0].match);
    CHECK(format_subword_report(degenerate).find("discrepancy") != std::string::npos);
}
