#include "rcomb/cli.hpp"

#include <functional>
#include <sstream>
#include <vector>

#include "rcomb/bijections.hpp"
#include "rcomb/emit.hpp"
#include "rcomb/families.hpp"
#include "rcomb/oracles.hpp"

namespace rcomb {

namespace {

constexpr int kMaxCliN = 2000;
constexpr int kVerifyOracleN = 20;

std::string join_row(const std::vector<BigInt>& row)
{
    std::string out;
    for (std::size_t i = 0; i < row.size(); ++i) out += (i ? " " : "") + row[i].get_str();
    return out;
}

template <class T>
std::string join_counts(const std::vector<T>& row)
{
    std::string out;
    for (std::size_t i = 0; i < row.size(); ++i) out += (i ? " " : "") + std::to_string(row[i]);
    return out;
}

void check_n(int n, int limit)
{
    if (n < 0) throw Error("--n must be nonnegative");
    if (n > limit) throw LimitError("--n above " + std::to_string(limit));
}

int cmd_count(const Invocation& inv, const DifferenceSet& Q, std::ostream& out)
{
    check_n(inv.n, kMaxCliN);
    const CountTable t = subset_counts_via_transfer(Q, inv.n, inv.triangle);
    if (inv.json) {
        out << table_json(t).dump(2) << "\n";
    } else if (inv.triangle) {
        for (auto row : t.triangle()) {
            while (row.size() > 1 && row.back() == 0) row.pop_back();
            out << join_row(row) << "\n";
        }
    } else {
        out << join_row(t.totals()) << "\n";
    }
    return 0;
}

int cmd_table(const Invocation& inv, const DifferenceSet& Q, std::ostream& out)
{
    check_n(inv.n, kMaxCliN);
    const CountTable t = subset_counts_via_transfer(Q, inv.n, true);
    if (inv.json)
        out << table_json(t).dump(2) << "\n";
    else
        out << rcl_format(t, true);
    return 0;
}

int cmd_oracle(const Invocation& inv, const DifferenceSet& Q, std::ostream& out)
{
    check_n(inv.n, kSubsetOracleMaxN);
    if (inv.json)
        out << table_json(subset_count_oracle(Q, inv.n, inv.triangle)).dump(2) << "\n";
    else
        out << subset_oracle_report(Q, inv.n, inv.triangle);
    return 0;
}

int cmd_digraph(const Invocation& inv, const DifferenceSet& Q, std::ostream& out)
{
    const auto g = build_digraph(comb_from_differences(Q));
    if (inv.json)
        out << digraph_json(g).dump(2) << "\n";
    else
        out << digraph_dot(g);
    return 0;
}

int cmd_metatiles(const Invocation& inv, const DifferenceSet& Q, std::ostream& out)
{
    const auto g = build_digraph(comb_from_differences(Q));
    int max_len = inv.max_len.value_or(-1);
    if (max_len < 0) {
        const auto longest = longest_metatile(g);
        max_len = longest ? *longest : 4 * (Q.q() + 1);
    }
    check_n(max_len, kMaxCliN);
    const auto list = enumerate_metatiles(g, max_len);
    if (inv.json)
        out << metatiles_json(list).dump(2) << "\n";
    else
        out << metatiles_text(list);
    return 0;
}

int cmd_cycles(const Invocation& inv, const DifferenceSet& Q, std::ostream& out, std::ostream& err)
{
    const auto g = build_digraph(comb_from_differences(Q));
    CycleAnalysis a;
    try {
        a = analyze_cycles(g);
    } catch (const LimitError& e) {
        err << "note: " << e.what() << "; listing skipped\n";
        CycleOptions opts;
        opts.list_cycles = false;
        a = analyze_cycles(g, opts);
    }
    if (inv.json)
        out << cycles_json(g, a).dump(2) << "\n";
    else
        out << cycles_text(g, a);
    return 0;
}

// Recurrence for Q if one can be synthesized.
std::optional<Recurrence> try_recurrence(const DifferenceSet& Q, Classification& c)
{
    c = classify(Q);
    try {
        return family_recurrence(Q, c.family);
    } catch (const LimitError&) {
        throw;
    } catch (const Error&) {
        return std::nullopt;
    }
}

constexpr const char* kNoRecurrence =
    "no recurrence: the digraph has inner cycles but no common node; use `count` (transfer DP)";

int cmd_recurrence(const Invocation& inv, const DifferenceSet& Q, std::ostream& out)
{
    Classification c;
    const auto rec = try_recurrence(Q, c);
    if (inv.json) {
        Json j{{"Q", Q.elements()}, {"family", family_name(c.family)}, {"reason", c.reason}};
        j["recurrence"] = rec ? recurrence_json(*rec) : Json(nullptr);
        out << j.dump(2) << "\n";
        return 0;
    }
    out << "family: " << family_name(c.family) << " (" << c.reason << ")\n";
    if (!rec) {
        out << kNoRecurrence << "\n";
        return 0;
    }
    out << format_recurrence(*rec, false) << "\n";
    out << format_recurrence(*rec, true) << "\n";
    return 0;
}

int cmd_gf(const Invocation& inv, const DifferenceSet& Q, std::ostream& out)
{
    Classification c;
    const auto rec = try_recurrence(Q, c);
    if (!rec) {
        if (inv.json)
            out << Json{{"Q", Q.elements()}, {"gf", nullptr}}.dump(2) << "\n";
        else
            out << kNoRecurrence << "\n";
        return 0;
    }
    const RationalGF gf = gf_from_recurrence(*rec, Q.q()).normalized();
    if (inv.json)
        out << Json{{"Q", Q.elements()}, {"family", family_name(c.family)}, {"gf", gf_json(gf)}}.dump(2) << "\n";
    else
        out << "G(x) = " << format_gf(gf) << "\n";
    return 0;
}

struct Check {
    std::string name;
    bool pass = false;
    std::string detail;
};

int cmd_verify(const Invocation& inv, const DifferenceSet& Q, std::ostream& out)
{
    check_n(inv.n, kMaxCliN);
    const int n = inv.n;
    const int n_oracle = std::min(n, kVerifyOracleN);
    std::vector<Check> checks;
    auto record = [&](const std::string& name, const std::function<bool()>& body) {
        try {
            checks.push_back({name, body(), ""});
        } catch (const std::exception& e) {
            checks.push_back({name, false, e.what()});
        }
    };

    const CombShape comb = comb_from_differences(Q);
    const CountTable dp = subset_counts_via_transfer(Q, n, true);

    record("transfer DP = subset oracle (n <= " + std::to_string(n_oracle) + ")",
           [&] { return dp.truncated(n_oracle) == subset_count_oracle(Q, n_oracle, true); });
    record("serial oracle = parallel oracle", [&] {
        return subset_count_oracle_serial(Q, n_oracle, true) == subset_count_oracle(Q, n_oracle, true);
    });
    const int board = std::min(n_oracle + Q.q(), std::min(kTilingOracleMaxBoard, 20));
    record("tiling oracle B_{n+q} = S_n (board <= " + std::to_string(board) + ")", [&] {
        const CountTable b = tiling_count_oracle(Q, board);
        return b.shifted(Q.q()) == dp.truncated(board - Q.q());
    });
    record("digraph finite iff 2r >= q", [&] {
        const auto g = build_digraph(comb);
        return is_finite_family(comb) == !has_inner_cycles(g);
    });
    if (!Q.empty())
        record("well-based definitions agree", [&] { return is_well_based(Q) == is_well_based_by_decomposition(Q); });

    Classification c;
    std::optional<Recurrence> rec;
    record("classification", [&] {
        rec = try_recurrence(Q, c);
        return true;
    });
    if (rec) {
        record("recurrence (" + family_name(c.family) + ") = DP (n <= " + std::to_string(n) + ")", [&] {
            return evaluate_recurrence(*rec, n + Q.q(), true).shifted(Q.q()) == dp;
        });
        record("recurrence totals form = DP", [&] {
            return evaluate_recurrence(*rec, n + Q.q(), false).shifted(Q.q()).totals() == dp.totals();
        });
        record("generating function series = DP", [&] {
            return series_expand(gf_from_recurrence(*rec, Q.q()), n) == dp.totals();
        });
    }
    if (well_based_applies(comb))
        record("well-based GF series = DP", [&] { return series_expand(well_based_gf(Q), n) == dp.totals(); });

    bool all = true;
    for (const auto& ch : checks) {
        all = all && ch.pass;
        if (!inv.json)
            out << (ch.pass ? "PASS " : "FAIL ") << ch.name << (ch.detail.empty() ? "" : ": " + ch.detail) << "\n";
    }
    if (inv.json) {
        Json arr = Json::array();
        for (const auto& ch : checks) arr.push_back({{"check", ch.name}, {"pass", ch.pass}, {"detail", ch.detail}});
        out << Json{{"Q", Q.elements()}, {"checks", arr}, {"pass", all}}.dump(2) << "\n";
    } else if (!rec) {
        out << "note: " << kNoRecurrence << "\n";
    }
    return all ? 0 : 1;
}

int cmd_bijection(const Invocation& inv, std::ostream& out)
{
    if (inv.mode == "perm-jm" || inv.mode == "perm-1m") {
        const bool jm = inv.mode == "perm-jm";
        if (inv.n < 0) throw Error("--n must be nonnegative");
        const auto perms = jm ? perm_count_jm(inv.n, inv.m, inv.j) : perm_count_1m(inv.n, inv.m);
        std::vector<int> q;
        if (jm)
            for (int i = 1; i <= inv.j; ++i) q.push_back(i * inv.m);
        else
            q = {1, inv.m};
        const DifferenceSet Q(q);
        std::uint64_t total = 0;
        for (auto c : perms) total += c;
        const CountTable S = subset_counts_via_transfer(Q, inv.n, true);
        std::vector<std::uint64_t> expected;
        for (int k = 0; k <= inv.n; ++k) expected.push_back(S.at(inv.n, k).get_ui());
        auto trimmed = [](std::vector<std::uint64_t> v) {
            while (!v.empty() && v.back() == 0) v.pop_back();
            return v;
        };
        const bool match = trimmed(perms) == trimmed(expected);
        if (inv.json) {
            out << Json{{"mode", inv.mode}, {"n", inv.n}, {"m", inv.m}, {"j", inv.j}, {"Q", Q.elements()},
                        {"total", total}, {"by_k", perms}, {"subsets_by_k", expected}, {"match", match}}
                       .dump(2)
                << "\n";
        } else {
            out << "Q = " << Q.to_string() << "\n";
            out << "permutations " << total << " by k: " << join_counts(perms) << "\n";
            out << "subsets      " << S.total(inv.n).get_str() << " by k: " << join_counts(expected) << "\n";
            out << (match ? "match" : "MISMATCH") << "\n";
        }
        return match ? 0 : 1;
    }
    if (inv.mode == "subword") {
        if (inv.omega.empty()) throw Error("subword needs --omega");
        const Subword omega = Subword::parse(inv.omega);
        check_n(inv.n, kSubwordOracleMaxN);
        const auto report = verify_subword_classes(omega, omega.length(), inv.n);
        out << (inv.json ? subword_report_json(report).dump(2) + "\n" : format_subword_report(report));
        return 0; // discrepancies are reported, not failures
    }
    throw Error("bijection mode must be perm-jm, perm-1m or subword");
}

} // namespace

int run(const Invocation& inv, std::ostream& out, std::ostream& err)
{
    try {
        if (inv.command == "bijection") return cmd_bijection(inv, out);
        const DifferenceSet Q = DifferenceSet::parse(inv.q_spec);
        if (inv.command == "count") return cmd_count(inv, Q, out);
        if (inv.command == "table") return cmd_table(inv, Q, out);
        if (inv.command == "oracle") return cmd_oracle(inv, Q, out);
        if (inv.command == "comb") {
            const CombShape comb = comb_from_differences(Q);
            out << (inv.json ? comb_json(comb).dump(2) + "\n" : comb_text(comb));
            return 0;
        }
        if (inv.command == "digraph") return cmd_digraph(inv, Q, out);
        if (inv.command == "metatiles") return cmd_metatiles(inv, Q, out);
        if (inv.command == "cycles") return cmd_cycles(inv, Q, out, err);
        if (inv.command == "recurrence") return cmd_recurrence(inv, Q, out);
        if (inv.command == "gf") return cmd_gf(inv, Q, out);
        if (inv.command == "verify") return cmd_verify(inv, Q, out);
        throw Error("unknown command '" + inv.command + "'");
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

} // namespace rcomb
