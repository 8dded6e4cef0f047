#include <sstream>

#include "rcomb/bijections.hpp"

namespace rcomb {

bool SubwordReport::all_match() const
{
    for (const auto& row : rows)
        if (!row.match) return false;
    return true;
}

SubwordReport verify_subword_classes(const Subword& omega, int n_min, int n_max)
{
    const int l = omega.length();
    if (l < 1) throw Error("subword must be nonempty");
    if (n_max > kSubwordOracleMaxN) throw LimitError("n above " + std::to_string(kSubwordOracleMaxN));
    SubwordReport report{omega, subword_to_differences(omega), {}};
    n_min = std::max(n_min, l - 1);
    if (n_max < n_min) return report;

    const CountTable S = subset_count_oracle(report.Q, n_max - l + 1, true);
    for (int n = n_min; n <= n_max; ++n) {
        SubwordRow row;
        row.n = n;
        const auto brute = subword_class_oracle(omega, n);
        row.brute = brute.classes;
        row.brute_by_size = brute.by_size;
        const int m = n - l + 1;
        row.predicted = S.total(m).get_ui();
        for (int k = 0; k <= m; ++k) row.predicted_by_size.push_back(S.at(m, k).get_ui());
        auto trimmed = [](std::vector<std::uint64_t> v) {
            while (!v.empty() && v.back() == 0) v.pop_back();
            return v;
        };
        row.match = row.brute == row.predicted && trimmed(row.brute_by_size) == trimmed(row.predicted_by_size);
        report.rows.push_back(std::move(row));
    }
    return report;
}

std::string format_subword_report(const SubwordReport& report)
{
    std::ostringstream os;
    os << "omega " << report.omega.bits << ", Q = " << report.Q.to_string() << "\n";
    os << "n brute predicted match\n";
    for (const auto& row : report.rows)
        os << row.n << " " << row.brute << " " << row.predicted << " " << (row.match ? "yes" : "NO") << "\n";
    os << (report.all_match() ? "all rows match" : "discrepancy found") << "\n";
    return os.str();
}

} // namespace rcomb
