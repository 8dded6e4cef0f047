#include "rcomb/count_table.hpp"

#include <stdexcept>

namespace rcomb {

CountTable::CountTable(int n_max, bool with_triangle) : totals_(n_max + 1)
{
    if (n_max < 0) throw std::invalid_argument("n_max must be nonnegative");
    if (with_triangle) {
        by_size_.emplace();
        for (int n = 0; n <= n_max; ++n) by_size_->emplace_back(n + 1);
    }
}

BigInt CountTable::total(int n) const
{
    if (n < 0 || n > n_max()) return 0;
    return totals_[n];
}

BigInt CountTable::at(int n, int k) const
{
    if (!by_size_) throw std::logic_error("count table has no triangle");
    if (n < 0 || n > n_max() || k < 0 || k > n) return 0;
    return (*by_size_)[n][k];
}

void CountTable::fill_totals_from_triangle()
{
    for (int n = 0; n <= n_max(); ++n) {
        BigInt s = 0;
        for (const auto& v : (*by_size_)[n]) s += v;
        totals_[n] = s;
    }
}

CountTable CountTable::shifted(int shift) const
{
    if (shift < 0 || shift > n_max()) throw std::invalid_argument("shift out of range");
    CountTable out(n_max() - shift, has_triangle());
    for (int n = 0; n <= out.n_max(); ++n) {
        out.totals_[n] = totals_[n + shift];
        if (by_size_)
            for (int k = 0; k <= n; ++k) (*out.by_size_)[n][k] = (*by_size_)[n + shift][k];
    }
    if (by_size_)
        // A k-subset of N_n needs at least k cells, so B_{n+q,k} = 0 for k > n.
        for (int n = 0; n <= out.n_max(); ++n)
            for (int k = n + 1; k <= n + shift; ++k)
                if ((*by_size_)[n + shift][k] != 0)
                    throw std::logic_error("shifted table has mass beyond k = n");
    return out;
}

CountTable CountTable::truncated(int n_max) const
{
    if (n_max < 0 || n_max > this->n_max()) throw std::invalid_argument("truncation out of range");
    CountTable out(n_max, has_triangle());
    for (int n = 0; n <= n_max; ++n) {
        out.totals_[n] = totals_[n];
        if (by_size_) (*out.by_size_)[n] = (*by_size_)[n];
    }
    return out;
}

std::string rcl_format(const CountTable& table, bool triangle)
{
    std::string out;
    if (!triangle) {
        for (int n = 0; n <= table.n_max(); ++n) out += table.total(n).get_str() + ' ';
        out += '\n';
        return out;
    }
    for (int n = 0; n <= table.n_max(); ++n) {
        for (int k = 0; k <= n && table.at(n, k) != 0; ++k) out += table.at(n, k).get_str() + ' ';
        out += '\n';
    }
    return out;
}

} // namespace rcomb
