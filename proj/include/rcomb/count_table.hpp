#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace rcomb {

using BigInt = mpz_class;

static_assert(sizeof(unsigned long) == 8, "BigInt conversions assume LP64");
inline BigInt to_big(std::uint64_t v) { return BigInt(static_cast<unsigned long>(v)); }

// Exact counts indexed by board/set length n (and optionally subset/comb count k).
// Queries outside the stored range return 0, which encodes the boundary
// conventions X_{n<0} = X_{n,k<0} = X_{n<k,k} = 0.
class CountTable {
public:
    CountTable() = default;
    CountTable(int n_max, bool with_triangle);

    int n_max() const { return static_cast<int>(totals_.size()) - 1; }
    bool has_triangle() const { return by_size_.has_value(); }

    BigInt total(int n) const;
    BigInt at(int n, int k) const;

    BigInt& total_ref(int n) { return totals_.at(n); }
    BigInt& at_ref(int n, int k) { return by_size_->at(n).at(k); }

    const std::vector<BigInt>& totals() const { return totals_; }
    // Row n has n+1 entries (k = 0..n).
    const std::vector<std::vector<BigInt>>& triangle() const { return *by_size_; }

    // Recomputes totals as row sums of the triangle.
    void fill_totals_from_triangle();

    // Table of X_{n+shift} for n = 0..n_max-shift. Converts B to S with shift = q.
    CountTable shifted(int shift) const;
    // First n_max+1 rows.
    CountTable truncated(int n_max) const;

    friend bool operator==(const CountTable&, const CountTable&) = default;

private:
    std::vector<BigInt> totals_;
    std::optional<std::vector<std::vector<BigInt>>> by_size_;
};

// rcl text layout: "%u " per entry. Totals mode prints every S_n on
// one line; triangle mode prints row n as S_{n,0} .. S_{n,kmax} (entries up to the
// first zero), one line per n. Every entry, including the last on a line, is
// followed by one space.
std::string rcl_format(const CountTable& table, bool triangle);

} // namespace rcomb
