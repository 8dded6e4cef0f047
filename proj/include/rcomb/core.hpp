#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace rcomb {

using Bits = std::uint64_t;

// Largest supported disallowed difference. Digraph labels and theta must fit one word.
constexpr int kMaxQ = 30;

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Raised when a size guard (q, n, board length, cycle count) is exceeded.
struct LimitError : Error {
    using Error::Error;
};

// The set Q of disallowed differences.
//
// theta is the bit string of Q: the j-th bit from the right (machine bit j-1)
// is set iff j is in Q. The same 1-indexed-from-the-right convention is used
// everywhere a difference set is handled as bits.
class DifferenceSet {
public:
    DifferenceSet() = default;
    explicit DifferenceSet(std::vector<int> elements);

    // Comma-separated positive integers, e.g. "1,2,4". "" and "0" give the empty set.
    static DifferenceSet parse(std::string_view spec);
    static DifferenceSet from_theta(Bits theta);

    const std::vector<int>& elements() const { return elements_; }
    int q() const { return elements_.empty() ? 0 : elements_.back(); }
    Bits theta() const { return theta_; }
    bool empty() const { return elements_.empty(); }
    std::size_t size() const { return elements_.size(); }
    bool contains(int j) const { return j >= 1 && j <= kMaxQ && ((theta_ >> (j - 1)) & 1u); }

    // "1,2,4" (the parse format); empty set prints as "".
    std::string to_spec() const;
    // "{1,2,4}"
    std::string to_string() const;

    friend bool operator==(const DifferenceSet&, const DifferenceSet&) = default;

private:
    std::vector<int> elements_;
    Bits theta_ = 0;
};

// The comb tile induced by Q: cells 0..q, cell i filled iff i is 0, q, or in Q.
struct CombShape {
    int q = 0;
    int length = 1;                // q + 1 cells
    Bits occupancy = 1;            // bit i = cell i
    std::vector<int> teeth{1};     // w_1..w_t
    std::vector<int> gaps;         // g_1..g_{t-1}
    int l = 1;                     // width of first tooth
    int r = 1;                     // width of last tooth
    std::vector<int> allowed;      // p_1 < ... < p_a, i.e. N_q - Q

    int a() const { return static_cast<int>(allowed.size()); }
    bool has_gap() const { return !gaps.empty(); }
    bool filled(int cell) const { return cell >= 0 && cell < length && ((occupancy >> cell) & 1u); }

    // "(3,1,1)-comb" or "2-omino" when there is no gap.
    std::string notation() const;

    friend bool operator==(const CombShape&, const CombShape&) = default;
};

CombShape comb_from_differences(const DifferenceSet& Q);

// Reads Q back from the interior cells of a comb.
DifferenceSet differences_from_comb(const CombShape& comb);

// Ascending elements of N_q - Q.
std::vector<int> allowed_differences(const DifferenceSet& Q);

// Well-based test through allowed differences: p_i + p_j not in Q for all i, j.
// Requires Q nonempty.
bool is_well_based(const DifferenceSet& Q);

// Well-based test through the decomposition definition: q_1 = 1 and every
// q_j splits as q_i + Δ for each Δ in 1..q_j-1 that is not itself in Q.
bool is_well_based_by_decomposition(const DifferenceSet& Q);

// All Q with largest element exactly q (2^(q-1) sets; q = 0 gives the empty set).
std::vector<DifferenceSet> all_difference_sets_with_max(int q);

// All nonempty Q with largest element in 1..q_max, increasing q then theta.
std::vector<DifferenceSet> all_difference_sets_up_to(int q_max);

} // namespace rcomb
