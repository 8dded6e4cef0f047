#include <algorithm>
#include <cstdint>

#include "rcomb/bijections.hpp"

namespace rcomb {

void for_each_restricted_permutation(int size, const std::vector<int>& D,
                                     const std::function<void(const std::vector<int>&)>& visit)
{
    if (size < 0) throw Error("permutation size must be nonnegative");
    if (size > kMaxPermutationSize) throw LimitError("permutation size above " + std::to_string(kMaxPermutationSize));
    std::vector<int> images(size);
    std::uint32_t used = 0;
    // Position i takes an unused value i + d; a value v that no later position
    // can reach any more (v < i + 1 + min D) must already be used.
    const int lowest = D.empty() ? 0 : *std::min_element(D.begin(), D.end());
    std::function<void(int)> place = [&](int i) {
        if (i > size) {
            visit(images);
            return;
        }
        const int stale = i + lowest; // values below i+1+lowest are unreachable after i
        if (stale >= 1 && stale <= size && !((used >> (stale - 1)) & 1u)) {
            // only position i can still take `stale`
            if (std::find(D.begin(), D.end(), stale - i) == D.end()) return;
            images[i - 1] = stale;
            used |= 1u << (stale - 1);
            place(i + 1);
            used &= ~(1u << (stale - 1));
            return;
        }
        for (int d : D) {
            const int v = i + d;
            if (v < 1 || v > size || ((used >> (v - 1)) & 1u)) continue;
            images[i - 1] = v;
            used |= 1u << (v - 1);
            place(i + 1);
            used &= ~(1u << (v - 1));
        }
    };
    place(1);
}

std::vector<std::uint64_t> perm_count_jm(int n, int m, int j)
{
    if (n < 0 || m < 1 || j < 1) throw Error("perm_count_jm needs n >= 0, m >= 1, j >= 1");
    const int size = n + j * m;
    std::vector<std::uint64_t> counts(n + 1, 0);
    for_each_restricted_permutation(size, {-m, 0, j * m}, [&](const std::vector<int>& pi) {
        int k = 0;
        for (int i = 1; i <= size; ++i) k += pi[i - 1] > i;
        if (k >= static_cast<int>(counts.size())) counts.resize(k + 1, 0);
        counts[k] += 1;
    });
    return counts;
}

std::vector<std::uint64_t> perm_count_1m(int n, int m)
{
    if (n < 0 || m < 1) throw Error("perm_count_1m needs n >= 0, m >= 1");
    const int size = n + 1;
    std::vector<std::uint64_t> counts(n + 1, 0);
    for_each_restricted_permutation(size, {-1, 0, 1}, [&](const std::vector<int>& pi) {
        for (int i = 1; i + m - 1 <= size; ++i) {
            const auto [lo, hi] = std::minmax_element(pi.begin() + (i - 1), pi.begin() + (i - 1 + m));
            if (*hi - *lo > m) return;
        }
        int k = 0;
        for (int i = 1; i <= size; ++i) k += pi[i - 1] == i + 1;
        counts[k] += 1;
    });
    return counts;
}

} // namespace rcomb
