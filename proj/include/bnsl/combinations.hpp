#pragma once

#include <span>
#include <vector>

namespace bnsl {

/// Visits every size-`size` subset of `pool` in lexicographic order of
/// positions. `visit` receives the subset and returns true to stop early.
/// Returns true if a visit stopped the enumeration.
template <typename Visit>
bool for_each_subset(std::span<const int> pool, int size, Visit&& visit) {
    const int n = static_cast<int>(pool.size());
    if (size < 0 || size > n) return false;
    std::vector<int> pos(static_cast<std::size_t>(size));
    for (int k = 0; k < size; ++k) pos[static_cast<std::size_t>(k)] = k;
    std::vector<int> subset(static_cast<std::size_t>(size));
    while (true) {
        for (int k = 0; k < size; ++k)
            subset[static_cast<std::size_t>(k)] = pool[static_cast<std::size_t>(pos[static_cast<std::size_t>(k)])];
        if (visit(std::span<const int>(subset))) return true;
        int k = size - 1;
        while (k >= 0 && pos[static_cast<std::size_t>(k)] == n - size + k) --k;
        if (k < 0) return false;
        ++pos[static_cast<std::size_t>(k)];
        for (int t = k + 1; t < size; ++t) pos[static_cast<std::size_t>(t)] = pos[static_cast<std::size_t>(t - 1)] + 1;
    }
}

}  // namespace bnsl
