#pragma once
#include <vector>

namespace delta {

// Calls f on every k-subset of items, in lexicographic order of positions.
template <class F>
void for_each_combination(const std::vector<int>& items, int k, F&& f) {
    const int n = static_cast<int>(items.size());
    if (k < 0 || k > n) return;
    std::vector<int> idx(k), cur(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        for (int i = 0; i < k; ++i) cur[i] = items[idx[i]];
        f(cur);
        int i = k - 1;
        while (i >= 0 && idx[i] == n - k + i) --i;
        if (i < 0) return;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

}  // namespace delta
