#pragma once

// Set partitions as restricted growth strings: a[0] = 0 and
// a[i] <= 1 + max(a[0..i-1]), enumerated in lexicographic RGS order.  Two
// colorings with the same class partition behave identically under the
// saturation semantics, so this enumerates colorings up to color renaming.

#include <algorithm>
#include <cstdint>
#include <vector>

namespace rsat {

inline std::uint64_t bell_number(int k) {
        // Bell triangle; k up to 24 fits in 64 bits comfortably.
        std::vector<std::uint64_t> row{1};
        for (int i = 1; i <= k; ++i) {
                std::vector<std::uint64_t> next{row.back()};
                for (std::uint64_t x : row) next.push_back(next.back() + x);
                row = std::move(next);
        }
        return row.front();
}

// Visits every restricted growth string of length k; the visitor returns
// true to continue.  k = 0 visits the empty string once.
template <typename Fn>
bool for_each_set_partition(int k, Fn&& visit) {
        std::vector<int> rgs(static_cast<size_t>(k), 0);
        if (k == 0) return visit(const_cast<const std::vector<int>&>(rgs));
        std::vector<int> prefix_max(static_cast<size_t>(k), 0);  // max over rgs[0..i-1]
        while (true) {
                if (!visit(const_cast<const std::vector<int>&>(rgs))) return false;
                int i = k - 1;
                while (i > 0 && rgs[i] > prefix_max[i]) --i;  // growable iff rgs[i] <= prefix_max[i]
                if (i <= 0) return true;
                ++rgs[i];
                for (int j = i + 1; j < k; ++j) {
                        rgs[j] = 0;
                        prefix_max[j] = std::max(prefix_max[j - 1], rgs[j - 1]);
                }
        }
}

}  // namespace rsat
