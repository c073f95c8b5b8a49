// Copyright 2026 The Singleton Lab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SINGLETON_LAB_SUBSETS_H
#define SINGLETON_LAB_SUBSETS_H

#include <cstdint>
#include <limits>
#include <numeric>
#include <vector>

namespace singleton_lab {

/// C(n, k), saturating at uint64 max.
inline std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    std::uint64_t r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        const std::uint64_t num = n - k + i;
        if (r > std::numeric_limits<std::uint64_t>::max() / num) return std::numeric_limits<std::uint64_t>::max();
        r = r * num / i;
    }
    return r;
}

/// Calls fn(const std::vector<std::size_t>&) for every k-subset of {0..n-1}
/// in lexicographic order.
template <typename Fn>
void for_each_subset(std::size_t n, std::size_t k, Fn &&fn) {
    if (k > n) return;
    std::vector<std::size_t> idx(k);
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    while (true) {
        fn(static_cast<const std::vector<std::size_t> &>(idx));
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == n - k + (i - 1)) --i;
        if (i == 0) return;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

/// Indices of {0..n-1} not in the sorted subset.
inline std::vector<std::size_t> complement(std::size_t n, const std::vector<std::size_t> &subset) {
    std::vector<std::size_t> out;
    std::size_t s = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (s < subset.size() && subset[s] == i) {
            ++s;
        } else {
            out.push_back(i);
        }
    }
    return out;
}

}  // namespace singleton_lab

#endif
