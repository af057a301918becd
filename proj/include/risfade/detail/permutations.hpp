// SPDX-License-Identifier: Apache-2.0
//
// risfade: Doppler and multipath fading simulator for RIS-assisted mobile links
// Copyright (C) 2026 The risfade authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#ifndef RISFADE_DETAIL_PERMUTATIONS_HPP
#define RISFADE_DETAIL_PERMUTATIONS_HPP

#include <algorithm>
#include <numeric>
#include <span>
#include <vector>

namespace risfade
{
    template <typename Fn>
    void for_each_k_permutation(std::size_t n, std::size_t k, Fn &&fn)
    {
        if (k > n)
            return;
        std::vector<std::size_t> items(n);
        std::iota(items.begin(), items.end(), std::size_t{0});
        const auto split = items.begin() + static_cast<std::ptrdiff_t>(k);
        do
        {
            fn(std::span<const std::size_t>(items.data(), k));
            // Reversing the tail makes next_permutation advance the k-prefix
            std::reverse(split, items.end());
        } while (std::next_permutation(items.begin(), items.end()));
    }
}

#endif
