// Copyright 2026 The invdel Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// PARTITION to BALANCEDSORT, and exact solvers for both on small inputs.

#ifndef INVDEL_NPC_HPP_
#define INVDEL_NPC_HPP_

#include <cstdint>
#include <numeric>
#include <optional>
#include <unordered_set>
#include <vector>

#include "invdel/error.hpp"
#include "invdel/pperm.hpp"

namespace invdel {

  struct BalancedSortInstance {
    PartialPerm sigma;  // in I_{m,m}
    size_t k = 0;
  };

  // Element j of A becomes the crossing pair (p, p + a_j) with
  // p = j + a_1 + ... + a_{j-1}; positions strictly inside a pair stay
  // undefined.
  inline BalancedSortInstance reduce_partition(std::vector<size_t> const& a) {
    if (a.empty()) {
      throw InvalidArgument("reduce_partition: empty multiset");
    }
    size_t total = 0;
    for (size_t x : a) {
      if (x == 0) {
        throw InvalidArgument("reduce_partition: elements must be positive");
      }
      total += x;
    }
    size_t const m = a.size() + total;
    if (m > PartialPerm::kMaxDegree) {
      throw CapacityError("reduce_partition: instance needs m=" + std::to_string(m) + " > "
                          + std::to_string(PartialPerm::kMaxDegree));
    }
    std::vector<PartialPerm::Pair> pairs;
    size_t p = 1;
    for (size_t x : a) {
      pairs.push_back({p, p + x});
      pairs.push_back({p + x, p});
      p += x + 1;
    }
    return {PartialPerm::from_pairs(m, m, pairs), total};
  }

  inline constexpr size_t kMaxBalancedSortDegree = 12;

  // Decides whether t sigma t' is order preserving for some inversion words
  // t, t' of equal length L with 2L <= k.
  //
  // With p the permutation of t, the images of p sigma listed by domain are
  // sigma(p(1)), sigma(p(2)), ... skipping undefined points, and
  // (p sigma) q is order preserving iff q sorts im(sigma) into that
  // sequence. Both sides therefore reduce to sequences over im(sigma), and
  // each length L is a set intersection.
  inline bool solve_balancedsort(BalancedSortInstance const& inst) {
    auto const& sigma = inst.sigma;
    size_t const m = sigma.source_size();
    if (sigma.target_size() != m) {
      throw InvalidArgument("solve_balancedsort: sigma must be in I_{m,m}");
    }
    if (m > kMaxBalancedSortDegree) {
      throw CapacityError("solve_balancedsort: m=" + std::to_string(m) + " exceeds "
                          + std::to_string(kMaxBalancedSortDegree));
    }
    if (is_order_preserving(sigma)) {
      return true;
    }
    using Perm = uint64_t;  // nibble i holds p(i + 1) - 1
    auto at = [](Perm p, size_t i) { return static_cast<size_t>((p >> (4 * i)) & 0xF); };
    Perm id = 0;
    for (size_t i = 0; i < m; ++i) {
      id |= Perm{i} << (4 * i);
    }
    std::vector<std::pair<size_t, size_t>> swaps;
    for (size_t i = 0; i < (m == 2 ? 1 : m); ++i) {
      swaps.emplace_back(i, (i + 1) % m);
    }
    // p s: values i and j of p exchange places in the one-line notation of
    // the composite, i.e. p(x) is replaced by s(p(x)).
    auto times = [&](Perm p, size_t a, size_t b) {
      Perm q = p;
      for (size_t x = 0; x < m; ++x) {
        size_t v = at(p, x);
        size_t w = v == a ? b : v == b ? a : v;
        q = (q & ~(Perm{0xF} << (4 * x))) | (Perm{w} << (4 * x));
      }
      return q;
    };
    auto image = sigma.image_set();
    auto left_key = [&](Perm p) {
      uint64_t key = 0;
      for (size_t x = 0; x < m; ++x) {
        if (size_t v = sigma.image(at(p, x) + 1); v != 0) {
          key = key * 17 + v;
        }
      }
      return key;
    };
    auto right_key = [&](Perm q) {
      std::vector<std::pair<size_t, size_t>> order;
      for (size_t j : image) {
        order.emplace_back(at(q, j - 1), j);
      }
      std::sort(order.begin(), order.end());
      uint64_t key = 0;
      for (auto [_, j] : order) {
        key = key * 17 + j;
      }
      return key;
    };

    std::unordered_set<Perm> layer{id};
    for (size_t len = 0; 2 * len <= inst.k; ++len) {
      if (len > 0) {
        std::unordered_set<Perm> next;
        for (Perm p : layer) {
          for (auto [a, b] : swaps) {
            next.insert(times(p, a, b));
          }
        }
        layer = std::move(next);
      }
      std::unordered_set<uint64_t> lefts;
      for (Perm p : layer) {
        lefts.insert(left_key(p));
      }
      for (Perm q : layer) {
        if (lefts.count(right_key(q))) {
          return true;
        }
      }
    }
    return false;
  }

  struct PartitionSplit {
    std::vector<size_t> x;
    std::vector<size_t> y;
  };

  inline constexpr size_t kMaxPartitionSize = 24;

  // An equal-sum split of A, found by scanning every subset.
  inline std::optional<PartitionSplit> partition_witness(std::vector<size_t> const& a) {
    if (a.size() > kMaxPartitionSize) {
      throw CapacityError("partition_brute: at most " + std::to_string(kMaxPartitionSize)
                          + " elements");
    }
    size_t const total = std::accumulate(a.begin(), a.end(), size_t{0});
    if (total % 2 != 0) {
      return std::nullopt;
    }
    for (uint32_t mask = 0; mask < (uint32_t{1} << a.size()); ++mask) {
      size_t sum = 0;
      for (size_t i = 0; i < a.size(); ++i) {
        if (mask >> i & 1) {
          sum += a[i];
        }
      }
      if (2 * sum == total) {
        PartitionSplit s;
        for (size_t i = 0; i < a.size(); ++i) {
          (mask >> i & 1 ? s.x : s.y).push_back(a[i]);
        }
        return s;
      }
    }
    return std::nullopt;
  }

  inline bool partition_brute(std::vector<size_t> const& a) {
    return partition_witness(a).has_value();
  }

}  // namespace invdel

#endif  // INVDEL_NPC_HPP_
