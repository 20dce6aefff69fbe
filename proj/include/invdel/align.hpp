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

// Region alignment: the fewest adjacent inversions, applied on the left
// (first genome) and on the right (second genome), that make sigma
// orientation preserving.

#ifndef INVDEL_ALIGN_HPP_
#define INVDEL_ALIGN_HPP_

#include <cstdint>
#include <limits>
#include <optional>
#include <unordered_map>
#include <vector>

#include "invdel/algebra.hpp"
#include "invdel/cayley.hpp"
#include "invdel/error.hpp"
#include "invdel/genome.hpp"
#include "invdel/pperm.hpp"

namespace invdel {

  struct AlignmentSolution {
    size_t cost = 0;
    Word t_m;  // inversions of the source, applied on the left
    Word t_n;  // inversions of the target, applied on the right
    PartialPerm witness;
  };

  // Indices i for which s(i;n) is a distinct non-identity inversion.
  inline std::vector<size_t> inversion_indices(size_t n) {
    std::vector<size_t> out;
    if (n == 2) {
      out.push_back(1);
    } else if (n >= 3) {
      for (size_t i = 1; i <= n; ++i) {
        out.push_back(i);
      }
    }
    return out;
  }

  // Breadth-first search from sigma over t sigma t'. Neighbours are tried
  // left inversions first, then right ones, by ascending index, so the
  // first orientation preserving element dequeued carries the
  // lexicographically least optimal move sequence.
  inline AlignmentSolution solve_pair(PartialPerm const& sigma) {
    size_t const m = sigma.source_size(), n = sigma.target_size();
    if (sigma.rank() <= 1 || is_orientation_preserving(sigma)) {
      return {0, {}, {}, sigma};
    }
    auto left = inversion_indices(m);
    auto right = inversion_indices(n);

    struct Node {
      PartialPerm x;
      uint32_t parent;
      uint16_t move;  // < left.size(): left move, otherwise right move
    };
    std::vector<Node> nodes{{sigma, 0, 0}};
    std::unordered_map<PartialPerm, uint32_t> seen{{sigma, 0}};
    for (size_t head = 0; head < nodes.size(); ++head) {
      PartialPerm const x = nodes[head].x;
      if (is_orientation_preserving(x)) {
        std::vector<uint16_t> moves;
        for (size_t v = head; v != 0; v = nodes[v].parent) {
          moves.push_back(nodes[v].move);
        }
        AlignmentSolution s;
        s.cost = moves.size();
        s.witness = x;
        // moves is last-first; left moves stack outward, so reading it
        // last-first gives t_m directly, and t_n needs reversing.
        for (auto mv : moves) {
          if (mv < left.size()) {
            s.t_m.push_back(Generator::inv(left[mv], m));
          } else {
            s.t_n.push_back(Generator::inv(right[mv - left.size()], n));
          }
        }
        std::reverse(s.t_n.begin(), s.t_n.end());
        return s;
      }
      for (size_t k = 0; k < left.size() + right.size(); ++k) {
        PartialPerm y = k < left.size()
                            ? x.left_transpose(left[k], left[k] % m + 1)
                            : x.right_transpose(right[k - left.size()],
                                                right[k - left.size()] % n + 1);
        auto [it, inserted] = seen.emplace(y, static_cast<uint32_t>(nodes.size()));
        if (inserted) {
          nodes.push_back({y, static_cast<uint32_t>(head), static_cast<uint16_t>(k)});
        }
      }
    }
    // Unreachable: the class of sigma always contains an order preserving map.
    throw Error("solve_pair: search exhausted without an orientation preserving element");
  }

  // The same minimum, read off the D-class graph of the union Cayley graph.
  // Requires m <= n; for m > n the caller passes the graph for the inverse.
  inline size_t solve_pair_via_cayley(PartialPerm const& sigma, DClassGraph const& delta) {
    size_t const m = sigma.source_size(), n = sigma.target_size(), r = sigma.rank();
    if (m > n) {
      return solve_pair_via_cayley(inverse(sigma), delta);
    }
    if (delta.n() != n || delta.m() != m || delta.r() != r) {
      throw InvalidArgument("solve_pair_via_cayley: graph built for (n=" + std::to_string(delta.n())
                            + ", m=" + std::to_string(delta.m()) + ", r="
                            + std::to_string(delta.r()) + "), query needs (n="
                            + std::to_string(n) + ", m=" + std::to_string(m)
                            + ", r=" + std::to_string(r) + ")");
    }
    if (r <= 1) {
      return 0;
    }
    auto start = delta.find(encode(embed(sigma, n)));
    if (!start) {
      throw Error("solve_pair_via_cayley: sigma is not a vertex of the graph");
    }
    std::vector<uint32_t> dist(delta.vertex_count(), std::numeric_limits<uint32_t>::max());
    std::vector<uint32_t> queue{static_cast<uint32_t>(*start)};
    dist[*start] = 0;
    for (size_t head = 0; head < queue.size(); ++head) {
      uint32_t v = queue[head];
      if (is_orientation_preserving(delta.element(v))) {
        return dist[v];
      }
      for (auto const& e : delta.out(v)) {
        if (dist[e.target] == std::numeric_limits<uint32_t>::max()) {
          dist[e.target] = dist[v] + 1;
          queue.push_back(e.target);
        }
      }
    }
    throw Error("solve_pair_via_cayley: no orientation preserving vertex reachable");
  }

  inline size_t solve_pair_via_cayley(PartialPerm const& sigma, DClassStore& store) {
    PartialPerm s = sigma.source_size() > sigma.target_size() ? inverse(sigma) : sigma;
    if (s.rank() <= 1) {
      return 0;
    }
    return solve_pair_via_cayley(s, *store.get(s.target_size(), s.source_size(), s.rank()));
  }

  ////////////////////////////////////////////////////////////////////////////
  // Iterative deepening oracle
  ////////////////////////////////////////////////////////////////////////////

  namespace detail {
    struct OracleState {
      size_t m, n;
      std::array<int, 16> img;  // 0-based images, -1 undefined
      // Move k < m swaps source positions k, k+1 (mod m); move m + k swaps
      // target values k, k+1 (mod n).
      std::vector<size_t> moves;
    };

    inline bool cyclic_order_ok(OracleState const& s) {
      int first = -1, prev = -1, descents = 0;
      for (size_t i = 0; i < s.m; ++i) {
        if (s.img[i] < 0) {
          continue;
        }
        if (first < 0) {
          first = s.img[i];
        } else if (prev > s.img[i]) {
          ++descents;
        }
        prev = s.img[i];
      }
      if (first >= 0 && prev > first) {
        ++descents;
      }
      return descents <= 1;
    }

    inline void oracle_move(OracleState& s, size_t mv) {
      if (mv < s.m) {
        std::swap(s.img[mv], s.img[(mv + 1) % s.m]);
        return;
      }
      int a = static_cast<int>(mv - s.m), b = static_cast<int>((mv - s.m + 1) % s.n);
      for (size_t i = 0; i < s.m; ++i) {
        if (s.img[i] == a) {
          s.img[i] = b;
        } else if (s.img[i] == b) {
          s.img[i] = a;
        }
      }
    }

    inline bool oracle_dfs(OracleState& s, size_t depth, size_t last) {
      if (depth == 0) {
        return cyclic_order_ok(s);
      }
      for (size_t mv : s.moves) {
        if (mv == last) {
          continue;
        }
        oracle_move(s, mv);
        bool found = oracle_dfs(s, depth - 1, mv);
        oracle_move(s, mv);
        if (found) {
          return true;
        }
      }
      return false;
    }
  }  // namespace detail

  // Exact minimum by iterative deepening over every interleaving of left and
  // right inversions, or nullopt when it exceeds depth_cap.
  inline std::optional<size_t> mu_oracle(PartialPerm const& sigma, size_t depth_cap) {
    detail::OracleState s{sigma.source_size(), sigma.target_size(), {}, {}};
    s.img.fill(-1);
    for (size_t k = 0; k < (s.m == 2 ? 1 : s.m >= 3 ? s.m : 0); ++k) {
      s.moves.push_back(k);
    }
    for (size_t k = 0; k < (s.n == 2 ? 1 : s.n >= 3 ? s.n : 0); ++k) {
      s.moves.push_back(s.m + k);
    }
    for (size_t i = 1; i <= s.m; ++i) {
      if (sigma.is_defined(i)) {
        s.img[i - 1] = static_cast<int>(sigma.image(i)) - 1;
      }
    }
    for (size_t d = 0; d <= depth_cap; ++d) {
      if (detail::oracle_dfs(s, d, std::numeric_limits<size_t>::max())) {
        return d;
      }
    }
    return std::nullopt;
  }

  ////////////////////////////////////////////////////////////////////////////
  // Minimisation over reference frames
  ////////////////////////////////////////////////////////////////////////////

  enum class Engine { OnTheFly, Cayley };

  struct AlignOptions {
    Engine engine = Engine::OnTheFly;
    // Only (c1, c2) and (c1, reflect(c2)) for canonical frames.
    bool fast_pairs = false;
    // Required for Engine::Cayley.
    DClassStore* store = nullptr;
  };

  struct PairAlignment {
    ReferenceFrame g1;
    ReferenceFrame g2;
    AlignmentSolution solution;
  };

  inline std::vector<std::pair<ReferenceFrame, ReferenceFrame>> reference_pairs(
      Genome const& g1, Genome const& g2, bool fast) {
    std::vector<std::pair<ReferenceFrame, ReferenceFrame>> out;
    if (fast) {
      out.emplace_back(g1.canonical(), g2.canonical());
      auto r = reflect(g2.canonical());
      if (r != g2.canonical()) {
        out.emplace_back(g1.canonical(), std::move(r));
      }
      return out;
    }
    auto f1 = frames(g1);
    auto f2 = frames(g2);
    for (auto const& a : f1) {
      for (auto const& b : f2) {
        out.emplace_back(a, b);
      }
    }
    return out;
  }

  // The first pair (in sorted frame order) attaining the least cost.
  inline PairAlignment min_over_reference_pairs(Genome const& g1, Genome const& g2,
                                                AlignOptions const& opts = {}) {
    if (!same_alphabet(g1, g2)) {
      throw InvalidArgument("genomes do not share an alphabet");
    }
    if (opts.engine == Engine::Cayley && opts.store == nullptr) {
      throw InvalidArgument("the cayley engine needs a DClassStore");
    }
    auto pairs = reference_pairs(g1, g2, opts.fast_pairs);
    if (opts.engine == Engine::OnTheFly) {
      std::optional<PairAlignment> best;
      for (auto& [a, b] : pairs) {
        auto s = solve_pair(sigma_from_frames(a, b));
        if (!best || s.cost < best->solution.cost) {
          best = PairAlignment{a, b, std::move(s)};
          if (best->solution.cost == 0) {
            break;
          }
        }
      }
      return std::move(*best);
    }
    size_t best_cost = std::numeric_limits<size_t>::max(), best_index = 0;
    for (size_t k = 0; k < pairs.size(); ++k) {
      size_t c = solve_pair_via_cayley(sigma_from_frames(pairs[k].first, pairs[k].second),
                                       *opts.store);
      if (c < best_cost) {
        best_cost = c;
        best_index = k;
        if (c == 0) {
          break;
        }
      }
    }
    auto s = solve_pair(sigma_from_frames(pairs[best_index].first, pairs[best_index].second));
    if (s.cost != best_cost) {
      throw Error("cayley and on-the-fly engines disagree");
    }
    return {pairs[best_index].first, pairs[best_index].second, std::move(s)};
  }

}  // namespace invdel

#endif  // INVDEL_ALIGN_HPP_
