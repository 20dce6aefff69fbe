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

// Inversion/deletion distances between circular genomes, ancestor
// reconstruction and pairwise distance matrices.

#ifndef INVDEL_DISTANCE_HPP_
#define INVDEL_DISTANCE_HPP_

#include <algorithm>
#include <atomic>
#include <deque>
#include <exception>
#include <iomanip>
#include <mutex>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "invdel/algebra.hpp"
#include "invdel/align.hpp"
#include "invdel/error.hpp"
#include "invdel/genome.hpp"

namespace invdel {

  struct DistanceResult {
    size_t total = 0;
    size_t deletions = 0;
    size_t mu = 0;
    ReferenceFrame best_g1;
    ReferenceFrame best_g2;
    AlignmentSolution solution;
  };

  inline DistanceResult mrca_distance(Genome const& g1, Genome const& g2,
                                      AlignOptions const& opts = {}) {
    auto sets = region_set_ops(g1, g2);
    auto best = min_over_reference_pairs(g1, g2, opts);
    DistanceResult d;
    d.deletions = sets.symmetric_difference.size();
    d.mu = best.solution.cost;
    d.total = d.deletions + d.mu;
    d.best_g1 = std::move(best.g1);
    d.best_g2 = std::move(best.g2);
    d.solution = std::move(best.solution);
    return d;
  }

  // Frame restricted to `keep`, survivors in their original order.
  inline ReferenceFrame restrict_frame(ReferenceFrame const& frame,
                                       std::vector<RegionId> const& keep) {
    std::vector<RegionId> out;
    for (RegionId r : frame.regions()) {
      if (std::binary_search(keep.begin(), keep.end(), r)) {
        out.push_back(r);
      }
    }
    return ReferenceFrame(std::move(out));
  }

  // Single deletions removing the regions of `drop` from `frame`, highest
  // position first.
  inline Word deletion_word(ReferenceFrame const& frame, std::vector<RegionId> const& drop) {
    std::vector<size_t> positions;
    for (RegionId r : drop) {
      if (size_t p = frame.position_of(r); p != 0) {
        positions.push_back(p);
      }
    }
    std::sort(positions.rbegin(), positions.rend());
    Word w;
    size_t size = frame.size();
    for (size_t p : positions) {
      w.push_back(Generator::del(p, size--));
    }
    return w;
  }

  // Fewest events turning g1 into g2 when only g1 evolves: the deletions of
  // R1 \ R2, then a breadth-first search over inversions of the survivors.
  inline size_t directed_distance(Genome const& g1, Genome const& g2) {
    if (!same_alphabet(g1, g2)) {
      throw InvalidArgument("genomes do not share an alphabet");
    }
    auto sets = region_set_ops(g1, g2);
    if (!sets.only_second.empty()) {
      throw NoPathError("no inversion/deletion path: " + std::to_string(sets.only_second.size())
                        + " region(s) of the second genome are absent from the first");
    }
    auto start = restrict_frame(g1.canonical(), sets.intersection);
    size_t const n = start.size();
    auto const& target = g2.canonical();
    auto idx = inversion_indices(n);
    std::set<ReferenceFrame> seen{start};
    std::deque<std::pair<ReferenceFrame, size_t>> queue{{start, 0}};
    while (!queue.empty()) {
      auto [f, d] = queue.front();
      queue.pop_front();
      if (canonical_frame(f) == target) {
        return sets.only_first.size() + d;
      }
      for (size_t i : idx) {
        auto regions = f.regions();
        std::swap(regions[i - 1], regions[i % n]);
        ReferenceFrame g(std::move(regions));
        if (seen.insert(g).second) {
          queue.emplace_back(std::move(g), d + 1);
        }
      }
    }
    throw Error("directed_distance: inversions failed to reach the target");
  }

  ////////////////////////////////////////////////////////////////////////////
  // Ancestor reconstruction
  ////////////////////////////////////////////////////////////////////////////

  struct AncestorScenario {
    Genome ancestor;
    ReferenceFrame ancestor_frame;
    Word events_to_g1;  // deletions, then inversions
    Word events_to_g2;
    // gap_sets[i]: regions of the second genome only, inserted after the
    // i-th shared region (gap_sets[0] precedes the first).
    std::vector<std::vector<RegionId>> gap_sets;
  };

  namespace detail {
    // Index shift taking inversions on `frame` to inversions on `frame`
    // rotated left by k.
    inline Word shift_inversions(Word const& w, size_t k, size_t n) {
      Word out;
      for (auto const& g : w) {
        out.push_back(Generator::inv((g.index() + n - 1 - k % n) % n + 1, n));
      }
      return out;
    }

    inline ReferenceFrame rotate_left(ReferenceFrame const& f, size_t k) {
      auto r = f.regions();
      std::rotate(r.begin(), r.begin() + static_cast<std::ptrdiff_t>(k % std::max<size_t>(r.size(), 1)),
                  r.end());
      return ReferenceFrame(std::move(r));
    }
  }  // namespace detail

  // Ancestor for the reference pair (f1, f2) of (g1, g2) and an optimal
  // alignment `sol` of that pair.
  inline AncestorScenario construct_ancestor(Genome const& g1, Genome const& g2,
                                             ReferenceFrame const& f1, ReferenceFrame const& f2,
                                             AlignmentSolution const& sol) {
    Word rev_tm(sol.t_m.rbegin(), sol.t_m.rend());
    Word rev_tn(sol.t_n.rbegin(), sol.t_n.rend());
    ReferenceFrame a1 = apply_to_frame(f1, rev_tm);
    ReferenceFrame a2 = apply_to_frame(f2, sol.t_n);
    size_t const n = a2.size();

    // Rotate the second frame so the shared regions appear in the same
    // linear order in both.
    PartialPerm w = sigma_from_frames(a1, a2);
    size_t shift = 0;
    if (!is_order_preserving(w)) {
      shift = w.image(w.domain().front()) - 1;
      a2 = detail::rotate_left(a2, shift);
      rev_tn = detail::shift_inversions(rev_tn, shift, n);
    }
    w = sigma_from_frames(a1, a2);

    AncestorScenario s;
    std::vector<RegionId> anc;
    auto dom = w.domain();
    if (dom.empty()) {
      s.gap_sets.push_back(a2.regions());
      anc = a2.regions();
      anc.insert(anc.end(), a1.regions().begin(), a1.regions().end());
    } else {
      auto const& r1 = a1.regions();
      auto const& r2 = a2.regions();
      size_t const h = dom.size();
      std::vector<size_t> p1(dom), p2;
      for (size_t i : dom) {
        p2.push_back(w.image(i));
      }
      auto slice = [](std::vector<RegionId> const& v, size_t from, size_t to) {
        return std::vector<RegionId>(v.begin() + static_cast<std::ptrdiff_t>(from),
                                     v.begin() + static_cast<std::ptrdiff_t>(to));
      };
      s.gap_sets.push_back(slice(r2, 0, p2[0] - 1));
      anc = s.gap_sets[0];
      auto head = slice(r1, 0, p1[0] - 1);
      anc.insert(anc.end(), head.begin(), head.end());
      for (size_t k = 0; k < h; ++k) {
        anc.push_back(r1[p1[k] - 1]);
        size_t e1 = k + 1 < h ? p1[k + 1] - 1 : r1.size();
        size_t e2 = k + 1 < h ? p2[k + 1] - 1 : r2.size();
        auto own = slice(r1, p1[k], e1);
        auto ins = slice(r2, p2[k], e2);
        anc.insert(anc.end(), own.begin(), own.end());
        anc.insert(anc.end(), ins.begin(), ins.end());
        s.gap_sets.push_back(std::move(ins));
      }
    }
    s.ancestor_frame = ReferenceFrame(std::move(anc));
    s.ancestor = canonicalize(g1.alphabet(), s.ancestor_frame);

    auto sets = region_set_ops(g1, g2);
    s.events_to_g1 = deletion_word(s.ancestor_frame, sets.only_second);
    s.events_to_g1.insert(s.events_to_g1.end(), sol.t_m.begin(), sol.t_m.end());
    s.events_to_g2 = deletion_word(s.ancestor_frame, sets.only_first);
    s.events_to_g2.insert(s.events_to_g2.end(), rev_tn.begin(), rev_tn.end());
    return s;
  }

  inline AncestorScenario construct_ancestor(Genome const& g1, Genome const& g2,
                                             AlignOptions const& opts = {}) {
    auto best = min_over_reference_pairs(g1, g2, opts);
    return construct_ancestor(g1, g2, best.g1, best.g2, best.solution);
  }

  struct ScenarioCheck {
    bool ok = true;
    std::string report;

    explicit operator bool() const noexcept {
      return ok;
    }
  };

  // Replays both event words from the ancestor frame and compares against
  // the genomes and the optimal distance.
  inline ScenarioCheck verify_scenario(AncestorScenario const& s, Genome const& g1,
                                       Genome const& g2, std::optional<size_t> total = std::nullopt) {
    ScenarioCheck c;
    auto const& alphabet = *g1.alphabet();
    auto side = [&](Word const& w, Genome const& g, char const* name) {
      try {
        auto f = apply_to_frame(s.ancestor_frame, w);
        if (canonical_frame(f) != g.canonical()) {
          c.ok = false;
          c.report += std::string(name) + ": replay gives " + compact_frame(alphabet, f)
                      + ", expected a frame of " + compact_frame(alphabet, g.canonical()) + "\n";
        }
      } catch (Error const& e) {
        c.ok = false;
        c.report += std::string(name) + ": " + e.what() + "\n";
      }
    };
    side(s.events_to_g1, g1, "G1");
    side(s.events_to_g2, g2, "G2");
    size_t expected = total ? *total : mrca_distance(g1, g2).total;
    size_t events = count_events(s.events_to_g1) + count_events(s.events_to_g2);
    if (events != expected) {
      c.ok = false;
      c.report += "event count " + std::to_string(events) + " differs from distance "
                  + std::to_string(expected) + "\n";
    }
    return c;
  }

  ////////////////////////////////////////////////////////////////////////////
  // Matrices
  ////////////////////////////////////////////////////////////////////////////

  using DistanceMatrix = std::vector<std::vector<size_t>>;

  // threads == 0 picks the hardware concurrency.
  inline DistanceMatrix distance_matrix(std::vector<Genome> const& genomes,
                                        AlignOptions const& opts = {}, size_t threads = 0) {
    size_t const k = genomes.size();
    if (k < 2) {
      throw InvalidArgument("distance_matrix: need at least 2 genomes");
    }
    DistanceMatrix d(k, std::vector<size_t>(k, 0));
    std::vector<std::pair<size_t, size_t>> jobs;
    for (size_t i = 0; i < k; ++i) {
      for (size_t j = i + 1; j < k; ++j) {
        jobs.emplace_back(i, j);
      }
    }
    if (threads == 0) {
      threads = std::max(1u, std::thread::hardware_concurrency());
    }
    threads = std::min(threads, jobs.size());
    std::atomic<size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
      for (size_t t = next++; t < jobs.size(); t = next++) {
        auto [i, j] = jobs[t];
        try {
          d[i][j] = d[j][i] = mrca_distance(genomes[i], genomes[j], opts).total;
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) {
            failure = std::current_exception();
          }
        }
      }
    };
    std::vector<std::thread> pool;
    for (size_t t = 1; t < threads; ++t) {
      pool.emplace_back(worker);
    }
    worker();
    for (auto& t : pool) {
      t.join();
    }
    if (failure) {
      std::rethrow_exception(failure);
    }
    return d;
  }

  // Square PHYLIP: the count, then one row per genome with the name padded
  // or cut to 10 characters.
  inline void write_phylip(std::ostream& out, std::vector<std::string> const& names,
                           DistanceMatrix const& d) {
    out << names.size() << '\n';
    for (size_t i = 0; i < names.size(); ++i) {
      out << std::left << std::setw(10) << names[i].substr(0, 10) << std::right;
      for (size_t j = 0; j < names.size(); ++j) {
        out << ' ' << d[i][j];
      }
      out << '\n';
    }
  }

  inline void write_tsv(std::ostream& out, std::vector<std::string> const& names,
                        DistanceMatrix const& d) {
    for (auto const& n : names) {
      out << '\t' << n;
    }
    out << '\n';
    for (size_t i = 0; i < names.size(); ++i) {
      out << names[i];
      for (size_t j = 0; j < names.size(); ++j) {
        out << '\t' << d[i][j];
      }
      out << '\n';
    }
  }

}  // namespace invdel

#endif  // INVDEL_DISTANCE_HPP_
