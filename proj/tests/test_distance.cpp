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

#include <gtest/gtest.h>

#include <map>
#include <set>
#include <sstream>

#include "test_support.hpp"

using invdel::Genome;
using invdel::test::genome_of;

namespace {

  // Directed distance by breadth-first search over whole frames, deletions
  // and inversions interleaved freely.
  size_t brute_directed(Genome const& g1, Genome const& g2) {
    std::map<invdel::ReferenceFrame, size_t> dist{{g1.canonical(), 0}};
    std::vector<invdel::ReferenceFrame> queue{g1.canonical()};
    for (size_t head = 0; head < queue.size(); ++head) {
      auto f = queue[head];
      if (invdel::canonical_frame(f) == g2.canonical()) {
        return dist[f];
      }
      std::vector<invdel::ReferenceFrame> next;
      auto r = f.regions();
      for (size_t i = 0; i < r.size() && r.size() >= 2; ++i) {
        auto s = r;
        std::swap(s[i], s[(i + 1) % s.size()]);
        next.emplace_back(s);
        auto d = r;
        d.erase(d.begin() + static_cast<long>(i));
        next.emplace_back(d);
      }
      for (auto& g : next) {
        if (dist.emplace(g, dist[f] + 1).second) {
          queue.push_back(g);
        }
      }
    }
    return SIZE_MAX;
  }

}  // namespace

TEST(Mrca, Examples) {
  auto al = invdel::letter_alphabet(4);
  auto abc = genome_of(al, "abc").genome;
  EXPECT_EQ(invdel::mrca_distance(abc, abc).total, 0u);
  auto d = invdel::mrca_distance(abc, genome_of(al, "abd").genome);
  EXPECT_EQ(d.total, 2u);
  EXPECT_EQ(d.deletions, 2u);
  EXPECT_EQ(d.mu, 0u);
}

TEST(Mrca, TwelveRegionPair) {
  auto al = invdel::letter_alphabet(12);
  auto g1 = genome_of(al, "bcdegkhl").genome;
  auto g2 = genome_of(al, "aebfhijk").genome;
  auto d = invdel::mrca_distance(g1, g2);
  EXPECT_EQ(d.deletions, 8u);
  EXPECT_EQ(d.total, d.deletions + d.mu);
  EXPECT_LE(d.total, 10u);
  size_t least = 99;
  for (auto const& f1 : invdel::frames(g1)) {
    for (auto const& f2 : invdel::frames(g2)) {
      least = std::min(least, *invdel::mu_oracle(invdel::sigma_from_frames(f1, f2), 4));
    }
  }
  EXPECT_EQ(d.mu, least);
}

TEST(Mrca, Symmetry) {
  std::mt19937_64 rng(61);
  auto al = invdel::letter_alphabet(7);
  for (int t = 0; t < 100; ++t) {
    auto pick = [&] {
      std::vector<invdel::RegionId> ids(7);
      std::iota(ids.begin(), ids.end(), 0);
      std::shuffle(ids.begin(), ids.end(), rng);
      ids.resize(1 + rng() % 7);
      return invdel::canonicalize(al, invdel::ReferenceFrame(ids));
    };
    auto g1 = pick(), g2 = pick();
    auto d12 = invdel::mrca_distance(g1, g2).total;
    EXPECT_EQ(d12, invdel::mrca_distance(g2, g1).total);
    EXPECT_EQ(d12 == 0, g1 == g2);
  }
}

TEST(Directed, Examples) {
  auto al = invdel::letter_alphabet(5);
  auto abcd = genome_of(al, "abcd").genome;
  EXPECT_EQ(invdel::directed_distance(abcd, genome_of(al, "abc").genome), 1u);
  EXPECT_EQ(invdel::directed_distance(abcd, abcd), 0u);
  auto bacd = genome_of(al, "bacd").genome;
  ASSERT_NE(abcd, bacd);
  EXPECT_EQ(invdel::directed_distance(abcd, bacd), 1u);
  EXPECT_THROW(invdel::directed_distance(abcd, genome_of(al, "abce").genome),
               invdel::NoPathError);
}

TEST(Directed, MatchesFreeInterleaving) {
  std::mt19937_64 rng(62);
  auto al = invdel::letter_alphabet(6);
  for (int t = 0; t < 60; ++t) {
    std::vector<invdel::RegionId> ids(6);
    std::iota(ids.begin(), ids.end(), 0);
    std::shuffle(ids.begin(), ids.end(), rng);
    ids.resize(2 + rng() % 5);
    auto g1 = invdel::canonicalize(al, invdel::ReferenceFrame(ids));
    std::shuffle(ids.begin(), ids.end(), rng);
    ids.resize(1 + rng() % ids.size());
    auto g2 = invdel::canonicalize(al, invdel::ReferenceFrame(ids));
    auto d = invdel::directed_distance(g1, g2);
    EXPECT_EQ(d, brute_directed(g1, g2));
    auto sets = invdel::region_set_ops(g1, g2);
    EXPECT_GE(d, sets.only_first.size());
    EXPECT_LE(invdel::mrca_distance(g1, g2).total, d);
  }
}

TEST(Ancestor, KnownAncestor) {
  auto al = invdel::letter_alphabet(12);
  auto g1 = genome_of(al, "aefbgcdh");
  auto g2 = genome_of(al, "iajkblcd");
  auto sigma = invdel::sigma_from_frames(g1.frame, g2.frame);
  ASSERT_TRUE(invdel::is_order_preserving(sigma));
  auto s = invdel::construct_ancestor(g1.genome, g2.genome, g1.frame, g2.frame,
                                      invdel::solve_pair(sigma));
  EXPECT_EQ(invdel::compact_frame(*al, s.ancestor_frame), "iaefjkbglcdh");
  EXPECT_TRUE(invdel::verify_scenario(s, g1.genome, g2.genome));
  ASSERT_EQ(s.gap_sets.size(), 5u);
  EXPECT_EQ(s.gap_sets[0].size(), 1u);
  EXPECT_EQ(s.gap_sets[1].size(), 2u);

  auto best = invdel::construct_ancestor(g1.genome, g2.genome);
  EXPECT_EQ(best.ancestor, s.ancestor);
  EXPECT_TRUE(invdel::verify_scenario(best, g1.genome, g2.genome));
}

TEST(Ancestor, IdenticalGenomes) {
  auto al = invdel::letter_alphabet(5);
  auto g = genome_of(al, "acebd").genome;
  auto s = invdel::construct_ancestor(g, g);
  EXPECT_EQ(s.ancestor, g);
  EXPECT_TRUE(s.events_to_g1.empty());
  EXPECT_TRUE(s.events_to_g2.empty());
  EXPECT_TRUE(invdel::verify_scenario(s, g, g));
}

TEST(Ancestor, DisjointGenomes) {
  auto al = invdel::letter_alphabet(6);
  auto g1 = genome_of(al, "abc").genome, g2 = genome_of(al, "def").genome;
  auto s = invdel::construct_ancestor(g1, g2);
  EXPECT_EQ(s.ancestor.size(), 6u);
  EXPECT_TRUE(invdel::verify_scenario(s, g1, g2));
}

TEST(Ancestor, TamperedScenarioFails) {
  auto al = invdel::letter_alphabet(8);
  auto g1 = genome_of(al, "bacdefg").genome, g2 = genome_of(al, "abcdhe").genome;
  auto s = invdel::construct_ancestor(g1, g2);
  ASSERT_TRUE(invdel::verify_scenario(s, g1, g2));
  auto broken = s;
  ASSERT_FALSE(broken.events_to_g1.empty());
  broken.events_to_g1.pop_back();
  auto check = invdel::verify_scenario(broken, g1, g2);
  EXPECT_FALSE(check);
  EXPECT_FALSE(check.report.empty());
}

TEST(AncestorProperty, RandomPairs) {
  std::mt19937_64 rng(63);
  auto al = invdel::letter_alphabet(8);
  for (int t = 0; t < 150; ++t) {
    auto pick = [&] {
      std::vector<invdel::RegionId> ids(8);
      std::iota(ids.begin(), ids.end(), 0);
      std::shuffle(ids.begin(), ids.end(), rng);
      ids.resize(1 + rng() % 6);
      return invdel::canonicalize(al, invdel::ReferenceFrame(ids));
    };
    auto g1 = pick(), g2 = pick();
    auto s = invdel::construct_ancestor(g1, g2);
    auto check = invdel::verify_scenario(s, g1, g2);
    EXPECT_TRUE(check) << check.report;
  }
}

TEST(Matrix, Basics) {
  auto al = invdel::letter_alphabet(6);
  auto g = genome_of(al, "abcdef").genome;
  EXPECT_EQ(invdel::distance_matrix({g, g}), (invdel::DistanceMatrix{{0, 0}, {0, 0}}));
  EXPECT_THROW(invdel::distance_matrix({g}), invdel::InvalidArgument);
  std::vector<Genome> gs{g, genome_of(al, "abdcef").genome, genome_of(al, "fabd").genome,
                         genome_of(al, "ebdc").genome};
  auto seq = invdel::distance_matrix(gs, {}, 1);
  auto par = invdel::distance_matrix(gs, {}, 3);
  EXPECT_EQ(seq, par);
  for (size_t i = 0; i < gs.size(); ++i) {
    EXPECT_EQ(seq[i][i], 0u);
    for (size_t j = 0; j < gs.size(); ++j) {
      EXPECT_EQ(seq[i][j], seq[j][i]);
      EXPECT_EQ(seq[i][j], invdel::mrca_distance(gs[i], gs[j]).total);
    }
  }
}

TEST(Matrix, Writers) {
  invdel::DistanceMatrix d{{0, 3}, {3, 0}};
  std::ostringstream phy, tsv;
  invdel::write_phylip(phy, {"human", "a_very_long_name"}, d);
  EXPECT_EQ(phy.str(), "2\nhuman      0 3\na_very_lon 3 0\n");
  invdel::write_tsv(tsv, {"x", "y"}, d);
  EXPECT_EQ(tsv.str(), "\tx\ty\nx\t0\t3\ny\t3\t0\n");
}
