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

#include "test_support.hpp"

using invdel::PartialPerm;
using Pairs = std::vector<PartialPerm::Pair>;

namespace {

  PartialPerm crossing_example() {
    auto file = invdel::parse_genome_text("g1: a b c d e f g h\ng2: e i b a c h\n");
    return invdel::sigma_from_frames(file.genomes[0].frame, file.genomes[1].frame);
  }

  // Crossing pairs by definition, independent of the library.
  Pairs naive_crossings(PartialPerm const& f) {
    Pairs out;
    for (size_t i = 1; i <= f.source_size(); ++i) {
      for (size_t j = i + 1; j <= f.source_size(); ++j) {
        if (f.is_defined(i) && f.is_defined(j) && f.image(i) > f.image(j)) {
          out.emplace_back(i, j);
        }
      }
    }
    return out;
  }

}  // namespace

TEST(PartialPerm, ComposeProduct) {
  auto f = PartialPerm::from_pairs(5, 5, {{1, 4}, {2, 2}, {4, 3}, {5, 5}});
  auto g = PartialPerm::from_pairs(5, 4, {{1, 1}, {2, 4}, {3, 2}, {5, 3}});
  auto fg = invdel::compose(f, g);
  EXPECT_EQ(fg.pairs(), (Pairs{{2, 4}, {4, 2}, {5, 3}}));
  EXPECT_EQ(fg.source_size(), 5u);
  EXPECT_EQ(fg.target_size(), 4u);
  EXPECT_EQ(invdel::compose(f, PartialPerm::identity(5)), f);
  EXPECT_EQ(invdel::compose(f, PartialPerm(5, 3)).rank(), 0u);
}

TEST(PartialPerm, ComposeSizeMismatch) {
  EXPECT_THROW(invdel::compose(PartialPerm::identity(3), PartialPerm::identity(4)),
               invdel::InvalidArgument);
}

TEST(PartialPerm, Inverse) {
  auto f = PartialPerm::from_pairs(5, 4, {{2, 4}, {4, 2}, {5, 3}});
  auto inv = invdel::inverse(f);
  EXPECT_EQ(inv.source_size(), 4u);
  EXPECT_EQ(inv.pairs(), (Pairs{{2, 4}, {3, 5}, {4, 2}}));
  EXPECT_EQ(invdel::inverse(PartialPerm::identity(4)), PartialPerm::identity(4));
  auto empty = invdel::inverse(PartialPerm(3, 5));
  EXPECT_EQ(empty.source_size(), 5u);
  EXPECT_EQ(empty.rank(), 0u);
}

TEST(PartialPerm, ConstructionChecks) {
  EXPECT_THROW(PartialPerm::from_images(3, 3, {1, 1, 0}), invdel::InvalidArgument);
  EXPECT_THROW(PartialPerm::from_images(3, 3, {4, 0, 0}), invdel::InvalidArgument);
  EXPECT_THROW(PartialPerm::from_pairs(3, 3, {{1, 2}, {1, 3}}), invdel::InvalidArgument);
  EXPECT_THROW(PartialPerm(17, 2), invdel::CapacityError);
  EXPECT_NO_THROW(PartialPerm(16, 16));
}

TEST(PartialPerm, SigmaFromFrames) {
  auto s = crossing_example();
  EXPECT_EQ(s.source_size(), 8u);
  EXPECT_EQ(s.target_size(), 6u);
  EXPECT_EQ(s.pairs(), (Pairs{{1, 4}, {2, 3}, {3, 5}, {5, 1}, {8, 6}}));
  EXPECT_FALSE(invdel::is_order_preserving(s));
  EXPECT_FALSE(invdel::is_orientation_preserving(s));

  auto file = invdel::parse_genome_text("x: a b c\ny: d e\n");
  auto const& x = file.genomes[0].frame;
  EXPECT_EQ(invdel::sigma_from_frames(x, x), PartialPerm::identity(3));
  EXPECT_EQ(invdel::sigma_from_frames(x, file.genomes[1].frame).rank(), 0u);
}

TEST(PartialPerm, Crossings) {
  auto c = invdel::crossings(crossing_example());
  EXPECT_EQ(c.count, 4u);
  EXPECT_EQ(c.pairs, (Pairs{{1, 2}, {1, 5}, {2, 5}, {3, 5}}));
  EXPECT_EQ(invdel::crossings(PartialPerm::identity(6)).count, 0u);
}

TEST(PartialPerm, OrderPreservingDeletion) {
  auto d = PartialPerm::from_pairs(5, 4, {{1, 1}, {3, 2}, {4, 3}, {5, 4}});
  EXPECT_TRUE(invdel::is_order_preserving(d));
  EXPECT_TRUE(invdel::is_order_preserving(PartialPerm(4, 4)));
}

TEST(PartialPerm, Orientation) {
  EXPECT_TRUE(invdel::is_orientation_preserving(PartialPerm::from_images(2, 2, {2, 1})));
  EXPECT_TRUE(invdel::is_orientation_preserving(PartialPerm::from_images(4, 4, {3, 4, 1, 2})));
  EXPECT_FALSE(invdel::is_orientation_preserving(PartialPerm::from_images(3, 3, {3, 2, 1})));
  invdel::test::for_each_pperm(3, 3, [](PartialPerm const& f) {
    if (f.rank() <= 1) {
      EXPECT_TRUE(invdel::is_orientation_preserving(f));
    }
  });
}

TEST(PartialPerm, Embed) {
  auto d = PartialPerm::from_pairs(5, 4, {{1, 1}, {3, 2}, {4, 3}, {5, 4}});
  auto e = invdel::embed(d, 5);
  EXPECT_EQ(e.source_size(), 5u);
  EXPECT_EQ(e.target_size(), 5u);
  EXPECT_EQ(e.pairs(), d.pairs());
  EXPECT_EQ(invdel::embed(PartialPerm::identity(3), 6), PartialPerm::partial_identity(6, 3));
  EXPECT_EQ(invdel::embed(crossing_example(), 8).pairs(), crossing_example().pairs());
  EXPECT_THROW(invdel::embed(d, 4), invdel::InvalidArgument);
}

TEST(PartialPerm, Diagram) {
  auto text = invdel::diagram(PartialPerm::from_pairs(3, 2, {{1, 2}, {3, 1}}));
  EXPECT_NE(text.find("1 -> 2"), std::string::npos);
  EXPECT_NE(text.find("3 -> 1"), std::string::npos);
}

TEST(PartialPermProperty, Associativity) {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 500; ++t) {
    size_t a = 1 + rng() % 6, b = 1 + rng() % 6, c = 1 + rng() % 6, d = 1 + rng() % 6;
    auto f = invdel::test::random_pperm(rng, a, b);
    auto g = invdel::test::random_pperm(rng, b, c);
    auto h = invdel::test::random_pperm(rng, c, d);
    EXPECT_EQ((f * g) * h, f * (g * h));
    EXPECT_LE((f * g).rank(), std::min(f.rank(), g.rank()));
  }
}

TEST(PartialPermProperty, InverseMonoidAxioms) {
  std::mt19937_64 rng(12);
  for (int t = 0; t < 500; ++t) {
    auto f = invdel::test::random_pperm(rng, 1 + rng() % 8, 1 + rng() % 8);
    auto fi = invdel::inverse(f);
    EXPECT_EQ(f * fi * f, f);
    EXPECT_EQ(fi * f * fi, fi);
  }
}

TEST(PartialPermProperty, CrossingsAndPredicates) {
  std::mt19937_64 rng(13);
  for (int t = 0; t < 1000; ++t) {
    auto f = invdel::test::random_pperm(rng, 1 + rng() % 9, 1 + rng() % 9);
    auto c = invdel::crossings(f);
    EXPECT_EQ(c.pairs, naive_crossings(f));
    EXPECT_EQ(invdel::is_order_preserving(f), c.count == 0);
    if (invdel::is_order_preserving(f)) {
      EXPECT_TRUE(invdel::is_orientation_preserving(f));
    }
  }
}

TEST(PartialPermProperty, SigmaInverse) {
  std::mt19937_64 rng(14);
  auto alphabet = invdel::letter_alphabet(10);
  for (int t = 0; t < 200; ++t) {
    std::vector<invdel::RegionId> all(10);
    std::iota(all.begin(), all.end(), 0);
    std::shuffle(all.begin(), all.end(), rng);
    std::vector<invdel::RegionId> a(all.begin(), all.begin() + 1 + rng() % 10);
    std::shuffle(all.begin(), all.end(), rng);
    std::vector<invdel::RegionId> b(all.begin(), all.begin() + 1 + rng() % 10);
    invdel::ReferenceFrame g1(a), g2(b);
    EXPECT_EQ(invdel::inverse(invdel::sigma_from_frames(g1, g2)),
              invdel::sigma_from_frames(g2, g1));
  }
}

TEST(PartialPerm, HashAndOrder) {
  auto f = PartialPerm::from_images(3, 3, {2, 0, 1});
  auto g = PartialPerm::from_images(3, 3, {2, 0, 1});
  EXPECT_EQ(std::hash<PartialPerm>{}(f), std::hash<PartialPerm>{}(g));
  EXPECT_EQ(f <=> g, std::strong_ordering::equal);
  EXPECT_NE(f, PartialPerm::identity(3));
}
