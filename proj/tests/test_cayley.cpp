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

#include <filesystem>
#include <fstream>
#include <thread>

#include "test_support.hpp"

namespace fs = std::filesystem;
using invdel::PartialPerm;

namespace {

  class TempDir {
   public:
    TempDir() {
      _path = fs::temp_directory_path()
              / ("invdel_test_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed())
                 + "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
      fs::remove_all(_path);
      fs::create_directories(_path);
    }
    ~TempDir() {
      std::error_code ec;
      fs::remove_all(_path, ec);
    }
    fs::path const& path() const {
      return _path;
    }

   private:
    fs::path _path;
  };

  // Vertices reachable from v, following edges forwards.
  size_t reachable(invdel::DClassGraph const& g, size_t v) {
    std::vector<bool> seen(g.vertex_count(), false);
    std::vector<size_t> stack{v};
    seen[v] = true;
    size_t count = 1;
    while (!stack.empty()) {
      auto x = stack.back();
      stack.pop_back();
      for (auto const& e : g.out(x)) {
        if (!seen[e.target]) {
          seen[e.target] = true;
          ++count;
          stack.push_back(e.target);
        }
      }
    }
    return count;
  }

}  // namespace

TEST(Enumeration, MatchesClosedForm) {
  uint64_t const expected[] = {0, 2, 7, 34, 209, 1546, 13327};
  for (size_t n = 1; n <= 6; ++n) {
    auto e = invdel::enumerate_monoid(n);
    EXPECT_EQ(e.size(), expected[n]);
    EXPECT_EQ(invdel::symmetric_inverse_monoid_size(n), expected[n]);
  }
}

TEST(Enumeration, ElementsAreAllOfIn) {
  for (size_t n = 1; n <= 4; ++n) {
    auto e = invdel::enumerate_monoid(n);
    size_t count = 0;
    invdel::test::for_each_pperm(n, n, [&](PartialPerm const& f) {
      ++count;
      EXPECT_TRUE(e.index_of(f).has_value()) << f.to_string();
    });
    EXPECT_EQ(count, e.size());
  }
}

TEST(Enumeration, EdgesAreProducts) {
  auto e = invdel::enumerate_monoid(4);
  auto const& gens = e.generators().elements;
  EXPECT_EQ(e.code(0), invdel::encode(PartialPerm::identity(4)));
  for (size_t x = 0; x < e.size(); ++x) {
    for (size_t g = 0; g < gens.size(); ++g) {
      EXPECT_EQ(e.element(e.right(x, g)), e.element(x) * gens[g]);
      EXPECT_EQ(e.element(e.left(x, g)), gens[g] * e.element(x));
      EXPECT_LE(e.element(e.right(x, g)).rank(), e.element(x).rank());
    }
  }
}

TEST(Enumeration, Deterministic) {
  EXPECT_EQ(invdel::enumerate_monoid(5).codes(), invdel::enumerate_monoid(5).codes());
}

TEST(Enumeration, CapacityGuard) {
  EXPECT_THROW(invdel::enumerate_monoid(9), invdel::CapacityError);
  EXPECT_THROW(invdel::enumerate_monoid(0), invdel::CapacityError);
}

TEST(Enumeration, GeneratingSet) {
  EXPECT_EQ(invdel::make_genset(2).size(), 2u);  // s1;2 = s2;2, plus id{1}
  EXPECT_EQ(invdel::make_genset(5).size(), 6u);
  EXPECT_EQ(invdel::make_genset(5).elements.back(), PartialPerm::partial_identity(5, 4));
}

TEST(Codes, RoundTrip) {
  std::mt19937_64 rng(41);
  for (int t = 0; t < 300; ++t) {
    size_t n = 1 + rng() % 8;
    auto f = invdel::test::random_pperm(rng, n, n);
    EXPECT_EQ(invdel::decode(invdel::encode(f), n), f);
    EXPECT_EQ(invdel::code_rank(invdel::encode(f), n), f.rank());
  }
}

TEST(Union, Construction) {
  auto e3 = invdel::enumerate_monoid(3);
  EXPECT_THROW(invdel::build_union(4, 3, e3), invdel::InvalidArgument);
  EXPECT_THROW(invdel::build_union(2, 4, e3), invdel::InvalidArgument);
  auto u = invdel::build_union(3, 3, e3);
  EXPECT_EQ(u.left_edge_count(), u.right_edge_count());
  auto v = invdel::build_union(2, 3, e3);
  EXPECT_EQ(v.left_generators().size(), 2u);
  EXPECT_LE(v.left_edge_count() + v.right_edge_count(),
            (invdel::make_genset(2).size() + invdel::make_genset(3).size()) * e3.size());
  auto id1 = invdel::embed(PartialPerm::partial_identity(2, 1), 3);
  auto swap = invdel::embed(PartialPerm::transposition(2, 1, 2), 3);
  for (size_t x = 0; x < e3.size(); ++x) {
    EXPECT_EQ(e3.element(v.left(x, 0)), swap * e3.element(x));
    EXPECT_EQ(e3.element(v.left(x, 1)), id1 * e3.element(x));
  }
}

TEST(DClass, VertexCounts) {
  auto e = invdel::enumerate_monoid(4);
  auto u = invdel::build_union(4, 4, e);
  auto d0 = invdel::induce_dclass(u, 0);
  EXPECT_EQ(d0.vertex_count(), 1u);
  EXPECT_EQ(d0.edge_count(), 0u);
  EXPECT_EQ(invdel::induce_dclass(u, 4).vertex_count(), 24u);
  EXPECT_EQ(invdel::induce_dclass(u, 2).vertex_count(), 72u);
  for (size_t r = 0; r <= 4; ++r) {
    EXPECT_EQ(invdel::induce_dclass(u, r).vertex_count(), invdel::dclass_size(4, r));
  }
  EXPECT_THROW(invdel::induce_dclass(u, 5), invdel::InvalidArgument);
}

TEST(DClass, EdgesStayInClassAndUseTheRightGenerators) {
  auto e = invdel::enumerate_monoid(5);
  auto u = invdel::build_union(3, 5, e);
  auto lgen = invdel::make_genset(3);
  auto rgen = invdel::make_genset(5);
  for (size_t r = 0; r <= 3; ++r) {
    auto d = invdel::induce_dclass(u, r);
    for (auto const& edge : d.edges()) {
      EXPECT_NE(edge.source, edge.target);
      auto x = d.element(edge.source), y = d.element(edge.target);
      EXPECT_EQ(x.rank(), r);
      EXPECT_EQ(y.rank(), r);
      if (edge.side == invdel::Side::Left) {
        EXPECT_EQ(invdel::embed(lgen.elements[edge.generator], 5) * x, y);
      } else {
        EXPECT_EQ(x * rgen.elements[edge.generator], y);
      }
    }
  }
}

TEST(DClass, StronglyConnected) {
  for (size_t n = 1; n <= 5; ++n) {
    auto e = invdel::enumerate_monoid(n);
    auto u = invdel::build_union(n, n, e);
    for (size_t r = 0; r <= n; ++r) {
      auto d = invdel::induce_dclass(u, r);
      for (size_t v = 0; v < d.vertex_count(); v += 1 + d.vertex_count() / 7) {
        EXPECT_EQ(reachable(d, v), d.vertex_count()) << "n=" << n << " r=" << r;
      }
    }
  }
}

TEST(Cache, RoundTrip) {
  TempDir dir;
  auto g = invdel::build_dclass(4, 4, 2);
  invdel::cache_store(dir.path(), g);
  EXPECT_TRUE(fs::exists(dir.path() / "delta_4_2.bin"));
  auto h = invdel::cache_load(dir.path(), 4, 4, 2);
  ASSERT_TRUE(h.has_value());
  EXPECT_EQ(*h, g);
  auto k = invdel::build_dclass(4, 3, 2);
  invdel::cache_store(dir.path(), k);
  EXPECT_TRUE(fs::exists(dir.path() / "delta_4_2_m3.bin"));
  EXPECT_EQ(*invdel::cache_load(dir.path(), 4, 3, 2), k);
  EXPECT_EQ(*invdel::cache_load(dir.path(), 4, 4, 2), g);
}

TEST(Cache, LayoutIsLittleEndian) {
  auto bytes = invdel::serialize(invdel::build_dclass(3, 3, 0));
  ASSERT_GE(bytes.size(), 44u);
  EXPECT_EQ(bytes.substr(0, 4), "IDCG");
  EXPECT_EQ(bytes[4], 1);
  EXPECT_EQ(bytes[5], 0);
  EXPECT_EQ(bytes[8], 3);   // n
  EXPECT_EQ(bytes[12], 3);  // m
  EXPECT_EQ(bytes[16], 0);  // r
  EXPECT_EQ(bytes[20], 1);  // one vertex
  EXPECT_EQ(bytes.size(), 4u + 16 + 16 + 8 + 8);
}

TEST(Cache, MissingAndStale) {
  TempDir dir;
  EXPECT_FALSE(invdel::cache_load(dir.path(), 4, 4, 2).has_value());
  auto g = invdel::build_dclass(4, 4, 2);
  auto bytes = invdel::serialize(g);
  bytes[4] = 99;  // format version
  {
    std::ofstream out(invdel::cache_file(dir.path(), 4, 4, 2), std::ios::binary);
    out << bytes;
  }
  EXPECT_FALSE(invdel::cache_load(dir.path(), 4, 4, 2).has_value());
  auto rebuilt = invdel::load_or_build(dir.path(), 4, 4, 2);
  EXPECT_FALSE(rebuilt.from_cache);
  EXPECT_EQ(rebuilt.graph, g);
  auto warm = invdel::load_or_build(dir.path(), 4, 4, 2);
  EXPECT_TRUE(warm.from_cache);
  EXPECT_EQ(warm.graph, g);
}

TEST(Cache, CorruptFileIsRebuilt) {
  TempDir dir;
  auto g = invdel::build_dclass(4, 4, 3);
  auto bytes = invdel::serialize(g);
  bytes[bytes.size() / 2] ^= 0x5A;
  auto path = invdel::cache_file(dir.path(), 4, 4, 3);
  {
    std::ofstream out(path, std::ios::binary);
    out << bytes;
  }
  EXPECT_THROW(invdel::cache_load(dir.path(), 4, 4, 3), invdel::CacheIntegrityError);
  auto r = invdel::load_or_build(dir.path(), 4, 4, 3);
  EXPECT_FALSE(r.from_cache);
  EXPECT_EQ(r.graph, g);
  EXPECT_EQ(*invdel::cache_load(dir.path(), 4, 4, 3), g);

  {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    out << bytes.substr(0, 30);
  }
  EXPECT_THROW(invdel::cache_load(dir.path(), 4, 4, 3), invdel::CacheIntegrityError);
}

TEST(Store, ConcurrentReaders) {
  invdel::DClassStore store;
  std::vector<std::thread> pool;
  std::vector<std::shared_ptr<invdel::DClassGraph const>> got(4);
  for (size_t t = 0; t < 4; ++t) {
    pool.emplace_back([&, t] { got[t] = store.get(5, 5, 3); });
  }
  for (auto& t : pool) {
    t.join();
  }
  for (auto const& g : got) {
    EXPECT_EQ(g.get(), got[0].get());
  }
  EXPECT_EQ(got[0]->vertex_count(), invdel::dclass_size(5, 3));
}

TEST(Store, DefaultCacheDirHonoursEnvironment) {
  ::setenv("INVDEL_CACHE", "/tmp/somewhere", 1);
  EXPECT_EQ(invdel::default_cache_dir(), fs::path("/tmp/somewhere"));
  ::unsetenv("INVDEL_CACHE");
  ::setenv("XDG_CACHE_HOME", "/tmp/xdg", 1);
  EXPECT_EQ(invdel::default_cache_dir(), fs::path("/tmp/xdg/invdel"));
  ::unsetenv("XDG_CACHE_HOME");
}
