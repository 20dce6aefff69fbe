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

// Cayley graphs of the symmetric inverse monoid I_n and their D-classes.
//
// I_n is generated by the circular adjacent transpositions T_n together with
// the partial identity on {1, ..., n-1}. enumerate_monoid() closes the
// identity under right multiplication (breadth first, generators in fixed
// order), so element indices are deterministic, and records both the right
// and the left Cayley edges. The union graph adds left edges labelled by
// the generators of I_m embedded in I_n; the D-class graph keeps the
// rank-r vertices and the non-loop edges between them.

#ifndef INVDEL_CAYLEY_HPP_
#define INVDEL_CAYLEY_HPP_

#include <algorithm>
#include <array>
#include <cstdint>
#include <cstdlib>
#include <deque>
#include <filesystem>
#include <fstream>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <tuple>
#include <unordered_map>
#include <vector>

#include "invdel/algebra.hpp"
#include "invdel/error.hpp"
#include "invdel/pperm.hpp"

namespace invdel {

  inline constexpr size_t kMaxCayleyDegree = 8;

  // C(n,r)^2 r!
  inline uint64_t dclass_size(size_t n, size_t r) {
    if (r > n) {
      return 0;
    }
    uint64_t binom = 1;
    for (size_t k = 1; k <= r; ++k) {
      binom = binom * (n - r + k) / k;
    }
    uint64_t fact = 1;
    for (size_t k = 2; k <= r; ++k) {
      fact *= k;
    }
    return binom * binom * fact;
  }

  // |I_{n,n}| = sum_r C(n,r)^2 r!
  inline uint64_t symmetric_inverse_monoid_size(size_t n) {
    uint64_t total = 0;
    for (size_t r = 0; r <= n; ++r) {
      total += dclass_size(n, r);
    }
    return total;
  }

  ////////////////////////////////////////////////////////////////////////////
  // Packed elements of I_{n,n}: one nibble per source point, 0 = undefined.
  ////////////////////////////////////////////////////////////////////////////

  using Code = uint64_t;

  inline Code encode(PartialPerm const& f) {
    if (f.source_size() > 15 || f.target_size() > 15) {
      throw CapacityError("encode: partial permutation too large to pack");
    }
    Code c = 0;
    for (size_t i = 1; i <= f.source_size(); ++i) {
      c |= Code{f.image(i)} << (4 * (i - 1));
    }
    return c;
  }

  inline PartialPerm decode(Code c, size_t n) {
    std::array<size_t, 16> img{};
    for (size_t i = 0; i < n; ++i) {
      img[i] = (c >> (4 * i)) & 0xF;
    }
    return PartialPerm::from_images(n, n, std::span<size_t const>(img.data(), n));
  }

  inline size_t code_rank(Code c, size_t n) noexcept {
    size_t r = 0;
    for (size_t i = 0; i < n; ++i) {
      r += ((c >> (4 * i)) & 0xF) != 0;
    }
    return r;
  }

  namespace detail {
    using Table = std::array<uint8_t, 16>;  // 1-based image table, 0 = undefined

    inline Table table_of(PartialPerm const& g) {
      Table t{};
      for (size_t i = 1; i <= g.source_size(); ++i) {
        t[i] = static_cast<uint8_t>(g.image(i));
      }
      return t;
    }

    // x * g
    inline Code right_mul(Code x, Table const& g, size_t n) noexcept {
      Code y = 0;
      for (size_t i = 0; i < n; ++i) {
        Code v = (x >> (4 * i)) & 0xF;
        if (v != 0) {
          y |= Code{g[v]} << (4 * i);
        }
      }
      return y;
    }

    // g * x
    inline Code left_mul(Table const& g, Code x, size_t n) noexcept {
      Code y = 0;
      for (size_t i = 0; i < n; ++i) {
        uint8_t j = g[i + 1];
        if (j != 0) {
          y |= ((x >> (4 * (j - 1))) & 0xF) << (4 * i);
        }
      }
      return y;
    }
  }  // namespace detail

  // Generating set of I_{n,n}: T_n without repeats, then id_{1..n-1}.
  struct GenSet {
    size_t n = 0;
    std::vector<PartialPerm> elements;
    // Inversion generators, parallel to the first `inversion_count` elements.
    std::vector<Generator> inversions;

    size_t size() const noexcept {
      return elements.size();
    }

    size_t inversion_count() const noexcept {
      return inversions.size();
    }

    bool is_inversion(size_t g) const noexcept {
      return g < inversions.size();
    }
  };

  inline GenSet make_genset(size_t n) {
    if (n < 1) {
      throw InvalidArgument("make_genset: n must be positive");
    }
    GenSet x;
    x.n = n;
    for (size_t i = 1; i <= n; ++i) {
      auto g = Generator::inv(i, n);
      auto e = eval_generator(g);
      if (std::find(x.elements.begin(), x.elements.end(), e) == x.elements.end()) {
        x.elements.push_back(e);
        x.inversions.push_back(g);
      }
    }
    x.elements.push_back(PartialPerm::partial_identity(n, n - 1));
    return x;
  }

  class MonoidEnumeration {
   public:
    size_t degree() const noexcept {
      return _gens.n;
    }

    size_t size() const noexcept {
      return _codes.size();
    }

    GenSet const& generators() const noexcept {
      return _gens;
    }

    Code code(size_t idx) const {
      return _codes.at(idx);
    }

    std::vector<Code> const& codes() const noexcept {
      return _codes;
    }

    PartialPerm element(size_t idx) const {
      return decode(_codes.at(idx), _gens.n);
    }

    std::optional<size_t> index_of(Code c) const {
      auto it = _index.find(c);
      if (it == _index.end()) {
        return std::nullopt;
      }
      return it->second;
    }

    std::optional<size_t> index_of(PartialPerm const& f) const {
      if (f.source_size() != _gens.n || f.target_size() != _gens.n) {
        return std::nullopt;
      }
      return index_of(encode(f));
    }

    // Index of element(idx) * generator g.
    uint32_t right(size_t idx, size_t g) const {
      return _right[idx * _gens.size() + g];
    }

    // Index of generator g * element(idx).
    uint32_t left(size_t idx, size_t g) const {
      return _left[idx * _gens.size() + g];
    }

   private:
    friend MonoidEnumeration enumerate_monoid(size_t);

    GenSet _gens;
    std::vector<Code> _codes;
    std::unordered_map<Code, uint32_t> _index;
    std::vector<uint32_t> _right;
    std::vector<uint32_t> _left;
  };

  inline MonoidEnumeration enumerate_monoid(size_t n) {
    if (n < 1 || n > kMaxCayleyDegree) {
      throw CapacityError("enumerate_monoid: n=" + std::to_string(n) + " outside 1.."
                          + std::to_string(kMaxCayleyDegree));
    }
    MonoidEnumeration e;
    e._gens = make_genset(n);
    size_t const k = e._gens.size();
    std::vector<detail::Table> tables;
    for (auto const& g : e._gens.elements) {
      tables.push_back(detail::table_of(g));
    }
    auto expected = symmetric_inverse_monoid_size(n);
    e._codes.reserve(expected);
    e._index.reserve(expected);
    e._right.reserve(expected * k);

    Code id = encode(PartialPerm::identity(n));
    e._codes.push_back(id);
    e._index.emplace(id, 0);
    for (size_t pos = 0; pos < e._codes.size(); ++pos) {
      Code x = e._codes[pos];
      for (size_t g = 0; g < k; ++g) {
        Code y = detail::right_mul(x, tables[g], n);
        auto [it, inserted] = e._index.emplace(y, static_cast<uint32_t>(e._codes.size()));
        if (inserted) {
          e._codes.push_back(y);
        }
        e._right.push_back(it->second);
      }
    }
    e._left.resize(e._codes.size() * k);
    for (size_t pos = 0; pos < e._codes.size(); ++pos) {
      for (size_t g = 0; g < k; ++g) {
        e._left[pos * k + g] = e._index.at(detail::left_mul(tables[g], e._codes[pos], n));
      }
    }
    return e;
  }

  enum class Side : uint8_t { Left = 0, Right = 1 };

  // Union of the left Cayley graph for the embedded generators of I_m and
  // the right Cayley graph of I_n. Left edges are defined at every node of
  // I_n. Holds a reference to the enumeration, which must outlive it.
  class UnionGraph {
   public:
    size_t n() const noexcept {
      return _enum->degree();
    }

    size_t m() const noexcept {
      return _left_gens.n;
    }

    size_t node_count() const noexcept {
      return _enum->size();
    }

    MonoidEnumeration const& enumeration() const noexcept {
      return *_enum;
    }

    GenSet const& left_generators() const noexcept {
      return _left_gens;
    }

    GenSet const& right_generators() const noexcept {
      return _enum->generators();
    }

    uint32_t left(size_t node, size_t g) const {
      return _left[node * _left_gens.size() + g];
    }

    uint32_t right(size_t node, size_t g) const {
      return _enum->right(node, g);
    }

    size_t left_edge_count() const noexcept {
      return _left.size();
    }

    size_t right_edge_count() const noexcept {
      return _enum->size() * _enum->generators().size();
    }

   private:
    friend UnionGraph build_union(size_t, size_t, MonoidEnumeration const&);

    MonoidEnumeration const* _enum = nullptr;
    GenSet _left_gens;
    std::vector<uint32_t> _left;
  };

  inline UnionGraph build_union(size_t m, size_t n, MonoidEnumeration const& e) {
    if (m > n) {
      throw InvalidArgument("build_union: m=" + std::to_string(m) + " > n=" + std::to_string(n));
    }
    if (e.degree() != n) {
      throw InvalidArgument("build_union: enumeration is for degree "
                            + std::to_string(e.degree()) + ", not " + std::to_string(n));
    }
    if (m < 1) {
      throw InvalidArgument("build_union: m must be positive");
    }
    UnionGraph u;
    u._enum = &e;
    u._left_gens = make_genset(m);
    size_t const k = u._left_gens.size();
    if (m == n) {
      u._left.resize(e.size() * k);
      for (size_t x = 0; x < e.size(); ++x) {
        for (size_t g = 0; g < k; ++g) {
          u._left[x * k + g] = e.left(x, g);
        }
      }
      return u;
    }
    std::vector<detail::Table> tables;
    for (auto const& g : u._left_gens.elements) {
      tables.push_back(detail::table_of(embed(g, n)));
    }
    u._left.resize(e.size() * k);
    for (size_t x = 0; x < e.size(); ++x) {
      for (size_t g = 0; g < k; ++g) {
        u._left[x * k + g] = static_cast<uint32_t>(*e.index_of(detail::left_mul(tables[g], e.code(x), n)));
      }
    }
    return u;
  }

  struct DClassEdge {
    uint32_t source;
    Side side;
    uint8_t generator;
    uint32_t target;

    friend bool operator==(DClassEdge const&, DClassEdge const&) = default;
    friend auto operator<=>(DClassEdge const& a, DClassEdge const& b) {
      return std::tie(a.source, a.side, a.generator, a.target)
             <=> std::tie(b.source, b.side, b.generator, b.target);
    }
  };

  // Subgraph of the union graph induced by the rank-r elements. Vertices are
  // sorted by code; edges are sorted and exclude loops.
  class DClassGraph {
   public:
    DClassGraph() = default;

    DClassGraph(size_t n, size_t m, size_t r, std::vector<Code> vertices,
                std::vector<DClassEdge> edges)
        : _n(n), _m(m), _r(r), _vertices(std::move(vertices)), _edges(std::move(edges)) {
      std::sort(_edges.begin(), _edges.end());
      _offsets.assign(_vertices.size() + 1, 0);
      for (auto const& e : _edges) {
        if (e.source >= _vertices.size() || e.target >= _vertices.size()) {
          throw InvalidArgument("DClassGraph: edge endpoint out of range");
        }
        ++_offsets[e.source + 1];
      }
      for (size_t v = 0; v < _vertices.size(); ++v) {
        _offsets[v + 1] += _offsets[v];
      }
    }

    size_t n() const noexcept {
      return _n;
    }

    size_t m() const noexcept {
      return _m;
    }

    size_t r() const noexcept {
      return _r;
    }

    size_t vertex_count() const noexcept {
      return _vertices.size();
    }

    size_t edge_count() const noexcept {
      return _edges.size();
    }

    std::vector<Code> const& vertices() const noexcept {
      return _vertices;
    }

    std::vector<DClassEdge> const& edges() const noexcept {
      return _edges;
    }

    PartialPerm element(size_t v) const {
      return decode(_vertices.at(v), _n);
    }

    std::optional<size_t> find(Code c) const {
      auto it = std::lower_bound(_vertices.begin(), _vertices.end(), c);
      if (it == _vertices.end() || *it != c) {
        return std::nullopt;
      }
      return static_cast<size_t>(it - _vertices.begin());
    }

    // Outgoing edges of v.
    std::span<DClassEdge const> out(size_t v) const {
      return {_edges.data() + _offsets[v], _offsets[v + 1] - _offsets[v]};
    }

    friend bool operator==(DClassGraph const& a, DClassGraph const& b) {
      return a._n == b._n && a._m == b._m && a._r == b._r && a._vertices == b._vertices
             && a._edges == b._edges;
    }

   private:
    size_t _n = 0, _m = 0, _r = 0;
    std::vector<Code> _vertices;
    std::vector<DClassEdge> _edges;
    std::vector<size_t> _offsets{0};
  };

  inline DClassGraph induce_dclass(UnionGraph const& u, size_t r) {
    size_t const n = u.n();
    if (r > n) {
      throw InvalidArgument("induce_dclass: r=" + std::to_string(r) + " > n=" + std::to_string(n));
    }
    auto const& e = u.enumeration();
    std::vector<uint32_t> members;
    for (size_t x = 0; x < e.size(); ++x) {
      if (code_rank(e.code(x), n) == r) {
        members.push_back(static_cast<uint32_t>(x));
      }
    }
    std::sort(members.begin(), members.end(),
              [&](uint32_t a, uint32_t b) { return e.code(a) < e.code(b); });
    std::vector<Code> vertices;
    std::unordered_map<uint32_t, uint32_t> local;
    for (auto x : members) {
      local.emplace(x, static_cast<uint32_t>(vertices.size()));
      vertices.push_back(e.code(x));
    }
    std::vector<DClassEdge> edges;
    auto add = [&](uint32_t src, Side side, size_t g, uint32_t y) {
      auto it = local.find(y);
      if (it != local.end() && it->second != src) {
        edges.push_back({src, side, static_cast<uint8_t>(g), it->second});
      }
    };
    for (uint32_t v = 0; v < members.size(); ++v) {
      for (size_t g = 0; g < u.left_generators().size(); ++g) {
        add(v, Side::Left, g, u.left(members[v], g));
      }
      for (size_t g = 0; g < u.right_generators().size(); ++g) {
        add(v, Side::Right, g, u.right(members[v], g));
      }
    }
    return DClassGraph(n, u.m(), r, std::move(vertices), std::move(edges));
  }

  inline DClassGraph build_dclass(size_t n, size_t m, size_t r) {
    auto e = enumerate_monoid(n);
    return induce_dclass(build_union(m, n, e), r);
  }

  ////////////////////////////////////////////////////////////////////////////
  // Persistent cache
  //
  // Little-endian layout: "IDCG", u32 version, u32 n, u32 m, u32 r,
  // u64 vertex count, u64 edge count, u64 vertex codes (sorted),
  // edges as (u32 source, u8 side, u8 generator, u32 target), and a trailing
  // u64 FNV-1a checksum of everything before it.
  ////////////////////////////////////////////////////////////////////////////

  inline constexpr uint32_t kCacheFormatVersion = 1;
  inline constexpr char kCacheMagic[4] = {'I', 'D', 'C', 'G'};

  inline std::filesystem::path default_cache_dir() {
    if (char const* env = std::getenv("INVDEL_CACHE"); env != nullptr && *env != '\0') {
      return env;
    }
    if (char const* xdg = std::getenv("XDG_CACHE_HOME"); xdg != nullptr && *xdg != '\0') {
      return std::filesystem::path(xdg) / "invdel";
    }
    if (char const* home = std::getenv("HOME"); home != nullptr && *home != '\0') {
      return std::filesystem::path(home) / ".cache" / "invdel";
    }
    return std::filesystem::temp_directory_path() / "invdel";
  }

  inline std::filesystem::path cache_file(std::filesystem::path const& dir, size_t n, size_t m,
                                          size_t r) {
    std::string name = "delta_" + std::to_string(n) + "_" + std::to_string(r);
    if (m != n) {
      name += "_m" + std::to_string(m);
    }
    return dir / (name + ".bin");
  }

  namespace detail {
    inline uint64_t fnv1a(std::string_view bytes) {
      uint64_t h = 0xcbf29ce484222325ULL;
      for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
      }
      return h;
    }

    template <typename T>
    void put_le(std::string& out, T v) {
      for (size_t k = 0; k < sizeof(T); ++k) {
        out.push_back(static_cast<char>((static_cast<uint64_t>(v) >> (8 * k)) & 0xFF));
      }
    }

    class Reader {
     public:
      explicit Reader(std::string_view bytes) : _bytes(bytes) {}

      template <typename T>
      T get() {
        if (_pos + sizeof(T) > _bytes.size()) {
          throw CacheIntegrityError("cache file truncated");
        }
        uint64_t v = 0;
        for (size_t k = 0; k < sizeof(T); ++k) {
          v |= uint64_t{static_cast<unsigned char>(_bytes[_pos + k])} << (8 * k);
        }
        _pos += sizeof(T);
        return static_cast<T>(v);
      }

      size_t remaining() const noexcept {
        return _bytes.size() - _pos;
      }

     private:
      std::string_view _bytes;
      size_t _pos = 0;
    };
  }  // namespace detail

  inline std::string serialize(DClassGraph const& g) {
    std::string out(kCacheMagic, 4);
    detail::put_le<uint32_t>(out, kCacheFormatVersion);
    detail::put_le<uint32_t>(out, static_cast<uint32_t>(g.n()));
    detail::put_le<uint32_t>(out, static_cast<uint32_t>(g.m()));
    detail::put_le<uint32_t>(out, static_cast<uint32_t>(g.r()));
    detail::put_le<uint64_t>(out, g.vertex_count());
    detail::put_le<uint64_t>(out, g.edge_count());
    for (Code c : g.vertices()) {
      detail::put_le<uint64_t>(out, c);
    }
    for (auto const& e : g.edges()) {
      detail::put_le<uint32_t>(out, e.source);
      detail::put_le<uint8_t>(out, static_cast<uint8_t>(e.side));
      detail::put_le<uint8_t>(out, e.generator);
      detail::put_le<uint32_t>(out, e.target);
    }
    detail::put_le<uint64_t>(out, detail::fnv1a(out));
    return out;
  }

  // nullopt when the bytes are a different format version or describe other
  // parameters; CacheIntegrityError when they are damaged.
  inline std::optional<DClassGraph> deserialize(std::string_view bytes, size_t n, size_t m,
                                                size_t r) {
    if (bytes.size() < 4 || bytes.substr(0, 4) != std::string_view(kCacheMagic, 4)) {
      return std::nullopt;
    }
    detail::Reader in(bytes.substr(4));
    if (in.get<uint32_t>() != kCacheFormatVersion) {
      return std::nullopt;
    }
    uint32_t fn = in.get<uint32_t>(), fm = in.get<uint32_t>(), fr = in.get<uint32_t>();
    if (fn != n || fm != m || fr != r) {
      return std::nullopt;
    }
    if (bytes.size() < 8) {
      throw CacheIntegrityError("cache file truncated");
    }
    uint64_t stored = detail::Reader(bytes.substr(bytes.size() - 8)).get<uint64_t>();
    if (stored != detail::fnv1a(bytes.substr(0, bytes.size() - 8))) {
      throw CacheIntegrityError("cache checksum mismatch");
    }
    uint64_t nv = in.get<uint64_t>(), ne = in.get<uint64_t>();
    if (nv * 8 + ne * 10 + 8 != in.remaining()) {
      throw CacheIntegrityError("cache size does not match its header");
    }
    std::vector<Code> vertices(nv);
    for (auto& c : vertices) {
      c = in.get<uint64_t>();
    }
    if (!std::is_sorted(vertices.begin(), vertices.end())) {
      throw CacheIntegrityError("cache vertices not sorted");
    }
    std::vector<DClassEdge> edges(ne);
    for (auto& e : edges) {
      e.source = in.get<uint32_t>();
      auto side = in.get<uint8_t>();
      if (side > 1) {
        throw CacheIntegrityError("cache edge has an invalid side");
      }
      e.side = static_cast<Side>(side);
      e.generator = in.get<uint8_t>();
      e.target = in.get<uint32_t>();
      if (e.source >= nv || e.target >= nv) {
        throw CacheIntegrityError("cache edge endpoint out of range");
      }
    }
    return DClassGraph(n, m, r, std::move(vertices), std::move(edges));
  }

  inline void cache_store(std::filesystem::path const& dir, DClassGraph const& g) {
    std::filesystem::create_directories(dir);
    auto path = cache_file(dir, g.n(), g.m(), g.r());
    auto tmp = path;
    tmp += ".tmp";
    {
      std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
      auto bytes = serialize(g);
      out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
      if (!out) {
        throw Error("cannot write cache file " + tmp.string());
      }
    }
    std::filesystem::rename(tmp, path);
  }

  inline std::optional<DClassGraph> cache_load(std::filesystem::path const& dir, size_t n,
                                               size_t m, size_t r) {
    auto path = cache_file(dir, n, m, r);
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      return std::nullopt;
    }
    std::string bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return deserialize(bytes, n, m, r);
  }

  struct CachedDClass {
    DClassGraph graph;
    bool from_cache = false;
  };

  // Loads the graph, rebuilding (and rewriting the file) when it is missing,
  // stale or damaged.
  inline CachedDClass load_or_build(std::filesystem::path const& dir, size_t n, size_t m,
                                    size_t r) {
    try {
      if (auto g = cache_load(dir, n, m, r)) {
        return {std::move(*g), true};
      }
    } catch (CacheIntegrityError const&) {
      // rebuilt below
    }
    CachedDClass out{build_dclass(n, m, r), false};
    cache_store(dir, out.graph);
    return out;
  }

  // Thread-safe memo of D-class graphs keyed by (n, m, r), optionally backed
  // by a cache directory.
  class DClassStore {
   public:
    DClassStore() = default;

    explicit DClassStore(std::optional<std::filesystem::path> dir) : _dir(std::move(dir)) {}

    std::shared_ptr<DClassGraph const> get(size_t n, size_t m, size_t r) {
      std::lock_guard lock(_mutex);
      auto key = std::make_tuple(n, m, r);
      if (auto it = _graphs.find(key); it != _graphs.end()) {
        return it->second;
      }
      std::shared_ptr<DClassGraph const> g;
      if (_dir) {
        g = std::make_shared<DClassGraph const>(load_or_build(*_dir, n, m, r).graph);
      } else {
        auto const& e = enumeration(n);
        g = std::make_shared<DClassGraph const>(induce_dclass(build_union(m, n, e), r));
      }
      _graphs.emplace(key, g);
      return g;
    }

   private:
    MonoidEnumeration const& enumeration(size_t n) {
      auto it = _enums.find(n);
      if (it == _enums.end()) {
        it = _enums.emplace(n, std::make_unique<MonoidEnumeration>(enumerate_monoid(n))).first;
      }
      return *it->second;
    }

    std::optional<std::filesystem::path> _dir;
    std::mutex _mutex;
    std::map<std::tuple<size_t, size_t, size_t>, std::shared_ptr<DClassGraph const>> _graphs;
    std::map<size_t, std::unique_ptr<MonoidEnumeration>> _enums;
  };

}  // namespace invdel

#endif  // INVDEL_CAYLEY_HPP_
