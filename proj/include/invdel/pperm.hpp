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

// Partial permutations m -> n (elements of the symmetric inverse category).
//
// Maps are written on the right and composed left to right: (i)fg = ((i)f)g.
// Every public index is 1-based; 0 is reserved as the "undefined" image.

#ifndef INVDEL_PPERM_HPP_
#define INVDEL_PPERM_HPP_

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <cstring>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "invdel/error.hpp"

namespace invdel {

  class PartialPerm {
   public:
    static constexpr size_t kMaxDegree = 16;
    static constexpr size_t kUndefined = 0;

    using Pair = std::pair<size_t, size_t>;

    // The empty map in I_{m,n}.
    PartialPerm() = default;

    PartialPerm(size_t m, size_t n) : _m(check_size(m)), _n(check_size(n)) {}

    // `images[i - 1]` is the image of i, or kUndefined.
    static PartialPerm from_images(size_t m, size_t n,
                                   std::span<size_t const> images) {
      if (images.size() != m) {
        throw InvalidArgument("partial permutation: expected "
                              + std::to_string(m) + " images, got "
                              + std::to_string(images.size()));
      }
      PartialPerm f(m, n);
      for (size_t i = 1; i <= m; ++i) {
        f.set(i, images[i - 1]);
      }
      return f;
    }

    static PartialPerm from_images(size_t m, size_t n,
                                   std::initializer_list<size_t> images) {
      return from_images(m, n, std::span<size_t const>(images.begin(), images.size()));
    }

    static PartialPerm from_pairs(size_t m, size_t n, std::span<Pair const> pairs) {
      PartialPerm f(m, n);
      for (auto [i, j] : pairs) {
        if (i < 1 || i > m) {
          throw InvalidArgument("partial permutation: source " + std::to_string(i)
                                + " out of range 1.." + std::to_string(m));
        }
        if (f.image(i) != kUndefined) {
          throw InvalidArgument("partial permutation: source " + std::to_string(i)
                                + " mapped twice");
        }
        f.set(i, j);
      }
      return f;
    }

    static PartialPerm from_pairs(size_t m, size_t n, std::initializer_list<Pair> pairs) {
      return from_pairs(m, n, std::span<Pair const>(pairs.begin(), pairs.size()));
    }

    static PartialPerm identity(size_t n) {
      return partial_identity(n, n);
    }

    // The identity on {1, ..., k} as an element of I_{n,n}.
    static PartialPerm partial_identity(size_t n, size_t k) {
      if (k > n) {
        throw InvalidArgument("partial identity: k > n");
      }
      PartialPerm f(n, n);
      for (size_t i = 1; i <= k; ++i) {
        f._img[i - 1] = static_cast<uint8_t>(i);
      }
      f._rank = static_cast<uint8_t>(k);
      return f;
    }

    // The transposition (a, b) of {1, ..., n} as a full permutation.
    static PartialPerm transposition(size_t n, size_t a, size_t b) {
      if (a < 1 || a > n || b < 1 || b > n) {
        throw InvalidArgument("transposition: point out of range");
      }
      PartialPerm f = identity(n);
      std::swap(f._img[a - 1], f._img[b - 1]);
      return f;
    }

    size_t source_size() const noexcept {
      return _m;
    }

    size_t target_size() const noexcept {
      return _n;
    }

    size_t rank() const noexcept {
      return _rank;
    }

    // kUndefined when i is outside the domain.
    size_t image(size_t i) const noexcept {
      return _img[i - 1];
    }

    bool is_defined(size_t i) const noexcept {
      return _img[i - 1] != 0;
    }

    bool is_full_permutation() const noexcept {
      return _m == _n && _rank == _m;
    }

    std::vector<size_t> domain() const {
      std::vector<size_t> out;
      for (size_t i = 1; i <= _m; ++i) {
        if (_img[i - 1] != 0) {
          out.push_back(i);
        }
      }
      return out;
    }

    // Sorted image set.
    std::vector<size_t> image_set() const {
      std::vector<size_t> out;
      for (size_t i = 0; i < _m; ++i) {
        if (_img[i] != 0) {
          out.push_back(_img[i]);
        }
      }
      std::sort(out.begin(), out.end());
      return out;
    }

    // Images listed along the ascending domain.
    std::vector<size_t> image_sequence() const {
      std::vector<size_t> out;
      for (size_t i = 0; i < _m; ++i) {
        if (_img[i] != 0) {
          out.push_back(_img[i]);
        }
      }
      return out;
    }

    std::vector<Pair> pairs() const {
      std::vector<Pair> out;
      for (size_t i = 1; i <= _m; ++i) {
        if (_img[i - 1] != 0) {
          out.emplace_back(i, _img[i - 1]);
        }
      }
      return out;
    }

    // t * f where t is the transposition (a, b) of the source set.
    PartialPerm left_transpose(size_t a, size_t b) const noexcept {
      PartialPerm g = *this;
      std::swap(g._img[a - 1], g._img[b - 1]);
      return g;
    }

    // f * t where t is the transposition (a, b) of the target set.
    PartialPerm right_transpose(size_t a, size_t b) const noexcept {
      PartialPerm g = *this;
      for (size_t i = 0; i < _m; ++i) {
        if (g._img[i] == a) {
          g._img[i] = static_cast<uint8_t>(b);
        } else if (g._img[i] == b) {
          g._img[i] = static_cast<uint8_t>(a);
        }
      }
      return g;
    }

    std::array<uint8_t, kMaxDegree> const& raw() const noexcept {
      return _img;
    }

    friend bool operator==(PartialPerm const&, PartialPerm const&) = default;

    friend std::strong_ordering operator<=>(PartialPerm const& x, PartialPerm const& y) {
      if (auto c = x._m <=> y._m; c != 0) {
        return c;
      }
      if (auto c = x._n <=> y._n; c != 0) {
        return c;
      }
      return x._img <=> y._img;
    }

    size_t hash() const noexcept {
      uint64_t lo, hi;
      std::memcpy(&lo, _img.data(), 8);
      std::memcpy(&hi, _img.data() + 8, 8);
      uint64_t h = (uint64_t{_m} << 8 | _n) * 0x9E3779B97F4A7C15ULL;
      h ^= lo + 0x9E3779B97F4A7C15ULL + (h << 6) + (h >> 2);
      h ^= hi + 0x9E3779B97F4A7C15ULL + (h << 6) + (h >> 2);
      h ^= h >> 33;
      h *= 0xff51afd7ed558ccdULL;
      h ^= h >> 33;
      return static_cast<size_t>(h);
    }

    // Like "{1->4, 2->3} in I(8,6)".
    std::string to_string() const {
      std::string s = "{";
      bool first = true;
      for (auto [i, j] : pairs()) {
        if (!first) {
          s += ", ";
        }
        first = false;
        s += std::to_string(i) + "->" + std::to_string(j);
      }
      s += "} in I(" + std::to_string(_m) + "," + std::to_string(_n) + ")";
      return s;
    }

   private:
    friend PartialPerm compose(PartialPerm const&, PartialPerm const&);
    friend PartialPerm inverse(PartialPerm const&);

    static uint8_t check_size(size_t k) {
      if (k > kMaxDegree) {
        throw CapacityError("partial permutation size " + std::to_string(k)
                            + " exceeds capacity " + std::to_string(kMaxDegree));
      }
      return static_cast<uint8_t>(k);
    }

    void set(size_t i, size_t j) {
      if (j == kUndefined) {
        return;
      }
      if (j > _n) {
        throw InvalidArgument("partial permutation: image " + std::to_string(j)
                              + " out of range 1.." + std::to_string(_n));
      }
      for (size_t k = 0; k < _m; ++k) {
        if (_img[k] == j) {
          throw InvalidArgument("partial permutation: not injective at image "
                                + std::to_string(j));
        }
      }
      _img[i - 1] = static_cast<uint8_t>(j);
      ++_rank;
    }

    uint8_t _m = 0;
    uint8_t _n = 0;
    uint8_t _rank = 0;
    std::array<uint8_t, kMaxDegree> _img{};
  };

  // Left-to-right composition f then g.
  inline PartialPerm compose(PartialPerm const& f, PartialPerm const& g) {
    if (f.target_size() != g.source_size()) {
      throw InvalidArgument("compose: size mismatch, " + std::to_string(f.target_size())
                            + " != " + std::to_string(g.source_size()));
    }
    PartialPerm h(f.source_size(), g.target_size());
    for (size_t i = 0; i < f._m; ++i) {
      uint8_t j = f._img[i];
      if (j != 0 && g._img[j - 1] != 0) {
        h._img[i] = g._img[j - 1];
        ++h._rank;
      }
    }
    return h;
  }

  inline PartialPerm operator*(PartialPerm const& f, PartialPerm const& g) {
    return compose(f, g);
  }

  inline PartialPerm inverse(PartialPerm const& f) {
    PartialPerm h(f.target_size(), f.source_size());
    for (size_t i = 0; i < f._m; ++i) {
      if (f._img[i] != 0) {
        h._img[f._img[i] - 1] = static_cast<uint8_t>(i + 1);
      }
    }
    h._rank = f._rank;
    return h;
  }

  // The same mappings viewed inside I_{N,N}.
  inline PartialPerm embed(PartialPerm const& f, size_t N) {
    if (N < f.source_size() || N < f.target_size()) {
      throw InvalidArgument("embed: N=" + std::to_string(N) + " smaller than "
                            + std::to_string(std::max(f.source_size(), f.target_size())));
    }
    return PartialPerm::from_pairs(N, N, f.pairs());
  }

  struct Crossings {
    size_t count = 0;
    // Pairs (i, j) of domain points with i < j and (i)f > (j)f.
    std::vector<std::pair<size_t, size_t>> pairs;
  };

  inline Crossings crossings(PartialPerm const& f) {
    Crossings out;
    auto dom = f.domain();
    for (size_t a = 0; a < dom.size(); ++a) {
      for (size_t b = a + 1; b < dom.size(); ++b) {
        if (f.image(dom[a]) > f.image(dom[b])) {
          out.pairs.emplace_back(dom[a], dom[b]);
        }
      }
    }
    out.count = out.pairs.size();
    return out;
  }

  inline bool is_order_preserving(PartialPerm const& f) noexcept {
    size_t last = 0;
    for (size_t i = 1; i <= f.source_size(); ++i) {
      size_t j = f.image(i);
      if (j != 0) {
        if (j < last) {
          return false;
        }
        last = j;
      }
    }
    return true;
  }

  // At most one cyclic descent along the ascending domain, the wraparound
  // comparison included.
  inline bool is_orientation_preserving(PartialPerm const& f) noexcept {
    size_t first = 0, prev = 0, descents = 0;
    for (size_t i = 1; i <= f.source_size(); ++i) {
      size_t j = f.image(i);
      if (j == 0) {
        continue;
      }
      if (first == 0) {
        first = j;
      } else if (prev > j && ++descents > 1) {
        return false;
      }
      prev = j;
    }
    if (first != 0 && prev > first) {
      ++descents;
    }
    return descents <= 1;
  }

  // Two-row diagram: sources on top, targets below, one line per edge.
  inline std::string diagram(PartialPerm const& f) {
    std::string top = "  ", bottom = "  ";
    for (size_t i = 1; i <= f.source_size(); ++i) {
      top += std::to_string(i % 10) + " ";
    }
    for (size_t j = 1; j <= f.target_size(); ++j) {
      bottom += std::to_string(j % 10) + " ";
    }
    std::string out = top + "\n";
    for (auto [i, j] : f.pairs()) {
      out += "  " + std::string(2 * (i - 1), ' ') + "| " + std::to_string(i) + " -> "
             + std::to_string(j) + "\n";
    }
    out += bottom + "\n";
    return out;
  }

}  // namespace invdel

template <>
struct std::hash<invdel::PartialPerm> {
  size_t operator()(invdel::PartialPerm const& f) const noexcept {
    return f.hash();
  }
};

#endif  // INVDEL_PPERM_HPP_
