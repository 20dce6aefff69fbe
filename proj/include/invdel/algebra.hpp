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

// Generators of the rearrangement digraph and words over them.
//
// The digraph has one vertex per genome size n. At n there are loops for the
// inversions s(i;n) = (i, i+1 mod n), the rotation c(n) = (1, 2, ..., n) and
// the reflection a(n) : i -> n + 1 - i, and edges n -> n-1 for the deletions
// d(i;n). A word is a path in this digraph.

#ifndef INVDEL_ALGEBRA_HPP_
#define INVDEL_ALGEBRA_HPP_

#include <algorithm>
#include <cstdint>
#include <deque>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "invdel/error.hpp"
#include "invdel/genome.hpp"
#include "invdel/pperm.hpp"

namespace invdel {

  class Generator {
   public:
    enum class Kind : uint8_t { Inv, Del, Rot, Refl };

    static Generator inv(size_t i, size_t n) {
      if (n < 1 || i < 1 || i > n) {
        throw InvalidArgument("inversion s" + std::to_string(i) + ";" + std::to_string(n)
                              + ": need 1 <= i <= n");
      }
      return Generator(Kind::Inv, i, n);
    }

    static Generator del(size_t i, size_t n) {
      if (n < 2 || i < 1 || i > n) {
        throw InvalidArgument("deletion d" + std::to_string(i) + ";" + std::to_string(n)
                              + ": need 1 <= i <= n and n >= 2");
      }
      return Generator(Kind::Del, i, n);
    }

    static Generator rot(size_t n) {
      if (n < 1) {
        throw InvalidArgument("rotation c0 is not a generator");
      }
      return Generator(Kind::Rot, 0, n);
    }

    static Generator refl(size_t n) {
      if (n < 1) {
        throw InvalidArgument("reflection a0 is not a generator");
      }
      return Generator(Kind::Refl, 0, n);
    }

    Kind kind() const noexcept {
      return _kind;
    }

    size_t index() const noexcept {
      return _i;
    }

    size_t size() const noexcept {
      return _n;
    }

    size_t source_size() const noexcept {
      return _n;
    }

    size_t target_size() const noexcept {
      return _kind == Kind::Del ? _n - 1 : _n;
    }

    bool is_inversion() const noexcept {
      return _kind == Kind::Inv;
    }

    bool is_deletion() const noexcept {
      return _kind == Kind::Del;
    }

    bool is_dihedral() const noexcept {
      return _kind == Kind::Rot || _kind == Kind::Refl;
    }

    std::string to_string() const {
      switch (_kind) {
        case Kind::Inv:
          return "s" + std::to_string(_i) + ";" + std::to_string(_n);
        case Kind::Del:
          return "d" + std::to_string(_i) + ";" + std::to_string(_n);
        case Kind::Rot:
          return "c" + std::to_string(_n);
        case Kind::Refl:
          return "a" + std::to_string(_n);
      }
      return {};
    }

    friend bool operator==(Generator const&, Generator const&) = default;

   private:
    Generator(Kind k, size_t i, size_t n) : _kind(k), _i(static_cast<uint32_t>(i)), _n(static_cast<uint32_t>(n)) {}

    Kind _kind;
    uint32_t _i;
    uint32_t _n;
  };

  using Word = std::vector<Generator>;

  inline PartialPerm eval_generator(Generator const& g) {
    size_t n = g.size();
    switch (g.kind()) {
      case Generator::Kind::Inv:
        return PartialPerm::transposition(n, g.index(), g.index() % n + 1);
      case Generator::Kind::Del: {
        PartialPerm::Pair pairs[PartialPerm::kMaxDegree];
        size_t k = 0;
        for (size_t j = 1; j <= n; ++j) {
          if (j != g.index()) {
            pairs[k++] = {j, j < g.index() ? j : j - 1};
          }
        }
        return PartialPerm::from_pairs(n, n - 1, std::span<PartialPerm::Pair const>(pairs, k));
      }
      case Generator::Kind::Rot: {
        std::vector<size_t> img(n);
        for (size_t j = 1; j <= n; ++j) {
          img[j - 1] = j % n + 1;
        }
        return PartialPerm::from_images(n, n, img);
      }
      case Generator::Kind::Refl: {
        std::vector<size_t> img(n);
        for (size_t j = 1; j <= n; ++j) {
          img[j - 1] = n + 1 - j;
        }
        return PartialPerm::from_images(n, n, img);
      }
    }
    throw InvalidArgument("unknown generator kind");
  }

  // Throws WordTypeError unless consecutive sizes chain.
  inline void check_word(Word const& w) {
    for (size_t k = 1; k < w.size(); ++k) {
      if (w[k - 1].target_size() != w[k].source_size()) {
        throw WordTypeError("word is not a path: " + w[k - 1].to_string() + " ends at "
                            + std::to_string(w[k - 1].target_size()) + " but "
                            + w[k].to_string() + " starts at "
                            + std::to_string(w[k].source_size()));
      }
    }
  }

  // The empty word evaluates to the identity on `empty_size` points.
  inline PartialPerm eval_word(Word const& w, size_t empty_size = 0) {
    check_word(w);
    if (w.empty()) {
      return PartialPerm::identity(empty_size);
    }
    PartialPerm f = eval_generator(w.front());
    for (size_t k = 1; k < w.size(); ++k) {
      f = compose(f, eval_generator(w[k]));
    }
    return f;
  }

  // The region at position i moves to position (i)w; regions outside the
  // domain of w are dropped.
  inline ReferenceFrame apply_to_frame(ReferenceFrame const& frame, Word const& w) {
    if (w.empty()) {
      return frame;
    }
    if (w.front().source_size() != frame.size()) {
      throw WordTypeError("word starts at size " + std::to_string(w.front().source_size())
                          + " but the frame has " + std::to_string(frame.size())
                          + " regions");
    }
    PartialPerm f = eval_word(w);
    std::vector<RegionId> out(f.target_size());
    std::vector<bool> filled(f.target_size(), false);
    for (auto [i, j] : f.pairs()) {
      out[j - 1] = frame.at(i);
      filled[j - 1] = true;
    }
    if (std::find(filled.begin(), filled.end(), false) != filled.end()) {
      throw WordTypeError("word leaves a position empty");
    }
    return ReferenceFrame(std::move(out));
  }

  inline size_t count_events(Word const& w) {
    return static_cast<size_t>(std::count_if(
        w.begin(), w.end(), [](Generator const& g) { return !g.is_dihedral(); }));
  }

  ////////////////////////////////////////////////////////////////////////////
  // Serialization: `s{i};{n}`, `d{i};{n}`, `c{n}`, `a{n}`, space separated.
  ////////////////////////////////////////////////////////////////////////////

  inline std::string to_string(Word const& w) {
    std::string out;
    for (size_t k = 0; k < w.size(); ++k) {
      if (k > 0) {
        out += ' ';
      }
      out += w[k].to_string();
    }
    return out;
  }

  inline Generator parse_generator(std::string_view tok) {
    auto number = [&](std::string_view s) -> size_t {
      if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; })) {
        throw InvalidArgument("bad generator token '" + std::string(tok) + "'");
      }
      return std::stoul(std::string(s));
    };
    if (tok.size() < 2) {
      throw InvalidArgument("bad generator token '" + std::string(tok) + "'");
    }
    char kind = tok[0];
    auto rest = tok.substr(1);
    if (kind == 'c') {
      return Generator::rot(number(rest));
    }
    if (kind == 'a') {
      return Generator::refl(number(rest));
    }
    auto semi = rest.find(';');
    if ((kind != 's' && kind != 'd') || semi == std::string_view::npos) {
      throw InvalidArgument("bad generator token '" + std::string(tok) + "'");
    }
    size_t i = number(rest.substr(0, semi));
    size_t n = number(rest.substr(semi + 1));
    return kind == 's' ? Generator::inv(i, n) : Generator::del(i, n);
  }

  inline Word parse_word(std::string_view text) {
    Word w;
    std::istringstream in{std::string(text)};
    std::string tok;
    while (in >> tok) {
      w.push_back(parse_generator(tok));
    }
    check_word(w);
    return w;
  }

  ////////////////////////////////////////////////////////////////////////////
  // Relations
  ////////////////////////////////////////////////////////////////////////////

  struct Relation {
    std::string name;  // "wrap-inv/del" .. "refl/wrap-inv"
    Word lhs;
    Word rhs;
  };

  namespace detail {
    inline Word rotation_power(size_t n, size_t k) {
      return Word(k, Generator::rot(n));
    }

    inline Word cat(std::initializer_list<Word> parts) {
      Word out;
      for (auto const& p : parts) {
        out.insert(out.end(), p.begin(), p.end());
      }
      return out;
    }

    using G = Generator;

    // Right-hand side for s(i;n) d(j;n), the deletion moved to the front.
    inline std::pair<std::string, Word> swap_inv_del(size_t i, size_t j, size_t n) {
      if (i == n) {
        if (j == n) {
          return {"wrap-inv/del-last", {G::del(1, n), G::rot(n - 1)}};
        }
        if (j == 1) {
          // d(n;n) followed by the inverse rotation of n-1 points.
          return {"wrap-inv/del-first", cat({{G::del(n, n)}, rotation_power(n - 1, n >= 3 ? n - 2 : 0)})};
        }
        return {"wrap-inv/del", {G::del(j, n), G::inv(n - 1, n - 1)}};
      }
      if (i > j) {
        return {"inv-right-of-del", {G::del(j, n), G::inv(i - 1, n - 1)}};
      }
      if (i == j) {
        return {"inv-onto-del", {G::del(j + 1, n)}};
      }
      if (i + 1 == j) {
        return {"inv-before-del", {G::del(i, n)}};
      }
      return {"inv-left-of-del", {G::del(j, n), G::inv(i, n - 1)}};
    }
  }  // namespace detail

  // Every instance of the commutation relations at size n (n >= 2).
  inline std::vector<Relation> relation_table(size_t n) {
    using G = Generator;
    if (n < 2) {
      throw InvalidArgument("relation_table: n must be at least 2");
    }
    std::vector<Relation> out;
    for (size_t i = 1; i <= n; ++i) {
      for (size_t j = 1; j <= n; ++j) {
        auto [name, rhs] = detail::swap_inv_del(i, j, n);
        out.push_back({name, {G::inv(i, n), G::del(j, n)}, rhs});
      }
    }
    for (size_t i = 2; i <= n; ++i) {
      out.push_back({"rot/inv", {G::rot(n), G::inv(i, n)}, {G::inv(i - 1, n), G::rot(n)}});
    }
    out.push_back({"rot/inv-first", {G::rot(n), G::inv(1, n)}, {G::inv(n, n), G::rot(n)}});
    for (size_t i = 2; i <= n; ++i) {
      out.push_back({"rot/del", {G::rot(n), G::del(i, n)}, {G::del(i - 1, n), G::rot(n - 1)}});
    }
    out.push_back({"rot/del-first", {G::rot(n), G::del(1, n)}, {G::del(n, n)}});
    for (size_t i = 1; i <= n; ++i) {
      out.push_back({"refl/del", {G::refl(n), G::del(i, n)}, {G::del(n - i + 1, n), G::refl(n - 1)}});
    }
    for (size_t i = 1; i + 1 <= n; ++i) {
      out.push_back({"refl/inv", {G::refl(n), G::inv(i, n)}, {G::inv(n - i, n), G::refl(n)}});
    }
    out.push_back({"refl/wrap-inv", {G::refl(n), G::inv(n, n)}, {G::inv(n, n), G::refl(n)}});
    return out;
  }

  ////////////////////////////////////////////////////////////////////////////
  // Deletions-first rewriting
  ////////////////////////////////////////////////////////////////////////////

  // (deletions)(inversions)(rotations and reflections)
  inline bool has_deletions_first_shape(Word const& w) {
    int phase = 0;
    for (auto const& g : w) {
      int p = g.is_deletion() ? 0 : g.is_inversion() ? 1 : 2;
      if (p < phase) {
        return false;
      }
      phase = p;
    }
    return true;
  }

  // Shortest word over {c(n), a(n)} evaluating to `target`, ties broken
  // lexicographically with c before a.
  inline Word shortest_dihedral_word(PartialPerm const& target) {
    size_t n = target.source_size();
    if (target == PartialPerm::identity(n)) {
      return {};
    }
    Generator gens[2] = {Generator::rot(n), Generator::refl(n)};
    PartialPerm evals[2] = {eval_generator(gens[0]), eval_generator(gens[1])};
    std::map<PartialPerm, Word> seen{{PartialPerm::identity(n), {}}};
    std::deque<PartialPerm> queue{PartialPerm::identity(n)};
    while (!queue.empty()) {
      auto x = queue.front();
      queue.pop_front();
      for (int k = 0; k < 2; ++k) {
        auto y = compose(x, evals[k]);
        if (seen.count(y)) {
          continue;
        }
        Word w = seen[x];
        w.push_back(gens[k]);
        if (y == target) {
          return w;
        }
        seen.emplace(y, w);
        queue.push_back(y);
      }
    }
    throw InvalidArgument("shortest_dihedral_word: not a dihedral element");
  }

  // Rewrites w into the form (deletions)(inversions)(dihedral) with the same
  // evaluation. Inversion letters followed by a deletion are pushed right of
  // it (these swaps never add events and sometimes drop one), and rotations
  // and reflections are pushed to the end. The trailing dihedral segment is
  // finally replaced by a shortest word for the same element.
  inline Word rewrite_deletions_first(Word w) {
    using K = Generator::Kind;
    using G = Generator;
    check_word(w);
    if (w.empty()) {
      return w;
    }
    bool changed = true;
    while (changed) {
      changed = false;
      for (size_t k = 0; k + 1 < w.size(); ++k) {
        G a = w[k], b = w[k + 1];
        size_t n = a.size();
        Word rhs;
        if (a.kind() == K::Inv && b.kind() == K::Del) {
          rhs = detail::swap_inv_del(a.index(), b.index(), n).second;
        } else if (a.kind() == K::Rot && b.kind() == K::Inv) {
          size_t i = b.index();
          rhs = {i >= 2 ? G::inv(i - 1, n) : G::inv(n, n), G::rot(n)};
        } else if (a.kind() == K::Rot && b.kind() == K::Del) {
          size_t i = b.index();
          rhs = i >= 2 ? Word{G::del(i - 1, n), G::rot(n - 1)} : Word{G::del(n, n)};
        } else if (a.kind() == K::Refl && b.kind() == K::Del) {
          rhs = {G::del(n - b.index() + 1, n), G::refl(n - 1)};
        } else if (a.kind() == K::Refl && b.kind() == K::Inv) {
          size_t i = b.index();
          rhs = {i < n ? G::inv(n - i, n) : G::inv(n, n), G::refl(n)};
        } else {
          continue;
        }
        w.erase(w.begin() + static_cast<std::ptrdiff_t>(k),
                w.begin() + static_cast<std::ptrdiff_t>(k) + 2);
        w.insert(w.begin() + static_cast<std::ptrdiff_t>(k), rhs.begin(), rhs.end());
        changed = true;
        break;
      }
    }
    auto tail = std::find_if(w.begin(), w.end(), [](G const& g) { return g.is_dihedral(); });
    if (tail != w.end()) {
      Word dihedral(tail, w.end());
      w.erase(tail, w.end());
      Word shortest = shortest_dihedral_word(eval_word(dihedral));
      w.insert(w.end(), shortest.begin(), shortest.end());
    }
    return w;
  }

}  // namespace invdel

#endif  // INVDEL_ALGEBRA_HPP_
