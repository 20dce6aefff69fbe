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

// Circular genomes over a shared region alphabet.
//
// A genome is the orbit of a reference frame (a word of distinct regions)
// under the dihedral group acting on positions. Each genome is stored by its
// lexicographically least frame, so equality and hashing are structural.

#ifndef INVDEL_GENOME_HPP_
#define INVDEL_GENOME_HPP_

#include <algorithm>
#include <cstdint>
#include <istream>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "invdel/error.hpp"
#include "invdel/pperm.hpp"

namespace invdel {

  using RegionId = uint32_t;

  // Ordered set of region tokens; ids follow the lexicographic token order.
  class RegionAlphabet {
   public:
    RegionAlphabet() = default;

    explicit RegionAlphabet(std::vector<std::string> tokens) : _tokens(std::move(tokens)) {
      std::sort(_tokens.begin(), _tokens.end());
      _tokens.erase(std::unique(_tokens.begin(), _tokens.end()), _tokens.end());
    }

    size_t size() const noexcept {
      return _tokens.size();
    }

    std::string const& token(RegionId id) const {
      return _tokens.at(id);
    }

    std::optional<RegionId> find(std::string_view token) const {
      auto it = std::lower_bound(_tokens.begin(), _tokens.end(), token);
      if (it == _tokens.end() || *it != token) {
        return std::nullopt;
      }
      return static_cast<RegionId>(it - _tokens.begin());
    }

    RegionId id(std::string_view token) const {
      auto r = find(token);
      if (!r) {
        throw InvalidArgument("unknown region token '" + std::string(token) + "'");
      }
      return *r;
    }

    std::vector<std::string> const& tokens() const noexcept {
      return _tokens;
    }

    friend bool operator==(RegionAlphabet const&, RegionAlphabet const&) = default;

   private:
    std::vector<std::string> _tokens;
  };

  using AlphabetPtr = std::shared_ptr<RegionAlphabet const>;

  // A clockwise reading of a circular genome from a distinguished point.
  class ReferenceFrame {
   public:
    ReferenceFrame() = default;

    explicit ReferenceFrame(std::vector<RegionId> regions) : _regions(std::move(regions)) {
      auto sorted = _regions;
      std::sort(sorted.begin(), sorted.end());
      if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw InvalidArgument("reference frame: repeated region");
      }
    }

    size_t size() const noexcept {
      return _regions.size();
    }

    bool empty() const noexcept {
      return _regions.empty();
    }

    // 1-based position.
    RegionId at(size_t pos) const {
      return _regions.at(pos - 1);
    }

    std::vector<RegionId> const& regions() const noexcept {
      return _regions;
    }

    // 1-based position of `r`, or 0 if absent.
    size_t position_of(RegionId r) const noexcept {
      auto it = std::find(_regions.begin(), _regions.end(), r);
      return it == _regions.end() ? 0 : static_cast<size_t>(it - _regions.begin()) + 1;
    }

    friend bool operator==(ReferenceFrame const&, ReferenceFrame const&) = default;
    friend auto operator<=>(ReferenceFrame const&, ReferenceFrame const&) = default;

   private:
    std::vector<RegionId> _regions;
  };

  // Element of the dihedral group D_n acting on positions 0..n-1 by
  // p -> (reflected ? -p : p) + rotation (mod n). Stored in a normal form so
  // that distinct values are distinct permutations.
  class DihedralElement {
   public:
    DihedralElement() = default;

    DihedralElement(size_t modulus, size_t rotation, bool reflected)
        : _n(modulus), _rot(modulus == 0 ? 0 : rotation % modulus), _refl(reflected) {
      if (modulus == 0) {
        throw InvalidArgument("dihedral element: modulus must be positive");
      }
      normalize();
    }

    static DihedralElement identity(size_t n) {
      return {n, 0, false};
    }

    static DihedralElement rotation(size_t n, size_t k) {
      return {n, k, false};
    }

    // Reverses the reading direction: position p goes to n - 1 - p.
    static DihedralElement reflection(size_t n) {
      return {n, n - 1, true};
    }

    size_t modulus() const noexcept {
      return _n;
    }

    size_t rotation() const noexcept {
      return _rot;
    }

    bool reflected() const noexcept {
      return _refl;
    }

    // Image of the 0-based position p.
    size_t operator()(size_t p) const noexcept {
      size_t q = _refl ? (_n - p % _n) % _n : p;
      return (q + _rot) % _n;
    }

    // apply(apply(f, g), h) == apply(f, then(g, h))
    friend DihedralElement then(DihedralElement const& g, DihedralElement const& h) {
      if (g._n != h._n) {
        throw InvalidArgument("dihedral compose: modulus mismatch");
      }
      size_t n = g._n;
      size_t rh = g._refl ? (n - h._rot) % n : h._rot;
      return {n, (rh + g._rot) % n, g._refl != h._refl};
    }

    DihedralElement inverse() const {
      size_t r = _refl ? _rot : (_n - _rot) % _n;
      return {_n, r, _refl};
    }

    // Every distinct element: 2n for n >= 3, 2 for n = 2, 1 for n = 1.
    static std::vector<DihedralElement> elements(size_t n) {
      std::vector<DihedralElement> out;
      for (int refl = 0; refl < 2; ++refl) {
        for (size_t r = 0; r < n; ++r) {
          DihedralElement g(n, r, refl == 1);
          if (std::find(out.begin(), out.end(), g) == out.end()) {
            out.push_back(g);
          }
        }
      }
      return out;
    }

    friend bool operator==(DihedralElement const&, DihedralElement const&) = default;

   private:
    // For n <= 2 every reflection coincides with a rotation.
    void normalize() noexcept {
      if (_refl && _n <= 2) {
        _refl = false;
      }
    }

    size_t _n = 1;
    size_t _rot = 0;
    bool _refl = false;
  };

  // Position i of the result holds position (i)g of the input.
  inline ReferenceFrame dihedral_apply(ReferenceFrame const& frame, DihedralElement const& g) {
    if (g.modulus() != frame.size()) {
      throw InvalidArgument("dihedral_apply: modulus " + std::to_string(g.modulus())
                            + " != frame length " + std::to_string(frame.size()));
    }
    std::vector<RegionId> out(frame.size());
    for (size_t i = 0; i < frame.size(); ++i) {
      out[i] = frame.regions()[g(i)];
    }
    return ReferenceFrame(std::move(out));
  }

  inline ReferenceFrame reflect(ReferenceFrame const& frame) {
    return dihedral_apply(frame, DihedralElement::reflection(frame.size()));
  }

  class Genome {
   public:
    Genome() = default;

    Genome(AlphabetPtr alphabet, ReferenceFrame canonical)
        : _alphabet(std::move(alphabet)), _canonical(std::move(canonical)) {}

    AlphabetPtr const& alphabet() const noexcept {
      return _alphabet;
    }

    ReferenceFrame const& canonical() const noexcept {
      return _canonical;
    }

    size_t size() const noexcept {
      return _canonical.size();
    }

    // Sorted region ids.
    std::vector<RegionId> regions() const {
      auto r = _canonical.regions();
      std::sort(r.begin(), r.end());
      return r;
    }

    friend bool operator==(Genome const& x, Genome const& y) {
      return x._canonical == y._canonical;
    }

   private:
    AlphabetPtr _alphabet;
    ReferenceFrame _canonical;
  };

  inline ReferenceFrame canonical_frame(ReferenceFrame const& frame) {
    if (frame.empty()) {
      return frame;
    }
    ReferenceFrame best = frame;
    for (auto const& g : DihedralElement::elements(frame.size())) {
      auto f = dihedral_apply(frame, g);
      if (f < best) {
        best = std::move(f);
      }
    }
    return best;
  }

  inline Genome canonicalize(AlphabetPtr alphabet, ReferenceFrame const& frame) {
    return Genome(std::move(alphabet), canonical_frame(frame));
  }

  // Every distinct frame of the genome, sorted.
  inline std::vector<ReferenceFrame> frames(Genome const& g) {
    std::vector<ReferenceFrame> out;
    if (g.size() == 0) {
      return out;
    }
    for (auto const& d : DihedralElement::elements(g.size())) {
      out.push_back(dihedral_apply(g.canonical(), d));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  // (i)sigma = j iff g1 and g2 hold the same region at positions i and j.
  inline PartialPerm sigma_from_frames(ReferenceFrame const& g1, ReferenceFrame const& g2) {
    PartialPerm::Pair pairs[PartialPerm::kMaxDegree];
    size_t k = 0;
    for (size_t i = 1; i <= g1.size(); ++i) {
      if (size_t j = g2.position_of(g1.at(i)); j != 0) {
        pairs[k++] = {i, j};
      }
    }
    return PartialPerm::from_pairs(g1.size(), g2.size(),
                                   std::span<PartialPerm::Pair const>(pairs, k));
  }

  inline bool same_alphabet(Genome const& g1, Genome const& g2) {
    return g1.alphabet() == g2.alphabet()
           || (g1.alphabet() && g2.alphabet() && *g1.alphabet() == *g2.alphabet());
  }

  struct RegionSets {
    std::vector<RegionId> intersection;
    std::vector<RegionId> symmetric_difference;
    std::vector<RegionId> union_;
    std::vector<RegionId> only_first;
    std::vector<RegionId> only_second;
  };

  inline RegionSets region_set_ops(Genome const& g1, Genome const& g2) {
    auto a = g1.regions();
    auto b = g2.regions();
    RegionSets s;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                          std::back_inserter(s.intersection));
    std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(),
                                  std::back_inserter(s.symmetric_difference));
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(s.union_));
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(s.only_first));
    std::set_difference(b.begin(), b.end(), a.begin(), a.end(),
                        std::back_inserter(s.only_second));
    return s;
  }

  ////////////////////////////////////////////////////////////////////////////
  // Text helpers
  ////////////////////////////////////////////////////////////////////////////

  // Tokens are whitespace separated; a single word with no whitespace is
  // read one character per region ("abcd").
  inline std::vector<std::string> split_tokens(std::string_view text) {
    std::vector<std::string> out;
    std::istringstream in{std::string(text)};
    std::string tok;
    while (in >> tok) {
      out.push_back(tok);
    }
    if (out.size() == 1 && out[0].size() > 1) {
      std::string word = out[0];
      out.clear();
      for (char c : word) {
        out.emplace_back(1, c);
      }
    }
    return out;
  }

  inline ReferenceFrame parse_frame(RegionAlphabet const& alphabet, std::string_view text) {
    std::vector<RegionId> ids;
    for (auto const& tok : split_tokens(text)) {
      ids.push_back(alphabet.id(tok));
    }
    return ReferenceFrame(std::move(ids));
  }

  inline std::string format_frame(RegionAlphabet const& alphabet, ReferenceFrame const& frame,
                                  std::string_view sep = " ") {
    std::string out;
    for (size_t i = 0; i < frame.size(); ++i) {
      if (i > 0) {
        out += sep;
      }
      out += alphabet.token(frame.regions()[i]);
    }
    return out;
  }

  // Joins without separators when every token is a single character.
  inline std::string compact_frame(RegionAlphabet const& alphabet, ReferenceFrame const& frame) {
    bool single = std::all_of(frame.regions().begin(), frame.regions().end(),
                              [&](RegionId r) { return alphabet.token(r).size() == 1; });
    return format_frame(alphabet, frame, single ? "" : " ");
  }

  struct NamedGenome {
    std::string name;
    ReferenceFrame frame;  // as written in the input
    Genome genome;
  };

  struct GenomeFile {
    AlphabetPtr alphabet;
    std::vector<NamedGenome> genomes;

    NamedGenome const& find(std::string_view name) const {
      for (auto const& g : genomes) {
        if (g.name == name) {
          return g;
        }
      }
      throw InvalidArgument("no genome named '" + std::string(name) + "'");
    }
  };

  // One genome per line: `NAME: tok1 tok2 ... tokN`; `#` starts a comment
  // line. All genomes of a file share one alphabet.
  inline GenomeFile parse_genome_file(std::istream& in) {
    struct Raw {
      std::string name;
      std::vector<std::string> tokens;
      size_t line;
    };
    std::vector<Raw> raws;
    std::set<std::string> names;
    std::string line;
    size_t lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      auto first = line.find_first_not_of(" \t\r");
      if (first == std::string::npos || line[first] == '#') {
        continue;
      }
      auto colon = line.find(':');
      if (colon == std::string::npos) {
        throw ParseError("expected `NAME: regions...`", lineno);
      }
      std::string name = line.substr(0, colon);
      name.erase(0, name.find_first_not_of(" \t"));
      name.erase(name.find_last_not_of(" \t") + 1);
      if (name.empty()) {
        throw ParseError("empty genome name", lineno);
      }
      if (!names.insert(name).second) {
        throw ParseError("duplicate genome name '" + name + "'", lineno);
      }
      std::vector<std::string> tokens;
      std::istringstream ts(line.substr(colon + 1));
      std::string tok;
      while (ts >> tok) {
        tokens.push_back(tok);
      }
      if (tokens.empty()) {
        throw ParseError("genome '" + name + "' has no regions", lineno);
      }
      std::set<std::string> seen(tokens.begin(), tokens.end());
      if (seen.size() != tokens.size()) {
        throw ParseError("genome '" + name + "' repeats a region", lineno);
      }
      raws.push_back({std::move(name), std::move(tokens), lineno});
    }
    std::vector<std::string> all;
    for (auto const& r : raws) {
      all.insert(all.end(), r.tokens.begin(), r.tokens.end());
    }
    GenomeFile file;
    file.alphabet = std::make_shared<RegionAlphabet const>(std::move(all));
    for (auto const& r : raws) {
      std::vector<RegionId> ids;
      for (auto const& t : r.tokens) {
        ids.push_back(file.alphabet->id(t));
      }
      ReferenceFrame frame(std::move(ids));
      file.genomes.push_back({r.name, frame, canonicalize(file.alphabet, frame)});
    }
    return file;
  }

  inline GenomeFile parse_genome_text(std::string_view text) {
    std::istringstream in{std::string(text)};
    return parse_genome_file(in);
  }

}  // namespace invdel

#endif  // INVDEL_GENOME_HPP_
