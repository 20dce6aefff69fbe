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

// Forward simulation of two lineages from a common ancestor.

#ifndef INVDEL_EVOLVE_HPP_
#define INVDEL_EVOLVE_HPP_

#include <array>
#include <cstdint>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "invdel/algebra.hpp"
#include "invdel/error.hpp"
#include "invdel/genome.hpp"

namespace invdel {

  // std::mt19937_64 is specified bit-for-bit by the standard; the bounded
  // draw and the shuffle are written out here because the standard library
  // distributions are not.
  class Rng {
   public:
    explicit Rng(uint64_t seed) : _engine(seed) {}

    uint64_t next() {
      return _engine();
    }

    // Uniform on [0, bound).
    uint64_t below(uint64_t bound) {
      if (bound == 0) {
        throw InvalidArgument("Rng::below: empty range");
      }
      uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
      uint64_t x;
      do {
        x = _engine();
      } while (x >= limit);
      return x % bound;
    }

    // Uniform on [lo, hi].
    uint64_t between(uint64_t lo, uint64_t hi) {
      return lo + below(hi - lo + 1);
    }

    template <typename T>
    void shuffle(std::vector<T>& v) {
      for (size_t i = v.size(); i > 1; --i) {
        std::swap(v[i - 1], v[below(i)]);
      }
    }

   private:
    std::mt19937_64 _engine;
  };

  // The alphabet {a, b, ..., } of the first n lower-case letters.
  inline AlphabetPtr letter_alphabet(size_t n) {
    if (n > PartialPerm::kMaxDegree) {
      throw CapacityError("letter_alphabet: at most " + std::to_string(PartialPerm::kMaxDegree)
                          + " regions");
    }
    std::vector<std::string> tokens;
    for (size_t i = 0; i < n; ++i) {
      tokens.emplace_back(1, static_cast<char>('a' + i));
    }
    return std::make_shared<RegionAlphabet const>(std::move(tokens));
  }

  inline Genome random_genome(size_t n, uint64_t seed) {
    if (n < 1 || n > PartialPerm::kMaxDegree) {
      throw CapacityError("random_genome: n=" + std::to_string(n) + " outside 1.."
                          + std::to_string(PartialPerm::kMaxDegree));
    }
    Rng rng(seed);
    std::vector<RegionId> ids(n);
    for (size_t i = 0; i < n; ++i) {
      ids[i] = static_cast<RegionId>(i);
    }
    rng.shuffle(ids);
    return canonicalize(letter_alphabet(n), ReferenceFrame(std::move(ids)));
  }

  struct EvolutionScenario {
    ReferenceFrame ancestor_frame;
    std::array<Word, 2> events;
    std::array<Genome, 2> genomes;
    uint64_t seed = 0;
  };

  // Replays both branches from the ancestor frame.
  inline std::array<Genome, 2> replay(AlphabetPtr const& alphabet,
                                      ReferenceFrame const& ancestor,
                                      std::array<Word, 2> const& events) {
    return {canonicalize(alphabet, apply_to_frame(ancestor, events[0])),
            canonicalize(alphabet, apply_to_frame(ancestor, events[1]))};
  }

  // Each branch: k_del uniform single-region deletions, then k_inv uniform
  // adjacent inversions (wraparound included), starting from the
  // ancestor's canonical frame.
  inline EvolutionScenario simulate(Genome const& ancestor, size_t k_del_1, size_t k_inv_1,
                                    size_t k_del_2, size_t k_inv_2, uint64_t seed) {
    size_t const n = ancestor.size();
    for (size_t k : {k_del_1, k_del_2}) {
      if (k + 1 > n) {
        throw InvalidArgument("simulate: " + std::to_string(k) + " deletions from "
                              + std::to_string(n) + " regions leaves nothing");
      }
    }
    Rng rng(seed);
    EvolutionScenario s;
    s.ancestor_frame = ancestor.canonical();
    s.seed = seed;
    size_t const del[2] = {k_del_1, k_del_2};
    size_t const inv[2] = {k_inv_1, k_inv_2};
    for (size_t b = 0; b < 2; ++b) {
      size_t size = n;
      for (size_t k = 0; k < del[b]; ++k, --size) {
        s.events[b].push_back(Generator::del(rng.between(1, size), size));
      }
      if (inv[b] > 0 && size < 2) {
        throw InvalidArgument("simulate: inversions need at least 2 surviving regions");
      }
      for (size_t k = 0; k < inv[b]; ++k) {
        s.events[b].push_back(Generator::inv(rng.between(1, size), size));
      }
    }
    s.genomes = replay(ancestor.alphabet(), s.ancestor_frame, s.events);
    return s;
  }

}  // namespace invdel

#endif  // INVDEL_EVOLVE_HPP_
