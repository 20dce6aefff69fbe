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

// Walks one genome pair through distance, ancestor and scenario check.

#include <iostream>

#include "invdel/invdel.hpp"

int main() {
  auto file = invdel::parse_genome_text(
      "G1: b c d e g k h l\n"
      "G2: a e b f h i j k\n");
  auto const& g1 = file.find("G1");
  auto const& g2 = file.find("G2");
  auto const& al = *file.alphabet;

  auto sets = invdel::region_set_ops(g1.genome, g2.genome);
  std::cout << "shared regions: " << sets.intersection.size() << '\n'
            << "only in G1:     " << sets.only_first.size() << '\n'
            << "only in G2:     " << sets.only_second.size() << '\n';

  auto sigma = invdel::sigma_from_frames(g1.frame, g2.frame);
  std::cout << "sigma = " << sigma.to_string() << '\n' << invdel::diagram(sigma);

  auto d = invdel::mrca_distance(g1.genome, g2.genome);
  std::cout << "distance " << d.total << " = " << d.deletions << " deletions + " << d.mu
            << " inversions\n";

  auto s = invdel::construct_ancestor(g1.genome, g2.genome, d.best_g1, d.best_g2, d.solution);
  std::cout << "ancestor " << invdel::compact_frame(al, s.ancestor_frame) << '\n'
            << "  to G1: " << invdel::to_string(s.events_to_g1) << '\n'
            << "  to G2: " << invdel::to_string(s.events_to_g2) << '\n';

  auto check = invdel::verify_scenario(s, g1.genome, g2.genome, d.total);
  std::cout << "scenario " << (check.ok ? "verified" : "FAILED") << '\n';
  return check.ok ? 0 : 1;
}
