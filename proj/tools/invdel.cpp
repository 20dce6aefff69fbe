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

// invdel: inversion/deletion distances between circular genomes.
//
// Exit status: 0 success, 1 internal or verification failure, 2 bad input.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "invdel/invdel.hpp"

namespace {

  using json = nlohmann::ordered_json;

  constexpr int kSchemaVersion = 1;
  constexpr size_t kHardMaxN = invdel::PartialPerm::kMaxDegree;

  struct Config {
    std::string cache_dir;
    std::string engine = "onthefly";
    bool fast_pairs = false;
    uint64_t seed = 1;
    size_t max_n = 8;
    bool json = false;
  };

  // Exit status 1.
  class VerificationFailure : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  class Context {
   public:
    explicit Context(Config const& cfg) : _cfg(cfg) {
      if (cfg.max_n > kHardMaxN) {
        throw invdel::CapacityError("--max-n " + std::to_string(cfg.max_n) + " exceeds "
                                    + std::to_string(kHardMaxN));
      }
      if (cfg.engine == "cayley") {
        _store.emplace(cfg.cache_dir.empty() ? invdel::default_cache_dir()
                                             : std::filesystem::path(cfg.cache_dir));
        _opts.engine = invdel::Engine::Cayley;
        _opts.store = &*_store;
      } else if (cfg.engine != "onthefly") {
        throw invdel::InvalidArgument("unknown engine '" + cfg.engine + "'");
      }
      _opts.fast_pairs = cfg.fast_pairs;
    }

    invdel::AlignOptions const& options() const {
      return _opts;
    }

    Config const& config() const {
      return _cfg;
    }

    invdel::GenomeFile load(std::string const& path) const {
      std::ifstream in(path);
      if (!in) {
        throw invdel::InvalidArgument("cannot open " + path);
      }
      auto file = invdel::parse_genome_file(in);
      size_t limit = _cfg.engine == "cayley" ? std::min(_cfg.max_n, invdel::kMaxCayleyDegree)
                                             : _cfg.max_n;
      for (auto const& g : file.genomes) {
        if (g.frame.size() > limit) {
          throw invdel::CapacityError("genome '" + g.name + "' has " + std::to_string(g.frame.size())
                                      + " regions; the limit is " + std::to_string(limit)
                                      + " (see --max-n)");
        }
      }
      return file;
    }

   private:
    Config _cfg;
    std::optional<invdel::DClassStore> _store;
    invdel::AlignOptions _opts;
  };

  std::string frame_text(invdel::AlphabetPtr const& al, invdel::ReferenceFrame const& f) {
    return invdel::compact_frame(*al, f);
  }

  // Genome-file line for a frame, tokens space separated.
  std::string frame_line(invdel::AlphabetPtr const& al, invdel::ReferenceFrame const& f) {
    return invdel::format_frame(*al, f, " ");
  }

  json header(std::string const& command) {
    return json{{"schema_version", kSchemaVersion}, {"command", command}};
  }

  void emit(Config const& cfg, json const& j, std::string const& text) {
    if (cfg.json) {
      std::cout << j.dump(2) << '\n';
    } else {
      std::cout << text;
    }
  }

  ////////////////////////////////////////////////////////////////////////////

  int cmd_distance(Context const& ctx, std::string const& path, std::string const& a,
                   std::string const& b, bool directed, bool emit_events) {
    auto file = ctx.load(path);
    auto const& g1 = file.find(a);
    auto const& g2 = file.find(b);
    auto j = header("distance");
    j["genomes"] = {a, b};
    std::ostringstream out;
    if (directed) {
      auto d = invdel::directed_distance(g1.genome, g2.genome);
      j["directed_distance"] = d;
      out << "directed_distance " << d << '\n';
      emit(ctx.config(), j, out.str());
      return 0;
    }
    auto d = invdel::mrca_distance(g1.genome, g2.genome, ctx.options());
    j["distance"] = d.total;
    j["deletions"] = d.deletions;
    j["mu"] = d.mu;
    j["best_pair"] = {frame_text(file.alphabet, d.best_g1), frame_text(file.alphabet, d.best_g2)};
    out << "distance " << d.total << '\n'
        << "deletions " << d.deletions << '\n'
        << "mu " << d.mu << '\n'
        << "best_pair " << frame_text(file.alphabet, d.best_g1) << ' '
        << frame_text(file.alphabet, d.best_g2) << '\n';
    if (emit_events) {
      j["t_m"] = invdel::to_string(d.solution.t_m);
      j["t_n"] = invdel::to_string(d.solution.t_n);
      out << "t_m " << invdel::to_string(d.solution.t_m) << '\n'
          << "t_n " << invdel::to_string(d.solution.t_n) << '\n';
    }
    emit(ctx.config(), j, out.str());
    return 0;
  }

  int cmd_mrca(Context const& ctx, std::string const& path, std::string const& a,
               std::string const& b) {
    auto file = ctx.load(path);
    auto const& g1 = file.find(a);
    auto const& g2 = file.find(b);
    auto d = invdel::mrca_distance(g1.genome, g2.genome, ctx.options());
    // The frames as written are used whenever they are an optimal pair.
    auto as_written = invdel::solve_pair(invdel::sigma_from_frames(g1.frame, g2.frame));
    auto s = as_written.cost == d.mu
                 ? invdel::construct_ancestor(g1.genome, g2.genome, g1.frame, g2.frame,
                                              as_written)
                 : invdel::construct_ancestor(g1.genome, g2.genome, d.best_g1, d.best_g2,
                                              d.solution);
    auto check = invdel::verify_scenario(s, g1.genome, g2.genome, d.total);
    auto j = header("mrca");
    j["genomes"] = {a, b};
    j["ancestor"] = frame_text(file.alphabet, s.ancestor_frame);
    j["events_to_first"] = invdel::to_string(s.events_to_g1);
    j["events_to_second"] = invdel::to_string(s.events_to_g2);
    j["distance"] = d.total;
    j["verify"] = check.ok ? "ok" : "failed";
    std::ostringstream out;
    out << "ancestor " << frame_text(file.alphabet, s.ancestor_frame) << '\n'
        << "events " << a << ' ' << invdel::to_string(s.events_to_g1) << '\n'
        << "events " << b << ' ' << invdel::to_string(s.events_to_g2) << '\n'
        << "distance " << d.total << '\n'
        << "verify " << (check.ok ? "ok" : "failed") << '\n';
    if (!check.ok) {
      j["verify_report"] = check.report;
      out << check.report;
    }
    emit(ctx.config(), j, out.str());
    return check.ok ? 0 : 1;
  }

  int cmd_matrix(Context const& ctx, std::string const& path, std::string const& format) {
    if (format != "phylip" && format != "tsv") {
      throw invdel::InvalidArgument("unknown format '" + format + "'");
    }
    auto file = ctx.load(path);
    if (file.genomes.size() < 2) {
      throw invdel::InvalidArgument("matrix needs at least 2 genomes, " + path + " has "
                                    + std::to_string(file.genomes.size()));
    }
    std::vector<invdel::Genome> genomes;
    std::vector<std::string> names;
    for (auto const& g : file.genomes) {
      genomes.push_back(g.genome);
      names.push_back(g.name);
    }
    auto d = invdel::distance_matrix(genomes, ctx.options());
    auto j = header("matrix");
    j["names"] = names;
    j["matrix"] = d;
    std::ostringstream out;
    if (format == "phylip") {
      invdel::write_phylip(out, names, d);
    } else {
      invdel::write_tsv(out, names, d);
    }
    emit(ctx.config(), j, out.str());
    return 0;
  }

  int cmd_verify(Context const& ctx, bool relations, std::optional<size_t> enumerate) {
    if (!relations && !enumerate) {
      throw invdel::InvalidArgument("verify needs --relations or --enumerate N");
    }
    auto j = header("verify");
    std::ostringstream out;
    bool ok = true;
    if (enumerate) {
      auto e = invdel::enumerate_monoid(*enumerate);
      bool match = e.size() == invdel::symmetric_inverse_monoid_size(*enumerate);
      ok = ok && match;
      j["enumerate"] = {{"n", *enumerate}, {"size", e.size()}, {"ok", match}};
      out << e.size() << (match ? " ok" : " MISMATCH") << '\n';
    }
    if (relations) {
      size_t max_n = ctx.config().max_n;
      size_t checked = 0;
      std::vector<std::string> failed;
      for (size_t n = 2; n <= max_n; ++n) {
        for (auto const& r : invdel::relation_table(n)) {
          ++checked;
          if (invdel::eval_word(r.lhs) != invdel::eval_word(r.rhs)) {
            failed.push_back(r.name + ": " + invdel::to_string(r.lhs) + " = "
                             + invdel::to_string(r.rhs));
          }
        }
      }
      ok = ok && failed.empty();
      j["relations"] = {{"max_n", max_n}, {"checked", checked}, {"failed", failed}};
      if (failed.empty()) {
        out << "all relations hold (" << checked << " instances, n <= " << max_n << ")\n";
      } else {
        for (auto const& f : failed) {
          out << "FAILED " << f << '\n';
        }
      }
    }
    emit(ctx.config(), j, out.str());
    if (!ok) {
      throw VerificationFailure("verification failed");
    }
    return 0;
  }

  int cmd_simulate(Context const& ctx, size_t n, std::array<size_t, 4> const& counts) {
    if (n > ctx.config().max_n) {
      throw invdel::CapacityError("--regions " + std::to_string(n) + " exceeds --max-n "
                                  + std::to_string(ctx.config().max_n));
    }
    uint64_t seed = ctx.config().seed;
    auto ancestor = invdel::random_genome(n, seed);
    auto s = invdel::simulate(ancestor, counts[0], counts[1], counts[2], counts[3], seed);
    auto d = invdel::mrca_distance(s.genomes[0], s.genomes[1], ctx.options());
    auto const& al = ancestor.alphabet();
    auto j = header("simulate");
    j["seed"] = seed;
    j["ancestor"] = frame_text(al, s.ancestor_frame);
    j["events"] = {invdel::to_string(s.events[0]), invdel::to_string(s.events[1])};
    j["genomes"] = {frame_text(al, s.genomes[0].canonical()),
                    frame_text(al, s.genomes[1].canonical())};
    j["simulated_events"] = s.events[0].size() + s.events[1].size();
    j["distance"] = d.total;
    std::ostringstream out;
    out << "# seed " << seed << '\n'
        << "# events G1 " << invdel::to_string(s.events[0]) << '\n'
        << "# events G2 " << invdel::to_string(s.events[1]) << '\n'
        << "# simulated events " << s.events[0].size() + s.events[1].size() << '\n'
        << "# distance " << d.total << '\n'
        << "ancestor: " << frame_line(al, s.ancestor_frame) << '\n'
        << "G1: " << frame_line(al, invdel::apply_to_frame(s.ancestor_frame, s.events[0]))
        << '\n'
        << "G2: " << frame_line(al, invdel::apply_to_frame(s.ancestor_frame, s.events[1]))
        << '\n';
    emit(ctx.config(), j, out.str());
    return 0;
  }

  std::vector<size_t> parse_multiset(std::string const& text) {
    std::vector<size_t> out;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
      size_t pos = 0;
      unsigned long v = 0;
      try {
        v = std::stoul(item, &pos);
      } catch (std::exception const&) {
        pos = 0;
      }
      if (pos == 0 || pos != item.size() || v == 0) {
        throw invdel::InvalidArgument("expected positive integers, got '" + item + "'");
      }
      out.push_back(v);
    }
    return out;
  }

  int cmd_reduce(Context const& ctx, std::string const& list) {
    auto a = parse_multiset(list);
    auto inst = invdel::reduce_partition(a);
    size_t m = inst.sigma.source_size();
    auto j = header("reduce-partition");
    j["multiset"] = a;
    j["m"] = m;
    std::vector<std::array<size_t, 2>> pairs;
    for (auto [i, k] : inst.sigma.pairs()) {
      if (i < k) {
        pairs.push_back({i, k});
      }
    }
    j["pairs"] = pairs;
    j["k"] = inst.k;
    std::ostringstream out;
    out << "m " << m << '\n' << "pairs";
    for (auto [i, k] : pairs) {
      out << ' ' << i << '-' << k;
    }
    out << '\n' << "k " << inst.k << '\n';
    if (m <= invdel::kMaxBalancedSortDegree) {
      bool sortable = invdel::solve_balancedsort(inst);
      j["balancedsort"] = sortable;
      out << "balancedsort " << (sortable ? "yes" : "no") << '\n';
    } else {
      j["balancedsort"] = nullptr;
      out << "balancedsort skipped (m > " << invdel::kMaxBalancedSortDegree << ")\n";
    }
    auto split = invdel::partition_witness(a);
    j["partition"] = split.has_value();
    out << "partition " << (split ? "yes" : "no");
    if (split) {
      j["split"] = {split->x, split->y};
      auto join = [](std::vector<size_t> const& v) {
        std::string s;
        for (size_t x : v) {
          s += (s.empty() ? "" : ",") + std::to_string(x);
        }
        return "{" + s + "}";
      };
      out << ' ' << join(split->x) << '|' << join(split->y);
    }
    out << '\n';
    emit(ctx.config(), j, out.str());
    return 0;
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Inversion/deletion distances between circular genomes"};
  app.require_subcommand(1);
  app.fallthrough();
  Config cfg;
  app.add_option("--cache-dir", cfg.cache_dir, "Directory for cached D-class graphs");
  app.add_option("--engine", cfg.engine, "onthefly or cayley")
      ->check(CLI::IsMember({"onthefly", "cayley"}));
  app.add_flag("--fast-pairs", cfg.fast_pairs, "Try two reference pairs instead of all");
  app.add_option("--seed", cfg.seed, "Random seed");
  app.add_option("--max-n", cfg.max_n, "Largest genome (or relation size) accepted");
  app.add_flag("--json", cfg.json, "Machine-readable output");

  std::string file, a, b, format = "phylip", multiset;
  bool directed = false, emit_events = false, relations = false;
  std::optional<size_t> enumerate;
  size_t regions = 8;
  std::array<size_t, 4> counts{2, 2, 2, 2};

  auto* distance = app.add_subcommand("distance", "Distance between two genomes of a file");
  distance->add_option("file", file)->required()->check(CLI::ExistingFile);
  distance->add_option("first", a)->required();
  distance->add_option("second", b)->required();
  distance->add_flag("--directed", directed, "One-sided distance (second from first)");
  distance->add_flag("--emit-events", emit_events, "Print the optimal inversion words");

  auto* mrca = app.add_subcommand("mrca", "Reconstruct a most recent common ancestor");
  mrca->add_option("file", file)->required()->check(CLI::ExistingFile);
  mrca->add_option("first", a)->required();
  mrca->add_option("second", b)->required();

  auto* matrix = app.add_subcommand("matrix", "All-pairs distance matrix");
  matrix->add_option("file", file)->required()->check(CLI::ExistingFile);
  matrix->add_option("--format", format, "phylip or tsv")
      ->check(CLI::IsMember({"phylip", "tsv"}));

  auto* verify = app.add_subcommand("verify", "Check relations and enumeration counts");
  verify->add_flag("--relations", relations, "Check every relation instance up to --max-n");
  verify->add_option("--enumerate", enumerate, "Enumerate I_n and compare with the closed form");

  auto* simulate = app.add_subcommand("simulate", "Simulate two lineages from a random ancestor");
  simulate->add_option("--regions", regions, "Ancestor size");
  simulate->add_option("--del1", counts[0], "Deletions on the first branch");
  simulate->add_option("--inv1", counts[1], "Inversions on the first branch");
  simulate->add_option("--del2", counts[2], "Deletions on the second branch");
  simulate->add_option("--inv2", counts[3], "Inversions on the second branch");

  auto* reduce = app.add_subcommand("reduce-partition", "Build the BALANCEDSORT instance");
  reduce->add_option("multiset", multiset, "Comma separated, e.g. 1,1,2,3,4")->required();

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    Context ctx(cfg);
    if (*distance) {
      return cmd_distance(ctx, file, a, b, directed, emit_events);
    }
    if (*mrca) {
      return cmd_mrca(ctx, file, a, b);
    }
    if (*matrix) {
      return cmd_matrix(ctx, file, format);
    }
    if (*verify) {
      return cmd_verify(ctx, relations, enumerate);
    }
    if (*simulate) {
      return cmd_simulate(ctx, regions, counts);
    }
    if (*reduce) {
      return cmd_reduce(ctx, multiset);
    }
  } catch (VerificationFailure const& e) {
    std::cerr << "invdel: " << e.what() << '\n';
    return 1;
  } catch (invdel::ParseError const& e) {
    std::cerr << "invdel: " << file << ": " << e.what() << '\n';
    return 2;
  } catch (invdel::InvalidArgument const& e) {
    std::cerr << "invdel: " << e.what() << '\n';
    return 2;
  } catch (invdel::CapacityError const& e) {
    std::cerr << "invdel: capacity: " << e.what() << '\n';
    return 2;
  } catch (invdel::NoPathError const& e) {
    std::cerr << "invdel: " << e.what() << '\n';
    return 2;
  } catch (std::exception const& e) {
    std::cerr << "invdel: internal error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}
