// Copyright 2026 The apexsep Authors
//
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

#include "apexsep/cli.h"

#include <array>
#include <atomic>
#include <cstdint>
#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "CLI11.hpp"
#include "apexsep/constructions.h"
#include "apexsep/error.h"
#include "apexsep/io.h"
#include "apexsep/separator.h"
#include "apexsep/verify.h"

namespace apexsep::cli {
namespace {

class VerificationFailed : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct FamilyParams {
  std::string family;
  int n = 0;
  int k = 0;
  std::string apex_edges;
  bool all_apex_edges = false;
  std::string parts;
  std::string removed;
};

const std::vector<std::string> kFamilies = {"grid", "apex-grid", "clique-sum",
                                            "example3i", "example3ii"};

std::pair<int, int> parse_pair(const std::string& item, char sep) {
  const auto at = item.find(sep);
  try {
    if (at == std::string::npos) throw std::invalid_argument(item);
    std::size_t used_a = 0, used_b = 0;
    const std::string a = item.substr(0, at), b = item.substr(at + 1);
    const int x = std::stoi(a, &used_a);
    const int y = std::stoi(b, &used_b);
    if (used_a != a.size() || used_b != b.size()) throw std::invalid_argument(item);
    return {x, y};
  } catch (const std::logic_error&) {
    throw Error(Errc::kInvalidArgument, std::string("expected a pair like 1") +
                                            sep + "2, got '" + item + "'");
  }
}

std::vector<std::pair<int, int>> parse_pairs(const std::string& text, char sep) {
  std::vector<std::pair<int, int>> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (!item.empty()) out.push_back(parse_pair(item, sep));
  }
  return out;
}

ApexEdges apex_edges_of(const FamilyParams& p) {
  return p.all_apex_edges ? complete_apex_edges(p.k) : parse_pairs(p.apex_edges, '-');
}

CliqueSumSpec clique_sum_spec(const FamilyParams& p) {
  CliqueSumSpec spec;
  for (auto [k, n] : parse_pairs(p.parts, ':')) {
    spec.parts.push_back({k, n, complete_apex_edges(k)});
  }
  spec.removed_edges = parse_pairs(p.removed, '-');
  return spec;
}

Factorization make_factorization(const FamilyParams& p) {
  if (p.family == "grid") return factorize_apex_grid(0, p.n);
  if (p.family == "apex-grid") return factorize_apex_grid(p.k, p.n, apex_edges_of(p));
  if (p.family == "clique-sum") return factorize_clique_sum(clique_sum_spec(p));
  if (p.family == "example3i") return example3_i(p.n, p.k);
  return example3_ii(p.n, p.k);
}

Graph make_graph(const FamilyParams& p) {
  if (p.family == "grid") return grid(p.n);
  if (p.family == "apex-grid") return apex_grid(p.k, p.n, apex_edges_of(p));
  if (p.family == "clique-sum") return clique_sum_base(clique_sum_spec(p));
  return make_factorization(p).base;
}

void add_family_options(CLI::App* sub, FamilyParams& p) {
  sub->add_option("family", p.family, "Graph family")
      ->required()
      ->check(CLI::IsMember(kFamilies));
  sub->add_option("--n", p.n, "Grid side, or clique size for example3i");
  sub->add_option("--k", p.k, "Number of apex vertices, or blocks for example3i");
  sub->add_option("--apex-edges", p.apex_edges, "Edges among apexes, e.g. 1-2,2-3");
  sub->add_flag("--all-apex-edges", p.all_apex_edges, "Make the apex set a clique");
  sub->add_option("--parts", p.parts, "Clique-sum parts as k:n,k:n,...");
  sub->add_option("--removed", p.removed, "Apex edges dropped after gluing, e.g. 1-2");
}

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::kInvalidArgument, "cannot read " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_text(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw Error(Errc::kInvalidArgument, "cannot write " + path);
  file << text;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Graph load_graph(const std::string& path, int factor) {
  const Json j = parse_json(read_text(path));
  if (!j.is_object() || !j.contains("factors")) {
    if (factor != 0) throw Error(Errc::kInvalidArgument, "--factor needs a factorization file");
    return graph_from_json(j);
  }
  const Factorization f = factorization_from_json(j);
  if (factor == 0) return f.base;
  if (factor < 0 || factor > f.d()) {
    throw Error(Errc::kInvalidArgument, "no factor " + std::to_string(factor));
  }
  return f.factors[factor - 1];
}

Measure load_measure(const std::string& spec, int n) {
  if (spec == "uniform") return Measure::uniform(n);
  Measure mu = measure_from_json(parse_json(read_text(spec)));
  if (mu.size() != n) {
    throw Error(Errc::kInvalidMeasure, "measure has " + std::to_string(mu.size()) +
                                           " weights for " + std::to_string(n) +
                                           " vertices");
  }
  return mu;
}

void require_verified(const VerificationReport& report, const std::string& what) {
  if (const CheckResult* bad = report.first_failure()) {
    throw VerificationFailed(what + ": " + bad->name + ": " + bad->detail);
  }
}

// Sweep instance (n, k, rep): apex edges drawn from a generator seeded by all
// four values, so the row does not depend on scheduling.
struct SweepRow {
  std::string csv;
  std::string failure;
};

SweepRow sweep_instance(int n, int k, int rep, std::uint64_t seed) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(n), static_cast<std::uint32_t>(k),
                    static_cast<std::uint32_t>(rep)};
  std::mt19937_64 rng(seq);
  ApexEdges among;
  for (auto e : complete_apex_edges(k)) {
    if (rng() & 1u) among.push_back(e);
  }
  SweepRow row;
  try {
    const Factorization f = factorize_apex_grid(k, n, among);
    const VerificationReport report = verify_factorization(f);
    if (const CheckResult* bad = report.first_failure()) {
      row.failure = bad->name + ": " + bad->detail;
    }
    const SeparatorResult r = separate(f, Measure::uniform(f.base.size()));
    row.csv = separator_csv_row(f, r);
  } catch (const std::exception& e) {
    row.failure = e.what();
  }
  if (!row.failure.empty()) {
    row.failure = "n=" + std::to_string(n) + " k=" + std::to_string(k) +
                  " rep=" + std::to_string(rep) + ": " + row.failure;
  }
  return row;
}

std::vector<std::string> without_manifest_flag(const std::vector<std::string>& args) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--manifest-out") {
      ++i;
      continue;
    }
    if (args[i].rfind("--manifest-out=", 0) == 0) continue;
    out.push_back(args[i]);
  }
  return out;
}

Json manifest_for(const CLI::App* sub, const std::vector<std::string>& args,
                  std::uint64_t seed) {
  Json params = Json::object();
  Json outputs = Json::array();
  Json inputs = Json::array();
  for (const CLI::Option* opt : sub->get_options()) {
    if (opt->count() == 0) continue;
    const auto& values = opt->results();
    std::string joined;
    for (const std::string& v : values) joined += (joined.empty() ? "" : ",") + v;
    params[opt->get_name()] = joined;
    if (opt->get_name() == "--out" || opt->get_name() == "--csv") outputs.push_back(joined);
    if (opt->get_name() == "file" || opt->get_name() == "manifest") inputs.push_back(joined);
  }
  return {{"command", sub->get_name()},
          {"args", without_manifest_flag(args)},
          {"parameters", std::move(params)},
          {"inputs", std::move(inputs)},
          {"outputs", std::move(outputs)},
          {"seed", seed}};
}

int run_parsed(const std::vector<std::string>& args, std::ostream& out,
               std::ostream& err, int depth);

int dispatch(const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err, int depth) {
  CLI::App app{"Apex-grid factorizations, clique cover width and separators", "apexsep"};
  app.require_subcommand(1);
  std::string manifest_out;
  app.add_option("--manifest-out", manifest_out, "Write a replayable run manifest");
  app.fallthrough();

  FamilyParams fp;
  std::string file, out_path, format = "json", measure = "uniform", csv_path;
  std::uint64_t budget = kDefaultSearchBudget;
  bool greedy = false;
  int factor = 0, apex = 1;
  int n_min = 2, n_max = 20, k_min = 0, k_max = 5, reps = 5, jobs = 1;
  std::uint64_t seed = 1;

  CLI::App* construct = app.add_subcommand("construct", "Write a graph");
  add_family_options(construct, fp);
  construct->add_option("--format", format)->check(CLI::IsMember({"json", "dot"}));
  construct->add_option("--out", out_path, "Output path (stdout if omitted)");

  CLI::App* factorize = app.add_subcommand("factorize", "Write a verified factorization");
  add_family_options(factorize, fp);
  factorize->add_option("--out", out_path, "Output path (stdout if omitted)");

  CLI::App* verify = app.add_subcommand("verify", "Re-check a factorization file");
  verify->add_option("file", file)->required();
  verify->add_option("--out", out_path, "Report path (stdout if omitted)");

  CLI::App* ccw = app.add_subcommand("ccw", "Clique cover width of a graph");
  ccw->add_option("file", file, "Graph or factorization file")->required();
  auto* exact_flag = ccw->add_flag("--exact", "Branch and bound (default)");
  ccw->add_flag("--greedy", greedy, "Greedy upper bound")->excludes(exact_flag);
  ccw->add_option("--budget", budget, "Search node limit");
  ccw->add_option("--factor", factor, "Factor index of a factorization file, 0 = base");
  ccw->add_option("--out", out_path);

  CLI::App* bandwidth = app.add_subcommand("bandwidth", "Exact bandwidth of a graph");
  bandwidth->add_option("file", file, "Graph or factorization file")->required();
  bandwidth->add_option("--budget", budget, "Search node limit");
  bandwidth->add_option("--factor", factor, "Factor index of a factorization file, 0 = base");
  bandwidth->add_option("--out", out_path);

  CLI::App* sep = app.add_subcommand("separate", "Balanced separator with clique cover");
  sep->add_option("file", file, "Factorization file")->required();
  sep->add_option("--measure", measure, "'uniform' or a weights JSON file");
  sep->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));
  sep->add_option("--csv", csv_path, "Also write the CSV header and row here");
  sep->add_option("--out", out_path);

  CLI::App* audit = app.add_subcommand("audit", "Trace the clique lower-bound argument");
  audit->add_option("file", file, "Factorization file")->required();
  audit->add_option("--apex", apex, "1-based apex index");
  audit->add_option("--out", out_path);

  CLI::App* sweep = app.add_subcommand("sweep", "Factorize and separate an apex-grid range");
  sweep->add_option("--n-min", n_min);
  sweep->add_option("--n-max", n_max);
  sweep->add_option("--k-min", k_min);
  sweep->add_option("--k-max", k_max);
  sweep->add_option("--reps", reps, "Random apex-edge sets per (n, k)");
  sweep->add_option("--seed", seed);
  sweep->add_option("--jobs", jobs)->check(CLI::Range(1, 256));
  sweep->add_option("--out", out_path);

  CLI::App* replay = app.add_subcommand("replay", "Re-run a manifest");
  std::string manifest;
  replay->add_option("manifest", manifest)->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  }

  CLI::App* chosen = app.get_subcommands().front();
  if (!manifest_out.empty()) {
    write_text(manifest_out, dump(manifest_for(chosen, args, chosen == sweep ? seed : 0)),
               out);
  }

  if (chosen == construct) {
    const Graph g = make_graph(fp);
    write_text(out_path, format == "dot" ? to_dot(g) : dump(graph_to_json(g)), out);
  } else if (chosen == factorize) {
    const Factorization f = make_factorization(fp);
    require_verified(verify_factorization(f), "factorization");
    write_text(out_path, dump(factorization_to_json(f)), out);
  } else if (chosen == verify) {
    const Factorization f = factorization_from_json(parse_json(read_text(file)));
    const VerificationReport report = verify_factorization(f);
    write_text(out_path, dump(report_to_json(report)), out);
    require_verified(report, "verification failed");
  } else if (chosen == ccw) {
    const Graph g = load_graph(file, factor);
    const CcwResult r = greedy ? ccw_upper_greedy(g) : ccw_exact(g, budget);
    if (!verify_cover(g, r.cover).ok || cover_width(g, r.cover).width != r.width) {
      throw VerificationFailed("solver returned an inconsistent cover");
    }
    write_text(out_path, dump(ccw_to_json(r)), out);
  } else if (chosen == bandwidth) {
    const Graph g = load_graph(file, factor);
    const BandwidthResult r = bandwidth_exact(g, budget);
    if (ordering_width(g, r.ordering) != r.width) {
      throw VerificationFailed("solver returned an inconsistent ordering");
    }
    write_text(out_path, dump(bandwidth_to_json(r)), out);
  } else if (chosen == sep) {
    const Factorization f = factorization_from_json(parse_json(read_text(file)));
    const Measure mu = load_measure(measure, f.base.size());
    const SeparatorResult r = separate(f, mu);
    require_verified(verify_separator(f.base, mu, r), "separator");
    const std::string csv = separator_csv_header() + "\n" + separator_csv_row(f, r) + "\n";
    if (!csv_path.empty()) write_text(csv_path, csv, out);
    write_text(out_path, format == "csv" ? csv : dump(separator_to_json(r)), out);
  } else if (chosen == audit) {
    const Factorization f = factorization_from_json(parse_json(read_text(file)));
    write_text(out_path, dump(audit_to_json(audit_lower_bound(f, apex))), out);
  } else if (chosen == sweep) {
    std::vector<std::array<int, 3>> cases;
    for (int n = n_min; n <= n_max; ++n)
      for (int k = k_min; k <= k_max; ++k)
        for (int rep = 0; rep < reps; ++rep) cases.push_back({n, k, rep});
    std::vector<SweepRow> rows(cases.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      for (std::size_t i = next++; i < cases.size(); i = next++) {
        rows[i] = sweep_instance(cases[i][0], cases[i][1], cases[i][2], seed);
      }
    };
    std::vector<std::thread> pool;
    for (int j = 1; j < jobs; ++j) pool.emplace_back(worker);
    worker();
    for (std::thread& t : pool) t.join();
    std::string csv = separator_csv_header() + "\n";
    std::string failures;
    for (const SweepRow& row : rows) {
      if (!row.csv.empty()) csv += row.csv + "\n";
      if (!row.failure.empty()) failures += row.failure + "\n";
    }
    write_text(out_path, csv, out);
    if (!failures.empty()) throw VerificationFailed("sweep failures:\n" + failures);
  } else if (chosen == replay) {
    if (depth > 0) throw Error(Errc::kInvalidArgument, "a manifest cannot replay a manifest");
    const Json m = parse_json(read_text(manifest));
    std::vector<std::string> replayed;
    try {
      replayed = m.at("args").get<std::vector<std::string>>();
    } catch (const Json::exception& e) {
      throw Error(Errc::kParse, std::string("manifest: ") + e.what());
    }
    return run_parsed(replayed, out, err, depth + 1);
  }
  return kExitOk;
}

int run_parsed(const std::vector<std::string>& args, std::ostream& out,
               std::ostream& err, int depth) {
  try {
    return dispatch(args, out, err, depth);
  } catch (const VerificationFailed& e) {
    err << e.what() << "\n";
    return kExitVerificationFailed;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.code() == Errc::kInvalidFactorization ? kExitVerificationFailed : kExitUsage;
  } catch (const std::logic_error& e) {
    err << "internal check failed: " << e.what() << "\n";
    return kExitVerificationFailed;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  return run_parsed(args, out, err, 0);
}

}  // namespace apexsep::cli
