// Copyright 2026 The VGF Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "vgf/depgraph.hpp"
#include "vgf/forkserver.hpp"
#include "vgf/fuzzer.hpp"
#include "vgf/parser.hpp"

using namespace vgf;

namespace {

constexpr int kExitFault = 0;
constexpr int kExitUsage = 1;
constexpr int kExitBudget = 2;

FitnessKind parse_fitness(const std::string& s) {
  if (s == "default") return FitnessKind::afl_default;
  if (s == "geo") return FitnessKind::geo_mean;
  if (s == "arith") return FitnessKind::arith_mean;
  if (s == "count") return FitnessKind::bucket_count;
  if (s == "total") return FitnessKind::bucket_total;
  throw CLI::ValidationError("--fitness", "unknown fitness: " + s);
}

AnalysisKind parse_analysis(const std::string& s) {
  if (s == "dfa") return AnalysisKind::dfa;
  if (s == "cfa") return AnalysisKind::cfa;
  if (s == "dcfa") return AnalysisKind::dcfa;
  throw CLI::ValidationError("--analysis", "unknown analysis: " + s);
}

TauLevel parse_tau(const std::string& s) {
  if (s == "max") return TauLevel::max;
  if (s == "max2") return TauLevel::max2;
  if (s == "max4") return TauLevel::max4;
  if (s == "max8") return TauLevel::max8;
  if (s == "min") return TauLevel::min;
  throw CLI::ValidationError("--tau", "unknown tau level: " + s);
}

SimMode parse_mode(const std::string& s) {
  if (s == "accurate") return SimMode::accurate;
  if (s == "fast") return SimMode::fast;
  throw CLI::ValidationError("--mode", "unknown mode: " + s);
}

uint64_t default_seed() {
  if (const char* env = std::getenv("VGF_SEED")) return std::strtoull(env, nullptr, 10);
  return 1;
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string part;
  while (std::getline(ss, part, ',')) {
    if (!part.empty()) out.push_back(part);
  }
  return out;
}

uint64_t median_u64(std::vector<uint64_t> v) {
  std::sort(v.begin(), v.end());
  return v[v.size() / 2];
}

struct LoadedTarget {
  Design design;
  HarnessConfig config;
};

LoadedTarget load_target(const std::string& design_path, const std::string& config_path) {
  LoadedTarget t;
  t.design = parse_design_file(design_path);
  t.config = load_config_file(config_path, t.design);
  return t;
}

int cmd_fuzz(const std::string& design_path, const std::string& config_path,
             const CampaignOptions& opts, const std::string& report_path) {
  LoadedTarget t = load_target(design_path, config_path);
  CampaignResult result = run_campaign(t.design, t.config, opts);
  const CampaignReport& rep = result.report;

  if (!report_path.empty()) {
    std::ofstream out(report_path);
    if (!out) throw IoError("cannot write report: " + report_path);
    out << rep.to_json();
  }
  std::cout << rep.to_json();

  if (rep.first_fault()) {
    std::cout << "fault found after " << *rep.first_fault() << " execs\n";
    return kExitFault;
  }
  std::cout << "budget exhausted after " << rep.execs_total << " execs, no fault\n";
  return kExitBudget;
}

int cmd_analyze(const std::string& design_path, const std::string& config_path,
                AnalysisKind analysis, TauLevel tau) {
  LoadedTarget t = load_target(design_path, config_path);
  Selection sel = analyze(t.design, analysis, tau, t.config.properties);

  std::cout << "# analysis=" << analysis_name(analysis) << " tau=" << tau_name(tau);
  if (sel.tau)
    std::cout << " resolved=" << sel.tau->resolved;
  else
    std::cout << " resolved=n/a (no reachable candidate signals)";
  std::cout << "\n";

  std::cout << "# property distances (reachable signals)\n";
  for (SignalId s = 0; s < sel.pd.pd.size(); ++s) {
    if (!sel.pd.pd[s]) continue;
    bool candidate =
        std::find(sel.candidates.begin(), sel.candidates.end(), s) != sel.candidates.end();
    std::printf("#   pd=%-3u %-9s %s%s\n", *sel.pd.pd[s],
                signal_kind_name(t.design.signals[s].kind),
                t.design.signals[s].name.c_str(), candidate ? "" : " (not selectable)");
  }
  std::cout << "# track fragment:\n";
  for (const SelectedSignal& p : sel.picks) {
    auto dot = t.design.signals[p.signal].name.rfind('.');
    std::string bare = t.design.signals[p.signal].name.substr(dot + 1);
    std::cout << "track." << bare << " = " << p.weight << "\n";
  }
  return 0;
}

int cmd_replay(const std::string& design_path, const std::string& config_path,
               const std::string& input_path, SimMode mode, uint32_t max_cycles) {
  LoadedTarget t = load_target(design_path, config_path);
  ReplayResult r = replay(t.design, t.config, input_path, mode, max_cycles);
  for (const std::string& line : r.trace) std::cout << line << "\n";
  if (r.verdict.is_fault()) {
    std::cout << "verdict: fault property=" << r.verdict.property
              << " time=" << r.verdict.fault_time << "\n";
  } else {
    std::cout << "verdict: clean\n";
  }
  std::cout << "cycles: " << r.verdict.sim_cycles
            << " events: " << r.verdict.events_observed << "\n";
  return 0;
}

int cmd_sweep(const std::string& design_path, const std::string& config_path,
              const std::string& name, const std::vector<std::string>& analyses,
              const std::vector<std::string>& taus,
              const std::vector<uint64_t>& seeds, CampaignOptions base,
              const std::string& out_path) {
  LoadedTarget t = load_target(design_path, config_path);

  std::ostream* out = &std::cout;
  std::ofstream file;
  if (!out_path.empty()) {
    file.open(out_path);
    if (!file) throw IoError("cannot write csv: " + out_path);
    out = &file;
  }
  *out << "bench,analysis,tau,seed,execs_to_fault,selected_count\n";

  for (const std::string& as : analyses) {
    AnalysisKind analysis = parse_analysis(as);
    for (const std::string& ts : taus) {
      TauLevel tau = parse_tau(ts);
      Selection sel = analyze(t.design, analysis, tau, t.config.properties);
      size_t selected = sel.picks.size();
      std::vector<uint64_t> execs;
      for (uint64_t seed : seeds) {
        CampaignOptions opts = base;
        opts.analysis = analysis;
        opts.tau = tau;
        opts.seed = seed;
        CampaignResult r = run_campaign(t.design, t.config, opts);
        auto ff = r.report.first_fault();
        *out << name << "," << as << "," << ts << "," << seed << ",";
        if (ff)
          *out << *ff;
        *out << "," << selected << "\n";
        execs.push_back(ff ? *ff : base.exec_budget);  // censored at budget
      }
      if (!execs.empty()) {
        *out << name << "," << as << "," << ts << ",median," << median_u64(execs)
             << "," << selected << "\n";
      }
    }
  }
  return 0;
}

int cmd_serve(const std::string& design_path, const std::string& config_path,
              int in_fd, int out_fd, SimMode mode, uint32_t max_cycles) {
  LoadedTarget t = load_target(design_path, config_path);
  CoverageMap map;
  Harness h(t.design, t.config, mode, &map);
  uint64_t served = serve_pipe(h, in_fd, out_fd, max_cycles);
  std::cerr << "served " << served << " requests\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"vgf - value-guided fuzzing for small hardware designs"};
  app.require_subcommand(1);

  std::string design_path, config_path, report_path, input_path, out_path;
  std::string fitness = "total", analysis, tau = "max8", mode = "accurate";
  std::string sweep_name = "design", sweep_analyses = "dfa,cfa,dcfa";
  std::string sweep_taus = "max,max2,max4,max8,min", sweep_seeds = "1,2,3,4,5";
  std::string crashes_dir, stats_path, compression;
  uint64_t seed = default_seed();
  uint64_t execs = 100000;
  uint32_t workers = 1, max_cycles = 16;
  size_t max_len = 4096;
  bool trim = false, det = false;
  int in_fd = 0, out_fd = 1;

  auto add_target = [&](CLI::App* cmd) {
    cmd->add_option("--design", design_path, "design source (.vgf.v)")->required();
    cmd->add_option("--config", config_path, "harness config")->required();
  };

  CLI::App* fuzz = app.add_subcommand("fuzz", "run a fuzzing campaign");
  add_target(fuzz);
  fuzz->add_option("--fitness", fitness, "default|geo|arith|count|total");
  fuzz->add_option("--analysis", analysis, "dfa|cfa|dcfa (select tracked set)");
  fuzz->add_option("--tau", tau, "max|max2|max4|max8|min");
  fuzz->add_option("--mode", mode, "accurate|fast");
  fuzz->add_flag("--trim,!--no-trim", trim, "testcase trimming");
  fuzz->add_flag("--det,!--no-det", det, "deterministic mutation stage");
  fuzz->add_option("--seed", seed, "campaign seed (or VGF_SEED)");
  fuzz->add_option("--execs", execs, "execution budget");
  fuzz->add_option("--workers", workers, "parallel workers");
  fuzz->add_option("--max-cycles", max_cycles, "scheduling rounds per run");
  fuzz->add_option("--max-len", max_len, "mutated input size cap");
  fuzz->add_option("--report", report_path, "campaign report JSON path");
  fuzz->add_option("--crashes-dir", crashes_dir, "crash artifact directory");
  fuzz->add_option("--stats", stats_path, "JSON-lines stats stream");
  fuzz->add_option("--compression", compression,
                   "compress_values|vectorize_values (overrides config)");

  CLI::App* an = app.add_subcommand("analyze", "select tracked signals");
  add_target(an);
  an->add_option("--analysis", analysis, "dfa|cfa|dcfa")->required();
  an->add_option("--tau", tau, "max|max2|max4|max8|min");

  CLI::App* rp = app.add_subcommand("replay", "replay an input in standalone mode");
  add_target(rp);
  rp->add_option("input", input_path, "raw input bytes")->required();
  rp->add_option("--mode", mode, "accurate|fast");
  rp->add_option("--max-cycles", max_cycles, "scheduling rounds");

  CLI::App* sw = app.add_subcommand("sweep", "campaign matrix, CSV output");
  add_target(sw);
  sw->add_option("--name", sweep_name, "bench name column");
  sw->add_option("--analysis", sweep_analyses, "comma list");
  sw->add_option("--tau", sweep_taus, "comma list");
  sw->add_option("--seeds", sweep_seeds, "comma list");
  sw->add_option("--execs", execs, "execution budget per campaign");
  sw->add_option("--max-cycles", max_cycles, "scheduling rounds per run");
  sw->add_option("--max-len", max_len, "mutated input size cap");
  sw->add_option("--mode", mode, "accurate|fast");
  sw->add_option("--out", out_path, "CSV path (default stdout)");

  CLI::App* sv = app.add_subcommand("serve", "answer framed requests on two pipes");
  add_target(sv);
  sv->add_option("--in-fd", in_fd, "request pipe fd");
  sv->add_option("--out-fd", out_fd, "response pipe fd");
  sv->add_option("--mode", mode, "accurate|fast");
  sv->add_option("--max-cycles", max_cycles, "scheduling rounds");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (app.got_subcommand(fuzz)) {
      CampaignOptions opts;
      opts.fitness = parse_fitness(fitness);
      if (!analysis.empty()) opts.analysis = parse_analysis(analysis);
      opts.tau = parse_tau(tau);
      opts.mode = parse_mode(mode);
      opts.trimming = trim;
      opts.deterministic = det;
      opts.seed = seed;
      opts.exec_budget = execs;
      opts.max_cycles = max_cycles;
      opts.max_len = max_len;
      opts.workers = workers;
      opts.crashes_dir = crashes_dir;
      opts.stats_path = stats_path;
      if (!compression.empty()) {
        if (compression == "compress_values")
          opts.compression_override = CompressionKind::compress_values;
        else if (compression == "vectorize_values")
          opts.compression_override = CompressionKind::vectorize_values;
        else
          throw ConfigParseError("unknown compression: " + compression);
      }
      return cmd_fuzz(design_path, config_path, opts, report_path);
    }
    if (app.got_subcommand(an))
      return cmd_analyze(design_path, config_path, parse_analysis(analysis),
                         parse_tau(tau));
    if (app.got_subcommand(rp))
      return cmd_replay(design_path, config_path, input_path, parse_mode(mode),
                        max_cycles);
    if (app.got_subcommand(sw)) {
      CampaignOptions base;
      base.exec_budget = execs;
      base.max_cycles = max_cycles;
      base.max_len = max_len;
      base.mode = parse_mode(mode);
      std::vector<uint64_t> seeds;
      for (const std::string& s : split_list(sweep_seeds))
        seeds.push_back(std::stoull(s));
      return cmd_sweep(design_path, config_path, sweep_name,
                       split_list(sweep_analyses), split_list(sweep_taus), seeds,
                       base, out_path);
    }
    if (app.got_subcommand(sv))
      return cmd_serve(design_path, config_path, in_fd, out_fd, parse_mode(mode),
                       max_cycles);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
