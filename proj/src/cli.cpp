// Copyright 2026 The pairkey Authors
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

#include "pairkey/cli.hpp"

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "pairkey/channel.hpp"
#include "pairkey/graph.hpp"
#include "pairkey/io.hpp"
#include "pairkey/pairing.hpp"
#include "pairkey/theory.hpp"
#include "pairkey/validation.hpp"

namespace pairkey::cli {
namespace {

constexpr std::size_t kFigureN = 200;
constexpr std::size_t kFigureTrials = 500;
constexpr std::size_t kFigureKMax = 25;

struct HelpRequested {
  std::string text;
};

std::string_view trim(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_commas(std::string_view text) {
  std::vector<std::string_view> parts;
  while (true) {
    const auto comma = text.find(',');
    parts.push_back(trim(text.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return parts;
}

std::size_t parse_count(std::string_view s) {
  std::size_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
    throw UsageError("not a non-negative integer: '" + std::string(s) + "'");
  }
  return v;
}

double parse_double(std::string_view s) {
  // from_chars for double is not available on every libstdc++ we target.
  const std::string copy(s);
  char* end = nullptr;
  const double v = std::strtod(copy.c_str(), &end);
  if (copy.empty() || end != copy.c_str() + copy.size()) {
    throw UsageError("not a number: '" + copy + "'");
  }
  return v;
}

// Channel selection from --channel and --allow-large-rho.
Channel resolve_channel(const std::optional<std::string>& name,
                        bool allow_large_rho) {
  Channel c = Channel::kOnOff;
  if (name) {
    try {
      c = parse_channel(*name);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }
  if (!allow_large_rho) return c;
  if (!name) return Channel::kDiskForced;
  if (c == Channel::kOnOff) {
    throw UsageError(
        "conflicting channel flags: --allow-large-rho applies to the disk "
        "channel only");
  }
  return Channel::kDiskForced;
}

Format resolve_format(const std::optional<std::string>& flag,
                      const std::optional<std::filesystem::path>& out) {
  if (flag) {
    if (*flag == "csv") return Format::kCsv;
    if (*flag == "json") return Format::kJson;
    throw UsageError("unknown format '" + *flag + "' (expected csv or json)");
  }
  if (out && out->extension() == ".json") return Format::kJson;
  return Format::kCsv;
}

unsigned workers_from_env() {
  const char* env = std::getenv("PAIRKEY_WORKERS");
  if (env == nullptr || *env == '\0') return 0;
  return static_cast<unsigned>(parse_count(env));
}

// Values as they arrive from flags, a --config file, or both.
struct SweepOptions {
  std::optional<std::size_t> n;
  std::optional<std::string> K;
  std::optional<std::string> p;
  std::optional<std::size_t> trials;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> channel;
  std::optional<unsigned> workers;
  std::optional<std::string> out;
  std::optional<std::string> format;
  bool allow_large_rho = false;
  std::string config_path;
};

std::string grid_text(const nlohmann::json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number()) return v.dump();
  if (v.is_array()) {
    std::string s;
    for (const auto& item : v) {
      if (!s.empty()) s += ',';
      s += item.is_string() ? item.get<std::string>() : item.dump();
    }
    return s;
  }
  throw UsageError("grid must be a string, number, or array");
}

// Fills unset fields of `opts` from a JSON config file.
void merge_config_file(SweepOptions& opts) {
  std::ifstream in(opts.config_path);
  if (!in) throw UsageError("cannot read config file " + opts.config_path);
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw UsageError("config " + opts.config_path + ": " + e.what());
  }
  try {
    if (!opts.n && j.contains("n")) opts.n = j["n"].get<std::size_t>();
    if (!opts.K && j.contains("K")) opts.K = grid_text(j["K"]);
    if (!opts.p && j.contains("p")) opts.p = grid_text(j["p"]);
    if (!opts.trials && j.contains("trials")) {
      opts.trials = j["trials"].get<std::size_t>();
    }
    if (!opts.seed && j.contains("seed")) {
      opts.seed = j["seed"].get<std::uint64_t>();
    }
    if (!opts.channel && j.contains("channel")) {
      opts.channel = j["channel"].get<std::string>();
    }
    if (!opts.workers && j.contains("workers")) {
      opts.workers = j["workers"].get<unsigned>();
    }
    if (!opts.out && j.contains("out")) opts.out = j["out"].get<std::string>();
    if (!opts.format && j.contains("format")) {
      opts.format = j["format"].get<std::string>();
    }
    if (!opts.allow_large_rho) {
      opts.allow_large_rho = j.value("allow_large_rho", false);
    }
  } catch (const nlohmann::json::exception& e) {
    throw UsageError("config " + opts.config_path + ": " + e.what());
  }
}

void add_sweep_flags(CLI::App* cmd, SweepOptions& o) {
  cmd->add_option("--n", o.n, "number of nodes");
  cmd->add_option("--K", o.K, "keys per node: a..b and/or comma list");
  cmd->add_option("--p", o.p, "channel probabilities: comma list");
  cmd->add_option("--trials", o.trials, "trials per (K,p) cell");
  cmd->add_option("--seed", o.seed, "master seed (0 = from entropy)");
  cmd->add_option("--channel", o.channel, "on_off | disk | disk_forced");
  cmd->add_flag("--allow-large-rho", o.allow_large_rho,
                "disk channel: admit rho = sqrt(p/pi) >= 0.5");
  cmd->add_option("--workers", o.workers,
                  "worker threads (default: $PAIRKEY_WORKERS or all cores)");
  cmd->add_option("--out", o.out, "output path (default: stdout)");
  cmd->add_option("--format", o.format, "csv | json");
}

void check_p(double p, bool open_at_one) {
  const bool ok = open_at_one ? (p > 0.0 && p < 1.0) : (p > 0.0 && p <= 1.0);
  if (!ok) {
    throw UsageError(std::string("p must be in (0,1") +
                     (open_at_one ? ")" : "]"));
  }
}

}  // namespace

std::vector<std::size_t> parse_k_list(std::string_view text) {
  std::vector<std::size_t> out;
  for (std::string_view part : split_commas(text)) {
    const auto dots = part.find("..");
    if (dots == std::string_view::npos) {
      out.push_back(parse_count(part));
      continue;
    }
    const std::size_t lo = parse_count(trim(part.substr(0, dots)));
    const std::size_t hi = parse_count(trim(part.substr(dots + 2)));
    if (lo > hi) throw UsageError("empty K range '" + std::string(part) + "'");
    for (std::size_t k = lo; k <= hi; ++k) out.push_back(k);
  }
  return out;
}

std::vector<double> parse_p_list(std::string_view text) {
  std::vector<double> out;
  for (std::string_view part : split_commas(text)) {
    if (part.find("..") != std::string_view::npos) {
      throw UsageError("p accepts comma lists only");
    }
    out.push_back(parse_double(part));
  }
  return out;
}

FigurePreset figure_preset(std::string_view name) {
  FigurePreset preset;
  preset.name = std::string(name);
  if (name == "fig2" || name == "fig3" || name == "fig4") {
    ExperimentConfig c;
    c.n = kFigureN;
    c.trials = kFigureTrials;
    for (std::size_t K = 1; K <= kFigureKMax; ++K) c.K_grid.push_back(K);
    c.p_grid = {0.2, 0.4, 0.6, 0.8, 1.0};
    c.channel = name == "fig4" ? Channel::kDiskForced : Channel::kOnOff;
    preset.sweep = c;
    return preset;
  }
  if (name == "fig-intersection") {
    preset.dump = DumpPlan{50, 5, 0.2, Channel::kOnOff};
    return preset;
  }
  throw UsageError("unknown figure preset '" + std::string(name) +
                   "' (expected fig2, fig3, fig4, fig-intersection)");
}

CliInvocation parse_cli(int argc, const char* const* argv) {
  CLI::App app{"Pairwise key predistribution under on/off and disk channels"};
  app.require_subcommand(1, 1);

  SweepOptions sim;
  bool compare = false;
  auto* simulate = app.add_subcommand("simulate", "Monte Carlo (K,p) sweep");
  add_sweep_flags(simulate, sim);
  simulate->add_flag("--compare", compare,
                     "also run the grid under on_off and report deltas");
  simulate->add_option("--config", sim.config_path, "JSON config file");

  std::size_t th_n = 0, th_K = 0;
  double th_p = 0.0;
  std::optional<std::string> th_out;
  auto* theory_cmd = app.add_subcommand("theory", "closed forms as JSON");
  theory_cmd->add_option("--n", th_n)->required();
  theory_cmd->add_option("--K", th_K)->required();
  theory_cmd->add_option("--p", th_p)->required();
  theory_cmd->add_option("--out", th_out);

  std::size_t va_n = 5, va_K = 2;
  double va_p = 0.5;
  std::uint64_t va_samples = 100000;
  std::uint64_t va_seed = 0;
  std::optional<std::string> va_out;
  auto* validate = app.add_subcommand("validate", "moment and bound checks");
  validate->add_option("--n", va_n, "nodes (3..50)")->capture_default_str();
  validate->add_option("--K", va_K)->capture_default_str();
  validate->add_option("--p", va_p)->capture_default_str();
  validate->add_option("--samples", va_samples)->capture_default_str();
  validate->add_option("--seed", va_seed, "0 = from entropy");
  validate->add_option("--out", va_out);

  SweepOptions fig;
  std::string fig_name;
  auto* figure = app.add_subcommand("figure", "run a figure preset");
  figure->add_option("name", fig_name, "fig2 | fig3 | fig4 | fig-intersection")
      ->required();
  figure->add_option("--trials", fig.trials, "override trials per cell");
  figure->add_option("--seed", fig.seed, "master seed (0 = from entropy)");
  figure->add_option("--workers", fig.workers);
  figure->add_option("--out", fig.out,
                     "output file (directory for fig-intersection)");
  figure->add_option("--format", fig.format, "csv | json");

  SweepOptions dump;
  auto* dump_cmd =
      app.add_subcommand("dump-instance", "write one sampled instance");
  dump_cmd->add_option("--n", dump.n)->required();
  dump_cmd->add_option("--K", dump.K)->required();
  dump_cmd->add_option("--p", dump.p)->required();
  dump_cmd->add_option("--channel", dump.channel, "on_off | disk | disk_forced");
  dump_cmd->add_flag("--allow-large-rho", dump.allow_large_rho);
  dump_cmd->add_option("--seed", dump.seed, "0 = from entropy");
  dump_cmd->add_option("--out", dump.out, "output directory")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    throw HelpRequested{app.help()};
  } catch (const CLI::CallForAllHelp&) {
    throw HelpRequested{app.help("", CLI::AppFormatMode::All)};
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }

  CliInvocation inv;
  if (*simulate) {
    inv.subcommand = Subcommand::kSimulate;
    if (!sim.config_path.empty()) merge_config_file(sim);
    if (!sim.K) throw UsageError("simulate: --K is required");
    if (!sim.p) throw UsageError("simulate: --p is required");
    ExperimentConfig& c = inv.config;
    c.n = sim.n.value_or(c.n);
    c.K_grid = parse_k_list(*sim.K);
    c.p_grid = parse_p_list(*sim.p);
    c.trials = sim.trials.value_or(c.trials);
    c.seed = sim.seed.value_or(0);
    c.channel = resolve_channel(sim.channel, sim.allow_large_rho);
    inv.compare = compare;
    if (sim.out) inv.out = *sim.out;
    inv.format = resolve_format(sim.format, inv.out);
    inv.workers = sim.workers ? *sim.workers : workers_from_env();
    try {
      c.validate();
    } catch (const std::exception& e) {
      throw UsageError(e.what());
    }
  } else if (*theory_cmd) {
    inv.subcommand = Subcommand::kTheory;
    inv.n = th_n;
    inv.K = th_K;
    inv.p = th_p;
    check_p(th_p, false);
    try {
      SchemeParams{th_n, th_K}.validate();
    } catch (const std::exception& e) {
      throw UsageError(e.what());
    }
    if (th_out) inv.out = *th_out;
    inv.format = Format::kJson;
  } else if (*validate) {
    inv.subcommand = Subcommand::kValidate;
    inv.n = va_n;
    inv.K = va_K;
    inv.p = va_p;
    inv.samples = va_samples;
    inv.config.seed = va_seed;
    check_p(va_p, false);
    if (va_n < 3 || va_n > 50) throw UsageError("validate: n must be in 3..50");
    if (va_samples < 1000) throw UsageError("validate: samples must be >= 1000");
    try {
      SchemeParams{va_n, va_K}.validate();
    } catch (const std::exception& e) {
      throw UsageError(e.what());
    }
    if (va_out) inv.out = *va_out;
    inv.format = Format::kJson;
  } else if (*figure) {
    inv.subcommand = Subcommand::kFigure;
    inv.preset = fig_name;
    const FigurePreset preset = figure_preset(fig_name);
    if (preset.sweep) {
      inv.config = *preset.sweep;
      inv.config.trials = fig.trials.value_or(inv.config.trials);
      if (inv.config.trials == 0) throw UsageError("trials must be >= 1");
    }
    inv.dump = preset.dump;
    inv.config.seed = fig.seed.value_or(0);
    if (fig.out) inv.out = *fig.out;
    inv.format = resolve_format(fig.format, inv.out);
    inv.workers = fig.workers ? *fig.workers : workers_from_env();
  } else {
    inv.subcommand = Subcommand::kDumpInstance;
    DumpPlan plan;
    plan.n = *dump.n;
    const auto Ks = parse_k_list(*dump.K);
    if (Ks.size() != 1) throw UsageError("dump-instance: --K takes one value");
    plan.K = Ks.front();
    plan.p = parse_double(*dump.p);
    plan.channel = resolve_channel(dump.channel, dump.allow_large_rho);
    check_p(plan.p, false);
    try {
      SchemeParams{plan.n, plan.K}.validate();
      if (plan.channel == Channel::kDisk) match_rho(plan.p);
    } catch (const std::exception& e) {
      throw UsageError(e.what());
    }
    inv.dump = plan;
    inv.config.seed = dump.seed.value_or(0);
    inv.out = *dump.out;
  }
  return inv;
}

DumpSummary dump_instance(const DumpPlan& plan, std::uint64_t seed,
                          const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) {
    throw OutputError("cannot create directory " + dir.string() + ": " +
                      ec.message());
  }
  Rng rng(trial_seed(seed, plan.channel, plan.n, plan.K, plan.p, 0));
  const PairingTable table = sample_pairing({plan.n, plan.K}, rng);
  const Graph h = k_adjacency_graph(table);
  std::optional<Positions> positions;
  Graph g(plan.n);
  if (plan.channel == Channel::kOnOff) {
    g = sample_er(plan.n, ChannelParams{plan.p}, rng);
  } else {
    positions = sample_positions(plan.n, rng);
    const DiskParams dp = plan.channel == Channel::kDisk
                              ? match_rho(plan.p)
                              : match_rho_forced(plan.p);
    g = disk_graph(*positions, dp);
  }
  const Graph both = intersect(h, g);
  const ComponentLabeling comps = connected_components(both);

  const auto emit = [&](const char* name, auto&& writer) {
    std::ostringstream os;
    writer(os);
    write_file(dir / name, os.str());
  };
  emit("pairing.txt", [&](std::ostream& os) { write_pairing_table(os, table); });
  emit("h_edges.txt", [&](std::ostream& os) { write_edge_list(os, h); });
  emit("channel_edges.txt", [&](std::ostream& os) { write_edge_list(os, g); });
  emit("intersection_edges.txt",
       [&](std::ostream& os) { write_edge_list(os, both); });
  emit("components.txt", [&](std::ostream& os) {
    for (std::size_t i = 0; i < comps.labels.size(); ++i) {
      os << i + 1 << ' ' << comps.labels[i] << '\n';
    }
  });
  if (positions) {
    emit("positions.txt",
         [&](std::ostream& os) { write_positions(os, *positions); });
  }

  DumpSummary s;
  s.h_edges = h.edge_count();
  s.channel_edges = g.edge_count();
  s.intersection_edges = both.edge_count();
  s.h_connected = is_connected(h);
  s.channel_connected = is_connected(g);
  s.intersection_connected = is_connected(both);
  s.isolated = isolated_count(both);
  s.component_count = comps.component_count;
  return s;
}

namespace {

std::uint64_t effective_seed(std::uint64_t requested) {
  if (requested != 0) return requested;
  std::random_device rd;
  std::uint64_t s = 0;
  while (s == 0) s = (std::uint64_t{rd()} << 32) | rd();
  return s;
}

void emit(const CliInvocation& inv, const std::string& text,
          std::ostream& out) {
  if (inv.out && inv.out->string() != "-") {
    write_file(*inv.out, text);
  } else {
    out << text;
  }
}

std::string render(const EstimateTable& table, Format format) {
  if (format == Format::kJson) return to_json(table).dump(2) + "\n";
  std::ostringstream os;
  write_csv(os, table);
  return os.str();
}

void warn_forced(const EstimateTable& table, std::ostream& err) {
  for (const CellEstimate& r : table.rows) {
    if (r.forced_rho && r.K == table.rows.front().K) {
      err << "warning: p=" << format_prob(r.p)
          << " uses rho=sqrt(p/pi) >= 0.5; P(edge) is below pi*rho^2\n";
    }
  }
}

int run_sweep(const CliInvocation& inv, std::ostream& out, std::ostream& err) {
  if (!inv.compare) {
    const EstimateTable table = sweep(inv.config, inv.workers);
    warn_forced(table, err);
    emit(inv, render(table, inv.format), out);
    return kExitOk;
  }
  const ChannelComparison cmp = compare_channels(inv.config, inv.workers);
  warn_forced(cmp.other, err);
  for (const CrossoverDelta& d : cmp.crossovers) {
    err << "p=" << format_prob(d.p) << " K*_on_off="
        << (d.baseline_K ? std::to_string(*d.baseline_K) : "none") << " K*_"
        << to_string(inv.config.channel) << '='
        << (d.other_K ? std::to_string(*d.other_K) : "none") << " |delta|="
        << (d.distance() ? std::to_string(*d.distance()) : "n/a")
        << (d.forced_rho ? " (forced rho)" : "") << '\n';
  }
  if (inv.format == Format::kJson) {
    emit(inv, to_json(cmp).dump(2) + "\n", out);
  } else {
    EstimateTable merged = cmp.baseline;
    if (inv.config.channel != Channel::kOnOff) {
      merged.rows.insert(merged.rows.end(), cmp.other.rows.begin(),
                         cmp.other.rows.end());
    }
    merged.sort();
    emit(inv, render(merged, Format::kCsv), out);
  }
  return kExitOk;
}

int dispatch(CliInvocation inv, std::ostream& out, std::ostream& err) {
  switch (inv.subcommand) {
    case Subcommand::kTheory:
      emit(inv, to_json(theory::make_report(inv.n, inv.K, inv.p)).dump(2) + "\n",
           out);
      return kExitOk;
    case Subcommand::kValidate: {
      inv.config.seed = effective_seed(inv.config.seed);
      err << "seed: " << inv.config.seed << '\n';
      const ValidationReport report =
          validate_bounds(inv.n, inv.K, inv.p, inv.samples, inv.config.seed);
      for (const BoundCheck& c : report.checks) {
        err << to_string(c.status) << ' ' << c.name << " empirical="
            << format_prob(c.empirical) << " theory=" << format_prob(c.theory)
            << " sigma=" << format_prob(c.sigma)
            << (c.note.empty() ? "" : " (" + c.note + ")") << '\n';
      }
      emit(inv, to_json(report).dump(2) + "\n", out);
      return report.passed() ? kExitOk : kExitValidationFailed;
    }
    case Subcommand::kSimulate:
    case Subcommand::kFigure:
      inv.config.seed = effective_seed(inv.config.seed);
      err << "seed: " << inv.config.seed << '\n';
      if (inv.dump) {
        const std::filesystem::path dir =
            inv.out.value_or(std::filesystem::path(inv.preset));
        const DumpSummary s = dump_instance(*inv.dump, inv.config.seed, dir);
        err << "wrote " << dir.string() << ": H connected=" << s.h_connected
            << ", G connected=" << s.channel_connected
            << ", intersection connected=" << s.intersection_connected
            << " (" << s.component_count << " components)\n";
        return kExitOk;
      }
      return run_sweep(inv, out, err);
    case Subcommand::kDumpInstance: {
      inv.config.seed = effective_seed(inv.config.seed);
      err << "seed: " << inv.config.seed << '\n';
      const DumpSummary s = dump_instance(*inv.dump, inv.config.seed, *inv.out);
      nlohmann::ordered_json j;
      j["seed"] = inv.config.seed;
      j["h_edges"] = s.h_edges;
      j["channel_edges"] = s.channel_edges;
      j["intersection_edges"] = s.intersection_edges;
      j["h_connected"] = s.h_connected;
      j["channel_connected"] = s.channel_connected;
      j["intersection_connected"] = s.intersection_connected;
      j["isolated"] = s.isolated;
      j["component_count"] = s.component_count;
      out << j.dump(2) << '\n';
      return kExitOk;
    }
  }
  return kExitUsage;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err) {
  CliInvocation inv;
  try {
    inv = parse_cli(argc, argv);
  } catch (const HelpRequested& h) {
    out << h.text;
    return kExitOk;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  try {
    return dispatch(std::move(inv), out, err);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace pairkey::cli
