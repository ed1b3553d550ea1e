#include "gfs/cli.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <iostream>
#include <optional>

#include <CLI11.hpp>
#include <json.hpp>

#include "gfs/bounds.hpp"
#include "gfs/sampling.hpp"
#include "gfs/serialize.hpp"
#include "gfs/wreath.hpp"

namespace gfs {

namespace {

struct RunConfig {
  std::vector<std::string> group;
  std::string mu = "auto";
  unsigned n = 1;
  unsigned n_min = 0;
  unsigned n_max = 0;
  double epsilon = 0.0;
  double beta_fraction = 0.8;
  int trials = 100;
  std::uint64_t seed = 1;
  std::string out;
  std::string format = "json";
  std::string policy = "standard";
  unsigned tower = 0;
};

class AnalysisError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Either a dense group (with table on demand) or a spectrum-only tower.
struct GroupContext {
  std::string description;
  std::optional<FiniteGroup> group;
  unsigned tower_k = 0;  // nonzero for Z2^{wr k} handled without a table

  bool spectrum_only() const { return tower_k != 0 && !group.has_value(); }
};

GroupContext resolve_group(const std::vector<std::string>& tokens) {
  if (tokens.empty()) throw CLI::ValidationError("--group", "group spec required");
  GroupContext ctx;
  auto parse_num = [](const std::string& s, const char* what) -> unsigned {
    try {
      const unsigned long v = std::stoul(s);
      if (v == 0 || v > 1u << 20) throw std::out_of_range(what);
      return static_cast<unsigned>(v);
    } catch (const std::exception&) {
      throw CLI::ValidationError("--group", std::string("bad parameter for ") + what);
    }
  };

  std::string kind = tokens[0];
  unsigned param = 0;
  if (tokens.size() == 2) {
    param = parse_num(tokens[1], kind.c_str());
  } else if (tokens.size() == 1 && kind.size() >= 2 &&
             std::isdigit(static_cast<unsigned char>(kind[1]))) {
    param = parse_num(kind.substr(1), "group order parameter");
    switch (kind[0]) {
      case 'A': kind = "alternating"; break;
      case 'S': kind = "symmetric"; break;
      case 'D': kind = "dihedral"; break;
      case 'Z':
      case 'C': kind = "cyclic"; break;
      default: throw CLI::ValidationError("--group", "unknown group spec " + tokens[0]);
    }
  } else {
    throw CLI::ValidationError("--group", "unknown group spec " + tokens[0]);
  }

  ctx.description = kind + " " + std::to_string(param);
  if (kind == "cyclic") {
    ctx.group = make_cyclic(param);
  } else if (kind == "dihedral") {
    ctx.group = make_dihedral(param);
  } else if (kind == "symmetric") {
    ctx.group = make_symmetric(param);
  } else if (kind == "alternating") {
    ctx.group = make_alternating(param);
  } else if (kind == "wreath-d") {
    WreathGroup w = wreath_z2(make_dihedral(param));
    ctx.group = w.full_group();
  } else if (kind == "tower") {
    ctx.tower_k = param;
    if (param < 2) throw CLI::ValidationError("--group", "tower parameter must be >= 2");
    WreathGroup w = iterated_wreath(param);
    if (w.has_full_group()) ctx.group = w.full_group();
  } else {
    throw CLI::ValidationError("--group", "unknown group kind " + kind);
  }
  return ctx;
}

ElemId resolve_mu(const FiniteGroup& G, const std::string& mu_spec) {
  if (mu_spec != "auto") {
    const ElemId id = static_cast<ElemId>(std::stoul(mu_spec));
    if (id >= G.order() || id == G.identity() || G.mul(id, id) != G.identity())
      throw AnalysisError("--mu " + mu_spec + " is not an involution of " + G.name());
    return id;
  }
  if (G.preferred_mu()) return *G.preferred_mu();
  const auto non_central = G.non_central_involutions();
  if (!non_central.empty()) return non_central.front();
  const auto all = G.involutions();
  if (!all.empty()) return all.front();
  throw AnalysisError(G.name() + " has no involution");
}

void emit(const RunConfig& cfg, const std::string& suffix, const std::string& contents) {
  if (cfg.out.empty()) {
    std::cout << "# " << suffix << "\n" << contents;
  } else {
    write_file(cfg.out + "_" + suffix, contents);
  }
}

int cmd_analyze(const RunConfig& cfg) {
  const GroupContext ctx = resolve_group(cfg.group);

  ConditionReport condition;
  std::optional<RateReport> rates;
  if (ctx.spectrum_only()) {
    const Spectrum spec = tower_spectrum(ctx.tower_k);
    const DimMultiset base_dims = tower_dims(ctx.tower_k - 1);
    long long base_order = 0;
    for (const auto& [d, c] : base_dims) base_order += c * d * d;
    condition = condition_from_spectrum(
        spec, static_cast<ElemId>(base_order * base_order), false);
    if (condition.condition_holds)
      rates = compute_rates(spec, condition, cfg.beta_fraction, cfg.epsilon);
  } else {
    const FiniteGroup& G = *ctx.group;
    const ElemId mu = resolve_mu(G, cfg.mu);
    const CharacterTable table = character_table(G);
    condition = condition_check(table, mu);
    if (condition.condition_holds)
      rates = compute_rates(table, mu, cfg.beta_fraction, cfg.epsilon);
  }

  {
    // Wrap the report with the run parameters (seed always recorded).
    JsonWriter w;
    w.begin_object();
    w.field("command", std::string("analyze"));
    w.field("group", ctx.description);
    w.field("seed", static_cast<long long>(cfg.seed));
    w.field_raw("condition", condition.to_json().substr(0, condition.to_json().size() - 1));
    w.end_object();
    emit(cfg, "condition.json", w.str() + "\n");
  }
  if (rates) {
    JsonWriter w;
    w.begin_object();
    w.field("command", std::string("analyze"));
    w.field("group", ctx.description);
    w.field("seed", static_cast<long long>(cfg.seed));
    w.field("beta_fraction", cfg.beta_fraction);
    w.field_raw("rates", rates->to_json().substr(0, rates->to_json().size() - 1));
    w.end_object();
    emit(cfg, "rates.json", w.str() + "\n");
  }
  return condition.condition_holds ? 0 : 2;
}

int cmd_weak_tv(const RunConfig& cfg) {
  const GroupContext ctx = resolve_group(cfg.group);
  const unsigned n_min = cfg.n_min ? cfg.n_min : 1;
  const unsigned n_max = cfg.n_max ? cfg.n_max : std::max(cfg.n, n_min);

  Spectrum spec;
  if (ctx.spectrum_only()) {
    spec = tower_spectrum(ctx.tower_k);
  } else {
    const FiniteGroup& G = *ctx.group;
    const ElemId mu = resolve_mu(G, cfg.mu);
    const auto non_central = G.non_central_involutions();
    if (std::find(non_central.begin(), non_central.end(), mu) == non_central.end())
      throw AnalysisError(G.name() + ": no non-central involution available for weak-tv");
    spec = spectrum_at(character_table(G), mu);
  }

  // chi_C(mu) = sum |chi(mu)|^2 = |C_mu|, so the Lemma-style bound is
  // (sum |chi(mu)|^2 / |G|)^{n/2}.
  double fixed_points = 0.0;
  for (const SpectralLine& l : spec.lines)
    fixed_points += static_cast<double>(l.count) * std::norm(l.chi_mu);
  const double ratio = fixed_points / std::exp(spec.log_order);

  CsvWriter csv({"n", "exact_l1", "centralizer_bound", "half_power_bound"});
  for (unsigned n = n_min; n <= n_max; ++n) {
    csv.row({std::to_string(n), format_real(exact_weak_l1_power(spec, n)),
             format_real(std::pow(ratio, n / 2.0)),
             format_real(std::pow(2.0, -static_cast<double>(n) / 2.0))});
  }
  emit(cfg, "weak_tv.csv", csv.str());
  return 0;
}

FramePolicy parse_policy(const std::string& name) {
  if (name == "standard") return FramePolicy::StandardBasis;
  if (name == "unitary") return FramePolicy::RandomUnitaryBasis;
  if (name == "tight") return FramePolicy::RandomTightFrame;
  throw CLI::ValidationError("--policy", "unknown frame policy " + name);
}

int cmd_strong_sim(const RunConfig& cfg) {
  const GroupContext ctx = resolve_group(cfg.group);
  if (!ctx.group.has_value())
    throw AnalysisError("strong-sim needs a dense group within the table guard");
  const FiniteGroup& G = *ctx.group;
  const ElemId mu = resolve_mu(G, cfg.mu);
  const CharacterTable table = character_table(G);
  const std::vector<UnitaryIrrep> irreps = unitary_irreps(table);

  StrongTvOptions opts;
  opts.n = cfg.n;
  opts.trials = cfg.trials;
  opts.seed = cfg.seed;
  opts.policy = parse_policy(cfg.policy);
  const StrongTvResult result = empirical_strong_tv(table, irreps, mu, opts);

  emit(cfg, "trials.csv", result.trials_csv());

  JsonWriter w;
  w.begin_object();
  w.field("command", std::string("strong-sim"));
  w.field("group", ctx.description);
  w.field("mu_id", static_cast<long long>(mu));
  w.field("n", static_cast<long long>(cfg.n));
  w.field("trials", cfg.trials);
  w.field("seed", static_cast<long long>(cfg.seed));
  w.field("policy", cfg.policy);
  w.field("l1_min", result.min);
  w.field("l1_median", result.median);
  w.field("l1_mean", result.mean);
  w.field("l1_max", result.max);
  const ConditionReport condition = condition_check(table, mu);
  if (condition.condition_holds) {
    const RateReport rates = compute_rates(table, mu, cfg.beta_fraction, cfg.epsilon);
    const TheoremBounds bounds = theorem_bound_assembly(rates, cfg.n);
    w.field("tv_bound", bounds.tv_bound);
    w.field("failure_prob_bound", bounds.failure_prob_bound);
  } else {
    w.field_null("tv_bound");
    w.field_null("failure_prob_bound");
  }
  w.end_object();
  emit(cfg, "summary.json", w.str() + "\n");
  return 0;
}

int cmd_wreath_census(const RunConfig& cfg) {
  WreathCensus census;
  std::string description;
  if (cfg.tower > 0) {
    census = tower_census(cfg.tower);
    description = "tower " + std::to_string(cfg.tower);
  } else {
    const GroupContext ctx = resolve_group(cfg.group);
    if (!ctx.group.has_value())
      throw AnalysisError("wreath-census --base needs a dense base group");
    census = wreath_census(character_table(*ctx.group));
    description = "Z2 wr " + ctx.group->name();
  }
  JsonWriter w;
  w.begin_object();
  w.field("command", std::string("wreath-census"));
  w.field("target", description);
  w.field("seed", static_cast<long long>(cfg.seed));
  w.field_raw("census", census.to_json().substr(0, census.to_json().size() - 1));
  w.end_object();
  emit(cfg, "census.json", w.str() + "\n");
  return 0;
}

int cmd_plancherel_mc(const RunConfig& cfg) {
  const GroupContext ctx = resolve_group(cfg.group);
  if (!ctx.group.has_value())
    throw AnalysisError("plancherel-mc needs a dense group within the table guard");
  const CharacterTable table = character_table(*ctx.group);

  const unsigned n_min = cfg.n_min ? cfg.n_min : cfg.n;
  const unsigned n_max = cfg.n_max ? cfg.n_max : cfg.n;

  CsvWriter csv({"n", "bound", "empirical", "stderr"});
  std::vector<PlancherelTailReport> reports;
  for (unsigned n = n_min; n <= n_max; ++n) {
    const PlancherelTailReport rep = plancherel_dimension_mc(
        table, n, cfg.beta_fraction, cfg.trials, Rng::mix(cfg.seed, n));
    csv.row({std::to_string(rep.n), format_real(rep.bound), format_real(rep.empirical),
             format_real(rep.stderr_)});
    reports.push_back(rep);
  }
  emit(cfg, "tail.csv", csv.str());

  JsonWriter w;
  w.begin_object();
  w.field("command", std::string("plancherel-mc"));
  w.field("group", ctx.description);
  w.field("beta_fraction", cfg.beta_fraction);
  w.field("trials", cfg.trials);
  w.field("seed", static_cast<long long>(cfg.seed));
  w.field("alpha", reports.front().alpha);
  w.field("beta", reports.front().beta);
  w.end_object();
  emit(cfg, "mc.json", w.str() + "\n");
  return 0;
}

void load_config_file(const std::string& path, RunConfig& cfg) {
  const nlohmann::json j = nlohmann::json::parse(read_file(path));
  for (auto it = j.begin(); it != j.end(); ++it) {
    const std::string& k = it.key();
    if (k == "group") {
      cfg.group.clear();
      const std::string s = it.value().get<std::string>();
      std::size_t pos = 0;
      while (pos < s.size()) {
        const std::size_t space = s.find(' ', pos);
        cfg.group.push_back(s.substr(pos, space - pos));
        if (space == std::string::npos) break;
        pos = space + 1;
      }
    } else if (k == "mu") {
      cfg.mu = it.value().is_number() ? std::to_string(it.value().get<long long>())
                                      : it.value().get<std::string>();
    } else if (k == "n") {
      cfg.n = it.value().get<unsigned>();
    } else if (k == "n_min") {
      cfg.n_min = it.value().get<unsigned>();
    } else if (k == "n_max") {
      cfg.n_max = it.value().get<unsigned>();
    } else if (k == "epsilon") {
      cfg.epsilon = it.value().get<double>();
    } else if (k == "beta_fraction") {
      cfg.beta_fraction = it.value().get<double>();
    } else if (k == "trials") {
      cfg.trials = it.value().get<int>();
    } else if (k == "seed") {
      cfg.seed = it.value().get<std::uint64_t>();
    } else if (k == "out") {
      cfg.out = it.value().get<std::string>();
    } else if (k == "format") {
      cfg.format = it.value().get<std::string>();
    } else if (k == "policy") {
      cfg.policy = it.value().get<std::string>();
    } else if (k == "tower") {
      cfg.tower = it.value().get<unsigned>();
    } else {
      throw CLI::ValidationError("--config", "unknown config key '" + k + "'");
    }
  }
  if (cfg.format != "json" && cfg.format != "csv")
    throw CLI::ValidationError("--config", "format must be json or csv");
}

}  // namespace

int run_cli(const std::vector<std::string>& args) {
  CLI::App app{"finite-group Fourier sampling toolkit"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string config_path;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--config", config_path, "JSON config file; explicit flags win");
    sub->add_option("--group", cfg.group, "group spec, e.g. A5, S3, D7, Z6, 'wreath-d 5', 'tower 3'")
        ->expected(1, 2);
    sub->add_option("--mu", cfg.mu, "involution id or 'auto'");
    sub->add_option("--n", cfg.n, "number of tensor factors");
    sub->add_option("--n-min", cfg.n_min, "sweep start");
    sub->add_option("--n-max", cfg.n_max, "sweep end");
    sub->add_option("--beta-fraction", cfg.beta_fraction, "beta as a fraction of E ln d");
    sub->add_option("--epsilon", cfg.epsilon, "epsilon override for the rate search");
    sub->add_option("--trials", cfg.trials, "Monte-Carlo trials");
    sub->add_option("--seed", cfg.seed, "64-bit seed, recorded in outputs");
    sub->add_option("--out", cfg.out, "output path prefix (stdout if omitted)");
    sub->add_option("--policy", cfg.policy, "frame policy: standard | unitary | tight");
  };

  CLI::App* analyze = app.add_subcommand("analyze", "condition and rate reports");
  CLI::App* weak = app.add_subcommand("weak-tv", "exact weak-sampling L1 curve");
  CLI::App* strong = app.add_subcommand("strong-sim", "empirical strong-sampling ||P-N||_1");
  CLI::App* census = app.add_subcommand("wreath-census", "irrep census of Z2 wr base");
  CLI::App* mc = app.add_subcommand("plancherel-mc", "dimension concentration Monte Carlo");
  for (CLI::App* sub : {analyze, weak, strong, census, mc}) add_common(sub);
  census->add_option("--tower", cfg.tower, "Z2 tower height k (census of Z2^{wr k})");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  try {
    CLI::App* sub = app.get_subcommands().front();
    if (!config_path.empty()) {
      // Reload: config values first, then explicit flags on top.
      RunConfig merged;
      load_config_file(config_path, merged);
      auto keep = [&](const std::string& flag) {
        const CLI::Option* opt = sub->get_option_no_throw(flag);
        return opt != nullptr && opt->count() > 0;
      };
      if (keep("--group")) merged.group = cfg.group;
      if (keep("--mu")) merged.mu = cfg.mu;
      if (keep("--n")) merged.n = cfg.n;
      if (keep("--n-min")) merged.n_min = cfg.n_min;
      if (keep("--n-max")) merged.n_max = cfg.n_max;
      if (keep("--beta-fraction")) merged.beta_fraction = cfg.beta_fraction;
      if (keep("--epsilon")) merged.epsilon = cfg.epsilon;
      if (keep("--trials")) merged.trials = cfg.trials;
      if (keep("--seed")) merged.seed = cfg.seed;
      if (keep("--out")) merged.out = cfg.out;
      if (keep("--policy")) merged.policy = cfg.policy;
      if (keep("--tower")) merged.tower = cfg.tower;
      cfg = merged;
    }

    if (sub == analyze) return cmd_analyze(cfg);
    if (sub == weak) return cmd_weak_tv(cfg);
    if (sub == strong) return cmd_strong_sim(cfg);
    if (sub == census) return cmd_wreath_census(cfg);
    if (sub == mc) return cmd_plancherel_mc(cfg);
    return 1;
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const AnalysisError& e) {
    std::cerr << "analysis failure: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace gfs
