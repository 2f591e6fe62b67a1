#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>

#include "diffauction/config.hpp"
#include "diffauction/errors.hpp"
#include "diffauction/incentive.hpp"
#include "diffauction/io.hpp"
#include "diffauction/mechanism.hpp"
#include "diffauction/network.hpp"
#include "diffauction/reserve.hpp"
#include "diffauction/revenue.hpp"
#include "diffauction/simulation.hpp"

namespace diffauction::cli {

namespace {

using nlohmann::json;

constexpr std::uint64_t kDefaultSeed = 20240917;
constexpr double kDsicTolerance = 1e-9;

std::string fixed6(double x) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(6) << x;
  return s.str();
}

// Config strings come from the command line, so a malformed one is a usage error.
template <class Fn>
auto as_usage(const char* flag, Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const FormatError& e) {
    throw UsageError(std::string(flag) + ": " + e.what());
  } catch (const DomainError& e) {
    throw UsageError(std::string(flag) + ": " + e.what());
  }
}

ValueDistribution parse_dist(const std::string& text) {
  return as_usage("--dist", [&] { return ValueDistribution::parse(text); });
}

ReservePolicy parse_policy(const char* flag, const std::string& text) {
  return as_usage(flag, [&] { return ReservePolicy::parse(text); });
}

SubtreeProfile parse_sizes(const std::string& text) {
  return as_usage("--sizes", [&] {
    std::vector<std::size_t> sizes;
    std::string token;
    for (char c : text + ",") {
      if (c == ',' || c == '+') {
        sizes.push_back(parse_count(token, "subtree size"));
        token.clear();
      } else if (c != ' ') {
        token += c;
      }
    }
    return SubtreeProfile::from_sizes(std::move(sizes));
  });
}

std::string join_sizes(const std::vector<std::size_t>& sizes) {
  std::string s;
  for (std::size_t i = 0; i < sizes.size(); ++i) s += (i ? "+" : "") + std::to_string(sizes[i]);
  return s;
}

struct NetOptions {
  std::string net;
  std::optional<std::size_t> rho;
  std::optional<std::string> seller;
  std::uint64_t seed = kDefaultSeed;
};

// --net is an edge-list file when such a file exists, otherwise a scenario string.
MarketTemplate load_market(const NetOptions& o) {
  if (std::filesystem::is_regular_file(o.net)) {
    MarketTemplate market;
    market.network = load_edge_list(o.net);
    if (o.seller) {
      if (!market.network.contains(*o.seller)) throw UsageError("--seller '" + *o.seller + "' is not in " + o.net);
      market.seller = *o.seller;
    } else if (o.rho) {
      market.seller = pick_seller(market.network, *o.rho, o.seed);
    } else {
      throw UsageError("edge-list networks need --seller or --rho");
    }
    return market;
  }
  Scenario scenario;
  try {
    scenario = Scenario::parse(o.net);
  } catch (const FormatError& e) {
    throw UsageError("--net '" + o.net + "' is neither a readable file nor a scenario (" + e.what() + ")");
  }
  if (o.seller || o.rho) throw UsageError("--seller/--rho only apply to edge-list networks");
  return as_usage("--net", [&] { return generate_scenario(scenario); });
}

void add_net_options(CLI::App* sub, NetOptions& o) {
  sub->add_option("--net", o.net, "Edge-list file or scenario (mer:30, md:4, sym:3+6)")->required();
  sub->add_option("--rho", o.rho, "Pick a random seller of this degree (edge lists)");
  sub->add_option("--seller", o.seller, "Seller id (edge lists)");
  sub->add_option("--seed", o.seed, "Master seed")->capture_default_str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write '" + path + "'");
  out << text;
}

std::uint64_t fnv1a(const std::string& text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

// ---- subcommands -----------------------------------------------------------

struct AuctionArgs {
  std::string profile;
  std::string reserve = "none";
  std::string dist = "uniform:vbar=100";
  std::string out;
};

int cmd_auction(const AuctionArgs& a, std::ostream& out) {
  const auto d = parse_dist(a.dist);
  const auto policy = parse_policy("--reserve", a.reserve);
  const ActionProfile profile = read_profile_file(a.profile);
  const PreparedAuction prepared(profile);
  std::optional<SubtreeProfile> live;
  if (policy.reads_profile()) live = subtree_profile(prepared.pot());
  const Money r = resolve_reserve(policy, live, d);
  const Outcome outcome = run_apx_r(profile, r, d.vbar());

  out << "reserve " << fixed6(r) << '\n';
  out << "winner " << (outcome.winner ? *outcome.winner : "none") << '\n';
  out << "revenue " << fixed6(outcome.revenue) << '\n';
  for (const auto& [id, p] : outcome.payments) {
    if (p != 0.0) out << "payment " << id << ' ' << fixed6(p) << '\n';
  }
  if (!a.out.empty()) write_json_file(a.out, json(outcome));
  return kExitOk;
}

struct ReserveArgs {
  std::string dist = "uniform:vbar=100";
  std::string policy;
  std::string sizes;
};

int cmd_reserve(const ReserveArgs& a, std::ostream& out) {
  const auto d = parse_dist(a.dist);
  const auto policy = parse_policy("--policy", a.policy);
  std::optional<SubtreeProfile> profile;
  if (!a.sizes.empty()) profile = parse_sizes(a.sizes);
  if (policy.reads_profile() && !profile) throw UsageError("--policy ropt needs --sizes");
  out << fixed6(resolve_reserve(policy, profile, d)) << '\n';
  return kExitOk;
}

struct RevenueArgs {
  std::string sizes;
  std::string dist = "uniform:vbar=100";
  std::optional<double> r;
  std::string reserve;
  std::string method = "auto";
  std::optional<std::size_t> rho;
  std::optional<std::size_t> kmin;
  std::string csv;
};

int cmd_revenue(const RevenueArgs& a, std::ostream& out) {
  const auto d = parse_dist(a.dist);
  const auto profile = parse_sizes(a.sizes);
  if (a.r && !a.reserve.empty()) throw UsageError("give either --r or --reserve, not both");
  Money r = a.r.value_or(0.0);
  if (!a.reserve.empty()) r = resolve_reserve(parse_policy("--reserve", a.reserve), profile, d);
  if (!(r >= 0.0 && r <= d.vbar())) throw UsageError("--r must lie in [0, vbar]");

  RevenueMethod method = RevenueMethod::automatic;
  if (a.method == "closed") {
    method = RevenueMethod::closed_form;
  } else if (a.method == "quadrature") {
    method = RevenueMethod::quadrature;
  } else if (a.method != "auto") {
    throw UsageError("--method must be auto, closed or quadrature");
  }
  if (method == RevenueMethod::closed_form && !d.is_uniform()) throw UsageError("--method closed needs uniform values");

  const Money total = expected_total_revenue(profile, d, r, method);
  out << fixed6(total) << '\n';

  if (a.rho) {
    const std::size_t kmin = a.kmin.value_or(profile.min_size());
    const Money opt = opt_upper_bound(profile.n, d);
    out << "mys " << fixed6(mys_lower_bound(*a.rho, d)) << '\n';
    out << "opt " << fixed6(opt) << '\n';
    out << "apx_over_opt " << fixed6(total / opt) << '\n';
    out << "ratio_bound " << fixed6(ratio_lower_bound(*a.rho, kmin)) << '\n';
    if (d.is_uniform() && *a.rho <= profile.n) {
      const auto chain = revenue_ordering_report(profile, *a.rho, d, kmin);
      out << "ordering " << fixed6(chain.mys) << " < " << fixed6(chain.apx_half) << " <= " << fixed6(chain.apx_gamma)
          << " <= " << fixed6(chain.opt) << (chain.chain_holds ? " holds" : " VIOLATED") << '\n';
    }
  }
  if (!a.csv.empty()) {
    std::ostringstream csv;
    const RevenueRow row{profile, r, total};
    write_revenue_csv(csv, std::span<const RevenueRow>(&row, 1));
    write_text_file(a.csv, csv.str());
  }
  return kExitOk;
}

struct RatioArgs {
  std::size_t rho = 0;
  std::size_t kmin = 1;
  std::optional<std::size_t> n;
  std::optional<std::size_t> m;
};

int cmd_ratio(const RatioArgs& a, std::ostream& out) {
  const double bound = as_usage("--rho/--kmin", [&] { return ratio_lower_bound(a.rho, a.kmin); });
  out << fixed6(bound) << '\n';
  if (a.n || a.m) {
    if (!a.n || !a.m) throw UsageError("--n and --m go together");
    const auto parts = as_usage("--n/--m", [&] { return worst_partition(*a.n, *a.m, a.kmin); });
    out << "worst_partition " << join_sizes(parts) << " objective " << fixed6(partition_objective(parts, *a.n))
        << '\n';
  }
  return kExitOk;
}

struct SimulateArgs {
  NetOptions net;
  std::string dist = "uniform:vbar=100";
  std::string reserve = "none";
  std::size_t runs = 100000;
  std::size_t threads = 1;
  std::string out;
  std::string hist;
};

int cmd_simulate(const SimulateArgs& a, std::ostream& out) {
  const auto d = parse_dist(a.dist);
  const auto policy = parse_policy("--reserve", a.reserve);
  if (a.runs == 0) throw UsageError("--runs must be >= 1");
  const auto market = load_market(a.net);
  MonteCarloOptions options;
  options.threads = std::max<std::size_t>(a.threads, 1);
  const RevenueStats stats = monte_carlo(market, d, policy, a.runs, a.net.seed, options);

  out << "bidders " << market.bidders().size() << '\n';
  out << "reserve " << fixed6(stats.reserve) << '\n';
  out << "runs " << stats.runs << '\n';
  out << "mean " << fixed6(stats.mean) << '\n';
  out << "std_error " << fixed6(stats.std_error) << '\n';
  out << "failure_rate " << fixed6(stats.failure_rate) << '\n';
  if (!a.out.empty()) {
    json j = stats;
    j["seed"] = a.net.seed;
    j["dist"] = d.to_string();
    j["policy"] = policy.to_string();
    write_json_file(a.out, j);
  }
  if (!a.hist.empty()) {
    std::ostringstream csv;
    write_histogram_csv(csv, stats);
    write_text_file(a.hist, csv.str());
  }
  return kExitOk;
}

struct ScenarioArgs {
  std::string spec;
  std::string dist;
  std::uint64_t seed = kDefaultSeed;
  std::string out;
};

int cmd_scenario(const ScenarioArgs& a, std::ostream& out) {
  const auto scenario = as_usage("scenario", [&] { return Scenario::parse(a.spec); });
  const auto branches = as_usage("scenario", [&] { return scenario_branch_sizes(scenario); });
  const auto market = generate_scenario(scenario);
  std::map<AgentId, Money> values;
  if (!a.dist.empty()) values = draw_values(market, parse_dist(a.dist), a.seed, 0);
  const ActionProfile profile = market.truthful_profile(values);
  const auto sp = subtree_profile(build_pot(build_diffusion_graph(profile)));

  out << "branches " << join_sizes(branches) << '\n';
  out << "n " << sp.n << '\n';
  out << "m " << sp.m << '\n';
  out << "rho " << market.rho() << '\n';
  out << "depth " << *std::max_element(branches.begin(), branches.end()) << '\n';
  if (!a.out.empty()) write_json_file(a.out, json(profile));
  return kExitOk;
}

struct DsicArgs {
  NetOptions net;
  std::string reserve = "none";
  std::string dist = "uniform:vbar=100";
  std::size_t grid = 11;
  std::size_t samples = 0;
  std::string out;
  bool counterexample = false;
  double c_value = 0.8;
};

int cmd_dsic(const DsicArgs& a, std::ostream& out) {
  if (a.counterexample) {
    const auto report = as_usage("--c-value", [&] { return ropt_counterexample(a.c_value); });
    out << "ropt_full " << fixed6(report.ropt_full) << '\n';
    out << "ropt_withheld " << fixed6(report.ropt_withheld) << '\n';
    out << "utility_truthful " << fixed6(report.utility_truthful) << '\n';
    out << "utility_withheld " << fixed6(report.utility_withheld) << '\n';
    out << "utility_delta " << fixed6(report.utility_delta) << '\n';
    if (!a.out.empty()) write_json_file(a.out, json(report));
    return kExitOk;
  }
  if (a.net.net.empty()) throw UsageError("dsic needs --net (or --counterexample)");

  const auto d = parse_dist(a.dist);
  const auto policy = parse_policy("--reserve", a.reserve);
  if (a.grid == 0) throw UsageError("--grid must be >= 1");
  TypeProfile instance;
  const std::filesystem::path path(a.net.net);
  if (path.extension() == ".json" && std::filesystem::is_regular_file(path)) {
    instance = TypeProfile::from_truthful_profile(read_profile_file(path));
  } else {
    const auto market = load_market(a.net);
    instance = TypeProfile::from_market(market, draw_values(market, d, a.net.seed, 0));
  }

  DsicOptions options;
  options.grid_points = a.grid;
  options.sampled_opponent_profiles = a.samples;
  options.seed = a.net.seed;
  const auto reports = check_dsic(instance, policy, d, options);

  Money max_gain = 0.0;
  std::size_t checked = 0;
  for (const auto& r : reports) {
    max_gain = std::max(max_gain, r.best_gain);
    checked += r.deviations_checked;
  }
  json j{{"policy", policy.to_string()},
         {"dist", d.to_string()},
         {"grid", a.grid},
         {"opponent_profiles", a.samples + 1},
         {"max_gain", max_gain},
         {"dsic_holds", max_gain <= kDsicTolerance},
         {"agents", reports}};

  if (a.out.empty()) {
    out << j.dump(2) << '\n';
  } else {
    write_json_file(a.out, j);
    out << "agents " << reports.size() << '\n';
    out << "deviations " << checked << '\n';
    out << "max_gain " << fixed6(max_gain) << '\n';
    out << "dsic " << (max_gain <= kDsicTolerance ? "holds" : "violated") << '\n';
  }
  return kExitOk;
}

struct IngestArgs {
  std::string edges;
  std::optional<std::size_t> rho;
  std::uint64_t seed = kDefaultSeed;
  std::string out;
};

int cmd_ingest(const IngestArgs& a, std::ostream& out) {
  MarketTemplate market;
  market.network = load_edge_list(a.edges);
  const auto& net = market.network;
  std::size_t max_degree = 0;
  for (const auto& id : net.nodes()) max_degree = std::max(max_degree, net.degree(id));
  out << "nodes " << net.node_count() << '\n';
  out << "edges " << net.edge_count() << '\n';
  out << "max_degree " << max_degree << '\n';
  if (!a.rho) return kExitOk;

  market.seller = pick_seller(net, *a.rho, a.seed);
  const ActionProfile profile = market.truthful_profile({});
  const auto sp = subtree_profile(build_pot(build_diffusion_graph(profile)));
  out << "seller " << market.seller << '\n';
  out << "bidders " << sp.n << '\n';
  out << "m " << sp.m << '\n';
  out << "kmin " << (sp.sizes.empty() ? 0 : sp.min_size()) << '\n';
  if (!a.out.empty()) write_json_file(a.out, json{{"seller", market.seller}, {"profile", sp}});
  return kExitOk;
}

}  // namespace

std::vector<std::string> golden_lines() {
  const auto u100 = ValueDistribution::uniform(100.0);
  const auto u1 = ValueDistribution::uniform(1.0);
  const auto classic = SubtreeProfile::from_sizes({3, 6});
  std::vector<std::string> lines{
      "opt_uniform_n9 " + fixed6(opt_upper_bound(9, u100)),
      "mys_uniform_rho2 " + fixed6(mys_lower_bound(2, u100)),
      "gamma_uniform_k1 " + fixed6(gamma_uniform(1, 100.0)),
      "gamma_uniform_k2 " + fixed6(gamma_uniform(2, 100.0)),
      "gamma_uniform_k3 " + fixed6(gamma_uniform(3, 100.0)),
      "ropt_uniform_2+2+2 " + fixed6(global_optimal_reserve(SubtreeProfile::from_sizes({2, 2, 2}), u1)),
      "ropt_uniform_2+2+1 " + fixed6(global_optimal_reserve(SubtreeProfile::from_sizes({2, 2, 1}), u1)),
      "apx_uniform_3+6_r0 " + fixed6(expected_total_revenue(classic, u100, 0.0)),
  };
  for (std::size_t k = 1; k <= 3; ++k) {
    lines.push_back("apx_uniform_3+6_k" + std::to_string(k) + " " +
                    fixed6(expected_total_revenue(classic, u100, gamma_uniform(k, 100.0))));
  }
  for (std::vector<std::size_t> sizes : {std::vector<std::size_t>{1, 5}, {2, 4}, {3, 3}}) {
    lines.push_back("apx_uniform_" + join_sizes(sizes) + "_k1 " +
                    fixed6(expected_total_revenue(SubtreeProfile::from_sizes(sizes), u100, 50.0)));
  }
  lines.push_back("ratio_rho2_k1 " + fixed6(ratio_lower_bound(2, 1)));
  std::string all;
  for (const auto& l : lines) all += l + '\n';
  std::ostringstream digest;
  digest << "digest fnv1a64:" << std::hex << std::setw(16) << std::setfill('0') << fnv1a(all);
  lines.push_back(digest.str());
  return lines;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"APX-R diffusion auction toolkit", "diffauction"};
  app.require_subcommand(0, 1);
  bool version = false;
  app.add_flag("--version", version, "Print version and golden-value checksums");

  AuctionArgs auction;
  auto* s_auction = app.add_subcommand("auction", "Run APX-R on an action-profile JSON");
  s_auction->add_option("--profile", auction.profile, "Action profile JSON")->required()->check(CLI::ExistingFile);
  s_auction->add_option("--reserve", auction.reserve, "none | fixed:<r> | ugamma:k=<k> | ggamma:k=<k> | ropt")
      ->capture_default_str();
  s_auction->add_option("--dist", auction.dist, "Value distribution")->capture_default_str();
  s_auction->add_option("--out", auction.out, "Write the outcome JSON here");

  ReserveArgs reserve;
  auto* s_reserve = app.add_subcommand("reserve", "Resolve a reserve policy to a number");
  s_reserve->add_option("--dist", reserve.dist, "Value distribution")->capture_default_str();
  s_reserve->add_option("--policy", reserve.policy, "Reserve policy")->required();
  s_reserve->add_option("--sizes", reserve.sizes, "Subtree sizes, e.g. 2,2,2 (needed by ropt)");

  RevenueArgs revenue;
  auto* s_revenue = app.add_subcommand("revenue", "Expected APX-R revenue for a subtree profile");
  s_revenue->add_option("--sizes", revenue.sizes, "Subtree sizes, e.g. 3,6")->required();
  s_revenue->add_option("--dist", revenue.dist, "Value distribution")->capture_default_str();
  s_revenue->add_option("--r", revenue.r, "Reserve price (default 0)");
  s_revenue->add_option("--reserve", revenue.reserve, "Reserve policy instead of --r");
  s_revenue->add_option("--method", revenue.method, "auto | closed | quadrature")->capture_default_str();
  s_revenue->add_option("--rho", revenue.rho, "Seller degree; also print MYS, OPT and the ratio bound");
  s_revenue->add_option("--kmin", revenue.kmin, "kmin for the ratio bound (default: smallest size)");
  s_revenue->add_option("--csv", revenue.csv, "Write the CSV row here");

  RatioArgs ratio;
  auto* s_ratio = app.add_subcommand("ratio", "Approximation-ratio lower bound");
  s_ratio->add_option("--rho", ratio.rho, "Seller degree")->required();
  s_ratio->add_option("--kmin", ratio.kmin, "Smallest subtree size")->capture_default_str();
  s_ratio->add_option("--n", ratio.n, "Bidders, to print the worst partition");
  s_ratio->add_option("--m", ratio.m, "Subtrees, to print the worst partition");

  SimulateArgs simulate;
  auto* s_simulate = app.add_subcommand("simulate", "Monte Carlo revenue under truthful play");
  add_net_options(s_simulate, simulate.net);
  s_simulate->add_option("--dist", simulate.dist, "Value distribution")->capture_default_str();
  s_simulate->add_option("--reserve", simulate.reserve, "Reserve policy")->capture_default_str();
  s_simulate->add_option("--runs", simulate.runs, "Replicates")->capture_default_str();
  s_simulate->add_option("--threads", simulate.threads, "Worker threads")->capture_default_str();
  s_simulate->add_option("--out", simulate.out, "Write stats JSON here");
  s_simulate->add_option("--hist", simulate.hist, "Write histogram CSV here");

  ScenarioArgs scenario;
  auto* s_scenario = app.add_subcommand("scenario", "Build a synthetic market");
  s_scenario->add_option("spec", scenario.spec, "mer:30 | md:4 | sym:3+6")->required();
  s_scenario->add_option("--dist", scenario.dist, "Draw bids from this distribution");
  s_scenario->add_option("--seed", scenario.seed, "Seed for the draw")->capture_default_str();
  s_scenario->add_option("--out", scenario.out, "Write the action profile JSON here");

  DsicArgs dsic;
  auto* s_dsic = app.add_subcommand("dsic", "Search unilateral deviations for profitable ones");
  s_dsic->add_option("--net", dsic.net.net, "Profile JSON, edge-list file or scenario");
  s_dsic->add_option("--rho", dsic.net.rho, "Pick a random seller of this degree (edge lists)");
  s_dsic->add_option("--seller", dsic.net.seller, "Seller id (edge lists)");
  s_dsic->add_option("--seed", dsic.net.seed, "Seed for values and sampled opponents")->capture_default_str();
  s_dsic->add_option("--reserve", dsic.reserve, "Reserve policy")->capture_default_str();
  s_dsic->add_option("--dist", dsic.dist, "Value distribution")->capture_default_str();
  s_dsic->add_option("--grid", dsic.grid, "Bid grid points on [0, vbar]")->capture_default_str();
  s_dsic->add_option("--samples", dsic.samples, "Extra sampled opponent profiles")->capture_default_str();
  s_dsic->add_option("--out", dsic.out, "Write the JSON report here instead of stdout");
  s_dsic->add_flag("--counterexample", dsic.counterexample, "Run the six-buyer r_opt counterexample");
  s_dsic->add_option("--c-value", dsic.c_value, "Value of the withholding agent C")->capture_default_str();

  IngestArgs ingest;
  auto* s_ingest = app.add_subcommand("ingest", "Load an edge list and summarise it");
  s_ingest->add_option("--edges", ingest.edges, "Edge-list file")->required();
  s_ingest->add_option("--rho", ingest.rho, "Pick a seller of this degree and build its POT");
  s_ingest->add_option("--seed", ingest.seed, "Seed for seller selection")->capture_default_str();
  s_ingest->add_option("--out", ingest.out, "Write the POT profile JSON here");

  std::vector<std::string> argv_storage{"diffauction"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_storage) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (version) {
      out << "diffauction " << DIFFAUCTION_VERSION << '\n';
      for (const auto& line : golden_lines()) out << line << '\n';
      return kExitOk;
    }
    if (s_auction->parsed()) return cmd_auction(auction, out);
    if (s_reserve->parsed()) return cmd_reserve(reserve, out);
    if (s_revenue->parsed()) return cmd_revenue(revenue, out);
    if (s_ratio->parsed()) return cmd_ratio(ratio, out);
    if (s_simulate->parsed()) return cmd_simulate(simulate, out);
    if (s_scenario->parsed()) return cmd_scenario(scenario, out);
    if (s_dsic->parsed()) return cmd_dsic(dsic, out);
    if (s_ingest->parsed()) return cmd_ingest(ingest, out);
    err << "error: expected a subcommand (auction, reserve, revenue, simulate, scenario, dsic, ratio, ingest)\n";
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitRuntime;
  }
}

}  // namespace diffauction::cli
