#include "stardec/cli.hpp"

#include <charconv>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "stardec/embedder.hpp"
#include "stardec/error.hpp"
#include "stardec/families.hpp"
#include "stardec/io.hpp"
#include "stardec/oracle.hpp"
#include "stardec/star_solver.hpp"
#include "stardec/sweep.hpp"

namespace stardec {

std::uint64_t resolve_budget(std::optional<std::uint64_t> flag, std::uint64_t fallback) {
  if (flag) return *flag;
  const char* env = std::getenv(kBudgetEnv);
  if (env == nullptr || *env == '\0') return fallback;
  std::uint64_t value = 0;
  const std::string text(env);
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw InvalidInput(std::string(kBudgetEnv) + " is not a nonnegative integer: '" + text + "'");
  }
  return value;
}

namespace {

struct Output {
  std::string path;  // empty: stdout
  std::ostream* out = nullptr;

  void write(const std::string& text) const {
    if (path.empty()) *out << text;
    else write_text(path, text);
  }
};

std::string exact_or_decimal(const Surd& x) {
  if (x.is_rational()) return to_string(x.rational_part());
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", x.to_double());
  return buf;
}

std::string decimal(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", x);
  return buf;
}

Json instance_to_json(const FamilyInstance& f) {
  Json claims = Json::array();
  for (const Claim& c : f.claims) {
    claims.push_back(Json{{"id", c.id},
                          {"statement", c.statement},
                          {"method", std::string(to_string(c.method))},
                          {"params", c.params},
                          {"asserted", c.asserted}});
  }
  return Json{{"family", std::string(to_string(f.family))},
              {"k", f.k},
              {"n", f.n},
              {"params", f.params},
              {"leave", graph_to_json(f.L)},
              {"claims", std::move(claims)}};
}

struct DecomposeArgs {
  std::string graph;
  std::optional<int> complete;
  int k = 0;
  std::string gamma;
  std::optional<std::uint64_t> budget;
  std::string out;
  std::string dot;
};

int cmd_decompose(const DecomposeArgs& a, std::ostream& out, std::ostream& err) {
  if (a.k < 1) throw InvalidInput("k must be positive");
  if (a.graph.empty() == !a.complete) throw InvalidInput("give exactly one of --graph and --complete");
  const Output sink{a.out, &out};
  const Graph g = a.complete ? complete_graph(*a.complete) : read_graph(a.graph);
  auto emit = [&](const StarDecomposition& d) {
    sink.write(dump(to_json(d)));
    if (!a.dot.empty()) write_text(a.dot, to_dot(g, d));
    return kExitOk;
  };
  auto none = [&](Json why) {
    Json j{{"k", a.k}, {"exists", false}};
    for (auto& [key, value] : why.items()) j[key] = value;
    sink.write(dump(j));
    err << "none exists\n";
    return kExitOk;
  };

  if (!a.gamma.empty()) {
    Json values;
    try {
      values = Json::parse(read_text(a.gamma));
    } catch (const nlohmann::json::exception& e) {
      throw InvalidInput(std::string("gamma JSON: ") + e.what());
    }
    if (!values.is_array()) throw InvalidInput("gamma JSON must be an array of integers");
    std::vector<std::int64_t> gamma;
    for (const Json& v : values) {
      if (!v.is_number_integer()) throw InvalidInput("gamma JSON must be an array of integers");
      gamma.push_back(v.get<std::int64_t>());
    }
    if (static_cast<int>(gamma.size()) != g.order()) throw InvalidInput("gamma length differs from the vertex count");
    auto decision = decide_star_decomposition(g, PrecentralFunction(g, a.k, std::move(gamma)));
    if (auto* d = std::get_if<StarDecomposition>(&decision)) return emit(*d);
    return none(Json{{"witness", to_json(std::get<DeficiencyWitness>(decision))}});
  }
  if (a.complete) {
    if (auto d = decompose_complete(*a.complete, a.k)) return emit(*d);
    return none(Json{{"reason", "requires n >= 2k and k | C(n,2)"}});
  }
  if (a.k == 2) {
    auto result = two_star_decompose(g);
    if (auto* d = std::get_if<StarDecomposition>(&result)) return emit(*d);
    const auto& odd = std::get<OddComponent>(result);
    return none(Json{{"odd_component", Json{{"vertices", odd.vertices}, {"edge_count", odd.edge_count}}}});
  }
  if (g.size() % a.k != 0) return none(Json{{"reason", "k does not divide the edge count"}});
  const SearchTranscript t = exhaustive_gamma_search(g, a.k, resolve_budget(a.budget, kDefaultGammaBudget));
  switch (t.outcome) {
    case SearchOutcome::kFound:
      return emit(*t.decomposition);
    case SearchOutcome::kExhausted:
      return none(Json{{"transcript", to_json(t)}});
    case SearchOutcome::kBudgetExceeded:
      sink.write(dump(Json{{"k", a.k}, {"transcript", to_json(t)}}));
      err << "search budget exceeded after " << t.nodes_explored << " nodes\n";
      return kExitBudget;
  }
  return kExitOk;
}

struct EmbedArgs {
  std::string leave;
  int k = 0;
  int max_s = -1;
  std::optional<std::uint64_t> budget;
  std::string out;
  std::string dot;
};

int cmd_embed(const EmbedArgs& a, std::ostream& out, std::ostream& err) {
  const Graph L = read_graph(a.leave);
  EmbedConfig config;
  config.max_s = a.max_s;
  config.gamma_budget = resolve_budget(a.budget, kDefaultGammaBudget);
  EmbeddingCertificate cert;
  try {
    cert = embed(L, a.k, config);
  } catch (const std::runtime_error& e) {
    if (dynamic_cast<const InvalidInput*>(&e) != nullptr) throw;
    err << e.what() << "\n";
    return kExitBudget;
  }
  Output{a.out, &out}.write(dump(to_json(cert)));
  if (!a.dot.empty()) write_text(a.dot, to_dot(join(L, cert.s), cert.decomposition));
  if (cert.minimality == Minimality::kConditional) err << "minimality conditional on skipped s\n";
  return kExitOk;
}

struct FamilyArgs {
  std::string id;
  std::optional<int> k;
  std::optional<int> n;
  std::optional<int> t;
  bool verify = false;
  std::vector<int> scan;
  std::int64_t flow_limit = kDefaultFlowEdgeLimit;
  std::optional<std::uint64_t> budget;
  std::string out;
};

int need(const std::optional<int>& v, const char* flag, const std::string& id) {
  if (!v) throw InvalidInput(id + " needs " + flag);
  return *v;
}

int cmd_family(const FamilyArgs& a, std::ostream& out, std::ostream& err) {
  const FamilyId id = family_id_from_string(a.id);
  const Output sink{a.out, &out};
  if (!a.scan.empty()) {
    if (id != FamilyId::kOddBound || a.scan.size() != 2) throw InvalidInput("--scan LO HI applies to odd-bound");
    Json rows = Json::array();
    int first = 0;       // 0: none
    int holds_from = 0;  // every scanned k from here on holds; 0: none
    for (const OddBoundProbe& p : scan_odd_bound(a.scan[0], a.scan[1])) {
      if (!p.all_hold) holds_from = 0;
      else if (holds_from == 0) holds_from = p.k;
      rows.push_back(Json{{"k", p.k},
                          {"n", p.n},
                          {"m", p.m},
                          {"r", p.r},
                          {"min_test_value", p.min_test_value ? Json(*p.min_test_value) : Json(nullptr)},
                          {"all_hold", p.all_hold}});
      if (p.all_hold && first == 0) first = p.k;
    }
    sink.write(dump(Json{{"family", "odd-bound"},
                         {"smallest_k_all_hold", first ? Json(first) : Json(nullptr)},
                         {"holds_from_k", holds_from ? Json(holds_from) : Json(nullptr)},
                         {"probes", std::move(rows)}}));
    return kExitOk;
  }

  FamilyInstance f;
  switch (id) {
    case FamilyId::kSingleEdge:
      f = gen_single_edge(need(a.k, "--k", a.id), need(a.n, "--n", a.id));
      break;
    case FamilyId::kBoundN:
      f = gen_bound_n(need(a.t, "--t", a.id));
      break;
    case FamilyId::kTightnessT2:
      f = gen_tightness_T2(need(a.t, "--t", a.id), need(a.n, "--n", a.id));
      break;
    case FamilyId::kEvenBound:
      f = gen_even_bound(need(a.t, "--t", a.id));
      break;
    case FamilyId::kOddBound:
      f = gen_odd_bound(need(a.k, "--k", a.id));
      break;
  }
  if (!a.verify) {
    sink.write(dump(instance_to_json(f)));
    return kExitOk;
  }
  VerifyConfig config;
  config.flow_edge_limit = a.flow_limit;
  config.backtrack_budget = resolve_budget(a.budget, kDefaultBacktrackBudget);
  const FamilyReport report = verify_instance(f, config);
  sink.write(dump(to_json(report)));
  for (const ClaimResult& c : report.claims) {
    err << c.id << ": " << to_string(c.status) << (c.asserted ? "" : " (informational)") << "\n";
  }
  return report.ok() ? kExitOk : kExitVerification;
}

struct SweepArgs {
  std::vector<int> ks;
  int n_min = -1;
  int n_max = 30;
  int seeds = 20;
  std::uint64_t seed_base = 0;
  unsigned threads = 0;
  bool timing = false;
  int max_s = -1;
  std::optional<std::uint64_t> budget;
  std::string out;
};

int cmd_sweep(const SweepArgs& a, std::ostream& out, std::ostream& err) {
  SweepConfig config;
  config.ks = a.ks;
  config.n_lo = a.n_min;
  config.n_hi = a.n_max;
  config.seeds = a.seeds;
  config.seed_base = a.seed_base;
  config.threads = a.threads;
  config.timing = a.timing;
  config.embed.max_s = a.max_s;
  config.embed.gamma_budget = resolve_budget(a.budget, kDefaultGammaBudget);
  const auto rows = run_sweep(config);
  Output{a.out, &out}.write(sweep_csv(rows));
  int violations = 0;
  for (const SweepRow& r : rows) violations += r.ok() ? 0 : 1;
  if (violations > 0) {
    err << violations << " cap violation(s)\n";
    return kExitVerification;
  }
  return kExitOk;
}

struct BoundsArgs {
  std::vector<int> ks;
  std::vector<int> ns;
  std::string out;
};

int cmd_bounds(const BoundsArgs& a, std::ostream& out) {
  std::string csv =
      "k,n,n_threshold,theorem_cap,statement1_cap,s_bound_general,s_min_general,s_bound_clique,s_min_clique,"
      "guaranteed_s\n";
  for (int k : a.ks) {
    if (k < 2) throw InvalidInput("k must be >= 2");
    const std::string head = std::to_string(k) + ",";
    const std::string fixed = exact_or_decimal(n_threshold(k)) + "," + exact_or_decimal(theorem_cap(k)) + "," +
                              std::to_string(statement1_cap(k)) + ",";
    if (a.ns.empty()) {
      csv += head + "," + fixed + ",,,,\n";
      continue;
    }
    for (int n : a.ns) {
      const BoundReport r = bound_report(n, k);
      auto bound = [](const std::optional<NestedRadical>& b) {
        if (!b) return std::string(",");
        return decimal(b->to_double()) + "," + b->first_integer_above().str();
      };
      csv += head + std::to_string(n) + "," + fixed + bound(r.s_lower_bound_general) + "," +
             bound(r.s_lower_bound_clique) + "," + std::to_string(guaranteed_s(n, k).s) + "\n";
    }
  }
  Output{a.out, &out}.write(csv);
  return kExitOk;
}

std::vector<int> expand_range(const std::vector<std::string>& items) {
  std::vector<int> out;
  for (const std::string& item : items) {
    const auto dots = item.find("..");
    try {
      if (dots == std::string::npos) {
        out.push_back(std::stoi(item));
      } else {
        const int lo = std::stoi(item.substr(0, dots));
        const int hi = std::stoi(item.substr(dots + 2));
        for (int v = lo; v <= hi; ++v) out.push_back(v);
      }
    } catch (const std::logic_error&) {
      throw InvalidInput("bad integer or range '" + item + "'");
    }
  }
  return out;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"k-star decompositions and minimal embeddings of partial decompositions"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  DecomposeArgs dec;
  auto* decompose = app.add_subcommand("decompose", "Decompose a graph into k-stars or certify that none exists");
  decompose->add_option("--graph", dec.graph, "Graph file (edge list or JSON)");
  decompose->add_option("--complete", dec.complete, "Use K_n");
  decompose->add_option("--k", dec.k, "Star size")->required();
  decompose->add_option("--gamma", dec.gamma, "JSON array of prescribed centre counts");
  decompose->add_option("--budget", dec.budget, "Search node budget");
  decompose->add_option("--out", dec.out, "Output JSON (default stdout)");
  decompose->add_option("--dot", dec.dot, "Also write a DOT drawing");

  EmbedArgs emb;
  auto* embed_cmd = app.add_subcommand("embed", "Find the least s such that L v K_s decomposes");
  embed_cmd->add_option("--leave", emb.leave, "Leave graph file")->required();
  embed_cmd->add_option("--k", emb.k, "Star size")->required();
  embed_cmd->add_option("--max-s", emb.max_s, "Largest s tried (default 6k)");
  embed_cmd->add_option("--budget", emb.budget, "Gamma search node budget per s below k");
  embed_cmd->add_option("--out", emb.out, "Certificate JSON (default stdout)");
  embed_cmd->add_option("--dot", emb.dot, "Also write a DOT drawing");

  FamilyArgs fam;
  auto* family = app.add_subcommand("family", "Generate and verify a counterexample family");
  family->add_option("--id", fam.id, "single-edge | bound-n | tightness-T2 | even-bound | odd-bound")->required();
  family->add_option("--k", fam.k, "k (single-edge, odd-bound)");
  family->add_option("--n", fam.n, "n (single-edge, tightness-T2)");
  family->add_option("--t", fam.t, "k = 2^t (bound-n, tightness-T2, even-bound)");
  family->add_flag("--verify", fam.verify, "Verify every claim");
  family->add_option("--scan", fam.scan, "odd-bound: probe every odd prime power k in LO HI")->expected(2);
  family->add_option("--flow-limit", fam.flow_limit, "Largest edge count for flow constructions");
  family->add_option("--budget", fam.budget, "Backtracking node budget");
  family->add_option("--out", fam.out, "Output JSON (default stdout)");

  SweepArgs sw;
  std::vector<std::string> sweep_ks;
  auto* sweep = app.add_subcommand("sweep", "Embed sampled maximal leaves and check the caps");
  sweep->add_option("--k", sweep_ks, "Values or ranges, e.g. 3 5 or 2..7")->required();
  sweep->add_option("--n-min", sw.n_min, "Smallest n (default k+1)");
  sweep->add_option("--n-max", sw.n_max, "Largest n");
  sweep->add_option("--seeds", sw.seeds, "Samples per (k, n)");
  sweep->add_option("--seed-base", sw.seed_base, "First seed");
  sweep->add_option("--threads", sw.threads, "Worker threads (default all cores)");
  sweep->add_flag("--timing", sw.timing, "Fill runtime_ms (output no longer reproducible)");
  sweep->add_option("--max-s", sw.max_s, "Largest s tried (default 6k)");
  sweep->add_option("--budget", sw.budget, "Gamma search node budget");
  sweep->add_option("--out", sw.out, "CSV output (default stdout)");

  BoundsArgs bd;
  std::vector<std::string> bound_ks;
  std::vector<std::string> bound_ns;
  auto* bounds = app.add_subcommand("bounds", "Tabulate thresholds and caps");
  bounds->add_option("--k", bound_ks, "Values or ranges")->required();
  bounds->add_option("--n", bound_ns, "Values or ranges");
  bounds->add_option("--out", bd.out, "CSV output (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (*decompose) return cmd_decompose(dec, out, err);
    if (*embed_cmd) return cmd_embed(emb, out, err);
    if (*family) return cmd_family(fam, out, err);
    if (*sweep) {
      sw.ks = expand_range(sweep_ks);
      return cmd_sweep(sw, out, err);
    }
    if (*bounds) {
      bd.ks = expand_range(bound_ks);
      bd.ns = expand_range(bound_ns);
      return cmd_bounds(bd, out);
    }
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const nlohmann::json::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}

}  // namespace stardec
