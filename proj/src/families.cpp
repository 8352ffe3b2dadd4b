#include "stardec/families.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

#include "stardec/embedder.hpp"
#include "stardec/error.hpp"
#include "stardec/independence.hpp"
#include "stardec/oracle.hpp"
#include "stardec/star_solver.hpp"

namespace stardec {

std::string_view to_string(FamilyId id) {
  switch (id) {
    case FamilyId::kSingleEdge:
      return "single-edge";
    case FamilyId::kBoundN:
      return "bound-n";
    case FamilyId::kTightnessT2:
      return "tightness-T2";
    case FamilyId::kEvenBound:
      return "even-bound";
    case FamilyId::kOddBound:
      return "odd-bound";
  }
  return "?";
}

FamilyId family_id_from_string(std::string_view text) {
  for (auto id : {FamilyId::kSingleEdge, FamilyId::kBoundN, FamilyId::kTightnessT2,
                  FamilyId::kEvenBound, FamilyId::kOddBound}) {
    if (to_string(id) == text) return id;
  }
  throw InvalidInput("unknown family '" + std::string(text) + "'");
}

std::string_view to_string(VerificationMethod m) {
  switch (m) {
    case VerificationMethod::kArithmetic:
      return "arithmetic";
    case VerificationMethod::kObstacle:
      return "obstacle";
    case VerificationMethod::kDegreePair:
      return "degree-pair";
    case VerificationMethod::kExhaustive:
      return "exhaustive";
    case VerificationMethod::kFlowConstruction:
      return "flow-construction";
    case VerificationMethod::kProofReplay:
      return "proof-replay";
  }
  return "?";
}

VerificationMethod verification_method_from_string(std::string_view text) {
  for (auto m : {VerificationMethod::kArithmetic, VerificationMethod::kObstacle,
                 VerificationMethod::kDegreePair, VerificationMethod::kExhaustive,
                 VerificationMethod::kFlowConstruction, VerificationMethod::kProofReplay}) {
    if (to_string(m) == text) return m;
  }
  throw InvalidInput("unknown verification method '" + std::string(text) + "'");
}

std::string_view to_string(ClaimStatus s) {
  switch (s) {
    case ClaimStatus::kVerified:
      return "verified";
    case ClaimStatus::kRefuted:
      return "refuted";
    case ClaimStatus::kSkippedBudget:
      return "skipped-budget";
  }
  return "?";
}

ClaimStatus claim_status_from_string(std::string_view text) {
  for (auto s : {ClaimStatus::kVerified, ClaimStatus::kRefuted, ClaimStatus::kSkippedBudget}) {
    if (to_string(s) == text) return s;
  }
  throw InvalidInput("unknown claim status '" + std::string(text) + "'");
}

bool is_odd_prime_power(int k) {
  if (k < 3 || k % 2 == 0) return false;
  int p = 3;
  while (p * p <= k && k % p != 0) p += 2;
  if (k % p != 0) return true;  // k itself is prime
  while (k % p == 0) k /= p;
  return k == 1;
}

namespace {

using Int = std::int64_t;

Int isqrt_exact(Int v) {
  if (v < 0) return -1;
  Int r = 0;
  while ((r + 1) * (r + 1) <= v) ++r;
  return r * r == v ? r : -1;
}

Int pow2(int t) { return Int{1} << t; }

Graph cliques(const std::vector<int>& orders) { return clique_union(orders); }

Claim claim(std::string id, std::string statement, VerificationMethod method, Json params = Json::object(),
            bool asserted = true) {
  return Claim{std::move(id), std::move(statement), method, std::move(params), asserted};
}

// Ordered arithmetic checks; a claim holds iff every step holds.
class Steps {
 public:
  bool check(std::string name, Json lhs, Json rhs, bool holds) {
    steps_.push_back(Json{{"step", std::move(name)}, {"lhs", std::move(lhs)}, {"rhs", std::move(rhs)}, {"holds", holds}});
    all_ = all_ && holds;
    return holds;
  }
  bool all() const { return all_; }
  Json json() const { return steps_; }

 private:
  Json steps_ = Json::array();
  bool all_ = true;
};

ClaimResult result_from_steps(const Claim& c, const Steps& steps, Json extra = Json::object()) {
  ClaimResult r{c.id, c.method, steps.all() ? ClaimStatus::kVerified : ClaimStatus::kRefuted, c.asserted, std::move(extra)};
  r.evidence["steps"] = steps.json();
  return r;
}

ClaimResult skipped(const Claim& c, Json evidence) {
  return ClaimResult{c.id, c.method, ClaimStatus::kSkippedBudget, c.asserted, std::move(evidence)};
}

std::vector<int> divisible_below(const Graph& L, int k, int bound) {
  std::vector<int> out;
  for (int s = 0; s < bound; ++s)
    if (join_edge_count(L, s) % k == 0) out.push_back(s);
  return out;
}

// Decomposes the complement of L (with the given gamma, or a balanced one)
// and checks that the uncovered edges of K_n are exactly those of L.
ClaimResult leave_by_flow(const Claim& c, const FamilyInstance& f, const VerifyConfig& config,
                          const std::optional<std::vector<Int>>& gamma) {
  const Int complement_edges = binom2(f.n) - f.L.size();
  Json evidence{{"complement_edges", complement_edges}};
  if (complement_edges > config.flow_edge_limit) {
    evidence["flow_edge_limit"] = config.flow_edge_limit;
    return skipped(c, std::move(evidence));
  }
  if (complement_edges % f.k != 0) {
    evidence["error"] = "k does not divide the complement's edge count";
    return ClaimResult{c.id, c.method, ClaimStatus::kRefuted, c.asserted, std::move(evidence)};
  }
  const Graph comp = complement(f.L);
  std::optional<StarDecomposition> d;
  if (gamma) {
    evidence["gamma"] = "prescribed";
    auto decision = decide_star_decomposition(comp, PrecentralFunction(comp, f.k, *gamma));
    if (auto* w = std::get_if<DeficiencyWitness>(&decision)) evidence["witness"] = to_json(*w);
    else d = std::get<StarDecomposition>(std::move(decision));
  } else {
    evidence["gamma"] = "balanced";
    BalancedAttempt attempt = decompose_balanced(comp, f.k);
    evidence["repairs"] = attempt.repairs;
    if (attempt.last_witness) evidence["last_witness"] = to_json(*attempt.last_witness);
    d = std::move(attempt.decomposition);
  }
  if (!d) return ClaimResult{c.id, c.method, ClaimStatus::kRefuted, c.asserted, std::move(evidence)};

  Steps steps;
  const auto violation = validate_decomposition(comp, *d);
  steps.check("decomposition validates on the complement", violation ? violation->message : "ok", "ok", !violation);
  std::vector<Edge> covered;
  for (const Star& s : d->stars)
    for (Vertex leaf : s.leaves) covered.emplace_back(s.center, leaf);
  std::sort(covered.begin(), covered.end());
  std::vector<Edge> uncovered;
  for (Vertex u = 0; u < f.n; ++u)
    for (Vertex v = u + 1; v < f.n; ++v)
      if (!std::binary_search(covered.begin(), covered.end(), Edge(u, v))) uncovered.emplace_back(u, v);
  const bool leave_matches = Graph(f.n, uncovered) == f.L;
  steps.check("leave of the packing equals L", static_cast<Int>(uncovered.size()), f.L.size(), leave_matches);
  evidence["stars"] = d->stars.size();
  return result_from_steps(c, steps, std::move(evidence));
}

ClaimResult tarsi_conditions(const Claim& c, const FamilyInstance& f) {
  Steps steps;
  const Int min_degree = f.n - 1 - f.L.max_degree();
  steps.check("2 * min degree of complement >= n + 2k - 2", 2 * min_degree, Int{f.n} + 2 * f.k - 2,
              2 * min_degree >= Int{f.n} + 2 * f.k - 2);
  const Int edges = binom2(f.n) - f.L.size();
  steps.check("complement edges mod k", edges % f.k, 0, edges % f.k == 0);
  return result_from_steps(c, steps);
}

ClaimResult edge_count(const Claim& c, const FamilyInstance& f) {
  Steps steps;
  const Int expected = c.params.at("expected").get<Int>();
  steps.check("|E(L)|", f.L.size(), expected, f.L.size() == expected);
  return result_from_steps(c, steps);
}

ClaimResult alpha_claim(const Claim& c, const FamilyInstance& f) {
  Steps steps;
  const IndependenceResult ind = independence_number(f.L);
  const Int expected = c.params.at("expected").get<Int>();
  const Json got = ind.alpha ? Json(*ind.alpha) : Json("unknown");
  steps.check("alpha(L)", got, expected, ind.alpha && *ind.alpha == expected);
  return result_from_steps(c, steps, Json{{"clique_union", ind.clique_union}});
}

ClaimResult divisible_set(const Claim& c, const FamilyInstance& f, bool exact) {
  Steps steps;
  const int bound = c.params.at("below").get<int>();
  const auto got = divisible_below(f.L, f.k, bound);
  auto expected = c.params.at("expected").get<std::vector<int>>();
  if (exact) {
    steps.check("divisible s below bound", got, expected, got == expected);
  } else {
    const bool subset = std::all_of(got.begin(), got.end(), [&](int s) {
      return std::find(expected.begin(), expected.end(), s) != expected.end();
    });
    steps.check("divisible s below bound lie in the candidate set", got, expected, subset);
  }
  return result_from_steps(c, steps);
}

ClaimResult case_construction(const Claim& c, const FamilyInstance& f, const VerifyConfig& config) {
  const int s = c.params.at("s").get<int>();
  const Int edges = join_edge_count(f.L, s);
  Json evidence{{"s", s}, {"join_edges", edges}};
  if (edges > config.flow_edge_limit) {
    evidence["flow_edge_limit"] = config.flow_edge_limit;
    return skipped(c, std::move(evidence));
  }
  Steps steps;
  steps.check("|E(L v K_s)| mod k", edges % f.k, 0, edges % f.k == 0);
  if (!steps.all()) return result_from_steps(c, steps, std::move(evidence));
  CaseConstruction built;
  const Int threshold = Int{f.k} * (f.n + s);
  if (f.n >= f.k && edges >= threshold) {
    built = embed_large_case(f.L, f.k, s);
    evidence["case"] = "large";
    const Int d = (edges / f.k - f.n) / s;
    Int raised = 0;
    for (int i = 0; i < s; ++i)
      if (built.gamma[static_cast<std::size_t>(f.n + i)] == d + 1) ++raised;
    evidence["d"] = d;
    evidence["join_at_d_plus_1"] = raised;
  } else {
    auto small = embed_small_case(f.L, f.k, s);
    evidence["case"] = "small";
    if (auto* shortfall = std::get_if<IndependentSetShortfall>(&small)) {
      evidence["required"] = shortfall->required;
      evidence["alpha"] = shortfall->alpha ? Json(*shortfall->alpha) : Json("unknown");
      steps.check("independent set of the required size", evidence["alpha"], shortfall->required, false);
      return result_from_steps(c, steps, std::move(evidence));
    }
    built = std::get<CaseConstruction>(std::move(small));
  }
  const auto violation = validate_decomposition(join(f.L, s), built.decomposition);
  steps.check("decomposition validates on L v K_s", violation ? violation->message : "ok", "ok", !violation);
  evidence["stars"] = built.decomposition.stars.size();
  return result_from_steps(c, steps, std::move(evidence));
}

ClaimResult degree_pair_claim(const Claim& c, const FamilyInstance& f) {
  const int s = c.params.at("s").get<int>();
  Steps steps;
  const auto e = degree_pair_check(f.L, f.k, s);
  Json evidence{{"s", s}};
  if (e) evidence["edge"] = Json::array({e->u, e->v});
  steps.check("edge with both endpoint degrees below k", e ? "found" : "none", "found", e.has_value());
  return result_from_steps(c, steps, std::move(evidence));
}

ClaimResult exhaustive_claim(const Claim& c, const FamilyInstance& f, const VerifyConfig& config) {
  const int s = c.params.at("s").get<int>();
  const SearchTranscript t = exhaustive_decomposition(join(f.L, s), f.k, config.backtrack_budget);
  Json evidence{{"s", s}, {"transcript", to_json(t)}};
  ClaimStatus status = ClaimStatus::kVerified;
  if (t.outcome == SearchOutcome::kFound) status = ClaimStatus::kRefuted;
  if (t.outcome == SearchOutcome::kBudgetExceeded) status = ClaimStatus::kSkippedBudget;
  return ClaimResult{c.id, c.method, status, c.asserted, std::move(evidence)};
}

// Counting argument for L = one edge {0,1} joined with k-1 vertices.
ClaimResult replay_single_edge(const Claim& c, const FamilyInstance& f) {
  const int k = f.k;
  const int n = f.n;
  const Int r = (n - 2) / (2 * k);
  const Graph g = join(f.L, k - 1);
  Steps steps;
  const Int edges = g.size();
  steps.check("|E(L v K_{k-1})| mod k", edges % k, 0, edges % k == 0);
  const Int total = edges / k;
  steps.check("2 * total centres = (4r+1)(k-1) + 2", 2 * total, (4 * r + 1) * (k - 1) + 2,
              2 * total == (4 * r + 1) * (k - 1) + 2);
  steps.check("edge ends have degree k", Json::array({g.degree(0), g.degree(1)}), k,
              g.degree(0) == k && g.degree(1) == k);
  bool rest_low = true;
  for (Vertex y = 2; y < n; ++y) rest_low = rest_low && g.degree(y) == k - 1;
  steps.check("other base vertices have degree k-1, so no centres", rest_low, true, rest_low);
  // Each edge end centres at most one star using all its edges; exactly one
  // of them covers the edge between them.
  const Int join_total = total - 1;
  steps.check("2 * centres on the join = (4r+1)(k-1)", 2 * join_total, (4 * r + 1) * (k - 1),
              2 * join_total == (4 * r + 1) * (k - 1));
  const Int forced = (join_total + (k - 2)) / (k - 1);
  steps.check("pigeonhole: some join vertex centres >= 2r+1 stars", forced, 2 * r + 1, forced >= 2 * r + 1);
  bool saturated = true;
  for (Vertex z = n; z < g.order(); ++z) saturated = saturated && g.degree(z) == k * (2 * r + 1);
  steps.check("join degree = k(2r+1): that vertex owns every incident edge, including the one to the "
              "centring edge end",
              g.degree(n), k * (2 * r + 1), saturated);
  return result_from_steps(c, steps, Json{{"s", k - 1}, {"r", r}});
}

// Counting argument for the T2 leave joined with k-1 vertices.
ClaimResult replay_tightness(const Claim& c, const FamilyInstance& f) {
  const int k = f.k;
  const int n = f.n;
  const Int q = f.params.at("sqrt_k").get<Int>();
  const Int r = (n - k - 2) / (2 * k);
  const Graph g = join(f.L, k - 1);
  Steps steps;
  const Int edges = g.size();
  steps.check("|E(L v K_{k-1})| mod k", edges % k, 0, edges % k == 0);
  const Int total = edges / k;
  steps.check("2 * total centres = 2(2r+1)(k-1) + k + 2", 2 * total, 2 * (2 * r + 1) * (k - 1) + k + 2,
              2 * total == 2 * (2 * r + 1) * (k - 1) + k + 2);
  bool v1 = true;
  for (Vertex y = 0; y < q; ++y) v1 = v1 && g.degree(y) == k + q - 2 && g.degree(y) < 2 * k;
  steps.check("clique vertices have degree k+sqrt(k)-2 < 2k, so at most one centre each", k + q - 2,
              2 * k, v1);
  const Int pairs = q / 2 + 1;
  bool v2 = true;
  for (Vertex y = static_cast<Vertex>(q); y < q + 2 * pairs; ++y) v2 = v2 && g.degree(y) == k;
  steps.check("matching vertices have degree k, so each matching edge has exactly one centre", k, k, v2);
  bool rest = true;
  for (Vertex y = static_cast<Vertex>(q + 2 * pairs); y < n; ++y) rest = rest && g.degree(y) == k - 1;
  steps.check("remaining base vertices have degree k-1, so no centres", rest, true, rest);
  const Int join_lower = total - q - pairs;
  steps.check("centres on the join > (2r+1)(k-1)", join_lower, (2 * r + 1) * (k - 1),
              join_lower > (2 * r + 1) * (k - 1));
  bool saturated = true;
  for (Vertex z = n; z < g.order(); ++z) saturated = saturated && g.degree(z) == k * (2 * r + 2);
  steps.check("pigeonhole vertex has 2r+2 centres and degree k(2r+2), owning its edge to a centred "
              "matching vertex",
              g.degree(n), k * (2 * r + 2), saturated);
  return result_from_steps(c, steps, Json{{"s", k - 1}, {"r", r}});
}

ClaimResult obstacle_claim(const Claim& c, const FamilyInstance& f) {
  const int s = c.params.at("s").get<int>();
  Steps steps;
  const Int edges = join_edge_count(f.L, s);
  steps.check("|E(L v K_s)| mod k", edges % f.k, 0, edges % f.k == 0);
  if (!steps.all()) return result_from_steps(c, steps);
  const ObstacleCheck o = obstacle_check(f.L, f.k, s);
  const Json alpha = o.alpha ? Json(*o.alpha) : Json("unknown");
  Json evidence{{"s", s}, {"required", o.required}, {"alpha", alpha}};
  if (c.params.contains("test")) {
    const Int test = c.params.at("test").get<Int>();
    evidence["test"] = test;
    steps.check("test expression positive", test, 0, test > 0);
    if (o.alpha) {
      steps.check("test expression = 2k (required - alpha)", test, 2 * Int{f.k} * (o.required - *o.alpha),
                  test == 2 * Int{f.k} * (o.required - *o.alpha));
    }
  }
  steps.check("required > alpha(L)", o.required, alpha, o.status == ObstacleCheck::Status::kViolated);
  return result_from_steps(c, steps, std::move(evidence));
}

// --- family-specific arithmetic ---

ClaimResult bound_n_obstacle(const Claim& c, const FamilyInstance& f) {
  const Int k = f.k;
  const Int n = f.n;
  const Int m = f.params.at("m").get<Int>();
  Steps steps;
  const Int edges = join_edge_count(f.L, f.k);
  steps.check("|E(L v K_k)| mod k", edges % k, 0, edges % k == 0);
  const Rational required = Rational(n + k) - Rational(edges, k);
  const Rational closed = Rational(k, 4) + Rational(5 * m, 8);
  steps.check("n + k - |E|/k = k/4 + 5 sqrt(2k)/8", to_string(required), to_string(closed), required == closed);
  const IndependenceResult ind = independence_number(f.L);
  const Rational alpha_closed = Rational(k, 4) - Rational(k, m);
  const Json alpha = ind.alpha ? Json(*ind.alpha) : Json("unknown");
  steps.check("alpha(L) = k/4 - k/m", alpha, to_string(alpha_closed), ind.alpha && Rational(*ind.alpha) == alpha_closed);
  steps.check("required > alpha(L)", to_string(required), alpha, ind.alpha && required > Rational(*ind.alpha));
  return result_from_steps(c, steps, Json{{"required", to_string(required)}, {"alpha", alpha}});
}

ClaimResult bound_n_divisibility(const Claim& c, const FamilyInstance& f) {
  Steps steps;
  const Int big = binom2(f.n + f.k);
  steps.check("C(n+k,2) mod k", big % f.k, 0, big % f.k == 0);
  const Int join_edges = join_edge_count(f.L, f.k);
  steps.check("|E(L v K_k)| mod k", join_edges % f.k, 0, join_edges % f.k == 0);
  return result_from_steps(c, steps, Json{{"binom", big}});
}

ClaimResult even_bound_choice(const Claim& c, const FamilyInstance& f) {
  const Int k = f.k;
  const Int m = f.params.at("m").get<Int>();
  Steps steps;
  auto above = [&](Int n) { return n - m > 0 && (n - m) * (n - m) > 4 * k * (2 * k + 1); };
  steps.check("n = 0 mod m", f.n % m, 0, f.n % m == 0);
  steps.check("n > 2 sqrt(k(2k+1)) + sqrt(2k)", f.n, "bound", above(f.n));
  steps.check("n - m is not above the bound", f.n - m, "bound", !above(f.n - m));
  return result_from_steps(c, steps);
}

ClaimResult even_bound_below_cap(const Claim& c, const FamilyInstance& f) {
  Steps steps;
  const int s = 6 * f.k - f.n;
  const Surd cap = theorem_cap(f.k);
  steps.check("6k - n < (6 - 2 sqrt 2) k", s, cap.to_string(), Surd(s) < cap);
  return result_from_steps(c, steps, Json{{"s", s}, {"cap", cap.to_double()}});
}

ClaimResult odd_bound_choice(const Claim& c, const FamilyInstance& f) {
  const Int k = f.k;
  const Int m = f.params.at("m").get<Int>();
  const Int r = f.params.at("r").get<Int>();
  Steps steps;
  auto above = [&](Int n) {
    const Int a = 4 * n - 7 * k - 5;
    return a > 0 && a * a > 4 * (6 * k + 6);
  };
  steps.check("n > 7k/4 + sqrt(6k+6)/2 + 5/4", f.n, "bound", above(f.n));
  steps.check("2n - 2k = m^2", 2 * (f.n - k), m * m, 2 * (f.n - k) == m * m);
  bool least = true;
  for (Int n = f.n - 1; n > 0 && above(n); --n) least = least && isqrt_exact(2 * (n - k)) < 0;
  steps.check("no smaller n qualifies", least, true, least);
  steps.check("r = 2k - n + m >= 1", r, 1, r >= 1);
  steps.check("order (m-1)m + r = n", (m - 1) * m + r, f.n, (m - 1) * m + r == f.n);
  return result_from_steps(c, steps);
}

Int odd_bound_test(Int k, Int n, Int m, Int s) {
  return n * (6 * k - n + 1) - 4 * k * (k + m) - s * (s + 2 * n - 2 * k - 1);
}

Int even_bound_test(Int k, Int n, Int m, Int s) {
  return n * (2 * k - 2 * m + 1) - s * (s + 2 * n - 2 * k - 1);
}

struct OddParams {
  Int n = 0;
  Int m = 0;
  Int r = 0;
};

OddParams odd_bound_params(int k) {
  if (!is_odd_prime_power(k)) throw InvalidInput("odd-bound needs k a power of an odd prime");
  const Int kk = k;
  for (Int n = (7 * kk) / 4 + 1;; ++n) {
    const Int a = 4 * n - 7 * kk - 5;
    if (a <= 0 || a * a <= 4 * (6 * kk + 6)) continue;
    const Int m = isqrt_exact(2 * (n - kk));
    if (m <= 0) continue;
    const Int r = 2 * kk - n + m;
    if (r <= 0) throw InvalidInput("odd-bound: r = 2k - n + m is not positive");
    return {n, m, r};
  }
}

}  // namespace

FamilyInstance gen_single_edge(int k, int n) {
  if (k < 3 || k % 2 == 0) throw InvalidInput("single-edge needs k odd >= 3");
  if (n < 2 || n % (2 * k) != 2) throw InvalidInput("single-edge needs n = 2 mod 2k");
  FamilyInstance f;
  f.family = FamilyId::kSingleEdge;
  f.k = k;
  f.n = n;
  f.L = Graph(n, {Edge(0, 1)});
  f.params = Json{{"r", (n - 2) / (2 * k)}};

  f.claims.push_back(claim("leave-realizable", "L is the leave of a partial k-star decomposition of K_n",
                           VerificationMethod::kFlowConstruction));
  const Int edges = join_edge_count(f.L, k - 1);
  f.claims.push_back(claim("no-decomposition-at-k-1", "L v K_{k-1} has no k-star decomposition",
                           edges <= kExhaustiveEdgeLimit ? VerificationMethod::kExhaustive
                                                         : VerificationMethod::kProofReplay,
                           Json{{"s", k - 1}, {"edges", edges}}));
  if (is_odd_prime_power(k)) {
    f.claims.push_back(claim("no-embedding-below-2k-2", "no s < 2k-2 admits a decomposition of L v K_s",
                             VerificationMethod::kDegreePair,
                             Json{{"below", 2 * k - 2}, {"expected", std::vector<int>{k - 2, k - 1}}}));
  }
  f.claims.push_back(claim("embeds-at-2k-2", "L v K_{2k-2} has a k-star decomposition",
                           VerificationMethod::kFlowConstruction, Json{{"s", 2 * k - 2}}));
  return f;
}

FamilyInstance gen_bound_n(int t) {
  if (t < 7 || t % 2 == 0) throw InvalidInput("bound-n needs t odd >= 7");
  if (t > 11) throw InvalidInput("bound-n: t > 11 is beyond the supported size");
  FamilyInstance f;
  f.family = FamilyId::kBoundN;
  const Int k = pow2(t);
  const Int m = pow2((t + 1) / 2);
  const Int n = k * m / 4 - k;
  f.k = static_cast<int>(k);
  f.n = static_cast<int>(n);
  f.L = cliques(std::vector<int>(static_cast<std::size_t>(n / m), static_cast<int>(m)));
  f.params = Json{{"t", t}, {"m", m}};
  if (f.L.size() != n * (m - 1) / 2) throw std::logic_error("bound-n edge count");

  f.claims.push_back(claim("edge-count", "|E(L)| = n(m-1)/2", VerificationMethod::kArithmetic,
                           Json{{"expected", n * (m - 1) / 2}}));
  f.claims.push_back(claim("alpha", "alpha(L) = n/m", VerificationMethod::kArithmetic, Json{{"expected", n / m}}));
  f.claims.push_back(claim("obstacle-at-k", "n + k - |E(L v K_k)|/k = k/4 + 5m/8 > k/4 - k/m = alpha(L)",
                           VerificationMethod::kObstacle, Json{{"s", k}}));
  f.claims.push_back(claim("divisibility", "C(n+k,2) = 0 mod k", VerificationMethod::kArithmetic));
  f.claims.push_back(claim("tarsi-conditions", "complement has min degree >= n/2+k-1 and k | edges",
                           VerificationMethod::kArithmetic));
  f.claims.push_back(claim("leave-realizable", "L is the leave of a partial k-star decomposition of K_n",
                           VerificationMethod::kFlowConstruction));
  return f;
}

FamilyInstance gen_tightness_T2(int t, int n) {
  if (t < 4 || t % 2 != 0) throw InvalidInput("tightness-T2 needs t even >= 4");
  if (t > 14) throw InvalidInput("tightness-T2: t > 14 is beyond the supported size");
  const Int k = pow2(t);
  const Int q = pow2(t / 2);
  if (n < 3 * k + 2 || n % (2 * k) != k + 2) throw InvalidInput("tightness-T2 needs n = k+2 mod 2k and n >= 3k+2");
  FamilyInstance f;
  f.family = FamilyId::kTightnessT2;
  f.k = static_cast<int>(k);
  f.n = n;
  std::vector<int> orders{static_cast<int>(q)};
  for (Int i = 0; i < q / 2 + 1; ++i) orders.push_back(2);
  for (Int i = 0; i < n - 2 * q - 2; ++i) orders.push_back(1);
  f.L = cliques(orders);
  f.params = Json{{"t", t}, {"sqrt_k", q}, {"r", (n - k - 2) / (2 * k)}};
  if (f.L.order() != n || 2 * f.L.size() != k + 2) throw std::logic_error("tightness-T2 construction");

  f.claims.push_back(claim("edge-count", "|E(L)| = (k+2)/2", VerificationMethod::kArithmetic,
                           Json{{"expected", (k + 2) / 2}}));
  f.claims.push_back(claim("tarsi-conditions", "complement has min degree >= n/2+k-1 and k | edges",
                           VerificationMethod::kArithmetic));
  f.claims.push_back(claim("leave-realizable", "L is the leave of a partial k-star decomposition of K_n",
                           VerificationMethod::kFlowConstruction));
  f.claims.push_back(claim("divisible-s", "the divisible s < 3k-2 are exactly k-2 and k-1",
                           VerificationMethod::kArithmetic,
                           Json{{"below", 3 * k - 2}, {"expected", std::vector<Int>{k - 2, k - 1}}}));
  f.claims.push_back(claim("degree-pair-at-k-2", "L v K_{k-2} has an edge with both endpoint degrees below k",
                           VerificationMethod::kDegreePair, Json{{"s", k - 2}}));
  f.claims.push_back(claim("replay-at-k-1", "L v K_{k-1} has no k-star decomposition",
                           VerificationMethod::kProofReplay, Json{{"s", k - 1}}));
  f.claims.push_back(claim("embeds-at-3k-2", "L v K_{3k-2} has a k-star decomposition",
                           VerificationMethod::kFlowConstruction, Json{{"s", 3 * k - 2}}));
  return f;
}

FamilyInstance gen_even_bound(int t) {
  if (t < 3 || t % 2 == 0) throw InvalidInput("even-bound needs t odd >= 3");
  if (t > 15) throw InvalidInput("even-bound: t > 15 is beyond the supported size");
  const Int k = pow2(t);
  const Int m = pow2((t + 1) / 2);
  Int n = m;
  while (!(n - m > 0 && (n - m) * (n - m) > 4 * k * (2 * k + 1))) n += m;
  FamilyInstance f;
  f.family = FamilyId::kEvenBound;
  f.k = static_cast<int>(k);
  f.n = static_cast<int>(n);
  f.L = cliques(std::vector<int>(static_cast<std::size_t>(n / m), static_cast<int>(m)));
  f.params = Json{{"t", t}, {"m", m}};
  if (6 * k - n <= 0 || 4 * k - n < 0) throw std::logic_error("even-bound: unexpected order");

  f.claims.push_back(claim("n-choice", "n is the least multiple of m above 2 sqrt(k(2k+1)) + m",
                           VerificationMethod::kArithmetic));
  f.claims.push_back(claim("edge-count", "|E(L)| = n(m-1)/2", VerificationMethod::kArithmetic,
                           Json{{"expected", n * (m - 1) / 2}}));
  f.claims.push_back(claim("alpha", "alpha(L) = n/m", VerificationMethod::kArithmetic, Json{{"expected", n / m}}));
  f.claims.push_back(claim("tarsi-conditions", "complement has min degree >= n/2+k-1 and k | edges",
                           VerificationMethod::kArithmetic));
  f.claims.push_back(claim("leave-realizable", "L is the leave of a partial k-star decomposition of K_n",
                           VerificationMethod::kFlowConstruction));
  f.claims.push_back(claim("divisible-s", "the divisible s < 6k-n are exactly 4k-n and 4k-n+1",
                           VerificationMethod::kArithmetic,
                           Json{{"below", 6 * k - n}, {"expected", std::vector<Int>{4 * k - n, 4 * k - n + 1}}}));
  for (Int s : {4 * k - n, 4 * k - n + 1}) {
    f.claims.push_back(claim("obstacle-at-" + std::to_string(s), "alpha(L) < n + s - |E(L v K_s)|/k",
                             VerificationMethod::kObstacle, Json{{"s", s}, {"test", even_bound_test(k, n, m, s)}}));
  }
  f.claims.push_back(claim("large-case-at-6k-n", "L v K_{6k-n} decomposes via the large-case gamma",
                           VerificationMethod::kFlowConstruction, Json{{"s", 6 * k - n}}));
  f.claims.push_back(claim("below-cap", "6k - n < (6 - 2 sqrt 2) k", VerificationMethod::kArithmetic));
  return f;
}

FamilyInstance gen_odd_bound(int k) {
  const OddParams p = odd_bound_params(k);
  FamilyInstance f;
  f.family = FamilyId::kOddBound;
  f.k = k;
  f.n = static_cast<int>(p.n);
  std::vector<int> orders(static_cast<std::size_t>(p.m - 1), static_cast<int>(p.m));
  orders.push_back(static_cast<int>(p.r));
  f.L = cliques(orders);
  f.params = Json{{"m", p.m}, {"r", p.r}};
  const Int expected_edges = binom2(p.r) + (p.m - 1) * binom2(p.m);
  if (f.L.size() != expected_edges) throw std::logic_error("odd-bound edge count");

  const Int kk = k;
  f.claims.push_back(claim("n-choice", "n is least with n > 7k/4 + sqrt(6k+6)/2 + 5/4 and 2n-2k square",
                           VerificationMethod::kArithmetic));
  f.claims.push_back(claim("edge-count", "|E(L)| = C(r,2) + (m-1)C(m,2)", VerificationMethod::kArithmetic,
                           Json{{"expected", expected_edges}}));
  f.claims.push_back(claim("alpha", "alpha(L) = m", VerificationMethod::kArithmetic, Json{{"expected", p.m}}));
  f.claims.push_back(claim("leave-realizable",
                           "gamma = 0 on the K_r, 1 elsewhere decomposes the complement",
                           VerificationMethod::kFlowConstruction));
  std::vector<Int> candidates;
  for (Int s : {2 * kk - p.n, 2 * kk - p.n + 1, 3 * kk - p.n, 3 * kk - p.n + 1})
    if (s >= 0) candidates.push_back(s);
  f.claims.push_back(claim("divisible-s", "the divisible s < 4k-n lie in {2k-n, 2k-n+1, 3k-n, 3k-n+1}",
                           VerificationMethod::kArithmetic, Json{{"below", 4 * kk - p.n}, {"expected", candidates}}));
  for (int s : divisible_below(f.L, k, static_cast<int>(4 * kk - p.n))) {
    f.claims.push_back(claim("obstacle-at-" + std::to_string(s), "alpha(L) < n + s - |E(L v K_s)|/k",
                             VerificationMethod::kObstacle,
                             Json{{"s", s}, {"test", odd_bound_test(kk, p.n, p.m, s)}}, false));
  }
  f.claims.push_back(claim("embeds-at-4k-n", "L v K_{4k-n} has a k-star decomposition",
                           VerificationMethod::kFlowConstruction, Json{{"s", 4 * kk - p.n}}));
  return f;
}

bool FamilyReport::ok() const {
  return std::none_of(claims.begin(), claims.end(),
                      [](const ClaimResult& c) { return c.asserted && c.status == ClaimStatus::kRefuted; });
}

const ClaimResult* FamilyReport::find(std::string_view id) const {
  for (const ClaimResult& c : claims)
    if (c.id == id) return &c;
  return nullptr;
}

FamilyReport verify_instance(const FamilyInstance& f, const VerifyConfig& config) {
  FamilyReport report;
  report.family = f.family;
  report.k = f.k;
  report.n = f.n;
  report.params = f.params;

  std::map<std::string, ClaimResult> done;
  for (const Claim& c : f.claims) {
    ClaimResult r;
    const std::string& id = c.id;
    if (id == "edge-count") {
      r = edge_count(c, f);
    } else if (id == "alpha") {
      r = alpha_claim(c, f);
    } else if (id == "tarsi-conditions") {
      r = tarsi_conditions(c, f);
    } else if (id == "leave-realizable") {
      if (f.family == FamilyId::kSingleEdge && f.n == 2) {
        Steps steps;
        steps.check("n = 2: L is K_2 and the empty packing leaves it", f.L.size(), 1, f.L.size() == 1);
        r = result_from_steps(c, steps);
      } else if (f.family == FamilyId::kOddBound) {
        std::vector<Int> gamma(static_cast<std::size_t>(f.n), 1);
        const Int r0 = f.params.at("r").get<Int>();
        for (Int i = 0; i < r0; ++i) gamma[static_cast<std::size_t>(f.n - 1 - i)] = 0;
        r = leave_by_flow(c, f, config, gamma);
      } else {
        r = leave_by_flow(c, f, config, std::nullopt);
      }
    } else if (id == "divisible-s") {
      r = divisible_set(c, f, f.family != FamilyId::kOddBound);
    } else if (id == "no-decomposition-at-k-1") {
      r = c.method == VerificationMethod::kExhaustive ? exhaustive_claim(c, f, config) : replay_single_edge(c, f);
    } else if (id == "no-embedding-below-2k-2") {
      Steps steps;
      const auto got = divisible_below(f.L, f.k, 2 * f.k - 2);
      const std::vector<int> expected{f.k - 2, f.k - 1};
      steps.check("divisible s below 2k-2", got, expected, got == expected);
      const auto e = degree_pair_check(f.L, f.k, f.k - 2);
      steps.check("s = k-2 fails degree-pair", e ? "violated" : "passes", "violated", e.has_value());
      const auto& prior = done.at("no-decomposition-at-k-1");
      Json evidence{{"k-1", std::string(to_string(prior.status))}};
      if (prior.status == ClaimStatus::kSkippedBudget) {
        r = skipped(c, std::move(evidence));
      } else {
        steps.check("s = k-1 has no decomposition", std::string(to_string(prior.status)), "verified",
                    prior.status == ClaimStatus::kVerified);
        r = result_from_steps(c, steps, std::move(evidence));
      }
    } else if (id.rfind("embeds-at-", 0) == 0 || id == "large-case-at-6k-n") {
      r = case_construction(c, f, config);
    } else if (id == "degree-pair-at-k-2") {
      r = degree_pair_claim(c, f);
    } else if (id == "replay-at-k-1") {
      r = replay_tightness(c, f);
    } else if (id == "obstacle-at-k") {
      r = bound_n_obstacle(c, f);
    } else if (id.rfind("obstacle-at-", 0) == 0) {
      r = obstacle_claim(c, f);
    } else if (id == "divisibility") {
      r = bound_n_divisibility(c, f);
    } else if (id == "n-choice") {
      r = f.family == FamilyId::kEvenBound ? even_bound_choice(c, f) : odd_bound_choice(c, f);
    } else if (id == "below-cap") {
      r = even_bound_below_cap(c, f);
    } else {
      throw std::logic_error("no verifier for claim '" + id + "'");
    }
    done.emplace(id, r);
    report.claims.push_back(std::move(r));
  }
  return report;
}

Json to_json(const FamilyReport& r) {
  Json claims = Json::array();
  for (const ClaimResult& c : r.claims) {
    claims.push_back(Json{{"id", c.id},
                          {"method", std::string(to_string(c.method))},
                          {"status", std::string(to_string(c.status))},
                          {"asserted", c.asserted},
                          {"evidence", c.evidence}});
  }
  return Json{{"family", std::string(to_string(r.family))},
              {"k", r.k},
              {"n", r.n},
              {"params", r.params},
              {"ok", r.ok()},
              {"claims", std::move(claims)}};
}

FamilyReport report_from_json(const Json& j) {
  try {
    FamilyReport r;
    r.family = family_id_from_string(j.at("family").get<std::string>());
    r.k = j.at("k").get<int>();
    r.n = j.at("n").get<int>();
    r.params = j.at("params");
    for (const Json& c : j.at("claims")) {
      r.claims.push_back(ClaimResult{c.at("id").get<std::string>(),
                                     verification_method_from_string(c.at("method").get<std::string>()),
                                     claim_status_from_string(c.at("status").get<std::string>()),
                                     c.at("asserted").get<bool>(), c.at("evidence")});
    }
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("family report: ") + e.what());
  }
}

std::vector<OddBoundProbe> scan_odd_bound(int k_lo, int k_hi) {
  std::vector<OddBoundProbe> out;
  for (int k = std::max(k_lo, 3); k <= k_hi; ++k) {
    if (!is_odd_prime_power(k)) continue;
    OddParams p;
    try {
      p = odd_bound_params(k);
    } catch (const InvalidInput&) {
      continue;
    }
    OddBoundProbe probe{k, static_cast<int>(p.n), static_cast<int>(p.m), static_cast<int>(p.r), std::nullopt, true};
    const Int e = binom2(p.r) + (p.m - 1) * binom2(p.m);
    for (Int s = 0; s < 4 * Int{k} - p.n; ++s) {
      if ((e + p.n * s + binom2(s)) % k != 0) continue;
      const Int test = odd_bound_test(k, p.n, p.m, s);
      if (!probe.min_test_value || test < *probe.min_test_value) probe.min_test_value = test;
    }
    probe.all_hold = !probe.min_test_value || *probe.min_test_value > 0;
    out.push_back(probe);
  }
  return out;
}

}  // namespace stardec
