#include "stardec/embedder.hpp"

#include <algorithm>
#include <stdexcept>

#include "stardec/error.hpp"

namespace stardec {

namespace {

void require_case_preconditions(const Graph& L, int k, int s, const char* name) {
  if (k < 2) throw InvalidInput(std::string(name) + ": k must be at least 2");
  if (s < k) throw InvalidInput(std::string(name) + ": needs s >= k");
  if (L.max_degree() > k - 1) throw InvalidInput(std::string(name) + ": leave has a vertex of degree >= k");
  if (join_edge_count(L, s) % k != 0) throw InvalidInput(std::string(name) + ": k does not divide |E(L v K_s)|");
}

CaseConstruction run_gamma(const Graph& joined, int k, std::vector<std::int64_t> gamma,
                           const char* name) {
  const PrecentralFunction pf(joined, k, gamma);
  auto decision = decide_star_decomposition(joined, pf);
  if (!std::holds_alternative<StarDecomposition>(decision)) {
    throw std::logic_error(std::string(name) + ": prescribed gamma is deficient");
  }
  return CaseConstruction{std::get<StarDecomposition>(std::move(decision)), std::move(gamma)};
}

}  // namespace

ObstacleCheck obstacle_check(const Graph& L, int k, int s, std::uint64_t budget) {
  if (k < 1) throw InvalidInput("star size k must be positive");
  const std::int64_t edges = join_edge_count(L, s);
  if (edges % k != 0) throw InvalidInput("obstacle check needs k | |E(L v K_s)|");
  ObstacleCheck out;
  out.required = L.order() + s - edges / k;
  if (out.required <= 0) return out;
  const IndependenceResult ind = independence_number(L, budget);
  out.alpha = ind.alpha;
  if (!ind.alpha) out.status = ObstacleCheck::Status::kInconclusive;
  else if (*ind.alpha < out.required) out.status = ObstacleCheck::Status::kViolated;
  return out;
}

std::optional<Edge> degree_pair_check(const Graph& L, int k, int s) {
  const int n = L.order();
  const bool join_low = n + s - 1 < k;
  // Scans the edges of L v K_s in lexicographic order.
  for (Vertex x = 0; x < n; ++x) {
    if (L.degree(x) + s >= k) continue;
    for (Vertex y : L.neighbors(x))
      if (y > x && L.degree(y) + s < k) return Edge(x, y);
    if (join_low && s > 0) return Edge(x, n);
  }
  if (join_low && s >= 2) return Edge(n, n + 1);
  return std::nullopt;
}

std::variant<CaseConstruction, IndependentSetShortfall> embed_small_case(const Graph& L, int k,
                                                                         int s,
                                                                         std::uint64_t budget) {
  require_case_preconditions(L, k, s, "small case");
  const int n = L.order();
  const std::int64_t edges = join_edge_count(L, s);
  if (edges > static_cast<std::int64_t>(k) * (n + s)) {
    throw InvalidInput("small case: |E(L v K_s)| exceeds k(n+s)");
  }
  const std::int64_t required = n + s - edges / k;

  std::vector<std::int64_t> gamma(static_cast<std::size_t>(n + s), 1);
  if (required > 0) {
    const IndependenceResult ind = independence_number(L, budget);
    if (!ind.alpha || *ind.alpha < required) return IndependentSetShortfall{ind.alpha, required};
    for (std::int64_t i = 0; i < required; ++i) gamma[ind.witness[static_cast<std::size_t>(i)]] = 0;
  }
  return run_gamma(join(L, s), k, std::move(gamma), "small case");
}

CaseConstruction embed_large_case(const Graph& L, int k, int s) {
  require_case_preconditions(L, k, s, "large case");
  const int n = L.order();
  if (n < k) throw InvalidInput("large case: needs n >= k");
  const std::int64_t edges = join_edge_count(L, s);
  if (edges < static_cast<std::int64_t>(k) * (n + s)) {
    throw InvalidInput("large case: |E(L v K_s)| is below k(n+s)");
  }
  const std::int64_t b = edges / k;
  const std::int64_t d = (b - n) / s;
  const std::int64_t extra = b - n - s * d;

  std::vector<std::int64_t> gamma(static_cast<std::size_t>(n + s), 1);
  for (int i = 0; i < s; ++i) gamma[static_cast<std::size_t>(n + i)] = i < extra ? d + 1 : d;
  return run_gamma(join(L, s), k, std::move(gamma), "large case");
}

Surd theorem_cap(int k) {
  if (k % 2 != 0) return Surd(Rational(9 * static_cast<std::int64_t>(k), 4));
  return Surd(Rational(6 * static_cast<std::int64_t>(k)), Rational(-2 * static_cast<std::int64_t>(k)), 2);
}

int statement1_cap(int k) { return k % 2 != 0 ? 2 * k - 2 : 3 * k - 2; }

Surd n_threshold(int k) {
  const std::int64_t kk = k;
  const Rational q(kk * (kk - 1), 8 * kk - 1);
  return Surd(q, q, 8 * kk);
}

GuaranteedS guaranteed_s(int n, int k) {
  if (n < 1 || k < 2) throw InvalidInput("guaranteed_s needs n >= 1 and k >= 2");
  GuaranteedS out;
  const std::int64_t kk = k;
  const bool beyond_root = Surd(n) >= Surd(0, 2 * kk, 2);  // n >= 2 sqrt(2) k

  if (k == 2) {
    out.s = 1;
    while ((n + out.s) % 4 != 0) ++out.s;
    out.rationale = "k=2: n+s = 0 mod 4";
  } else if (k % 2 == 0) {
    if (beyond_root) {
      out.s = static_cast<int>(ceil(Surd(4 * kk, -2 * kk, 2)));
      while ((n + out.s) % (2 * k) != 0) ++out.s;
      out.rationale = "even k, n >= 2sqrt(2)k: s >= (4-2sqrt(2))k with n+s = 0 mod 2k";
    } else if (n >= k + 1) {
      out.s = 4 * k - n;
      out.rationale = "even k, k < n < 2sqrt(2)k: s = 4k-n";
    } else {
      out.s = 2 * k - n;
      out.rationale = "even k, n <= k: s = 2k-n";
    }
  } else {
    if (beyond_root) {
      out.s = static_cast<int>(ceil(Rational(5 * kk, 4)));
      while ((n + out.s) % k != 0) ++out.s;
      out.rationale = "odd k, n >= 2sqrt(2)k: s >= 5k/4 with n+s = 0 mod k";
    } else if (4 * n > 7 * k) {
      out.s = 4 * k - n;
      out.rationale = "odd k, 7k/4 < n < 2sqrt(2)k: s = 4k-n";
    } else if (n >= k + 1) {
      out.s = 3 * k - n;
      out.rationale = "odd k, k < n <= 7k/4: s = 3k-n";
    } else {
      out.s = 2 * k - n;
      out.rationale = "odd k, n <= k: s = 2k-n";
    }
  }
  if (!(Surd(out.s) < theorem_cap(k))) throw std::logic_error("guaranteed s is not below the cap");
  return out;
}

GreedyCompletion greedy_complete(const Graph& L, int k) {
  if (k < 1) throw InvalidInput("star size k must be positive");
  const int n = L.order();
  std::vector<std::vector<Vertex>> adj(static_cast<std::size_t>(n));
  for (Vertex x = 0; x < n; ++x) adj[x].assign(L.neighbors(x).begin(), L.neighbors(x).end());

  GreedyCompletion out;
  out.stars.k = k;
  // Degrees only drop, so lower vertices never become eligible again.
  for (Vertex x = 0; x < n;) {
    if (static_cast<int>(adj[x].size()) < k) {
      ++x;
      continue;
    }
    std::vector<Vertex> leaves(adj[x].begin(), adj[x].begin() + k);
    adj[x].erase(adj[x].begin(), adj[x].begin() + k);
    for (Vertex y : leaves) adj[y].erase(std::lower_bound(adj[y].begin(), adj[y].end(), x));
    out.stars.stars.push_back({x, std::move(leaves)});
  }
  std::vector<Edge> rest;
  for (Vertex x = 0; x < n; ++x)
    for (Vertex y : adj[x])
      if (x < y) rest.emplace_back(x, y);
  out.leave = Graph(n, std::move(rest));
  return out;
}

std::string_view to_string(RejectionReason reason) {
  switch (reason) {
    case RejectionReason::kDivisibility:
      return "divisibility";
    case RejectionReason::kObstacle:
      return "obstacle";
    case RejectionReason::kDegreePair:
      return "degree-pair";
    case RejectionReason::kExhaustedNonexistence:
      return "exhausted-nonexistence";
    case RejectionReason::kUnknownSkipped:
      return "unknown-skipped";
  }
  return "?";
}

RejectionReason rejection_reason_from_string(std::string_view text) {
  for (auto r : {RejectionReason::kDivisibility, RejectionReason::kObstacle,
                 RejectionReason::kDegreePair, RejectionReason::kExhaustedNonexistence,
                 RejectionReason::kUnknownSkipped}) {
    if (to_string(r) == text) return r;
  }
  throw InvalidInput("unknown rejection reason '" + std::string(text) + "'");
}

std::string_view to_string(Minimality m) { return m == Minimality::kExact ? "exact" : "conditional"; }

Minimality minimality_from_string(std::string_view text) {
  if (text == "exact") return Minimality::kExact;
  if (text == "conditional") return Minimality::kConditional;
  throw InvalidInput("unknown minimality '" + std::string(text) + "'");
}

std::string_view to_string(EmbedMethod m) {
  switch (m) {
    case EmbedMethod::kTrivial:
      return "trivial";
    case EmbedMethod::kSmallCase:
      return "small-case";
    case EmbedMethod::kLargeCase:
      return "large-case";
    case EmbedMethod::kGammaSearch:
      return "gamma-search";
    case EmbedMethod::kTwoStar:
      return "two-star";
  }
  return "?";
}

EmbedMethod embed_method_from_string(std::string_view text) {
  for (auto m : {EmbedMethod::kTrivial, EmbedMethod::kSmallCase, EmbedMethod::kLargeCase,
                 EmbedMethod::kGammaSearch, EmbedMethod::kTwoStar}) {
    if (to_string(m) == text) return m;
  }
  throw InvalidInput("unknown embed method '" + std::string(text) + "'");
}

EmbeddingCertificate embed(const Graph& L, int k, const EmbedConfig& config) {
  if (k < 2) throw InvalidInput("embed needs k >= 2");
  const int n = L.order();
  if ((binom2(n) - L.size()) % k != 0) {
    throw InvalidInput("not a leave: k does not divide C(n,2) - |E(L)|");
  }
  const int max_s = config.max_s < 0 ? 6 * k : config.max_s;
  const GreedyCompletion greedy = greedy_complete(L, k);
  std::optional<IndependenceResult> alpha;

  EmbeddingCertificate cert;
  cert.k = k;
  cert.n = n;
  for (int s = 0; s <= max_s; ++s) {
    const std::int64_t edges = join_edge_count(L, s);
    if (edges % k != 0) {
      cert.rejections.push_back({s, RejectionReason::kDivisibility, {}, {}, {}, {}});
      continue;
    }
    if (auto e = degree_pair_check(L, k, s)) {
      cert.rejections.push_back({s, RejectionReason::kDegreePair, {}, {}, *e, {}});
      continue;
    }
    const std::int64_t required = n + s - edges / k;
    if (required > 0) {
      if (!alpha) alpha = independence_number(L, config.independence_budget);
      if (alpha->alpha && *alpha->alpha < required) {
        cert.rejections.push_back({s, RejectionReason::kObstacle, required, *alpha->alpha, {}, {}});
        continue;
      }
    }

    std::optional<StarDecomposition> found;
    bool with_greedy = false;
    const Graph& reduced = greedy.leave;
    const std::int64_t reduced_edges = join_edge_count(reduced, s);
    const std::int64_t threshold = static_cast<std::int64_t>(k) * (n + s);

    if (edges == 0) {
      found = StarDecomposition{k, {}};
      cert.method = EmbedMethod::kTrivial;
    } else if (k == 2) {
      auto result = two_star_decompose(join(L, s));
      if (auto* d = std::get_if<StarDecomposition>(&result)) {
        found = std::move(*d);
        cert.method = EmbedMethod::kTwoStar;
      } else {
        cert.rejections.push_back({s, RejectionReason::kExhaustedNonexistence, {}, {}, {}, 0});
        continue;
      }
    } else if (s >= k && n >= k && reduced_edges >= threshold) {
      found = embed_large_case(reduced, k, s).decomposition;
      with_greedy = true;
      cert.method = EmbedMethod::kLargeCase;
    } else if (s >= k && reduced_edges <= threshold) {
      auto small = embed_small_case(reduced, k, s, config.independence_budget);
      if (auto* c = std::get_if<CaseConstruction>(&small)) {
        found = std::move(c->decomposition);
        with_greedy = true;
        cert.method = EmbedMethod::kSmallCase;
      }
    }

    if (!found) {
      SearchTranscript t = exhaustive_gamma_search(join(L, s), k, config.gamma_budget);
      if (t.outcome == SearchOutcome::kFound) {
        found = std::move(t.decomposition);
        cert.method = EmbedMethod::kGammaSearch;
      } else if (t.outcome == SearchOutcome::kExhausted) {
        cert.rejections.push_back(
            {s, RejectionReason::kExhaustedNonexistence, {}, {}, {}, t.nodes_explored});
        continue;
      } else {
        cert.rejections.push_back({s, RejectionReason::kUnknownSkipped, {}, {}, {}, t.nodes_explored});
        cert.minimality = Minimality::kConditional;
        continue;
      }
    }

    cert.s = s;
    if (with_greedy) {
      cert.greedy_stars = static_cast<int>(greedy.stars.stars.size());
      cert.decomposition = greedy.stars;
      for (Star& star : found->stars) cert.decomposition.stars.push_back(std::move(star));
    } else {
      cert.decomposition = std::move(*found);
    }
    cert.decomposition.k = k;
    if (auto v = validate_decomposition(join(L, s), cert.decomposition)) {
      throw std::logic_error("embedding failed validation: " + v->message);
    }
    return cert;
  }
  throw std::runtime_error("no embedding found for s <= " + std::to_string(max_s));
}

BoundReport bound_report(int n, int k) {
  if (n < 1 || k < 2) throw InvalidInput("bound_report needs n >= 1 and k >= 2");
  BoundReport r;
  r.k = k;
  r.n = n;
  const std::int64_t kk = k;
  const std::int64_t nn = n;
  const Rational outer = Rational(kk - nn) + Rational(1, 2);
  const Rational tail = Rational(kk * kk - 3 * kk) + Rational(1, 4);
  if (k >= 3) {
    r.s_lower_bound_general = NestedRadical(outer, Surd(Rational(nn * nn + 2 * kk) + tail, Rational(-2 * nn), 2 * kk));
    if (n > k && n <= 2 * k) {
      r.s_lower_bound_clique = NestedRadical(
          outer, Surd(Rational(4 * kk * (nn - kk) + 2 * kk) + tail, Rational(-4 * kk), 2 * (nn - kk)));
    }
  }
  r.n_threshold = n_threshold(k);
  r.theorem_cap = theorem_cap(k);
  r.statement1_cap = statement1_cap(k);
  return r;
}

}  // namespace stardec
