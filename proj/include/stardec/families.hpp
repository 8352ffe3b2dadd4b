#pragma once

// Leaves of partial k-star decompositions that admit no small embedding, with
// machine-checkable claims about each.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "stardec/graph.hpp"
#include "stardec/io.hpp"

namespace stardec {

enum class FamilyId { kSingleEdge, kBoundN, kTightnessT2, kEvenBound, kOddBound };

std::string_view to_string(FamilyId id);
FamilyId family_id_from_string(std::string_view text);

enum class VerificationMethod {
  kArithmetic,
  kObstacle,
  kDegreePair,
  kExhaustive,
  kFlowConstruction,
  kProofReplay,
};

std::string_view to_string(VerificationMethod m);
VerificationMethod verification_method_from_string(std::string_view text);

struct Claim {
  std::string id;
  std::string statement;
  VerificationMethod method = VerificationMethod::kArithmetic;
  Json params = Json::object();
  // Informational claims are reported but never fail verification.
  bool asserted = true;
};

struct FamilyInstance {
  FamilyId family = FamilyId::kSingleEdge;
  int k = 0;
  int n = 0;
  Graph L;
  Json params = Json::object();  // t, m, r, ... as applicable
  std::vector<Claim> claims;
};

inline constexpr std::int64_t kDefaultFlowEdgeLimit = 5000;
inline constexpr std::int64_t kExhaustiveEdgeLimit = 24;

// One edge {0,1} plus n-2 isolated vertices. k odd >= 3, n = 2 mod 2k.
FamilyInstance gen_single_edge(int k, int n);
// (n/m) K_m with k = 2^t, m = sqrt(2k), n = km/4 - k. t odd >= 7.
FamilyInstance gen_bound_n(int t);
// K_sqrt(k) + (sqrt(k)/2 + 1) K_2 + isolated vertices, k = 2^t. t even >= 4,
// n = k+2 mod 2k, n >= 3k+2.
FamilyInstance gen_tightness_T2(int t, int n);
// (n/m) K_m, k = 2^t, m = sqrt(2k), n the least multiple of m above
// 2 sqrt(k(2k+1)) + m. t odd >= 3.
FamilyInstance gen_even_bound(int t);
// (m-1) K_m + K_r for k an odd prime power; n least with
// n > 7k/4 + sqrt(6k+6)/2 + 5/4 and 2n-2k = m^2; r = 2k-n+m.
FamilyInstance gen_odd_bound(int k);

bool is_odd_prime_power(int k);

enum class ClaimStatus { kVerified, kRefuted, kSkippedBudget };

std::string_view to_string(ClaimStatus s);
ClaimStatus claim_status_from_string(std::string_view text);

struct ClaimResult {
  std::string id;
  VerificationMethod method = VerificationMethod::kArithmetic;
  ClaimStatus status = ClaimStatus::kVerified;
  bool asserted = true;
  Json evidence = Json::object();
};

struct FamilyReport {
  FamilyId family = FamilyId::kSingleEdge;
  int k = 0;
  int n = 0;
  Json params = Json::object();
  std::vector<ClaimResult> claims;

  // No asserted claim refuted.
  bool ok() const;
  const ClaimResult* find(std::string_view id) const;
};

struct VerifyConfig {
  std::int64_t flow_edge_limit = kDefaultFlowEdgeLimit;
  std::uint64_t backtrack_budget = kDefaultBacktrackBudget;
};

FamilyReport verify_instance(const FamilyInstance& instance, const VerifyConfig& config = {});

Json to_json(const FamilyReport& r);
FamilyReport report_from_json(const Json& j);

struct OddBoundProbe {
  int k = 0;
  int n = 0;
  int m = 0;
  int r = 0;
  // Smallest value of the tightness test expression over the divisible s
  // below 4k-n; positive means every candidate fails the obstacle.
  std::optional<std::int64_t> min_test_value;
  bool all_hold = false;
};

// One probe per odd prime power k in [k_lo, k_hi] for which the generator
// succeeds.
std::vector<OddBoundProbe> scan_odd_bound(int k_lo, int k_hi);

}  // namespace stardec
