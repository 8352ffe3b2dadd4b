#pragma once

// Cap-theorem sweeps: sample maximal leaves per (k, n, seed) cell, embed each,
// and compare the minimal s found against the theorem caps.

#include <cstdint>
#include <string>
#include <vector>

#include "stardec/embedder.hpp"

namespace stardec {

struct SweepConfig {
  std::vector<int> ks;
  // Per k the n range is [max(n_lo, 1), n_hi]; n_lo < 0 means k+1.
  int n_lo = -1;
  int n_hi = 30;
  int seeds = 20;
  std::uint64_t seed_base = 0;
  unsigned threads = 0;  // 0: hardware concurrency
  bool timing = false;   // runtime_ms stays 0 otherwise, keeping output reproducible
  EmbedConfig embed;
};

struct SweepRow {
  int k = 0;
  int n = 0;
  std::uint64_t seed = 0;
  int s = 0;
  double cap = 0;
  bool within_cap = false;
  bool statement1_applies = false;  // n above the threshold
  bool within_statement1 = true;    // vacuous unless statement1_applies
  int guaranteed_s = 0;
  EmbedMethod method = EmbedMethod::kTrivial;
  Minimality minimality = Minimality::kExact;
  std::int64_t runtime_ms = 0;

  bool ok() const { return within_cap && within_statement1; }
};

// Rows in (k, n, seed) order whatever the scheduling.
std::vector<SweepRow> run_sweep(const SweepConfig& config);

SweepRow sweep_cell(int k, int n, std::uint64_t seed, const EmbedConfig& embed, bool timing = false);

inline constexpr const char* kSweepCsvVersion = "# stardec-sweep v1";

std::string sweep_csv(const std::vector<SweepRow>& rows);

}  // namespace stardec
