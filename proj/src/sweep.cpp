#include "stardec/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <exception>
#include <mutex>
#include <thread>

#include "stardec/error.hpp"
#include "stardec/oracle.hpp"

namespace stardec {

SweepRow sweep_cell(int k, int n, std::uint64_t seed, const EmbedConfig& embed_config, bool timing) {
  const auto start = std::chrono::steady_clock::now();
  const MaximalPartial partial = sample_maximal_partial(n, k, seed);
  const EmbeddingCertificate cert = embed(partial.leave, k, embed_config);

  SweepRow row;
  row.k = k;
  row.n = n;
  row.seed = seed;
  row.s = cert.s;
  const Surd cap = theorem_cap(k);
  row.cap = cap.to_double();
  row.within_cap = Surd(cert.s) < cap;
  row.statement1_applies = Surd(n) > n_threshold(k);
  row.within_statement1 = !row.statement1_applies || cert.s <= statement1_cap(k);
  row.guaranteed_s = guaranteed_s(n, k).s;
  row.method = cert.method;
  row.minimality = cert.minimality;
  if (timing) {
    row.runtime_ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start)
                         .count();
  }
  return row;
}

std::vector<SweepRow> run_sweep(const SweepConfig& config) {
  if (config.seeds < 0) throw InvalidInput("sweep: negative seed count");
  struct Cell {
    int k;
    int n;
    std::uint64_t seed;
  };
  std::vector<Cell> cells;
  std::vector<int> ks = config.ks;
  std::sort(ks.begin(), ks.end());
  ks.erase(std::unique(ks.begin(), ks.end()), ks.end());
  for (int k : ks) {
    if (k < 2) throw InvalidInput("sweep: k must be >= 2");
    for (int n = std::max(config.n_lo < 0 ? k + 1 : config.n_lo, 1); n <= config.n_hi; ++n)
      for (int i = 0; i < config.seeds; ++i) cells.push_back({k, n, config.seed_base + static_cast<std::uint64_t>(i)});
  }

  std::vector<SweepRow> rows(cells.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t i = next++; i < cells.size(); i = next++) {
      try {
        rows[i] = sweep_cell(cells[i].k, cells[i].n, cells[i].seed, config.embed, config.timing);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = cells.size();
      }
    }
  };
  unsigned threads = config.threads ? config.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(cells.size(), 1)));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
  return rows;
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
  std::string out = std::string(kSweepCsvVersion) + "\n";
  out += "k,n,seed,s,cap,within_cap,statement1_applies,within_statement1,guaranteed_s,method,minimality,runtime_ms\n";
  char cap[32];
  for (const SweepRow& r : rows) {
    std::snprintf(cap, sizeof cap, "%.6f", r.cap);
    out += std::to_string(r.k) + "," + std::to_string(r.n) + "," + std::to_string(r.seed) + "," +
           std::to_string(r.s) + "," + cap + "," + (r.within_cap ? "1" : "0") + "," +
           (r.statement1_applies ? "1" : "0") + "," + (r.within_statement1 ? "1" : "0") + "," +
           std::to_string(r.guaranteed_s) + "," + std::string(to_string(r.method)) + "," +
           std::string(to_string(r.minimality)) + "," + std::to_string(r.runtime_ms) + "\n";
  }
  return out;
}

}  // namespace stardec
