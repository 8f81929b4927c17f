#include "gitstab/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace gitstab {

namespace {

std::string row(i64 u, i64 v, const StabilityReport& rep) {
  return std::to_string(u) + "," + std::to_string(v) + "," + to_string(rep.margin) + "," + verdict_name(rep.verdict) +
         "\n";
}

}  // namespace

unsigned default_jobs() {
  if (const char* env = std::getenv("GITSTAB_JOBS")) {
    const long n = std::strtol(env, nullptr, 10);
    if (n > 0) return static_cast<unsigned>(n);
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

std::string sweep_csv(const WeightedFiltration& f, const LinearizationConfig& lin, i64 u_lo, i64 u_hi, i64 v_lo,
                      i64 v_hi, unsigned jobs) {
  if (u_hi < u_lo || v_hi < v_lo) throw Error("empty range");
  if (u_lo < 1 || v_lo < 1) throw Error("sweep range must start at 1 or later");
  const i64 nv = v_hi - v_lo + 1;
  const std::size_t total = static_cast<std::size_t>((u_hi - u_lo + 1) * nv);
  std::vector<std::string> rows(total);
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_lock;

  auto work = [&] {
    for (std::size_t idx = next++; idx < total; idx = next++) {
      const i64 u = u_lo + static_cast<i64>(idx) / nv;
      const i64 v = v_lo + static_cast<i64>(idx) % nv;
      try {
        rows[idx] = row(u, v, certify(f, lin, u, v));
      } catch (...) {
        std::lock_guard<std::mutex> hold(failure_lock);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  const unsigned n = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(total)));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < n; ++t) pool.emplace_back(work);
  work();
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);

  std::string out = "u,v,margin,verdict\n";
  for (const auto& r : rows) out += r;
  return out;
}

std::string thresholds_csv(const Thresholds& t) {
  std::string out = "u,v,margin,verdict\n";
  for (const auto& w : t.witnesses) out += row(w.u, w.v, w.report);
  return out;
}

}  // namespace gitstab
