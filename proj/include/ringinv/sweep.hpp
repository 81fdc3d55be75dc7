#pragma once

// Data-parallel sweeps over index ranges. Every sweep exists in two modes:
// a serial reference loop and an OpenMP-parallel twin. The parallel mode
// collects failures per thread and merges them in ascending index order, so
// both modes produce identical results; the test suite and the benchmark
// target rely on that. Predicates must be safe to call concurrently on
// distinct indices.

#include <algorithm>
#include <cstdint>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace ringinv::sweep {

struct SweepResult {
  std::uint64_t checked = 0;
  std::uint64_t failed = 0;                // total failures, never truncated
  std::vector<std::uint64_t> failures;     // ascending, at most max_keep entries
};

inline constexpr std::uint64_t kDefaultMaxKeep = 8;

// fn(i) -> true when instance i passes.
template <class Fn>
SweepResult run_serial(std::uint64_t n, std::uint64_t max_keep, Fn&& fn) {
  SweepResult res;
  res.checked = n;
  for (std::uint64_t i = 0; i < n; ++i) {
    if (!fn(i)) {
      ++res.failed;
      if (res.failures.size() < max_keep) res.failures.push_back(i);
    }
  }
  return res;
}

template <class Fn>
SweepResult run_parallel(std::uint64_t n, std::uint64_t max_keep, Fn&& fn) {
#ifdef _OPENMP
  SweepResult res;
  res.checked = n;
  std::vector<std::vector<std::uint64_t>> per(static_cast<std::size_t>(omp_get_max_threads()));
  std::uint64_t total = 0;
#pragma omp parallel reduction(+ : total)
  {
    auto& mine = per[static_cast<std::size_t>(omp_get_thread_num())];
#pragma omp for schedule(dynamic, 64)
    for (long long i = 0; i < static_cast<long long>(n); ++i) {
      if (!fn(static_cast<std::uint64_t>(i))) {
        ++total;
        mine.push_back(static_cast<std::uint64_t>(i));
      }
    }
  }
  res.failed = total;
  for (auto& v : per) res.failures.insert(res.failures.end(), v.begin(), v.end());
  std::sort(res.failures.begin(), res.failures.end());
  if (res.failures.size() > max_keep) res.failures.resize(max_keep);
  return res;
#else
  return run_serial(n, max_keep, std::forward<Fn>(fn));
#endif
}

template <class Fn>
SweepResult run(std::uint64_t n, bool parallel, std::uint64_t max_keep, Fn&& fn) {
  return parallel ? run_parallel(n, max_keep, std::forward<Fn>(fn))
                  : run_serial(n, max_keep, std::forward<Fn>(fn));
}

}  // namespace ringinv::sweep
