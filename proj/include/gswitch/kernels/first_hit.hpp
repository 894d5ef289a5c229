#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <optional>

#include <omp.h>

namespace gswitch::kernels {

/// Thread count for the parallel kernels; 0 means the OpenMP default.
struct Parallelism {
  int jobs = 0;

  int threads() const { return jobs > 0 ? jobs : omp_get_max_threads(); }
  bool serial() const { return threads() <= 1; }
};

/// Smallest i in [0, count) with worker(i) true.
///
/// `make_worker` is called once per thread and returns a callable
/// bool(std::uint64_t); workers may hold per-thread scratch state.
/// This is the reference the parallel version is tested against.
template <typename MakeWorker>
std::optional<std::uint64_t> first_hit_serial(std::uint64_t count,
                                              MakeWorker&& make_worker) {
  auto worker = make_worker();
  for (std::uint64_t i = 0; i < count; ++i) {
    if (worker(i)) return i;
  }
  return std::nullopt;
}

/// Same result as first_hit_serial for any thread count. Indices are handed
/// out in blocks; a thread abandons a block once a smaller hit is known.
template <typename MakeWorker>
std::optional<std::uint64_t> first_hit_parallel(std::uint64_t count,
                                                MakeWorker&& make_worker,
                                                Parallelism par = {},
                                                std::uint64_t block = 256) {
  if (par.serial() || count <= block) {
    return first_hit_serial(count, make_worker);
  }
  std::atomic<std::uint64_t> best{count};
  const std::int64_t blocks = static_cast<std::int64_t>((count + block - 1) / block);

#pragma omp parallel num_threads(par.threads())
  {
    auto worker = make_worker();
#pragma omp for schedule(dynamic, 1)
    for (std::int64_t b = 0; b < blocks; ++b) {
      std::uint64_t begin = static_cast<std::uint64_t>(b) * block;
      if (begin >= best.load(std::memory_order_relaxed)) continue;
      std::uint64_t end = std::min(count, begin + block);
      for (std::uint64_t i = begin; i < end; ++i) {
        if (i >= best.load(std::memory_order_relaxed)) break;
        if (worker(i)) {
          std::uint64_t cur = best.load(std::memory_order_relaxed);
          while (i < cur && !best.compare_exchange_weak(cur, i)) {
          }
          break;
        }
      }
    }
  }
  std::uint64_t hit = best.load();
  if (hit == count) return std::nullopt;
  return hit;
}

template <typename MakeWorker>
std::optional<std::uint64_t> first_hit(std::uint64_t count,
                                       MakeWorker&& make_worker,
                                       Parallelism par = {}) {
  return first_hit_parallel(count, std::forward<MakeWorker>(make_worker), par);
}

}  // namespace gswitch::kernels
