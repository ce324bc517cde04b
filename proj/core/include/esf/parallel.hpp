// Copyright 2026 the esfstl authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <atomic>
#include <condition_variable>
#include <cstdint>
#include <map>
#include <mutex>
#include <thread>
#include <vector>

namespace esf {

/// Threads to use when the caller passes 0.
unsigned default_thread_count();

/// Deterministic replicate scheduler.  Replicates [0, count) are split into
/// fixed-size batches; workers claim batches dynamically but each batch is
/// processed in replicate order, and finished batches are folded into the
/// running result strictly by batch index.  Because batch contents and the
/// fold order are independent of the thread count, the final accumulator is
/// bitwise identical for any number of workers.
///
/// Acc requirements: default-constructible is not needed; `make` builds an
/// empty accumulator, `process(acc, replicate_index)` adds one replicate,
/// `merge(into, from)` folds in batch order.  `stop(global)` may return true
/// to end the run early (checked between batch folds; used by rejection
/// targets).
template <typename Acc, typename Make, typename Process, typename Merge, typename Stop>
Acc run_batched(std::uint64_t count, unsigned threads, std::uint64_t batch_size, Make make,
                Process process, Merge merge, Stop stop) {
  if (threads == 0) threads = default_thread_count();
  if (batch_size == 0) batch_size = 4096;
  const std::uint64_t num_batches = count == 0 ? 0 : (count - 1) / batch_size + 1;

  Acc global = make();
  if (num_batches == 0) return global;

  std::atomic<std::uint64_t> next_batch{0};
  std::atomic<bool> done{false};
  std::mutex mutex;
  std::map<std::uint64_t, Acc> pending;
  std::uint64_t next_fold = 0;

  auto worker = [&]() {
    while (!done.load(std::memory_order_relaxed)) {
      const std::uint64_t b = next_batch.fetch_add(1, std::memory_order_relaxed);
      if (b >= num_batches) return;
      Acc acc = make();
      const std::uint64_t lo = b * batch_size;
      const std::uint64_t hi = std::min(count, lo + batch_size);
      for (std::uint64_t i = lo; i < hi && !done.load(std::memory_order_relaxed); ++i)
        process(acc, i);
      std::lock_guard lock(mutex);
      pending.emplace(b, std::move(acc));
      while (!pending.empty() && pending.begin()->first == next_fold) {
        if (!done.load(std::memory_order_relaxed)) {
          merge(global, std::move(pending.begin()->second));
          if (stop(global)) done.store(true, std::memory_order_relaxed);
        }
        pending.erase(pending.begin());
        ++next_fold;
      }
    }
  };

  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  return global;
}

template <typename Acc, typename Make, typename Process, typename Merge>
Acc run_batched(std::uint64_t count, unsigned threads, std::uint64_t batch_size, Make make,
                Process process, Merge merge) {
  return run_batched<Acc>(count, threads, batch_size, make, process, merge,
                          [](const Acc&) { return false; });
}

}  // namespace esf
