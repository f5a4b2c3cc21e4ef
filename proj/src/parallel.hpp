#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace saxl::detail {

// Runs fn(worker, item) for items [0, count) on `jobs` threads, pulling items
// from a shared counter. The first exception is rethrown after joining.
template <class MakeWorker, class Fn>
void parallel_for(std::size_t count, unsigned jobs, MakeWorker make_worker,
                  Fn fn) {
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto body = [&] {
    try {
      auto worker = make_worker();
      for (std::size_t i = next++; i < count; i = next++) fn(worker, i);
    } catch (...) {
      std::lock_guard lock(error_mutex);
      if (!error) error = std::current_exception();
      next = count;
    }
  };
  if (jobs == 1) {
    body();
  } else {
    std::vector<std::jthread> threads;
    threads.reserve(jobs);
    for (unsigned t = 0; t < jobs; ++t) threads.emplace_back(body);
  }
  if (error) std::rethrow_exception(error);
}

}  // namespace saxl::detail
