#include "tourney/parallel.hpp"

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace tourney {

std::size_t worker_count() {
  std::size_t n = std::max(1U, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("TOURNEY_CODES_THREADS")) {
    try {
      const long cap = std::stol(env);
      if (cap >= 1) n = std::min(n, static_cast<std::size_t>(cap));
    } catch (const std::exception&) {
      // unparsable cap: keep the hardware default
    }
  }
  return n;
}

void parallel_chunks(std::size_t count,
                     const std::function<void(std::size_t, std::size_t, std::size_t)>& body) {
  const std::size_t workers = std::min(worker_count(), std::max<std::size_t>(count, 1));
  if (workers <= 1) {
    body(0, 0, count);
    return;
  }
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::jthread> threads;
  const std::size_t step = (count + workers - 1) / workers;
  for (std::size_t w = 0; w < workers; ++w) {
    const std::size_t begin = std::min(count, w * step);
    const std::size_t end = std::min(count, begin + step);
    threads.emplace_back([&, w, begin, end] {
      try {
        body(w, begin, end);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    });
  }
  threads.clear();
  if (failure) std::rethrow_exception(failure);
}

}  // namespace tourney
