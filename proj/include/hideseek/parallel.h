#ifndef HIDESEEK_PARALLEL_H_
#define HIDESEEK_PARALLEL_H_

#include <cstddef>
#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace hideseek {

// HIDESEEK_WORKERS if set to a positive integer, else the hardware thread
// count (at least 1).
int worker_count();

// Splits [0, count) into one contiguous chunk per worker and calls
// fn(chunk, begin, end) on each. The first exception thrown is rethrown.
template <typename Fn>
void parallel_chunks(std::uint64_t count, int workers, Fn&& fn) {
  if (workers < 1) workers = 1;
  if (count < static_cast<std::uint64_t>(workers)) workers = static_cast<int>(count == 0 ? 1 : count);
  if (workers == 1) {
    fn(0, std::uint64_t{0}, count);
    return;
  }
  std::vector<std::thread> threads;
  std::exception_ptr failure;
  std::mutex mu;
  const std::uint64_t per = count / static_cast<std::uint64_t>(workers);
  const std::uint64_t extra = count % static_cast<std::uint64_t>(workers);
  std::uint64_t begin = 0;
  for (int w = 0; w < workers; ++w) {
    std::uint64_t end = begin + per + (static_cast<std::uint64_t>(w) < extra ? 1 : 0);
    threads.emplace_back([&, w, begin, end] {
      try {
        fn(w, begin, end);
      } catch (...) {
        std::lock_guard<std::mutex> lock(mu);
        if (!failure) failure = std::current_exception();
      }
    });
    begin = end;
  }
  for (std::thread& t : threads) t.join();
  if (failure) std::rethrow_exception(failure);
}

}  // namespace hideseek

#endif  // HIDESEEK_PARALLEL_H_
