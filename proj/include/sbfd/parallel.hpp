// SPDX-License-Identifier: Apache-2.0

#ifndef SBFD_PARALLEL_HPP
#define SBFD_PARALLEL_HPP

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace sbfd
{

//
// Runs body(i) for i in [0, count) on up to `threads` threads, each index exactly once.
// The first exception thrown by any body is rethrown after all workers finish.
//
template <class Body>
void parallel_for(int count, int threads, Body &&body)
{
  const int workers = std::clamp(threads, 1, std::max(count, 1));
  if (workers == 1)
  {
    for (int i = 0; i < count; ++i)
      body(i);
    return;
  }
  std::atomic<int> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto work = [&]() {
    for (int i = next++; i < count; i = next++)
    {
      try
      {
        body(i);
      }
      catch (...)
      {
        std::lock_guard lock(failure_mutex);
        if (!failure)
          failure = std::current_exception();
      }
    }
  };
  {
    std::vector<std::jthread> pool;
    for (int t = 0; t < workers; ++t)
      pool.emplace_back(work);
  }
  if (failure)
    std::rethrow_exception(failure);
}

}  // namespace sbfd

#endif  // SBFD_PARALLEL_HPP
