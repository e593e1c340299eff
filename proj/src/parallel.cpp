#include "oat/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <thread>
#include <vector>

namespace oat {

namespace {
std::atomic<int> g_parallelism{1};
}

void set_parallelism(int n) { g_parallelism = std::max(1, n); }
int parallelism() { return g_parallelism; }

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn) {
  const int workers = std::min<std::size_t>(g_parallelism.load(), n);
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < n; i = next++) fn(i);
    });
  for (auto& t : pool) t.join();
}

}  // namespace oat
