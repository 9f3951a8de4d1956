#include "qmatch/common.hpp"

#include <algorithm>
#include <cstdlib>
#include <thread>

namespace qmatch::detail {

namespace {

int worker_count() {
  if (const char* env = std::getenv("QMATCH_THREADS")) {
    int n = std::atoi(env);
    if (n >= 1) return n;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

}  // namespace

void parallel_for(int total, const std::function<void(int, int)>& fn, int min_grain) {
  if (total <= 0) return;
  int workers = std::min(worker_count(), (total + min_grain - 1) / min_grain);
  if (workers <= 1) {
    fn(0, total);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  int chunk = (total + workers - 1) / workers;
  for (int w = 0; w < workers; ++w) {
    int begin = w * chunk;
    int end = std::min(total, begin + chunk);
    if (begin >= end) break;
    pool.emplace_back([&fn, begin, end] { fn(begin, end); });
  }
  for (auto& t : pool) t.join();
}

}  // namespace qmatch::detail
