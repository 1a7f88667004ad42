#pragma once

#include <atomic>
#include <limits>
#include <optional>
#include <thread>
#include <vector>

namespace polysel::detail {

// Runs scan_block(i0) for i0 = 0..blocks-1 on a thread pool and returns the
// hit with the smallest i0. Blocks are the tuples sharing a leading index, so
// the merged result equals the serial lexicographic first hit.
template <typename R, typename BlockFn>
std::optional<R> parallel_first_hit(int blocks, BlockFn&& scan_block) {
  std::vector<std::optional<R>> found(blocks);
  std::atomic<int> next{0};
  std::atomic<int> best{std::numeric_limits<int>::max()};

  auto worker = [&] {
    for (;;) {
      const int i0 = next.fetch_add(1);
      if (i0 >= blocks) return;
      if (i0 > best.load()) continue;  // an earlier block already hit
      if (auto r = scan_block(i0)) {
        found[i0] = std::move(r);
        int cur = best.load();
        while (i0 < cur && !best.compare_exchange_weak(cur, i0)) {
        }
      }
    }
  };

  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  const unsigned nthreads = std::min<unsigned>(hw, static_cast<unsigned>(blocks));
  std::vector<std::thread> pool;
  pool.reserve(nthreads);
  for (unsigned t = 0; t < nthreads; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();

  for (int i0 = 0; i0 < blocks; ++i0)
    if (found[i0]) return found[i0];
  return std::nullopt;
}

}  // namespace polysel::detail
