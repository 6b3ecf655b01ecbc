#pragma once

#include <algorithm>
#include <cstdint>
#include <thread>
#include <vector>

namespace acyclic::detail {

// Counts the values in [0, total) accepted by a predicate. `make_predicate`
// is called once per worker so each worker owns its scratch space; the
// per-worker counts are summed, so the result does not depend on the split.
template <class PredicateFactory>
std::uint64_t parallel_count(std::uint64_t total, PredicateFactory make_predicate) {
  constexpr std::uint64_t kMinChunk = std::uint64_t{1} << 14;
  const std::uint64_t hw = std::max(1u, std::thread::hardware_concurrency());
  const std::uint64_t workers = std::clamp<std::uint64_t>(total / kMinChunk, 1, hw);

  auto run = [&](std::uint64_t begin, std::uint64_t end) {
    auto accept = make_predicate();
    std::uint64_t n = 0;
    for (std::uint64_t v = begin; v < end; ++v) n += accept(v) ? 1 : 0;
    return n;
  };

  if (workers == 1) return run(0, total);

  std::vector<std::uint64_t> counts(workers, 0);
  std::vector<std::jthread> threads;
  threads.reserve(workers);
  for (std::uint64_t w = 0; w < workers; ++w) {
    const std::uint64_t begin = total * w / workers;
    const std::uint64_t end = total * (w + 1) / workers;
    threads.emplace_back([&, w, begin, end] { counts[w] = run(begin, end); });
  }
  threads.clear();
  std::uint64_t sum = 0;
  for (auto c : counts) sum += c;
  return sum;
}

}  // namespace acyclic::detail
