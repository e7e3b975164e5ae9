#pragma once

#include <algorithm>
#include <cstdint>
#include <exception>
#include <thread>
#include <vector>

namespace chromalg {

/// Splits [0, count) into `jobs` contiguous chunks, runs body(begin, end, acc)
/// on each with its own accumulator, then folds the partial results in chunk
/// order. With exact coefficient arithmetic the result does not depend on jobs.
template <class T, class Body>
T parallel_accumulate(std::uint64_t count, int jobs, const T& zero, Body&& body) {
  const std::uint64_t workers = std::clamp<std::uint64_t>(jobs < 1 ? 1 : static_cast<std::uint64_t>(jobs), 1,
                                                          std::max<std::uint64_t>(count, 1));
  if (workers == 1) {
    T acc = zero;
    body(std::uint64_t{0}, count, acc);
    return acc;
  }
  std::vector<T> partial(workers, zero);
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> threads;
  threads.reserve(workers);
  const std::uint64_t chunk = (count + workers - 1) / workers;
  for (std::uint64_t w = 0; w < workers; ++w) {
    const std::uint64_t begin = std::min(count, w * chunk);
    const std::uint64_t end = std::min(count, begin + chunk);
    threads.emplace_back([&, w, begin, end] {
      try {
        body(begin, end, partial[w]);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : threads) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  T acc = zero;
  for (auto& p : partial) acc += p;
  return acc;
}

/// Runs fn(i) for every i in [0, count) on up to `jobs` threads. fn must only
/// write to per-index state.
template <class Fn>
void parallel_for(std::uint64_t count, int jobs, Fn&& fn) {
  struct Unit {
    Unit& operator+=(const Unit&) { return *this; }
  };
  parallel_accumulate(count, jobs, Unit{}, [&](std::uint64_t begin, std::uint64_t end, Unit&) {
    for (std::uint64_t i = begin; i < end; ++i) fn(i);
  });
}

}  // namespace chromalg
