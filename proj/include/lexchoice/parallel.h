// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Deterministic partitioning of an index range across worker threads.
//
// Work is split into contiguous chunks, one per worker. Results never depend
// on the number of workers: parallel_for writes disjoint outputs, and
// first_hit returns the hit with the lowest index.

#ifndef LEXCHOICE_PARALLEL_H_
#define LEXCHOICE_PARALLEL_H_

#include <algorithm>
#include <cstddef>
#include <exception>
#include <optional>
#include <thread>
#include <utility>
#include <vector>

namespace lexchoice {

struct RunOptions {
  unsigned jobs = 1;
};

namespace internal {

inline std::vector<std::pair<std::size_t, std::size_t>> chunks(std::size_t count,
                                                              unsigned jobs) {
  std::size_t workers = std::max<std::size_t>(1, std::min<std::size_t>(jobs, count));
  std::vector<std::pair<std::size_t, std::size_t>> out;
  std::size_t begin = 0;
  for (std::size_t w = 0; w < workers; ++w) {
    std::size_t len = count / workers + (w < count % workers ? 1 : 0);
    out.emplace_back(begin, begin + len);
    begin += len;
  }
  return out;
}

template <typename Task>
void run_workers(std::size_t n_tasks, Task&& task) {
  if (n_tasks <= 1) {
    if (n_tasks == 1) task(0);
    return;
  }
  std::vector<std::exception_ptr> errors(n_tasks);
  std::vector<std::thread> threads;
  threads.reserve(n_tasks);
  for (std::size_t w = 0; w < n_tasks; ++w) {
    threads.emplace_back([&, w] {
      try {
        task(w);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : threads) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace internal

// Calls fn(i) for every i in [0, count).
template <typename Fn>
void parallel_for(std::size_t count, RunOptions opts, Fn&& fn) {
  auto parts = internal::chunks(count, opts.jobs);
  internal::run_workers(parts.size(), [&](std::size_t w) {
    for (std::size_t i = parts[w].first; i < parts[w].second; ++i) fn(i);
  });
}

// fn(i) returns std::optional<T>; yields the engaged result with the smallest i.
template <typename T, typename Fn>
std::optional<T> first_hit(std::size_t count, RunOptions opts, Fn&& fn) {
  auto parts = internal::chunks(count, opts.jobs);
  std::vector<std::optional<T>> found(parts.size());
  internal::run_workers(parts.size(), [&](std::size_t w) {
    for (std::size_t i = parts[w].first; i < parts[w].second; ++i) {
      if (auto hit = fn(i)) {
        found[w] = std::move(hit);
        return;
      }
    }
  });
  for (auto& f : found) {
    if (f) return std::move(f);
  }
  return std::nullopt;
}

}  // namespace lexchoice

#endif  // LEXCHOICE_PARALLEL_H_
