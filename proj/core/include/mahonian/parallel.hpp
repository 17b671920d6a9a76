#pragma once

// Chunked data-parallel reductions over commutative monoids.

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <map>
#include <mutex>
#include <thread>
#include <utility>
#include <vector>

#include "mahonian/polyring.hpp"

namespace mahonian {

/// Worker count used when a caller does not pass one explicitly. Starts at 1.
unsigned default_jobs();
void set_default_jobs(unsigned jobs);

/// Runs run_task(i, acc) for every task index with one accumulator per
/// worker, then folds the worker accumulators together with merge(into, from).
/// The result does not depend on `jobs` as long as merge is commutative and
/// associative.
template <class Acc, class TaskFn, class MergeFn>
Acc parallel_reduce(std::size_t task_count, TaskFn&& run_task, MergeFn&& merge,
                    unsigned jobs = default_jobs()) {
  if (jobs <= 1 || task_count <= 1) {
    Acc acc{};
    for (std::size_t i = 0; i < task_count; ++i) {
      run_task(i, acc);
    }
    return acc;
  }
  const std::size_t workers = std::min<std::size_t>(jobs, task_count);
  std::vector<Acc> partial(workers);
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        try {
          for (std::size_t i = next++; i < task_count; i = next++) {
            run_task(i, partial[w]);
          }
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) {
            failure = std::current_exception();
          }
          next = task_count;
        }
      });
    }
  }
  if (failure) {
    std::rethrow_exception(failure);
  }
  Acc result = std::move(partial[0]);
  for (std::size_t w = 1; w < workers; ++w) {
    merge(result, std::move(partial[w]));
  }
  return result;
}

/// Multiset of monomials with machine-integer multiplicities; the cheap
/// accumulator for enumerations whose summands are single monomials.
class MonomialTally {
 public:
  void add(const Monomial& m, std::int64_t count = 1) { counts_[m] += count; }
  void merge(MonomialTally&& other) {
    for (auto& [m, c] : other.counts_) {
      counts_[m] += c;
    }
  }
  Poly to_poly() const {
    Poly out;
    for (const auto& [m, c] : counts_) {
      out.add_term(m, Integer(static_cast<long>(c)));
    }
    return out;
  }
  std::size_t distinct() const { return counts_.size(); }

 private:
  std::map<Monomial, std::int64_t> counts_;
};

}  // namespace mahonian
