#ifndef SPOS_PARALLEL_HPP_
#define SPOS_PARALLEL_HPP_

#include <algorithm>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace spos {

  // Evaluates f(0), ..., f(count - 1) on `workers` threads, striding the
  // indices, and returns the results in index order. The first exception
  // thrown by any worker is rethrown after all workers have joined.
  template <typename F>
  auto parallel_map(std::size_t count, std::size_t workers, F&& f)
      -> std::vector<decltype(f(std::size_t(0)))> {
    using R = decltype(f(std::size_t(0)));
    std::vector<R> out(count);
    workers = std::max<std::size_t>(1, std::min(workers, count));
    if (workers == 1) {
      for (std::size_t i = 0; i < count; ++i) {
        out[i] = f(i);
      }
      return out;
    }
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread>        pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        try {
          for (std::size_t i = w; i < count; i += workers) {
            out[i] = f(i);
          }
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
    for (auto& t : pool) {
      t.join();
    }
    for (auto& e : errors) {
      if (e) {
        std::rethrow_exception(e);
      }
    }
    return out;
  }

}  // namespace spos

#endif  // SPOS_PARALLEL_HPP_
