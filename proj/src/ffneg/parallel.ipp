/**
 * Copyright The ffneg Authors. All Rights Reserved.
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include <algorithm>
#include <atomic>
#include <thread>

namespace ffneg {

  template <typename Fn>
  void parallel_for(std::size_t count, int workers, Fn &&fn) {
    const std::size_t threads = std::min<std::size_t>(count, static_cast<std::size_t>(std::max(1, workers)));
    std::vector<std::exception_ptr> errors(count);
    if (threads <= 1) {
      for (std::size_t i = 0; i < count; ++i) {
        try {
          fn(i);
        } catch (...) {
          errors[i] = std::current_exception();
          break;
        }
      }
    } else {
      std::atomic<std::size_t> next{0};
      std::vector<std::thread> pool;
      pool.reserve(threads);
      for (std::size_t w = 0; w < threads; ++w) {
        pool.emplace_back([&] {
          for (std::size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) {
            try {
              fn(i);
            } catch (...) {
              errors[i] = std::current_exception();
            }
          }
        });
      }
      for (auto &t : pool) {
        t.join();
      }
    }
    for (const auto &e : errors) {
      if (e) {
        std::rethrow_exception(e);
      }
    }
  }

}  // namespace ffneg
