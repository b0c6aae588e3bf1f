/* Copyright 2026 The Tango Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <condition_variable>
#include <cstddef>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace tango {

// Fixed set of workers started once. run() hands every worker the same task
// (with its index) and returns after all of them finished: a barrier.
// Worker 0 is the calling thread.
class WorkerPool {
 public:
  explicit WorkerPool(unsigned workers);
  ~WorkerPool();

  WorkerPool(const WorkerPool&) = delete;
  WorkerPool& operator=(const WorkerPool&) = delete;

  unsigned size() const noexcept { return workers_; }

  // Rethrows the first exception raised by any worker.
  void run(const std::function<void(unsigned worker)>& task);

  // Static block split of [0, count) across workers.
  template <class Fn>
  void parallel_for(std::size_t count, Fn&& fn) {
    if (workers_ == 1 || count < 2 * workers_) {
      for (std::size_t i = 0; i < count; ++i) fn(i, 0u);
      return;
    }
    run([&](unsigned w) {
      const std::size_t begin = count * w / workers_;
      const std::size_t end = count * (w + 1) / workers_;
      for (std::size_t i = begin; i < end; ++i) fn(i, w);
    });
  }

 private:
  void loop(unsigned index);

  unsigned workers_;
  std::vector<std::thread> threads_;
  std::mutex mutex_;
  std::condition_variable wake_;
  std::condition_variable done_;
  const std::function<void(unsigned)>* task_ = nullptr;
  std::size_t generation_ = 0;
  unsigned pending_ = 0;
  bool stopping_ = false;
  std::exception_ptr error_;
};

}  // namespace tango
