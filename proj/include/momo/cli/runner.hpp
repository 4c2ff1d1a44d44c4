#pragma once

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

#include "momo/cli/config.hpp"
#include "momo/cli/csv.hpp"
#include "momo/cli/suites.hpp"
#include "momo/detail/parallel.hpp"

namespace momo::cli {

struct RunResult {
  ExperimentConfig config;  // params merged over the suite defaults
  std::vector<Row> rows;    // grid order
};

/// Runs tasks on up to `threads` workers; leftover budget goes to each task.
inline std::vector<Row> run_tasks(const std::vector<Task>& tasks, unsigned threads) {
  std::vector<std::vector<Row>> out(tasks.size());
  if (tasks.empty()) return {};
  threads = std::max(1u, threads);
  const unsigned workers = static_cast<unsigned>(std::min<std::size_t>(threads, tasks.size()));
  const Exec inner{std::max(1u, threads / workers)};
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mu;
  auto work = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      try {
        out[i] = tasks[i](inner);
      } catch (...) {
        std::lock_guard lock(error_mu);
        if (!error) error = std::current_exception();
        next = tasks.size();
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
  std::vector<Row> rows;
  for (auto& v : out) rows.insert(rows.end(), std::make_move_iterator(v.begin()), std::make_move_iterator(v.end()));
  return rows;
}

/// Validates the whole config before any computation starts.
inline RunResult run_config(const json& j, unsigned threads) {
  RunResult res;
  res.config = parse_config_envelope(j);
  const Suite& suite = find_suite(res.config.suite);
  res.config.params = merged_params(suite, res.config.params);
  ParamReader params(res.config.params, "/params");
  const auto tasks = suite.plan(params);
  res.rows = run_tasks(tasks, threads);
  return res;
}

}  // namespace momo::cli
