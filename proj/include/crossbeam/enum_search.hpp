#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "crossbeam/program.hpp"
#include "crossbeam/value.hpp"

namespace crossbeam {

struct SearchResult {
  bool solved = false;
  std::string solution;       // prefix expression text, empty if unsolved
  ProgramNode solution_tree;  // valid iff solved
  int64_t candidates_used = 0;
  int64_t values_explored = 0;  // values stored beyond the initial atoms
  int64_t wall_ms = 0;
};

class StopWatch {
 public:
  StopWatch() : start_(std::chrono::steady_clock::now()) {}
  int64_t ms() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

namespace detail {

// Positions grouped by expression size, for size-targeted argument picking.
struct SizeBuckets {
  std::vector<std::vector<int>> by_size;  // by_size[s] = positions of size s

  void add(int pos, int size) {
    if ((int)by_size.size() <= size) by_size.resize(size + 1);
    by_size[size].push_back(pos);
  }
};

// Enumerates argument lists for `op` whose sizes sum to `size_budget`, in
// lexicographic (size_1, pos_1, size_2, pos_2, ...) order. The callback
// returns false to stop.
inline bool for_each_arglist(const Operation& op, const ValueSet& pool,
                             const SizeBuckets& buckets, int size_budget,
                             const std::function<bool(const std::vector<int>&)>& cb) {
  std::vector<int> args(op.arity);
  std::function<bool(int, int)> rec = [&](int k, int remaining) -> bool {
    int slots_after = op.arity - k - 1;
    int max_size = remaining - slots_after;  // later args need >= 1 each
    for (int s = 1; s <= max_size; ++s) {
      if (k == op.arity - 1 && s != remaining) continue;
      if (s >= (int)buckets.by_size.size()) break;
      for (int pos : buckets.by_size[s]) {
        if (pool[pos].type != op.arg_types[k]) continue;
        args[k] = pos;
        if (k == op.arity - 1) {
          if (!cb(args)) return false;
        } else {
          if (!rec(k + 1, remaining - s)) return false;
        }
      }
    }
    return true;
  };
  return rec(0, size_budget);
}

}  // namespace detail

// Bottom-up enumerative search in order of increasing program size. Every
// execution attempt counts as one candidate, including semantic duplicates
// and faulting programs, so budgets are comparable across methods. The
// initial pool (constants and inputs) is checked against the output before
// any enumeration; an identity solution costs zero candidates.
inline SearchResult enumerate_search(const Task& task, const std::vector<Operation>& ops,
                                     const std::vector<AtomDef>& constants, int64_t budget,
                                     int max_size, ValueSet* out_pool = nullptr) {
  StopWatch timer;
  SearchResult res;
  ValueSet pool = init_value_set(task, constants);
  const int n_atoms = pool.size();
  const std::string target = signature_of(task.outputs);

  detail::SizeBuckets buckets;
  for (int i = 0; i < pool.size(); ++i) buckets.add(i, 1);

  auto finish = [&](int solution_pos) {
    res.solved = true;
    res.solution = reconstruct_expression(pool, solution_pos, ops);
    res.solution_tree = program_of(pool, solution_pos, ops);
    res.values_explored = pool.size() - n_atoms;
    res.wall_ms = timer.ms();
    if (out_pool) *out_pool = std::move(pool);
  };

  for (int i = 0; i < pool.size(); ++i)
    if (signature_of(pool[i]) == target) {
      finish(i);
      return res;
    }

  bool out_of_budget = false;
  for (int size = 2; size <= max_size && !out_of_budget; ++size) {
    for (size_t op_id = 0; op_id < ops.size() && !out_of_budget; ++op_id) {
      const Operation& op = ops[op_id];
      if (op.arity > size - 1) continue;
      bool solved_now = false;
      detail::for_each_arglist(op, pool, buckets, size - 1, [&](const std::vector<int>& args) {
        if (res.candidates_used >= budget) {
          out_of_budget = true;
          return false;
        }
        ++res.candidates_used;
        auto v = execute(op, (int)op_id, args, pool, task.n_examples);
        if (!v) return true;
        std::string sig = signature_of(*v);
        auto [pos, was_new] = pool.insert(std::move(*v));
        if (was_new) buckets.add(pos, size);
        if (was_new && sig == target) {
          solved_now = true;
          return false;
        }
        return true;
      });
      if (solved_now) {
        finish(pool.size() - 1);
        return res;
      }
    }
  }

  res.values_explored = pool.size() - n_atoms;
  res.wall_ms = timer.ms();
  if (out_pool) *out_pool = std::move(pool);
  return res;
}

// Exhaustively collects every semantically distinct value buildable from the
// atoms with programs of at most `max_size` nodes. Deterministic. Throws if
// the pool would exceed `max_values`.
inline ValueSet exhaust_values(const Task& task, const std::vector<Operation>& ops,
                               const std::vector<AtomDef>& constants, int max_size,
                               int64_t max_values = 2'000'000,
                               int64_t max_candidates = -1) {
  ValueSet pool = init_value_set(task, constants);
  detail::SizeBuckets buckets;
  for (int i = 0; i < pool.size(); ++i) buckets.add(i, 1);

  int64_t candidates = 0;
  for (int size = 2; size <= max_size; ++size) {
    for (size_t op_id = 0; op_id < ops.size(); ++op_id) {
      const Operation& op = ops[op_id];
      if (op.arity > size - 1) continue;
      bool hit_cap = false;
      detail::for_each_arglist(op, pool, buckets, size - 1, [&](const std::vector<int>& args) {
        if (max_candidates >= 0 && candidates >= max_candidates) {
          hit_cap = true;
          return false;
        }
        ++candidates;
        auto v = execute(op, (int)op_id, args, pool, task.n_examples);
        if (!v) return true;
        auto [pos, was_new] = pool.insert(std::move(*v));
        if (was_new) {
          if (pool.size() > max_values)
            throw std::runtime_error("exhaust_values: value pool exceeds memory budget");
          buckets.add(pos, size);
        }
        return true;
      });
      if (hit_cap) return pool;
    }
  }
  return pool;
}

}  // namespace crossbeam
