#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "crossbeam/common.hpp"

namespace crossbeam {

// An I/O specification: named example inputs and the target outputs, one
// entry per example. Input variables are kept in sorted name order so that
// featurization and initial-pool layout are deterministic.
struct Task {
  std::string name;
  std::string dsl;  // "string" or "logic"
  std::vector<std::string> input_names;
  std::vector<std::vector<Scalar>> inputs;  // aligned with input_names
  std::vector<Scalar> outputs;
  int n_examples = 0;

  // Logic tasks carry the original spec alongside the truth-table output.
  int logic_arity = 0;
  int logic_universe = 0;

  void add_input(const std::string& var, std::vector<Scalar> values) {
    auto it = std::lower_bound(input_names.begin(), input_names.end(), var);
    size_t pos = it - input_names.begin();
    input_names.insert(it, var);
    inputs.insert(inputs.begin() + pos, std::move(values));
  }

  void validate() const {
    if (n_examples < 1) throw std::invalid_argument("task '" + name + "': needs at least one example");
    if ((int)outputs.size() != n_examples)
      throw std::invalid_argument("task '" + name + "': output length != example count");
    for (size_t i = 0; i < inputs.size(); ++i)
      if ((int)inputs[i].size() != n_examples)
        throw std::invalid_argument("task '" + name + "': input '" + input_names[i] +
                                    "' length != example count");
  }
};

}  // namespace crossbeam
