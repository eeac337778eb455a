#pragma once

#include <functional>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "crossbeam/common.hpp"
#include "crossbeam/task.hpp"

namespace crossbeam {

// An explored program: its per-example execution results plus how it was
// built. Atomic values (op < 0) are constants or input variables; applied
// values record the operation and the positions of their arguments in the
// owning ValueSet.
struct Value {
  Ty type = Ty::Str;
  std::vector<Scalar> results;  // one per example
  int size = 1;                 // expression-tree node count
  int op = -1;                  // index into the op list; -1 for atomic
  std::vector<int> args;        // positions into the owning ValueSet
  std::string atom_name;        // literal or variable name for atomics
  bool is_input = false;

  bool atomic() const { return op < 0; }
};

// Semantic signature: canonical serialization of (type, per-example results).
// Equal signatures <=> element-wise equal results of equal type.
inline std::string signature_of(const std::vector<Scalar>& results) {
  std::string sig;
  sig.reserve(results.size() * 16);
  for (const auto& r : results) encode_scalar(sig, r);
  return sig;
}

inline std::string signature_of(const Value& v) { return signature_of(v.results); }

// Insertion-ordered pool of semantically distinct values. First-seen
// provenance wins on duplicates.
class ValueSet {
 public:
  std::vector<Value> values;

  // Returns (position, was_new).
  std::pair<int, bool> insert(Value v) {
    std::string sig = signature_of(v);
    auto it = index_.find(sig);
    if (it != index_.end()) return {it->second, false};
    int pos = static_cast<int>(values.size());
    index_.emplace(std::move(sig), pos);
    values.push_back(std::move(v));
    return {pos, true};
  }

  int find(const std::string& sig) const {
    auto it = index_.find(sig);
    return it == index_.end() ? -1 : it->second;
  }

  int size() const { return static_cast<int>(values.size()); }
  const Value& operator[](int i) const { return values[i]; }

 private:
  std::unordered_map<std::string, int> index_;
};

struct Operation {
  std::string name;
  int arity = 0;
  std::vector<Ty> arg_types;
  Ty result_type = Ty::Str;
  // Per-example executor. Receives one scalar pointer per argument; returns
  // nullopt when the candidate faults on this example.
  std::function<std::optional<Scalar>(const Scalar* const*)> fn;
};

// Applies `op` example-wise to already-explored argument values. A fault on
// any single example discards the whole candidate: results must stay
// comparable across all examples for signatures to make sense.
inline std::optional<Value> execute(const Operation& op, int op_id,
                                    const std::vector<int>& arg_pos,
                                    const ValueSet& pool, int n_examples) {
  Value out;
  out.type = op.result_type;
  out.results.reserve(n_examples);
  out.op = op_id;
  out.args = arg_pos;
  out.size = 1;
  for (int a : arg_pos) out.size += pool[a].size;

  const Scalar* cur[8];
  for (int ex = 0; ex < n_examples; ++ex) {
    for (int i = 0; i < op.arity; ++i) cur[i] = &pool[arg_pos[i]].results[ex];
    auto r = op.fn(cur);
    if (!r) return std::nullopt;
    if (type_of(*r) != op.result_type) return std::nullopt;
    if (type_of(*r) == Ty::Str && std::get<std::string>(*r).size() > kMaxStringLen)
      return std::nullopt;
    out.results.push_back(std::move(*r));
  }
  return out;
}

// Fully parenthesized prefix expression text, recursively expanding the
// provenance of the value at `pos`.
inline std::string reconstruct_expression(const ValueSet& pool, int pos,
                                          const std::vector<Operation>& ops) {
  const Value& v = pool[pos];
  if (v.atomic()) return v.atom_name;
  std::string out = ops[v.op].name;
  out.push_back('(');
  for (size_t i = 0; i < v.args.size(); ++i) {
    if (i) out.append(", ");
    out.append(reconstruct_expression(pool, v.args[i], ops));
  }
  out.push_back(')');
  return out;
}

// Atomic pool entries: the DSL constants for a task plus its input variables.
struct AtomDef {
  std::string name;
  Scalar value;       // constants: replicated across examples
  bool is_input = false;
  int input_index = -1;
};

inline Value make_constant_value(const AtomDef& atom, int n_examples) {
  Value v;
  v.type = type_of(atom.value);
  v.results.assign(n_examples, atom.value);
  v.atom_name = atom.name;
  return v;
}

inline ValueSet init_value_set(const Task& task, const std::vector<AtomDef>& constants) {
  ValueSet pool;
  for (const auto& c : constants) pool.insert(make_constant_value(c, task.n_examples));
  for (size_t i = 0; i < task.input_names.size(); ++i) {
    Value v;
    v.type = task.inputs[i].empty() ? Ty::Str : type_of(task.inputs[i][0]);
    v.results = task.inputs[i];
    v.atom_name = task.input_names[i];
    v.is_input = true;
    pool.insert(std::move(v));
  }
  return pool;
}

}  // namespace crossbeam
