#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "crossbeam/value.hpp"

namespace crossbeam {

// A solution program as an explicit expression tree, detached from any
// ValueSet. Used for task generation output, re-execution checks, and
// trace extraction. There is deliberately no parser: trees are built
// programmatically or read from their JSON form.
struct ProgramNode {
  enum class Kind { Op, Const, Input };
  Kind kind = Kind::Const;
  int op = -1;                 // Kind::Op
  std::string name;            // op/atom display name
  Scalar const_value;          // Kind::Const
  std::vector<ProgramNode> children;

  int tree_size() const {
    int n = 1;
    for (const auto& c : children) n += c.tree_size();
    return n;
  }

  std::string text() const {
    if (kind != Kind::Op) return name;
    std::string out = name;
    out.push_back('(');
    for (size_t i = 0; i < children.size(); ++i) {
      if (i) out.append(", ");
      out.append(children[i].text());
    }
    out.push_back(')');
    return out;
  }
};

// Rebuilds the expression tree for the value at `pos` from its provenance.
inline ProgramNode program_of(const ValueSet& pool, int pos,
                              const std::vector<Operation>& ops) {
  const Value& v = pool[pos];
  ProgramNode n;
  if (v.atomic()) {
    n.kind = v.is_input ? ProgramNode::Kind::Input : ProgramNode::Kind::Const;
    n.name = v.atom_name;
    if (!v.is_input) n.const_value = v.results.empty() ? Scalar{std::string{}} : v.results[0];
    return n;
  }
  n.kind = ProgramNode::Kind::Op;
  n.op = v.op;
  n.name = ops[v.op].name;
  for (int a : v.args) n.children.push_back(program_of(pool, a, ops));
  return n;
}

// Executes a tree against a task by applying operations per the printed
// structure (the parser-free rebuild). Returns nullopt when any node faults.
inline std::optional<std::vector<Scalar>> execute_program(
    const ProgramNode& node, const Task& task, const std::vector<Operation>& ops) {
  int n = task.n_examples;
  switch (node.kind) {
    case ProgramNode::Kind::Const:
      return std::vector<Scalar>(n, node.const_value);
    case ProgramNode::Kind::Input: {
      for (size_t i = 0; i < task.input_names.size(); ++i)
        if (task.input_names[i] == node.name) return task.inputs[i];
      return std::nullopt;
    }
    case ProgramNode::Kind::Op: {
      std::vector<std::vector<Scalar>> arg_results;
      arg_results.reserve(node.children.size());
      for (const auto& c : node.children) {
        auto r = execute_program(c, task, ops);
        if (!r) return std::nullopt;
        arg_results.push_back(std::move(*r));
      }
      const Operation& op = ops[node.op];
      if ((int)arg_results.size() != op.arity) return std::nullopt;
      std::vector<Scalar> out;
      out.reserve(n);
      const Scalar* cur[8];
      for (int ex = 0; ex < n; ++ex) {
        for (int i = 0; i < op.arity; ++i) cur[i] = &arg_results[i][ex];
        auto r = op.fn(cur);
        if (!r) return std::nullopt;
        if (type_of(*r) == Ty::Str && std::get<std::string>(*r).size() > kMaxStringLen)
          return std::nullopt;
        out.push_back(std::move(*r));
      }
      return out;
    }
  }
  return std::nullopt;
}

inline bool program_solves(const ProgramNode& node, const Task& task,
                           const std::vector<Operation>& ops) {
  auto r = execute_program(node, task, ops);
  return r && signature_of(*r) == signature_of(task.outputs);
}

}  // namespace crossbeam
