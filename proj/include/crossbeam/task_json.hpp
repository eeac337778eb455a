#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "crossbeam/logic_dsl.hpp"
#include "crossbeam/program.hpp"
#include "crossbeam/task.hpp"

namespace crossbeam {

using json = nlohmann::json;

inline Scalar scalar_from_json(const json& j) {
  if (j.is_string()) return Scalar{j.get<std::string>()};
  if (j.is_number_integer()) return Scalar{j.get<int64_t>()};
  if (j.is_boolean()) return Scalar{j.get<bool>()};
  throw std::invalid_argument("task value must be a string, integer, or boolean");
}

inline json scalar_to_json(const Scalar& s) {
  switch (type_of(s)) {
    case Ty::Str: return json(std::get<std::string>(s));
    case Ty::Int: return json(std::get<int64_t>(s));
    case Ty::Bool: return json(std::get<bool>(s));
    case Ty::Pred: throw std::invalid_argument("raw predicates are not serialized directly");
  }
  return json();
}

// {"name", "dsl": "string", "inputs": {var: [...]}, "output": [...]}
// {"name", "dsl": "logic", "arity", "universe", "positive_tuples": [[..],..]}
inline Task task_from_json(const json& j) {
  if (!j.contains("dsl")) throw std::invalid_argument("task: missing \"dsl\" field");
  std::string dsl = j.at("dsl").get<std::string>();
  if (dsl == "logic") {
    logic::TaskSpec spec;
    spec.name = j.value("name", "unnamed");
    spec.arity = j.at("arity").get<int>();
    spec.universe = j.value("universe", 10);
    for (const auto& t : j.at("positive_tuples")) {
      std::vector<int> tuple;
      for (const auto& e : t) tuple.push_back(e.get<int>());
      spec.positive_tuples.push_back(std::move(tuple));
    }
    return logic::load_task(spec);
  }
  if (dsl != "string") throw std::invalid_argument("task: unknown dsl '" + dsl + "'");

  Task task;
  task.name = j.value("name", "unnamed");
  task.dsl = "string";
  const auto& out = j.at("output");
  task.n_examples = (int)out.size();
  for (const auto& v : out) task.outputs.push_back(scalar_from_json(v));
  if (j.contains("inputs")) {
    for (auto it = j.at("inputs").begin(); it != j.at("inputs").end(); ++it) {
      std::vector<Scalar> column;
      for (const auto& v : it.value()) column.push_back(scalar_from_json(v));
      task.add_input(it.key(), std::move(column));
    }
  }
  task.validate();
  return task;
}

inline json task_to_json(const Task& task) {
  json j;
  j["name"] = task.name;
  j["dsl"] = task.dsl;
  if (task.dsl == "logic") {
    const Pred& p = std::get<Pred>(task.outputs[0]);
    j["arity"] = p.arity;
    j["universe"] = p.universe;
    json tuples = json::array();
    if (p.arity == 1) {
      for (int x = 0; x < p.universe; ++x)
        if (p.at(x)) tuples.push_back(json::array({x}));
    } else {
      for (int x = 0; x < p.universe; ++x)
        for (int y = 0; y < p.universe; ++y)
          if (p.at(x, y)) tuples.push_back(json::array({x, y}));
    }
    j["positive_tuples"] = std::move(tuples);
    return j;
  }
  json inputs = json::object();
  for (size_t i = 0; i < task.input_names.size(); ++i) {
    json column = json::array();
    for (const auto& v : task.inputs[i]) column.push_back(scalar_to_json(v));
    inputs[task.input_names[i]] = std::move(column);
  }
  j["inputs"] = std::move(inputs);
  json output = json::array();
  for (const auto& v : task.outputs) output.push_back(scalar_to_json(v));
  j["output"] = std::move(output);
  return j;
}

// Solution trees ride along with generated tasks so training never needs an
// expression parser. {"op", "args"} | {"input"} | {"lit"} | {"prim"}.
inline json program_to_json(const ProgramNode& n) {
  json j;
  switch (n.kind) {
    case ProgramNode::Kind::Input: j["input"] = n.name; break;
    case ProgramNode::Kind::Const:
      if (type_of(n.const_value) == Ty::Pred)
        j["prim"] = n.name;
      else
        j["lit"] = scalar_to_json(n.const_value);
      break;
    case ProgramNode::Kind::Op: {
      j["op"] = n.name;
      json args = json::array();
      for (const auto& c : n.children) args.push_back(program_to_json(c));
      j["args"] = std::move(args);
      break;
    }
  }
  return j;
}

inline ProgramNode program_from_json(const json& j, const std::vector<Operation>& ops,
                                     const std::vector<AtomDef>& constants) {
  ProgramNode n;
  if (j.contains("input")) {
    n.kind = ProgramNode::Kind::Input;
    n.name = j.at("input").get<std::string>();
    return n;
  }
  if (j.contains("lit")) {
    n.kind = ProgramNode::Kind::Const;
    n.const_value = scalar_from_json(j.at("lit"));
    n.name = scalar_literal(n.const_value);
    return n;
  }
  if (j.contains("prim")) {
    n.kind = ProgramNode::Kind::Const;
    n.name = j.at("prim").get<std::string>();
    for (const auto& c : constants)
      if (c.name == n.name) {
        n.const_value = c.value;
        return n;
      }
    throw std::invalid_argument("unknown primitive '" + n.name + "'");
  }
  n.kind = ProgramNode::Kind::Op;
  n.name = j.at("op").get<std::string>();
  n.op = -1;
  for (size_t i = 0; i < ops.size(); ++i)
    if (ops[i].name == n.name) {
      n.op = (int)i;
      break;
    }
  if (n.op < 0) throw std::invalid_argument("unknown operation '" + n.name + "'");
  for (const auto& c : j.at("args")) n.children.push_back(program_from_json(c, ops, constants));
  if ((int)n.children.size() != ops[n.op].arity)
    throw std::invalid_argument("operation '" + n.name + "': wrong argument count");
  return n;
}

inline json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  json j;
  in >> j;
  return j;
}

inline void save_json_file(const std::string& path, const json& j, int indent = 2) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << j.dump(indent) << "\n";
}

}  // namespace crossbeam
