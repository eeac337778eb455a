#pragma once

#include <optional>
#include <string>
#include <vector>

#include "crossbeam/task.hpp"
#include "crossbeam/value.hpp"

namespace crossbeam {
namespace logic {

// --- primitives ---------------------------------------------------------

inline Pred prim_zero(int u) {
  Pred p = Pred::falses(1, u);
  p.set(0);
  return p;
}

inline Pred prim_succ(int u) {
  Pred p = Pred::falses(2, u);
  for (int x = 0; x + 1 < u; ++x) p.set(x, x + 1);
  return p;
}

inline Pred prim_eq(int u) {
  Pred p = Pred::falses(2, u);
  for (int x = 0; x < u; ++x) p.set(x, x);
  return p;
}

inline std::vector<AtomDef> atoms(int universe) {
  if (universe < 2) throw std::invalid_argument("logic: universe must be >= 2");
  return {
      {"zero", Scalar{prim_zero(universe)}, false, -1},
      {"succ", Scalar{prim_succ(universe)}, false, -1},
      {"eq", Scalar{prim_eq(universe)}, false, -1},
  };
}

// --- implicit arity casts ------------------------------------------------
// Cast2->1: p(X) = q(X,X). Cast1->2: p(X,Y) = q(X) and q(Y). Applied at
// argument binding inside each operator; casts cost zero size, so the value
// pool never contains explicit cast nodes.

inline Pred coerce(const Pred& p, int target_arity) {
  if (p.arity == target_arity) return p;
  int u = p.universe;
  if (target_arity == 1) {
    Pred out = Pred::falses(1, u);
    for (int x = 0; x < u; ++x) out.set(x, p.at(x, x));
    return out;
  }
  Pred out = Pred::falses(2, u);
  for (int x = 0; x < u; ++x) {
    if (!p.at(x)) continue;
    for (int y = 0; y < u; ++y)
      if (p.at(y)) out.set(x, y);
  }
  return out;
}

// --- operators ------------------------------------------------------------

// Join(q, r)(X, Y) = exists Z: q(X, Z) and r(Z, Y).
inline Pred op_join(const Pred& q0, const Pred& r0) {
  Pred q = coerce(q0, 2), r = coerce(r0, 2);
  int u = q.universe;
  Pred out = Pred::falses(2, u);
  for (int x = 0; x < u; ++x)
    for (int z = 0; z < u; ++z) {
      if (!q.at(x, z)) continue;
      for (int y = 0; y < u; ++y)
        if (r.at(z, y)) out.set(x, y);
    }
  return out;
}

inline Pred op_transpose(const Pred& q0) {
  Pred q = coerce(q0, 2);
  int u = q.universe;
  Pred out = Pred::falses(2, u);
  for (int x = 0; x < u; ++x)
    for (int y = 0; y < u; ++y)
      if (q.at(y, x)) out.set(x, y);
  return out;
}

// Both arguments are coerced to the arity of the first one.
inline Pred op_disjunct(const Pred& q, const Pred& r0) {
  Pred r = coerce(r0, q.arity);
  Pred out = q;
  for (size_t i = 0; i < out.bits.size(); ++i) out.bits[i] |= r.bits[i];
  return out;
}

// Least fixpoint of the recursive schema, iterated to convergence. The map
// is monotone over a finite lattice, so at most `cells` strict growth steps
// happen before the fixpoint.
//   arity(b)=1: p(X)   = b(X)   or exists U,V: q(X,U) and r(U,V) and p(V)
//   arity(b)=2: p(X,Y) = b(X,Y) or exists U,V: q(X,U) and r(Y,V) and p(U,V)
inline Pred op_recurse(const Pred& b, const Pred& q0, const Pred& r0) {
  Pred q = coerce(q0, 2), r = coerce(r0, 2);
  int u = b.universe;
  Pred p = b;
  for (size_t iter = 0; iter <= p.cells(); ++iter) {
    Pred next = b;
    if (b.arity == 1) {
      for (int x = 0; x < u; ++x) {
        if (next.at(x)) continue;
        bool hit = false;
        for (int uu = 0; uu < u && !hit; ++uu) {
          if (!q.at(x, uu)) continue;
          for (int v = 0; v < u && !hit; ++v)
            if (r.at(uu, v) && p.at(v)) hit = true;
        }
        if (hit) next.set(x);
      }
    } else {
      for (int x = 0; x < u; ++x)
        for (int y = 0; y < u; ++y) {
          if (next.at(x, y)) continue;
          bool hit = false;
          for (int uu = 0; uu < u && !hit; ++uu) {
            if (!q.at(x, uu)) continue;
            for (int v = 0; v < u && !hit; ++v)
              if (r.at(y, v) && p.at(uu, v)) hit = true;
          }
          if (hit) next.set(x, y);
        }
    }
    if (next.bits == p.bits) break;
    p = std::move(next);
  }
  return p;
}

// --- operation registration ------------------------------------------------

inline std::vector<Operation> ops() {
  auto P = [](const Scalar* const* a, int i) -> const Pred& { return std::get<Pred>(*a[i]); };
  std::vector<Operation> out;
  out.push_back({"Join", 2, {Ty::Pred, Ty::Pred}, Ty::Pred,
                 [P](const Scalar* const* a) -> std::optional<Scalar> {
                   return Scalar{op_join(P(a, 0), P(a, 1))};
                 }});
  out.push_back({"Transpose", 1, {Ty::Pred}, Ty::Pred,
                 [P](const Scalar* const* a) -> std::optional<Scalar> {
                   return Scalar{op_transpose(P(a, 0))};
                 }});
  out.push_back({"Disjunct", 2, {Ty::Pred, Ty::Pred}, Ty::Pred,
                 [P](const Scalar* const* a) -> std::optional<Scalar> {
                   return Scalar{op_disjunct(P(a, 0), P(a, 1))};
                 }});
  out.push_back({"Recurse", 3, {Ty::Pred, Ty::Pred, Ty::Pred}, Ty::Pred,
                 [P](const Scalar* const* a) -> std::optional<Scalar> {
                   return Scalar{op_recurse(P(a, 0), P(a, 1), P(a, 2))};
                 }});
  return out;
}

// --- task loading -----------------------------------------------------------

struct TaskSpec {
  std::string name;
  int arity = 2;
  int universe = 10;
  std::vector<std::vector<int>> positive_tuples;
};

// A logic task has a single "example" whose output is the full truth table;
// every tuple not listed positive is negative.
inline Task load_task(const TaskSpec& spec) {
  if (spec.arity != 1 && spec.arity != 2)
    throw std::invalid_argument("logic task '" + spec.name + "': arity must be 1 or 2");
  if (spec.universe < 2)
    throw std::invalid_argument("logic task '" + spec.name + "': universe must be >= 2");
  Pred target = Pred::falses(spec.arity, spec.universe);
  for (const auto& t : spec.positive_tuples) {
    if ((int)t.size() != spec.arity)
      throw std::invalid_argument("logic task '" + spec.name + "': tuple arity mismatch");
    for (int e : t)
      if (e < 0 || e >= spec.universe)
        throw std::invalid_argument("logic task '" + spec.name + "': tuple entry out of range");
    bool already = spec.arity == 1 ? target.at(t[0]) : target.at(t[0], t[1]);
    if (already)
      throw std::invalid_argument("logic task '" + spec.name + "': duplicate tuple");
    if (spec.arity == 1)
      target.set(t[0]);
    else
      target.set(t[0], t[1]);
  }
  Task task;
  task.name = spec.name;
  task.dsl = "logic";
  task.n_examples = 1;
  task.outputs = {Scalar{std::move(target)}};
  task.logic_arity = spec.arity;
  task.logic_universe = spec.universe;
  task.validate();
  return task;
}

}  // namespace logic
}  // namespace crossbeam
