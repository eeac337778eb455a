#include <gtest/gtest.h>

#include <algorithm>
#include <limits>
#include <random>
#include <set>

#include "crossbeam/program.hpp"
#include "crossbeam/string_dsl.hpp"

using namespace crossbeam;

namespace {

const std::vector<Operation>& ops() {
  static const std::vector<Operation> k = strings::ops();
  return k;
}

int op_id(const std::string& name) {
  for (size_t i = 0; i < ops().size(); ++i)
    if (ops()[i].name == name) return (int)i;
  ADD_FAILURE() << "no op named " << name;
  return -1;
}

ProgramNode op_node(const std::string& name, std::vector<ProgramNode> children) {
  ProgramNode n;
  n.kind = ProgramNode::Kind::Op;
  n.op = op_id(name);
  n.name = name;
  n.children = std::move(children);
  return n;
}

ProgramNode lit(Scalar s) {
  ProgramNode n;
  n.kind = ProgramNode::Kind::Const;
  n.name = scalar_literal(s);
  n.const_value = std::move(s);
  return n;
}

ProgramNode input(const std::string& name) {
  ProgramNode n;
  n.kind = ProgramNode::Kind::Input;
  n.name = name;
  return n;
}

std::optional<Scalar> run1(const std::string& name, std::vector<Scalar> args) {
  const Operation& op = ops()[op_id(name)];
  const Scalar* ptr[8];
  for (size_t i = 0; i < args.size(); ++i) ptr[i] = &args[i];
  return op.fn(ptr);
}

TEST(Registration, TwentyTwoOperations) { EXPECT_EQ(ops().size(), 22u); }

TEST(Registration, IntegerConstants) {
  EXPECT_EQ(strings::base_int_constants(), (std::vector<int64_t>{0, 1, 2, 3, 99}));
}

// Two-letter acronym program from the appendix walkthrough.
TEST(Semantics, AcronymProgram) {
  Task task;
  task.name = "acronym";
  task.dsl = "string";
  task.n_examples = 2;
  task.add_input("in0", {Scalar{std::string("product area")}, Scalar{std::string("Vice president")}});
  task.outputs = {Scalar{std::string("PA")}, Scalar{std::string("VP")}};

  ProgramNode prog = op_node(
      "UpperCase",
      {op_node("Concat",
               {op_node("Left", {input("in0"), lit(Scalar{int64_t{1}})}),
                op_node("Substr",
                        {input("in0"),
                         op_node("Add", {op_node("Find", {lit(Scalar{std::string(" ")}), input("in0")}),
                                         lit(Scalar{int64_t{1}})}),
                         lit(Scalar{int64_t{1}})})})});
  auto out = execute_program(prog, task, ops());
  ASSERT_TRUE(out.has_value());
  EXPECT_EQ(std::get<std::string>((*out)[0]), "PA");
  EXPECT_EQ(std::get<std::string>((*out)[1]), "VP");
}

TEST(Semantics, SubstrOfWholeStringIsIdentity) {
  std::mt19937_64 rng(19);
  const std::string alphabet = "abcXYZ 019.,";
  for (int trial = 0; trial < 200; ++trial) {
    size_t len = 1 + rng() % 12;
    std::string s;
    for (size_t i = 0; i < len; ++i) s.push_back(alphabet[rng() % alphabet.size()]);
    auto r = run1("Substr", {Scalar{s}, Scalar{int64_t{1}},
                             Scalar{(int64_t)s.size()}});
    ASSERT_TRUE(r.has_value());
    EXPECT_EQ(std::get<std::string>(*r), s);
  }
}

TEST(Semantics, FindIsOneBased) {
  auto r = run1("Find", {Scalar{std::string("b")}, Scalar{std::string("abc")}});
  ASSERT_TRUE(r.has_value());
  EXPECT_EQ(std::get<int64_t>(*r), 2);
  EXPECT_FALSE(run1("Find", {Scalar{std::string("z")}, Scalar{std::string("abc")}}).has_value());
  auto r3 = run1("Find3", {Scalar{std::string("a")}, Scalar{std::string("abca")}, Scalar{int64_t{2}}});
  ASSERT_TRUE(r3.has_value());
  EXPECT_EQ(std::get<int64_t>(*r3), 4);
}

TEST(Semantics, LeftRightClampButRejectNegative) {
  auto left = run1("Left", {Scalar{std::string("abc")}, Scalar{int64_t{99}}});
  ASSERT_TRUE(left.has_value());
  EXPECT_EQ(std::get<std::string>(*left), "abc");
  EXPECT_FALSE(run1("Left", {Scalar{std::string("abc")}, Scalar{int64_t{-1}}}).has_value());
  auto right = run1("Right", {Scalar{std::string("abc")}, Scalar{int64_t{2}}});
  EXPECT_EQ(std::get<std::string>(*right), "bc");
  EXPECT_FALSE(run1("Right", {Scalar{std::string("abc")}, Scalar{int64_t{-2}}}).has_value());
}

TEST(Semantics, RepeatLimits) {
  auto ok = run1("Repeat", {Scalar{std::string("ab")}, Scalar{int64_t{3}}});
  ASSERT_TRUE(ok.has_value());
  EXPECT_EQ(std::get<std::string>(*ok), "ababab");
  EXPECT_FALSE(run1("Repeat", {Scalar{std::string("ab")}, Scalar{int64_t{-1}}}).has_value());
  EXPECT_FALSE(run1("Repeat", {Scalar{std::string("ab")}, Scalar{int64_t{501}}}).has_value());
}

TEST(Semantics, SubstituteVariants) {
  auto all = run1("Substitute", {Scalar{std::string("a.b.c")}, Scalar{std::string(".")},
                                 Scalar{std::string("-")}});
  EXPECT_EQ(std::get<std::string>(*all), "a-b-c");
  auto second = run1("Substitute4", {Scalar{std::string("a.b.c")}, Scalar{std::string(".")},
                                     Scalar{std::string("-")}, Scalar{int64_t{2}}});
  EXPECT_EQ(std::get<std::string>(*second), "a.b-c");
  EXPECT_FALSE(run1("Substitute4", {Scalar{std::string("a")}, Scalar{std::string("a")},
                                    Scalar{std::string("b")}, Scalar{int64_t{0}}})
                   .has_value());
  auto missing = run1("Substitute4", {Scalar{std::string("abc")}, Scalar{std::string("z")},
                                      Scalar{std::string("-")}, Scalar{int64_t{1}}});
  EXPECT_EQ(std::get<std::string>(*missing), "abc");
}

TEST(Semantics, TrimAndCasing) {
  EXPECT_EQ(std::get<std::string>(*run1("Trim", {Scalar{std::string("  a  b ")}})), "a b");
  EXPECT_EQ(std::get<std::string>(*run1("ProperCase", {Scalar{std::string("viCE presIdent")}})),
            "Vice President");
  EXPECT_EQ(std::get<std::string>(*run1("ProperCase", {Scalar{std::string("a1b")}})), "A1B");
  EXPECT_EQ(std::get<std::string>(*run1("LowerCase", {Scalar{std::string("AbC")}})), "abc");
  EXPECT_EQ(std::get<std::string>(*run1("UpperCase", {Scalar{std::string("AbC")}})), "ABC");
}

TEST(Semantics, ArithmeticOverflowFaults) {
  EXPECT_FALSE(run1("Add", {Scalar{std::numeric_limits<int64_t>::max()}, Scalar{int64_t{1}}})
                   .has_value());
  EXPECT_FALSE(run1("Sub", {Scalar{std::numeric_limits<int64_t>::min()}, Scalar{int64_t{1}}})
                   .has_value());
  EXPECT_EQ(std::get<int64_t>(*run1("Add", {Scalar{int64_t{2}}, Scalar{int64_t{3}}})), 5);
}

// Executors are total over their declared argument types: anything that can
// go wrong must fault, never crash.
TEST(Semantics, ExecutorsNeverCrashOnRandomInputs) {
  std::mt19937_64 rng(101);
  const std::string alphabet = "ab .";
  auto random_scalar = [&](Ty t) -> Scalar {
    switch (t) {
      case Ty::Int:
        return Scalar{(int64_t)(rng() % 2001) - 1000};
      case Ty::Bool:
        return Scalar{rng() % 2 == 0};
      default: {
        std::string s;
        size_t len = rng() % 8;
        for (size_t i = 0; i < len; ++i) s.push_back(alphabet[rng() % alphabet.size()]);
        return Scalar{s};
      }
    }
  };
  for (int trial = 0; trial < 5000; ++trial) {
    const Operation& op = ops()[rng() % ops().size()];
    std::vector<Scalar> args;
    for (Ty t : op.arg_types) args.push_back(random_scalar(t));
    const Scalar* ptr[8];
    for (size_t i = 0; i < args.size(); ++i) ptr[i] = &args[i];
    auto r = op.fn(ptr);  // may fault, must not throw or crash
    if (r) EXPECT_EQ(type_of(*r), op.result_type);
  }
}

TEST(Constants, ExtractsOutputOnlySubstring) {
  Task task;
  task.dsl = "string";
  task.n_examples = 2;
  task.add_input("in0", {Scalar{std::string("jeff")}, Scalar{std::string("alex")}});
  task.outputs = {Scalar{std::string("jeff@x.com")}, Scalar{std::string("alex@x.com")}};
  auto consts = strings::extract_constants(task);
  EXPECT_NE(std::find(consts.begin(), consts.end(), "@x.com"), consts.end());
  // Maximality: the shorter fragments are folded into "@x.com".
  EXPECT_EQ(std::find(consts.begin(), consts.end(), "@x"), consts.end());
}

TEST(Constants, NoCommonSubstringNoExtraction) {
  Task task;
  task.dsl = "string";
  task.n_examples = 2;
  task.add_input("in0", {Scalar{std::string("jeff")}, Scalar{std::string("rosa")}});
  task.outputs = {Scalar{std::string("PA")}, Scalar{std::string("VP")}};
  EXPECT_TRUE(strings::extract_constants(task).empty());
}

TEST(Constants, IdenticalInputsAndOutputsTerminates) {
  Task task;
  task.dsl = "string";
  task.n_examples = 2;
  task.add_input("in0", {Scalar{std::string("abab")}, Scalar{std::string("abab")}});
  task.outputs = {Scalar{std::string("abab")}, Scalar{std::string("abab")}};
  auto consts = strings::extract_constants(task);
  std::set<std::string> dedup(consts.begin(), consts.end());
  EXPECT_EQ(dedup.size(), consts.size());
  EXPECT_NE(std::find(consts.begin(), consts.end(), "abab"), consts.end());
}

TEST(Constants, DeterministicOrder) {
  Task task;
  task.dsl = "string";
  task.n_examples = 1;
  task.add_input("in0", {Scalar{std::string("xy")}});
  task.outputs = {Scalar{std::string("foo-bar")}};
  auto a = strings::extract_constants(task);
  auto b = strings::extract_constants(task);
  EXPECT_EQ(a, b);
}

}  // namespace
