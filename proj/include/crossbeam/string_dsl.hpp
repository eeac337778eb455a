#pragma once

#include <algorithm>
#include <cctype>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "crossbeam/task.hpp"
#include "crossbeam/value.hpp"

namespace crossbeam {
namespace strings {

// Spreadsheet-style semantics, 1-indexed throughout. Faults (bad indexes,
// missing substrings, overflow, oversized results) discard the candidate.

inline std::optional<Scalar> fault() { return std::nullopt; }

inline std::string to_lower(std::string s) {
  for (char& c : s) c = (char)std::tolower((unsigned char)c);
  return s;
}

inline std::string to_upper(std::string s) {
  for (char& c : s) c = (char)std::toupper((unsigned char)c);
  return s;
}

// Capitalize letters that follow a non-letter, lowercase the rest (ASCII).
inline std::string to_proper(const std::string& s) {
  std::string out = s;
  bool start_of_word = true;
  for (char& c : out) {
    if (std::isalpha((unsigned char)c)) {
      c = start_of_word ? (char)std::toupper((unsigned char)c)
                        : (char)std::tolower((unsigned char)c);
      start_of_word = false;
    } else {
      start_of_word = true;
    }
  }
  return out;
}

// Remove leading/trailing spaces and collapse internal runs to one space.
inline std::string trim_spaces(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  bool pending_space = false;
  for (char c : s) {
    if (c == ' ') {
      if (!out.empty()) pending_space = true;
    } else {
      if (pending_space) out.push_back(' ');
      pending_space = false;
      out.push_back(c);
    }
  }
  return out;
}

// Substr(s, start, count): `count` characters from 1-based `start`, truncated
// at the end of the string; start past the end gives "". start < 1 or
// count < 0 fault. (Mid-style; Substr(s, 1, Len(s)) == s.)
inline std::optional<Scalar> substr(const std::string& s, int64_t start, int64_t count) {
  if (start < 1 || count < 0) return fault();
  size_t from = (size_t)start - 1;
  if (from >= s.size()) return Scalar{std::string{}};
  return Scalar{s.substr(from, (size_t)std::min<int64_t>(count, (int64_t)s.size() - from))};
}

// 1-based position of the first occurrence of `needle` in `hay` at or after
// `from`; absent (or `from` past the end) faults.
inline std::optional<Scalar> find_from(const std::string& needle, const std::string& hay,
                                       int64_t from) {
  if (from < 1 || (size_t)(from - 1) > hay.size()) return fault();
  size_t pos = hay.find(needle, (size_t)from - 1);
  if (pos == std::string::npos) return fault();
  return Scalar{(int64_t)pos + 1};
}

inline std::vector<Operation> ops() {
  auto S = [](const Scalar* const* a, int i) -> const std::string& {
    return std::get<std::string>(*a[i]);
  };
  auto I = [](const Scalar* const* a, int i) { return std::get<int64_t>(*a[i]); };
  auto B = [](const Scalar* const* a, int i) { return std::get<bool>(*a[i]); };

  std::vector<Operation> out;
  auto add = [&](std::string name, std::vector<Ty> args, Ty res,
                 std::function<std::optional<Scalar>(const Scalar* const*)> fn) {
    out.push_back({std::move(name), (int)args.size(), std::move(args), res, std::move(fn)});
  };

  add("Concat", {Ty::Str, Ty::Str}, Ty::Str, [S](const Scalar* const* a) -> std::optional<Scalar> {
    return Scalar{S(a, 0) + S(a, 1)};
  });
  add("Left", {Ty::Str, Ty::Int}, Ty::Str, [S, I](const Scalar* const* a) -> std::optional<Scalar> {
    int64_t n = I(a, 1);
    if (n < 0) return fault();
    return Scalar{S(a, 0).substr(0, (size_t)std::min<int64_t>(n, (int64_t)S(a, 0).size()))};
  });
  add("Right", {Ty::Str, Ty::Int}, Ty::Str, [S, I](const Scalar* const* a) -> std::optional<Scalar> {
    int64_t n = I(a, 1);
    if (n < 0) return fault();
    const std::string& s = S(a, 0);
    size_t k = (size_t)std::min<int64_t>(n, (int64_t)s.size());
    return Scalar{s.substr(s.size() - k)};
  });
  add("Substr", {Ty::Str, Ty::Int, Ty::Int}, Ty::Str,
      [S, I](const Scalar* const* a) { return substr(S(a, 0), I(a, 1), I(a, 2)); });
  // Replace(s, start, count, repl): splice `repl` over `count` characters of
  // `s` beginning at 1-based `start`.
  add("Replace", {Ty::Str, Ty::Int, Ty::Int, Ty::Str}, Ty::Str,
      [S, I](const Scalar* const* a) -> std::optional<Scalar> {
        const std::string& s = S(a, 0);
        int64_t start = I(a, 1), count = I(a, 2);
        if (start < 1 || count < 0) return fault();
        size_t from = std::min((size_t)start - 1, s.size());
        size_t n = std::min((size_t)count, s.size() - from);
        return Scalar{s.substr(0, from) + S(a, 3) + s.substr(from + n)};
      });
  add("Trim", {Ty::Str}, Ty::Str, [S](const Scalar* const* a) -> std::optional<Scalar> {
    return Scalar{trim_spaces(S(a, 0))};
  });
  add("Repeat", {Ty::Str, Ty::Int}, Ty::Str, [S, I](const Scalar* const* a) -> std::optional<Scalar> {
    const std::string& s = S(a, 0);
    int64_t n = I(a, 1);
    if (n < 0) return fault();
    if ((int64_t)s.size() * n > (int64_t)kMaxStringLen) return fault();
    std::string r;
    r.reserve(s.size() * (size_t)n);
    for (int64_t i = 0; i < n; ++i) r += s;
    return Scalar{r};
  });
  // Substitute(s, old, new): replace every occurrence; empty `old` leaves s
  // unchanged.
  add("Substitute", {Ty::Str, Ty::Str, Ty::Str}, Ty::Str,
      [S](const Scalar* const* a) -> std::optional<Scalar> {
        const std::string &s = S(a, 0), &from = S(a, 1), &to = S(a, 2);
        if (from.empty()) return Scalar{s};
        std::string r;
        size_t pos = 0;
        while (true) {
          size_t hit = s.find(from, pos);
          if (hit == std::string::npos) break;
          r.append(s, pos, hit - pos);
          r += to;
          pos = hit + from.size();
          if (r.size() > kMaxStringLen) return fault();
        }
        r.append(s, pos, std::string::npos);
        return Scalar{r};
      });
  // Substitute(s, old, new, k): replace only the k-th occurrence (1-based).
  add("Substitute4", {Ty::Str, Ty::Str, Ty::Str, Ty::Int}, Ty::Str,
      [S, I](const Scalar* const* a) -> std::optional<Scalar> {
        const std::string &s = S(a, 0), &from = S(a, 1), &to = S(a, 2);
        int64_t k = I(a, 3);
        if (k <= 0) return fault();
        if (from.empty()) return Scalar{s};
        size_t pos = 0;
        for (int64_t seen = 0;;) {
          size_t hit = s.find(from, pos);
          if (hit == std::string::npos) return Scalar{s};
          if (++seen == k)
            return Scalar{s.substr(0, hit) + to + s.substr(hit + from.size())};
          pos = hit + from.size();
        }
      });
  add("ToText", {Ty::Int}, Ty::Str, [I](const Scalar* const* a) -> std::optional<Scalar> {
    return Scalar{std::to_string(I(a, 0))};
  });
  add("LowerCase", {Ty::Str}, Ty::Str, [S](const Scalar* const* a) -> std::optional<Scalar> {
    return Scalar{to_lower(S(a, 0))};
  });
  add("UpperCase", {Ty::Str}, Ty::Str, [S](const Scalar* const* a) -> std::optional<Scalar> {
    return Scalar{to_upper(S(a, 0))};
  });
  add("ProperCase", {Ty::Str}, Ty::Str, [S](const Scalar* const* a) -> std::optional<Scalar> {
    return Scalar{to_proper(S(a, 0))};
  });
  add("If", {Ty::Bool, Ty::Str, Ty::Str}, Ty::Str,
      [S, B](const Scalar* const* a) -> std::optional<Scalar> {
        return Scalar{B(a, 0) ? S(a, 1) : S(a, 2)};
      });
  add("Add", {Ty::Int, Ty::Int}, Ty::Int, [I](const Scalar* const* a) -> std::optional<Scalar> {
    int64_t r;
    if (__builtin_add_overflow(I(a, 0), I(a, 1), &r)) return fault();
    return Scalar{r};
  });
  add("Sub", {Ty::Int, Ty::Int}, Ty::Int, [I](const Scalar* const* a) -> std::optional<Scalar> {
    int64_t r;
    if (__builtin_sub_overflow(I(a, 0), I(a, 1), &r)) return fault();
    return Scalar{r};
  });
  add("Find", {Ty::Str, Ty::Str}, Ty::Int,
      [S](const Scalar* const* a) { return find_from(S(a, 0), S(a, 1), 1); });
  add("Find3", {Ty::Str, Ty::Str, Ty::Int}, Ty::Int,
      [S, I](const Scalar* const* a) { return find_from(S(a, 0), S(a, 1), I(a, 2)); });
  add("Len", {Ty::Str}, Ty::Int, [S](const Scalar* const* a) -> std::optional<Scalar> {
    return Scalar{(int64_t)S(a, 0).size()};
  });
  add("Equals", {Ty::Str, Ty::Str}, Ty::Bool, [S](const Scalar* const* a) -> std::optional<Scalar> {
    return Scalar{S(a, 0) == S(a, 1)};
  });
  add("GreaterThan", {Ty::Int, Ty::Int}, Ty::Bool,
      [I](const Scalar* const* a) -> std::optional<Scalar> { return Scalar{I(a, 0) > I(a, 1)}; });
  add("GreaterThanOrEqualTo", {Ty::Int, Ty::Int}, Ty::Bool,
      [I](const Scalar* const* a) -> std::optional<Scalar> { return Scalar{I(a, 0) >= I(a, 1)}; });
  return out;
}

inline const std::vector<std::string>& base_string_constants() {
  static const std::vector<std::string> k = {
      "", " ", ",", ".", "!", "?", "(", ")", "[", "]", "<", ">", "{",
      "}", "-", "+", "_", "/", "$", "#", ":", ";", "@", "%", "0"};
  return k;
}

inline const std::vector<int64_t>& base_int_constants() {
  static const std::vector<int64_t> k = {0, 1, 2, 3, 99};
  return k;
}

namespace detail {

// Substrings of `base` (length >= 2) that occur in every string of `in_all`,
// trimmed to the maximal ones.
inline std::vector<std::string> common_substrings(const std::string& base,
                                                  const std::vector<const std::string*>& in_all) {
  std::set<std::string> good;
  for (size_t i = 0; i < base.size(); ++i)
    for (size_t len = 2; i + len <= base.size(); ++len) {
      std::string cand = base.substr(i, len);
      bool everywhere = true;
      for (const std::string* s : in_all)
        if (s->find(cand) == std::string::npos) {
          everywhere = false;
          break;
        }
      if (!everywhere) break;  // longer extensions can only fail too
      good.insert(std::move(cand));
    }
  std::vector<std::string> maximal;
  for (const auto& c : good) {
    bool contained = false;
    for (const auto& other : good)
      if (other.size() > c.size() && other.find(c) != std::string::npos) {
        contained = true;
        break;
      }
    if (!contained) maximal.push_back(c);
  }
  return maximal;
}

}  // namespace detail

// Heuristic constant extraction: maximal substrings (length >= 2) present in
// every output but absent from that example's inputs, plus maximal
// substrings shared by every example of an input variable. Deterministic
// order: longer first, then lexicographic.
inline std::vector<std::string> extract_constants(const Task& task) {
  std::set<std::string> found;

  if (!task.outputs.empty() && type_of(task.outputs[0]) == Ty::Str) {
    std::vector<const std::string*> all_outputs;
    for (const auto& o : task.outputs) all_outputs.push_back(&std::get<std::string>(o));
    for (const auto& cand :
         detail::common_substrings(*all_outputs[0], all_outputs)) {
      bool in_some_input = false;
      for (int ex = 0; ex < task.n_examples && !in_some_input; ++ex)
        for (const auto& column : task.inputs) {
          if (type_of(column[ex]) != Ty::Str) continue;
          if (std::get<std::string>(column[ex]).find(cand) != std::string::npos) {
            in_some_input = true;
            break;
          }
        }
      if (!in_some_input) found.insert(cand);
    }
  }

  for (const auto& column : task.inputs) {
    if (column.empty() || type_of(column[0]) != Ty::Str) continue;
    std::vector<const std::string*> all;
    for (const auto& v : column) all.push_back(&std::get<std::string>(v));
    for (auto& cand : detail::common_substrings(*all[0], all)) found.insert(std::move(cand));
  }

  std::vector<std::string> out(found.begin(), found.end());
  std::sort(out.begin(), out.end(), [](const std::string& a, const std::string& b) {
    return a.size() != b.size() ? a.size() > b.size() : a < b;
  });
  return out;
}

// Full atomic pool for a string task: the fixed string and integer constant
// lists plus task-specific extracted constants. Input variables are added by
// init_value_set.
inline std::vector<AtomDef> atoms(const Task& task) {
  std::vector<AtomDef> out;
  for (const auto& s : base_string_constants())
    out.push_back({scalar_literal(Scalar{s}), Scalar{s}, false, -1});
  for (const auto& s : extract_constants(task))
    out.push_back({scalar_literal(Scalar{s}), Scalar{s}, false, -1});
  for (int64_t i : base_int_constants())
    out.push_back({std::to_string(i), Scalar{i}, false, -1});
  return out;
}

}  // namespace strings
}  // namespace crossbeam
