#pragma once

#include <cstdint>
#include <cstring>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace crossbeam {

// Value types a DSL expression can produce. Pred covers both predicate
// arities; arity is a runtime property of the tensor.
enum class Ty : uint8_t { Str = 0, Int = 1, Bool = 2, Pred = 3 };

inline const char* ty_name(Ty t) {
  switch (t) {
    case Ty::Str: return "str";
    case Ty::Int: return "int";
    case Ty::Bool: return "bool";
    case Ty::Pred: return "pred";
  }
  return "?";
}

// A predicate over a finite entity domain {0, ..., universe-1}, stored as a
// dense binary truth tensor: `universe` entries for arity 1, universe^2
// (row-major, [x][y]) for arity 2.
struct Pred {
  int arity = 1;  // 1 or 2
  int universe = 10;
  std::vector<uint8_t> bits;

  static Pred falses(int arity, int universe) {
    Pred p;
    p.arity = arity;
    p.universe = universe;
    p.bits.assign(arity == 1 ? universe : universe * universe, 0);
    return p;
  }

  size_t cells() const { return bits.size(); }

  bool at(int x) const { return bits[x] != 0; }
  bool at(int x, int y) const { return bits[(size_t)x * universe + y] != 0; }
  void set(int x, bool v = true) { bits[x] = v ? 1 : 0; }
  void set(int x, int y, bool v = true) { bits[(size_t)x * universe + y] = v ? 1 : 0; }

  friend bool operator==(const Pred& a, const Pred& b) {
    return a.arity == b.arity && a.universe == b.universe && a.bits == b.bits;
  }
};

using Scalar = std::variant<std::string, int64_t, bool, Pred>;

inline Ty type_of(const Scalar& s) { return static_cast<Ty>(s.index()); }

// Execution limits (a runaway Repeat would otherwise explode memory).
constexpr size_t kMaxStringLen = 1000;

// Canonical byte encoding used for semantic signatures. Two scalars encode
// equally iff they are equal, so hashing the encoding plus the map's key
// equality gives collision-safe deduplication.
inline void encode_scalar(std::string& out, const Scalar& s) {
  out.push_back(static_cast<char>(type_of(s)));
  switch (type_of(s)) {
    case Ty::Str: {
      const auto& str = std::get<std::string>(s);
      uint32_t n = static_cast<uint32_t>(str.size());
      out.append(reinterpret_cast<const char*>(&n), sizeof n);
      out.append(str);
      break;
    }
    case Ty::Int: {
      int64_t v = std::get<int64_t>(s);
      out.append(reinterpret_cast<const char*>(&v), sizeof v);
      break;
    }
    case Ty::Bool:
      out.push_back(std::get<bool>(s) ? 1 : 0);
      break;
    case Ty::Pred: {
      const auto& p = std::get<Pred>(s);
      out.push_back(static_cast<char>(p.arity));
      out.push_back(static_cast<char>(p.universe));
      out.append(reinterpret_cast<const char*>(p.bits.data()), p.bits.size());
      break;
    }
  }
}

// Literal text for atomic constants in reconstructed expressions.
inline std::string scalar_literal(const Scalar& s) {
  switch (type_of(s)) {
    case Ty::Str: {
      std::string out = "\"";
      for (char c : std::get<std::string>(s)) {
        if (c == '"' || c == '\\') out.push_back('\\');
        out.push_back(c);
      }
      out.push_back('"');
      return out;
    }
    case Ty::Int: return std::to_string(std::get<int64_t>(s));
    case Ty::Bool: return std::get<bool>(s) ? "true" : "false";
    case Ty::Pred: return "<pred>";  // named primitives print their name instead
  }
  return "?";
}

// Deterministic seed derivation (splitmix64); used wherever a root seed has
// to be split into independent per-run streams.
inline uint64_t split_seed(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline uint64_t hash_bytes(const std::string& bytes, uint64_t seed = 0x243f6a8885a308d3ULL) {
  // FNV-1a folded through splitmix; stable across platforms.
  uint64_t h = seed ^ 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return split_seed(h);
}

}  // namespace crossbeam
