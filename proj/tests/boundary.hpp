// Random comp/fill boundary instances, written as .cctt modules whose
// definitions typecheck exactly when the boundary laws hold judgmentally.
//
// An instance is a type line T(i), a base in T(0) (or T(1) for fill from 1),
// a cofibration φ over k and j, and a side u(i) that agrees with the base on φ.
// Laws, each a constant path:
//   fill b ... @ b            = base
//   fill 0 ... @ 1            = comp ...                  (strict only)
//   (fill b ... @ r)|ρ        = u(r)|ρ   for ρ ⊨ φ
//   (comp ...)|ρ              = u(1)|ρ   for ρ ⊨ φ        (strict only)
#pragma once

#include <string>
#include <vector>

#include "oracles.hpp"

namespace boundary {

inline const char* params() {
  return "(A : U) (P : A -> U) (a b : A) (p : Path A a b) (n : Nat) (f g : Nat -> Nat) "
         "(h : (y : Nat) -> Path Nat (f y) (g y)) (X : Path U A A) (x : A) (u0 : P a) (v0 : P b) "
         "(m : PathP (<l> P (p @ l)) u0 v0)";
}

struct Template {
  const char* type;   // mentions $i
  const char* base;   // in T(0), after $i := -i also in the flipped line
  const char* side;   // mentions $i and $D; empty for no system
  const char* other;  // an element of T(0) that is not the base, or empty
};

inline const std::vector<Template>& templates() {
  static const std::vector<Template> ts = {
      {"Nat", "n", "n", "succ n"},
      {"Nat", "f n", "h n @ ($i /\\ $D)", "g n"},
      {"A", "a", "p @ ($i /\\ $D)", "b"},
      {"Nat -> Nat", "f", "\\y -> h y @ ($i /\\ $D)", "g"},
      {"A * Nat", "(a, n)", "(p @ ($i /\\ $D), n)", "(b, n)"},
      {"(y : A) * Path A y y", "(a, <_> a)", "(p @ ($i /\\ $D), <_> p @ ($i /\\ $D))", "(b, <_> b)"},
      {"Path A a b", "p", "<l> p @ l", ""},
      {"Id A a a", "refl a", "refl a", ""},
      {"U", "A", "A", "Nat"},
      {"Glue A [(k = 0) -> (A, idEquiv A)]", "glue a [(k = 0) -> a]",
       "glue (p @ ($i /\\ $D)) [(k = 0) -> p @ ($i /\\ $D)]", "glue b [(k = 0) -> b]"},
      {"X @ $i", "x", "", ""},
      {"P (p @ $i)", "u0", "m @ $i", ""},
      {"Susp A", "north", "merid a ($i /\\ $D)", "south"},
      {"Susp Nat", "north", "north", "south"},
  };
  return ts;
}

inline std::string replace_all(std::string s, const std::string& from, const std::string& to) {
  for (std::size_t at = s.find(from); at != std::string::npos; at = s.find(from, at + to.size()))
    s.replace(at, from.size(), to);
  return s;
}

struct Instance {
  std::string fill_laws;  // both modes
  std::string comp_laws;  // strict only
  std::string negative;   // a single false law, or empty
  int template_index = 0;
};

inline Instance make_instance(oracle::Rng& rng, int index) {
  static const std::vector<std::string> kj{"k", "j"};
  const auto& ts = templates();
  int ti = oracle::uniform(rng, 0, static_cast<int>(ts.size()) - 1);
  const Template& t = ts[ti];
  bool from_one = oracle::uniform(rng, 0, 2) == 0;
  std::string iv = from_one ? "-i" : "i";
  std::string d = oracle::dim_text(oracle::random_dim(rng, 2, 1), kj);
  auto at = [&](const std::string& s) { return replace_all(replace_all(s, "$D", d), "$i", iv); };

  std::string type = at(t.type);
  bool has_side = t.side[0] != '\0';
  oracle::CofP phi = has_side ? oracle::random_cof(rng, 2, 1) : oracle::cbot();
  // The Glue template's type only exists with its equivalence on (k = 0);
  // any φ works since the side is itself a Glue element.
  std::string sys = has_side ? "[" + oracle::cof_text(phi, kj) + " -> <i> " + at(t.side) + "]" : "[]";
  const char* b = from_one ? "1" : "0";
  const char* nb = from_one ? "0" : "1";
  std::string line = "(<i> " + type + ")";
  auto fill_at = [&](const std::string& r) {
    return "fill " + std::string(b) + " " + line + " " + sys + " (" + t.base + ") @ " + r;
  };
  std::string comp = "comp " + line + " " + sys + " (" + t.base + ")";
  std::string name = "law" + std::to_string(index) + "_";
  std::string head = "def " + name;
  auto law = [&](const std::string& n, const std::string& ty, const std::string& lhs, const std::string& rhs) {
    return head + n + " " + params() + " =\n  <k> <j> (<_> " + rhs + " : Path (" + ty + ") (" + lhs + ") (" + rhs +
           "))\n\n";
  };
  auto law_at = [&](const std::string& n, const std::string& ty, const std::string& lhs, const std::string& rhs,
                    const std::string& kv, const std::string& jv) {
    auto pin = [&](const std::string& e) { return "(<k> <j> " + e + ") @ " + kv + " @ " + jv; };
    return head + n + " " + params() + " =\n  (<_> (" + pin(rhs) + ") : Path (" + pin(ty) + ") (" + pin(lhs) +
           ") (" + pin(rhs) + "))\n\n";
  };

  Instance out;
  out.template_index = ti;
  out.fill_laws += law("base", line + " @ " + b, fill_at(b), t.base);
  if (!from_one) out.comp_laws += law("end", line + " @ 1", fill_at(nb), comp);

  // A point of φ, if any, and a random dimension to evaluate the filler at.
  std::vector<oracle::Partial> points;
  oracle::each_partial(2, [&](const oracle::Partial& rho) {
    if (rho[0] != oracle::Pt::Unset && rho[1] != oracle::Pt::Unset && oracle::holds(phi, rho)) points.push_back(rho);
  });
  if (!points.empty()) {
    const auto& rho = points[oracle::uniform(rng, 0, static_cast<int>(points.size()) - 1)];
    std::string kv = rho[0] == oracle::Pt::One ? "1" : "0", jv = rho[1] == oracle::Pt::One ? "1" : "0";
    std::string r = oracle::uniform(rng, 0, 3) == 0 ? std::string(nb) : oracle::dim_text(oracle::random_dim(rng, 2, 1), kj);
    std::string side_line = "(<i> (" + at(t.side) + " : " + type + "))";
    out.fill_laws += law_at("face", line + " @ (" + r + ")", fill_at("(" + r + ")"), side_line + " @ (" + r + ")", kv, jv);
    if (!from_one) out.comp_laws += law_at("compface", line + " @ 1", comp, side_line + " @ 1", kv, jv);
  }
  if (t.other[0] != '\0') out.negative = law("wrong", line + " @ " + b, fill_at(b), t.other);
  return out;
}

}  // namespace boundary
