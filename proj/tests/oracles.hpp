// Test-only reference implementations. None of this calls into the kernel's
// interval, cofibration or evaluation code; the tests compare the two.
#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <variant>
#include <vector>

#include "cctt/syntax.hpp"
#include "cctt/value.hpp"

namespace oracle {

using Rng = std::mt19937_64;

inline int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

// ---------------------------------------------------------------------------
// Interval expressions over the four-element De Morgan algebra.
//
// Elements are bit pairs (x, y): 0 = (0,0), a = (1,0), b = (0,1), 1 = (1,1).
// Meet and join are bitwise, negation is (x, y) -> (!y, !x). An equation
// holds in every De Morgan algebra iff it holds in this one.

using DM4 = std::uint8_t;  // bit 0 = x, bit 1 = y

inline DM4 dm_neg(DM4 v) {
  bool x = v & 1, y = v & 2;
  return static_cast<DM4>((!y ? 1 : 0) | (!x ? 2 : 0));
}

struct Dim {
  enum Kind { Zero, One, Var, Neg, Meet, Join } kind = Zero;
  int var = 0;
  std::shared_ptr<const Dim> l, r;
};
using DimP = std::shared_ptr<const Dim>;

inline DimP dzero() { return std::make_shared<const Dim>(Dim{Dim::Zero, 0, nullptr, nullptr}); }
inline DimP done() { return std::make_shared<const Dim>(Dim{Dim::One, 0, nullptr, nullptr}); }
inline DimP dvar(int v) { return std::make_shared<const Dim>(Dim{Dim::Var, v, nullptr, nullptr}); }
inline DimP dneg(DimP a) { return std::make_shared<const Dim>(Dim{Dim::Neg, 0, std::move(a), nullptr}); }
inline DimP dmeet(DimP a, DimP b) { return std::make_shared<const Dim>(Dim{Dim::Meet, 0, std::move(a), std::move(b)}); }
inline DimP djoin(DimP a, DimP b) { return std::make_shared<const Dim>(Dim{Dim::Join, 0, std::move(a), std::move(b)}); }

inline DM4 eval_dm4(const DimP& e, const std::vector<DM4>& rho) {
  switch (e->kind) {
    case Dim::Zero: return 0;
    case Dim::One: return 3;
    case Dim::Var: return rho[e->var];
    case Dim::Neg: return dm_neg(eval_dm4(e->l, rho));
    case Dim::Meet: return eval_dm4(e->l, rho) & eval_dm4(e->r, rho);
    case Dim::Join: return eval_dm4(e->l, rho) | eval_dm4(e->r, rho);
  }
  return 0;
}

/// Calls f on every DM4 assignment to `n` names.
inline void each_dm4(int n, const std::function<void(const std::vector<DM4>&)>& f) {
  std::vector<DM4> rho(n, 0);
  for (int code = 0; code < (1 << (2 * n)); ++code) {
    for (int k = 0; k < n; ++k) rho[k] = static_cast<DM4>((code >> (2 * k)) & 3);
    f(rho);
  }
}

inline bool dm4_equal(const DimP& a, const DimP& b, int n) {
  bool eq = true;
  each_dm4(n, [&](const std::vector<DM4>& rho) { eq = eq && eval_dm4(a, rho) == eval_dm4(b, rho); });
  return eq;
}

inline DimP random_dim(Rng& rng, int names, int depth) {
  int pick = uniform(rng, 0, depth <= 0 ? 2 : 7);
  switch (pick) {
    case 0: return uniform(rng, 0, 3) == 0 ? (uniform(rng, 0, 1) ? done() : dzero()) : dvar(uniform(rng, 0, names - 1));
    case 1:
    case 2: return dvar(uniform(rng, 0, names - 1));
    case 3: return dneg(random_dim(rng, names, depth - 1));
    case 4:
    case 5: return dmeet(random_dim(rng, names, depth - 1), random_dim(rng, names, depth - 1));
    default: return djoin(random_dim(rng, names, depth - 1), random_dim(rng, names, depth - 1));
  }
}

/// A random law-preserving rewrite of `e` (De Morgan, commutation,
/// distribution, double negation, absorption), so that equal pairs are
/// common in the random sample.
inline DimP rewrite(Rng& rng, const DimP& e, int names) {
  auto sub = [&](const DimP& x) { return uniform(rng, 0, 1) ? rewrite(rng, x, names) : x; };
  switch (e->kind) {
    case Dim::Neg:
      if (e->l->kind == Dim::Meet) return djoin(dneg(sub(e->l->l)), dneg(sub(e->l->r)));
      if (e->l->kind == Dim::Join) return dmeet(dneg(sub(e->l->l)), dneg(sub(e->l->r)));
      if (e->l->kind == Dim::Neg) return sub(e->l->l);
      return dneg(sub(e->l));
    case Dim::Meet:
      switch (uniform(rng, 0, 3)) {
        case 0: return dmeet(sub(e->r), sub(e->l));
        case 1:
          if (e->r->kind == Dim::Join)
            return djoin(dmeet(sub(e->l), sub(e->r->l)), dmeet(sub(e->l), sub(e->r->r)));
          return dmeet(sub(e->l), sub(e->r));
        case 2: return dneg(djoin(dneg(sub(e->l)), dneg(sub(e->r))));
        default: return djoin(dmeet(sub(e->l), sub(e->r)), dmeet(dmeet(e->l, e->r), dvar(uniform(rng, 0, names - 1))));
      }
    case Dim::Join:
      switch (uniform(rng, 0, 2)) {
        case 0: return djoin(sub(e->r), sub(e->l));
        case 1:
          if (e->r->kind == Dim::Meet)
            return dmeet(djoin(sub(e->l), sub(e->r->l)), djoin(sub(e->l), sub(e->r->r)));
          return djoin(sub(e->l), sub(e->r));
        default: return dneg(dmeet(dneg(sub(e->l)), dneg(sub(e->r))));
      }
    default:
      return uniform(rng, 0, 3) == 0 ? dneg(dneg(e)) : e;
  }
}

inline std::string dim_text(const DimP& e, const std::vector<std::string>& names) {
  switch (e->kind) {
    case Dim::Zero: return "0";
    case Dim::One: return "1";
    case Dim::Var: return names[e->var];
    case Dim::Neg: return "-(" + dim_text(e->l, names) + ")";
    case Dim::Meet: return "(" + dim_text(e->l, names) + " /\\ " + dim_text(e->r, names) + ")";
    case Dim::Join: return "(" + dim_text(e->l, names) + " \\/ " + dim_text(e->r, names) + ")";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Cofibrations, decided on partial {0,1,unset} assignments.
//
// (r = b) holds under ρ iff r, with the set names replaced, equals b in the
// free algebra over the unset names, i.e. for every DM4 value of them.

struct Cof {
  enum Kind { Bot, Top, Eq, And, Or } kind = Bot;
  DimP dim;
  bool endpoint = false;
  std::shared_ptr<const Cof> l, r;
};
using CofP = std::shared_ptr<const Cof>;

inline CofP cbot() { return std::make_shared<const Cof>(Cof{Cof::Bot, nullptr, false, nullptr, nullptr}); }
inline CofP ctop() { return std::make_shared<const Cof>(Cof{Cof::Top, nullptr, false, nullptr, nullptr}); }
inline CofP ceq(DimP r, bool b) { return std::make_shared<const Cof>(Cof{Cof::Eq, std::move(r), b, nullptr, nullptr}); }
inline CofP cand(CofP a, CofP b) { return std::make_shared<const Cof>(Cof{Cof::And, nullptr, false, std::move(a), std::move(b)}); }
inline CofP cor(CofP a, CofP b) { return std::make_shared<const Cof>(Cof{Cof::Or, nullptr, false, std::move(a), std::move(b)}); }

enum class Pt : std::uint8_t { Zero, One, Unset };
using Partial = std::vector<Pt>;

inline bool eq_holds(const DimP& r, bool b, const Partial& rho) {
  std::vector<int> unset;
  for (int k = 0; k < static_cast<int>(rho.size()); ++k)
    if (rho[k] == Pt::Unset) unset.push_back(k);
  bool all = true;
  std::vector<DM4> full(rho.size());
  each_dm4(static_cast<int>(unset.size()), [&](const std::vector<DM4>& ext) {
    for (int k = 0; k < static_cast<int>(rho.size()); ++k) full[k] = rho[k] == Pt::One ? 3 : 0;
    for (std::size_t u = 0; u < unset.size(); ++u) full[unset[u]] = ext[u];
    all = all && eval_dm4(r, full) == (b ? 3 : 0);
  });
  return all;
}

inline bool holds(const CofP& c, const Partial& rho) {
  switch (c->kind) {
    case Cof::Bot: return false;
    case Cof::Top: return true;
    case Cof::Eq: return eq_holds(c->dim, c->endpoint, rho);
    case Cof::And: return holds(c->l, rho) && holds(c->r, rho);
    case Cof::Or: return holds(c->l, rho) || holds(c->r, rho);
  }
  return false;
}

/// Calls f on all 3^n partial assignments.
inline void each_partial(int n, const std::function<void(const Partial&)>& f) {
  Partial rho(n, Pt::Zero);
  int total = 1;
  for (int k = 0; k < n; ++k) total *= 3;
  for (int code = 0; code < total; ++code) {
    int c = code;
    for (int k = 0; k < n; ++k) {
      rho[k] = static_cast<Pt>(c % 3);
      c /= 3;
    }
    f(rho);
  }
}

/// Entailment over partial assignments, given as a predicate pair.
inline bool entails(int n, const std::function<bool(const Partial&)>& p,
                    const std::function<bool(const Partial&)>& q) {
  bool ok = true;
  each_partial(n, [&](const Partial& rho) { ok = ok && (!p(rho) || q(rho)); });
  return ok;
}

inline CofP random_cof(Rng& rng, int names, int depth) {
  int pick = uniform(rng, 0, depth <= 0 ? 4 : 8);
  if (pick == 0) return uniform(rng, 0, 5) == 0 ? (uniform(rng, 0, 1) ? ctop() : cbot()) : ceq(dvar(uniform(rng, 0, names - 1)), uniform(rng, 0, 1));
  if (pick <= 4) return ceq(random_dim(rng, names, uniform(rng, 0, 2)), uniform(rng, 0, 1));
  if (pick <= 6) return cand(random_cof(rng, names, depth - 1), random_cof(rng, names, depth - 1));
  return cor(random_cof(rng, names, depth - 1), random_cof(rng, names, depth - 1));
}

inline std::string cof_text(const CofP& c, const std::vector<std::string>& names) {
  switch (c->kind) {
    case Cof::Bot: return "0F";
    case Cof::Top: return "1F";
    case Cof::Eq: return "(" + dim_text(c->dim, names) + " = " + (c->endpoint ? "1" : "0") + ")";
    case Cof::And: return "(" + cof_text(c->l, names) + " /\\ " + cof_text(c->r, names) + ")";
    case Cof::Or: return "(" + cof_text(c->l, names) + " \\/ " + cof_text(c->r, names) + ")";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// A direct interpreter for closed, comp-free programs over ℕ, functions and
// pairs. comp and fill are accepted only along the constant line ℕ with an
// empty system, where they return the base.

struct Unsupported {
  std::string what;
};

struct NVal;
using NValP = std::shared_ptr<const NVal>;
struct NFun {
  std::vector<NValP> env;
  cctt::TermPtr body;
};
struct NPair {
  NValP first, second;
};
struct NVal {
  std::variant<long, NFun, NPair> v;
};

class Interp {
 public:
  explicit Interp(const cctt::Globals& globals) : globals_(globals) {}

  /// Innermost variable last in `env`.
  NValP run(const std::vector<NValP>& env, const cctt::TermPtr& t) {
    using namespace cctt::term;
    if (++steps_ > 5'000'000) throw Unsupported{"step limit"};
    auto mk = [](auto x) { return std::make_shared<const NVal>(NVal{std::move(x)}); };
    const auto& n = t->node;
    if (auto v = std::get_if<Var>(&n)) return env.at(env.size() - 1 - v->index);
    if (auto g = std::get_if<Global>(&n)) {
      const cctt::GlobalEntry* e = globals_.find(g->name);
      if (!e || e->failed || !e->body) throw Unsupported{"global"};
      return run({}, e->body);
    }
    if (auto a = std::get_if<Ann>(&n)) return run(env, a->term);
    if (auto l = std::get_if<Lam>(&n)) return mk(NFun{env, l->body});
    if (auto a = std::get_if<App>(&n)) return apply(run(env, a->fun), run(env, a->arg));
    if (auto p = std::get_if<Pair>(&n)) return mk(NPair{run(env, p->first), run(env, p->second)});
    if (auto f = std::get_if<Fst>(&n)) return pair(run(env, f->pair)).first;
    if (auto s = std::get_if<Snd>(&n)) return pair(run(env, s->pair)).second;
    if (std::holds_alternative<Zero>(n)) return mk(0L);
    if (auto s = std::get_if<Succ>(&n)) return mk(number(run(env, s->pred)) + 1);
    if (auto r = std::get_if<NatRec>(&n)) {
      long k = number(run(env, r->target));
      NValP acc = run(env, r->zero_case);
      for (long m = 0; m < k; ++m) {
        std::vector<NValP> inner = env;
        inner.push_back(mk(m));
        inner.push_back(acc);
        acc = run(inner, r->succ_case);
      }
      return acc;
    }
    if (auto c = std::get_if<Comp>(&n)) {
      if (!constant_nat(c->type) || !c->sides.empty()) throw Unsupported{"comp"};
      return run(env, c->base);
    }
    if (auto f = std::get_if<Fill>(&n)) {
      if (!constant_nat(f->type) || !f->sides.empty()) throw Unsupported{"fill"};
      return run(env, f->base);
    }
    throw Unsupported{"term former"};
  }

  NValP apply(const NValP& f, const NValP& a) {
    auto fun = std::get_if<NFun>(&f->v);
    if (!fun) throw Unsupported{"application of a non-function"};
    std::vector<NValP> env = fun->env;
    env.push_back(a);
    return run(env, fun->body);
  }

  static long number(const NValP& v) {
    auto k = std::get_if<long>(&v->v);
    if (!k) throw Unsupported{"expected a number"};
    return *k;
  }

 private:
  static const NPair& pair(const NValP& v) {
    auto p = std::get_if<NPair>(&v->v);
    if (!p) throw Unsupported{"projection of a non-pair"};
    return *p;
  }
  static bool constant_nat(const cctt::Line& l) { return std::holds_alternative<cctt::term::Nat>(l.body->node); }

  const cctt::Globals& globals_;
  long steps_ = 0;
};

// ---------------------------------------------------------------------------
// Random closed ℕ programs, as surface text. `vars` are ℕ-typed variables in
// scope. Values stay small so the oracle is quick.

inline std::string random_nat(Rng& rng, int depth, std::vector<std::string>& vars, bool allow_comp) {
  auto leaf = [&]() -> std::string {
    if (!vars.empty() && uniform(rng, 0, 1)) return vars[uniform(rng, 0, static_cast<int>(vars.size()) - 1)];
    return std::to_string(uniform(rng, 0, 4));
  };
  if (depth <= 0) return leaf();
  auto sub = [&](int d) { return random_nat(rng, d, vars, allow_comp); };
  int pick = uniform(rng, 0, allow_comp ? 11 : 9);
  switch (pick) {
    case 0: return leaf();
    case 1: return "succ (" + sub(depth - 1) + ")";
    case 2: return "add (" + sub(depth - 1) + ") (" + sub(depth - 1) + ")";
    case 3: return "mult (" + sub(depth - 2) + ") " + std::to_string(uniform(rng, 0, 3));
    case 4: return "pred (" + sub(depth - 1) + ")";
    case 5: {
      std::string m = "m" + std::to_string(vars.size()), ih = "ih" + std::to_string(vars.size());
      std::string z = sub(depth - 1);
      vars.push_back(m);
      vars.push_back(ih);
      std::string s = sub(depth - 1);
      vars.pop_back();
      vars.pop_back();
      return "natrec (\\_ -> Nat) (" + z + ") (\\" + m + " " + ih + " -> " + s + ") " +
             std::to_string(uniform(rng, 0, 3));
    }
    case 6: return "((" + sub(depth - 1) + ", " + sub(depth - 1) + ") : Nat * Nat)." + (uniform(rng, 0, 1) ? "1" : "2");
    case 7: {
      std::string x = "x" + std::to_string(vars.size());
      std::string arg = sub(depth - 1);
      vars.push_back(x);
      std::string body = sub(depth - 1);
      vars.pop_back();
      return "(\\(" + x + " : Nat) -> " + body + ") (" + arg + ")";
    }
    case 8: return "double (" + sub(depth - 1) + ")";
    case 9: return "fill 0 (<_> Nat) [] (" + sub(depth - 1) + ") @ 1";
    case 10: return "comp (<_> Nat) [] (" + sub(depth - 1) + ")";
    default: return "fill 1 (<_> Nat) [] (" + sub(depth - 1) + ") @ 0";
  }
}

}  // namespace oracle
