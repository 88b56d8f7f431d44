// Random well-scoped raw terms for the parse/print round trip.
#pragma once

#include <string>
#include <vector>

#include "cctt/syntax.hpp"
#include "oracles.hpp"
#include "support.hpp"

namespace gen {

using namespace cctt;
using oracle::Rng;
using oracle::uniform;

struct TermGen {
  Rng& rng;
  std::vector<Name> globals;

  Name hint() {
    static const char* hints[] = {"x", "y", "z", "f", "a", "x"};
    return intern(hints[uniform(rng, 0, 5)]);
  }
  Name dim_hint() {
    static const char* hints[] = {"i", "j", "k", "i"};
    return intern(hints[uniform(rng, 0, 3)]);
  }

  DimExpr dim(const std::vector<Name>& dims) {
    auto e = oracle::random_dim(rng, 4, uniform(rng, 0, 2));
    // Map the oracle's variable indices onto the dims in scope.
    return dim_subst_all(support::to_kernel(e), [&](Name n) {
      if (dims.empty()) return DimExpr::constant(n % 2);
      return DimExpr::var(dims[n % dims.size()]);
    });
  }

  Cofib cof(const std::vector<Name>& dims) {
    if (dims.empty()) return uniform(rng, 0, 1) ? Cofib::top() : Cofib::bottom();
    Cofib c = Cofib::atom(dims[uniform(rng, 0, static_cast<int>(dims.size()) - 1)], uniform(rng, 0, 1));
    if (uniform(rng, 0, 2) == 0)
      c = cof_and(c, Cofib::atom(dims[uniform(rng, 0, static_cast<int>(dims.size()) - 1)], uniform(rng, 0, 1)));
    if (uniform(rng, 0, 2) == 0) c = cof_or(c, cof(dims));
    return c;
  }

  TermPtr leaf(int vars) {
    int pick = uniform(rng, 0, 6);
    if (pick <= 2 && vars > 0) return make_term(term::Var{uniform(rng, 0, vars - 1)});
    if (pick == 3 && !globals.empty())
      return make_term(term::Global{globals[uniform(rng, 0, static_cast<int>(globals.size()) - 1)]});
    if (pick == 4) return make_term(term::Universe{uniform(rng, 0, 1)});
    if (pick == 5) return make_term(term::Nat{});
    return uniform(rng, 0, 1) ? make_term(term::Zero{}) : make_term(term::North{});
  }

  Line line(int depth, int vars, std::vector<Name>& dims) {
    Name d = dim_hint();
    dims.push_back(d);
    TermPtr body = term(depth - 1, vars, dims);
    dims.pop_back();
    return Line{d, body};
  }

  System<Line> lines(int depth, int vars, std::vector<Name>& dims) {
    System<Line> s;
    int n = uniform(rng, 0, 2);
    for (int k = 0; k < n; ++k) s.branches.push_back({cof(dims), line(depth, vars, dims)});
    return s;
  }

  TermPtr term(int depth, int vars, std::vector<Name>& dims) {
    if (depth <= 0) return leaf(vars);
    auto sub = [&](int extra = 0) { return term(depth - 1, vars + extra, dims); };
    switch (uniform(rng, 0, 27)) {
      case 0: return leaf(vars);
      case 1: return make_term(term::Pi{hint(), sub(), sub(1)});
      case 2: return make_term(term::Lam{hint(), uniform(rng, 0, 1) ? sub() : nullptr, sub(1)});
      case 3: return make_term(term::App{sub(), sub()});
      case 4: return make_term(term::Sigma{hint(), sub(), sub(1)});
      case 5: return make_term(term::Pair{sub(), sub()});
      case 6: return make_term(term::Fst{sub()});
      case 7: return make_term(term::Snd{sub()});
      case 8: return make_term(term::Succ{sub()});
      case 9:
        return make_term(term::NatRec{hint(), sub(1), sub(), hint(), hint(), sub(2), sub()});
      case 10: return make_term(term::PathP{line(depth, vars, dims), sub(), sub()});
      case 11: {
        Name d = dim_hint();
        dims.push_back(d);
        TermPtr body = sub();
        dims.pop_back();
        return make_term(term::PLam{d, body});
      }
      case 12: return make_term(term::PApp{sub(), dim(dims)});
      case 13: {
        System<GlueBranch> s;
        for (int k = uniform(rng, 0, 2); k > 0; --k) s.branches.push_back({cof(dims), GlueBranch{sub(), sub()}});
        return make_term(term::Glue{sub(), s});
      }
      case 14: {
        System<TermPtr> s;
        for (int k = uniform(rng, 0, 2); k > 0; --k) s.branches.push_back({cof(dims), sub()});
        return make_term(term::GlueElem{sub(), s});
      }
      case 15: return make_term(term::Unglue{sub(), nullptr});
      case 16: return make_term(term::Comp{line(depth, vars, dims), lines(depth, vars, dims), sub()});
      case 17:
        return make_term(
            term::Fill{uniform(rng, 0, 1) == 1, line(depth, vars, dims), lines(depth, vars, dims), sub(), dim(dims)});
      case 18: return make_term(term::Id{sub(), sub(), sub()});
      case 19: return make_term(term::Refl{sub()});
      case 20: return make_term(term::IdPair{cof(dims), sub()});
      case 21: return make_term(term::J{hint(), hint(), hint(), sub(3), hint(), sub(1), sub()});
      case 22: return make_term(term::Susp{sub()});
      case 23: return make_term(term::Merid{sub(), dim(dims)});
      case 24: return make_term(term::SuspRec{hint(), sub(1), sub(), sub(), hint(), sub(1), sub()});
      case 25: return make_term(term::Ann{sub(), sub()});
      case 26: return make_term(term::HComp{sub(), lines(depth, vars, dims), sub()});
      default: return uniform(rng, 0, 1) ? make_term(term::South{}) : leaf(vars);
    }
  }
};

/// σ : Γ -> Δ with |Γ| = from and |Δ| = to, built from the calculus' own
/// constructors.
inline SubstPtr random_subst(Rng& rng, TermGen& g, int from, int to, int depth) {
  int pick = uniform(rng, 0, depth <= 0 ? 1 : 4);
  if (pick == 2 && to == from) return subst_id();
  if (pick == 3 && to == from - 1) return subst_weaken();
  if (pick == 4) {
    int mid = uniform(rng, 0, from + 1);
    return subst_compose(random_subst(rng, g, mid, to, depth - 1), random_subst(rng, g, from, mid, depth - 1));
  }
  if (to == 0) return subst_empty();
  std::vector<Name> dims;
  return subst_extend(random_subst(rng, g, from, to - 1, depth - 1), g.term(2, from, dims));
}

inline TermPtr sub(TermPtr t, SubstPtr s) { return make_term(term::Sub{std::move(t), std::move(s)}); }

inline bool same(const TermPtr& a, const TermPtr& b) { return alpha_equal(normalize_subst(a), normalize_subst(b)); }

/// Draws terms and substitutions and returns the names of the
/// substitution-calculus equations that fail on them.
inline std::vector<std::string> failed_subst_laws(Rng& rng, TermGen& g) {
  int gamma = uniform(rng, 0, 3), delta = uniform(rng, 0, 3), theta = uniform(rng, 0, 3);
  std::vector<Name> dims;
  TermPtr t = g.term(3, theta, dims);
  TermPtr t1 = g.term(3, theta + 1, dims);
  TermPtr t2 = g.term(3, gamma + 1, dims);
  TermPtr closed = g.term(3, 0, dims);
  SubstPtr s = random_subst(rng, g, delta, theta, 2);  // Δ -> Θ
  SubstPtr r = random_subst(rng, g, gamma, delta, 2);  // Γ -> Δ
  SubstPtr d = random_subst(rng, g, gamma, gamma, 2);  // Γ -> Γ
  TermPtr u = g.term(2, delta, dims);
  TermPtr v = g.term(2, gamma, dims);
  TermPtr q = make_term(term::Var{0});

  std::vector<std::string> failed;
  auto law = [&](const char* name, bool ok) {
    if (!ok) failed.push_back(name);
  };
  law("t id = t", same(sub(t, subst_id()), t));
  law("(t s) r = t (s r)", same(sub(sub(t, s), r), sub(t, subst_compose(s, r))));
  law("id s = s", same(sub(t, subst_compose(subst_id(), s)), sub(t, s)));
  law("s id = s", same(sub(t, subst_compose(s, subst_id())), sub(t, s)));
  law("(s r) d = s (r d)",
      same(sub(t, subst_compose(subst_compose(s, r), d)), sub(t, subst_compose(s, subst_compose(r, d)))));
  law("q (s, u) = u", same(sub(q, subst_extend(s, u)), u));
  law("p (s, u) = s", same(sub(t, subst_compose(subst_weaken(), subst_extend(s, u))), sub(t, s)));
  law("(s, u) r = (s r, u r)",
      same(sub(t1, subst_compose(subst_extend(s, u), r)), sub(t1, subst_extend(subst_compose(s, r), sub(u, r)))));
  law("(p, q) = id", same(sub(t2, subst_extend(subst_weaken(), q)), t2));
  law("t p = shift t", same(sub(t, subst_weaken()), shift(t, 1)));
  law("<> r = <>", same(sub(closed, subst_compose(subst_empty(), r)), sub(closed, subst_empty())));
  law("(v p) (id, v) = v", same(sub(sub(v, subst_weaken()), subst_extend(subst_id(), v)), v));
  return failed;
}

}  // namespace gen
