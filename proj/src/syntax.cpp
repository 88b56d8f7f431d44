#include "cctt/syntax.hpp"

#include <stdexcept>
#include <unordered_map>

namespace cctt {

SubstPtr subst_weaken() { return std::make_shared<const Subst>(Subst{subst::Weaken{}}); }
SubstPtr subst_id() { return std::make_shared<const Subst>(Subst{subst::Id{}}); }
SubstPtr subst_compose(SubstPtr first, SubstPtr second) {
  return std::make_shared<const Subst>(Subst{subst::Compose{std::move(first), std::move(second)}});
}
SubstPtr subst_extend(SubstPtr base, TermPtr term) {
  return std::make_shared<const Subst>(Subst{subst::Extend{std::move(base), std::move(term)}});
}
SubstPtr subst_empty() { return std::make_shared<const Subst>(Subst{subst::Empty{}}); }
SubstPtr subst_lift(SubstPtr s) {
  return subst_extend(subst_compose(std::move(s), subst_weaken()), make_term(term::Var{0}));
}

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

/// Rebuilds `t` with every direct child replaced by f(child, binders), where
/// `binders` counts the term variables bound between `t` and the child.
template <class F>
TermPtr map_children(const TermPtr& t, F&& f) {
  using namespace term;
  auto sys = [&](const System<TermPtr>& s) {
    System<TermPtr> out;
    for (const auto& b : s.branches) out.branches.push_back({b.cof, f(b.value, 0)});
    return out;
  };
  auto lines = [&](const System<Line>& s) {
    System<Line> out;
    for (const auto& b : s.branches) out.branches.push_back({b.cof, Line{b.value.dim, f(b.value.body, 0)}});
    return out;
  };
  auto opt = [&](const TermPtr& c, int k) { return c ? f(c, k) : c; };
  const Loc loc = t->loc;
  return std::visit(
      overloaded{
          [&](const Var&) { return t; },
          [&](const Global&) { return t; },
          [&](const Sub&) -> TermPtr { throw std::logic_error("map_children on explicit substitution"); },
          [&](const Universe&) { return t; },
          [&](const Pi& n) { return make_term(Pi{n.hint, f(n.dom, 0), f(n.cod, 1)}, loc); },
          [&](const Lam& n) { return make_term(Lam{n.hint, opt(n.dom, 0), f(n.body, 1)}, loc); },
          [&](const App& n) { return make_term(App{f(n.fun, 0), f(n.arg, 0)}, loc); },
          [&](const Sigma& n) { return make_term(Sigma{n.hint, f(n.dom, 0), f(n.cod, 1)}, loc); },
          [&](const Pair& n) { return make_term(Pair{f(n.first, 0), f(n.second, 0)}, loc); },
          [&](const Fst& n) { return make_term(Fst{f(n.pair, 0)}, loc); },
          [&](const Snd& n) { return make_term(Snd{f(n.pair, 0)}, loc); },
          [&](const Nat&) { return t; },
          [&](const Zero&) { return t; },
          [&](const Succ& n) { return make_term(Succ{f(n.pred, 0)}, loc); },
          [&](const NatRec& n) {
            return make_term(NatRec{n.var, f(n.motive, 1), f(n.zero_case, 0), n.pred, n.ih,
                                    f(n.succ_case, 2), f(n.target, 0)},
                             loc);
          },
          [&](const PathP& n) {
            return make_term(PathP{Line{n.type.dim, f(n.type.body, 0)}, f(n.left, 0), f(n.right, 0)}, loc);
          },
          [&](const PLam& n) { return make_term(PLam{n.dim, f(n.body, 0)}, loc); },
          [&](const PApp& n) { return make_term(PApp{f(n.path, 0), n.at}, loc); },
          [&](const Glue& n) {
            System<GlueBranch> out;
            for (const auto& b : n.branches.branches)
              out.branches.push_back({b.cof, GlueBranch{f(b.value.type, 0), f(b.value.equiv, 0)}});
            return make_term(Glue{f(n.base, 0), std::move(out)}, loc);
          },
          [&](const GlueElem& n) { return make_term(GlueElem{f(n.base, 0), sys(n.parts)}, loc); },
          [&](const Unglue& n) { return make_term(Unglue{f(n.arg, 0), opt(n.glue_type, 0)}, loc); },
          [&](const Comp& n) {
            return make_term(Comp{Line{n.type.dim, f(n.type.body, 0)}, lines(n.sides), f(n.base, 0)}, loc);
          },
          [&](const Fill& n) {
            return make_term(
                Fill{n.from_one, Line{n.type.dim, f(n.type.body, 0)}, lines(n.sides), f(n.base, 0), n.at},
                loc);
          },
          [&](const HComp& n) { return make_term(HComp{f(n.type, 0), lines(n.sides), f(n.base, 0)}, loc); },
          [&](const Id& n) { return make_term(Id{f(n.type, 0), f(n.left, 0), f(n.right, 0)}, loc); },
          [&](const Refl& n) { return make_term(Refl{f(n.elem, 0)}, loc); },
          [&](const IdPair& n) { return make_term(IdPair{n.cof, f(n.path, 0)}, loc); },
          [&](const J& n) {
            return make_term(J{n.x, n.y, n.p, f(n.motive, 3), n.d_var, f(n.refl_case, 1), f(n.target, 0)}, loc);
          },
          [&](const Susp& n) { return make_term(Susp{f(n.type, 0)}, loc); },
          [&](const North&) { return t; },
          [&](const South&) { return t; },
          [&](const Merid& n) { return make_term(Merid{f(n.arg, 0), n.at}, loc); },
          [&](const SuspRec& n) {
            return make_term(SuspRec{n.var, f(n.motive, 1), f(n.north_case, 0), f(n.south_case, 0), n.arg,
                                     f(n.merid_case, 1), f(n.target, 0)},
                             loc);
          },
          [&](const Ann& n) { return make_term(Ann{f(n.term, 0), f(n.type, 0)}, loc); },
      },
      t->node);
}

SubstPtr lift_n(SubstPtr s, int n) {
  for (int k = 0; k < n; ++k) s = subst_lift(s);
  return s;
}

TermPtr var_under(int index, const SubstPtr& s) {
  using namespace subst;
  return std::visit(
      overloaded{
          [&](const Weaken&) { return make_term(term::Var{index + 1}); },
          [&](const Id&) { return make_term(term::Var{index}); },
          [&](const Compose& c) {
            return make_term(term::Sub{var_under(index, c.first), c.second});
          },
          [&](const Extend& e) -> TermPtr {
            if (index == 0) return e.term;
            return var_under(index - 1, e.base);
          },
          [&](const Empty&) -> TermPtr { throw std::logic_error("variable out of scope of substitution"); },
      },
      s->node);
}

}  // namespace

TermPtr apply_subst(const TermPtr& t, const SubstPtr& s) {
  if (auto v = std::get_if<term::Var>(&t->node)) return var_under(v->index, s);
  if (auto sub = std::get_if<term::Sub>(&t->node))
    return make_term(term::Sub{sub->body, subst_compose(sub->subst, s)}, t->loc);
  return map_children(t, [&](const TermPtr& c, int k) { return make_term(term::Sub{c, lift_n(s, k)}, c->loc); });
}

TermPtr normalize_subst(const TermPtr& t) {
  if (auto sub = std::get_if<term::Sub>(&t->node)) return normalize_subst(apply_subst(sub->body, sub->subst));
  return map_children(t, [](const TermPtr& c, int) { return normalize_subst(c); });
}

TermPtr shift(const TermPtr& t, int by, int cutoff) {
  if (auto v = std::get_if<term::Var>(&t->node)) {
    if (v->index >= cutoff) return make_term(term::Var{v->index + by}, t->loc);
    return t;
  }
  if (std::holds_alternative<term::Sub>(t->node)) return shift(normalize_subst(t), by, cutoff);
  return map_children(t, [&](const TermPtr& c, int k) { return shift(c, by, cutoff + k); });
}

bool occurs_var(const TermPtr& t, int index) {
  if (auto v = std::get_if<term::Var>(&t->node)) return v->index == index;
  if (std::holds_alternative<term::Sub>(t->node)) return occurs_var(normalize_subst(t), index);
  bool found = false;
  map_children(t, [&](const TermPtr& c, int k) {
    if (!found && occurs_var(c, index + k)) found = true;
    return c;
  });
  return found;
}

namespace {

class AlphaEq {
 public:
  bool eq(const TermPtr& a, const TermPtr& b) {
    if (std::holds_alternative<term::Sub>(a->node)) return eq(normalize_subst(a), b);
    if (std::holds_alternative<term::Sub>(b->node)) return eq(a, normalize_subst(b));
    if (a->node.index() != b->node.index()) return false;
    using namespace term;
    return std::visit(
        overloaded{
            [&](const Var& x) { return x.index == std::get<Var>(b->node).index; },
            [&](const Global& x) { return x.name == std::get<Global>(b->node).name; },
            [&](const Sub&) { return false; },
            [&](const Universe& x) { return x.level == std::get<Universe>(b->node).level; },
            [&](const Pi& x) {
              auto& y = std::get<Pi>(b->node);
              return eq(x.dom, y.dom) && eq(x.cod, y.cod);
            },
            [&](const Lam& x) {
              auto& y = std::get<Lam>(b->node);
              if (x.dom && y.dom && !eq(x.dom, y.dom)) return false;
              return eq(x.body, y.body);
            },
            [&](const App& x) {
              auto& y = std::get<App>(b->node);
              return eq(x.fun, y.fun) && eq(x.arg, y.arg);
            },
            [&](const Sigma& x) {
              auto& y = std::get<Sigma>(b->node);
              return eq(x.dom, y.dom) && eq(x.cod, y.cod);
            },
            [&](const Pair& x) {
              auto& y = std::get<Pair>(b->node);
              return eq(x.first, y.first) && eq(x.second, y.second);
            },
            [&](const Fst& x) { return eq(x.pair, std::get<Fst>(b->node).pair); },
            [&](const Snd& x) { return eq(x.pair, std::get<Snd>(b->node).pair); },
            [&](const Nat&) { return true; },
            [&](const Zero&) { return true; },
            [&](const Succ& x) { return eq(x.pred, std::get<Succ>(b->node).pred); },
            [&](const NatRec& x) {
              auto& y = std::get<NatRec>(b->node);
              return eq(x.motive, y.motive) && eq(x.zero_case, y.zero_case) && eq(x.succ_case, y.succ_case) &&
                     eq(x.target, y.target);
            },
            [&](const PathP& x) {
              auto& y = std::get<PathP>(b->node);
              return line(x.type, y.type) && eq(x.left, y.left) && eq(x.right, y.right);
            },
            [&](const PLam& x) {
              auto& y = std::get<PLam>(b->node);
              return line(Line{x.dim, x.body}, Line{y.dim, y.body});
            },
            [&](const PApp& x) {
              auto& y = std::get<PApp>(b->node);
              return dim(x.at, y.at) && eq(x.path, y.path);
            },
            [&](const Glue& x) {
              auto& y = std::get<Glue>(b->node);
              if (!eq(x.base, y.base) || x.branches.branches.size() != y.branches.branches.size()) return false;
              for (size_t k = 0; k < x.branches.branches.size(); ++k) {
                auto& p = x.branches.branches[k];
                auto& q = y.branches.branches[k];
                if (!cof(p.cof, q.cof) || !eq(p.value.type, q.value.type) || !eq(p.value.equiv, q.value.equiv))
                  return false;
              }
              return true;
            },
            [&](const GlueElem& x) {
              auto& y = std::get<GlueElem>(b->node);
              return eq(x.base, y.base) && terms(x.parts, y.parts);
            },
            [&](const Unglue& x) { return eq(x.arg, std::get<Unglue>(b->node).arg); },
            [&](const Comp& x) {
              auto& y = std::get<Comp>(b->node);
              return line(x.type, y.type) && lines(x.sides, y.sides) && eq(x.base, y.base);
            },
            [&](const Fill& x) {
              auto& y = std::get<Fill>(b->node);
              return x.from_one == y.from_one && line(x.type, y.type) && lines(x.sides, y.sides) &&
                     eq(x.base, y.base) && dim(x.at, y.at);
            },
            [&](const HComp& x) {
              auto& y = std::get<HComp>(b->node);
              return eq(x.type, y.type) && lines(x.sides, y.sides) && eq(x.base, y.base);
            },
            [&](const Id& x) {
              auto& y = std::get<Id>(b->node);
              return eq(x.type, y.type) && eq(x.left, y.left) && eq(x.right, y.right);
            },
            [&](const Refl& x) { return eq(x.elem, std::get<Refl>(b->node).elem); },
            [&](const IdPair& x) {
              auto& y = std::get<IdPair>(b->node);
              return cof(x.cof, y.cof) && eq(x.path, y.path);
            },
            [&](const J& x) {
              auto& y = std::get<J>(b->node);
              return eq(x.motive, y.motive) && eq(x.refl_case, y.refl_case) && eq(x.target, y.target);
            },
            [&](const Susp& x) { return eq(x.type, std::get<Susp>(b->node).type); },
            [&](const North&) { return true; },
            [&](const South&) { return true; },
            [&](const Merid& x) {
              auto& y = std::get<Merid>(b->node);
              return dim(x.at, y.at) && eq(x.arg, y.arg);
            },
            [&](const SuspRec& x) {
              auto& y = std::get<SuspRec>(b->node);
              return eq(x.motive, y.motive) && eq(x.north_case, y.north_case) && eq(x.south_case, y.south_case) &&
                     eq(x.merid_case, y.merid_case) && eq(x.target, y.target);
            },
            [&](const Ann& x) {
              auto& y = std::get<Ann>(b->node);
              return eq(x.term, y.term) && eq(x.type, y.type);
            },
        },
        a->node);
  }

 private:
  // Bound dimension names on each side, innermost last, renamed to shared
  // canonical names.
  std::vector<std::pair<Name, Name>> left_, right_;
  std::vector<Name> canon_;

  DimExpr rename(DimExpr e, const std::vector<std::pair<Name, Name>>& scope) {
    std::unordered_map<Name, bool> done;
    for (auto it = scope.rbegin(); it != scope.rend(); ++it) {
      if (done.count(it->first)) continue;
      done[it->first] = true;
      e = dim_subst(e, it->first, DimExpr::var(it->second));
    }
    return e;
  }
  Cofib rename(Cofib c, const std::vector<std::pair<Name, Name>>& scope) {
    std::unordered_map<Name, bool> done;
    for (auto it = scope.rbegin(); it != scope.rend(); ++it) {
      if (done.count(it->first)) continue;
      done[it->first] = true;
      c = cof_subst(c, it->first, DimExpr::var(it->second));
    }
    return c;
  }
  bool dim(const DimExpr& a, const DimExpr& b) { return rename(a, left_) == rename(b, right_); }
  bool cof(const Cofib& a, const Cofib& b) { return rename(a, left_) == rename(b, right_); }

  bool line(const Line& a, const Line& b) {
    if (canon_.size() <= left_.size()) canon_.push_back(fresh_name("alpha"));
    Name c = canon_[left_.size()];
    left_.push_back({a.dim, c});
    right_.push_back({b.dim, c});
    bool ok = eq(a.body, b.body);
    left_.pop_back();
    right_.pop_back();
    return ok;
  }
  bool lines(const System<Line>& a, const System<Line>& b) {
    if (a.branches.size() != b.branches.size()) return false;
    for (size_t k = 0; k < a.branches.size(); ++k)
      if (!cof(a.branches[k].cof, b.branches[k].cof) || !line(a.branches[k].value, b.branches[k].value))
        return false;
    return true;
  }
  bool terms(const System<TermPtr>& a, const System<TermPtr>& b) {
    if (a.branches.size() != b.branches.size()) return false;
    for (size_t k = 0; k < a.branches.size(); ++k)
      if (!cof(a.branches[k].cof, b.branches[k].cof) || !eq(a.branches[k].value, b.branches[k].value))
        return false;
    return true;
  }
};

}  // namespace

bool alpha_equal(const TermPtr& a, const TermPtr& b) {
  AlphaEq cmp;
  return cmp.eq(a, b);
}

}  // namespace cctt
