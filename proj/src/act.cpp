#include "cctt/machine.hpp"

namespace cctt {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

Val mk(Value::Node n) { return make_value(std::move(n)); }

bool touches(std::uint64_t mask, Name x) { return (mask & name_bit(x)) != 0; }

}  // namespace

Env Machine::act(const Env& e, Name x, const DimExpr& r) {
  if (!touches(e.mask(), x)) return e;
  std::vector<Val> values = e.values();
  for (auto& v : values) v = act(v, x, r);
  std::vector<std::pair<Name, DimExpr>> dims = e.dims();
  for (auto& d : dims) d.second = dim_subst(d.second, x, r);
  return Env::build(values, dims);
}

Env Machine::face(const Env& e, const Face& f) {
  Env out = e;
  for (const auto& [n, b] : f.atoms()) out = act(out, n, DimExpr::constant(b));
  return out;
}

Closure Machine::act(const Closure& c, Name x, const DimExpr& r) { return Closure{act(c.env, x, r), c.body}; }

VSys Machine::act(const VSys& s, Name x, const DimExpr& r) {
  VSys out;
  for (const auto& b : s) {
    if (!b.face.mentions(x)) {
      out.push_back({b.face, act(b.value, x, r)});
      continue;
    }
    Val v = act(b.value, x, r);
    for (const auto& g : face_subst(b.face, x, r).faces()) out.push_back({g, face(v, g)});
  }
  return out;
}

GlueSys Machine::act(const GlueSys& s, Name x, const DimExpr& r) {
  GlueSys out;
  for (const auto& b : s) {
    GlueEquiv e{act(b.value.type, x, r), act(b.value.equiv, x, r)};
    if (!b.face.mentions(x)) {
      out.push_back({b.face, e});
      continue;
    }
    for (const auto& g : face_subst(b.face, x, r).faces())
      out.push_back({g, GlueEquiv{face(e.type, g), face(e.equiv, g)}});
  }
  return out;
}

VSys Machine::face_sys(const VSys& s, const Face& f) {
  VSys out;
  for (const auto& b : s)
    if (auto m = face_meet(b.face, f)) out.push_back({m->without(f), face(b.value, f)});
  return out;
}

GlueSys Machine::face_sys(const GlueSys& s, const Face& f) {
  GlueSys out;
  for (const auto& b : s)
    if (auto m = face_meet(b.face, f))
      out.push_back({m->without(f), GlueEquiv{face(b.value.type, f), face(b.value.equiv, f)}});
  return out;
}

Val Machine::face(const Val& v, const Face& f) {
  Val out = v;
  for (const auto& [n, b] : f.atoms()) out = act(out, n, DimExpr::constant(b));
  return out;
}

Val Machine::act(const Val& v, Name x, const DimExpr& r) {
  if (!touches(v->mask, x)) return v;
  using namespace value;
  auto dim = [&](const DimExpr& e) { return dim_subst(e, x, r); };
  // Opens a binder `d`, renaming it when `r` would be captured.
  auto open = [&](Name d, auto&& rename) -> Name {
    if (!r.mentions(d)) return d;
    Name fresh = fresh_name(name_hint(d));
    rename(d, fresh);
    return fresh;
  };
  return std::visit(
      overloaded{
          [&](const U&) { return v; },
          [&](const Nat&) { return v; },
          [&](const Zero&) { return v; },
          [&](const North&) { return v; },
          [&](const South&) { return v; },
          [&](const value::Pi& n) { return mk(value::Pi{n.hint, act(n.dom, x, r), act(n.cod, x, r)}); },
          [&](const Lam& n) { return mk(Lam{n.hint, act(n.body, x, r)}); },
          [&](const Sigma& n) { return mk(Sigma{n.hint, act(n.dom, x, r), act(n.cod, x, r)}); },
          [&](const Pair& n) { return mk(Pair{act(n.first, x, r), act(n.second, x, r)}); },
          [&](const Succ& n) { return mk(Succ{act(n.pred, x, r)}); },
          [&](const Path& n) {
            if (n.dim == x) return mk(Path{n.dim, n.type, act(n.left, x, r), act(n.right, x, r)});
            Val ty = n.type;
            Name d = open(n.dim, [&](Name o, Name f) { ty = act(ty, o, DimExpr::var(f)); });
            return mk(Path{d, act(ty, x, r), act(n.left, x, r), act(n.right, x, r)});
          },
          [&](const PLam& n) {
            if (n.dim == x) return v;
            Val body = n.body;
            Name d = open(n.dim, [&](Name o, Name f) { body = act(body, o, DimExpr::var(f)); });
            return mk(PLam{d, act(body, x, r)});
          },
          [&](const Glue& n) { return glue_type(act(n.base, x, r), act(n.equivs, x, r)); },
          [&](const GlueElem& n) { return glue_elem(act(n.base, x, r), act(n.parts, x, r)); },
          [&](const Id& n) { return mk(Id{act(n.type, x, r), act(n.left, x, r), act(n.right, x, r)}); },
          [&](const IdPair& n) { return mk(IdPair{cof_subst(n.cof, x, r), act(n.path, x, r)}); },
          [&](const Susp& n) { return mk(Susp{act(n.type, x, r)}); },
          [&](const Merid& n) { return merid(act(n.arg, x, r), dim(n.at)); },
          [&](const HComp& n) {
            Val ty = act(n.type, x, r);
            Val base = act(n.base, x, r);
            if (n.dim == x) return mk(HComp{n.dim, ty, n.sides, base});
            VSys sides = n.sides;
            Name d = open(n.dim, [&](Name o, Name f) { sides = act(sides, o, DimExpr::var(f)); });
            return hcomp(d, ty, base, act(sides, x, r));
          },
          [&](const value::Comp& n) {
            Val base = act(n.base, x, r);
            if (n.dim == x) return comp(n.dim, n.type, base, n.sides);
            Val ty = n.type;
            VSys sides = n.sides;
            Name d = open(n.dim, [&](Name o, Name f) {
              ty = act(ty, o, DimExpr::var(f));
              sides = act(sides, o, DimExpr::var(f));
            });
            return comp(d, act(ty, x, r), base, act(sides, x, r));
          },
          [&](const value::Fill& n) {
            Val base = act(n.base, x, r);
            DimExpr at = dim(n.at);
            if (n.dim == x) return fill(n.dim, n.from_one, n.type, base, n.sides, at);
            Val ty = n.type;
            VSys sides = n.sides;
            Name d = open(n.dim, [&](Name o, Name f) {
              ty = act(ty, o, DimExpr::var(f));
              sides = act(sides, o, DimExpr::var(f));
            });
            return fill(d, n.from_one, act(ty, x, r), base, act(sides, x, r), at);
          },
          [&](const Var& n) { return mk(Var{n.level, act(n.type, x, r)}); },
          [&](const App& n) { return app(act(n.fun, x, r), act(n.arg, x, r)); },
          [&](const Fst& n) { return fst(act(n.pair, x, r)); },
          [&](const Snd& n) { return snd(act(n.pair, x, r)); },
          [&](const PApp& n) { return papp(act(n.path, x, r), dim(n.at)); },
          [&](const NatRec& n) {
            return natrec(act(n.motive, x, r), act(n.zero_case, x, r), act(n.succ_case, x, r),
                          act(n.target, x, r));
          },
          [&](const value::Unglue& n) {
            return unglue(act(n.arg, x, r), act(n.base, x, r), act(n.equivs, x, r));
          },
          [&](const value::J& n) { return jelim(act(n.motive, x, r), act(n.refl_case, x, r), act(n.target, x, r)); },
          [&](const SuspRec& n) {
            return susprec(act(n.motive, x, r), act(n.north_case, x, r), act(n.south_case, x, r),
                           act(n.merid_case, x, r), act(n.target, x, r));
          },
      },
      v->node);
}

}  // namespace cctt
