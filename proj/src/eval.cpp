#include <string>

#include "cctt/machine.hpp"

namespace cctt {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

Val mk(Value::Node n) { return make_value(std::move(n)); }

Name fresh_like(Name syntactic) { return fresh_name(name_hint(syntactic)); }

}  // namespace

std::string to_string(Mode m) { return m == Mode::Strict ? "strict" : "primitive-fill"; }

DimExpr Machine::eval_dim(const Env& env, const DimExpr& r) {
  return dim_subst_all(r, [&](Name n) { return env.lookup_dim(n); });
}

Cofib Machine::eval_cof(const Env& env, const Cofib& phi) {
  Cofib acc;
  for (const auto& f : phi.faces()) {
    Cofib c = Cofib::top();
    for (const auto& [n, b] : f.atoms()) c = cof_and(c, cof_eq(env.lookup_dim(n), b));
    acc = cof_or(acc, c);
  }
  return acc;
}

VSys Machine::eval_sys(const Env& env, const System<TermPtr>& sys) {
  VSys out;
  for (const auto& b : sys.branches)
    for (const auto& f : eval_cof(env, b.cof).faces()) out.push_back({f, eval(face(env, f), b.value)});
  return out;
}

VSys Machine::eval_lines(const Env& env, const System<Line>& sys, Name i) {
  VSys out;
  for (const auto& b : sys.branches)
    for (const auto& f : eval_cof(env, b.cof).faces())
      out.push_back({f, eval(face(env, f).push_dim(b.value.dim, DimExpr::var(i)), b.value.body)});
  return out;
}

GlueSys Machine::eval_glue_sys(const Env& env, const System<GlueBranch>& sys) {
  GlueSys out;
  for (const auto& b : sys.branches)
    for (const auto& f : eval_cof(env, b.cof).faces()) {
      Env ef = face(env, f);
      out.push_back({f, GlueEquiv{eval(ef, b.value.type), eval(ef, b.value.equiv)}});
    }
  return out;
}

Val Machine::instantiate(const Closure& c, const Val& a) { return eval(c.env.push(a), c.body); }

Val Machine::instantiate(const Closure& c, const Val& a, const Val& b) {
  return eval(c.env.push(a).push(b), c.body);
}

Val Machine::instantiate(const Closure& c, const Val& a, const Val& b, const Val& d) {
  return eval(c.env.push(a).push(b).push(d), c.body);
}

Val Machine::eval(const Env& env, const TermPtr& t) {
  using namespace term;
  return std::visit(
      overloaded{
          [&](const Var& n) -> Val { return env.lookup(n.index); },
          [&](const Global& n) -> Val {
            const GlobalEntry* e = globals_.find(n.name);
            if (!e || e->failed || !e->value) throw EvalError("unusable global " + name_text(n.name));
            return e->value;
          },
          [&](const Sub&) -> Val { return eval(env, normalize_subst(t)); },
          [&](const Universe& n) { return mk(value::U{n.level}); },
          [&](const Pi& n) { return mk(value::Pi{n.hint, eval(env, n.dom), Closure{env, n.cod}}); },
          [&](const Lam& n) { return mk(value::Lam{n.hint, Closure{env, n.body}}); },
          [&](const App& n) { return app(eval(env, n.fun), eval(env, n.arg)); },
          [&](const Sigma& n) { return mk(value::Sigma{n.hint, eval(env, n.dom), Closure{env, n.cod}}); },
          [&](const Pair& n) { return mk(value::Pair{eval(env, n.first), eval(env, n.second)}); },
          [&](const Fst& n) { return fst(eval(env, n.pair)); },
          [&](const Snd& n) { return snd(eval(env, n.pair)); },
          [&](const Nat&) { return mk(value::Nat{}); },
          [&](const Zero&) { return mk(value::Zero{}); },
          [&](const Succ& n) { return mk(value::Succ{eval(env, n.pred)}); },
          [&](const NatRec& n) {
            return natrec(Closure{env, n.motive}, eval(env, n.zero_case), Closure{env, n.succ_case},
                          eval(env, n.target));
          },
          [&](const PathP& n) {
            Name i = fresh_like(n.type.dim);
            return mk(value::Path{i, eval(env.push_dim(n.type.dim, DimExpr::var(i)), n.type.body),
                                  eval(env, n.left), eval(env, n.right)});
          },
          [&](const PLam& n) {
            Name i = fresh_like(n.dim);
            return mk(value::PLam{i, eval(env.push_dim(n.dim, DimExpr::var(i)), n.body)});
          },
          [&](const PApp& n) { return papp(eval(env, n.path), eval_dim(env, n.at)); },
          [&](const term::Glue& n) { return glue_type(eval(env, n.base), eval_glue_sys(env, n.branches)); },
          [&](const GlueElem& n) { return glue_elem(eval(env, n.base), eval_sys(env, n.parts)); },
          [&](const term::Unglue& n) -> Val {
            Val v = eval(env, n.arg);
            if (n.glue_type) {
              TermPtr g = normalize_subst(n.glue_type);
              if (auto gt = std::get_if<term::Glue>(&g->node))
                return unglue(v, eval(env, gt->base), eval_glue_sys(env, gt->branches));
              Val gv = eval(env, g);
              if (auto gl = as<value::Glue>(gv)) return unglue(v, gl->base, gl->equivs);
              throw EvalError("unglue annotated with a non-Glue type");
            }
            if (auto ge = as<value::GlueElem>(v)) return ge->base;
            Val ty = type_of(v);
            if (auto gl = as<value::Glue>(ty)) return unglue(v, gl->base, gl->equivs);
            throw EvalError("unglue of a value whose type is not a Glue type");
          },
          [&](const term::Comp& n) {
            Name i = fresh_like(n.type.dim);
            Val a = eval(env.push_dim(n.type.dim, DimExpr::var(i)), n.type.body);
            return comp(i, a, eval(env, n.base), eval_lines(env, n.sides, i));
          },
          [&](const term::Fill& n) {
            Name i = fresh_like(n.type.dim);
            Val a = eval(env.push_dim(n.type.dim, DimExpr::var(i)), n.type.body);
            return fill(i, n.from_one, a, eval(env, n.base), eval_lines(env, n.sides, i),
                        eval_dim(env, n.at));
          },
          [&](const term::HComp& n) {
            Name i = fresh_name("h");
            return hcomp(i, eval(env, n.type), eval(env, n.base), eval_lines(env, n.sides, i));
          },
          [&](const term::Id& n) {
            return mk(value::Id{eval(env, n.type), eval(env, n.left), eval(env, n.right)});
          },
          [&](const Refl& n) {
            Name k = fresh_name("r");
            return mk(value::IdPair{Cofib::top(), mk(value::PLam{k, eval(env, n.elem)})});
          },
          [&](const term::IdPair& n) { return mk(value::IdPair{eval_cof(env, n.cof), eval(env, n.path)}); },
          [&](const term::J& n) {
            return jelim(Closure{env, n.motive}, Closure{env, n.refl_case}, eval(env, n.target));
          },
          [&](const term::Susp& n) { return mk(value::Susp{eval(env, n.type)}); },
          [&](const North&) { return mk(value::North{}); },
          [&](const South&) { return mk(value::South{}); },
          [&](const term::Merid& n) { return merid(eval(env, n.arg), eval_dim(env, n.at)); },
          [&](const term::SuspRec& n) {
            return susprec(Closure{env, n.motive}, eval(env, n.north_case), eval(env, n.south_case),
                           Closure{env, n.merid_case}, eval(env, n.target));
          },
          [&](const Ann& n) { return eval(env, n.term); },
      },
      t->node);
}

Val Machine::app(const Val& f, const Val& a) {
  if (auto l = as<value::Lam>(f)) return instantiate(l->body, a);
  if (auto c = as<value::Comp>(f))
    if (std::holds_alternative<value::Pi>(c->type->node)) return comp_pi_app(*c, a);
  return mk(value::App{f, a});
}

Val Machine::fst(const Val& p) {
  if (auto q = as<value::Pair>(p)) return q->first;
  return mk(value::Fst{p});
}

Val Machine::snd(const Val& p) {
  if (auto q = as<value::Pair>(p)) return q->second;
  return mk(value::Snd{p});
}

Val Machine::papp(const Val& p, const DimExpr& r) {
  if (auto l = as<value::PLam>(p)) return act(l->body, l->dim, r);
  if (auto b = r.as_constant()) {
    Val ty = type_of(p);
    auto path = as<value::Path>(ty);
    if (!path) throw EvalError("path application to a non-path");
    return *b ? path->right : path->left;
  }
  return mk(value::PApp{p, r});
}

Val Machine::natrec(const Closure& motive, const Val& z, const Closure& s, const Val& n) {
  if (as<value::Zero>(n)) return z;
  if (auto m = as<value::Succ>(n)) return instantiate(s, m->pred, natrec(motive, z, s, m->pred));
  return mk(value::NatRec{motive, z, s, n});
}

Val Machine::glue_type(const Val& base, GlueSys equivs) {
  for (const auto& b : equivs)
    if (b.face.is_top()) return b.value.type;
  return mk(value::Glue{base, std::move(equivs)});
}

Val Machine::glue_elem(const Val& base, VSys parts) {
  for (const auto& b : parts)
    if (b.face.is_top()) return b.value;
  return mk(value::GlueElem{base, std::move(parts)});
}

Val Machine::unglue(const Val& v, const Val& base, const GlueSys& equivs) {
  for (const auto& b : equivs)
    if (b.face.is_top()) return app(fst(b.value.equiv), v);
  if (auto g = as<value::GlueElem>(v)) return g->base;
  return mk(value::Unglue{v, base, equivs});
}

Val Machine::jelim(const Closure& motive, const Closure& d, const Val& p) {
  if (auto q = as<value::IdPair>(p)) {
    Val x = papp(q->path, DimExpr::zero());
    if (q->cof.is_top()) return instantiate(d, x);
    return jelim_pair(motive, d, *q, nullptr);
  }
  return mk(value::J{motive, d, p});
}

Val Machine::jelim_pair(const Closure& motive, const Closure& d, const value::IdPair& p, const Val&) {
  // comp^i P(x, p@i, (ω ∨ i=0, <j> p@(i/\j))) [ω -> d x] (d x)
  Val x = papp(p.path, DimExpr::zero());
  Name i = fresh_name("i");
  Name j = fresh_name("j");
  Val p_i = papp(p.path, DimExpr::var(i));
  Val squeezed = mk(value::IdPair{cof_or(p.cof, Cofib::atom(i, false)),
                                  mk(value::PLam{j, papp(p.path, dim_meet(DimExpr::var(i), DimExpr::var(j)))})});
  Val line = instantiate(motive, x, p_i, squeezed);
  Val dx = instantiate(d, x);
  VSys sides;
  for (const auto& f : p.cof.faces()) sides.push_back({f, face(dx, f)});
  return comp(i, line, dx, sides);
}

Val Machine::merid(const Val& a, const DimExpr& r) {
  if (auto b = r.as_constant()) return *b ? mk(value::South{}) : mk(value::North{});
  return mk(value::Merid{a, r});
}

Val Machine::susprec(const Closure& motive, const Val& n, const Val& s, const Closure& m, const Val& t) {
  if (as<value::North>(t)) return n;
  if (as<value::South>(t)) return s;
  if (auto md = as<value::Merid>(t)) return papp(instantiate(m, md->arg), md->at);
  if (auto h = as<value::HComp>(t)) {
    // comp^i P(hfill i) [φ -> susprec (u i)] (susprec u0)
    Name i = fresh_name("i");
    Name j = fresh_name("j");
    VSys sq = act(h->sides, h->dim, dim_meet(DimExpr::var(i), DimExpr::var(j)));
    sq.push_back({Face::atom(i, false), h->base});
    Val hfill = hcomp(j, h->type, h->base, sq);
    VSys sides;
    for (const auto& b : h->sides)
      sides.push_back({b.face, susprec(motive, n, s, m, act(b.value, h->dim, DimExpr::var(i)))});
    return comp(i, instantiate(motive, hfill), susprec(motive, n, s, m, h->base), sides);
  }
  return mk(value::SuspRec{motive, n, s, m, t});
}

Val Machine::hcomp(Name i, const Val& type, const Val& base, const VSys& sides) {
  for (const auto& b : sides)
    if (b.face.is_top()) return act(b.value, i, DimExpr::one());
  return mk(value::HComp{i, type, sides, base});
}

Val Machine::type_of(const Val& v) {
  using namespace value;
  return std::visit(
      overloaded{
          [&](const Var& n) -> Val { return n.type; },
          [&](const App& n) -> Val {
            Val f = type_of(n.fun);
            auto pi = as<value::Pi>(f);
            if (!pi) throw EvalError("application of a non-function");
            return instantiate(pi->cod, n.arg);
          },
          [&](const Fst& n) -> Val {
            Val s_type = type_of(n.pair);
            auto s = as<value::Sigma>(s_type);
            if (!s) throw EvalError("projection from a non-pair");
            return s->dom;
          },
          [&](const Snd& n) -> Val {
            Val s_type = type_of(n.pair);
            auto s = as<value::Sigma>(s_type);
            if (!s) throw EvalError("projection from a non-pair");
            return instantiate(s->cod, fst(n.pair));
          },
          [&](const PApp& n) -> Val {
            Val p_type = type_of(n.path);
            auto p = as<value::Path>(p_type);
            if (!p) throw EvalError("path application to a non-path");
            return act(p->type, p->dim, n.at);
          },
          [&](const NatRec& n) -> Val { return instantiate(n.motive, n.target); },
          [&](const Unglue& n) -> Val { return n.base; },
          [&](const J& n) -> Val {
            Val id_type = type_of(n.target);
            auto id = as<value::Id>(id_type);
            if (!id) throw EvalError("J on a non-identity");
            return instantiate(n.motive, id->left, id->right, n.target);
          },
          [&](const SuspRec& n) -> Val { return instantiate(n.motive, n.target); },
          [&](const Comp& n) -> Val { return act(n.type, n.dim, DimExpr::one()); },
          [&](const Fill& n) -> Val { return act(n.type, n.dim, n.at); },
          [&](const HComp& n) -> Val { return n.type; },
          [&](const auto&) -> Val { throw EvalError("type_of on a canonical value"); },
      },
      v->node);
}

Val Machine::core(const char* name) {
  const GlobalEntry* e = globals_.find(intern(name));
  if (!e || !e->value) throw EvalError(std::string("missing kernel definition ") + name);
  return e->value;
}

Val Machine::fresh_var(int level, const Val& type) { return mk(value::Var{level, type}); }

Val Machine::path_type(const Val& type, const Val& left, const Val& right) {
  return mk(value::Path{fresh_name("_"), type, left, right});
}

}  // namespace cctt
