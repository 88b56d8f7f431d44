#include "cctt/machine.hpp"

namespace cctt {

namespace {

Val mk(Value::Node n) { return make_value(std::move(n)); }

DimExpr var(Name n) { return DimExpr::var(n); }

class Quoter {
 public:
  Quoter(Machine& m, const DimRename& rn) : m_(m), rn_(rn) {}

  DimExpr dim(const DimExpr& r) const {
    if (rn_.empty()) return r;
    return dim_subst_all(r, [&](Name n) {
      auto it = rn_.find(n);
      return var(it == rn_.end() ? n : it->second);
    });
  }

  Cofib cof(const Face& f) const {
    Cofib c = Cofib::top();
    for (const auto& [n, b] : f.atoms()) {
      auto it = rn_.find(n);
      c = cof_and(c, Cofib::atom(it == rn_.end() ? n : it->second, b));
    }
    return c;
  }

  Cofib cof(const Cofib& phi) const {
    Cofib acc;
    for (const auto& f : phi.faces()) acc = cof_or(acc, cof(f));
    return acc;
  }

  Val equiv_type(const Val& t, const Val& a) { return m_.app(m_.app(m_.core("%Equiv"), t), a); }

  TermPtr value(int d, const Val& ty, const Val& v) {
    using namespace value;
    if (auto pi = as<Pi>(ty)) {
      Val x = m_.fresh_var(d, pi->dom);
      Name hint = pi->hint;
      if (auto l = as<Lam>(v)) hint = l->hint;
      return make_term(term::Lam{hint, type(d, pi->dom), value(d + 1, m_.instantiate(pi->cod, x), m_.app(v, x))});
    }
    if (auto sg = as<Sigma>(ty)) {
      Val a = m_.fst(v);
      return make_term(term::Pair{value(d, sg->dom, a), value(d, m_.instantiate(sg->cod, a), m_.snd(v))});
    }
    if (auto p = as<Path>(ty)) {
      Name k = fresh_name(as<PLam>(v) ? name_hint(as<PLam>(v)->dim) : name_hint(p->dim));
      return make_term(term::PLam{k, value(d, m_.act(p->type, p->dim, var(k)), m_.papp(v, var(k)))});
    }
    if (auto g = as<Glue>(ty)) {
      System<TermPtr> parts;
      for (const auto& b : g->equivs)
        parts.branches.push_back(
            {cof(b.face), value(d, m_.face(b.value.type, b.face), m_.face(v, b.face))});
      return make_term(term::GlueElem{value(d, g->base, m_.unglue(v, g->base, g->equivs)), std::move(parts)});
    }
    if (as<U>(ty)) return type(d, v);
    if (auto id = as<Id>(ty)) {
      if (auto q = as<IdPair>(v)) {
        if (q->cof.is_top()) return make_term(term::Refl{value(d, id->type, m_.papp(q->path, DimExpr::zero()))});
        return make_term(
            term::IdPair{cof(q->cof), value(d, m_.path_type(id->type, id->left, id->right), q->path)});
      }
      return neutral(d, v);
    }
    if (as<Nat>(ty)) {
      if (as<Zero>(v)) return make_term(term::Zero{});
      if (auto s = as<Succ>(v)) return make_term(term::Succ{value(d, ty, s->pred)});
      return neutral(d, v);
    }
    if (auto s = as<Susp>(ty)) {
      if (as<North>(v)) return make_term(term::North{});
      if (as<South>(v)) return make_term(term::South{});
      if (auto md = as<Merid>(v)) return make_term(term::Merid{value(d, s->type, md->arg), dim(md->at)});
      if (auto h = as<HComp>(v)) return hcomp(d, *h);
      return neutral(d, v);
    }
    return neutral(d, v);
  }

  TermPtr type(int d, const Val& t) {
    using namespace value;
    if (auto u = as<U>(t)) return make_term(term::Universe{u->level});
    if (auto pi = as<Pi>(t)) {
      Val x = m_.fresh_var(d, pi->dom);
      return make_term(term::Pi{pi->hint, type(d, pi->dom), type(d + 1, m_.instantiate(pi->cod, x))});
    }
    if (auto sg = as<Sigma>(t)) {
      Val x = m_.fresh_var(d, sg->dom);
      return make_term(term::Sigma{sg->hint, type(d, sg->dom), type(d + 1, m_.instantiate(sg->cod, x))});
    }
    if (as<Nat>(t)) return make_term(term::Nat{});
    if (auto p = as<Path>(t)) {
      Name k = fresh_name(name_hint(p->dim));
      return make_term(term::PathP{Line{k, type(d, m_.act(p->type, p->dim, var(k)))},
                                   value(d, m_.act(p->type, p->dim, DimExpr::zero()), p->left),
                                   value(d, m_.act(p->type, p->dim, DimExpr::one()), p->right)});
    }
    if (auto g = as<Glue>(t)) {
      System<GlueBranch> branches;
      for (const auto& b : g->equivs) {
        Val ty = m_.face(b.value.type, b.face);
        Val eq_ty = equiv_type(ty, m_.face(g->base, b.face));
        branches.branches.push_back(
            {cof(b.face), GlueBranch{type(d, ty), value(d, eq_ty, m_.face(b.value.equiv, b.face))}});
      }
      return make_term(term::Glue{type(d, g->base), std::move(branches)});
    }
    if (auto id = as<Id>(t))
      return make_term(term::Id{type(d, id->type), value(d, id->type, id->left), value(d, id->type, id->right)});
    if (auto s = as<Susp>(t)) return make_term(term::Susp{type(d, s->type)});
    return neutral(d, t);
  }

  TermPtr hcomp(int d, const value::HComp& h) {
    return make_term(term::HComp{type(d, h.type), lines(d, h.dim, h.type, h.sides), value(d, h.type, h.base)});
  }

  System<Line> lines(int d, Name i, const Val& line_type, const VSys& sides) {
    System<Line> out;
    for (const auto& b : sides)
      out.branches.push_back(
          {cof(b.face), Line{i, value(d, m_.face(line_type, b.face), m_.face(b.value, b.face))}});
    return out;
  }

  TermPtr neutral(int d, const Val& v) {
    using namespace value;
    if (auto x = as<Var>(v)) return make_term(term::Var{d - 1 - x->level});
    if (auto a = as<App>(v)) {
      Val pi_type = m_.type_of(a->fun);
      auto pi = as<Pi>(pi_type);
      if (!pi) throw EvalError("readback: application of a non-function");
      return make_term(term::App{neutral(d, a->fun), value(d, pi->dom, a->arg)});
    }
    if (auto p = as<Fst>(v)) return make_term(term::Fst{neutral(d, p->pair)});
    if (auto p = as<Snd>(v)) return make_term(term::Snd{neutral(d, p->pair)});
    if (auto p = as<PApp>(v)) return make_term(term::PApp{neutral(d, p->path), dim(p->at)});
    if (auto r = as<NatRec>(v)) {
      Val nat = mk(Nat{});
      Val x = m_.fresh_var(d, nat);
      TermPtr motive = type(d + 1, m_.instantiate(r->motive, x));
      TermPtr zc = value(d, m_.instantiate(r->motive, mk(Zero{})), r->zero_case);
      Val ih = m_.fresh_var(d + 1, m_.instantiate(r->motive, x));
      TermPtr sc = value(d + 2, m_.instantiate(r->motive, mk(Succ{x})), m_.instantiate(r->succ_case, x, ih));
      return make_term(term::NatRec{intern("n"), motive, zc, intern("n"), intern("ih"), sc, neutral(d, r->target)});
    }
    if (auto u = as<Unglue>(v))
      return make_term(term::Unglue{neutral(d, u->arg), type(d, mk(Glue{u->base, u->equivs}))});
    if (auto j = as<J>(v)) {
      Val id_type = m_.type_of(j->target);
      auto id = as<Id>(id_type);
      if (!id) throw EvalError("readback: J on a non-identity");
      Val x = m_.fresh_var(d, id->type);
      Val y = m_.fresh_var(d + 1, id->type);
      Val p = m_.fresh_var(d + 2, mk(Id{id->type, x, y}));
      TermPtr motive = type(d + 3, m_.instantiate(j->motive, x, y, p));
      Val refl = mk(IdPair{Cofib::top(), mk(PLam{fresh_name("_"), x})});
      TermPtr rc = value(d + 1, m_.instantiate(j->motive, x, x, refl), m_.instantiate(j->refl_case, x));
      return make_term(
          term::J{intern("x"), intern("y"), intern("p"), motive, intern("x"), rc, neutral(d, j->target)});
    }
    if (auto s = as<SuspRec>(v)) {
      Val st_type = m_.type_of(s->target);
      auto st = as<Susp>(st_type);
      if (!st) throw EvalError("readback: susprec on a non-suspension");
      Val sty = mk(Susp{*st});
      Val x = m_.fresh_var(d, sty);
      TermPtr motive = type(d + 1, m_.instantiate(s->motive, x));
      TermPtr nc = value(d, m_.instantiate(s->motive, mk(North{})), s->north_case);
      TermPtr sc = value(d, m_.instantiate(s->motive, mk(South{})), s->south_case);
      Val a = m_.fresh_var(d, st->type);
      Name k = fresh_name("k");
      Val mty = mk(Path{k, m_.instantiate(s->motive, m_.merid(a, var(k))), s->north_case, s->south_case});
      TermPtr mc = value(d + 1, mty, m_.instantiate(s->merid_case, a));
      return make_term(term::SuspRec{intern("x"), motive, nc, sc, intern("a"), mc, neutral(d, s->target)});
    }
    if (auto c = as<Comp>(v))
      return make_term(term::Comp{Line{c->dim, type(d, c->type)}, lines(d, c->dim, c->type, c->sides),
                                  value(d, m_.act(c->type, c->dim, DimExpr::zero()), c->base)});
    if (auto f = as<Fill>(v))
      return make_term(term::Fill{f->from_one, Line{f->dim, type(d, f->type)}, lines(d, f->dim, f->type, f->sides),
                                  value(d, m_.act(f->type, f->dim, DimExpr::constant(f->from_one)), f->base),
                                  dim(f->at)});
    if (auto h = as<HComp>(v)) return hcomp(d, *h);
    throw EvalError("readback: value is not neutral at a neutral type");
  }

 private:
  Machine& m_;
  const DimRename& rn_;
};

}  // namespace

TermPtr Machine::quote(int depth, const Val& type, const Val& v, const DimRename& rn) {
  return Quoter(*this, rn).value(depth, type, v);
}

TermPtr Machine::quote_type(int depth, const Val& type, const DimRename& rn) {
  return Quoter(*this, rn).type(depth, type);
}

}  // namespace cctt
