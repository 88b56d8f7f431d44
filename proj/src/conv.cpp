#include "cctt/machine.hpp"

namespace cctt {

namespace {

Val mk(Value::Node n) { return make_value(std::move(n)); }

DimExpr var(Name n) { return DimExpr::var(n); }

}  // namespace

namespace {

class Conv {
 public:
  explicit Conv(Machine& m) : m_(m) {}

  bool sides(int d, const Val& line, const VSys& a, const VSys& b) {
    if (!(system_cofib(a) == system_cofib(b))) return false;
    for (const auto& x : a)
      for (const auto& y : b)
        if (auto f = face_meet(x.face, y.face))
          if (!value(d, m_.face(line, *f), m_.face(x.value, *f), m_.face(y.value, *f))) return false;
    return true;
  }

  // Compares two Kan nodes after renaming both binders to a shared name.
  template <class K>
  bool kan(int d, const K& a, const K& b, bool compare_types) {
    Name k = fresh_name(name_hint(a.dim));
    Val ta = m_.act(a.type, a.dim, var(k));
    Val tb = m_.act(b.type, b.dim, var(k));
    if (compare_types && !type(d, ta, tb)) return false;
    return sides(d, ta, m_.act(a.sides, a.dim, var(k)), m_.act(b.sides, b.dim, var(k)));
  }

  bool value(int d, const Val& ty, const Val& a, const Val& b) {
    if (a == b) return true;
    using namespace value;
    if (auto pi = as<Pi>(ty)) {
      Val x = m_.fresh_var(d, pi->dom);
      return value(d + 1, m_.instantiate(pi->cod, x), m_.app(a, x), m_.app(b, x));
    }
    if (auto sg = as<Sigma>(ty)) {
      Val a1 = m_.fst(a);
      return value(d, sg->dom, a1, m_.fst(b)) && value(d, m_.instantiate(sg->cod, a1), m_.snd(a), m_.snd(b));
    }
    if (auto p = as<Path>(ty)) {
      Name k = fresh_name(name_hint(p->dim));
      return value(d, m_.act(p->type, p->dim, var(k)), m_.papp(a, var(k)), m_.papp(b, var(k)));
    }
    if (auto g = as<Glue>(ty)) {
      if (!value(d, g->base, m_.unglue(a, g->base, g->equivs), m_.unglue(b, g->base, g->equivs))) return false;
      for (const auto& e : g->equivs)
        if (!value(d, m_.face(e.value.type, e.face), m_.face(a, e.face), m_.face(b, e.face))) return false;
      return true;
    }
    if (as<U>(ty)) return type(d, a, b);
    if (auto id = as<Id>(ty)) {
      auto pa = as<IdPair>(a);
      auto pb = as<IdPair>(b);
      if (pa && pb)
        return pa->cof == pb->cof && value(d, m_.path_type(id->type, id->left, id->right), pa->path, pb->path);
      if (pa || pb) return false;
      return neutral(d, a, b);
    }
    if (as<Nat>(ty)) {
      if (as<Zero>(a) && as<Zero>(b)) return true;
      auto sa = as<Succ>(a);
      auto sb = as<Succ>(b);
      if (sa && sb) return value(d, ty, sa->pred, sb->pred);
      if (sa || sb || as<Zero>(a) || as<Zero>(b)) return false;
      return neutral(d, a, b);
    }
    if (auto s = as<Susp>(ty)) {
      if (as<North>(a) && as<North>(b)) return true;
      if (as<South>(a) && as<South>(b)) return true;
      auto ma = as<Merid>(a);
      auto mb = as<Merid>(b);
      if (ma && mb) return dim_equal(ma->at, mb->at) && value(d, s->type, ma->arg, mb->arg);
      auto ha = as<HComp>(a);
      auto hb = as<HComp>(b);
      if (ha && hb) return value(d, ty, ha->base, hb->base) && kan(d, *ha, *hb, false);
      return neutral(d, a, b);
    }
    return neutral(d, a, b);
  }

  bool type(int d, const Val& a, const Val& b) {
    if (a == b) return true;
    using namespace value;
    if (auto ua = as<U>(a)) {
      auto ub = as<U>(b);
      return ub && ua->level == ub->level;
    }
    if (auto pa = as<Pi>(a)) {
      auto pb = as<Pi>(b);
      if (!pb || !type(d, pa->dom, pb->dom)) return false;
      Val x = m_.fresh_var(d, pa->dom);
      return type(d + 1, m_.instantiate(pa->cod, x), m_.instantiate(pb->cod, x));
    }
    if (auto sa = as<Sigma>(a)) {
      auto sb = as<Sigma>(b);
      if (!sb || !type(d, sa->dom, sb->dom)) return false;
      Val x = m_.fresh_var(d, sa->dom);
      return type(d + 1, m_.instantiate(sa->cod, x), m_.instantiate(sb->cod, x));
    }
    if (as<Nat>(a)) return as<Nat>(b) != nullptr;
    if (auto pa = as<Path>(a)) {
      auto pb = as<Path>(b);
      if (!pb) return false;
      Name k = fresh_name(name_hint(pa->dim));
      Val la = m_.act(pa->type, pa->dim, var(k));
      if (!type(d, la, m_.act(pb->type, pb->dim, var(k)))) return false;
      return value(d, m_.act(la, k, DimExpr::zero()), pa->left, pb->left) &&
             value(d, m_.act(la, k, DimExpr::one()), pa->right, pb->right);
    }
    if (auto ga = as<Glue>(a)) {
      auto gb = as<Glue>(b);
      if (!gb || !type(d, ga->base, gb->base)) return false;
      if (!(system_cofib(ga->equivs) == system_cofib(gb->equivs))) return false;
      Val equiv = m_.core("%Equiv");
      for (const auto& x : ga->equivs)
        for (const auto& y : gb->equivs) {
          auto f = face_meet(x.face, y.face);
          if (!f) continue;
          Val tx = m_.face(x.value.type, *f);
          if (!type(d, tx, m_.face(y.value.type, *f))) return false;
          Val ety = m_.app(m_.app(equiv, tx), m_.face(ga->base, *f));
          if (!value(d, ety, m_.face(x.value.equiv, *f), m_.face(y.value.equiv, *f))) return false;
        }
      return true;
    }
    if (auto ia = as<Id>(a)) {
      auto ib = as<Id>(b);
      return ib && type(d, ia->type, ib->type) && value(d, ia->type, ia->left, ib->left) &&
             value(d, ia->type, ia->right, ib->right);
    }
    if (auto sa = as<Susp>(a)) {
      auto sb = as<Susp>(b);
      return sb && type(d, sa->type, sb->type);
    }
    return neutral(d, a, b);
  }

  bool neutral(int d, const Val& a, const Val& b) {
    if (a == b) return true;
    using namespace value;
    if (a->node.index() != b->node.index()) return false;
    if (auto x = as<Var>(a)) return x->level == as<Var>(b)->level;
    if (auto x = as<App>(a)) {
      auto y = as<App>(b);
      if (!neutral(d, x->fun, y->fun)) return false;
      Val pi_type = m_.type_of(x->fun);
      auto pi = as<Pi>(pi_type);
      return pi && value(d, pi->dom, x->arg, y->arg);
    }
    if (auto x = as<Fst>(a)) return neutral(d, x->pair, as<Fst>(b)->pair);
    if (auto x = as<Snd>(a)) return neutral(d, x->pair, as<Snd>(b)->pair);
    if (auto x = as<PApp>(a)) {
      auto y = as<PApp>(b);
      return dim_equal(x->at, y->at) && neutral(d, x->path, y->path);
    }
    if (auto x = as<NatRec>(a)) {
      auto y = as<NatRec>(b);
      if (!neutral(d, x->target, y->target)) return false;
      Val n = m_.fresh_var(d, mk(Nat{}));
      Val px = m_.instantiate(x->motive, n);
      if (!type(d + 1, px, m_.instantiate(y->motive, n))) return false;
      Val p0 = m_.instantiate(x->motive, mk(Zero{}));
      if (!value(d, p0, x->zero_case, y->zero_case)) return false;
      Val ih = m_.fresh_var(d + 1, px);
      return value(d + 2, m_.instantiate(x->motive, mk(Succ{n})), m_.instantiate(x->succ_case, n, ih),
                   m_.instantiate(y->succ_case, n, ih));
    }
    if (auto x = as<Unglue>(a)) return neutral(d, x->arg, as<Unglue>(b)->arg);
    if (auto x = as<J>(a)) {
      auto y = as<J>(b);
      if (!neutral(d, x->target, y->target)) return false;
      Val id_type = m_.type_of(x->target);
      auto id = as<Id>(id_type);
      if (!id) return false;
      Val vx = m_.fresh_var(d, id->type);
      Val vy = m_.fresh_var(d + 1, id->type);
      Val vp = m_.fresh_var(d + 2, mk(Id{id->type, vx, vy}));
      if (!type(d + 3, m_.instantiate(x->motive, vx, vy, vp), m_.instantiate(y->motive, vx, vy, vp))) return false;
      Val refl = mk(IdPair{Cofib::top(), mk(PLam{fresh_name("_"), vx})});
      return value(d + 1, m_.instantiate(x->motive, vx, vx, refl), m_.instantiate(x->refl_case, vx),
                   m_.instantiate(y->refl_case, vx));
    }
    if (auto x = as<SuspRec>(a)) {
      auto y = as<SuspRec>(b);
      if (!neutral(d, x->target, y->target)) return false;
      Val st_type = m_.type_of(x->target);
      auto st = as<Susp>(st_type);
      if (!st) return false;
      Val s = m_.fresh_var(d, mk(Susp{*st}));
      if (!type(d + 1, m_.instantiate(x->motive, s), m_.instantiate(y->motive, s))) return false;
      if (!value(d, m_.instantiate(x->motive, mk(North{})), x->north_case, y->north_case)) return false;
      if (!value(d, m_.instantiate(x->motive, mk(South{})), x->south_case, y->south_case)) return false;
      Val arg = m_.fresh_var(d, st->type);
      Name k = fresh_name("k");
      Val mty = mk(Path{k, m_.instantiate(x->motive, m_.merid(arg, var(k))), x->north_case, x->south_case});
      return value(d + 1, mty, m_.instantiate(x->merid_case, arg), m_.instantiate(y->merid_case, arg));
    }
    if (auto x = as<Comp>(a)) {
      auto y = as<Comp>(b);
      Val t0 = m_.act(x->type, x->dim, DimExpr::zero());
      return kan(d, *x, *y, true) && value(d, t0, x->base, y->base);
    }
    if (auto x = as<Fill>(a)) {
      auto y = as<Fill>(b);
      if (x->from_one != y->from_one || !dim_equal(x->at, y->at)) return false;
      Val t0 = m_.act(x->type, x->dim, DimExpr::constant(x->from_one));
      return kan(d, *x, *y, true) && value(d, t0, x->base, y->base);
    }
    if (auto x = as<HComp>(a)) {
      auto y = as<HComp>(b);
      return type(d, x->type, y->type) && value(d, x->type, x->base, y->base) && kan(d, *x, *y, false);
    }
    return false;
  }

 private:
  Machine& m_;
};

}  // namespace

bool Machine::conv(int depth, const Val& type, const Val& a, const Val& b) {
  return Conv(*this).value(depth, type, a, b);
}

bool Machine::conv_type(int depth, const Val& a, const Val& b) { return Conv(*this).type(depth, a, b); }

}  // namespace cctt
