#include "cctt/machine.hpp"

namespace cctt {

namespace {

Val mk(Value::Node n) { return make_value(std::move(n)); }

DimExpr var(Name n) { return DimExpr::var(n); }

VSys constant_sides(const Cofib& psi, const Val& u, Machine& m) {
  VSys out;
  for (const auto& f : psi.faces()) out.push_back({f, m.face(u, f)});
  return out;
}

}  // namespace

Val Machine::comp(Name i, const Val& type, const Val& base, const VSys& sides) {
  for (const auto& b : sides)
    if (b.face.is_top()) return act(b.value, i, DimExpr::one());
  if (mode_ == Mode::PrimitiveFill) return fill(i, false, type, base, sides, DimExpr::one());
  return comp_strict(i, type, base, sides);
}

Val Machine::stuck_comp(Name i, const Val& type, const Val& base, const VSys& sides) {
  return mk(value::Comp{i, type, sides, base});
}

Val Machine::comp_strict(Name i, const Val& type, const Val& base, const VSys& sides) {
  if (auto s = as<value::Sigma>(type)) return comp_sigma(i, *s, base, sides);
  if (auto p = as<value::Path>(type)) return comp_path(i, *p, base, sides);
  if (as<value::Nat>(type)) return comp_nat(i, type, base, sides);
  if (as<value::U>(type)) return comp_universe(i, base, sides);
  if (auto g = as<value::Glue>(type)) return comp_glue(i, *g, base, sides);
  if (auto d = as<value::Id>(type)) return comp_id(i, *d, base, sides);
  if (auto s = as<value::Susp>(type)) return comp_susp(i, *s, base, sides);
  // Π computes when applied; everything else is stuck.
  return stuck_comp(i, type, base, sides);
}

Val Machine::fill_line(Name i, const Val& type, const Val& base, const VSys& sides) {
  if (mode_ == Mode::PrimitiveFill) {
    Name k = fresh_name(name_hint(i));
    return fill(k, false, act(type, i, var(k)), base, act(sides, i, var(k)), var(i));
  }
  // comp^j A(i/\j) [φ -> u(i/\j), (i=0) -> u0] u0
  Name j = fresh_name("j");
  DimExpr ij = dim_meet(var(i), var(j));
  VSys squeezed = act(sides, i, ij);
  squeezed.push_back({Face::atom(i, false), base});
  return comp(j, act(type, i, ij), base, squeezed);
}

Val Machine::fill(Name i, bool from_one, const Val& type, const Val& base, const VSys& sides,
                  const DimExpr& r) {
  for (const auto& b : sides)
    if (b.face.is_top()) return act(b.value, i, r);
  if (auto c = r.as_constant(); c && *c == from_one) return base;
  if (mode_ == Mode::PrimitiveFill) return mk(value::Fill{i, from_one, type, sides, base, r});
  if (!from_one) return act(fill_line(i, type, base, sides), i, r);
  // Reverse the line, fill from 0, then read off at 1 - r.
  Name k = fresh_name(name_hint(i));
  DimExpr rev_k = dim_reverse(var(k));
  Val line = fill_line(k, act(type, i, rev_k), base, act(sides, i, rev_k));
  return act(line, k, dim_reverse(r));
}

Val Machine::comp_sigma(Name i, const value::Sigma& s, const Val& base, const VSys& sides) {
  VSys firsts, seconds;
  for (const auto& b : sides) {
    firsts.push_back({b.face, fst(b.value)});
    seconds.push_back({b.face, snd(b.value)});
  }
  Val first_line = fill_line(i, s.dom, fst(base), firsts);
  Val first = act(first_line, i, DimExpr::one());
  Val second = comp(i, instantiate(s.cod, first_line), snd(base), seconds);
  return mk(value::Pair{first, second});
}

Val Machine::comp_path(Name i, const value::Path& p, const Val& base, const VSys& sides) {
  Name k = fresh_name(name_hint(p.dim));
  VSys ks;
  for (const auto& b : sides) ks.push_back({b.face, papp(b.value, var(k))});
  ks.push_back({Face::atom(k, false), p.left});
  ks.push_back({Face::atom(k, true), p.right});
  return mk(value::PLam{k, comp(i, act(p.type, p.dim, var(k)), papp(base, var(k)), ks)});
}

Val Machine::comp_nat(Name i, const Val& type, const Val& base, const VSys& sides) {
  auto all_are = [&](auto tag) {
    using T = decltype(tag);
    if (!as<T>(base)) return false;
    for (const auto& b : sides)
      if (!as<T>(b.value)) return false;
    return true;
  };
  if (all_are(value::Zero{})) return base;
  if (all_are(value::Succ{})) {
    VSys preds;
    for (const auto& b : sides) preds.push_back({b.face, as<value::Succ>(b.value)->pred});
    return mk(value::Succ{comp(i, type, as<value::Succ>(base)->pred, preds)});
  }
  return stuck_comp(i, type, base, sides);
}

Val Machine::comp_universe(Name i, const Val& base, const VSys& sides) {
  // comp^i U [φ -> E] A = Glue A [φ -> (E(1), transpEquiv E(0) E(1) E)]
  Val transp_equiv = core("%transpEquiv");
  GlueSys equivs;
  for (const auto& b : sides) {
    Val e0 = act(b.value, i, DimExpr::zero());
    Val e1 = act(b.value, i, DimExpr::one());
    Name k = fresh_name("k");
    Val line = mk(value::PLam{k, act(b.value, i, var(k))});
    equivs.push_back({b.face, GlueEquiv{e1, app(app(app(transp_equiv, e0), e1), line)}});
  }
  return glue_type(base, std::move(equivs));
}

Val Machine::comp_glue(Name i, const value::Glue& g, const Val& wi0, const VSys& ws) {
  const DimExpr zero = DimExpr::zero();
  const DimExpr one = DimExpr::one();
  const Val& a = g.base;
  Val ai1 = act(a, i, one);

  VSys vs;
  for (const auto& b : ws) vs.push_back({b.face, unglue(b.value, face(a, b.face), face_sys(g.equivs, b.face))});
  VSys vsi1 = act(vs, i, one);
  VSys wsi1 = act(ws, i, one);
  Val vi0 = unglue(wi0, act(a, i, zero), act(g.equivs, i, zero));
  Val vi1p = comp(i, a, vi0, vs);

  // Faces of the Glue that hold along the whole line: fill there directly.
  VSys fibers;
  for (const auto& b : g.equivs) {
    if (b.face.mentions(i)) continue;
    const Face& gam = b.face;
    Val t = face(b.value.type, gam);
    Val e = face(b.value.equiv, gam);
    Val us = fill_line(i, t, face(wi0, gam), face_sys(ws, gam));
    Name k = fresh_name("k");
    VSys lsides = face_sys(vs, gam);
    lsides.push_back({Face::atom(k, true), app(fst(e), us)});
    Val ls = mk(value::PLam{k, comp(i, face(a, gam), face(vi0, gam), lsides)});
    fibers.push_back({gam, mk(value::Pair{act(us, i, one), ls})});
  }

  // At i = 1 extend the partial fiber over each face by contractibility.
  Val fiber = core("%fiber");
  VSys exts;
  for (const auto& b : act(g.equivs, i, one)) {
    const Face& del = b.face;
    Val t1 = face(b.value.type, del);
    Val e1 = face(b.value.equiv, del);
    Val a1 = face(ai1, del);
    Val y = face(vi1p, del);
    Val fib_type = app(app(app(app(fiber, t1), a1), fst(e1)), y);
    Val contr = app(snd(e1), y);
    VSys partial;
    for (std::size_t n = 0; n < wsi1.size(); ++n) {
      auto m = face_meet(wsi1[n].face, del);
      if (!m) continue;
      Val v1 = face(vsi1[n].value, del);
      partial.push_back({m->without(del), mk(value::Pair{face(wsi1[n].value, del),
                                                         mk(value::PLam{fresh_name("_"), v1})})});
    }
    for (const auto& fb : fibers)
      if (auto m = face_meet(fb.face, del)) partial.push_back({m->without(del), face(fb.value, del)});
    Name k = fresh_name("k");
    VSys ksides;
    for (const auto& p : partial)
      ksides.push_back({p.face, papp(app(face(snd(contr), p.face), p.value), var(k))});
    exts.push_back({del, comp(k, fib_type, fst(contr), ksides)});
  }

  Name k = fresh_name("k");
  VSys final_sides;
  VSys parts;
  for (const auto& x : exts) {
    final_sides.push_back({x.face, papp(snd(x.value), var(k))});
    parts.push_back({x.face, fst(x.value)});
  }
  for (const auto& b : vsi1) final_sides.push_back(b);
  Val vi1 = comp(k, ai1, vi1p, final_sides);
  return glue_elem(vi1, std::move(parts));
}

Val Machine::comp_id(Name i, const value::Id& t, const Val& base, const VSys& sides) {
  auto b0 = as<value::IdPair>(base);
  if (!b0) return stuck_comp(i, mk(value::Id{t}), base, sides);
  Cofib omega;
  VSys paths;
  for (const auto& b : sides) {
    auto p = as<value::IdPair>(b.value);
    if (!p) return stuck_comp(i, mk(value::Id{t}), base, sides);
    omega = cof_or(omega, cof_and(Cofib::of(b.face), cof_subst(p->cof, i, DimExpr::one())));
    paths.push_back({b.face, p->path});
  }
  Val path = comp(i, path_type(t.type, t.left, t.right), b0->path, paths);
  return mk(value::IdPair{omega, path});
}

Val Machine::transp_susp(Name k, const Val& type_line, const Cofib& psi, const Val& u) {
  if (psi.is_top()) return u;
  if (as<value::North>(u) || as<value::South>(u)) return u;
  const Val& a_line = as<value::Susp>(type_line)->type;
  if (auto m = as<value::Merid>(u))
    return merid(comp(k, a_line, m->arg, constant_sides(psi, m->arg, *this)), m->at);
  if (auto h = as<value::HComp>(u)) {
    VSys sides;
    for (const auto& b : h->sides) sides.push_back({b.face, transp_susp(k, type_line, psi, b.value)});
    return hcomp(h->dim, act(type_line, k, DimExpr::one()), transp_susp(k, type_line, psi, h->base), sides);
  }
  return stuck_comp(k, type_line, u, constant_sides(psi, u, *this));
}

Val Machine::comp_susp(Name i, const value::Susp& s, const Val& base, const VSys& sides) {
  Val type = mk(value::Susp{s});
  if (!(s.type->mask & name_bit(i))) return hcomp(i, type, base, sides);
  // hcomp^j Susp(A 1) [φ -> transp^k (Susp A(j\/k)) [j=1] (u j)] (transp^i (Susp A) u0)
  Name j = fresh_name("j");
  Name k = fresh_name("k");
  VSys hsides;
  Val line_jk = act(type, i, dim_join(var(j), var(k)));
  for (const auto& b : sides)
    hsides.push_back({b.face, transp_susp(k, line_jk, Cofib::atom(j, true), act(b.value, i, var(j)))});
  Val start = transp_susp(i, type, Cofib::bottom(), base);
  return hcomp(j, act(type, i, DimExpr::one()), start, hsides);
}

Val Machine::comp_pi_app(const value::Comp& c, const Val& arg) {
  // Transport the argument backwards, apply, and compose forwards.
  Name j = fresh_name(name_hint(c.dim));
  Val type = act(c.type, c.dim, var(j));
  VSys sides = act(c.sides, c.dim, var(j));
  const auto& pi = std::get<value::Pi>(type->node);
  Val w = fill(j, true, pi.dom, arg, {}, var(j));
  Val w0 = act(w, j, DimExpr::zero());
  VSys applied;
  for (const auto& b : sides) applied.push_back({b.face, app(b.value, face(w, b.face))});
  return comp(j, instantiate(pi.cod, w), app(c.base, w0), applied);
}

}  // namespace cctt
