#include "cctt/checker.hpp"

#include <algorithm>
#include <chrono>

#include "cctt/printer.hpp"

namespace cctt {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

Val mk(Value::Node n) { return make_value(std::move(n)); }

DimExpr var(Name n) { return DimExpr::var(n); }

}  // namespace

Context Context::bind(Name hint, const Val& type) const {
  Context c = *this;
  c.env = env.push(mk(value::Var{depth, type}));
  ++c.depth;
  c.names.push_back(hint);
  c.types.push_back(type);
  return c;
}

Context Context::bind_dim(Name syn, Name sem) const {
  Context c = *this;
  c.env = env.push_dim(syn, var(sem));
  c.rename[sem] = syn;
  return c;
}

Context Checker::restrict(const Context& ctx, const Face& f) {
  Context c = ctx;
  c.env = m_.face(ctx.env, f);
  for (auto& t : c.types) t = m_.face(t, f);
  for (const auto& [n, b] : f.atoms()) c.rename.erase(n);
  c.restrictions.push_back(f);
  return c;
}

std::string Checker::show_type(const Context& ctx, const Val& type) {
  try {
    return print_term(m_.quote_type(ctx.depth, type, ctx.rename), ctx.names);
  } catch (const std::exception&) {
    return "<unprintable type>";
  }
}

std::string Checker::show(const Context& ctx, const Val& type, const Val& v) {
  try {
    return print_term(m_.quote(ctx.depth, type, v, ctx.rename), ctx.names);
  } catch (const std::exception&) {
    return "<unprintable term>";
  }
}

void Checker::mismatch(const Context& ctx, Loc loc, const std::string& what, const Val& expected,
                       const Val& actual) {
  std::string e = show_type(ctx, expected);
  std::string a = show_type(ctx, actual);
  throw CheckError("mismatch", loc, what + ": expected " + e + ", got " + a, e, a);
}

bool Checker::convert(const Context& ctx, const Val& type, const Val& a, const Val& b) {
  return m_.conv(ctx.depth, type, a, b);
}

Val Checker::equiv_type(const Val& t, const Val& a) { return m_.app(m_.app(m_.core("%Equiv"), t), a); }

Cofib Checker::syntactic(const Context& ctx, const Face& f) const {
  Cofib c = Cofib::top();
  for (const auto& [n, b] : f.atoms()) {
    auto it = ctx.rename.find(n);
    c = cof_and(c, Cofib::atom(it == ctx.rename.end() ? n : it->second, b));
  }
  return c;
}

void Checker::subsume(const Context& ctx, Loc loc, const Val& actual, const Val& expected) {
  auto ua = as<value::U>(actual);
  auto ue = as<value::U>(expected);
  if (ua && ue) {
    if (ua->level <= ue->level) return;
    throw CheckError("universe", loc,
                     "universe level too large: U" + std::to_string(ua->level) + " is not contained in U" +
                         std::to_string(ue->level),
                     "U" + std::to_string(ue->level), "U" + std::to_string(ua->level));
  }
  if (!m_.conv_type(ctx.depth, actual, expected)) mismatch(ctx, loc, "type mismatch", expected, actual);
}

void Checker::check_compatible(const Context& ctx, const std::vector<Branch>& branches, const Val& type,
                               bool, Loc loc) {
  for (std::size_t k = 0; k < branches.size(); ++k)
    for (std::size_t l = k + 1; l < branches.size(); ++l) {
      auto m = face_meet(branches[k].face, branches[l].face);
      if (!m) continue;
      if (!convert(ctx, m_.face(type, *m), m_.face(branches[k].value, *m), m_.face(branches[l].value, *m)))
        throw CheckError("incompatible-system", loc,
                         "branches " + print_cofib(syntactic(ctx, branches[k].face)) + " and " +
                             print_cofib(syntactic(ctx, branches[l].face)) + " disagree on their overlap " +
                             print_cofib(syntactic(ctx, *m)));
    }
}

System<Line> Checker::check_lines(const Context& ctx, const System<Line>& sides, Name sem, const Val& line,
                                  const Val& base, bool at_one) {
  System<Line> out;
  std::vector<Branch> branches;
  const DimExpr end = DimExpr::constant(at_one);
  Loc loc{};
  for (const auto& b : sides.branches) {
    loc = b.value.body->loc;
    for (const auto& f : m_.eval_cof(ctx.env, b.cof).faces()) {
      Context cf = restrict(ctx, f).bind_dim(b.value.dim, sem);
      Val af = m_.face(line, f);
      TermPtr u = check(cf, b.value.body, af);
      Val uv = m_.eval(cf.env, u);
      Val at_end = m_.act(uv, sem, end);
      Val base_f = m_.face(base, f);
      Val ty_end = m_.act(af, sem, end);
      if (!convert(cf, ty_end, at_end, base_f)) {
        std::string e = show(cf, ty_end, base_f);
        std::string a = show(cf, ty_end, at_end);
        throw CheckError("boundary", b.value.body->loc,
                         "system branch " + print_cofib(syntactic(ctx, f)) + " does not agree with the base at " +
                             name_text(b.value.dim) + "=" + (at_one ? "1" : "0") + ": expected " + e + ", got " + a,
                         e, a);
      }
      branches.push_back({f, uv});
      out.branches.push_back({syntactic(ctx, f), Line{b.value.dim, u}});
    }
  }
  check_compatible(ctx, branches, line, true, loc);
  return out;
}

TermPtr Checker::check_lam(const Context& ctx, const TermPtr& t, const Val& type) {
  const auto& lam = std::get<term::Lam>(t->node);
  auto pi = as<value::Pi>(type);
  if (!pi)
    throw CheckError("mismatch", t->loc, "a lambda cannot have type " + show_type(ctx, type),
                     show_type(ctx, type), "a function");
  TermPtr dom;
  if (lam.dom) {
    auto [d, level] = check_type(ctx, lam.dom);
    (void)level;
    Val dv = m_.eval(ctx.env, d);
    if (!m_.conv_type(ctx.depth, dv, pi->dom)) mismatch(ctx, lam.dom->loc, "lambda domain", pi->dom, dv);
    dom = d;
  } else {
    dom = m_.quote_type(ctx.depth, pi->dom, ctx.rename);
  }
  Context inner = ctx.bind(lam.hint, pi->dom);
  TermPtr body = check(inner, lam.body, m_.instantiate(pi->cod, inner.env.lookup(0)));
  return make_term(term::Lam{lam.hint, dom, body}, t->loc);
}

TermPtr Checker::check_glue_elem(const Context& ctx, const TermPtr& t, const Val& type) {
  const auto& ge = std::get<term::GlueElem>(t->node);
  auto g = as<value::Glue>(type);
  // Under a restriction that makes a branch total the Glue type has already
  // reduced to that branch's type, and the element is its part.
  if (!g)
    for (const auto& b : ge.parts.branches)
      if (m_.eval_cof(ctx.env, b.cof).is_top()) return check(ctx, b.value, type);
  if (!g)
    throw CheckError("mismatch", t->loc, "glue cannot have type " + show_type(ctx, type), show_type(ctx, type),
                     "a Glue type");
  TermPtr base = check(ctx, ge.base, g->base);
  Val bv = m_.eval(ctx.env, base);
  System<TermPtr> parts;
  std::vector<Branch> branches;
  std::vector<Face> faces;
  for (const auto& b : ge.parts.branches)
    for (const auto& f : m_.eval_cof(ctx.env, b.cof).faces()) {
      Context cf = restrict(ctx, f);
      Val tf = m_.face(type, f);
      Val equiv;
      for (const auto& e : m_.face_sys(g->equivs, f))
        if (e.face.is_top()) equiv = e.value.equiv;
      if (!equiv)
        throw CheckError("mismatch", b.value->loc,
                         "glue branch " + print_cofib(syntactic(ctx, f)) + " lies outside the Glue cofibration");
      TermPtr u = check(cf, b.value, tf);
      Val uv = m_.eval(cf.env, u);
      Val image = m_.app(m_.fst(equiv), uv);
      Val base_f = m_.face(bv, f);
      Val af = m_.face(g->base, f);
      if (!convert(cf, af, image, base_f)) {
        std::string e = show(cf, af, base_f);
        std::string a = show(cf, af, image);
        throw CheckError("boundary", b.value->loc,
                         "glue branch " + print_cofib(syntactic(ctx, f)) +
                             " is not sent to the base by the equivalence: expected " + e + ", got " + a,
                         e, a);
      }
      branches.push_back({f, uv});
      faces.push_back(f);
      parts.branches.push_back({syntactic(ctx, f), u});
    }
  if (!(Cofib::from_faces(faces) == system_cofib(g->equivs)))
    throw CheckError("mismatch", t->loc, "the glue system must cover exactly the cofibration of its Glue type");
  check_compatible(ctx, branches, type, false, t->loc);
  return make_term(term::GlueElem{base, std::move(parts)}, t->loc);
}

TermPtr Checker::check(const Context& ctx, const TermPtr& t0, const Val& type) {
  TermPtr t = std::holds_alternative<term::Sub>(t0->node) ? normalize_subst(t0) : t0;
  if (auto u = as<value::U>(type)) {
    auto [elab, level] = check_type(ctx, t);
    if (level > u->level)
      throw CheckError("universe", t->loc,
                       "type of level " + std::to_string(level) + " does not fit in U" + std::to_string(u->level),
                       "U" + std::to_string(u->level), "U" + std::to_string(level));
    return elab;
  }
  auto infer_and_subsume = [&]() {
    auto [elab, actual] = infer(ctx, t);
    subsume(ctx, t->loc, actual, type);
    return elab;
  };
  using namespace term;
  return std::visit(
      overloaded{
          [&](const Lam&) { return check_lam(ctx, t, type); },
          [&](const Pair& n) -> TermPtr {
            auto sg = as<value::Sigma>(type);
            if (!sg) return infer_and_subsume();
            TermPtr a = check(ctx, n.first, sg->dom);
            TermPtr b = check(ctx, n.second, m_.instantiate(sg->cod, m_.eval(ctx.env, a)));
            return make_term(Pair{a, b}, t->loc);
          },
          [&](const PLam& n) -> TermPtr {
            auto p = as<value::Path>(type);
            if (!p)
              throw CheckError("mismatch", t->loc, "a path abstraction cannot have type " + show_type(ctx, type),
                               show_type(ctx, type), "a path type");
            Name sem = fresh_name(name_hint(n.dim));
            Context inner = ctx.bind_dim(n.dim, sem);
            Val line = m_.act(p->type, p->dim, var(sem));
            TermPtr body = check(inner, n.body, line);
            Val v = m_.eval(inner.env, body);
            for (bool b : {false, true}) {
              Val ty = m_.act(line, sem, DimExpr::constant(b));
              Val got = m_.act(v, sem, DimExpr::constant(b));
              const Val& want = b ? p->right : p->left;
              if (!convert(ctx, ty, got, want)) {
                std::string e = show(ctx, ty, want);
                std::string a = show(ctx, ty, got);
                throw CheckError("boundary", t->loc,
                                 std::string("path endpoint at ") + name_text(n.dim) + "=" + (b ? "1" : "0") +
                                     ": expected " + e + ", got " + a,
                                 e, a);
              }
            }
            return make_term(PLam{n.dim, body}, t->loc);
          },
          [&](const GlueElem&) { return check_glue_elem(ctx, t, type); },
          [&](const Refl& n) -> TermPtr {
            auto id = as<value::Id>(type);
            if (!id) return infer_and_subsume();
            TermPtr a = check(ctx, n.elem, id->type);
            Val av = m_.eval(ctx.env, a);
            if (!convert(ctx, id->type, av, id->left) || !convert(ctx, id->type, av, id->right))
              throw CheckError("mismatch", t->loc,
                               "refl " + show(ctx, id->type, av) + " does not connect " +
                                   show(ctx, id->type, id->left) + " and " + show(ctx, id->type, id->right));
            return make_term(Refl{a}, t->loc);
          },
          [&](const IdPair& n) -> TermPtr {
            auto id = as<value::Id>(type);
            if (!id)
              throw CheckError("mismatch", t->loc, "idpair cannot have type " + show_type(ctx, type),
                               show_type(ctx, type), "an identity type");
            Val pty = m_.path_type(id->type, id->left, id->right);
            TermPtr p = check(ctx, n.path, pty);
            Val pv = m_.eval(ctx.env, p);
            Val constant = mk(value::PLam{fresh_name("_"), id->left});
            for (const auto& f : m_.eval_cof(ctx.env, n.cof).faces())
              if (!convert(ctx, m_.face(pty, f), m_.face(pv, f), m_.face(constant, f)))
                throw CheckError("boundary", t->loc,
                                 "idpair path is not constant on " + print_cofib(syntactic(ctx, f)));
            return make_term(IdPair{n.cof, p}, t->loc);
          },
          [&](const North&) -> TermPtr {
            if (!as<value::Susp>(type)) return infer_and_subsume();
            return t;
          },
          [&](const South&) -> TermPtr {
            if (!as<value::Susp>(type)) return infer_and_subsume();
            return t;
          },
          [&](const Merid& n) -> TermPtr {
            auto s = as<value::Susp>(type);
            if (!s) return infer_and_subsume();
            return make_term(Merid{check(ctx, n.arg, s->type), n.at}, t->loc);
          },
          [&](const auto&) -> TermPtr { return infer_and_subsume(); },
      },
      t->node);
}

std::pair<TermPtr, Val> Checker::infer(const Context& ctx, const TermPtr& t0) {
  TermPtr t = std::holds_alternative<term::Sub>(t0->node) ? normalize_subst(t0) : t0;
  const Loc loc = t->loc;
  auto cannot = [&](const char* what) -> std::pair<TermPtr, Val> {
    throw CheckError("mismatch", loc, std::string("cannot infer the type of ") + what + "; add an annotation");
  };
  auto as_type = [&]() -> std::pair<TermPtr, Val> {
    auto [elab, level] = check_type(ctx, t);
    return {elab, mk(value::U{level})};
  };
  auto eval = [&](const Context& c, const TermPtr& e) { return m_.eval(c.env, e); };
  using namespace term;
  return std::visit(
      overloaded{
          [&](const Var& n) -> std::pair<TermPtr, Val> {
            int level = ctx.depth - 1 - n.index;
            if (level < 0) throw CheckError("unbound", loc, "variable out of scope");
            return {t, ctx.types[level]};
          },
          [&](const Global& n) -> std::pair<TermPtr, Val> {
            const GlobalEntry* e = globals_.find(n.name);
            if (!e) throw CheckError("unbound", loc, "unbound identifier " + name_text(n.name));
            if (e->failed)
              throw CheckError("unbound", loc, name_text(n.name) + " refers to a definition that failed to check");
            return {t, e->type};
          },
          [&](const Universe&) { return as_type(); },
          [&](const Pi&) { return as_type(); },
          [&](const Sigma&) { return as_type(); },
          [&](const Nat&) { return as_type(); },
          [&](const PathP&) { return as_type(); },
          [&](const term::Glue&) { return as_type(); },
          [&](const term::Id&) { return as_type(); },
          [&](const term::Susp&) { return as_type(); },
          [&](const Lam& n) -> std::pair<TermPtr, Val> {
            if (!n.dom) return cannot("an unannotated lambda");
            auto [dom, level] = check_type(ctx, n.dom);
            (void)level;
            Val dv = eval(ctx, dom);
            Context inner = ctx.bind(n.hint, dv);
            auto [body, bt] = infer(inner, n.body);
            TermPtr cod = m_.quote_type(inner.depth, bt, inner.rename);
            return {make_term(Lam{n.hint, dom, body}, loc), mk(value::Pi{n.hint, dv, Closure{ctx.env, cod}})};
          },
          [&](const App& n) -> std::pair<TermPtr, Val> {
            auto [f, ft] = infer(ctx, n.fun);
            auto pi = as<value::Pi>(ft);
            if (!pi)
              throw CheckError("mismatch", n.fun->loc, "applying a term of non-function type " + show_type(ctx, ft),
                               "a function type", show_type(ctx, ft));
            TermPtr a = check(ctx, n.arg, pi->dom);
            return {make_term(App{f, a}, loc), m_.instantiate(pi->cod, eval(ctx, a))};
          },
          [&](const Pair& n) -> std::pair<TermPtr, Val> {
            auto [a, at] = infer(ctx, n.first);
            auto [b, bt] = infer(ctx, n.second);
            TermPtr cod = shift(m_.quote_type(ctx.depth, bt, ctx.rename), 1);
            return {make_term(Pair{a, b}, loc), mk(value::Sigma{intern("_"), at, Closure{ctx.env, cod}})};
          },
          [&](const Fst& n) -> std::pair<TermPtr, Val> {
            auto [p, pt] = infer(ctx, n.pair);
            auto sg = as<value::Sigma>(pt);
            if (!sg)
              throw CheckError("mismatch", loc, "projection from non-pair type " + show_type(ctx, pt),
                               "a Σ type", show_type(ctx, pt));
            return {make_term(Fst{p}, loc), sg->dom};
          },
          [&](const Snd& n) -> std::pair<TermPtr, Val> {
            auto [p, pt] = infer(ctx, n.pair);
            auto sg = as<value::Sigma>(pt);
            if (!sg)
              throw CheckError("mismatch", loc, "projection from non-pair type " + show_type(ctx, pt),
                               "a Σ type", show_type(ctx, pt));
            return {make_term(Snd{p}, loc), m_.instantiate(sg->cod, m_.fst(eval(ctx, p)))};
          },
          [&](const Zero&) -> std::pair<TermPtr, Val> { return {t, mk(value::Nat{})}; },
          [&](const Succ& n) -> std::pair<TermPtr, Val> {
            Val nat = mk(value::Nat{});
            return {make_term(Succ{check(ctx, n.pred, nat)}, loc), nat};
          },
          [&](const NatRec& n) -> std::pair<TermPtr, Val> {
            Val nat = mk(value::Nat{});
            auto [motive, level] = check_type(ctx.bind(n.var, nat), n.motive);
            (void)level;
            Closure mc{ctx.env, motive};
            TermPtr z = check(ctx, n.zero_case, m_.instantiate(mc, mk(value::Zero{})));
            Context c1 = ctx.bind(n.pred, nat);
            Val pv = c1.env.lookup(0);
            Context c2 = c1.bind(n.ih, m_.instantiate(mc, pv));
            TermPtr s = check(c2, n.succ_case, m_.instantiate(mc, mk(value::Succ{pv})));
            TermPtr target = check(ctx, n.target, nat);
            return {make_term(NatRec{n.var, motive, z, n.pred, n.ih, s, target}, loc),
                    m_.instantiate(mc, eval(ctx, target))};
          },
          [&](const PLam& n) -> std::pair<TermPtr, Val> {
            Name sem = fresh_name(name_hint(n.dim));
            Context inner = ctx.bind_dim(n.dim, sem);
            auto [body, bt] = infer(inner, n.body);
            Val v = eval(inner, body);
            return {make_term(PLam{n.dim, body}, loc),
                    mk(value::Path{sem, bt, m_.act(v, sem, DimExpr::zero()), m_.act(v, sem, DimExpr::one())})};
          },
          [&](const PApp& n) -> std::pair<TermPtr, Val> {
            auto [p, pt] = infer(ctx, n.path);
            auto path = as<value::Path>(pt);
            if (!path)
              throw CheckError("mismatch", loc, "path application to non-path type " + show_type(ctx, pt),
                               "a path type", show_type(ctx, pt));
            return {make_term(PApp{p, n.at}, loc), m_.act(path->type, path->dim, m_.eval_dim(ctx.env, n.at))};
          },
          [&](const GlueElem&) { return cannot("glue"); },
          [&](const term::Unglue& n) -> std::pair<TermPtr, Val> {
            auto [u, ut] = infer(ctx, n.arg);
            auto g = as<value::Glue>(ut);
            if (!g)
              throw CheckError("mismatch", loc, "unglue of a term of non-Glue type " + show_type(ctx, ut),
                               "a Glue type", show_type(ctx, ut));
            TermPtr ann = m_.quote_type(ctx.depth, ut, ctx.rename);
            return {make_term(term::Unglue{u, ann}, loc), g->base};
          },
          [&](const term::Comp& n) -> std::pair<TermPtr, Val> {
            Name sem = fresh_name(name_hint(n.type.dim));
            Context inner = ctx.bind_dim(n.type.dim, sem);
            auto [line, level] = check_type(inner, n.type.body);
            (void)level;
            Val lv = eval(inner, line);
            TermPtr base = check(ctx, n.base, m_.act(lv, sem, DimExpr::zero()));
            System<Line> sides = check_lines(ctx, n.sides, sem, lv, eval(ctx, base), false);
            return {make_term(term::Comp{Line{n.type.dim, line}, sides, base}, loc),
                    m_.act(lv, sem, DimExpr::one())};
          },
          [&](const term::Fill& n) -> std::pair<TermPtr, Val> {
            Name sem = fresh_name(name_hint(n.type.dim));
            Context inner = ctx.bind_dim(n.type.dim, sem);
            auto [line, level] = check_type(inner, n.type.body);
            (void)level;
            Val lv = eval(inner, line);
            TermPtr base = check(ctx, n.base, m_.act(lv, sem, DimExpr::constant(n.from_one)));
            System<Line> sides = check_lines(ctx, n.sides, sem, lv, eval(ctx, base), n.from_one);
            return {make_term(term::Fill{n.from_one, Line{n.type.dim, line}, sides, base, n.at}, loc),
                    m_.act(lv, sem, m_.eval_dim(ctx.env, n.at))};
          },
          [&](const term::HComp& n) -> std::pair<TermPtr, Val> {
            auto [ty, level] = check_type(ctx, n.type);
            (void)level;
            Val tv = eval(ctx, ty);
            if (!as<value::Susp>(tv))
              throw CheckError("mismatch", loc, "hcomp is only available at suspension types, not " +
                                                    show_type(ctx, tv));
            TermPtr base = check(ctx, n.base, tv);
            Name sem = fresh_name("h");
            System<Line> sides = check_lines(ctx, n.sides, sem, tv, eval(ctx, base), false);
            return {make_term(term::HComp{ty, sides, base}, loc), tv};
          },
          [&](const Refl& n) -> std::pair<TermPtr, Val> {
            auto [a, at] = infer(ctx, n.elem);
            Val av = eval(ctx, a);
            return {make_term(Refl{a}, loc), mk(value::Id{at, av, av})};
          },
          [&](const term::IdPair&) { return cannot("idpair"); },
          [&](const term::J& n) -> std::pair<TermPtr, Val> {
            auto [p, pt] = infer(ctx, n.target);
            auto id = as<value::Id>(pt);
            if (!id)
              throw CheckError("mismatch", n.target->loc, "J on a term of non-identity type " + show_type(ctx, pt),
                               "an identity type", show_type(ctx, pt));
            Context c1 = ctx.bind(n.x, id->type);
            Val xv = c1.env.lookup(0);
            Context c2 = c1.bind(n.y, id->type);
            Val yv = c2.env.lookup(0);
            Context c3 = c2.bind(n.p, mk(value::Id{id->type, xv, yv}));
            auto [motive, level] = check_type(c3, n.motive);
            (void)level;
            Closure mc{ctx.env, motive};
            Context cd = ctx.bind(n.d_var, id->type);
            Val dv = cd.env.lookup(0);
            Val refl = mk(value::IdPair{Cofib::top(), mk(value::PLam{fresh_name("_"), dv})});
            TermPtr d = check(cd, n.refl_case, m_.instantiate(mc, dv, dv, refl));
            return {make_term(term::J{n.x, n.y, n.p, motive, n.d_var, d, p}, loc),
                    m_.instantiate(mc, id->left, id->right, eval(ctx, p))};
          },
          [&](const North&) { return cannot("north"); },
          [&](const South&) { return cannot("south"); },
          [&](const term::Merid& n) -> std::pair<TermPtr, Val> {
            auto [a, at] = infer(ctx, n.arg);
            return {make_term(term::Merid{a, n.at}, loc), mk(value::Susp{at})};
          },
          [&](const term::SuspRec& n) -> std::pair<TermPtr, Val> {
            auto [target, tt] = infer(ctx, n.target);
            auto s = as<value::Susp>(tt);
            if (!s)
              throw CheckError("mismatch", n.target->loc,
                               "susprec on a term of non-suspension type " + show_type(ctx, tt), "a suspension",
                               show_type(ctx, tt));
            auto [motive, level] = check_type(ctx.bind(n.var, tt), n.motive);
            (void)level;
            Closure mc{ctx.env, motive};
            TermPtr nc = check(ctx, n.north_case, m_.instantiate(mc, mk(value::North{})));
            TermPtr sc = check(ctx, n.south_case, m_.instantiate(mc, mk(value::South{})));
            Val nv = eval(ctx, nc);
            Val sv = eval(ctx, sc);
            Context ca = ctx.bind(n.arg, s->type);
            Val av = ca.env.lookup(0);
            Name k = fresh_name("k");
            Val mty = mk(value::Path{k, m_.instantiate(mc, m_.merid(av, var(k))), nv, sv});
            TermPtr mc_term = check(ca, n.merid_case, mty);
            return {make_term(term::SuspRec{n.var, motive, nc, sc, n.arg, mc_term, target}, loc),
                    m_.instantiate(mc, eval(ctx, target))};
          },
          [&](const Ann& n) -> std::pair<TermPtr, Val> {
            auto [ty, level] = check_type(ctx, n.type);
            (void)level;
            Val tv = eval(ctx, ty);
            return {make_term(Ann{check(ctx, n.term, tv), ty}, loc), tv};
          },
          [&](const Sub&) -> std::pair<TermPtr, Val> { return cannot("an explicit substitution"); },
      },
      t->node);
}

std::pair<TermPtr, int> Checker::check_type(const Context& ctx, const TermPtr& t0) {
  TermPtr t = std::holds_alternative<term::Sub>(t0->node) ? normalize_subst(t0) : t0;
  const Loc loc = t->loc;
  auto eval = [&](const Context& c, const TermPtr& e) { return m_.eval(c.env, e); };
  using namespace term;
  if (auto u = std::get_if<Universe>(&t->node)) return {t, u->level + 1};
  if (auto n = std::get_if<Pi>(&t->node)) {
    auto [dom, a] = check_type(ctx, n->dom);
    auto [cod, b] = check_type(ctx.bind(n->hint, eval(ctx, dom)), n->cod);
    return {make_term(Pi{n->hint, dom, cod}, loc), std::max(a, b)};
  }
  if (auto n = std::get_if<Sigma>(&t->node)) {
    auto [dom, a] = check_type(ctx, n->dom);
    auto [cod, b] = check_type(ctx.bind(n->hint, eval(ctx, dom)), n->cod);
    return {make_term(Sigma{n->hint, dom, cod}, loc), std::max(a, b)};
  }
  if (std::holds_alternative<Nat>(t->node)) return {t, 0};
  if (auto n = std::get_if<PathP>(&t->node)) {
    Name sem = fresh_name(name_hint(n->type.dim));
    auto [line, level] = check_type(ctx.bind_dim(n->type.dim, sem), n->type.body);
    Val lv = eval(ctx.bind_dim(n->type.dim, sem), line);
    TermPtr left = check(ctx, n->left, m_.act(lv, sem, DimExpr::zero()));
    TermPtr right = check(ctx, n->right, m_.act(lv, sem, DimExpr::one()));
    return {make_term(PathP{Line{n->type.dim, line}, left, right}, loc), level};
  }
  if (auto n = std::get_if<term::Glue>(&t->node)) {
    auto [base, level] = check_type(ctx, n->base);
    Val bv = eval(ctx, base);
    System<GlueBranch> out;
    struct GB {
      Face face;
      Val type, equiv;
    };
    std::vector<GB> seen;
    for (const auto& b : n->branches.branches)
      for (const auto& f : m_.eval_cof(ctx.env, b.cof).faces()) {
        Context cf = restrict(ctx, f);
        auto [ty, tl] = check_type(cf, b.value.type);
        level = std::max(level, tl);
        Val tv = eval(cf, ty);
        Val want = equiv_type(tv, m_.face(bv, f));
        TermPtr eq;
        try {
          eq = check(cf, b.value.equiv, want);
        } catch (const CheckError& e) {
          throw CheckError("not-an-equivalence", b.value.equiv->loc,
                           "Glue branch " + print_cofib(syntactic(ctx, f)) + " is not an equivalence into the base: " +
                               e.what(),
                           show_type(cf, want), e.actual);
        }
        seen.push_back({f, tv, eval(cf, eq)});
        out.branches.push_back({syntactic(ctx, f), GlueBranch{ty, eq}});
      }
    for (std::size_t k = 0; k < seen.size(); ++k)
      for (std::size_t l = k + 1; l < seen.size(); ++l) {
        auto m = face_meet(seen[k].face, seen[l].face);
        if (!m) continue;
        Val tk = m_.face(seen[k].type, *m);
        bool ok = m_.conv_type(ctx.depth, tk, m_.face(seen[l].type, *m)) &&
                  m_.conv(ctx.depth, equiv_type(tk, m_.face(bv, *m)), m_.face(seen[k].equiv, *m),
                          m_.face(seen[l].equiv, *m));
        if (!ok)
          throw CheckError("incompatible-system", loc,
                           "Glue branches " + print_cofib(syntactic(ctx, seen[k].face)) + " and " +
                               print_cofib(syntactic(ctx, seen[l].face)) + " disagree on their overlap");
      }
    return {make_term(term::Glue{base, std::move(out)}, loc), level};
  }
  if (auto n = std::get_if<term::Id>(&t->node)) {
    auto [ty, level] = check_type(ctx, n->type);
    Val tv = eval(ctx, ty);
    TermPtr l = check(ctx, n->left, tv);
    TermPtr r = check(ctx, n->right, tv);
    return {make_term(term::Id{ty, l, r}, loc), level};
  }
  if (auto n = std::get_if<term::Susp>(&t->node)) {
    auto [ty, level] = check_type(ctx, n->type);
    return {make_term(term::Susp{ty}, loc), level};
  }
  auto [elab, ty] = infer(ctx, t);
  if (auto u = as<value::U>(ty)) return {elab, u->level};
  throw CheckError("mismatch", loc, "expected a type, got a term of type " + show_type(ctx, ty), "a type",
                   show_type(ctx, ty));
}

DeclVerdict Checker::check_decl(const Decl& d) {
  auto start = std::chrono::steady_clock::now();
  DeclVerdict verdict{d.name, std::nullopt, 0};
  try {
    Context ctx;
    TermPtr type_term;
    Val type;
    TermPtr body;
    if (d.type) {
      type_term = check_type(ctx, d.type).first;
      type = m_.eval(ctx.env, type_term);
      body = check(ctx, d.body, type);
    } else {
      auto [b, ty] = infer(ctx, d.body);
      body = b;
      type = ty;
      type_term = m_.quote_type(0, ty);
    }
    Val value = m_.eval(ctx.env, body);
    globals_.add(GlobalEntry{d.name, type, value, type_term, body, false});
  } catch (const CheckError& e) {
    verdict.error = e;
  } catch (const EvalError& e) {
    verdict.error = CheckError("internal", d.loc, std::string("evaluation failed: ") + e.what());
  }
  if (verdict.error) globals_.add(GlobalEntry{d.name, nullptr, nullptr, nullptr, nullptr, true});
  verdict.millis =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return verdict;
}

std::vector<DeclVerdict> Checker::check_declarations(const std::vector<Decl>& decls) {
  std::vector<DeclVerdict> out;
  for (const auto& d : decls) out.push_back(check_decl(d));
  return out;
}

}  // namespace cctt
