#pragma once

#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "cctt/cofib.hpp"
#include "cctt/interval.hpp"

namespace cctt {

struct Loc {
  int line = 0;
  int col = 0;
};

struct Term;
struct Subst;
using TermPtr = std::shared_ptr<const Term>;
using SubstPtr = std::shared_ptr<const Subst>;

/// A dimension binder `<i> body`; used for type lines and the sides of
/// comp/fill systems.
struct Line {
  Name dim;
  TermPtr body;
};

struct GlueBranch {
  TermPtr type;
  TermPtr equiv;
};

namespace term {

/// The generic variable q weakened `index` times (q p^index).
struct Var { int index; };
struct Global { Name name; };
/// Explicit substitution t σ.
struct Sub { TermPtr body; SubstPtr subst; };
struct Universe { int level; };

struct Pi { Name hint; TermPtr dom, cod; };
struct Lam { Name hint; TermPtr dom; TermPtr body; };  // dom may be null
struct App { TermPtr fun, arg; };

struct Sigma { Name hint; TermPtr dom, cod; };
struct Pair { TermPtr first, second; };
struct Fst { TermPtr pair; };
struct Snd { TermPtr pair; };

struct Nat {};
struct Zero {};
struct Succ { TermPtr pred; };
/// natrec P z s n with P binding one variable and s binding two (n, ih).
struct NatRec {
  Name var;
  TermPtr motive;
  TermPtr zero_case;
  Name pred, ih;
  TermPtr succ_case;
  TermPtr target;
};

struct PathP { Line type; TermPtr left, right; };
struct PLam { Name dim; TermPtr body; };
struct PApp { TermPtr path; DimExpr at; };

struct Glue { TermPtr base; System<GlueBranch> branches; };
struct GlueElem { TermPtr base; System<TermPtr> parts; };
/// `glue_type` is filled in by the checker with the Glue type of the argument.
struct Unglue { TermPtr arg; TermPtr glue_type; };

struct Comp { Line type; System<Line> sides; TermPtr base; };
/// fill b (<i> A) [φ -> <i> u] u0 @ r, with the base u0 sitting at i = b.
struct Fill { bool from_one; Line type; System<Line> sides; TermPtr base; DimExpr at; };
/// Homogeneous composition, the extra constructor of the suspension.
struct HComp { TermPtr type; System<Line> sides; TermPtr base; };

struct Id { TermPtr type, left, right; };
struct Refl { TermPtr elem; };
/// Swan-style identity element: a path plus the cofibration where it is
/// degenerate.
struct IdPair { Cofib cof; TermPtr path; };
/// J P d p with P binding (x, y, p) and d binding x.
struct J {
  Name x, y, p;
  TermPtr motive;
  Name d_var;
  TermPtr refl_case;
  TermPtr target;
};

struct Susp { TermPtr type; };
struct North {};
struct South {};
struct Merid { TermPtr arg; DimExpr at; };
/// susprec P n s m t with P binding one variable and m binding the
/// meridian argument; m's body is a path from n to s.
struct SuspRec {
  Name var;
  TermPtr motive;
  TermPtr north_case, south_case;
  Name arg;
  TermPtr merid_case;
  TermPtr target;
};

struct Ann { TermPtr term, type; };

}  // namespace term

struct Term {
  using Node = std::variant<term::Var, term::Global, term::Sub, term::Universe, term::Pi, term::Lam,
                            term::App, term::Sigma, term::Pair, term::Fst, term::Snd, term::Nat,
                            term::Zero, term::Succ, term::NatRec, term::PathP, term::PLam,
                            term::PApp, term::Glue, term::GlueElem, term::Unglue, term::Comp,
                            term::Fill, term::HComp, term::Id, term::Refl, term::IdPair, term::J,
                            term::Susp, term::North, term::South, term::Merid, term::SuspRec,
                            term::Ann>;
  Node node;
  Loc loc;
};

template <class T>
TermPtr make_term(T node, Loc loc = {}) {
  return std::make_shared<const Term>(Term{Term::Node(std::move(node)), loc});
}

namespace subst {
struct Weaken {};  // p
struct Id {};
struct Compose { SubstPtr first, second; };  // σ τ
struct Extend { SubstPtr base; TermPtr term; };  // (σ, u)
struct Empty {};
}  // namespace subst

struct Subst {
  std::variant<subst::Weaken, subst::Id, subst::Compose, subst::Extend, subst::Empty> node;
};

SubstPtr subst_weaken();
SubstPtr subst_id();
SubstPtr subst_compose(SubstPtr first, SubstPtr second);
SubstPtr subst_extend(SubstPtr base, TermPtr term);
SubstPtr subst_empty();
/// σ⁺ = (σ p, q)
SubstPtr subst_lift(SubstPtr s);

/// Pushes an explicit substitution through one constructor layer.
TermPtr apply_subst(const TermPtr& t, const SubstPtr& s);
/// Eliminates every explicit substitution.
TermPtr normalize_subst(const TermPtr& t);
/// t with free variables >= cutoff shifted by `by`.
TermPtr shift(const TermPtr& t, int by, int cutoff = 0);

/// Alpha-equivalence; annotations filled in by the checker are ignored.
bool alpha_equal(const TermPtr& a, const TermPtr& b);

/// True if de Bruijn variable `index` occurs free.
bool occurs_var(const TermPtr& t, int index);

struct Decl {
  Name name;
  TermPtr type;  // may be null
  TermPtr body;
  Loc loc;
};

/// `-- #canon name = k` pragma.
struct CanonPragma {
  Name name;
  long value;
  Loc loc;
};

struct Module {
  std::vector<Decl> decls;
  std::vector<CanonPragma> canon;
};

}  // namespace cctt
