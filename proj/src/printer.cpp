#include "cctt/printer.hpp"

#include <set>
#include <unordered_map>

namespace cctt {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

// Free dimension names and referenced globals, which bound names must avoid.
void collect_free(const TermPtr& t, std::set<Name>& bound, std::set<std::string>& out);

void collect_dim(const DimExpr& r, const std::set<Name>& bound, std::set<std::string>& out) {
  for (Name n : r.names())
    if (!bound.count(n)) out.insert(name_text(n));
}

void collect_cof(const Cofib& c, const std::set<Name>& bound, std::set<std::string>& out) {
  for (const auto& f : c.faces())
    for (const auto& [n, b] : f.atoms())
      if (!bound.count(n)) out.insert(name_text(n));
}

void collect_line(const Line& l, std::set<Name>& bound, std::set<std::string>& out) {
  bool had = bound.count(l.dim);
  bound.insert(l.dim);
  collect_free(l.body, bound, out);
  if (!had) bound.erase(l.dim);
}

template <class V>
void collect_sys_cofs(const System<V>& s, const std::set<Name>& bound, std::set<std::string>& out) {
  for (const auto& b : s.branches) collect_cof(b.cof, bound, out);
}

void collect_free(const TermPtr& t, std::set<Name>& bound, std::set<std::string>& out) {
  using namespace term;
  auto rec = [&](const TermPtr& c) {
    if (c) collect_free(c, bound, out);
  };
  std::visit(overloaded{
                 [&](const Global& n) { out.insert(name_text(n.name)); },
                 [&](const Sub&) { collect_free(normalize_subst(t), bound, out); },
                 [&](const Pi& n) { rec(n.dom), rec(n.cod); },
                 [&](const Lam& n) { rec(n.dom), rec(n.body); },
                 [&](const App& n) { rec(n.fun), rec(n.arg); },
                 [&](const Sigma& n) { rec(n.dom), rec(n.cod); },
                 [&](const Pair& n) { rec(n.first), rec(n.second); },
                 [&](const Fst& n) { rec(n.pair); },
                 [&](const Snd& n) { rec(n.pair); },
                 [&](const Succ& n) { rec(n.pred); },
                 [&](const NatRec& n) { rec(n.motive), rec(n.zero_case), rec(n.succ_case), rec(n.target); },
                 [&](const PathP& n) {
                   collect_line(n.type, bound, out);
                   rec(n.left), rec(n.right);
                 },
                 [&](const PLam& n) { collect_line(Line{n.dim, n.body}, bound, out); },
                 [&](const PApp& n) {
                   rec(n.path);
                   collect_dim(n.at, bound, out);
                 },
                 [&](const Glue& n) {
                   rec(n.base);
                   collect_sys_cofs(n.branches, bound, out);
                   for (const auto& b : n.branches.branches) rec(b.value.type), rec(b.value.equiv);
                 },
                 [&](const GlueElem& n) {
                   rec(n.base);
                   collect_sys_cofs(n.parts, bound, out);
                   for (const auto& b : n.parts.branches) rec(b.value);
                 },
                 [&](const Unglue& n) { rec(n.arg); },
                 [&](const Comp& n) {
                   collect_line(n.type, bound, out);
                   collect_sys_cofs(n.sides, bound, out);
                   for (const auto& b : n.sides.branches) collect_line(b.value, bound, out);
                   rec(n.base);
                 },
                 [&](const Fill& n) {
                   collect_line(n.type, bound, out);
                   collect_sys_cofs(n.sides, bound, out);
                   for (const auto& b : n.sides.branches) collect_line(b.value, bound, out);
                   rec(n.base);
                   collect_dim(n.at, bound, out);
                 },
                 [&](const HComp& n) {
                   rec(n.type);
                   collect_sys_cofs(n.sides, bound, out);
                   for (const auto& b : n.sides.branches) collect_line(b.value, bound, out);
                   rec(n.base);
                 },
                 [&](const Id& n) { rec(n.type), rec(n.left), rec(n.right); },
                 [&](const Refl& n) { rec(n.elem); },
                 [&](const IdPair& n) {
                   collect_cof(n.cof, bound, out);
                   rec(n.path);
                 },
                 [&](const J& n) { rec(n.motive), rec(n.refl_case), rec(n.target); },
                 [&](const Susp& n) { rec(n.type); },
                 [&](const Merid& n) {
                   rec(n.arg);
                   collect_dim(n.at, bound, out);
                 },
                 [&](const SuspRec& n) {
                   rec(n.motive), rec(n.north_case), rec(n.south_case), rec(n.merid_case), rec(n.target);
                 },
                 [&](const Ann& n) { rec(n.term), rec(n.type); },
                 [&](const auto&) {},
             },
             t->node);
}

bool dim_occurs(const TermPtr& t, Name d) {
  std::set<Name> bound;
  std::set<std::string> out;
  collect_free(t, bound, out);
  return out.count(name_text(d)) != 0;
}

bool is_keyword_text(const std::string& s) {
  static const std::set<std::string> kw = {"def",  "Nat",   "zero",   "succ", "natrec",  "fst",  "snd",
                                           "PathP", "Path", "Glue",   "glue", "unglue",  "comp", "fill",
                                           "hcomp", "Id",   "refl",   "idpair", "J",     "Susp", "north",
                                           "south", "merid", "susprec", "U"};
  if (kw.count(s)) return true;
  return s.size() > 1 && s[0] == 'U' && s.find_first_not_of("0123456789", 1) == std::string::npos;
}

class Printer {
 public:
  Printer(const std::vector<Name>& ctx, const TermPtr& root) {
    std::set<Name> bound;
    collect_free(root, bound, reserved_);
    for (Name n : ctx) {
      std::string s = name_text(n);
      vars_.push_back(s);
      reserved_.insert(s);
    }
  }

  std::string term(const TermPtr& t, int prec) {
    using namespace term;
    auto paren = [&](int level, std::string s) { return prec > level ? "(" + s + ")" : s; };
    return std::visit(
        overloaded{
            [&](const Var& n) -> std::string {
              int k = static_cast<int>(vars_.size()) - 1 - n.index;
              if (k < 0) return "#" + std::to_string(n.index);
              return vars_[k];
            },
            [&](const Global& n) { return name_text(n.name); },
            [&](const Sub&) { return term(normalize_subst(t), prec); },
            [&](const Universe& n) { return n.level == 0 ? std::string("U") : "U" + std::to_string(n.level); },
            [&](const Pi& n) { return paren(0, binder_type(n.hint, n.dom, n.cod, " -> ")); },
            [&](const Sigma& n) { return paren(0, binder_type(n.hint, n.dom, n.cod, " * ")); },
            [&](const Lam& n) {
              std::string dom = n.dom ? term(n.dom, 0) : "";
              std::string x = occurs_var(n.body, 0) ? push_var(n.hint) : push_blank();
              std::string head = n.dom ? "\\(" + x + " : " + dom + ") -> " : "\\" + x + " -> ";
              std::string body = term(n.body, 0);
              pop_var();
              return paren(0, head + body);
            },
            [&](const App& n) { return paren(2, term(n.fun, 2) + " " + term(n.arg, 3)); },
            [&](const Pair& n) { return "(" + term(n.first, 0) + ", " + term(n.second, 0) + ")"; },
            [&](const Fst& n) { return term(n.pair, 3) + ".1"; },
            [&](const Snd& n) { return term(n.pair, 3) + ".2"; },
            [&](const Nat&) { return std::string("Nat"); },
            [&](const Zero&) { return std::string("zero"); },
            [&](const Succ& n) { return paren(2, "succ " + term(n.pred, 3)); },
            [&](const NatRec& n) {
              std::string motive = lam_text({n.var}, n.motive);
              std::string step = lam_text({n.pred, n.ih}, n.succ_case);
              return paren(2, "natrec " + motive + " " + term(n.zero_case, 3) + " " + step + " " + term(n.target, 3));
            },
            [&](const PathP& n) {
              if (!dim_occurs(n.type.body, n.type.dim))
                return paren(2, "Path " + term(n.type.body, 3) + " " + term(n.left, 3) + " " + term(n.right, 3));
              return paren(2, "PathP " + line(n.type) + " " + term(n.left, 3) + " " + term(n.right, 3));
            },
            [&](const PLam& n) { return paren(0, plam_text(n.dim, n.body)); },
            [&](const PApp& n) { return paren(1, term(n.path, 2) + " @ " + dim_atom(n.at)); },
            [&](const term::Glue& n) {
              std::string out = "Glue " + term(n.base, 3) + " [";
              bool first = true;
              for (const auto& b : n.branches.branches) {
                if (!first) out += ", ";
                first = false;
                out += cof(b.cof) + " -> (" + term(b.value.type, 0) + ", " + term(b.value.equiv, 0) + ")";
              }
              return paren(2, out + "]");
            },
            [&](const GlueElem& n) { return paren(2, "glue " + term(n.base, 3) + " " + sys(n.parts)); },
            [&](const Unglue& n) { return paren(2, "unglue " + term(n.arg, 3)); },
            [&](const Comp& n) {
              return paren(2, "comp " + line(n.type) + " " + lines(n.sides) + " " + term(n.base, 3));
            },
            [&](const Fill& n) {
              return paren(1, std::string("fill ") + (n.from_one ? "1 " : "0 ") + line(n.type) + " " + lines(n.sides) +
                                  " " + term(n.base, 3) + " @ " + dim_atom(n.at));
            },
            [&](const HComp& n) {
              return paren(2, "hcomp " + term(n.type, 3) + " " + lines(n.sides) + " " + term(n.base, 3));
            },
            [&](const Id& n) {
              return paren(2, "Id " + term(n.type, 3) + " " + term(n.left, 3) + " " + term(n.right, 3));
            },
            [&](const Refl& n) { return paren(2, "refl " + term(n.elem, 3)); },
            [&](const IdPair& n) { return paren(2, "idpair [" + cof(n.cof) + "] " + term(n.path, 3)); },
            [&](const J& n) {
              return paren(2, "J " + lam_text({n.x, n.y, n.p}, n.motive) + " " + lam_text({n.d_var}, n.refl_case) +
                                  " " + term(n.target, 3));
            },
            [&](const Susp& n) { return paren(2, "Susp " + term(n.type, 3)); },
            [&](const North&) { return std::string("north"); },
            [&](const South&) { return std::string("south"); },
            [&](const Merid& n) { return paren(2, "merid " + term(n.arg, 3) + " " + dim_atom(n.at)); },
            [&](const SuspRec& n) {
              return paren(2, "susprec " + lam_text({n.var}, n.motive) + " " + term(n.north_case, 3) + " " +
                                  term(n.south_case, 3) + " " + lam_text({n.arg}, n.merid_case) + " " +
                                  term(n.target, 3));
            },
            [&](const Ann& n) { return "(" + term(n.term, 0) + " : " + term(n.type, 0) + ")"; },
        },
        t->node);
  }

  std::string dim(const DimExpr& r) {
    if (r.is_zero()) return "0";
    if (r.is_one()) return "1";
    std::string out;
    bool first_meet = true;
    for (const auto& m : r.meets()) {
      if (!first_meet) out += " \\/ ";
      first_meet = false;
      bool first = true;
      for (const auto& l : m) {
        if (!first) out += " /\\ ";
        first = false;
        out += (l.reversed ? "-" : "") + dim_name(l.name);
      }
    }
    return out;
  }

  std::string dim_atom(const DimExpr& r) {
    bool simple = r.as_constant().has_value() || (r.meets().size() == 1 && r.meets()[0].size() == 1);
    return simple ? dim(r) : "(" + dim(r) + ")";
  }

  std::string cof(const Cofib& c) {
    if (c.is_bottom()) return "0F";
    if (c.is_top()) return "1F";
    std::string out;
    bool first_face = true;
    for (const auto& f : c.faces()) {
      if (!first_face) out += " \\/ ";
      first_face = false;
      bool first = true;
      for (const auto& [n, b] : f.atoms()) {
        if (!first) out += " /\\ ";
        first = false;
        out += "(" + dim_name(n) + "=" + (b ? "1" : "0") + ")";
      }
    }
    return out;
  }

 private:
  std::string fresh_text(Name hint, const char* fallback = "x") {
    std::string base = name_hint(hint);
    if (base.empty() || base == "_" || is_keyword_text(base) || base[0] == '%') base = fallback;
    std::string s = base;
    for (int k = 1; in_use(s); ++k) s = base + std::to_string(k);
    return s;
  }

  bool in_use(const std::string& s) const {
    if (reserved_.count(s)) return true;
    for (const auto& v : vars_)
      if (v == s) return true;
    for (const auto& [n, d] : dims_)
      if (d == s) return true;
    return false;
  }

  std::string push_var(Name hint) {
    std::string s = fresh_text(hint);
    vars_.push_back(s);
    return s;
  }
  std::string push_blank() {
    vars_.push_back("_");
    return "_";
  }
  void pop_var() { vars_.pop_back(); }

  std::string push_blank_dim(Name d) {
    dims_.push_back({d, "_"});
    return "_";
  }
  std::string push_dim(Name d) {
    std::string s = fresh_text(d, "i");
    dims_.push_back({d, s});
    return s;
  }
  void pop_dim() { dims_.pop_back(); }

  std::string dim_name(Name n) const {
    for (auto it = dims_.rbegin(); it != dims_.rend(); ++it)
      if (it->first == n) return it->second;
    return name_text(n);
  }

  std::string binder_type(Name hint, const TermPtr& dom, const TermPtr& cod, const char* conn) {
    if (!occurs_var(cod, 0)) {
      // A -> B and A * B; the right side of `*` is kept atomic-ish.
      bool arrow = std::string(conn) == " -> ";
      std::string d = term(dom, 1);
      // `(x : A) -> B` would read back as a binder.
      if (std::holds_alternative<term::Ann>(dom->node)) d = "(" + d + ")";
      push_blank();
      std::string c = term(cod, arrow ? 0 : 1);
      pop_var();
      return d + conn + c;
    }
    std::string d = term(dom, 0);
    std::string x = push_var(hint);
    std::string c = term(cod, 0);
    pop_var();
    return "(" + x + " : " + d + ")" + conn + c;
  }

  std::string lam_text(const std::vector<Name>& names, const TermPtr& body) {
    std::string head = "\\";
    int n = static_cast<int>(names.size());
    for (int k = 0; k < n; ++k) {
      std::string x = occurs_var(body, n - 1 - k) ? push_var(names[k]) : push_blank();
      head += (k ? " " : "") + x;
    }
    std::string b = term(body, 0);
    for (int k = 0; k < n; ++k) pop_var();
    return "(" + head + " -> " + b + ")";
  }

  std::string plam_text(Name d, const TermPtr& body) {
    std::string i = dim_occurs(body, d) ? push_dim(d) : push_blank_dim(d);
    std::string b = term(body, 0);
    pop_dim();
    return "<" + i + "> " + b;
  }

  std::string line(const Line& l) { return "(" + plam_text(l.dim, l.body) + ")"; }

  std::string lines(const System<Line>& s) {
    std::string out = "[";
    bool first = true;
    for (const auto& b : s.branches) {
      if (!first) out += ", ";
      first = false;
      out += cof(b.cof) + " -> " + plam_text(b.value.dim, b.value.body);
    }
    return out + "]";
  }

  std::string sys(const System<TermPtr>& s) {
    std::string out = "[";
    bool first = true;
    for (const auto& b : s.branches) {
      if (!first) out += ", ";
      first = false;
      out += cof(b.cof) + " -> " + term(b.value, 0);
    }
    return out + "]";
  }

  std::set<std::string> reserved_;
  std::vector<std::string> vars_;
  std::vector<std::pair<Name, std::string>> dims_;
};

}  // namespace

std::string print_term(const TermPtr& t, const std::vector<Name>& vars) { return Printer(vars, t).term(t, 0); }

std::string print_dim(const DimExpr& r) {
  Printer p({}, make_term(term::Nat{}));
  return p.dim(r);
}

std::string print_cofib(const Cofib& c) {
  Printer p({}, make_term(term::Nat{}));
  return p.cof(c);
}

}  // namespace cctt
