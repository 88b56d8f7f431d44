#include "cctt/parser.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <set>
#include <unordered_set>

namespace cctt {

namespace {

enum class Tok { Ident, Number, Sym, CofConst, End };

struct Token {
  Tok kind;
  std::string text;
  Loc loc;
};

const std::unordered_set<std::string> kKeywords = {
    "def",    "Nat",    "zero",  "succ", "natrec", "fst",   "snd",  "PathP", "Path",
    "Glue",   "glue",   "unglue", "comp", "fill",  "hcomp", "Id",   "refl",  "idpair",
    "J",      "Susp",   "north", "south", "merid", "susprec", "U"};

bool is_universe(const std::string& s, int* level = nullptr) {
  if (s.empty() || s[0] != 'U') return false;
  if (s.size() == 1) {
    if (level) *level = 0;
    return true;
  }
  if (!std::all_of(s.begin() + 1, s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
    return false;
  if (level) *level = std::stoi(s.substr(1));
  return true;
}

bool is_keyword(const std::string& s) { return kKeywords.count(s) != 0 || is_universe(s); }

class Lexer {
 public:
  Lexer(std::string_view text, bool internal) : text_(text), internal_(internal) {}

  std::vector<Token> run(std::vector<CanonPragma>* pragmas) {
    std::vector<Token> out;
    while (true) {
      skip_space(pragmas);
      Loc loc{line_, col_};
      if (pos_ >= text_.size()) {
        out.push_back({Tok::End, "", loc});
        return out;
      }
      char c = text_[pos_];
      if (std::isdigit(static_cast<unsigned char>(c))) {
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) advance();
        std::string num(text_.substr(start, pos_ - start));
        if (pos_ < text_.size() && text_[pos_] == 'F' && (num == "0" || num == "1") &&
            !(pos_ + 1 < text_.size() && ident_char(text_[pos_ + 1]))) {
          advance();
          out.push_back({Tok::CofConst, num + "F", loc});
        } else {
          out.push_back({Tok::Number, num, loc});
        }
        continue;
      }
      if (ident_start(c)) {
        std::size_t start = pos_;
        advance();
        while (pos_ < text_.size() && ident_char(text_[pos_])) advance();
        out.push_back({Tok::Ident, std::string(text_.substr(start, pos_ - start)), loc});
        continue;
      }
      static const char* const kSyms[] = {"->", "/\\", "\\/", ".1", ".2", "\\", "(", ")", "[", "]",
                                          "<",  ">",   ",",   ":",  "=",  "@",  "*", "-"};
      bool matched = false;
      for (const char* s : kSyms) {
        std::string_view sv(s);
        if (text_.substr(pos_, sv.size()) == sv) {
          for (std::size_t k = 0; k < sv.size(); ++k) advance();
          out.push_back({Tok::Sym, std::string(sv), loc});
          matched = true;
          break;
        }
      }
      if (!matched) throw ParseError("parse", loc, std::string("unexpected character '") + c + "'");
    }
  }

 private:
  bool ident_start(char c) const {
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_' || (internal_ && c == '%');
  }
  static bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\''; }

  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  void skip_space(std::vector<CanonPragma>* pragmas) {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else if (text_.substr(pos_, 2) == "--") {
        Loc loc{line_, col_};
        std::size_t start = pos_;
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
        pragma(text_.substr(start + 2, pos_ - start - 2), loc, pragmas);
      } else {
        return;
      }
    }
  }

  // `-- #canon name = k`
  static void pragma(std::string_view body, Loc loc, std::vector<CanonPragma>* out) {
    std::string s(body);
    std::size_t p = s.find_first_not_of(" \t");
    if (p == std::string::npos || s.compare(p, 6, "#canon") != 0) return;
    std::string rest = s.substr(p + 6);
    std::size_t eq = rest.find('=');
    if (eq == std::string::npos) throw ParseError("parse", loc, "malformed #canon pragma");
    auto trim = [](std::string x) {
      std::size_t a = x.find_first_not_of(" \t\r");
      std::size_t b = x.find_last_not_of(" \t\r");
      return a == std::string::npos ? std::string() : x.substr(a, b - a + 1);
    };
    std::string name = trim(rest.substr(0, eq));
    std::string value = trim(rest.substr(eq + 1));
    if (name.empty() || value.empty() ||
        !std::all_of(value.begin(), value.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
      throw ParseError("parse", loc, "malformed #canon pragma");
    if (out) out->push_back({intern(name), std::stol(value), loc});
  }

  std::string_view text_;
  bool internal_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

struct Group {
  std::vector<Name> names;
  TermPtr type;
  Loc loc;
};

class Parser {
 public:
  Parser(std::vector<Token> toks, const ParseOptions& opts) : toks_(std::move(toks)), opts_(opts) {}

  bool any_dim_ok = false;  // parse_dim/parse_cofib accept free names
  std::vector<Name> vars;
  std::vector<Name> dims;
  std::set<Name> module_globals;

  const Token& peek(int k = 0) const { return toks_[std::min(pos_ + k, toks_.size() - 1)]; }
  bool at_end() const { return peek().kind == Tok::End; }
  bool is_sym(const char* s, int k = 0) const { return peek(k).kind == Tok::Sym && peek(k).text == s; }
  bool is_ident(const char* s, int k = 0) const { return peek(k).kind == Tok::Ident && peek(k).text == s; }

  [[noreturn]] void fail(const std::string& msg) const { throw ParseError("parse", peek().loc, msg); }
  [[noreturn]] void fail_at(Loc loc, const std::string& msg) const { throw ParseError("parse", loc, msg); }

  std::string describe(const Token& t) const { return t.kind == Tok::End ? "end of input" : "'" + t.text + "'"; }

  void expect(const char* s) {
    if (!is_sym(s)) fail(std::string("expected '") + s + "' but found " + describe(peek()));
    ++pos_;
  }

  Name binder_name() {
    const Token& t = peek();
    if (t.kind != Tok::Ident || is_keyword(t.text)) fail("expected a name but found " + describe(t));
    ++pos_;
    return intern(t.text);
  }

  // ---- module level ----

  Module module(std::vector<CanonPragma> pragmas) {
    Module m;
    m.canon = std::move(pragmas);
    while (!at_end()) m.decls.push_back(decl());
    return m;
  }

  Decl decl() {
    Loc loc = peek().loc;
    if (!is_ident("def")) fail("expected 'def' but found " + describe(peek()));
    ++pos_;
    Name name = binder_name();
    if (module_globals.count(name)) fail_at(loc, "duplicate definition of " + name_text(name));
    std::size_t mark = vars.size();
    std::vector<Group> groups;
    while (telescope_ahead()) groups.push_back(group());
    TermPtr type;
    if (is_sym(":")) {
      ++pos_;
      type = term();
    }
    expect("=");
    TermPtr body = term();
    vars.resize(mark);
    // Wrap the telescope, innermost binder last.
    for (auto g = groups.rbegin(); g != groups.rend(); ++g)
      for (std::size_t k = g->names.size(); k-- > 0;) {
        TermPtr dom = shift(g->type, static_cast<int>(k));
        if (type) type = make_term(term::Pi{g->names[k], dom, type}, g->loc);
        body = make_term(term::Lam{g->names[k], dom, body}, g->loc);
      }
    module_globals.insert(name);
    return Decl{name, type, body, loc};
  }

  // ---- binders ----

  bool telescope_ahead() const {
    if (!is_sym("(")) return false;
    int k = 1;
    while (peek(k).kind == Tok::Ident && !is_keyword(peek(k).text)) ++k;
    return k > 1 && is_sym(":", k);
  }

  // Parses `(x y : A)` and pushes the names.
  Group group() {
    Loc loc = peek().loc;
    expect("(");
    std::vector<Name> names;
    while (!is_sym(":")) names.push_back(binder_name());
    expect(":");
    TermPtr type = term();
    expect(")");
    for (Name n : names) vars.push_back(n);
    return Group{names, type, loc};
  }

  // ---- terms ----

  TermPtr term() {
    if (is_sym("\\")) return lambda();
    if (is_sym("<")) return plam();
    if (telescope_ahead()) {
      std::size_t mark = vars.size();
      std::size_t start = pos_;
      std::vector<Group> groups;
      while (telescope_ahead()) groups.push_back(group());
      bool pi = is_sym("->");
      bool sigma = is_sym("*");
      vars.resize(mark);
      if (pi || sigma) {
        for (const auto& g : groups)
          for (Name n : g.names) vars.push_back(n);
        ++pos_;
        TermPtr body = term();
        vars.resize(mark);
        for (auto g = groups.rbegin(); g != groups.rend(); ++g)
          for (std::size_t k = g->names.size(); k-- > 0;) {
            TermPtr dom = shift(g->type, static_cast<int>(k));
            body = pi ? make_term(term::Pi{g->names[k], dom, body}, g->loc)
                      : make_term(term::Sigma{g->names[k], dom, body}, g->loc);
          }
        return body;
      }
      // Annotations such as `(x : A) y`; reparse as an ordinary term.
      pos_ = start;
    }
    return arrows(nullptr);
  }

  TermPtr arrows(TermPtr head) {
    Loc loc = peek().loc;
    TermPtr left = sigmas(std::move(head));
    if (is_sym("->")) {
      ++pos_;
      TermPtr right = term();
      return make_term(term::Pi{intern("_"), left, shift(right, 1)}, loc);
    }
    return left;
  }

  TermPtr sigmas(TermPtr head) {
    Loc loc = peek().loc;
    TermPtr left = path_apps(std::move(head));
    if (is_sym("*")) {
      ++pos_;
      TermPtr right = sigmas(nullptr);
      return make_term(term::Sigma{intern("_"), left, shift(right, 1)}, loc);
    }
    return left;
  }

  TermPtr path_apps(TermPtr head) {
    TermPtr t = apps(std::move(head));
    while (is_sym("@")) {
      Loc loc = peek().loc;
      ++pos_;
      t = make_term(term::PApp{t, dim_atom()}, loc);
    }
    return t;
  }

  TermPtr apps(TermPtr head) {
    TermPtr t = head ? head : app_head();
    while (starts_atom()) {
      Loc loc = peek().loc;
      t = make_term(term::App{t, postfix()}, loc);
    }
    return t;
  }

  bool starts_atom() const {
    const Token& t = peek();
    if (t.kind == Tok::Number) return true;
    if (t.kind == Tok::Sym) return t.text == "(";
    if (t.kind != Tok::Ident) return false;
    if (is_universe(t.text)) return true;
    if (t.text == "Nat" || t.text == "zero" || t.text == "north" || t.text == "south") return true;
    return !is_keyword(t.text);
  }

  TermPtr lambda() {
    Loc loc = peek().loc;
    expect("\\");
    std::size_t mark = vars.size();
    struct B {
      Name name;
      TermPtr dom;
      Loc loc;
    };
    std::vector<B> binders;
    while (!is_sym("->")) {
      if (telescope_ahead()) {
        Group g = group();
        for (std::size_t k = 0; k < g.names.size(); ++k)
          binders.push_back({g.names[k], shift(g.type, static_cast<int>(k)), g.loc});
      } else {
        Loc bl = peek().loc;
        Name n = binder_name();
        vars.push_back(n);
        binders.push_back({n, nullptr, bl});
      }
    }
    if (binders.empty()) fail_at(loc, "lambda without binders");
    expect("->");
    TermPtr body = term();
    vars.resize(mark);
    for (auto b = binders.rbegin(); b != binders.rend(); ++b) body = make_term(term::Lam{b->name, b->dom, body}, b->loc);
    return body;
  }

  TermPtr plam() {
    Loc loc = peek().loc;
    expect("<");
    std::size_t mark = dims.size();
    std::vector<Name> names;
    while (!is_sym(">")) {
      Name n = binder_name();
      names.push_back(n);
      dims.push_back(n);
    }
    if (names.empty()) fail_at(loc, "path abstraction without binders");
    expect(">");
    TermPtr body = term();
    dims.resize(mark);
    for (auto n = names.rbegin(); n != names.rend(); ++n) body = make_term(term::PLam{*n, body}, loc);
    return body;
  }

  TermPtr postfix() { return postfix_rest(atom()); }

  TermPtr postfix_rest(TermPtr t) {
    while (is_sym(".1") || is_sym(".2")) {
      Loc loc = peek().loc;
      bool first = peek().text == ".1";
      ++pos_;
      t = first ? make_term(term::Fst{t}, loc) : make_term(term::Snd{t}, loc);
    }
    return t;
  }

  TermPtr variable(Name n, Loc loc) {
    for (std::size_t k = vars.size(); k-- > 0;)
      if (vars[k] == n) return make_term(term::Var{static_cast<int>(vars.size() - 1 - k)}, loc);
    if (std::find(dims.begin(), dims.end(), n) != dims.end())
      throw ParseError("parse", loc, "dimension " + name_text(n) + " used as a term");
    if (module_globals.count(n) || opts_.is_global(n)) return make_term(term::Global{n}, loc);
    throw ParseError("unbound", loc, "unbound identifier " + name_text(n));
  }

  TermPtr numeral(const Token& t) {
    long n = std::stol(t.text);
    TermPtr out = make_term(term::Zero{}, t.loc);
    for (long k = 0; k < n; ++k) out = make_term(term::Succ{out}, t.loc);
    return out;
  }

  TermPtr atom() {
    const Token t = peek();
    if (t.kind == Tok::Number) {
      ++pos_;
      return numeral(t);
    }
    if (is_sym("(")) {
      ++pos_;
      TermPtr inner = term();
      if (is_sym(":")) {
        ++pos_;
        TermPtr type = term();
        expect(")");
        return make_term(term::Ann{inner, type}, t.loc);
      }
      if (is_sym(",")) return pair_rest(inner, t.loc);
      expect(")");
      return inner;
    }
    if (t.kind == Tok::Ident) {
      int level = 0;
      if (is_universe(t.text, &level)) {
        ++pos_;
        return make_term(term::Universe{level}, t.loc);
      }
      if (t.text == "Nat") return ++pos_, make_term(term::Nat{}, t.loc);
      if (t.text == "zero") return ++pos_, make_term(term::Zero{}, t.loc);
      if (t.text == "north") return ++pos_, make_term(term::North{}, t.loc);
      if (t.text == "south") return ++pos_, make_term(term::South{}, t.loc);
      if (t.text == "def") fail("expected a term but found 'def' (is an argument missing?)");
      if (is_keyword(t.text)) fail("'" + t.text + "' must be applied; parenthesize it here");
      ++pos_;
      return variable(intern(t.text), t.loc);
    }
    fail("expected a term but found " + describe(t));
  }

  TermPtr pair_rest(TermPtr first, Loc loc) {
    expect(",");
    TermPtr second = term();
    if (is_sym(",")) return make_term(term::Pair{first, pair_rest(second, loc)}, loc);
    expect(")");
    return make_term(term::Pair{first, second}, loc);
  }

  // Peels `n` lambda binders, returning the names and the body.
  TermPtr unlam(TermPtr t, int n, std::vector<Name>& names, const char* what) {
    for (int k = 0; k < n; ++k) {
      auto l = std::get_if<term::Lam>(&t->node);
      if (!l) fail_at(t->loc, std::string(what) + " must be a lambda with " + std::to_string(n) + " binder(s)");
      names.push_back(l->hint);
      t = l->body;
    }
    return t;
  }

  Line line(TermPtr t, const char* what) {
    auto p = std::get_if<term::PLam>(&t->node);
    if (!p) fail_at(t->loc, std::string(what) + " must be a path abstraction <i> ...");
    return Line{p->dim, p->body};
  }

  TermPtr app_head() {
    const Token t = peek();
    if (t.kind != Tok::Ident || !kKeywords.count(t.text) || t.text == "Nat" || t.text == "zero" ||
        t.text == "north" || t.text == "south" || t.text == "U")
      return postfix();
    const std::string& k = t.text;
    Loc loc = t.loc;
    ++pos_;
    using namespace term;
    if (k == "succ") return make_term(Succ{postfix()}, loc);
    if (k == "fst") return make_term(Fst{postfix()}, loc);
    if (k == "snd") return make_term(Snd{postfix()}, loc);
    if (k == "unglue") return make_term(Unglue{postfix(), nullptr}, loc);
    if (k == "refl") return make_term(Refl{postfix()}, loc);
    if (k == "Susp") return make_term(Susp{postfix()}, loc);
    if (k == "natrec") {
      std::vector<Name> pn, sn;
      TermPtr motive = unlam(postfix(), 1, pn, "natrec motive");
      TermPtr z = postfix();
      TermPtr s = unlam(postfix(), 2, sn, "natrec step");
      TermPtr n = postfix();
      return make_term(NatRec{pn[0], motive, z, sn[0], sn[1], s, n}, loc);
    }
    if (k == "PathP") {
      Line l = line(postfix(), "PathP type");
      TermPtr u = postfix();
      TermPtr v = postfix();
      return make_term(PathP{l, u, v}, loc);
    }
    if (k == "Path") {
      TermPtr a = postfix();
      TermPtr u = postfix();
      TermPtr v = postfix();
      return make_term(PathP{Line{intern("_"), a}, u, v}, loc);
    }
    if (k == "Glue") {
      TermPtr a = postfix();
      System<GlueBranch> sys;
      for (auto& b : system().branches) {
        auto p = std::get_if<term::Pair>(&b.value->node);
        if (!p) fail_at(b.value->loc, "Glue branch must be a pair (T, e)");
        sys.branches.push_back({b.cof, GlueBranch{p->first, p->second}});
      }
      return make_term(term::Glue{a, sys}, loc);
    }
    if (k == "glue") {
      TermPtr a = postfix();
      return make_term(GlueElem{a, system()}, loc);
    }
    if (k == "comp") {
      if (!opts_.allow_comp)
        throw ParseError("mode-violation", loc, "comp is not available in the primitive-fill mode");
      Line l = line(postfix(), "comp type line");
      System<Line> sides = line_system();
      return make_term(Comp{l, sides, postfix()}, loc);
    }
    if (k == "fill") {
      const Token b = peek();
      if (b.kind != Tok::Number || (b.text != "0" && b.text != "1")) fail("fill expects a direction 0 or 1");
      ++pos_;
      Line l = line(postfix(), "fill type line");
      System<Line> sides = line_system();
      TermPtr base = postfix();
      expect("@");
      return make_term(Fill{b.text == "1", l, sides, base, dim_atom()}, loc);
    }
    if (k == "hcomp") {
      TermPtr a = postfix();
      System<Line> sides = line_system();
      return make_term(HComp{a, sides, postfix()}, loc);
    }
    if (k == "Id") {
      TermPtr a = postfix();
      TermPtr x = postfix();
      TermPtr y = postfix();
      return make_term(term::Id{a, x, y}, loc);
    }
    if (k == "idpair") {
      expect("[");
      Cofib phi = cofib();
      expect("]");
      return make_term(IdPair{phi, postfix()}, loc);
    }
    if (k == "J") {
      std::vector<Name> pn, dn;
      TermPtr motive = unlam(postfix(), 3, pn, "J motive");
      TermPtr d = unlam(postfix(), 1, dn, "J base case");
      TermPtr p = postfix();
      return make_term(term::J{pn[0], pn[1], pn[2], motive, dn[0], d, p}, loc);
    }
    if (k == "merid") {
      TermPtr a = postfix();
      return make_term(Merid{a, dim_atom()}, loc);
    }
    if (k == "susprec") {
      std::vector<Name> pn, mn;
      TermPtr motive = unlam(postfix(), 1, pn, "susprec motive");
      TermPtr n = postfix();
      TermPtr s = postfix();
      TermPtr m = unlam(postfix(), 1, mn, "susprec meridian case");
      TermPtr t2 = postfix();
      return make_term(SuspRec{pn[0], motive, n, s, mn[0], m, t2}, loc);
    }
    fail_at(loc, "'" + k + "' cannot start a term");
  }

  System<TermPtr> system() {
    System<TermPtr> out;
    expect("[");
    while (!is_sym("]")) {
      Cofib phi = cofib();
      expect("->");
      out.branches.push_back({phi, term()});
      if (!is_sym("]")) expect(",");
    }
    expect("]");
    return out;
  }

  System<Line> line_system() {
    System<Line> out;
    for (auto& b : system().branches) out.branches.push_back({b.cof, line(b.value, "system branch")});
    return out;
  }

  // ---- interval and cofibrations ----

  Name dim_name() {
    const Token t = peek();
    if (t.kind != Tok::Ident || is_keyword(t.text)) fail("expected a dimension but found " + describe(t));
    Name n = intern(t.text);
    if (!any_dim_ok && std::find(dims.begin(), dims.end(), n) == dims.end())
      throw ParseError("unbound", t.loc, "unbound dimension " + t.text);
    ++pos_;
    return n;
  }

  DimExpr dim_atom() {
    const Token t = peek();
    if (t.kind == Tok::Number) {
      if (t.text != "0" && t.text != "1") fail("dimension constants are 0 and 1");
      ++pos_;
      return DimExpr::constant(t.text == "1");
    }
    if (is_sym("-")) {
      ++pos_;
      return dim_reverse(dim_atom());
    }
    if (is_sym("(")) {
      ++pos_;
      DimExpr e = dim();
      expect(")");
      return e;
    }
    return DimExpr::var(dim_name());
  }

  DimExpr dim_meet_level() {
    DimExpr e = dim_atom();
    while (is_sym("/\\")) {
      ++pos_;
      e = cctt::dim_meet(e, dim_atom());
    }
    return e;
  }

  DimExpr dim() {
    DimExpr e = dim_meet_level();
    while (is_sym("\\/")) {
      ++pos_;
      e = dim_join(e, dim_meet_level());
    }
    return e;
  }

  Cofib cof_atom() {
    const Token t = peek();
    if (t.kind == Tok::CofConst) {
      ++pos_;
      return t.text == "1F" ? Cofib::top() : Cofib::bottom();
    }
    if (!is_sym("(")) fail("expected a cofibration but found " + describe(t));
    std::size_t save = pos_;
    ++pos_;
    try {
      DimExpr r = dim();
      if (is_sym("=")) {
        ++pos_;
        const Token b = peek();
        if (b.kind != Tok::Number || (b.text != "0" && b.text != "1")) fail("expected 0 or 1 after '='");
        ++pos_;
        expect(")");
        return cof_eq(r, b.text == "1");
      }
    } catch (const ParseError& e) {
      if (e.kind != "parse") throw;
    }
    pos_ = save + 1;
    Cofib c = cofib();
    expect(")");
    return c;
  }

  Cofib cof_conj() {
    Cofib c = cof_atom();
    while (is_sym("/\\")) {
      ++pos_;
      c = cof_and(c, cof_atom());
    }
    return c;
  }

  Cofib cofib() {
    Cofib c = cof_conj();
    while (is_sym("\\/")) {
      ++pos_;
      c = cof_or(c, cof_conj());
    }
    return c;
  }

  void finish() {
    if (!at_end()) fail("unexpected " + describe(peek()));
  }

 private:
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  const ParseOptions& opts_;
};

}  // namespace

Module parse_module(std::string_view text, const ParseOptions& opts) {
  std::vector<CanonPragma> pragmas;
  Parser p(Lexer(text, opts.internal_names).run(&pragmas), opts);
  return p.module(std::move(pragmas));
}

TermPtr parse_term(std::string_view text, const Scope& scope, const ParseOptions& opts) {
  Parser p(Lexer(text, opts.internal_names).run(nullptr), opts);
  p.vars = scope.vars;
  p.dims = scope.dims;
  TermPtr t = p.term();
  p.finish();
  return t;
}

DimExpr parse_dim(std::string_view text) {
  ParseOptions opts;
  Parser p(Lexer(text, false).run(nullptr), opts);
  p.any_dim_ok = true;
  DimExpr e = p.dim();
  p.finish();
  return e;
}

Cofib parse_cofib(std::string_view text) {
  ParseOptions opts;
  Parser p(Lexer(text, false).run(nullptr), opts);
  p.any_dim_ok = true;
  Cofib c = p.cofib();
  p.finish();
  return c;
}

}  // namespace cctt
