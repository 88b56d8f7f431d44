#include <doctest.h>

#include <map>

#include "cctt/checker.hpp"
#include "cctt/parser.hpp"
#include "support.hpp"

using namespace cctt;

namespace {

FileReport run(Mode mode, const std::string& text) {
  Session s(mode, support::base(mode));
  return s.check_text(text, "<test>");
}

std::string kinds(const FileReport& r) {
  std::string out;
  for (const auto& d : r.diagnostics) out += (out.empty() ? "" : " ") + d.kind;
  return out;
}

}  // namespace

TEST_CASE("the corpus checks in both modes") {
  for (const char* file : {"prelude.cctt", "nat.cctt", "equations.cctt", "univalence.cctt", "fill.cctt"})
    for (Mode mode : {Mode::Strict, Mode::PrimitiveFill}) {
      Session s(mode, support::base(mode, std::string(file) != "prelude.cctt"));
      FileReport r = s.check_file(support::corpus_path(file));
      INFO(file, " in ", to_string(mode));
      CHECK_MESSAGE(r.ok(), kinds(r));
    }
  Session s(Mode::Strict, support::base(Mode::Strict));
  CHECK(s.check_file(support::corpus_path("canon.cctt")).ok());
}

TEST_CASE("each error kind is reported once, later definitions still check") {
  Session s(Mode::Strict, support::base(Mode::Strict));
  FileReport r = s.check_file(support::corpus_path("broken.cctt"));
  std::map<std::string, std::string> kind_of;
  for (const auto& v : r.verdicts) kind_of[name_text(v.name)] = v.error ? v.error->kind : "ok";
  CHECK(kind_of["good_before"] == "ok");
  CHECK(kind_of["bad_mismatch"] == "mismatch");
  CHECK(kind_of["bad_boundary"] == "boundary");
  CHECK(kind_of["bad_universe"] == "universe");
  CHECK(kind_of["bad_system"] == "incompatible-system");
  CHECK(kind_of["bad_equiv"] == "not-an-equivalence");
  CHECK(kind_of["bad_use"] == "unbound");
  CHECK(kind_of["good_after"] == "ok");
  CHECK(r.diagnostics.size() == 6);
  for (const auto& d : r.diagnostics) CHECK(d.loc.line > 0);
}

TEST_CASE("parse-level errors") {
  CHECK(kinds(run(Mode::Strict, "def x : Nat = y\n")) == "unbound");
  CHECK(kinds(run(Mode::Strict, "def x : Nat = (\n")) == "parse");
  CHECK(kinds(run(Mode::PrimitiveFill, "def x : Nat = comp (<_> Nat) [] zero\n")) == "mode-violation");
  CHECK(kinds(run(Mode::Strict, "def add : Nat = zero\n")) == "parse");
}

TEST_CASE("an empty declaration list and a lone failure") {
  Globals globals = support::base(Mode::Strict);
  Machine m(Mode::Strict, globals);
  Checker c(m, globals);
  CHECK(c.check_declarations({}).empty());
  Module mod = parse_module("def bad : Nat = U\ndef good : U = Nat\n");
  auto verdicts = c.check_declarations(mod.decls);
  REQUIRE(verdicts.size() == 2);
  CHECK(verdicts[0].error.has_value());
  CHECK_FALSE(verdicts[1].error.has_value());
  REQUIRE(globals.find(intern("bad")));
  CHECK(globals.find(intern("bad"))->failed);
}

TEST_CASE("false equations are rejected") {
  const char* wrong[] = {
      "def w (A B : U) (f : A -> B) (g : A -> A) (a : A) : Path B ((\\(x : A) -> f (g x)) a) (f a) = <_> f a",
      "def w (A : U) (a b : A) : Path A (a, b).1 b = <_> b",
      "def w (A : U) (a b : A) : Path A ((a, b) : A * A).2 a = <_> a",
      "def w (P : Nat -> U) (z : P zero) (s : (n : Nat) -> P n -> P (succ n)) (n : Nat) :\n"
      "  Path (P (succ n)) (natrec (\\m -> P m) z (\\m ih -> s m ih) (succ n)) (s n z) = <_> s n z",
      "def w (A : U) (a b : A) (p : Path A a b) : Path A (p @ 0) b = <_> b",
      "def w (A : U) (a b : A) (p : Path A a b) : Path (Path A b a) (<i> p @ -i) (<i> p @ i) = <_> <i> p @ i",
      "def w (X Y : U) (A : Path U X Y) (x : X) : Path X (fill 0 (<i> A @ i) [] x @ 1) x = <_> x",
      "def w (A T : U) (e : Equiv T A) (t : T) (s : T) :\n"
      "  Path A (unglue (glue (e.1 t) [] : Glue A [])) (e.1 s) = <_> e.1 s",
      "def w (A : U) (a : A) : Path (Susp A) (merid a 0) south = <_> south",
      "def w (A : U) (P : (x y : A) -> Id A x y -> U) (d e : (x : A) -> P x x (refl x)) (a : A) :\n"
      "  Path (P a a (refl a)) (J (\\x y p -> P x y p) (\\x -> d x) (refl a)) (e a) = <_> e a",
      "def w (A : U) (a b : A) (p : Path A a b) :\n"
      "  Path (Path A a b) ((<k> <i> fill 0 (<_> A) [(k = 1) -> <j> p @ j] a @ i) @ 0) p = <_> p",
  };
  for (const char* text : wrong)
    for (Mode mode : {Mode::Strict, Mode::PrimitiveFill}) {
      INFO(text);
      FileReport r = run(mode, std::string(text) + "\n");
      CHECK((kinds(r) == "boundary" || kinds(r) == "mismatch"));
    }
}

TEST_CASE("mutated univalence proofs are rejected") {
  std::string text = support::read_file(support::corpus_path("univalence.cctt"));
  struct Mutation {
    const char* from;
    const char* to;
  };
  const Mutation mutations[] = {
      {"(k = 1) -> (T1, e1)]", "(k = 1) -> (T1, e0)]"},
      {"(i = 1) -> <j> v.2 @ j ] b @ 1)", "(i = 1) -> <j> v.2 @ -j ] b @ 1)"},
      {"\\A -> ( (A, idEquiv A)", "\\A -> ( (A, (\\x -> x, \\y -> ((y, <_> y), \\v -> <_> (y, <_> y))))"},
  };
  for (const auto& m : mutations) {
    auto at = text.find(m.from);
    REQUIRE(at != std::string::npos);
    std::string mutated = text;
    mutated.replace(at, std::string(m.from).size(), m.to);
    INFO(m.to);
    std::string k = kinds(run(Mode::Strict, mutated));
    CHECK_FALSE(k.empty());
    CHECK(k.find("parse") == std::string::npos);
  }
}
