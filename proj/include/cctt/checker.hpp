#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cctt/machine.hpp"
#include "cctt/syntax.hpp"

namespace cctt {

struct CheckError : std::runtime_error {
  CheckError(std::string kind, Loc loc, const std::string& message, std::string expected = {},
             std::string actual = {})
      : std::runtime_error(message),
        kind(std::move(kind)),
        loc(loc),
        expected(std::move(expected)),
        actual(std::move(actual)) {}
  /// mismatch | unbound | universe | boundary | incompatible-system |
  /// not-an-equivalence | mode-violation
  std::string kind;
  Loc loc;
  std::string expected;
  std::string actual;
};

/// Typing context. Term variables are values `Var{level}`; syntactic
/// dimension names are bound in the environment to fresh semantic names,
/// which restriction by a face may turn into constants.
struct Context {
  Env env;
  int depth = 0;
  std::vector<Name> names;  // outermost first
  std::vector<Val> types;
  DimRename rename;        // semantic -> syntactic
  std::vector<Face> restrictions;

  Context bind(Name hint, const Val& type) const;
  /// Binds syntactic dimension `syn` to semantic `sem`.
  Context bind_dim(Name syn, Name sem) const;
};

struct DeclVerdict {
  Name name;
  std::optional<CheckError> error;
  double millis = 0;
};

class Checker {
 public:
  Checker(Machine& machine, Globals& globals) : m_(machine), globals_(globals) {}

  /// Returns the elaborated term.
  TermPtr check(const Context& ctx, const TermPtr& t, const Val& type);
  std::pair<TermPtr, Val> infer(const Context& ctx, const TermPtr& t);
  /// Returns the elaborated type and its least universe level.
  std::pair<TermPtr, int> check_type(const Context& ctx, const TermPtr& t);
  bool convert(const Context& ctx, const Val& type, const Val& a, const Val& b);

  Context restrict(const Context& ctx, const Face& f);

  /// Checks one declaration and commits it (failed declarations are
  /// committed as unusable so later references report cleanly).
  DeclVerdict check_decl(const Decl& d);
  std::vector<DeclVerdict> check_declarations(const std::vector<Decl>& decls);

  std::string show_type(const Context& ctx, const Val& type);
  std::string show(const Context& ctx, const Val& type, const Val& v);

 private:
  struct Branch {
    Face face;
    Val value;
  };

  TermPtr check_lam(const Context& ctx, const TermPtr& t, const Val& type);
  TermPtr check_glue_elem(const Context& ctx, const TermPtr& t, const Val& type);
  System<Line> check_lines(const Context& ctx, const System<Line>& sides, Name sem, const Val& line,
                           const Val& base, bool at_one);
  void check_compatible(const Context& ctx, const std::vector<Branch>& branches, const Val& type,
                        bool type_is_line, Loc loc);
  Cofib syntactic(const Context& ctx, const Face& f) const;
  void subsume(const Context& ctx, Loc loc, const Val& actual, const Val& expected);
  Val equiv_type(const Val& t, const Val& a);
  [[noreturn]] void mismatch(const Context& ctx, Loc loc, const std::string& what, const Val& expected,
                             const Val& actual);

  Machine& m_;
  Globals& globals_;
};

}  // namespace cctt
