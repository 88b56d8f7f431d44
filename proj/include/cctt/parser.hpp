#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cctt/syntax.hpp"

namespace cctt {

/// A syntax, scoping or mode error found before typechecking.
struct ParseError : std::runtime_error {
  ParseError(std::string kind, Loc loc, const std::string& message)
      : std::runtime_error(message), kind(std::move(kind)), loc(loc) {}
  std::string kind;  // "parse", "unbound" or "mode-violation"
  Loc loc;
};

struct ParseOptions {
  /// `comp` is rejected when false (the primitive-fill mode).
  bool allow_comp = true;
  /// Identifiers may start with `%` (kernel-internal definitions).
  bool internal_names = false;
  /// Names already defined; consulted after the module's own definitions.
  std::function<bool(Name)> is_global = [](Name) { return false; };
};

/// Scope for parsing a single term: term variables (outermost first) and
/// dimension names in scope.
struct Scope {
  std::vector<Name> vars;
  std::vector<Name> dims;
};

Module parse_module(std::string_view text, const ParseOptions& opts = {});
TermPtr parse_term(std::string_view text, const Scope& scope = {}, const ParseOptions& opts = {});
DimExpr parse_dim(std::string_view text);
Cofib parse_cofib(std::string_view text);

}  // namespace cctt
