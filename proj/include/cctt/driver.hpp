#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cctt/checker.hpp"
#include "cctt/machine.hpp"
#include "cctt/syntax.hpp"

namespace cctt {

/// Source of the hidden definitions (`%Equiv` and friends) Glue needs.
const char* core_source();

/// Prelude location: $CCTT_PRELUDE, else the copy shipped with the sources.
std::string default_prelude_path();

struct Diagnostic {
  std::string file;
  Loc loc;
  std::string kind;
  std::string message;
  std::string expected;
  std::string actual;

  /// `file:line:col: [kind] message`
  std::string render() const;
};

struct FileReport {
  std::string path;
  bool io_error = false;
  std::vector<DeclVerdict> verdicts;
  std::vector<Diagnostic> diagnostics;
  Module module;

  bool ok() const { return !io_error && diagnostics.empty(); }
};

struct CanonResult {
  CanonPragma pragma;
  std::optional<long> value;
  std::string printed;
  std::string problem;  // empty when the value matches

  bool ok() const { return problem.empty(); }
};

/// succ^k zero as k; nullopt for anything else.
std::optional<long> numeral(const Val& v);

/// One top-level environment with its own machine and checker.
class Session {
 public:
  explicit Session(Mode mode, Globals base = {});
  Session(const Session&) = delete;
  Session& operator=(const Session&) = delete;

  Mode mode() const { return machine_.mode(); }
  Globals& globals() { return globals_; }
  Machine& machine() { return machine_; }
  Checker& checker() { return checker_; }

  /// Checks the hidden definitions; throws std::runtime_error on failure.
  void load_core();

  FileReport check_text(const std::string& text, const std::string& path);
  FileReport check_file(const std::string& path);

  /// quote(eval(def)) of a committed declaration, or nullopt.
  std::optional<TermPtr> normal_form(Name name);

  /// Evaluates every `#canon` pragma of a checked module.
  std::vector<CanonResult> canon(const Module& m);

 private:
  Globals globals_;
  Machine machine_;
  Checker checker_;
};

/// The globals after the core and (optionally) the prelude, shared by every
/// file of an invocation.
struct Base {
  Globals globals;
  std::optional<FileReport> prelude;
};

Base make_base(Mode mode, bool with_prelude, const std::string& prelude_path);

}  // namespace cctt
