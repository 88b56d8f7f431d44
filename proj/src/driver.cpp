#include "cctt/driver.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "cctt/parser.hpp"
#include "cctt/printer.hpp"

#ifndef CCTT_SOURCE_PRELUDE
#define CCTT_SOURCE_PRELUDE "corpus/prelude.cctt"
#endif

namespace cctt {

std::string default_prelude_path() {
  if (const char* env = std::getenv("CCTT_PRELUDE"); env && *env) return env;
  return CCTT_SOURCE_PRELUDE;
}

std::string Diagnostic::render() const {
  std::ostringstream os;
  os << file << ':' << loc.line << ':' << loc.col << ": [" << kind << "] " << message;
  return os.str();
}

Session::Session(Mode mode, Globals base)
    : globals_(std::move(base)), machine_(mode, globals_), checker_(machine_, globals_) {}

void Session::load_core() {
  ParseOptions opts;
  opts.allow_comp = true;
  opts.internal_names = true;
  Module m = parse_module(core_source(), opts);
  for (const auto& d : m.decls) {
    DeclVerdict v = checker_.check_decl(d);
    if (v.error)
      throw std::runtime_error("kernel definition " + name_text(d.name) + " failed: " + v.error->what());
  }
}

FileReport Session::check_text(const std::string& text, const std::string& path) {
  FileReport r;
  r.path = path;
  ParseOptions opts;
  opts.allow_comp = mode() == Mode::Strict;
  opts.is_global = [this](Name n) { return globals_.contains(n); };
  try {
    r.module = parse_module(text, opts);
  } catch (const ParseError& e) {
    r.diagnostics.push_back({path, e.loc, e.kind, e.what(), {}, {}});
    return r;
  }
  for (const auto& d : r.module.decls) {
    if (globals_.contains(d.name)) {
      r.diagnostics.push_back({path, d.loc, "parse", name_text(d.name) + " is already defined", {}, {}});
      continue;
    }
    DeclVerdict v = checker_.check_decl(d);
    if (v.error) {
      const CheckError& e = *v.error;
      r.diagnostics.push_back({path, e.loc, e.kind, e.what(), e.expected, e.actual});
    }
    r.verdicts.push_back(std::move(v));
  }
  return r;
}

FileReport Session::check_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    FileReport r;
    r.path = path;
    r.io_error = true;
    r.diagnostics.push_back({path, Loc{0, 0}, "io", "cannot read file", {}, {}});
    return r;
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return check_text(buf.str(), path);
}

std::optional<TermPtr> Session::normal_form(Name name) {
  const GlobalEntry* e = globals_.find(name);
  if (!e || e->failed) return std::nullopt;
  return machine_.quote(0, e->type, e->value);
}

std::optional<long> numeral(const Val& v) {
  long k = 0;
  Val cur = v;
  while (auto s = as<value::Succ>(cur)) {
    ++k;
    cur = s->pred;
  }
  if (!as<value::Zero>(cur)) return std::nullopt;
  return k;
}

std::vector<CanonResult> Session::canon(const Module& m) {
  std::vector<CanonResult> out;
  for (const auto& p : m.canon) {
    CanonResult r{p, std::nullopt, {}, {}};
    const GlobalEntry* e = globals_.find(p.name);
    if (!e || e->failed) {
      r.problem = name_text(p.name) + " is not a checked definition";
    } else if (!as<value::Nat>(e->type)) {
      r.problem = name_text(p.name) + " does not have type Nat";
    } else {
      r.value = numeral(e->value);
      try {
        r.printed = print_term(machine_.quote(0, e->type, e->value));
      } catch (const std::exception& ex) {
        r.printed = std::string("<readback failed: ") + ex.what() + ">";
      }
      if (!r.value)
        r.problem = "kernel bug: closed natural number " + name_text(p.name) + " is not a numeral: " + r.printed;
      else if (*r.value != p.value)
        r.problem = name_text(p.name) + " evaluates to " + std::to_string(*r.value) + ", expected " +
                    std::to_string(p.value);
    }
    out.push_back(std::move(r));
  }
  return out;
}

Base make_base(Mode mode, bool with_prelude, const std::string& prelude_path) {
  Session s(mode);
  s.load_core();
  Base b;
  if (with_prelude) b.prelude = s.check_file(prelude_path);
  b.globals = s.globals();
  return b;
}

}  // namespace cctt
