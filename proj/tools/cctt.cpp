// cctt: check, evaluate and run canonicity pragmas over .cctt files.

#include <filesystem>
#include <future>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cctt/driver.hpp"
#include "cctt/printer.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace cctt;

struct Options {
  std::string mode = "strict";
  bool json = false;
  bool no_prelude = false;
  bool timing = false;
  std::vector<std::string> defs;
  std::vector<std::string> files;
};

enum class Command { Check, Eval, Canon };

struct FileOutput {
  std::string text;  // stdout
  std::string errors;  // stderr
  json report;
  int code = 0;  // 0 ok, 1 type/canon failure, 2 io
};

json diagnostic_json(const Diagnostic& d) {
  json j{{"file", d.file}, {"line", d.loc.line}, {"col", d.loc.col}, {"kind", d.kind}, {"message", d.message}};
  if (!d.expected.empty()) j["expected"] = d.expected;
  if (!d.actual.empty()) j["actual"] = d.actual;
  return j;
}

void add_diagnostics(FileOutput& out, const std::vector<Diagnostic>& ds) {
  for (const auto& d : ds) {
    out.errors += d.render() + "\n";
    out.report["diagnostics"].push_back(diagnostic_json(d));
  }
}

bool same_file(const std::string& a, const std::string& b) {
  std::error_code ec;
  return std::filesystem::equivalent(a, b, ec);
}

FileOutput run_file(Command cmd, const Options& o, Mode mode, const Globals& base, const std::string& path) {
  FileOutput out;
  out.report = json{{"path", path}, {"diagnostics", json::array()}};
  Session s(mode, base);
  FileReport r = s.check_file(path);
  add_diagnostics(out, r.diagnostics);
  if (r.io_error) {
    out.code = 2;
    out.report["ok"] = false;
    return out;
  }
  json decls = json::array();
  for (const auto& v : r.verdicts) {
    json d{{"name", name_text(v.name)}, {"ok", !v.error.has_value()}};
    if (o.timing) d["millis"] = v.millis;
    decls.push_back(d);
    if (o.timing && !o.json) {
      std::ostringstream line;
      line << path << ": " << name_text(v.name) << (v.error ? " failed" : " ok") << " in " << v.millis << " ms\n";
      out.text += line.str();
    }
  }
  out.report["declarations"] = decls;
  if (!r.ok()) out.code = 1;

  if (cmd == Command::Check && !o.json)
    out.text += path + ": " + (r.ok() ? "ok" : "failed") + " (" + std::to_string(r.verdicts.size()) +
                " declarations, " + std::to_string(r.diagnostics.size()) + " errors)\n";

  if (cmd == Command::Eval) {
    std::vector<Name> names;
    if (o.defs.empty()) {
      for (const auto& d : r.module.decls) names.push_back(d.name);
    } else {
      for (const auto& n : o.defs) names.push_back(intern(n));
    }
    json nfs = json::array();
    for (Name n : names) {
      bool declared = false;
      for (const auto& d : r.module.decls) declared = declared || d.name == n;
      if (!declared) {
        Diagnostic d{path, Loc{0, 0}, "unbound", "unknown definition " + name_text(n), {}, {}};
        add_diagnostics(out, {d});
        out.code = std::max(out.code, 1);
        continue;
      }
      auto nf = s.normal_form(n);
      if (!nf) continue;  // already reported as a check failure
      std::string printed = print_term(*nf);
      nfs.push_back(json{{"name", name_text(n)}, {"term", printed}});
      out.text += o.defs.empty() ? name_text(n) + " = " + printed + "\n" : printed + "\n";
    }
    out.report["normal_forms"] = nfs;
  }

  if (cmd == Command::Canon) {
    json cs = json::array();
    for (const auto& c : s.canon(r.module)) {
      json j{{"name", name_text(c.pragma.name)}, {"expected", c.pragma.value}, {"ok", c.ok()}};
      if (c.value) j["value"] = *c.value;
      if (!c.ok()) {
        j["message"] = c.problem;
        Diagnostic d{path, c.pragma.loc, "canon", c.problem, std::to_string(c.pragma.value), c.printed};
        out.errors += d.render() + "\n";
        out.code = std::max(out.code, 1);
      }
      cs.push_back(j);
    }
    if (!o.json) {
      long good = 0;
      for (const auto& j : cs) good += j["ok"].get<bool>() ? 1 : 0;
      out.text += path + ": " + std::to_string(good) + "/" + std::to_string(cs.size()) + " canon pragmas hold\n";
    }
    out.report["canon"] = cs;
  }
  out.report["ok"] = out.code == 0;
  return out;
}

int run(Command cmd, const Options& o) {
  const char* cmd_name = cmd == Command::Check ? "check" : cmd == Command::Eval ? "eval" : "canon";
  Mode mode = o.mode == "primitive-fill" ? Mode::PrimitiveFill : Mode::Strict;
  json top{{"command", cmd_name}, {"mode", to_string(mode)}, {"files", json::array()}};
  auto finish = [&](int code) {
    if (o.json) {
      top["exit"] = code;
      std::cout << top.dump(2) << "\n";
    }
    return code;
  };

  if (cmd == Command::Canon && mode != Mode::Strict) {
    Diagnostic d{"cctt", Loc{0, 0}, "mode-violation", "canon requires the strict mode", {}, {}};
    if (o.json)
      top["diagnostics"] = json::array({diagnostic_json(d)});
    else
      std::cerr << d.render() << "\n";
    return finish(2);
  }

  const std::string prelude_path = default_prelude_path();
  Base core, full;
  try {
    core = make_base(mode, false, prelude_path);
    if (!o.no_prelude) full = make_base(mode, true, prelude_path);
  } catch (const std::exception& e) {
    std::cerr << "cctt: [internal] " << e.what() << "\n";
    return finish(2);
  }

  int code = 0;
  if (full.prelude && !full.prelude->ok()) {
    for (const auto& d : full.prelude->diagnostics) std::cerr << d.render() << "\n";
    json diags = json::array();
    for (const auto& d : full.prelude->diagnostics) diags.push_back(diagnostic_json(d));
    top["prelude"] = json{{"path", prelude_path}, {"ok", false}, {"diagnostics", diags}};
    code = full.prelude->io_error ? 2 : 1;
    return finish(code);
  }

  std::vector<std::future<FileOutput>> jobs;
  for (const auto& f : o.files) {
    // The prelude itself is checked against the bare core.
    const Globals& base = o.no_prelude || same_file(f, prelude_path) ? core.globals : full.globals;
    jobs.push_back(std::async(std::launch::async, [&, f] { return run_file(cmd, o, mode, base, f); }));
  }
  for (auto& j : jobs) {
    FileOutput out = j.get();
    if (!o.json) {
      std::cout << out.text << std::flush;
      std::cerr << out.errors << std::flush;
    }
    top["files"].push_back(std::move(out.report));
    code = std::max(code, out.code);
  }
  return finish(code);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cctt: a cubical type theory kernel"};
  app.require_subcommand(1);
  Options o;
  Command cmd = Command::Check;
  auto add = [&](const char* name, const char* help, Command c) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("--mode", o.mode, "kernel mode")
        ->check(CLI::IsMember({"strict", "primitive-fill"}))
        ->capture_default_str();
    sub->add_flag("--json", o.json, "machine-readable output");
    sub->add_flag("--no-prelude", o.no_prelude, "do not load the prelude");
    sub->add_flag("--timing", o.timing, "report per-declaration timing");
    if (c == Command::Eval) sub->add_option("--def", o.defs, "definitions to normalize (default: all)");
    sub->add_option("files", o.files, "input files")->required();
    sub->callback([&cmd, c] { cmd = c; });
  };
  add("check", "typecheck files", Command::Check);
  add("eval", "print normal forms of definitions", Command::Eval);
  add("canon", "evaluate #canon pragmas (strict mode)", Command::Canon);
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }
  return run(cmd, o);
}
