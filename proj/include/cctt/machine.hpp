#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "cctt/value.hpp"

namespace cctt {

enum class Mode { Strict, PrimitiveFill };

std::string to_string(Mode m);

/// Raised when evaluation hits something the checker should have ruled out.
struct EvalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Maps semantic dimension names back to the names a quoted term should use.
using DimRename = std::unordered_map<Name, Name>;

/// The evaluator, Kan operations, readback and conversion. Stateless apart
/// from the mode and the table of global definitions.
class Machine {
 public:
  Machine(Mode mode, const Globals& globals) : mode_(mode), globals_(globals) {}

  Mode mode() const { return mode_; }
  const Globals& globals() const { return globals_; }

  // Evaluation.
  Val eval(const Env& env, const TermPtr& t);
  Val instantiate(const Closure& c, const Val& a);
  Val instantiate(const Closure& c, const Val& a, const Val& b);
  Val instantiate(const Closure& c, const Val& a, const Val& b, const Val& d);
  DimExpr eval_dim(const Env& env, const DimExpr& r);
  Cofib eval_cof(const Env& env, const Cofib& phi);

  // Eliminators and smart constructors.
  Val app(const Val& f, const Val& a);
  Val fst(const Val& p);
  Val snd(const Val& p);
  Val papp(const Val& p, const DimExpr& r);
  Val natrec(const Closure& motive, const Val& z, const Closure& s, const Val& n);
  Val unglue(const Val& v, const Val& base, const GlueSys& equivs);
  Val jelim(const Closure& motive, const Closure& d, const Val& p);
  Val susprec(const Closure& motive, const Val& n, const Val& s, const Closure& m, const Val& t);
  Val merid(const Val& a, const DimExpr& r);
  Val glue_type(const Val& base, GlueSys equivs);
  Val glue_elem(const Val& base, VSys parts);

  // Kan operations. `type` and `sides` mention `i`; `base` lives at i = 0.
  Val comp(Name i, const Val& type, const Val& base, const VSys& sides);
  /// The filler as a line in `i` (strict mode: derived from comp).
  Val fill_line(Name i, const Val& type, const Val& base, const VSys& sides);
  /// fill from `from_one ? 1 : 0` evaluated at r.
  Val fill(Name i, bool from_one, const Val& type, const Val& base, const VSys& sides, const DimExpr& r);
  Val hcomp(Name i, const Val& type, const Val& base, const VSys& sides);

  // Dimension substitution.
  Val act(const Val& v, Name x, const DimExpr& r);
  Val face(const Val& v, const Face& f);
  Env act(const Env& e, Name x, const DimExpr& r);
  Env face(const Env& e, const Face& f);
  Closure act(const Closure& c, Name x, const DimExpr& r);
  VSys act(const VSys& s, Name x, const DimExpr& r);
  GlueSys act(const GlueSys& s, Name x, const DimExpr& r);
  /// Branches of `s` that survive restriction along `f`, restricted.
  VSys face_sys(const VSys& s, const Face& f);
  GlueSys face_sys(const GlueSys& s, const Face& f);

  /// Type of a neutral or stuck value.
  Val type_of(const Val& v);

  /// The value of a hidden kernel definition.
  Val core(const char* name);

  // Readback into eta-long normal forms.
  TermPtr quote(int depth, const Val& type, const Val& v, const DimRename& rn = {});
  TermPtr quote_type(int depth, const Val& type, const DimRename& rn = {});

  // Definitional equality.
  bool conv(int depth, const Val& type, const Val& a, const Val& b);
  bool conv_type(int depth, const Val& a, const Val& b);

  Val fresh_var(int level, const Val& type);
  Val path_type(const Val& type, const Val& left, const Val& right);

 private:
  Val comp_strict(Name i, const Val& type, const Val& base, const VSys& sides);
  Val comp_pi_app(const value::Comp& c, const Val& arg);
  Val comp_sigma(Name i, const value::Sigma& s, const Val& base, const VSys& sides);
  Val comp_path(Name i, const value::Path& p, const Val& base, const VSys& sides);
  Val comp_nat(Name i, const Val& type, const Val& base, const VSys& sides);
  Val comp_universe(Name i, const Val& base, const VSys& sides);
  Val comp_glue(Name i, const value::Glue& g, const Val& base, const VSys& sides);
  Val comp_id(Name i, const value::Id& t, const Val& base, const VSys& sides);
  Val comp_susp(Name i, const value::Susp& s, const Val& base, const VSys& sides);
  Val transp_susp(Name i, const Val& type_line, const Cofib& psi, const Val& u);
  Val stuck_comp(Name i, const Val& type, const Val& base, const VSys& sides);
  VSys eval_lines(const Env& env, const System<Line>& sys, Name i);
  VSys eval_sys(const Env& env, const System<TermPtr>& sys);
  GlueSys eval_glue_sys(const Env& env, const System<GlueBranch>& sys);
  Val jelim_pair(const Closure& motive, const Closure& d, const value::IdPair& p, const Val& type);

  Mode mode_;
  const Globals& globals_;
  std::unordered_map<std::string, Val> core_cache_;
};

}  // namespace cctt
