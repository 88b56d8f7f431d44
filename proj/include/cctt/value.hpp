#pragma once

#include <cstdint>
#include <memory>
#include <unordered_map>
#include <variant>
#include <vector>

#include "cctt/cofib.hpp"
#include "cctt/interval.hpp"
#include "cctt/syntax.hpp"

namespace cctt {

struct Value;
using Val = std::shared_ptr<const Value>;

/// Persistent evaluation environment: a stack of term values (de Bruijn
/// indexed) and a stack of dimension bindings from syntactic names to
/// interval expressions. Unmapped dimension names evaluate to themselves.
class Env {
 public:
  Env() = default;

  Env push(Val v) const;
  Env push_dim(Name syntactic, DimExpr value) const;
  const Val& lookup(int index) const;
  DimExpr lookup_dim(Name syntactic) const;
  int size() const { return size_; }
  std::uint64_t mask() const;

  /// Every entry, outermost first.
  std::vector<Val> values() const;
  std::vector<std::pair<Name, DimExpr>> dims() const;
  static Env build(const std::vector<Val>& values, const std::vector<std::pair<Name, DimExpr>>& dims);

 private:
  struct TermNode {
    Val value;
    std::shared_ptr<const TermNode> next;
  };
  struct DimNode {
    Name name;
    DimExpr value;
    std::shared_ptr<const DimNode> next;
  };
  std::shared_ptr<const TermNode> terms_;
  std::shared_ptr<const DimNode> dims_;
  int size_ = 0;
  std::uint64_t mask_ = 0;
};

struct Closure {
  Env env;
  TermPtr body;
};

struct GlueEquiv {
  Val type;
  Val equiv;
};

using VSys = FaceSystem<Val>;
using GlueSys = FaceSystem<GlueEquiv>;

namespace value {

struct U { int level; };
struct Pi { Name hint; Val dom; Closure cod; };
struct Lam { Name hint; Closure body; };
struct Sigma { Name hint; Val dom; Closure cod; };
struct Pair { Val first, second; };
struct Nat {};
struct Zero {};
struct Succ { Val pred; };
/// `type` may mention `dim`.
struct Path { Name dim; Val type; Val left, right; };
struct PLam { Name dim; Val body; };
struct Glue { Val base; GlueSys equivs; };
struct GlueElem { Val base; VSys parts; };
struct Id { Val type, left, right; };
struct IdPair { Cofib cof; Val path; };
struct Susp { Val type; };
struct North {};
struct South {};
struct Merid { Val arg; DimExpr at; };
/// Suspension constructor; the sides mention `dim`, the type does not.
struct HComp { Name dim; Val type; VSys sides; Val base; };

/// A composition that does not compute (yet): at Π types it computes on
/// application; at neutral types and ℕ with neutral parts it is stuck.
struct Comp { Name dim; Val type; VSys sides; Val base; };
/// Primitive filling, only produced in the primitive-fill mode.
struct Fill { Name dim; bool from_one; Val type; VSys sides; Val base; DimExpr at; };

struct Var { int level; Val type; };
struct App { Val fun, arg; };
struct Fst { Val pair; };
struct Snd { Val pair; };
struct PApp { Val path; DimExpr at; };
struct NatRec { Closure motive; Val zero_case; Closure succ_case; Val target; };
struct Unglue { Val arg; Val base; GlueSys equivs; };
struct J { Closure motive; Closure refl_case; Val target; };
struct SuspRec { Closure motive; Val north_case, south_case; Closure merid_case; Val target; };

}  // namespace value

struct Value {
  using Node = std::variant<value::U, value::Pi, value::Lam, value::Sigma, value::Pair, value::Nat,
                            value::Zero, value::Succ, value::Path, value::PLam, value::Glue,
                            value::GlueElem, value::Id, value::IdPair, value::Susp, value::North,
                            value::South, value::Merid, value::HComp, value::Comp, value::Fill,
                            value::Var, value::App, value::Fst, value::Snd, value::PApp,
                            value::NatRec, value::Unglue, value::J, value::SuspRec>;
  Node node;
  /// Over-approximation of the free dimension names (bit per name mod 64).
  std::uint64_t mask = 0;
};

Val make_value(Value::Node node);

template <class T>
const T* as(const Val& v) {
  return std::get_if<T>(&v->node);
}
/// The pointer would dangle once the temporary dies.
template <class T>
const T* as(Val&& v) = delete;

bool is_neutral(const Val& v);

struct GlobalEntry {
  Name name;
  Val type;
  Val value;
  TermPtr type_term;
  TermPtr body;
  bool failed = false;
};

class Globals {
 public:
  void add(GlobalEntry e) { entries_[e.name] = std::move(e); }
  const GlobalEntry* find(Name n) const {
    auto it = entries_.find(n);
    return it == entries_.end() ? nullptr : &it->second;
  }
  bool contains(Name n) const { return entries_.count(n) != 0; }

 private:
  std::unordered_map<Name, GlobalEntry> entries_;
};

}  // namespace cctt
