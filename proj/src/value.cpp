#include "cctt/value.hpp"

#include <stdexcept>

namespace cctt {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

std::uint64_t m(const Val& v) { return v ? v->mask : 0; }
std::uint64_t m(const Closure& c) { return c.env.mask(); }
std::uint64_t m(const DimExpr& r) { return r.mask(); }
std::uint64_t m(const VSys& s) {
  std::uint64_t bits = 0;
  for (const auto& b : s) bits |= b.face.mask() | m(b.value);
  return bits;
}
std::uint64_t m(const GlueSys& s) {
  std::uint64_t bits = 0;
  for (const auto& b : s) bits |= b.face.mask() | m(b.value.type) | m(b.value.equiv);
  return bits;
}

template <class... Xs>
std::uint64_t all(const Xs&... xs) {
  return (std::uint64_t{0} | ... | m(xs));
}

std::uint64_t mask_of(const Value::Node& node) {
  using namespace value;
  return std::visit(
      overloaded{
          [](const U&) -> std::uint64_t { return 0; },
          [](const Pi& n) { return all(n.dom, n.cod); },
          [](const Lam& n) { return all(n.body); },
          [](const Sigma& n) { return all(n.dom, n.cod); },
          [](const Pair& n) { return all(n.first, n.second); },
          [](const Nat&) -> std::uint64_t { return 0; },
          [](const Zero&) -> std::uint64_t { return 0; },
          [](const Succ& n) { return all(n.pred); },
          [](const Path& n) { return all(n.type, n.left, n.right); },
          [](const PLam& n) { return all(n.body); },
          [](const Glue& n) { return all(n.base, n.equivs); },
          [](const GlueElem& n) { return all(n.base, n.parts); },
          [](const Id& n) { return all(n.type, n.left, n.right); },
          [](const IdPair& n) { return n.cof.mask() | all(n.path); },
          [](const Susp& n) { return all(n.type); },
          [](const North&) -> std::uint64_t { return 0; },
          [](const South&) -> std::uint64_t { return 0; },
          [](const Merid& n) { return all(n.arg, n.at); },
          [](const HComp& n) { return all(n.type, n.sides, n.base); },
          [](const Comp& n) { return all(n.type, n.sides, n.base); },
          [](const Fill& n) { return all(n.type, n.sides, n.base, n.at); },
          [](const Var& n) { return all(n.type); },
          [](const App& n) { return all(n.fun, n.arg); },
          [](const Fst& n) { return all(n.pair); },
          [](const Snd& n) { return all(n.pair); },
          [](const PApp& n) { return all(n.path, n.at); },
          [](const NatRec& n) { return all(n.motive, n.zero_case, n.succ_case, n.target); },
          [](const Unglue& n) { return all(n.arg, n.base, n.equivs); },
          [](const J& n) { return all(n.motive, n.refl_case, n.target); },
          [](const SuspRec& n) {
            return all(n.motive, n.north_case, n.south_case, n.merid_case, n.target);
          },
      },
      node);
}

}  // namespace

Val make_value(Value::Node node) {
  std::uint64_t bits = mask_of(node);
  return std::make_shared<const Value>(Value{std::move(node), bits});
}

bool is_neutral(const Val& v) {
  using namespace value;
  return std::holds_alternative<Var>(v->node) || std::holds_alternative<App>(v->node) ||
         std::holds_alternative<Fst>(v->node) || std::holds_alternative<Snd>(v->node) ||
         std::holds_alternative<PApp>(v->node) || std::holds_alternative<NatRec>(v->node) ||
         std::holds_alternative<Unglue>(v->node) || std::holds_alternative<J>(v->node) ||
         std::holds_alternative<SuspRec>(v->node) || std::holds_alternative<Comp>(v->node) ||
         std::holds_alternative<Fill>(v->node);
}

Env Env::push(Val v) const {
  Env e = *this;
  e.mask_ |= v->mask;
  e.terms_ = std::make_shared<const TermNode>(TermNode{std::move(v), terms_});
  ++e.size_;
  return e;
}

Env Env::push_dim(Name syntactic, DimExpr value) const {
  Env e = *this;
  e.mask_ |= value.mask();
  e.dims_ = std::make_shared<const DimNode>(DimNode{syntactic, std::move(value), dims_});
  return e;
}

const Val& Env::lookup(int index) const {
  const TermNode* n = terms_.get();
  for (int k = 0; k < index && n; ++k) n = n->next.get();
  if (!n) throw std::logic_error("unbound de Bruijn index " + std::to_string(index));
  return n->value;
}

DimExpr Env::lookup_dim(Name syntactic) const {
  for (const DimNode* n = dims_.get(); n; n = n->next.get())
    if (n->name == syntactic) return n->value;
  return DimExpr::var(syntactic);
}

std::uint64_t Env::mask() const { return mask_; }

std::vector<Val> Env::values() const {
  std::vector<Val> out;
  for (const TermNode* n = terms_.get(); n; n = n->next.get()) out.push_back(n->value);
  return {out.rbegin(), out.rend()};
}

std::vector<std::pair<Name, DimExpr>> Env::dims() const {
  std::vector<std::pair<Name, DimExpr>> out;
  for (const DimNode* n = dims_.get(); n; n = n->next.get()) out.emplace_back(n->name, n->value);
  return {out.rbegin(), out.rend()};
}

Env Env::build(const std::vector<Val>& values, const std::vector<std::pair<Name, DimExpr>>& dims) {
  Env e;
  for (const auto& v : values) e = e.push(v);
  for (const auto& [n, r] : dims) e = e.push_dim(n, r);
  return e;
}

}  // namespace cctt
