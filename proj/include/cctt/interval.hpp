#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace cctt {

/// Interned identifier for dimension names (and term-variable hints).
using Name = std::uint32_t;

/// Returns the id for `text`, creating it on first use. Thread-safe.
Name intern(std::string_view text);

/// A name distinct from every name handed out before. The hint is only
/// used for display.
Name fresh_name(std::string_view hint = "i");

/// Display text of a name. Fresh names render as `hint'N`.
std::string name_text(Name n);

/// The user-facing stem of a name (fresh names drop their counter).
std::string name_hint(Name n);

inline std::uint64_t name_bit(Name n) { return std::uint64_t{1} << (n % 64); }

struct Literal {
  Name name;
  bool reversed;

  auto operator<=>(const Literal&) const = default;
};

/// An element of the free De Morgan algebra over dimension names, always kept
/// in normal form: a join of meets of literals, each meet sorted and
/// deduplicated, the meets sorted with absorption applied. `i /\ -i` is *not*
/// collapsed to 0.
class DimExpr {
 public:
  using Meet = std::vector<Literal>;

  DimExpr() = default;  // 0

  static DimExpr zero() { return DimExpr(); }
  static DimExpr one();
  static DimExpr var(Name n);
  static DimExpr constant(bool b) { return b ? one() : zero(); }

  const std::vector<Meet>& meets() const { return meets_; }

  bool is_zero() const { return meets_.empty(); }
  bool is_one() const { return meets_.size() == 1 && meets_.front().empty(); }
  std::optional<bool> as_constant() const;
  /// The name if this expression is a single positive literal.
  std::optional<Name> as_var() const;

  bool mentions(Name n) const;
  std::vector<Name> names() const;
  std::uint64_t mask() const;

  friend bool operator==(const DimExpr&, const DimExpr&) = default;
  friend auto operator<=>(const DimExpr& a, const DimExpr& b) { return a.meets_ <=> b.meets_; }

  /// Builds from arbitrary meets, normalizing.
  static DimExpr from_meets(std::vector<Meet> meets);

 private:
  std::vector<Meet> meets_;
};

DimExpr dim_meet(const DimExpr& a, const DimExpr& b);
DimExpr dim_join(const DimExpr& a, const DimExpr& b);
DimExpr dim_reverse(const DimExpr& a);
/// Capture-free replacement of `x` by `r`; a De Morgan homomorphism.
DimExpr dim_subst(const DimExpr& e, Name x, const DimExpr& r);
/// Simultaneous substitution: each literal's name is replaced by f(name).
template <class F>
DimExpr dim_subst_all(const DimExpr& e, F&& f) {
  DimExpr acc = DimExpr::zero();
  for (const auto& m : e.meets()) {
    DimExpr term = DimExpr::one();
    for (const auto& l : m) {
      DimExpr v = f(l.name);
      term = dim_meet(term, l.reversed ? dim_reverse(v) : v);
    }
    acc = dim_join(acc, term);
  }
  return acc;
}
bool dim_equal(const DimExpr& a, const DimExpr& b);
/// Rebuilds the normal form from scratch; the identity on well-formed values.
DimExpr normalize(const DimExpr& e);

std::string to_string(const DimExpr& e);

}  // namespace cctt
