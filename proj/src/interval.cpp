#include "cctt/interval.hpp"

#include <algorithm>
#include <atomic>
#include <deque>
#include <mutex>
#include <unordered_map>

namespace cctt {

namespace {

struct NameTable {
  std::mutex mutex;
  std::unordered_map<std::string, Name> ids;
  std::deque<std::string> hints;
  std::deque<std::uint32_t> serials;  // 0 for interned names
  std::uint32_t next_serial = 1;

  static NameTable& get() {
    static NameTable table;
    return table;
  }
};

bool is_subset(const DimExpr::Meet& small, const DimExpr::Meet& big) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

DimExpr::Meet merge(const DimExpr::Meet& a, const DimExpr::Meet& b) {
  DimExpr::Meet out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace

Name intern(std::string_view text) {
  auto& t = NameTable::get();
  std::lock_guard lock(t.mutex);
  auto it = t.ids.find(std::string(text));
  if (it != t.ids.end()) return it->second;
  Name id = static_cast<Name>(t.hints.size());
  t.hints.emplace_back(text);
  t.serials.push_back(0);
  t.ids.emplace(std::string(text), id);
  return id;
}

Name fresh_name(std::string_view hint) {
  auto& t = NameTable::get();
  std::lock_guard lock(t.mutex);
  Name id = static_cast<Name>(t.hints.size());
  t.hints.emplace_back(hint.empty() ? std::string("i") : std::string(hint));
  t.serials.push_back(t.next_serial++);
  return id;
}

std::string name_text(Name n) {
  auto& t = NameTable::get();
  std::lock_guard lock(t.mutex);
  if (n >= t.hints.size()) return "?" + std::to_string(n);
  if (t.serials[n] == 0) return t.hints[n];
  return t.hints[n] + "'" + std::to_string(t.serials[n]);
}

std::string name_hint(Name n) {
  auto& t = NameTable::get();
  std::lock_guard lock(t.mutex);
  if (n >= t.hints.size()) return "?";
  return t.hints[n];
}

DimExpr DimExpr::one() {
  DimExpr e;
  e.meets_.emplace_back();
  return e;
}

DimExpr DimExpr::var(Name n) {
  DimExpr e;
  e.meets_.push_back({Literal{n, false}});
  return e;
}

DimExpr DimExpr::from_meets(std::vector<Meet> meets) {
  for (auto& m : meets) {
    std::sort(m.begin(), m.end());
    m.erase(std::unique(m.begin(), m.end()), m.end());
  }
  // Shorter meets first so absorption only has to look backwards.
  std::sort(meets.begin(), meets.end(), [](const Meet& a, const Meet& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  std::vector<Meet> kept;
  for (auto& m : meets) {
    bool absorbed = std::any_of(kept.begin(), kept.end(),
                                [&](const Meet& k) { return is_subset(k, m); });
    if (!absorbed) kept.push_back(std::move(m));
  }
  std::sort(kept.begin(), kept.end());
  DimExpr e;
  e.meets_ = std::move(kept);
  return e;
}

std::optional<bool> DimExpr::as_constant() const {
  if (is_zero()) return false;
  if (is_one()) return true;
  return std::nullopt;
}

std::optional<Name> DimExpr::as_var() const {
  if (meets_.size() == 1 && meets_[0].size() == 1 && !meets_[0][0].reversed)
    return meets_[0][0].name;
  return std::nullopt;
}

bool DimExpr::mentions(Name n) const {
  for (const auto& m : meets_)
    for (const auto& l : m)
      if (l.name == n) return true;
  return false;
}

std::vector<Name> DimExpr::names() const {
  std::vector<Name> out;
  for (const auto& m : meets_)
    for (const auto& l : m) out.push_back(l.name);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::uint64_t DimExpr::mask() const {
  std::uint64_t bits = 0;
  for (const auto& m : meets_)
    for (const auto& l : m) bits |= name_bit(l.name);
  return bits;
}

DimExpr dim_meet(const DimExpr& a, const DimExpr& b) {
  std::vector<DimExpr::Meet> out;
  out.reserve(a.meets().size() * b.meets().size());
  for (const auto& x : a.meets())
    for (const auto& y : b.meets()) out.push_back(merge(x, y));
  return DimExpr::from_meets(std::move(out));
}

DimExpr dim_join(const DimExpr& a, const DimExpr& b) {
  std::vector<DimExpr::Meet> out = a.meets();
  out.insert(out.end(), b.meets().begin(), b.meets().end());
  return DimExpr::from_meets(std::move(out));
}

DimExpr dim_reverse(const DimExpr& a) {
  // 1 - (\/_k /\_l x_kl) = /\_k \/_l (1 - x_kl)
  DimExpr acc = DimExpr::one();
  for (const auto& m : a.meets()) {
    std::vector<DimExpr::Meet> disjuncts;
    for (const auto& l : m) disjuncts.push_back({Literal{l.name, !l.reversed}});
    acc = dim_meet(acc, DimExpr::from_meets(std::move(disjuncts)));
  }
  return acc;
}

DimExpr dim_subst(const DimExpr& e, Name x, const DimExpr& r) {
  if (!e.mentions(x)) return e;
  DimExpr r_rev;
  bool have_rev = false;
  DimExpr acc = DimExpr::zero();
  for (const auto& m : e.meets()) {
    DimExpr term = DimExpr::one();
    DimExpr::Meet rest;
    for (const auto& l : m) {
      if (l.name != x) {
        rest.push_back(l);
        continue;
      }
      if (l.reversed) {
        if (!have_rev) {
          r_rev = dim_reverse(r);
          have_rev = true;
        }
        term = dim_meet(term, r_rev);
      } else {
        term = dim_meet(term, r);
      }
    }
    term = dim_meet(term, DimExpr::from_meets({rest}));
    acc = dim_join(acc, term);
  }
  return acc;
}

bool dim_equal(const DimExpr& a, const DimExpr& b) { return normalize(a) == normalize(b); }

DimExpr normalize(const DimExpr& e) { return DimExpr::from_meets(e.meets()); }

std::string to_string(const DimExpr& e) {
  if (e.is_zero()) return "0";
  if (e.is_one()) return "1";
  std::string out;
  bool first_meet = true;
  for (const auto& m : e.meets()) {
    if (!first_meet) out += " \\/ ";
    first_meet = false;
    bool first = true;
    for (const auto& l : m) {
      if (!first) out += " /\\ ";
      first = false;
      if (l.reversed) out += "-";
      out += name_text(l.name);
    }
  }
  return out;
}

}  // namespace cctt
