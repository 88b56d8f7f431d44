#include "cctt/cofib.hpp"

#include <algorithm>

namespace cctt {

std::optional<bool> Face::lookup(Name n) const {
  auto it = std::lower_bound(atoms_.begin(), atoms_.end(), n,
                             [](const Atom& a, Name k) { return a.first < k; });
  if (it != atoms_.end() && it->first == n) return it->second;
  return std::nullopt;
}

bool Face::subset_of(const Face& other) const {
  return std::includes(other.atoms_.begin(), other.atoms_.end(), atoms_.begin(), atoms_.end());
}

std::uint64_t Face::mask() const {
  std::uint64_t bits = 0;
  for (const auto& [n, b] : atoms_) bits |= name_bit(n);
  return bits;
}

std::optional<Face> face_meet(const Face& a, const Face& b) {
  Face out;
  auto i = a.atoms_.begin();
  auto j = b.atoms_.begin();
  while (i != a.atoms_.end() || j != b.atoms_.end()) {
    if (j == b.atoms_.end() || (i != a.atoms_.end() && i->first < j->first)) {
      out.atoms_.push_back(*i++);
    } else if (i == a.atoms_.end() || j->first < i->first) {
      out.atoms_.push_back(*j++);
    } else {
      if (i->second != j->second) return std::nullopt;
      out.atoms_.push_back(*i);
      ++i;
      ++j;
    }
  }
  return out;
}

Face Face::without(const Face& by) const {
  Face out;
  for (const auto& a : atoms_)
    if (!by.mentions(a.first)) out.atoms_.push_back(a);
  return out;
}

Cofib Cofib::of(Face f) {
  Cofib c;
  c.faces_.push_back(std::move(f));
  return c;
}

Cofib Cofib::from_faces(std::vector<Face> faces) {
  std::sort(faces.begin(), faces.end(), [](const Face& a, const Face& b) {
    if (a.atoms().size() != b.atoms().size()) return a.atoms().size() < b.atoms().size();
    return a < b;
  });
  std::vector<Face> kept;
  for (auto& f : faces) {
    bool absorbed =
        std::any_of(kept.begin(), kept.end(), [&](const Face& k) { return k.subset_of(f); });
    if (!absorbed) kept.push_back(std::move(f));
  }
  std::sort(kept.begin(), kept.end());
  Cofib c;
  c.faces_ = std::move(kept);
  return c;
}

bool Cofib::mentions(Name n) const {
  return std::any_of(faces_.begin(), faces_.end(), [&](const Face& f) { return f.mentions(n); });
}

std::uint64_t Cofib::mask() const {
  std::uint64_t bits = 0;
  for (const auto& f : faces_) bits |= f.mask();
  return bits;
}

Cofib cof_eq(const DimExpr& r, bool b) {
  // r = 1 iff some meet is 1 iff all of its literals are 1.
  const DimExpr target = b ? r : dim_reverse(r);
  std::vector<Face> faces;
  for (const auto& meet : target.meets()) {
    std::optional<Face> f = Face();
    for (const auto& lit : meet) {
      f = face_meet(*f, Face::atom(lit.name, !lit.reversed));
      if (!f) break;
    }
    if (f) faces.push_back(std::move(*f));
  }
  return Cofib::from_faces(std::move(faces));
}

Cofib cof_and(const Cofib& p, const Cofib& q) {
  std::vector<Face> faces;
  for (const auto& f : p.faces())
    for (const auto& g : q.faces())
      if (auto m = face_meet(f, g)) faces.push_back(std::move(*m));
  return Cofib::from_faces(std::move(faces));
}

Cofib cof_or(const Cofib& p, const Cofib& q) {
  std::vector<Face> faces = p.faces();
  faces.insert(faces.end(), q.faces().begin(), q.faces().end());
  return Cofib::from_faces(std::move(faces));
}

bool cof_entails(const Cofib& p, const Cofib& q) {
  for (const auto& f : p.faces()) {
    bool forced = std::any_of(q.faces().begin(), q.faces().end(),
                              [&](const Face& g) { return g.subset_of(f); });
    if (!forced) return false;
  }
  return true;
}

Cofib face_subst(const Face& f, Name x, const DimExpr& r) {
  auto b = f.lookup(x);
  if (!b) return Cofib::of(f);
  Face rest = f.without(Face::atom(x, *b));
  return cof_and(Cofib::of(rest), cof_eq(r, *b));
}

Cofib cof_subst(const Cofib& p, Name x, const DimExpr& r) {
  if (!p.mentions(x)) return p;
  Cofib acc;
  for (const auto& f : p.faces()) acc = cof_or(acc, face_subst(f, x, r));
  return acc;
}

Cofib cof_forall(Name x, const Cofib& p) {
  std::vector<Face> faces;
  for (const auto& f : p.faces())
    if (!f.mentions(x)) faces.push_back(f);
  return Cofib::from_faces(std::move(faces));
}

std::string to_string(const Face& f) {
  if (f.is_top()) return "1F";
  std::string out;
  bool first = true;
  for (const auto& [n, b] : f.atoms()) {
    if (!first) out += " /\\ ";
    first = false;
    out += "(" + name_text(n) + "=" + (b ? "1" : "0") + ")";
  }
  return out;
}

std::string to_string(const Cofib& c) {
  if (c.is_bottom()) return "0F";
  std::string out;
  bool first = true;
  for (const auto& f : c.faces()) {
    if (!first) out += " \\/ ";
    first = false;
    out += to_string(f);
  }
  return out;
}

}  // namespace cctt
