#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cctt/interval.hpp"

namespace cctt {

/// A conjunction of endpoint atoms (i=b), stored as a map sorted by name.
/// The empty face is the true conjunct.
class Face {
 public:
  using Atom = std::pair<Name, bool>;

  Face() = default;
  static Face atom(Name n, bool b) {
    Face f;
    f.atoms_.push_back({n, b});
    return f;
  }

  const std::vector<Atom>& atoms() const& { return atoms_; }
  std::vector<Atom> atoms() && { return std::move(atoms_); }
  bool is_top() const { return atoms_.empty(); }
  std::optional<bool> lookup(Name n) const;
  bool mentions(Name n) const { return lookup(n).has_value(); }
  /// True if every atom of `this` also occurs in `other`.
  bool subset_of(const Face& other) const;
  std::uint64_t mask() const;

  /// Conjunction; empty when the two faces disagree on some name.
  friend std::optional<Face> face_meet(const Face& a, const Face& b);
  /// Drop atoms on names fixed by `by` (used after restricting along `by`).
  Face without(const Face& by) const;

  friend bool operator==(const Face&, const Face&) = default;
  friend auto operator<=>(const Face&, const Face&) = default;

 private:
  std::vector<Atom> atoms_;
};

std::optional<Face> face_meet(const Face& a, const Face& b);

/// A cofibrant proposition: a disjunction of faces in canonical form
/// (sorted, absorbed, contradictory conjuncts dropped). Structural equality is
/// semantic equality.
class Cofib {
 public:
  Cofib() = default;  // bottom

  static Cofib bottom() { return Cofib(); }
  static Cofib top() { return of(Face()); }
  static Cofib of(Face f);
  static Cofib atom(Name n, bool b) { return of(Face::atom(n, b)); }
  static Cofib from_faces(std::vector<Face> faces);

  const std::vector<Face>& faces() const& { return faces_; }
  std::vector<Face> faces() && { return std::move(faces_); }
  bool is_bottom() const { return faces_.empty(); }
  bool is_top() const { return faces_.size() == 1 && faces_[0].is_top(); }
  bool mentions(Name n) const;
  std::uint64_t mask() const;

  friend bool operator==(const Cofib&, const Cofib&) = default;

 private:
  std::vector<Face> faces_;
};

/// [r = b] as a cofibration.
Cofib cof_eq(const DimExpr& r, bool b);
Cofib cof_and(const Cofib& p, const Cofib& q);
Cofib cof_or(const Cofib& p, const Cofib& q);
bool cof_entails(const Cofib& p, const Cofib& q);
Cofib cof_subst(const Cofib& p, Name x, const DimExpr& r);
/// Weakest cofibration not mentioning x that entails p.
Cofib cof_forall(Name x, const Cofib& p);
/// Substitution applied to a single face.
Cofib face_subst(const Face& f, Name x, const DimExpr& r);

std::string to_string(const Face& f);
std::string to_string(const Cofib& c);

/// A partial element: branches whose cofibrations may overlap. Compatibility
/// on overlaps is checked by the typechecker, not here.
template <class V>
struct Branch {
  Cofib cof;
  V value;
};

template <class V>
struct System {
  std::vector<Branch<V>> branches;

  Cofib cofib() const {
    Cofib acc;
    for (const auto& b : branches) acc = cof_or(acc, b.cof);
    return acc;
  }
  bool empty() const { return branches.empty(); }
};

/// The semantic form of a system: one branch per face.
template <class V>
struct FaceBranch {
  Face face;
  V value;
};

template <class V>
using FaceSystem = std::vector<FaceBranch<V>>;

template <class V>
Cofib system_cofib(const FaceSystem<V>& sys) {
  std::vector<Face> faces;
  for (const auto& b : sys) faces.push_back(b.face);
  return Cofib::from_faces(std::move(faces));
}

}  // namespace cctt
