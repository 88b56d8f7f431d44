// Glue between the oracles and the kernel, shared by the unit tests and the
// acceptance binary.
#pragma once

#include <fstream>
#include <map>
#include <mutex>
#include <sstream>
#include <string>
#include <vector>

#include "cctt/cofib.hpp"
#include "cctt/driver.hpp"
#include "cctt/interval.hpp"
#include "oracles.hpp"

namespace support {

inline const std::vector<std::string>& dim_names() {
  static const std::vector<std::string> names{"i", "j", "k", "l"};
  return names;
}

inline cctt::Name dim_name(int k) { return cctt::intern(dim_names().at(k)); }

inline cctt::DimExpr to_kernel(const oracle::DimP& e) {
  using oracle::Dim;
  switch (e->kind) {
    case Dim::Zero: return cctt::DimExpr::zero();
    case Dim::One: return cctt::DimExpr::one();
    case Dim::Var: return cctt::DimExpr::var(dim_name(e->var));
    case Dim::Neg: return cctt::dim_reverse(to_kernel(e->l));
    case Dim::Meet: return cctt::dim_meet(to_kernel(e->l), to_kernel(e->r));
    case Dim::Join: return cctt::dim_join(to_kernel(e->l), to_kernel(e->r));
  }
  return {};
}

inline cctt::Cofib to_kernel(const oracle::CofP& c) {
  using oracle::Cof;
  switch (c->kind) {
    case Cof::Bot: return cctt::Cofib::bottom();
    case Cof::Top: return cctt::Cofib::top();
    case Cof::Eq: return cctt::cof_eq(to_kernel(c->dim), c->endpoint);
    case Cof::And: return cctt::cof_and(to_kernel(c->l), to_kernel(c->r));
    case Cof::Or: return cctt::cof_or(to_kernel(c->l), to_kernel(c->r));
  }
  return {};
}

/// A kernel cofibration holds under ρ iff one of its faces is contained in ρ.
inline bool kernel_holds(const cctt::Cofib& c, const oracle::Partial& rho) {
  for (const auto& f : c.faces()) {
    bool in = true;
    for (const auto& [n, b] : f.atoms()) {
      bool found = false;
      for (int k = 0; k < static_cast<int>(rho.size()); ++k)
        if (dim_name(k) == n && rho[k] != oracle::Pt::Unset) found = (rho[k] == oracle::Pt::One) == b;
      in = in && found;
    }
    if (in) return true;
  }
  return false;
}

inline std::string corpus_path(const std::string& file) { return std::string(CCTT_CORPUS_DIR) + "/" + file; }

/// Core plus prelude, checked once per mode.
inline const cctt::Globals& base(cctt::Mode mode, bool prelude = true) {
  static std::map<std::pair<cctt::Mode, bool>, cctt::Base> cache;
  static std::mutex lock;
  std::lock_guard<std::mutex> guard(lock);
  auto key = std::make_pair(mode, prelude);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, cctt::make_base(mode, prelude, corpus_path("prelude.cctt"))).first;
  return it->second.globals;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace support
