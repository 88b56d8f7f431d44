#pragma once

#include <string>
#include <vector>

#include "cctt/syntax.hpp"

namespace cctt {

/// Renders a term in surface syntax that parses back to an alpha-equivalent
/// term. `vars` names the free de Bruijn variables, outermost first. Bound
/// names are chosen from the binder hints, renamed to avoid capture.
std::string print_term(const TermPtr& t, const std::vector<Name>& vars = {});
std::string print_dim(const DimExpr& r);
std::string print_cofib(const Cofib& c);

}  // namespace cctt
