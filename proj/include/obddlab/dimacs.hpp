#pragma once

#include "obddlab/cnf.hpp"

#include <string>
#include <string_view>

namespace obddlab {

/// Reads DIMACS CNF restricted to 2-literal clauses. Clause order is kept.
/// Throws ParseError (with line number), WidthError or TautologyError.
Cnf parseDimacs(std::string_view text, Duplicates mode = Duplicates::Allowed);

/// "p cnf n m" followed by one "a b 0" line per clause, literals in
/// canonical order.
std::string writeDimacs(const Cnf& f);

} // namespace obddlab
